#include "invalg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace invalg {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, FieldElem::zero(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = FieldElem::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& e) { return e.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const FieldElem& s, const Vec& v) {
  Vec r = v;
  for (auto& e : r) e *= s;
  return r;
}

void axpy(Vec& a, const FieldElem& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

std::string vec_to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_plain_string();
  }
  return out + "]";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, FieldElem::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c].at(r);
  }
  return m;
}

Matrix Matrix::from_flat(Field f, std::size_t n, const Vec& flat) {
  Matrix m(f, n, n);
  m.data_ = flat;
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v.at(c).is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const { return is_zero_vec(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ScalarError("matrix shape mismatch in product");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const auto& e = a(i, l);
      if (e.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(l, j).is_zero()) m(i, j) += e * b(l, j);
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ScalarError("matrix shape mismatch in sum");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ScalarError("matrix shape mismatch in difference");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix Matrix::scaled(const FieldElem& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e *= s;
  return m;
}

std::size_t Matrix::rank() const {
  auto rows = row_vectors();
  return reduce_rows(rows, cols_).size();
}

std::vector<Vec> Matrix::nullspace() const {
  auto rows = row_vectors();
  const auto pivots = reduce_rows(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v = unit_vec(field_, cols_, f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(field_, cols_, basis).basis();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return *this;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rows_; ++r) {
    Vec v = row(r);
    const Vec e = unit_vec(field_, rows_, r);
    v.insert(v.end(), e.begin(), e.end());
    rows.push_back(std::move(v));
  }
  const auto pivots = reduce_rows(rows, 2 * cols_);
  if (pivots.size() < rows_ || pivots.back() >= cols_) return std::nullopt;
  Matrix inv(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = rows[r][cols_ + c];
  }
  return inv;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ", ";
    out += vec_to_string(row(r));
  }
  return out + "]";
}

Subspace Subspace::zero(Field f, std::size_t n) {
  Subspace s;
  s.field_ = f;
  s.n_ = n;
  return s;
}

Subspace Subspace::whole(Field f, std::size_t n) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(f, n, i));
  return span(f, n, basis);
}

Subspace Subspace::span(Field f, std::size_t n, std::span<const Vec> vectors) {
  Subspace s = zero(f, n);
  std::vector<Vec> rows(vectors.begin(), vectors.end());
  for (const auto& v : rows) {
    if (v.size() != n) throw ScalarError("vector of length " + std::to_string(v.size()) +
                                         " in a subspace of F^" + std::to_string(n));
  }
  s.pivots_ = reduce_rows(rows, n);
  rows.resize(s.pivots_.size());
  s.basis_ = std::move(rows);
  return s;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (p < pivots_.size() && pivots_[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElem c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec coords;
  coords.reserve(basis_.size());
  for (auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

Vec Subspace::combine(const Vec& coords) const {
  Vec out = zero_vec(field_, n_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(out, coords.at(i), basis_[i]);
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, n_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // a in F^dim with sum a_i b_i in other  <=>  sum a_i reduce_other(b_i) = 0
  if (basis_.empty()) return zero(field_, n_);
  std::vector<Vec> columns;
  for (const auto& b : basis_) columns.push_back(other.reduce(b));
  const Matrix m = Matrix::from_columns(field_, n_, columns);
  std::vector<Vec> vectors;
  for (const auto& a : m.nullspace()) vectors.push_back(combine(a));
  return span(field_, n_, vectors);
}

Subspace Subspace::image(const Matrix& m) const {
  std::vector<Vec> vectors;
  for (const auto& b : basis_) vectors.push_back(m.apply(b));
  return span(field_, m.rows(), vectors);
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size();
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      const auto c = a.basis_[i][j] <=> b.basis_[i][j];
      if (c != 0) return c < 0;
    }
  }
  return false;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += vec_to_string(basis_[i]);
  }
  return out + "}";
}

}  // namespace invalg
