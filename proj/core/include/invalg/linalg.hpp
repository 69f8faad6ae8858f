#pragma once

// Exact dense linear algebra over a Field: matrices, reduced echelon forms,
// null spaces and subspaces kept in canonical (reduced row echelon) form.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invalg/scalars.hpp"

namespace invalg {

using Vec = std::vector<FieldElem>;

/// In-place Gauss-Jordan elimination over any exact field type providing
/// is_zero() and the four arithmetic operators. Pivots are searched in the
/// first `cols` columns; row operations act on whole rows, so trailing
/// columns (e.g. a right-hand side) are carried along. `origin`, when given,
/// is permuted along with the rows. Returns the pivot columns in order.
template <class T>
std::vector<std::size_t> reduce_rows(std::vector<std::vector<T>>& rows, std::size_t cols,
                                     std::vector<std::size_t>* origin = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t r = lead;
    while (r < rows.size() && rows[r][c].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[lead]);
    if (origin) std::swap((*origin)[r], (*origin)[lead]);
    const T pivot = rows[lead][c];
    const std::size_t width = rows[lead].size();
    for (std::size_t j = c; j < width; ++j) rows[lead][j] = rows[lead][j] / pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][c].is_zero()) continue;
      const T factor = rows[i][c];
      for (std::size_t j = c; j < width; ++j) {
        if (!rows[lead][j].is_zero()) rows[i][j] = rows[i][j] - factor * rows[lead][j];
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const FieldElem& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const FieldElem& s, const Vec& b);
/// "[a, b, c]" with plain entries.
std::string vec_to_string(const Vec& v);

/// Dense row-major matrix. As a linear map, column j is the image of basis
/// vector j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const FieldElem& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::size_t rank() const;
  /// Basis (in reduced echelon form) of {x : M x = 0}.
  std::vector<Vec> nullspace() const;
  std::optional<Matrix> inverse() const;

  /// Row-major flattening; for an n x n matrix this is the coordinate vector
  /// on the E_ij basis with index i*n + j.
  const Vec& flat() const noexcept { return data_; }
  static Matrix from_flat(Field f, std::size_t n, const Vec& flat);

  std::string to_string() const;

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// A subspace of F^n stored by its reduced row echelon basis, which makes
/// equality of subspaces plain equality of bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field f, std::size_t n);
  static Subspace whole(Field f, std::size_t n);
  static Subspace span(Field f, std::size_t n, std::span<const Vec> vectors);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Non-pivot coordinates, lowest first: the standard basis vectors with
  /// these indices complete the basis to all of F^n.
  std::vector<std::size_t> complement_indices() const;

  /// v minus the combination of basis rows clearing every pivot entry.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Sum of basis rows weighted by coords.
  Vec combine(const Vec& coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
  /// Lexicographic order on (dim, basis entries); used for canonical sets.
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  Field field_{};
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace invalg
