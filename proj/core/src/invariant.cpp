#include "invalg/invariant.hpp"

#include <algorithm>
#include <string>

namespace invalg {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t l) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(l) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// StructureTable

StructureTable::StructureTable(Field f, std::size_t dim, const std::vector<StructureConstant>& entries)
    : field_(f), dim_(dim), table_(dim * dim) {
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.l >= dim) {
      throw AlgebraError("structure constant index " + triple(e.i, e.j, e.l) + " out of range for dim " +
                         std::to_string(dim));
    }
    if (e.value.field() != f) throw AlgebraError("structure constant from a different field");
    if (e.value.is_zero()) continue;
    auto& cell = table_[e.i * dim + e.j];
    auto it = std::find_if(cell.begin(), cell.end(), [&](const Entry& x) { return x.l == e.l; });
    if (it == cell.end()) {
      cell.push_back({e.l, e.value});
    } else {
      it->value += e.value;
      if (it->value.is_zero()) cell.erase(it);
    }
  }
  for (auto& cell : table_) {
    std::sort(cell.begin(), cell.end(), [](const Entry& a, const Entry& b) { return a.l < b.l; });
  }
}

Vec StructureTable::multiply(const Vec& u, const Vec& v) const {
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const auto& cell = table_[i * dim_ + j];
      if (cell.empty()) continue;
      const FieldElem uv = u[i] * v[j];
      for (const auto& e : cell) out[e.l] += uv * e.value;
    }
  }
  return out;
}

Vec StructureTable::basis_product(std::size_t i, std::size_t j) const {
  Vec out = zero_vec(field_, dim_);
  for (const auto& e : table_.at(i * dim_ + j)) out[e.l] = e.value;
  return out;
}

std::vector<StructureConstant> StructureTable::entries() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& e : table_[i * dim_ + j]) out.push_back({i, j, e.l, e.value});
    }
  }
  return out;
}

Matrix StructureTable::left_multiplication(const Vec& a) const {
  std::vector<Vec> columns;
  for (std::size_t j = 0; j < dim_; ++j) columns.push_back(multiply(a, unit_vec(field_, dim_, j)));
  return Matrix::from_columns(field_, dim_, columns);
}

bool operator==(const StructureTable& a, const StructureTable& b) {
  if (a.field_ != b.field_ || a.dim_ != b.dim_) return false;
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end(), [](const auto& x, const auto& y) {
    return x.i == y.i && x.j == y.j && x.l == y.l && x.value == y.value;
  });
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

std::optional<std::array<std::size_t, 3>> FiniteAlgebra::associativity_failure(const StructureTable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = t.basis_product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        const Vec lhs = t.multiply(ij, unit_vec(t.field(), n, l));
        const Vec rhs = t.multiply(unit_vec(t.field(), n, i), t.basis_product(j, l));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, l};
      }
    }
  }
  return std::nullopt;
}

FiniteAlgebra::FiniteAlgebra(StructureTable table, Vec unit)
    : table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = table_.dim();
  if (unit_.size() != n) {
    throw AlgebraError("unit has length " + std::to_string(unit_.size()) + ", expected " + std::to_string(n));
  }
  if (const auto bad = associativity_failure(table_)) {
    const auto [i, j, l] = *bad;
    throw AlgebraError("structure constants are not associative at basis triple " + triple(i, j, l));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = unit_vec(field(), n, i);
    if (table_.multiply(unit_, e) != e || table_.multiply(e, unit_) != e) {
      throw AlgebraError("unit is not a two-sided identity on basis element " + std::to_string(i));
    }
  }
}

FiniteAlgebra FiniteAlgebra::matrix_algebra(Field f, std::size_t n) {
  std::vector<StructureConstant> entries;
  const FieldElem one = FieldElem::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) entries.push_back({i * n + j, j * n + l, i * n + l, one});
    }
  }
  return FiniteAlgebra(StructureTable(f, n * n, entries), Matrix::identity(f, n).flat());
}

bool check_idempotent(const FiniteAlgebra& a, const Vec& q) {
  if (q.size() != a.dim()) throw AlgebraError("idempotent candidate has the wrong length");
  return a.multiply(q, q) == q;
}

// ---------------------------------------------------------------------------
// InvariantAlgebra

Vec InvariantAlgebra::coordinates(const Vec& x) const {
  auto c = basis_.coordinates(x);
  if (!c) throw AlgebraError("element " + vec_to_string(x) + " is not in the invariant algebra");
  return *c;
}

StructureTable InvariantAlgebra::intrinsic_table() const {
  std::vector<StructureConstant> entries;
  const auto& b = basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec c = coordinates(multiply(b[i], b[j]));
      for (std::size_t l = 0; l < c.size(); ++l) {
        if (!c[l].is_zero()) entries.push_back({i, j, l, c[l]});
      }
    }
  }
  return StructureTable(field(), b.size(), entries);
}

InvariantAlgebra invariant_subalgebra(const FiniteAlgebra& a, const Vec& q) {
  if (!check_idempotent(a, q)) {
    throw AlgebraError("q is not idempotent: q*q - q = " + vec_to_string(sub(a.multiply(q, q), q)));
  }
  const std::size_t n = a.dim();
  std::vector<Vec> columns;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = unit_vec(a.field(), n, i);
    const Vec qe = a.multiply(q, e);
    columns.push_back(sub(a.multiply(qe, q), qe));
  }
  const auto null = Matrix::from_columns(a.field(), n, columns).nullspace();
  Subspace basis = Subspace::span(a.field(), n, null);

  for (const auto& x : basis.basis()) {
    for (const auto& y : basis.basis()) {
      if (!basis.contains(a.multiply(x, y))) {
        throw InternalConsistencyError("invariant subalgebra not closed: " + vec_to_string(x) + " * " +
                                       vec_to_string(y));
      }
    }
  }
  if (!basis.contains(a.unit())) throw InternalConsistencyError("invariant subalgebra misses the unit");
  if (!basis.contains(q)) throw InternalConsistencyError("invariant subalgebra misses q");
  return InvariantAlgebra(a, q, std::move(basis));
}

// ---------------------------------------------------------------------------
// Linear invariant algebras

Verdict check_w_idempotent(const Matrix& q, const Subspace& w) {
  Verdict v;
  const std::size_t n = w.ambient_dim();
  if (q.rows() != n || q.cols() != n) {
    v.add("shape", false, "q is " + std::to_string(q.rows()) + "x" + std::to_string(q.cols()) +
                              ", V has dimension " + std::to_string(n));
    return v;
  }
  std::string witness;
  for (std::size_t i = 0; i < w.dim() && witness.empty(); ++i) {
    const Vec image = q.apply(w.basis()[i]);
    if (!is_zero_vec(image)) witness = "q(" + vec_to_string(w.basis()[i]) + ") = " + vec_to_string(image);
  }
  v.add("q(W) = 0", witness.empty(), witness);
  witness.clear();
  const Matrix shifted = q - Matrix::identity(q.field(), n);
  for (std::size_t j = 0; j < n && witness.empty(); ++j) {
    const Vec image = shifted.column(j);
    if (!w.contains(image)) witness = "(q - I)(e" + std::to_string(j) + ") = " + vec_to_string(image) + " not in W";
  }
  v.add("(q - I)(V) in W", witness.empty(), witness);
  return v;
}

Matrix w_idempotent(const Subspace& w) {
  const Field f = w.field();
  const std::size_t n = w.ambient_dim();
  std::vector<Vec> columns = w.basis();
  Matrix diag(f, n, n);
  for (auto j : w.complement_indices()) {
    diag(columns.size(), columns.size()) = FieldElem::one(f);
    columns.push_back(unit_vec(f, n, j));
  }
  const Matrix b = Matrix::from_columns(f, n, columns);
  const auto b_inv = b.inverse();
  if (!b_inv) throw InternalConsistencyError("echelon completion of W is not a basis");
  return b * diag * *b_inv;
}

Subspace stabilizer_subspace(const Subspace& w) {
  const Field f = w.field();
  const std::size_t n = w.ambient_dim();
  // column (i, j): reduce_W(E_ij w) stacked over the basis of W
  std::vector<Vec> columns;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec column;
      for (const auto& b : w.basis()) {
        const Vec image = w.reduce(scale(b[j], unit_vec(f, n, i)));
        column.insert(column.end(), image.begin(), image.end());
      }
      columns.push_back(std::move(column));
    }
  }
  if (w.dim() == 0) return Subspace::whole(f, n * n);
  const auto null = Matrix::from_columns(f, n * w.dim(), columns).nullspace();
  return Subspace::span(f, n * n, null);
}

LinearInvariantAlgebra linear_invariant_algebra(Field f, std::size_t dim_v, const std::vector<Vec>& w_basis) {
  const Subspace w = Subspace::span(f, dim_v, w_basis);
  if (w.dim() != w_basis.size()) throw AlgebraError("W basis is linearly dependent");
  Matrix q = w_idempotent(w);
  if (const auto verdict = check_w_idempotent(q, w); !verdict.passed()) {
    throw InternalConsistencyError("constructed q is not W-idempotent: " + verdict.first_failure()->witness);
  }
  FiniteAlgebra end = FiniteAlgebra::matrix_algebra(f, dim_v);
  InvariantAlgebra inv = invariant_subalgebra(end, q.flat());
  if (inv.subspace() != stabilizer_subspace(w)) {
    throw InternalConsistencyError("invariant algebra of a W-idempotent differs from the stabilizer of W");
  }
  return {std::move(end), std::move(q), w, std::move(inv)};
}

// ---------------------------------------------------------------------------
// Annihilator

AnnihilatorResult annihilator(const InvariantAlgebra& inv) {
  const auto& q = inv.q();
  std::vector<Vec> gens;
  for (const auto& b : inv.basis()) gens.push_back(sub(inv.multiply(q, b), b));
  AnnihilatorResult r{Subspace::span(inv.field(), inv.ambient().dim(), gens), true, true};

  for (const auto& a : inv.basis()) {
    for (const auto& n : r.span.basis()) {
      if (!r.span.contains(inv.multiply(a, n)) || !r.span.contains(inv.multiply(n, a))) {
        throw InternalConsistencyError("annihilator is not an ideal: fails for " + vec_to_string(a) + " and " +
                                       vec_to_string(n));
      }
    }
  }
  for (const auto& x : inv.basis()) {
    const Vec xq = inv.multiply(x, q);
    const Vec qx = inv.multiply(q, x);
    if (!r.span.contains(sub(xq, x)) || !r.span.contains(sub(qx, xq))) {
      throw InternalConsistencyError("annihilator misses xq - x or qx - xq for x = " + vec_to_string(x));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Homomorphisms and the regular embedding

Verdict check_invariant_homomorphism(const Matrix& phi, const InvariantAlgebra& from, const InvariantAlgebra& to) {
  Verdict v;
  if (phi.rows() != to.dim() || phi.cols() != from.dim()) {
    v.add("shape", false, "map is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()));
    return v;
  }
  v.add("additive", true);  // a matrix is additive

  const auto image = [&](const Vec& x) { return to.element(phi.apply(from.coordinates(x))); };
  std::string witness;
  const auto& b = from.basis();
  for (std::size_t i = 0; i < b.size() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < b.size() && witness.empty(); ++j) {
      const Vec lhs = image(from.multiply(b[i], b[j]));
      const Vec rhs = to.multiply(image(b[i]), image(b[j]));
      if (lhs != rhs) {
        witness = "phi(b" + std::to_string(i) + "*b" + std::to_string(j) + ") = " + vec_to_string(lhs) +
                  " but phi(b" + std::to_string(i) + ")*phi(b" + std::to_string(j) + ") = " + vec_to_string(rhs);
      }
    }
  }
  v.add("multiplicative", witness.empty(), witness);

  const Vec unit_image = image(from.ambient().unit());
  v.add("phi(1_A) = 1_B", unit_image == to.ambient().unit(),
        unit_image == to.ambient().unit() ? "" : "phi(1_A) = " + vec_to_string(unit_image));
  const Vec q_image = image(from.q());
  v.add("phi(q_A) = q_B", q_image == to.q(), q_image == to.q() ? "" : "phi(q_A) = " + vec_to_string(q_image));
  return v;
}

RegularEmbedding left_regular_embedding(const InvariantAlgebra& inv) {
  const Field f = inv.field();
  const std::size_t n = inv.dim();
  const StructureTable table = inv.intrinsic_table();

  std::vector<Matrix> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(table.left_multiplication(unit_vec(f, n, i)));
  const Vec q_coords = inv.coordinates(inv.q());
  Matrix q_left = table.left_multiplication(q_coords);

  std::vector<Vec> ann_gens;
  for (std::size_t j = 0; j < n; ++j) ann_gens.push_back(sub(q_left.column(j), unit_vec(f, n, j)));
  Subspace ann = Subspace::span(f, n, ann_gens);

  InvariantAlgebra target = invariant_subalgebra(FiniteAlgebra::matrix_algebra(f, n), q_left.flat());

  Verdict verdict;
  std::string witness;
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    if (!target.contains(images[i].flat())) witness = "b" + std::to_string(i) + "_L does not preserve the annihilator";
  }
  verdict.add("a_L in (End, q_L)", witness.empty(), witness);
  if (!witness.empty()) {
    return {std::move(images), std::move(q_left), std::move(ann), std::move(target), Matrix{}, std::move(verdict)};
  }

  std::vector<Vec> columns;
  for (const auto& m : images) columns.push_back(target.coordinates(m.flat()));
  Matrix phi = Matrix::from_columns(f, target.dim(), columns);

  verdict.append(check_invariant_homomorphism(phi, inv, target));
  for (const auto& c : check_w_idempotent(q_left, ann).clauses) {
    verdict.add("q_L: " + c.name, c.passed, c.witness);
  }
  const bool injective = phi.rank() == n;
  verdict.add("injective", injective, injective ? "" : "kernel of a -> a_L is nonzero");
  return {std::move(images), std::move(q_left), std::move(ann), std::move(target), std::move(phi), std::move(verdict)};
}

}  // namespace invalg
