#pragma once

// Concrete finite-dimensional invariant algebras (A, q) = {x : qxq = qx}.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "invalg/linalg.hpp"
#include "invalg/verdict.hpp"

namespace invalg {

/// Bad input: non-associative tables, non-idempotent q, dependent bases.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verified property failed on well-formed input; signals a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// e_i * e_j has coefficient `value` on e_l.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t l = 0;
  FieldElem value;
};

/// Bilinear multiplication on F^n given by structure constants. No
/// associativity is assumed.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(Field f, std::size_t dim, const std::vector<StructureConstant>& entries);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  Vec multiply(const Vec& u, const Vec& v) const;
  Vec basis_product(std::size_t i, std::size_t j) const;
  /// Canonical listing: sorted by (i, j, l), zeros omitted.
  std::vector<StructureConstant> entries() const;
  /// Matrix of v -> a * v.
  Matrix left_multiplication(const Vec& a) const;

  friend bool operator==(const StructureTable& a, const StructureTable& b);

 private:
  struct Entry {
    std::size_t l;
    FieldElem value;
  };
  Field field_{};
  std::size_t dim_ = 0;
  std::vector<std::vector<Entry>> table_;  // index i * dim + j
};

/// Associative unital algebra on F^n.
class FiniteAlgebra {
 public:
  /// Throws AlgebraError naming the first basis triple (i, j, l) with
  /// (e_i e_j) e_l != e_i (e_j e_l), or a basis element the unit fails on.
  FiniteAlgebra(StructureTable table, Vec unit);

  /// End(F^n) on the E_ij basis, index i*n + j, E_ij E_kl = delta_jk E_il.
  static FiniteAlgebra matrix_algebra(Field f, std::size_t n);

  Field field() const noexcept { return table_.field(); }
  std::size_t dim() const noexcept { return table_.dim(); }
  const StructureTable& table() const noexcept { return table_; }
  const Vec& unit() const noexcept { return unit_; }

  Vec multiply(const Vec& u, const Vec& v) const { return table_.multiply(u, v); }
  Vec zero() const { return zero_vec(field(), dim()); }

  /// First non-associative basis triple, if any.
  static std::optional<std::array<std::size_t, 3>> associativity_failure(const StructureTable& t);

 private:
  StructureTable table_;
  Vec unit_;
};

/// True iff q * q = q.
bool check_idempotent(const FiniteAlgebra& a, const Vec& q);

/// The invariant subalgebra of an associative algebra with idempotent q. Its
/// basis is in reduced echelon form in ambient coordinates.
class InvariantAlgebra {
 public:
  const FiniteAlgebra& ambient() const noexcept { return ambient_; }
  Field field() const noexcept { return ambient_.field(); }
  const Vec& q() const noexcept { return q_; }
  const Subspace& subspace() const noexcept { return basis_; }
  const std::vector<Vec>& basis() const noexcept { return basis_.basis(); }
  std::size_t dim() const noexcept { return basis_.dim(); }

  bool contains(const Vec& x) const { return basis_.contains(x); }
  /// Coordinates on basis(); throws AlgebraError for elements outside.
  Vec coordinates(const Vec& x) const;
  Vec element(const Vec& coords) const { return basis_.combine(coords); }
  Vec multiply(const Vec& u, const Vec& v) const { return ambient_.multiply(u, v); }

  /// Structure constants of the invariant algebra on its own basis.
  StructureTable intrinsic_table() const;

  friend InvariantAlgebra invariant_subalgebra(const FiniteAlgebra& a, const Vec& q);

 private:
  InvariantAlgebra(FiniteAlgebra ambient, Vec q, Subspace basis)
      : ambient_(std::move(ambient)), q_(std::move(q)), basis_(std::move(basis)) {}

  FiniteAlgebra ambient_;
  Vec q_;
  Subspace basis_;
};

/// Null space of x -> qxq - qx, checked for closure and for containing 1 and
/// q. Throws AlgebraError when q is not idempotent (naming q*q - q).
InvariantAlgebra invariant_subalgebra(const FiniteAlgebra& a, const Vec& q);

/// W-idempotency: q(W) = 0 and (q - I)(V) contained in W.
Verdict check_w_idempotent(const Matrix& q, const Subspace& w);

/// Projection onto the span of the standard basis vectors completing W
/// (lowest index first), along W.
Matrix w_idempotent(const Subspace& w);

/// {f in End(V) : f(W) within W} in E_ij coordinates, computed directly.
Subspace stabilizer_subspace(const Subspace& w);

struct LinearInvariantAlgebra {
  FiniteAlgebra end;
  Matrix q;
  Subspace w;
  InvariantAlgebra invariant;
};

/// End(V) with its W-idempotent q and the invariant algebra it induces. Throws
/// AlgebraError when W_basis is dependent.
LinearInvariantAlgebra linear_invariant_algebra(Field f, std::size_t dim_v,
                                                const std::vector<Vec>& w_basis);

struct AnnihilatorResult {
  Subspace span;       // ambient coordinates
  bool ideal = false;  // two-sided ideal of the invariant algebra
  bool contains_side_differences = false;  // xq - x and qx - xq lie in it
};

/// span{qx - x}. Throws InternalConsistencyError if it fails to be an ideal or
/// to contain xq - x and qx - xq.
AnnihilatorResult annihilator(const InvariantAlgebra& inv);

struct RegularEmbedding {
  std::vector<Matrix> images;  // a_L for each basis element, on the invariant algebra's coordinates
  Matrix q_left;
  Subspace annihilator;  // in the invariant algebra's coordinates
  InvariantAlgebra target;
  Matrix phi;  // basis coordinates -> target basis coordinates
  Verdict verdict;
};

/// a -> a_L into (End(A,q), q_L), checked against the invariant homomorphism
/// clauses, the annihilator-idempotency of q_L and injectivity.
RegularEmbedding left_regular_embedding(const InvariantAlgebra& inv);

/// phi: columns are images of `from` basis elements in `to` basis
/// coordinates. Clauses: additive, multiplicative, unit, idempotent.
Verdict check_invariant_homomorphism(const Matrix& phi, const InvariantAlgebra& from,
                                     const InvariantAlgebra& to);

}  // namespace invalg
