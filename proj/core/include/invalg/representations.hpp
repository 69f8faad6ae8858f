#pragma once

// Modules and representations with a fixed scalar tuple c = (c1, ..., c8):
// an algebra (A, *) acting on V, with a subspace W and a W-idempotent q, such
// that (x*y).v = c1 x.y.v + c2 y.x.v + c3 q.x.y.v + c4 q.y.x.v
//              + c5 x.q.y.v + c6 y.q.x.v + c7 x.y.q.v + c8 y.x.q.v,
// chains read right to left.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invalg/invariant.hpp"
#include "invalg/products.hpp"

namespace invalg {

/// c1..c8 in the order of the eight product words.
using CVector = WordCoefficients<FieldElem>;

CVector make_cvector(Field f, const std::array<long, 8>& values);
std::string cvector_to_string(const CVector& c);

struct ModuleData {
  StructureTable star;         // product of the acting algebra, any bilinear map
  std::size_t v_dim = 0;
  Subspace w;                  // in F^v_dim
  Matrix q;                    // v_dim x v_dim
  std::vector<Matrix> action;  // action[i]: v -> e_i . v
  CVector c;

  Field field() const noexcept { return star.field(); }
  std::size_t algebra_dim() const noexcept { return star.dim(); }
  /// x . v for an algebra element given in coordinates.
  Matrix action_of(const Vec& x) const;

  friend bool operator==(const ModuleData&, const ModuleData&) = default;
};

struct RepData {
  StructureTable star;
  std::vector<Matrix> phi;  // image of each algebra basis element
  Matrix q;
  Subspace w;
  CVector c;

  Field field() const noexcept { return star.field(); }
};

ModuleData to_module(const RepData& r);
RepData to_representation(const ModuleData& m);

/// Clauses: shapes, W-idempotency, x.W in W, and the c-law on every basis
/// triple. Never throws on well-typed input.
Verdict check_module_axioms(const ModuleData& m);

/// Clauses: shapes, W-idempotency, phi(x) preserving W, the c-law on basis
/// pairs, and agreement with check_module_axioms on the module form.
Verdict check_representation(const RepData& r);

struct SubmoduleCheck {
  bool is_submodule = true;
  std::string witness;
};

/// x.u in U and q.u - u in U on basis elements.
SubmoduleCheck is_submodule(const ModuleData& m, const Subspace& u);

/// Carrier W (coordinates on W's echelon basis), q restricted (zero), the
/// whole carrier as distinguished subspace and c' = (c1, c2, 0, ..., 0).
ModuleData restrict_to_w(const ModuleData& m);

/// V/U with coset representatives e_j for the non-pivot indices of U, lowest
/// first. For U = W the tuple becomes (c1+c3+c5+c7, c2+c4+c6+c8, 0, ..., 0);
/// otherwise c is unchanged. Throws AlgebraError when U is not a submodule.
ModuleData quotient_module(const ModuleData& m, const Subspace& u);

/// Coordinates of v + U in quotient_module(m, u).
Vec quotient_coordinates(const Subspace& u, const Vec& v);

/// The submodule U as a module: q restricted, W n U as distinguished subspace.
/// Throws AlgebraError when U is not a submodule.
ModuleData submodule_module(const ModuleData& m, const Subspace& u);

/// The same module written in the basis given by the columns of p.
ModuleData transport(const ModuleData& m, const Matrix& p);

/// Direct sum over the same algebra and c.
ModuleData direct_sum(const ModuleData& a, const ModuleData& b);

/// V = the invariant algebra in its own coordinates, W = the annihilator,
/// q = left multiplication by q, x.v = xv.
ModuleData regular_module(const InvariantAlgebra& inv, const CVector& c);

enum class Irreducibility { two_irreducible, three_irreducible, neither };
std::string_view irreducibility_name(Irreducibility i) noexcept;

struct Classification {
  Irreducibility kind = Irreducibility::neither;
  std::vector<Subspace> inventory;  // every submodule, sorted
  Verdict cross_checks;
};

/// Thrown when enumeration would exceed its limits.
class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 20;

/// Enumerates all submodules over a finite field from the cyclic closures of
/// all vectors, closed under sums. Throws EnumerationLimit when |F|^dim V
/// exceeds `budget` or the inventory grows past `max_submodules`.
Classification classify_irreducibility(const ModuleData& m, std::uint64_t budget = kEnumerationBudget,
                                       std::size_t max_submodules = 4096);

/// Smallest submodule containing the given vectors.
Subspace submodule_closure(const ModuleData& m, const std::vector<Vec>& vectors);

struct HomAnalysis {
  Verdict homomorphism;  // phi(x.v) = x.phi(v), phi(q1 v) = q2 phi(v)
  std::optional<Subspace> kernel;
  std::optional<Subspace> image;
  std::optional<Matrix> induced;  // V1/Ker -> Im, in quotient and image coordinates
  Verdict first_isomorphism;

  bool is_homomorphism() const { return homomorphism.passed(); }
};

/// phi: V1 -> V2 (v2_dim x v1_dim). When phi is a homomorphism, also checks
/// phi(W1) in W2, that kernel and image are submodules, rank-nullity, and
/// that the induced map from V1/Ker to Im is a well defined bijective
/// homomorphism.
HomAnalysis hom_tools(const Matrix& phi, const ModuleData& m1, const ModuleData& m2);

}  // namespace invalg
