#pragma once

// The identity catalog: each entry is a residual built from one or two
// catalog products, checked symbolically in the free invariant algebra or
// concretely on a finite invariant algebra.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invalg/products.hpp"

namespace invalg {

enum class IdentityKind {
  assoc,
  jacobi,
  long_jacobi,
  jacobi_like_1st,
  param_swap_sq,
  antisym,
  bracket_commutator,
  jordan_comm,
  jordan_id,
  leibniz,
  jacobi_like_2nd,
  param_swap_ang_a,
  param_swap_ang_b,
  prelie,
  lsa,
  lie_admissible,
};

std::string_view kind_name(IdentityKind k) noexcept;

/// Which of the parameters k and h the identity depends on.
enum class ParamSlots { none, k, kh };

struct IdentityId {
  IdentityKind kind;
  Family family;  // family of the product the identity is about
  int index;
  int arity;  // number of generator variables
  ParamSlots slots;

  /// "assoc:huliu:3", "lie_admissible:lsa:7".
  std::string name() const;
};

/// The 112 catalog entries in their fixed order.
const std::vector<IdentityId>& identity_catalog();
/// Throws std::invalid_argument for names not in the catalog.
const IdentityId& find_identity(const std::string& name);

/// Parameter values for an identity: k and h as polynomials, so symbolic
/// (indeterminate), polynomial and constant bindings share one path.
struct Binding {
  ParamPoly k;
  ParamPoly h;

  static Binding symbolic(Field f = Field::rationals()) { return {ParamPoly::k(f), ParamPoly::h(f)}; }
  static Binding constants(const FieldElem& k, const FieldElem& h) { return {ParamPoly{k}, ParamPoly{h}}; }
};

/// The products an identity is built from, in the order its residual uses them.
std::vector<ProductSpec> identity_products(const IdentityId& id, const Binding& b);

/// Evaluates the residual over any ring understood by apply_words, given the
/// word coefficients of identity_products(id, ...) and values for x, y, z.
template <class Ring>
typename Ring::Value evaluate_residual(const IdentityId& id, const Ring& ring,
                                       const std::vector<WordCoefficients<typename Ring::Scalar>>& products,
                                       const std::array<typename Ring::Value, 3>& v) {
  using Value = typename Ring::Value;
  const auto& [x, y, z] = v;
  const auto p = [&](std::size_t which) {
    return [&ring, &c = products.at(which)](const Value& a, const Value& b) { return apply_words(ring, c, a, b); };
  };
  const auto add = [&](const Value& a, const Value& b) { return ring.add(a, b); };
  const auto sub = [&](const Value& a, const Value& b) { return ring.sub(a, b); };
  // Outer(Inner(a, b), c) summed over cyclic permutations of (x, y, z).
  const auto cyclic = [&](auto inner, auto outer) {
    return add(add(outer(inner(x, y), z), outer(inner(y, z), x)), outer(inner(z, x), y));
  };

  switch (id.kind) {
    case IdentityKind::assoc: {
      const auto m = p(0);
      return sub(m(m(x, y), z), m(x, m(y, z)));
    }
    case IdentityKind::jacobi: {
      const auto b = p(0);
      return cyclic(b, b);
    }
    case IdentityKind::long_jacobi: {
      const auto bh = p(0);
      const auto bk = p(1);
      return add(cyclic(bh, bk), cyclic(bk, bh));
    }
    case IdentityKind::jacobi_like_1st:
      return cyclic(p(0), p(1));
    case IdentityKind::param_swap_sq: {
      const auto bh = p(0);
      const auto bk = p(1);
      return sub(bk(bh(x, y), z), bh(bk(x, y), z));
    }
    case IdentityKind::antisym: {
      const auto b = p(0);
      return add(b(x, y), b(y, x));
    }
    case IdentityKind::bracket_commutator: {
      const auto b = p(0);
      const auto m = p(1);
      return sub(b(x, y), sub(m(x, y), m(y, x)));
    }
    case IdentityKind::jordan_comm: {
      const auto j = p(0);
      return sub(j(x, y), j(y, x));
    }
    case IdentityKind::jordan_id: {
      const auto j = p(0);
      const Value xx = j(x, x);
      return sub(j(j(xx, y), x), j(xx, j(y, x)));
    }
    case IdentityKind::leibniz: {
      const auto a = p(0);
      return add(sub(a(x, a(y, z)), a(a(x, y), z)), a(a(x, z), y));
    }
    case IdentityKind::jacobi_like_2nd: {
      const auto ah = p(0);
      const auto ak = p(1);
      return add(sub(ah(x, ak(y, z)), ak(ah(x, y), z)), ah(ak(x, z), y));
    }
    case IdentityKind::param_swap_ang_a: {
      const auto ah = p(0);
      const auto ak = p(1);
      return sub(ah(x, ak(y, z)), ak(x, ah(y, z)));
    }
    case IdentityKind::param_swap_ang_b: {
      const auto ah = p(0);
      const auto ak = p(1);
      return sub(ah(ak(x, y), z), ak(ah(x, y), z));
    }
    case IdentityKind::prelie: {
      const auto d = p(0);
      return add(sub(sub(d(d(x, y), z), d(x, d(y, z))), d(d(x, z), y)), d(x, d(z, y)));
    }
    case IdentityKind::lsa: {
      const auto d = p(0);
      return add(sub(sub(d(x, d(y, z)), d(d(x, y), z)), d(y, d(x, z))), d(d(y, x), z));
    }
    case IdentityKind::lie_admissible: {
      const auto d = p(0);
      const auto c = [&](const Value& a, const Value& b) { return sub(d(a, b), d(b, a)); };
      return cyclic(c, c);
    }
  }
  throw std::logic_error("unhandled identity kind");
}

/// Fully expanded residual in the free invariant algebra; the identity holds
/// in every invariant algebra iff this is zero.
FreeElement residual_symbolic(const IdentityId& id, const Binding& b = Binding::symbolic());

/// The same residual in the free monoid with only qq = q (the relation
/// q w q = q w switched off). Test harness for the rewriting rule.
RawElement residual_without_collapse(const IdentityId& id, const Binding& b = Binding::symbolic());

/// Jacobi sum of an arbitrary bracket-like product.
FreeElement jacobi_sum(const ProductSpec& spec);
/// x<y z> - <x y>z + <x z>y for an arbitrary angle-like product.
FreeElement leibniz_residual(const ProductSpec& spec);

enum class CheckMode { symbolic, exhaustive, random };
enum class CheckStatus { proved, passed, failed };

std::string_view mode_name(CheckMode m) noexcept;
std::string_view status_name(CheckStatus s) noexcept;

struct IdentityReport {
  std::string identity;
  std::vector<std::string> products;
  CheckMode mode = CheckMode::symbolic;
  CheckStatus status = CheckStatus::proved;
  /// Symbolic: the rendered residual ("0" when proved).
  std::string residual;
  /// Failures: a nonzero coefficient ("zqyx: h^2") or an assignment.
  std::string witness;
  std::uint64_t cases = 0;  // concrete assignments checked
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;

  bool failed() const noexcept { return status == CheckStatus::failed; }
};

IdentityReport prove(const IdentityId& id, const Binding& b = Binding::symbolic());

/// Catalog-ordered symbolic proofs of entries whose kind name or full name
/// equals `filter`; an empty filter selects everything.
std::vector<IdentityReport> prove_all(const std::string& filter = {});
std::vector<IdentityReport> prove_all(const std::function<bool(const IdentityId&)>& select);

/// Exhaustive mode asked for more assignments than the budget allows.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConcreteOptions {
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t budget = 1'000'000;  // exhaustive cap, or the random sample count
  std::uint64_t seed = 1;
};

/// Checks the identity with parameters (k, h) on elements of `inv`.
/// Exhaustive mode enumerates every assignment of invariant-algebra elements
/// to the variables and throws BudgetError when |F|^(arity * dim) exceeds the
/// budget (or F is infinite). Random mode draws `budget` assignments with
/// uniform coordinates over a prime field and integers -3..3 over Q.
IdentityReport check_concrete(const IdentityId& id, const FieldElem& k, const FieldElem& h,
                              const InvariantAlgebra& inv, const ConcreteOptions& options);

}  // namespace invalg
