#pragma once

// The 58 derived bilinear products on an invariant algebra, stored as data:
// each is a combination of the eight words xy, yx, qxy, qyx, xqy, yqx, xyq, yxq
// with coefficients in k and h.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invalg/free_algebra.hpp"
#include "invalg/invariant.hpp"

namespace invalg {

enum class Family { huliu, square, jordan, angle, prelie, lsa };
inline constexpr std::array<Family, 6> kFamilies{Family::huliu, Family::square, Family::jordan,
                                                  Family::angle,  Family::prelie, Family::lsa};

std::string_view family_name(Family f) noexcept;
/// Throws std::invalid_argument for unknown names.
Family family_from_name(std::string_view name);
/// Number of products in the family (14, 6, 6, 4, 14, 14).
int family_size(Family f) noexcept;

/// The eight words every catalog product is built from, in the order matching
/// the scalars c1..c8 of a representation.
enum class ProductWord : std::uint8_t { xy, yx, qxy, qyx, xqy, yqx, xyq, yxq };
inline constexpr std::array<ProductWord, 8> kProductWords{
    ProductWord::xy,  ProductWord::yx,  ProductWord::qxy, ProductWord::qyx,
    ProductWord::xqy, ProductWord::yqx, ProductWord::xyq, ProductWord::yxq};

std::string_view word_name(ProductWord w) noexcept;

template <class Scalar>
using WordCoefficients = std::array<Scalar, 8>;

struct FormulaTerm {
  std::string_view coefficient;  // ParamPoly literal in k and h
  std::string_view word;         // one of the eight word names
};

/// One catalog row: scale * sum(coefficient * word).
struct Formula {
  Family family;
  int index;
  std::string_view scale;
  std::vector<FormulaTerm> terms;
};

/// All 58 formulas, grouped by family in index order.
const std::vector<Formula>& product_catalog();
/// Throws std::out_of_range for an index outside the family's range.
const Formula& formula(Family family, int index);

/// A concrete choice of product: family, index and parameter values. `h` is
/// only meaningful for Hu-Liu products 1 and 8.
struct ProductSpec {
  Family family = Family::huliu;
  int index = 1;
  ParamPoly k;
  std::optional<ParamPoly> h;

  /// Parameters k and h left as indeterminates (h only where it is used).
  static ProductSpec symbolic(Family family, int index, Field f = Field::rationals());
  /// Throws std::invalid_argument for bad indices or an illegal h.
  static ProductSpec make(Family family, int index, ParamPoly k, std::optional<ParamPoly> h = std::nullopt);
  /// Parses "family:index".
  static ProductSpec parse(std::string_view name, ParamPoly k, std::optional<ParamPoly> h = std::nullopt);

  Field field() const noexcept { return k.field(); }
  bool uses_h() const noexcept { return family == Family::huliu && (index == 1 || index == 8); }
  /// "huliu:3" style name.
  std::string name() const;
  /// Name with parameter values, e.g. "huliu:1(k=k, h=h)".
  std::string to_string() const;
};

/// Coefficients of the eight words with the spec's parameters substituted and
/// the formula scale applied. Throws AlgebraError for Jordan products in
/// characteristic 2.
WordCoefficients<ParamPoly> word_coefficients(const ProductSpec& spec);
/// Same, for specs whose parameters are constants; throws otherwise.
WordCoefficients<FieldElem> concrete_word_coefficients(const ProductSpec& spec);

/// Generic evaluation of a word combination over any ring exposing
/// mul/add/sub/scale/zero/q and is_zero(Scalar).
template <class Ring>
typename Ring::Value apply_words(const Ring& ring, const WordCoefficients<typename Ring::Scalar>& c,
                                 const typename Ring::Value& a, const typename Ring::Value& b) {
  using Value = typename Ring::Value;
  const auto used = [&](ProductWord w) { return !ring.is_zero(c[static_cast<std::size_t>(w)]); };
  Value out = ring.zero();
  const auto accumulate = [&](ProductWord w, const Value& v) {
    out = ring.add(out, ring.scale(c[static_cast<std::size_t>(w)], v));
  };
  const bool need_ab = used(ProductWord::xy) || used(ProductWord::qxy) || used(ProductWord::xyq);
  const bool need_ba = used(ProductWord::yx) || used(ProductWord::qyx) || used(ProductWord::yxq);
  if (need_ab) {
    const Value ab = ring.mul(a, b);
    if (used(ProductWord::xy)) accumulate(ProductWord::xy, ab);
    if (used(ProductWord::qxy)) accumulate(ProductWord::qxy, ring.mul(ring.q(), ab));
    if (used(ProductWord::xyq)) accumulate(ProductWord::xyq, ring.mul(ab, ring.q()));
  }
  if (need_ba) {
    const Value ba = ring.mul(b, a);
    if (used(ProductWord::yx)) accumulate(ProductWord::yx, ba);
    if (used(ProductWord::qyx)) accumulate(ProductWord::qyx, ring.mul(ring.q(), ba));
    if (used(ProductWord::yxq)) accumulate(ProductWord::yxq, ring.mul(ba, ring.q()));
  }
  if (used(ProductWord::xqy)) accumulate(ProductWord::xqy, ring.mul(ring.mul(a, ring.q()), b));
  if (used(ProductWord::yqx)) accumulate(ProductWord::yqx, ring.mul(ring.mul(b, ring.q()), a));
  return out;
}

/// The free algebra on generators and q as a ring for apply_words.
template <class Mono>
class FreeRing {
 public:
  using Value = BasicFreeElement<Mono>;
  using Scalar = ParamPoly;

  explicit FreeRing(Field f) : field_(f), q_(Value::q(f)) {}

  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value scale(const Scalar& s, const Value& v) const { return v.scaled(s); }
  Value zero() const { return Value(field_); }
  const Value& q() const { return q_; }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }
  Value generator(Generator g) const { return Value::generator(field_, g); }

 private:
  Field field_;
  Value q_;
};

/// A finite associative algebra with a chosen idempotent, in ambient
/// coordinates, as a ring for apply_words.
class ConcreteRing {
 public:
  using Value = Vec;
  using Scalar = FieldElem;

  ConcreteRing(const FiniteAlgebra& algebra, Vec q) : algebra_(&algebra), q_(std::move(q)) {}

  Value mul(const Value& a, const Value& b) const { return algebra_->multiply(a, b); }
  Value add(const Value& a, const Value& b) const { return invalg::add(a, b); }
  Value sub(const Value& a, const Value& b) const { return invalg::sub(a, b); }
  Value scale(const Scalar& s, const Value& v) const { return invalg::scale(s, v); }
  Value zero() const { return algebra_->zero(); }
  const Value& q() const { return q_; }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }

 private:
  const FiniteAlgebra* algebra_;
  Vec q_;
};

/// The defining combination of the product in generators x and y.
FreeElement product_as_free_element(const ProductSpec& spec);

/// Product of u and v in the invariant algebra by direct structure-constant
/// arithmetic. Throws AlgebraError if u or v lies outside the invariant algebra.
Vec apply_product(const ProductSpec& spec, const InvariantAlgebra& inv, const Vec& u, const Vec& v);

/// The evaluation homomorphism: generators x, y, z, w go to assignment[0..3],
/// q to inv.q(), the parameters to k and h. Throws AlgebraError when an
/// assigned element is outside the invariant algebra or a used generator has
/// no value.
Vec eval_in_algebra(const FreeElement& e, const std::vector<Vec>& assignment, const InvariantAlgebra& inv,
                    const FieldElem& k, const FieldElem& h);
/// Same, for elements whose coefficients do not involve k or h.
Vec eval_in_algebra(const FreeElement& e, const std::vector<Vec>& assignment, const InvariantAlgebra& inv);

/// x*y - y*x for the spec's product, as a free element.
FreeElement commutator_of(const ProductSpec& spec);

/// c * e = [x, y]_{j, k''} for square bracket j; brackets 1 and 2 carry no
/// parameter.
struct BracketMatch {
  int bracket = 0;
  ParamRatFunc scale;
  std::optional<ParamRatFunc> parameter;

  std::string to_string() const;
};

/// All square brackets that a nonzero multiple of `e` equals, solving for the
/// scale and the bracket parameter over the rational function field. `e` must
/// be antisymmetric under x <-> y (std::invalid_argument otherwise).
std::vector<BracketMatch> bracket_match(const FreeElement& e);

enum class ClaimCondition { all_k, k_zero, k_nonzero };

/// A stated relation scale * [x, y]^dot = [x, y]_bracket between a pre-Lie or
/// left-symmetric dot's commutator and a square bracket.
struct AccompanyingClaim {
  Family family;
  int index;
  ClaimCondition condition;
  std::string_view scale_numerator;
  std::string_view scale_denominator;
  int bracket;
};

const std::vector<AccompanyingClaim>& accompanying_claims();

struct ClaimAudit {
  AccompanyingClaim claim;
  ParamRatFunc claimed_scale;
  bool confirmed = false;
  /// The bracket parameter found for the confirming match (brackets 3-6).
  std::optional<ParamRatFunc> parameter;
};

struct AccompanyingRow {
  Family family;
  int index;
  FreeElement commutator;
  std::vector<BracketMatch> generic;  // over Q(k)
  std::vector<BracketMatch> at_k_zero;
  std::vector<ClaimAudit> claims;
};

/// One row per pre-Lie and left-symmetric dot (28 rows) auditing every
/// stated accompanying-bracket relation.
std::vector<AccompanyingRow> audit_accompanying_brackets();

std::string condition_name(ClaimCondition c);

}  // namespace invalg
