#include "invalg/products.hpp"

#include <set>
#include <stdexcept>

namespace invalg {

namespace {

using F = Family;

// Formulas transcribed term by term; coefficients are ParamPoly literals in
// the product's own parameters k (and h for Hu-Liu 1 and 8).
const std::vector<Formula>& catalog_rows() {
  static const std::vector<Formula> rows{
      // Hu-Liu products
      {F::huliu, 1, "1", {{"k", "yx"}, {"h", "yqx"}}},
      {F::huliu, 2, "1", {{"k", "yx"}, {"-k", "yqx"}, {"1", "qxy"}}},
      {F::huliu, 3, "1", {{"1", "yx"}, {"k", "yqx"}, {"-1", "yxq"}}},
      {F::huliu, 4, "1", {{"1", "yx"}, {"k", "qxy"}, {"-1", "yxq"}}},
      {F::huliu, 5, "1", {{"k", "yx"}, {"-k", "yqx"}, {"1", "qyx"}}},
      {F::huliu, 6, "1", {{"1", "yx"}, {"k", "qyx"}, {"-1", "yxq"}}},
      {F::huliu, 7, "1", {{"k", "yx"}, {"1", "xqy"}, {"-k", "yxq"}}},
      {F::huliu, 8, "1", {{"k", "xy"}, {"h", "xqy"}}},
      {F::huliu, 9, "1", {{"1", "xy"}, {"-1", "xqy"}, {"k", "qxy"}}},
      {F::huliu, 10, "1", {{"1", "xy"}, {"-1", "xqy"}, {"k", "qyx"}}},
      {F::huliu, 11, "1", {{"1", "xy"}, {"-1", "xyq"}, {"k", "qxy"}}},
      {F::huliu, 12, "1", {{"1", "xy"}, {"k", "yqx"}, {"-1", "xyq"}}},
      {F::huliu, 13, "1", {{"1", "xy"}, {"-1", "xyq"}, {"k", "qyx"}}},
      {F::huliu, 14, "1", {{"1", "xy"}, {"k", "xqy"}, {"-1", "xyq"}}},
      // square brackets
      {F::square, 1, "1", {{"1", "qxy"}, {"-1", "qyx"}}},
      {F::square, 2, "1", {{"1", "xqy"}, {"-1", "yqx"}}},
      {F::square, 3, "1", {{"1", "xy"}, {"-1", "yx"}, {"k", "xqy"}, {"-k", "yqx"}}},
      {F::square, 4, "1",
       {{"1", "xy"}, {"-1", "yx"}, {"-1", "xqy"}, {"1", "yqx"}, {"-k", "qxy"}, {"k", "qyx"}}},
      {F::square, 5, "1",
       {{"1", "xy"}, {"-1", "yx"}, {"-1", "xyq"}, {"1", "yxq"}, {"-k", "qxy"}, {"k", "qyx"}}},
      {F::square, 6, "1",
       {{"1", "xy"}, {"-1", "yx"}, {"-1", "xyq"}, {"1", "yxq"}, {"k", "xqy"}, {"-k", "yqx"}}},
      // Jordan products
      {F::jordan, 1, "1/2", {{"1", "qxy"}, {"1", "qyx"}}},
      {F::jordan, 2, "1/2", {{"1", "xqy"}, {"1", "yqx"}}},
      {F::jordan, 3, "1/2", {{"1", "xy"}, {"k", "xqy"}, {"1", "yx"}, {"k", "yqx"}}},
      {F::jordan, 4, "1/2",
       {{"1", "xy"}, {"-1", "xqy"}, {"-k", "qxy"}, {"1", "yx"}, {"-1", "yqx"}, {"-k", "qyx"}}},
      {F::jordan, 5, "1/2",
       {{"1", "xy"}, {"-1", "xyq"}, {"-k", "qxy"}, {"1", "yx"}, {"-1", "yxq"}, {"-k", "qyx"}}},
      {F::jordan, 6, "1/2",
       {{"1", "xy"}, {"-1", "xyq"}, {"k", "xqy"}, {"1", "yx"}, {"-1", "yxq"}, {"k", "yqx"}}},
      // angle brackets
      {F::angle, 1, "1", {{"1", "xqy"}, {"-1", "qyx"}}},
      {F::angle, 2, "1",
       {{"1", "xy"}, {"-1", "yx"}, {"1", "yqx"}, {"-1", "xyq"}, {"k", "qyx"}, {"-k", "qxy"}}},
      {F::angle, 3, "1",
       {{"1", "xy"}, {"-1", "yx"}, {"-1", "xyq"}, {"1", "yxq"}, {"k", "xqy"}, {"-k", "qyx"}}},
      {F::angle, 4, "1",
       {{"1", "xy"}, {"-1", "yx"}, {"1", "yqx"}, {"-1", "xyq"}, {"k", "xqy"}, {"-k", "qyx"}}},
      // pre-Lie dots
      {F::prelie, 1, "1", {{"k", "yx"}, {"1", "xqy"}, {"-k", "yqx"}}},
      {F::prelie, 2, "1", {{"k", "yx"}, {"1", "xqy"}, {"-k", "yqx"}, {"-1", "qyx"}, {"-1", "qxy"}}},
      {F::prelie, 3, "1", {{"k", "yx"}, {"1", "xqy"}, {"1-k", "yqx"}, {"-1", "qyx"}}},
      {F::prelie, 4, "1", {{"k", "yx"}, {"1", "xqy"}, {"-1", "qyx"}, {"-1", "qxy"}, {"-k", "yxq"}}},
      {F::prelie, 5, "1", {{"k", "yx"}, {"1", "xqy"}, {"1", "yqx"}, {"-1", "qyx"}, {"-k", "yxq"}}},
      {F::prelie, 6, "1", {{"1", "yx"}, {"-1", "xqy"}, {"-1", "yqx"}, {"1", "xyq"}}},
      {F::prelie, 7, "1", {{"1", "yx"}, {"k", "xqy"}, {"-1", "yqx"}, {"1", "xyq"}}},
      {F::prelie, 8, "1",
       {{"1", "yx"}, {"k", "xqy"}, {"-1", "yqx"}, {"1", "xyq"}, {"-(k+1)", "qyx"}, {"-(k+1)", "qxy"}}},
      {F::prelie, 9, "1", {{"1", "xy"}, {"k", "yqx"}, {"-1", "xyq"}, {"-1", "yxq"}}},
      {F::prelie, 10, "1", {{"1", "xy"}, {"1", "yqx"}, {"-1", "xyq"}, {"k", "qyx"}, {"-1", "yxq"}}},
      {F::prelie, 11, "1", {{"1", "xy"}, {"1", "yqx"}, {"-1", "xyq"}, {"k", "qxy"}, {"-1", "yxq"}}},
      {F::prelie, 12, "1", {{"1", "xy"}, {"k", "xqy"}, {"-1", "xyq"}, {"-k", "qyx"}, {"-k", "qxy"}}},
      {F::prelie, 13, "1", {{"1", "xy"}, {"k", "xqy"}, {"k", "yqx"}, {"-1", "xyq"}, {"-k", "qyx"}}},
      {F::prelie, 14, "1", {{"1", "xy"}, {"k", "xqy"}, {"-(k+1)", "qyx"}, {"-(k+1)", "qxy"}}},
      // left-symmetric dots
      {F::lsa, 1, "1", {{"k", "xy"}, {"-k", "xqy"}, {"1", "yqx"}}},
      {F::lsa, 2, "1", {{"k", "xy"}, {"1-k", "xqy"}, {"1", "yqx"}, {"-1", "qxy"}}},
      {F::lsa, 3, "1", {{"1", "xy"}, {"1", "yqx"}, {"-1", "qxy"}}},
      {F::lsa, 4, "1", {{"k", "xy"}, {"-k", "xqy"}, {"1", "yqx"}, {"-1", "qyx"}, {"-1", "qxy"}}},
      {F::lsa, 5, "1", {{"k", "yx"}, {"1-k", "yqx"}, {"-1", "qyx"}, {"-1", "qxy"}}},
      {F::lsa, 6, "1", {{"k", "yx"}, {"1", "yqx"}, {"-1", "qyx"}, {"-1", "qxy"}, {"-k", "yxq"}}},
      {F::lsa, 7, "1", {{"k", "yx"}, {"1", "xqy"}, {"1", "yqx"}, {"-1", "qxy"}, {"-k", "yxq"}}},
      {F::lsa, 8, "1", {{"k", "xy"}, {"1", "yqx"}, {"-k", "xyq"}, {"-1", "qyx"}, {"-1", "qxy"}}},
      {F::lsa, 9, "1", {{"k", "xy"}, {"1", "xqy"}, {"1", "yqx"}, {"-k", "xyq"}, {"-1", "qxy"}}},
      {F::lsa, 10, "1", {{"1", "yx"}, {"1", "xqy"}, {"-1", "xyq"}, {"k", "qxy"}, {"-1", "yxq"}}},
      {F::lsa, 11, "1", {{"1", "yx"}, {"k", "xqy"}, {"-1", "xyq"}, {"-1", "yxq"}}},
      {F::lsa, 12, "1",
       {{"1", "yx"}, {"k", "xqy"}, {"k-1", "yqx"}, {"-1", "xyq"}, {"-(k-1)", "qxy"}, {"-1", "yxq"}}},
      {F::lsa, 13, "1", {{"1", "yx"}, {"1", "xqy"}, {"-1", "xyq"}, {"k", "qyx"}, {"-1", "yxq"}}},
      {F::lsa, 14, "1",
       {{"1", "yx"}, {"1", "xqy"}, {"k", "yqx"}, {"-1", "xyq"}, {"-k", "qyx"}, {"-k", "qxy"}, {"-1", "yxq"}}},
  };
  return rows;
}

ProductWord word_from_name(std::string_view name) {
  for (auto w : kProductWords) {
    if (word_name(w) == name) return w;
  }
  throw std::invalid_argument("unknown product word '" + std::string{name} + "'");
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::huliu: return "huliu";
    case Family::square: return "square";
    case Family::jordan: return "jordan";
    case Family::angle: return "angle";
    case Family::prelie: return "prelie";
    case Family::lsa: return "lsa";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (auto f : kFamilies) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown product family '" + std::string{name} + "'");
}

int family_size(Family f) noexcept {
  switch (f) {
    case Family::huliu: return 14;
    case Family::square: return 6;
    case Family::jordan: return 6;
    case Family::angle: return 4;
    case Family::prelie: return 14;
    case Family::lsa: return 14;
  }
  return 0;
}

std::string_view word_name(ProductWord w) noexcept {
  static constexpr std::array<std::string_view, 8> names{"xy", "yx", "qxy", "qyx", "xqy", "yqx", "xyq", "yxq"};
  return names[static_cast<std::size_t>(w)];
}

const std::vector<Formula>& product_catalog() { return catalog_rows(); }

const Formula& formula(Family family, int index) {
  if (index < 1 || index > family_size(family)) {
    throw std::out_of_range(std::string{family_name(family)} + " index " + std::to_string(index) +
                            " out of range 1.." + std::to_string(family_size(family)));
  }
  for (const auto& row : catalog_rows()) {
    if (row.family == family && row.index == index) return row;
  }
  throw std::out_of_range("missing catalog row");
}

// ---------------------------------------------------------------------------
// ProductSpec

ProductSpec ProductSpec::symbolic(Family family, int index, Field f) {
  ProductSpec spec = make(family, index, ParamPoly::k(f));
  return spec;
}

ProductSpec ProductSpec::make(Family family, int index, ParamPoly k, std::optional<ParamPoly> h) {
  if (index < 1 || index > family_size(family)) {
    throw std::invalid_argument(std::string{family_name(family)} + " index " + std::to_string(index) +
                                " out of range 1.." + std::to_string(family_size(family)));
  }
  ProductSpec spec{family, index, std::move(k), std::nullopt};
  if (spec.uses_h()) {
    spec.h = h ? std::move(*h) : ParamPoly::h(spec.k.field());
  } else if (h) {
    throw std::invalid_argument("parameter h only applies to huliu:1 and huliu:8, not " + spec.name());
  }
  if (spec.h && spec.h->field() != spec.k.field()) throw std::invalid_argument("k and h from different fields");
  return spec;
}

ProductSpec ProductSpec::parse(std::string_view name, ParamPoly k, std::optional<ParamPoly> h) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("product name '" + std::string{name} + "' is not of the form family:index");
  }
  const Family family = family_from_name(name.substr(0, colon));
  int index = 0;
  try {
    index = std::stoi(std::string{name.substr(colon + 1)});
  } catch (const std::exception&) {
    throw std::invalid_argument("bad product index in '" + std::string{name} + "'");
  }
  return make(family, index, std::move(k), std::move(h));
}

std::string ProductSpec::name() const { return std::string{family_name(family)} + ":" + std::to_string(index); }

std::string ProductSpec::to_string() const {
  std::string out = name() + "(k=" + k.to_string();
  if (h) out += ", h=" + h->to_string();
  return out + ")";
}

WordCoefficients<ParamPoly> word_coefficients(const ProductSpec& spec) {
  const Field f = spec.field();
  if (spec.family == Family::jordan && f.characteristic() == 2) {
    throw AlgebraError("Jordan products need characteristic other than 2 (" + spec.name() + " over " +
                       f.to_string() + ")");
  }
  const Formula& row = formula(spec.family, spec.index);
  const ParamPoly scale = ParamPoly::parse(f, row.scale);
  const ParamPoly h_val = spec.h ? *spec.h : ParamPoly(f);
  WordCoefficients<ParamPoly> c;
  c.fill(ParamPoly(f));
  for (const auto& term : row.terms) {
    const ParamPoly coef = ParamPoly::parse(f, term.coefficient).substitute(spec.k, h_val);
    c[static_cast<std::size_t>(word_from_name(term.word))] += coef * scale;
  }
  return c;
}

WordCoefficients<FieldElem> concrete_word_coefficients(const ProductSpec& spec) {
  const auto symbolic = word_coefficients(spec);
  WordCoefficients<FieldElem> c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!symbolic[i].is_constant()) {
      throw std::invalid_argument("product " + spec.to_string() + " has unspecialized parameters");
    }
    c[i] = symbolic[i].constant_term();
  }
  return c;
}

FreeElement product_as_free_element(const ProductSpec& spec) {
  const FreeRing<QMonomial> ring(spec.field());
  return apply_words(ring, word_coefficients(spec), ring.generator(Generator::x), ring.generator(Generator::y));
}

Vec apply_product(const ProductSpec& spec, const InvariantAlgebra& inv, const Vec& u, const Vec& v) {
  if (spec.field() != inv.field()) {
    throw AlgebraError("product parameters over " + spec.field().to_string() + " but algebra over " +
                       inv.field().to_string());
  }
  if (!inv.contains(u)) throw AlgebraError("left operand " + vec_to_string(u) + " is not in the invariant algebra");
  if (!inv.contains(v)) throw AlgebraError("right operand " + vec_to_string(v) + " is not in the invariant algebra");
  const ConcreteRing ring(inv.ambient(), inv.q());
  return apply_words(ring, concrete_word_coefficients(spec), u, v);
}

Vec eval_in_algebra(const FreeElement& e, const std::vector<Vec>& assignment, const InvariantAlgebra& inv,
                    const FieldElem& k, const FieldElem& h) {
  for (const auto& a : assignment) {
    if (!inv.contains(a)) throw AlgebraError("assigned element " + vec_to_string(a) + " is not in the invariant algebra");
  }
  const FiniteAlgebra& amb = inv.ambient();
  Vec out = amb.zero();
  for (const auto& [m, c] : e.terms()) {
    Vec value = amb.unit();
    for (char letter : m.is_identity() ? std::string{} : m.to_string()) {
      if (letter == 'q') {
        value = amb.multiply(value, inv.q());
        continue;
      }
      const auto g = static_cast<std::size_t>(generator_from_letter(letter));
      if (g >= assignment.size()) throw AlgebraError(std::string{"no value assigned to "} + letter);
      value = amb.multiply(value, assignment[g]);
    }
    axpy(out, c.eval(k, h), value);
  }
  return out;
}

Vec eval_in_algebra(const FreeElement& e, const std::vector<Vec>& assignment, const InvariantAlgebra& inv) {
  for (const auto& [m, c] : e.terms()) {
    if (!c.is_constant()) throw AlgebraError("coefficient " + c.to_string() + " of " + m.to_string() + " needs k or h");
  }
  const FieldElem zero = FieldElem::zero(inv.field());
  return eval_in_algebra(e, assignment, inv, zero, zero);
}

FreeElement commutator_of(const ProductSpec& spec) {
  const FreeElement p = product_as_free_element(spec);
  return p - p.map_generators(kSwapXY);
}

// ---------------------------------------------------------------------------
// Bracket matching

std::string BracketMatch::to_string() const {
  std::string out = "square:" + std::to_string(bracket) + " scale=" + scale.to_string();
  if (parameter) out += " k''=" + parameter->to_string();
  return out;
}

std::vector<BracketMatch> bracket_match(const FreeElement& e) {
  const Field f = e.field();
  if (e.map_generators(kSwapXY) != -e) {
    throw std::invalid_argument("bracket_match needs an antisymmetric element, got " + e.to_string());
  }
  std::vector<BracketMatch> matches;
  for (int j = 1; j <= family_size(Family::square); ++j) {
    const FreeElement base = product_as_free_element(ProductSpec::make(Family::square, j, ParamPoly::constant(f, 0)));
    const FreeElement slope =
        product_as_free_element(ProductSpec::make(Family::square, j, ParamPoly::constant(f, 1))) - base;
    const bool has_parameter = !slope.is_zero();
    std::set<QMonomial, QMonomial::Order> support;
    for (const auto* x : {&e, &base, &slope}) {
      for (const auto& [m, c] : x->terms()) support.insert(m);
    }
    // c * e_m - k'' * slope_m = base_m
    std::vector<LinearEquation> system;
    for (const auto& m : support) {
      LinearEquation eq;
      eq.coefficients.emplace_back(e.coefficient(m));
      if (has_parameter) eq.coefficients.emplace_back(-slope.coefficient(m));
      eq.rhs = ParamRatFunc(base.coefficient(m));
      system.push_back(std::move(eq));
    }
    const auto sol = ratfunc_solve_linear(system, has_parameter ? 2 : 1);
    if (sol.status != LinearSolution::Status::unique || sol.particular[0].is_zero()) continue;
    BracketMatch match{j, sol.particular[0], std::nullopt};
    if (has_parameter) match.parameter = sol.particular[1];
    matches.push_back(std::move(match));
  }
  return matches;
}

const std::vector<AccompanyingClaim>& accompanying_claims() {
  using C = ClaimCondition;
  static const std::vector<AccompanyingClaim> claims{
      {F::prelie, 1, C::k_zero, "1", "1", 2},     {F::prelie, 1, C::k_nonzero, "-1", "k", 3},
      {F::prelie, 2, C::k_zero, "1", "1", 2},     {F::prelie, 2, C::k_nonzero, "-1", "k", 3},
      {F::prelie, 3, C::k_zero, "1", "1", 1},     {F::prelie, 3, C::k_nonzero, "-1", "k", 4},
      {F::prelie, 4, C::k_zero, "1", "1", 2},     {F::prelie, 4, C::k_nonzero, "-1", "k", 6},
      {F::prelie, 5, C::k_zero, "-1", "1", 1},    {F::prelie, 5, C::k_nonzero, "-1", "k", 5},
      {F::prelie, 6, C::all_k, "-1", "1", 5},     {F::prelie, 7, C::all_k, "-1", "1", 6},
      {F::prelie, 8, C::all_k, "-1", "1", 6},     {F::prelie, 9, C::all_k, "1", "1", 3},
      {F::prelie, 10, C::all_k, "1", "1", 4},     {F::prelie, 11, C::all_k, "1", "1", 4},
      {F::prelie, 12, C::all_k, "1", "1", 6},     {F::prelie, 13, C::all_k, "1", "1", 5},
      {F::prelie, 14, C::all_k, "1", "1", 3},
      {F::lsa, 1, C::k_zero, "-1", "1", 2},       {F::lsa, 1, C::k_nonzero, "1", "k", 3},
      {F::lsa, 2, C::k_zero, "-1", "1", 1},       {F::lsa, 2, C::k_nonzero, "1", "k", 4},
      {F::lsa, 3, C::all_k, "1", "1", 4},
      {F::lsa, 4, C::k_zero, "-1", "1", 2},       {F::lsa, 4, C::k_nonzero, "1", "k", 3},
      {F::lsa, 5, C::k_zero, "-1", "1", 2},       {F::lsa, 5, C::k_nonzero, "1", "k", 3},
      {F::lsa, 6, C::k_zero, "-1", "1", 2},       {F::lsa, 6, C::k_nonzero, "-1", "k", 6},
      {F::lsa, 7, C::k_zero, "-1", "1", 1},       {F::lsa, 7, C::k_nonzero, "-1", "k", 5},
      {F::lsa, 8, C::k_zero, "-1", "1", 2},       {F::lsa, 8, C::k_nonzero, "1", "k", 6},
      {F::lsa, 9, C::k_zero, "-1", "1", 1},       {F::lsa, 9, C::k_nonzero, "1", "k", 5},
      {F::lsa, 10, C::all_k, "1", "1", 4},        {F::lsa, 11, C::all_k, "-1", "1", 3},
      {F::lsa, 12, C::all_k, "-1", "1", 4},       {F::lsa, 13, C::all_k, "-1", "1", 4},
      {F::lsa, 14, C::all_k, "-1", "1", 3},
  };
  return claims;
}

std::string condition_name(ClaimCondition c) {
  switch (c) {
    case ClaimCondition::all_k: return "all k";
    case ClaimCondition::k_zero: return "k = 0";
    case ClaimCondition::k_nonzero: return "k != 0";
  }
  return "?";
}

std::vector<AccompanyingRow> audit_accompanying_brackets() {
  const Field f = Field::rationals();
  const FieldElem zero = FieldElem::zero(f);
  std::vector<AccompanyingRow> rows;
  for (Family family : {Family::prelie, Family::lsa}) {
    for (int i = 1; i <= family_size(family); ++i) {
      AccompanyingRow row{family, i, commutator_of(ProductSpec::symbolic(family, i, f)), {}, {}, {}};
      row.generic = bracket_match(row.commutator);
      row.at_k_zero = bracket_match(row.commutator.specialize(zero, zero));
      for (const auto& claim : accompanying_claims()) {
        if (claim.family != family || claim.index != i) continue;
        ClaimAudit audit{claim,
                         ParamRatFunc(ParamPoly::parse(f, claim.scale_numerator),
                                      ParamPoly::parse(f, claim.scale_denominator)),
                         false,
                         std::nullopt};
        const auto& matches = claim.condition == ClaimCondition::k_zero ? row.at_k_zero : row.generic;
        for (const auto& m : matches) {
          if (m.bracket == claim.bracket && m.scale == audit.claimed_scale) {
            audit.confirmed = true;
            audit.parameter = m.parameter;
          }
        }
        row.claims.push_back(std::move(audit));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace invalg
