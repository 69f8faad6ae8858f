#include <gtest/gtest.h>

#include <map>
#include <random>

#include "invalg/products.hpp"
#include "support.hpp"

using namespace invalg;
using fixtures::vec;

namespace {

const Field Q = Field::rationals();

FreeElement el(const char* s) { return parse_free_element(Q, s); }

ParamPoly poly(const char* s) { return ParamPoly::parse(Q, s); }

ParamRatFunc ratfunc(const char* num, const char* den = "1") { return ParamRatFunc(poly(num), poly(den)); }

// A sample of formulas written out by hand, checked against the catalog by
// evaluation on 2x2 matrices.
struct Written {
  Family family;
  int index;
  const char* formula;
  mpq_class scale = 1;
};

const std::vector<Written>& written_formulas() {
  static const std::vector<Written> rows{
      {Family::huliu, 1, "kyx+hyqx"},
      {Family::huliu, 7, "kyx+xqy-kyxq"},
      {Family::huliu, 8, "kxy+hxqy"},
      {Family::huliu, 9, "xy-xqy+kqxy"},
      {Family::huliu, 10, "xy-xqy+kqyx"},
      {Family::huliu, 14, "xy+kxqy-xyq"},
      {Family::square, 2, "xqy-yqx"},
      {Family::square, 3, "xy-yx+kxqy-kyqx"},
      {Family::square, 4, "xy-yx-xqy+yqx-kqxy+kqyx"},
      {Family::square, 6, "xy-yx-xyq+yxq+kxqy-kyqx"},
      {Family::jordan, 2, "xqy+yqx", mpq_class(1, 2)},
      {Family::jordan, 3, "xy+kxqy+yx+kyqx", mpq_class(1, 2)},
      {Family::jordan, 4, "xy-xqy-kqxy+yx-yqx-kqyx", mpq_class(1, 2)},
      {Family::jordan, 6, "xy-xyq+kxqy+yx-yxq+kyqx", mpq_class(1, 2)},
      {Family::angle, 1, "xqy-qyx"},
      {Family::angle, 3, "xy-yx-xyq+yxq+kxqy-kqyx"},
      {Family::angle, 4, "xy-yx+yqx-xyq+kxqy-kqyx"},
      {Family::prelie, 1, "kyx+xqy-kyqx"},
      {Family::prelie, 3, "kyx+xqy+(1-k)yqx-qyx"},
      {Family::prelie, 8, "yx+kxqy-yqx+xyq-(k+1)qyx-(k+1)qxy"},
      {Family::prelie, 14, "xy+kxqy-(k+1)qyx-(k+1)qxy"},
      {Family::lsa, 2, "kxy+(1-k)xqy+yqx-qxy"},
      {Family::lsa, 5, "kyx+(1-k)yqx-qyx-qxy"},
      {Family::lsa, 10, "yx+xqy-xyq+kqxy-yxq"},
  };
  return rows;
}

// Swaps x and y in a coefficient vector: xy <-> yx, qxy <-> qyx, ...
WordCoefficients<ParamPoly> swapped(const WordCoefficients<ParamPoly>& c) {
  return {c[1], c[0], c[3], c[2], c[5], c[4], c[7], c[6]};
}

}  // namespace

TEST(Catalog, HasFiftyEightFormulas) {
  EXPECT_EQ(product_catalog().size(), 58u);
  std::map<Family, int> counts;
  for (const auto& f : product_catalog()) ++counts[f.family];
  for (auto fam : kFamilies) EXPECT_EQ(counts[fam], family_size(fam)) << family_name(fam);
  EXPECT_EQ(family_size(Family::huliu) + family_size(Family::square) + family_size(Family::jordan) +
                family_size(Family::angle),
            30);
  EXPECT_THROW(formula(Family::angle, 5), std::exception);
}

TEST(Catalog, SymbolicExamples) {
  EXPECT_EQ(product_as_free_element(ProductSpec::symbolic(Family::huliu, 1)), el("k*yx + h*yqx"));
  EXPECT_EQ(product_as_free_element(ProductSpec::symbolic(Family::square, 1)), el("qxy - qyx"));
  EXPECT_EQ(product_as_free_element(ProductSpec::symbolic(Family::angle, 2)),
            el("xy - yx + yqx - xyq + k*qyx - k*qxy"));
  EXPECT_EQ(product_as_free_element(ProductSpec::symbolic(Family::jordan, 1)), el("1/2*qxy + 1/2*qyx"));
}

TEST(Catalog, WordCoefficientsOfHuLiuNine) {
  const auto c = word_coefficients(ProductSpec::symbolic(Family::huliu, 9));
  const WordCoefficients<ParamPoly> expected{poly("1"), poly("0"), poly("k"), poly("0"),
                                             poly("-1"), poly("0"), poly("0"), poly("0")};
  EXPECT_EQ(c, expected);
}

TEST(ProductSpec, ParametersAndNames) {
  const auto s = ProductSpec::parse("huliu:8", ParamPoly::constant(Q, 1), ParamPoly::constant(Q, 2));
  EXPECT_EQ(s.name(), "huliu:8");
  EXPECT_TRUE(s.uses_h());
  EXPECT_THROW(ProductSpec::make(Family::square, 3, poly("k"), poly("h")), std::exception);
  EXPECT_THROW(ProductSpec::parse("square:7", poly("k")), std::exception);
  EXPECT_THROW(ProductSpec::parse("nonsense:1", poly("k")), std::exception);
}

TEST(Catalog, JordanNeedsOddCharacteristic) {
  const Field f2 = Field::prime(2);
  EXPECT_THROW(word_coefficients(ProductSpec::make(Family::jordan, 2, ParamPoly(f2))), AlgebraError);
  EXPECT_NO_THROW(word_coefficients(ProductSpec::make(Family::jordan, 2, ParamPoly(Field::prime(3)))));
}

// apply_product on 2x2 matrices (q = E11) against the written formulas,
// evaluated with plain rational matrix products.
TEST(ApplyProduct, MatchesWrittenFormulas) {
  const auto inv = fixtures::m2_inv(Q);
  std::mt19937_64 rng(17);
  const auto q = fixtures::q2_from(inv.q());
  for (const auto& w : written_formulas()) {
    for (int trial = 0; trial < 20; ++trial) {
      const mpq_class k = fixtures::small_rational(rng), h = fixtures::small_rational(rng);
      Vec cx, cy;
      for (std::size_t i = 0; i < inv.dim(); ++i) {
        cx.push_back(FieldElem::from_rational(Q, fixtures::small_rational(rng)));
        cy.push_back(FieldElem::from_rational(Q, fixtures::small_rational(rng)));
      }
      const Vec x = inv.element(cx), y = inv.element(cy);
      const ParamPoly kp{FieldElem::from_rational(Q, k)};
      const ParamPoly hp{FieldElem::from_rational(Q, h)};
      const auto spec = ProductSpec::make(w.family, w.index, kp,
                                          (w.family == Family::huliu && (w.index == 1 || w.index == 8))
                                              ? std::optional<ParamPoly>{hp}
                                              : std::nullopt);
      auto expected = fixtures::FormulaOracle(w.formula, k, h)(fixtures::q2_from(x), fixtures::q2_from(y), q);
      for (auto& row : expected)
        for (auto& e : row) e *= w.scale;
      ASSERT_EQ(apply_product(spec, inv, x, y), fixtures::q2_flat(expected))
          << spec.name() << " " << w.formula << " k=" << k;
    }
  }
}

TEST(ApplyProduct, LowerTriangularExamples) {
  const auto inv = fixtures::lower_triangular_inv(Q);
  const auto E11 = vec(Q, {1, 0, 0}), E21 = vec(Q, {0, 1, 0}), E22 = vec(Q, {0, 0, 1});
  const auto at = [](Family f, int i) { return ProductSpec::make(f, i, ParamPoly::constant(Q, 5)); };
  EXPECT_TRUE(is_zero_vec(apply_product(at(Family::huliu, 3), inv, E21, E22)));
  EXPECT_EQ(apply_product(at(Family::angle, 1), inv, E21, E11), E21);
  EXPECT_EQ(apply_product(at(Family::jordan, 2), inv, E21, E11), scale(FieldElem::parse(Q, "1/2"), E21));
}

TEST(ApplyProduct, RejectsNonMembers) {
  const auto inv = fixtures::m2_inv(Q);
  const auto E12 = vec(Q, {0, 1, 0, 0});
  EXPECT_THROW(apply_product(ProductSpec::make(Family::square, 1, poly("0")), inv, E12, inv.q()), AlgebraError);
  EXPECT_THROW(apply_product(ProductSpec::make(Family::square, 1, ParamPoly(Field::prime(3))), inv, inv.q(), inv.q()),
               AlgebraError);
}

// Over finite fields, exhaustively on basis pairs: apply_product equals the
// evaluation of the product's free element.
TEST(ApplyProduct, AgreesWithFreeEvaluation) {
  for (Field f : {Field::prime(3), Field::prime(5)}) {
    const auto inv = fixtures::m2_inv(f);
    for (const auto& row : product_catalog()) {
      const auto sym = ProductSpec::symbolic(row.family, row.index);
      const ParamPoly kp{FieldElem::from_int(f, 2)}, hp{FieldElem::from_int(f, 1)};
      const auto spec =
          ProductSpec::make(row.family, row.index, kp, sym.uses_h() ? std::optional<ParamPoly>{hp} : std::nullopt);
      FreeElement e(f);
      const auto generic = product_as_free_element(sym);
      for (const auto& [m, c] : generic.terms()) {
        e.add_term(m, ParamPoly{FieldElem::from_rational(f, c.eval(FieldElem::from_int(Q, 2), FieldElem::from_int(Q, 1)).rational())});
      }
      for (const auto& x : inv.basis()) {
        for (const auto& y : inv.basis()) {
          ASSERT_EQ(apply_product(spec, inv, x, y), eval_in_algebra(e, {x, y}, inv)) << spec.name();
        }
      }
    }
  }
}

TEST(Commutator, Examples) {
  const auto opp = ProductSpec::make(Family::huliu, 1, ParamPoly::constant(Q, 1), ParamPoly::constant(Q, 0));
  EXPECT_EQ(commutator_of(opp), el("yx - xy"));
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(commutator_of(ProductSpec::symbolic(Family::jordan, i)).is_zero());
  EXPECT_EQ(commutator_of(ProductSpec::symbolic(Family::prelie, 6)), el("yx - xy + xyq - yxq"));
}

TEST(Commutator, MatchesSwappedCoefficients) {
  for (const auto& row : product_catalog()) {
    const auto spec = ProductSpec::symbolic(row.family, row.index);
    const auto c = word_coefficients(spec);
    const auto s = swapped(c);
    FreeElement expected(Q);
    for (std::size_t i = 0; i < 8; ++i) {
      expected.add_term(QMonomial::from_raw(word_name(kProductWords[i])), c[i] - s[i]);
    }
    EXPECT_EQ(commutator_of(spec), expected) << spec.name();
  }
}

TEST(Symmetry, JordanCommutativeSquareAntisymmetric) {
  for (int i = 1; i <= 6; ++i) {
    const auto j = product_as_free_element(ProductSpec::symbolic(Family::jordan, i));
    EXPECT_EQ(j.map_generators(kSwapXY), j);
    const auto b = product_as_free_element(ProductSpec::symbolic(Family::square, i));
    EXPECT_EQ(b.map_generators(kSwapXY), -b);
  }
}

TEST(BracketMatch, Examples) {
  auto m = bracket_match(el("qxy - qyx"));
  ASSERT_FALSE(m.empty());
  EXPECT_EQ(m[0].bracket, 1);
  EXPECT_EQ(m[0].scale, ratfunc("1"));

  m = bracket_match(commutator_of(ProductSpec::symbolic(Family::prelie, 9)));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].bracket, 3);
  EXPECT_EQ(m[0].scale, ratfunc("1"));
  ASSERT_TRUE(m[0].parameter.has_value());
  EXPECT_EQ(*m[0].parameter, ratfunc("-k"));

  m = bracket_match(commutator_of(ProductSpec::symbolic(Family::prelie, 1)));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].bracket, 3);
  EXPECT_EQ(m[0].scale, ratfunc("-1", "k"));
  EXPECT_EQ(*m[0].parameter, ratfunc("-k-1", "k"));

  EXPECT_THROW(bracket_match(el("xy")), std::invalid_argument);
}

TEST(Audit, TableIsComplete) {
  const auto rows = audit_accompanying_brackets();
  ASSERT_EQ(rows.size(), 28u);
  std::size_t claims = 0;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.family == Family::prelie || r.family == Family::lsa);
    EXPECT_FALSE(r.generic.empty()) << family_name(r.family) << r.index;
    EXPECT_FALSE(r.claims.empty());
    claims += r.claims.size();
  }
  EXPECT_EQ(claims, accompanying_claims().size());
  EXPECT_EQ(claims, 41u);
}

// Three claims disagree with the expansion; every other claim is confirmed.
TEST(Audit, DiscrepanciesAreExactlyTheKnownThree) {
  std::vector<std::string> found;
  std::size_t confirmed = 0;
  for (const auto& r : audit_accompanying_brackets()) {
    for (const auto& c : r.claims) {
      if (c.confirmed) {
        ++confirmed;
      } else {
        found.push_back(std::string{family_name(r.family)} + ":" + std::to_string(r.index) + " " +
                        condition_name(c.claim.condition));
      }
    }
  }
  EXPECT_EQ(confirmed, 38u);
  ASSERT_EQ(found.size(), 3u);
  EXPECT_EQ(found[0].substr(0, 8), "prelie:5");
  EXPECT_EQ(found[1].substr(0, 5), "lsa:5");
  EXPECT_EQ(found[2].substr(0, 6), "lsa:10");
}

// Independent check of the three discrepancies by direct expansion.
TEST(Audit, DiscrepanciesByHand) {
  const auto zero = FieldElem::zero(Q);
  // prelie 5 at k = 0: the commutator is +[x,y]_1, not -[x,y]_1
  const auto p5 = specialize(commutator_of(ProductSpec::symbolic(Family::prelie, 5)), zero, zero);
  EXPECT_EQ(p5, el("qxy - qyx"));
  // lsa 10: the commutator is -[x,y]_4 with the same k
  const auto l10 = commutator_of(ProductSpec::symbolic(Family::lsa, 10));
  EXPECT_EQ(l10, -product_as_free_element(ProductSpec::symbolic(Family::square, 4)));
  // lsa 5, k != 0: (1/k) times the commutator has xy coefficient -1, so it
  // cannot be a square bracket 3 (xy coefficient +1)
  const auto l5 = commutator_of(ProductSpec::symbolic(Family::lsa, 5));
  EXPECT_EQ(l5.coefficient(QMonomial::from_raw("xy")), poly("-k"));
  EXPECT_EQ(product_as_free_element(ProductSpec::symbolic(Family::square, 3)).coefficient(QMonomial::from_raw("xy")),
            poly("1"));
}

// For each confirmed claim, scale * commutator equals the bracket with the
// recovered parameter, checked at several numeric values of k.
TEST(Audit, ConfirmedClaimsHoldNumerically) {
  for (const auto& r : audit_accompanying_brackets()) {
    for (const auto& c : r.claims) {
      if (!c.confirmed) continue;
      for (long kv : {-3L, -1L, 2L, 5L}) {
        if (c.claim.condition == ClaimCondition::k_zero) kv = 0;
        const auto k = FieldElem::from_int(Q, kv);
        const auto eval = [&](const ParamRatFunc& f) {
          return f.numerator().eval(k, k) / f.denominator().eval(k, k);
        };
        const auto comm = specialize(commutator_of(ProductSpec::symbolic(r.family, r.index)), k, k);
        const ParamPoly bracket_k = c.parameter ? ParamPoly{eval(*c.parameter)} : ParamPoly::constant(Q, 0);
        const auto bracket = product_as_free_element(ProductSpec::make(Family::square, c.claim.bracket, bracket_k));
        EXPECT_EQ(comm.scaled(ParamPoly{eval(c.claimed_scale)}), bracket)
            << family_name(r.family) << ":" << r.index << " k=" << kv;
        if (c.claim.condition == ClaimCondition::k_zero) break;
      }
    }
  }
}
