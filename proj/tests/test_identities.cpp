#include <gtest/gtest.h>

#include <map>

#include "invalg/identities.hpp"
#include "support.hpp"

using namespace invalg;

namespace {

const Field Q = Field::rationals();

FreeElement el(const char* s) { return parse_free_element(Q, s); }

RawElement raw(const char* word, const char* coef) {
  RawElement e(Q);
  RawWord w;
  for (const char* c = word; *c; ++c) {
    w = w * (*c == 'q' ? RawWord::q() : RawWord::generator(generator_from_letter(*c)));
  }
  e.add_term(w, ParamPoly::parse(Q, coef));
  return e;
}

std::size_t count_kind(IdentityKind kind) {
  std::size_t n = 0;
  for (const auto& id : identity_catalog()) n += id.kind == kind;
  return n;
}

}  // namespace

TEST(Catalog, Composition) {
  EXPECT_EQ(identity_catalog().size(), 112u);
  EXPECT_EQ(count_kind(IdentityKind::assoc), 14u);
  EXPECT_EQ(count_kind(IdentityKind::jacobi), 2u);
  EXPECT_EQ(count_kind(IdentityKind::long_jacobi), 1u);
  EXPECT_EQ(count_kind(IdentityKind::jacobi_like_1st), 3u);
  EXPECT_EQ(count_kind(IdentityKind::param_swap_sq), 3u);
  EXPECT_EQ(count_kind(IdentityKind::antisym), 6u);
  EXPECT_EQ(count_kind(IdentityKind::bracket_commutator), 6u);
  EXPECT_EQ(count_kind(IdentityKind::jordan_comm), 6u);
  EXPECT_EQ(count_kind(IdentityKind::jordan_id), 6u);
  EXPECT_EQ(count_kind(IdentityKind::leibniz), 1u);
  EXPECT_EQ(count_kind(IdentityKind::jacobi_like_2nd), 3u);
  EXPECT_EQ(count_kind(IdentityKind::param_swap_ang_a), 3u);
  EXPECT_EQ(count_kind(IdentityKind::param_swap_ang_b), 2u);
  EXPECT_EQ(count_kind(IdentityKind::prelie), 14u);
  EXPECT_EQ(count_kind(IdentityKind::lsa), 14u);
  EXPECT_EQ(count_kind(IdentityKind::lie_admissible), 28u);
  EXPECT_EQ(find_identity("assoc:huliu:3").index, 3);
  EXPECT_THROW(find_identity("assoc:huliu:15"), std::exception);
}

TEST(ProveAll, Filters) {
  const auto assoc = prove_all("assoc");
  ASSERT_EQ(assoc.size(), 14u);
  for (const auto& r : assoc) EXPECT_EQ(r.status, CheckStatus::proved) << r.identity;

  const auto antisym = prove_all("antisym");
  ASSERT_EQ(antisym.size(), 6u);
  for (const auto& r : antisym) EXPECT_EQ(r.status, CheckStatus::proved) << r.identity;

  const auto prelie = prove_all("prelie");
  ASSERT_EQ(prelie.size(), 14u);
  for (const auto& r : prelie) EXPECT_EQ(r.status, CheckStatus::proved) << r.identity << " " << r.residual;

  EXPECT_EQ(prove_all("jacobi:square:1").size(), 1u);
  EXPECT_EQ(prove_all("").size(), 112u);
}

TEST(ProveAll, EveryIdentityHasZeroResidual) {
  for (const auto& r : prove_all()) {
    EXPECT_EQ(r.status, CheckStatus::proved) << r.identity << ": " << r.residual;
    EXPECT_EQ(r.residual, "0");
    EXPECT_EQ(r.mode, CheckMode::symbolic);
  }
}

TEST(Prove, Examples) {
  EXPECT_TRUE(residual_symbolic(find_identity("assoc:huliu:1")).is_zero());
  EXPECT_TRUE(residual_symbolic(find_identity("jacobi:square:1")).is_zero());
}

// Without qwq -> qw the associativity residuals survive; this pins down that
// the collapse rule carries the proofs.
TEST(Prove, CollapseRuleIsLoadBearing) {
  const auto& id = find_identity("assoc:huliu:3");
  const RawElement r = residual_without_collapse(id);
  EXPECT_EQ(r, raw("zyqx", "k+1") - raw("zyqxq", "k+1")) << r.to_string();
  EXPECT_TRUE(residual_symbolic(id).is_zero());

  std::size_t surviving = 0;
  for (const auto& a : identity_catalog()) {
    if (a.kind == IdentityKind::assoc) surviving += !residual_without_collapse(a).is_zero();
  }
  EXPECT_EQ(surviving, 12u);
  // the products whose terms never put a q between two generators from both
  // sides need no collapse at all
  EXPECT_TRUE(residual_without_collapse(find_identity("assoc:huliu:1")).is_zero());
  EXPECT_TRUE(residual_without_collapse(find_identity("assoc:huliu:8")).is_zero());
}

TEST(Prove, SpecializationCoherence) {
  const std::vector<std::pair<long, long>> values{{0, 0}, {1, 0}, {2, -3}, {-1, 5}};
  for (const auto& id : identity_catalog()) {
    if (id.slots == ParamSlots::none) continue;
    const auto symbolic = residual_symbolic(id);
    for (const auto& [kv, hv] : values) {
      const auto k = FieldElem::from_int(Q, kv), h = FieldElem::from_int(Q, hv);
      EXPECT_EQ(symbolic.specialize(k, h), residual_symbolic(id, Binding::constants(k, h))) << id.name();
    }
  }
}

// Specialization also commutes with the product itself, checked on a raw
// (nonzero) expression: the unnormalized residual of a Hu-Liu product.
TEST(Prove, SpecializationCoherenceOnNonzeroResiduals) {
  const auto& id = find_identity("assoc:huliu:3");
  const auto k = FieldElem::from_int(Q, 4);
  const auto a = residual_without_collapse(id).specialize(k, k);
  const auto b = residual_without_collapse(id, Binding::constants(k, k));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.is_zero());
}

TEST(Reductions, LongJacobiAtEqualParameters) {
  const auto& id = find_identity("long_jacobi:square:3");
  const auto k = ParamPoly::k(Q);
  const auto lhs = residual_symbolic(id, Binding{k, k});
  const auto jac = jacobi_sum(ProductSpec::symbolic(Family::square, 3));
  EXPECT_EQ(lhs, jac.scaled(ParamPoly::constant(Q, 2)));
  EXPECT_TRUE(lhs.is_zero());
}

// With h = k the second Jacobi-like identity is the Leibniz residual.
TEST(Reductions, JacobiLikeSecondAtEqualParameters) {
  for (int i = 2; i <= 4; ++i) {
    const auto& id = find_identity("jacobi_like_2nd:angle:" + std::to_string(i));
    const auto k = ParamPoly::k(Q);
    EXPECT_EQ(residual_symbolic(id, Binding{k, k}), leibniz_residual(ProductSpec::symbolic(Family::angle, i)));
  }
  EXPECT_TRUE(leibniz_residual(ProductSpec::symbolic(Family::angle, 1)).is_zero());
}

// The Leibniz residual is not identically zero for every product, so the
// reductions above compare nontrivial expressions.
TEST(Reductions, LeibnizResidualOfAssociativeProductIsNonzero) {
  EXPECT_FALSE(leibniz_residual(ProductSpec::make(Family::huliu, 9, ParamPoly::constant(Q, 1))).is_zero());
  EXPECT_FALSE(jacobi_sum(ProductSpec::make(Family::huliu, 9, ParamPoly::constant(Q, 1))).is_zero());
}

TEST(Concrete, AssocThreeOverGF3Exhaustive) {
  const Field f = Field::prime(3);
  const auto inv = fixtures::lower_triangular_inv(f);
  for (long kv = 0; kv < 3; ++kv) {
    const auto k = FieldElem::from_int(f, kv);
    const auto r = check_concrete(find_identity("assoc:huliu:3"), k, FieldElem::zero(f), inv, {});
    EXPECT_EQ(r.status, CheckStatus::passed);
    EXPECT_EQ(r.cases, 19683u);
    EXPECT_EQ(r.mode, CheckMode::exhaustive);
  }
}

// Bracket 1 is qxy - qyx and q M = M11 E11 on lower-triangular matrices, so
// the bracket vanishes identically there.
TEST(Concrete, BracketOneVanishesOnLowerTriangular) {
  const Field f = Field::prime(3);
  const auto inv = fixtures::lower_triangular_inv(f);
  const auto spec = ProductSpec::make(Family::square, 1, ParamPoly(f));
  for (const auto& x : inv.basis())
    for (const auto& y : inv.basis()) EXPECT_TRUE(is_zero_vec(apply_product(spec, inv, x, y)));
  const auto r = check_concrete(find_identity("jacobi:square:1"), FieldElem::zero(f), FieldElem::zero(f), inv, {});
  EXPECT_EQ(r.status, CheckStatus::passed);
}

TEST(Concrete, JordanIdentityRejectsCharacteristicTwo) {
  const Field f = Field::prime(2);
  const auto inv = fixtures::lower_triangular_inv(f);
  EXPECT_THROW(check_concrete(find_identity("jordan_id:jordan:2"), FieldElem::zero(f), FieldElem::zero(f), inv, {}),
               AlgebraError);
}

TEST(Concrete, BudgetIsEnforced) {
  const Field f = Field::prime(3);
  const auto inv = fixtures::lower_triangular_inv(f);
  ConcreteOptions small;
  small.budget = 1000;
  EXPECT_THROW(check_concrete(find_identity("assoc:huliu:3"), FieldElem::zero(f), FieldElem::zero(f), inv, small),
               BudgetError);
  const auto qinv = fixtures::lower_triangular_inv(Q);
  EXPECT_THROW(check_concrete(find_identity("assoc:huliu:3"), FieldElem::zero(Q), FieldElem::zero(Q), qinv, {}),
               BudgetError);
}

TEST(Concrete, RandomModeIsDeterministic) {
  const auto inv = fixtures::m2_inv(Q);
  ConcreteOptions opts;
  opts.mode = CheckMode::random;
  opts.budget = 200;
  opts.seed = 42;
  const auto& id = find_identity("lsa:lsa:7");
  const auto k = FieldElem::from_int(Q, 3);
  const auto a = check_concrete(id, k, k, inv, opts);
  const auto b = check_concrete(id, k, k, inv, opts);
  EXPECT_EQ(a.status, CheckStatus::passed);
  EXPECT_EQ(a.cases, 200u);
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>{42});
  EXPECT_EQ(a.cases, b.cases);
}

// A false identity must fail concretely with a witness: the pre-Lie identity
// for a Lie bracket.
TEST(Concrete, FalseIdentityFailsWithWitness) {
  const Field f = Field::prime(3);
  const auto inv = fixtures::m2_inv(f);
  const IdentityId fake{IdentityKind::prelie, Family::square, 3, 3, ParamSlots::k};
  ASSERT_FALSE(residual_symbolic(fake).is_zero());
  const auto r = check_concrete(fake, FieldElem::one(f), FieldElem::zero(f), inv, {});
  EXPECT_EQ(r.status, CheckStatus::failed);
  EXPECT_NE(r.witness.find("x = "), std::string::npos);
}

// Every symbolically proved identity passes on every test algebra.
TEST(Coherence, SymbolicProofsHoldConcretely) {
  struct Case {
    InvariantAlgebra inv;
    CheckMode mode;
  };
  const Field f3 = Field::prime(3), f5 = Field::prime(5);
  std::vector<Case> algebras;
  algebras.push_back({fixtures::lower_triangular_inv(f3), CheckMode::exhaustive});
  algebras.push_back({fixtures::m2_inv(f5), CheckMode::random});
  algebras.push_back({fixtures::m2_inv(Q), CheckMode::random});
  for (const auto& id : identity_catalog()) {
    ASSERT_EQ(prove(id).status, CheckStatus::proved) << id.name();
    for (const auto& c : algebras) {
      const Field f = c.inv.field();
      ConcreteOptions opts;
      opts.mode = c.mode;
      opts.budget = c.mode == CheckMode::exhaustive ? 1'000'000 : 50;
      const auto k = FieldElem::from_int(f, 2), h = FieldElem::from_int(f, -1);
      const auto r = check_concrete(id, k, h, c.inv, opts);
      EXPECT_EQ(r.status, CheckStatus::passed) << id.name() << " over " << f.to_string() << ": " << r.witness;
    }
  }
}

// Soundness transfer: a zero residual stays zero under evaluation, and the
// concrete residual equals the evaluated symbolic one.
TEST(Coherence, ConcreteResidualIsEvaluatedSymbolicResidual) {
  const auto inv = fixtures::m2_inv(Q);
  const IdentityId fake{IdentityKind::prelie, Family::square, 3, 3, ParamSlots::k};
  const auto k = FieldElem::from_int(Q, 2);
  const auto residual = residual_symbolic(fake, Binding::constants(k, k));
  ASSERT_FALSE(residual.is_zero());
  const auto spec = ProductSpec::make(Family::square, 3, ParamPoly{k});
  const ConcreteRing ring(inv.ambient(), inv.q());
  const auto& b = inv.basis();
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        const auto direct = evaluate_residual(fake, ring, {concrete_word_coefficients(spec)}, {x, y, z});
        EXPECT_EQ(direct, eval_in_algebra(residual, {x, y, z}, inv));
      }
}

TEST(Report, NamesAndStatuses) {
  EXPECT_EQ(kind_name(IdentityKind::long_jacobi), "long_jacobi");
  EXPECT_EQ(mode_name(CheckMode::exhaustive), "exhaustive");
  EXPECT_EQ(status_name(CheckStatus::failed), "failed");
  const auto r = prove(find_identity("jordan_id:jordan:3"));
  EXPECT_EQ(r.identity, "jordan_id:jordan:3");
  ASSERT_EQ(r.products.size(), 1u);
}
