#include "invalg/identities.hpp"

#include <chrono>
#include <random>

namespace invalg {

namespace {

using K = IdentityKind;

ProductSpec sq(int i, const ParamPoly& k) { return ProductSpec::make(Family::square, i, k); }
ProductSpec ang(int i, const ParamPoly& k) { return ProductSpec::make(Family::angle, i, k); }

// Hu-Liu product whose commutator is the i-th square bracket.
ProductSpec commutator_source(int bracket, const ParamPoly& k) {
  const Field f = k.field();
  switch (bracket) {
    case 1: return ProductSpec::make(Family::huliu, 2, ParamPoly::constant(f, 0));
    case 2: return ProductSpec::make(Family::huliu, 8, ParamPoly::constant(f, 0), ParamPoly::constant(f, 1));
    case 3: return ProductSpec::make(Family::huliu, 8, ParamPoly::constant(f, 1), k);
    case 4: return ProductSpec::make(Family::huliu, 10, k);
    case 5: return ProductSpec::make(Family::huliu, 13, k);
    case 6: return ProductSpec::make(Family::huliu, 14, k);
  }
  throw std::invalid_argument("no square bracket " + std::to_string(bracket));
}

ParamSlots slots_of(const IdentityId& id) {
  bool uses_k = false;
  bool uses_h = false;
  for (const auto& spec : identity_products(id, Binding::symbolic())) {
    for (const auto& c : word_coefficients(spec)) {
      uses_k = uses_k || c.uses_k();
      uses_h = uses_h || c.uses_h();
    }
  }
  if (uses_h) return ParamSlots::kh;
  return uses_k ? ParamSlots::k : ParamSlots::none;
}

std::vector<IdentityId> build_catalog() {
  std::vector<IdentityId> rows;
  const auto add = [&](K kind, Family family, int index, int arity) {
    rows.push_back({kind, family, index, arity, ParamSlots::none});
  };
  for (int i = 1; i <= 14; ++i) add(K::assoc, Family::huliu, i, 3);
  for (int i = 1; i <= 2; ++i) add(K::jacobi, Family::square, i, 3);
  add(K::long_jacobi, Family::square, 3, 3);
  for (int i = 4; i <= 6; ++i) add(K::jacobi_like_1st, Family::square, i, 3);
  for (int i = 4; i <= 6; ++i) add(K::param_swap_sq, Family::square, i, 3);
  for (int i = 1; i <= 6; ++i) add(K::antisym, Family::square, i, 2);
  for (int i = 1; i <= 6; ++i) add(K::bracket_commutator, Family::square, i, 2);
  for (int i = 1; i <= 6; ++i) add(K::jordan_comm, Family::jordan, i, 2);
  for (int i = 1; i <= 6; ++i) add(K::jordan_id, Family::jordan, i, 2);
  add(K::leibniz, Family::angle, 1, 3);
  for (int i = 2; i <= 4; ++i) add(K::jacobi_like_2nd, Family::angle, i, 3);
  for (int i = 2; i <= 4; ++i) add(K::param_swap_ang_a, Family::angle, i, 3);
  for (int i = 2; i <= 3; ++i) add(K::param_swap_ang_b, Family::angle, i, 3);
  for (int i = 1; i <= 14; ++i) add(K::prelie, Family::prelie, i, 3);
  for (int i = 1; i <= 14; ++i) add(K::lsa, Family::lsa, i, 3);
  for (Family f : {Family::prelie, Family::lsa}) {
    for (int i = 1; i <= 14; ++i) add(K::lie_admissible, f, i, 3);
  }
  for (auto& row : rows) row.slots = slots_of(row);
  return rows;
}

template <class Mono>
BasicFreeElement<Mono> residual_in(const IdentityId& id, const Binding& b) {
  const Field f = b.k.field();
  const FreeRing<Mono> ring(f);
  std::vector<WordCoefficients<ParamPoly>> coefficients;
  for (const auto& spec : identity_products(id, b)) coefficients.push_back(word_coefficients(spec));
  return evaluate_residual(id, ring, coefficients,
                           {ring.generator(Generator::x), ring.generator(Generator::y), ring.generator(Generator::z)});
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> product_names(const IdentityId& id, const Binding& b) {
  std::vector<std::string> out;
  for (const auto& spec : identity_products(id, b)) out.push_back(spec.to_string());
  return out;
}

}  // namespace

std::string_view kind_name(IdentityKind k) noexcept {
  switch (k) {
    case K::assoc: return "assoc";
    case K::jacobi: return "jacobi";
    case K::long_jacobi: return "long_jacobi";
    case K::jacobi_like_1st: return "jacobi_like_1st";
    case K::param_swap_sq: return "param_swap_sq";
    case K::antisym: return "antisym";
    case K::bracket_commutator: return "bracket_commutator";
    case K::jordan_comm: return "jordan_comm";
    case K::jordan_id: return "jordan_id";
    case K::leibniz: return "leibniz";
    case K::jacobi_like_2nd: return "jacobi_like_2nd";
    case K::param_swap_ang_a: return "param_swap_ang_a";
    case K::param_swap_ang_b: return "param_swap_ang_b";
    case K::prelie: return "prelie";
    case K::lsa: return "lsa";
    case K::lie_admissible: return "lie_admissible";
  }
  return "?";
}

std::string IdentityId::name() const {
  return std::string{kind_name(kind)} + ":" + std::string{family_name(family)} + ":" + std::to_string(index);
}

const std::vector<IdentityId>& identity_catalog() {
  static const std::vector<IdentityId> catalog = build_catalog();
  return catalog;
}

const IdentityId& find_identity(const std::string& name) {
  for (const auto& id : identity_catalog()) {
    if (id.name() == name) return id;
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<ProductSpec> identity_products(const IdentityId& id, const Binding& b) {
  switch (id.kind) {
    case K::assoc: {
      ProductSpec probe = ProductSpec::make(Family::huliu, id.index, b.k);
      if (probe.uses_h()) return {ProductSpec::make(Family::huliu, id.index, b.k, b.h)};
      return {probe};
    }
    case K::jacobi:
    case K::antisym:
      return {sq(id.index, b.k)};
    case K::long_jacobi:
    case K::jacobi_like_1st:
    case K::param_swap_sq:
      return {sq(id.index, b.h), sq(id.index, b.k)};
    case K::bracket_commutator:
      return {sq(id.index, b.k), commutator_source(id.index, b.k)};
    case K::jordan_comm:
    case K::jordan_id:
      return {ProductSpec::make(Family::jordan, id.index, b.k)};
    case K::leibniz:
      return {ang(id.index, b.k)};
    case K::jacobi_like_2nd:
    case K::param_swap_ang_a:
    case K::param_swap_ang_b:
      return {ang(id.index, b.h), ang(id.index, b.k)};
    case K::prelie:
    case K::lsa:
    case K::lie_admissible:
      return {ProductSpec::make(id.family, id.index, b.k)};
  }
  throw std::logic_error("unhandled identity kind");
}

FreeElement residual_symbolic(const IdentityId& id, const Binding& b) { return residual_in<QMonomial>(id, b); }

RawElement residual_without_collapse(const IdentityId& id, const Binding& b) { return residual_in<RawWord>(id, b); }

FreeElement jacobi_sum(const ProductSpec& spec) {
  const FreeRing<QMonomial> ring(spec.field());
  const IdentityId jac{K::jacobi, spec.family, spec.index, 3, ParamSlots::none};
  return evaluate_residual(jac, ring, {word_coefficients(spec)},
                           {ring.generator(Generator::x), ring.generator(Generator::y), ring.generator(Generator::z)});
}

FreeElement leibniz_residual(const ProductSpec& spec) {
  const FreeRing<QMonomial> ring(spec.field());
  const IdentityId leib{K::leibniz, spec.family, spec.index, 3, ParamSlots::none};
  return evaluate_residual(leib, ring, {word_coefficients(spec)},
                           {ring.generator(Generator::x), ring.generator(Generator::y), ring.generator(Generator::z)});
}

std::string_view mode_name(CheckMode m) noexcept {
  switch (m) {
    case CheckMode::symbolic: return "symbolic";
    case CheckMode::exhaustive: return "exhaustive";
    case CheckMode::random: return "random";
  }
  return "?";
}

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::proved: return "proved";
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
  }
  return "?";
}

IdentityReport prove(const IdentityId& id, const Binding& b) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.identity = id.name();
  report.products = product_names(id, b);
  report.mode = CheckMode::symbolic;
  const FreeElement r = residual_symbolic(id, b);
  report.residual = r.to_string();
  if (r.is_zero()) {
    report.status = CheckStatus::proved;
  } else {
    report.status = CheckStatus::failed;
    const auto& [m, c] = *r.terms().begin();
    report.witness = m.to_string() + ": " + c.to_string();
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

std::vector<IdentityReport> prove_all(const std::function<bool(const IdentityId&)>& select) {
  std::vector<IdentityReport> out;
  for (const auto& id : identity_catalog()) {
    if (select(id)) out.push_back(prove(id));
  }
  return out;
}

std::vector<IdentityReport> prove_all(const std::string& filter) {
  return prove_all([&](const IdentityId& id) {
    return filter.empty() || kind_name(id.kind) == filter || id.name() == filter;
  });
}

IdentityReport check_concrete(const IdentityId& id, const FieldElem& k, const FieldElem& h,
                              const InvariantAlgebra& inv, const ConcreteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Field f = inv.field();
  if (k.field() != f || h.field() != f) {
    throw std::invalid_argument("parameters must lie in " + f.to_string());
  }
  const Binding binding = Binding::constants(k, h);
  std::vector<WordCoefficients<FieldElem>> coefficients;
  for (const auto& spec : identity_products(id, binding)) coefficients.push_back(concrete_word_coefficients(spec));
  const ConcreteRing ring(inv.ambient(), inv.q());

  IdentityReport report;
  report.identity = id.name();
  report.products = product_names(id, binding);
  report.mode = options.mode;
  report.status = CheckStatus::passed;

  const std::size_t dim = inv.dim();
  const auto arity = static_cast<std::size_t>(id.arity);
  std::array<Vec, 3> vars{inv.ambient().zero(), inv.ambient().zero(), inv.ambient().zero()};

  const auto run = [&](const std::array<Vec, 3>& v) {
    ++report.cases;
    const Vec r = evaluate_residual(id, ring, coefficients, v);
    if (is_zero_vec(r)) return true;
    report.status = CheckStatus::failed;
    static constexpr std::array<char, 3> names{'x', 'y', 'z'};
    std::string w;
    for (std::size_t i = 0; i < arity; ++i) {
      w += std::string(1, names[i]) + " = " + vec_to_string(v[i]) + ", ";
    }
    report.witness = w + "residual = " + vec_to_string(r);
    report.residual = vec_to_string(r);
    return false;
  };

  if (options.mode == CheckMode::exhaustive) {
    const auto size = f.size();
    if (!size) throw BudgetError("exhaustive mode needs a finite field; use random mode over " + f.to_string());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < arity * dim; ++i) {
      if (total > options.budget / *size + 1) {
        total = options.budget + 1;
        break;
      }
      total *= *size;
    }
    if (total > options.budget) {
      throw BudgetError(id.name() + ": exhaustive check needs " + std::to_string(*size) + "^" +
                        std::to_string(arity * dim) + " assignments, over the budget of " +
                        std::to_string(options.budget) + "; use random mode");
    }
    // All elements of the invariant algebra, in coordinate counting order.
    std::vector<Vec> elements;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) count *= *size;
    elements.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
      Vec coords(dim);
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < dim; ++i) {
        coords[i] = FieldElem::from_int(f, static_cast<long>(rest % *size));
        rest /= *size;
      }
      elements.push_back(inv.element(coords));
    }
    std::array<std::uint64_t, 3> idx{0, 0, 0};
    for (;;) {
      for (std::size_t i = 0; i < arity; ++i) vars[i] = elements[idx[i]];
      if (!run(vars)) break;
      std::size_t pos = 0;
      while (pos < arity && ++idx[pos] == count) idx[pos++] = 0;
      if (pos == arity) break;
    }
  } else if (options.mode == CheckMode::random) {
    report.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    const auto draw = [&]() -> FieldElem {
      if (const auto size = f.size()) {
        std::uniform_int_distribution<std::uint64_t> d(0, *size - 1);
        return FieldElem::from_int(f, static_cast<long>(d(rng)));
      }
      std::uniform_int_distribution<int> d(-3, 3);
      return FieldElem::from_int(f, d(rng));
    };
    for (std::uint64_t n = 0; n < options.budget; ++n) {
      for (std::size_t i = 0; i < arity; ++i) {
        Vec coords(dim);
        for (auto& c : coords) c = draw();
        vars[i] = inv.element(coords);
      }
      if (!run(vars)) break;
    }
  } else {
    throw std::invalid_argument("check_concrete needs exhaustive or random mode");
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

}  // namespace invalg
