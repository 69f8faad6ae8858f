#include <benchmark/benchmark.h>

#include "invalg/identities.hpp"
#include "invalg/io.hpp"
#include "invalg/representations.hpp"

using namespace invalg;

namespace {

const std::string kData = INVALG_DATA_DIR;

void BM_ProveAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_all());
}
BENCHMARK(BM_ProveAll)->Unit(benchmark::kMillisecond);

void BM_ProveKind(benchmark::State& state, const std::string& kind) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_all(kind));
}
BENCHMARK_CAPTURE(BM_ProveKind, assoc, std::string{"assoc"})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ProveKind, lie_admissible, std::string{"lie_admissible"})->Unit(benchmark::kMillisecond);

void BM_ExhaustiveAssocGF3(benchmark::State& state) {
  const auto file = read_algebra_file(kData + "/lower_tri_gf3.json");
  const auto inv = invariant_subalgebra(file.algebra, file.q);
  const auto& id = find_identity("assoc:huliu:" + std::to_string(state.range(0)));
  const auto one = FieldElem::one(inv.field());
  for (auto _ : state) benchmark::DoNotOptimize(check_concrete(id, one, one, inv, {}));
  state.SetItemsProcessed(state.iterations() * 19683);
}
BENCHMARK(BM_ExhaustiveAssocGF3)->Arg(1)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_AccompanyingAudit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(audit_accompanying_brackets());
}
BENCHMARK(BM_AccompanyingAudit)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto m = read_module_file(kData + "/reg.json", Field::prime(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_irreducibility(m));
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Rewrite(benchmark::State& state) {
  const std::string raw = "xqyqzqwqxqyqzqwq";
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_to_normal_form(raw, RewriteStrategy::leftmost));
}
BENCHMARK(BM_Rewrite);

}  // namespace

BENCHMARK_MAIN();
