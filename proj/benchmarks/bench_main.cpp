// Microbenchmarks for the hot paths: completion, table construction,
// structure reports, Smith normal form, and closed set enumeration.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fcs/abelian.hpp"
#include "fcs/cayley.hpp"
#include "fcs/closure.hpp"
#include "fcs/rewriting.hpp"
#include "fcs/structure.hpp"
#include "fcs/zn.hpp"

namespace {

fcs::RuleSystem load_rules(const std::string& name) {
  return fcs::orient(fcs::parse_presentation_file(std::string(FCS_DATA_DIR) + "/" + name));
}

void BM_complete_chain(benchmark::State& state) {
  fcs::RuleSystem rs = load_rules("rf1.pres");
  for (auto _ : state) benchmark::DoNotOptimize(fcs::complete(rs));
}
BENCHMARK(BM_complete_chain);

void BM_complete_nil(benchmark::State& state) {
  fcs::RuleSystem rs = load_rules("rf3.pres");
  for (auto _ : state) benchmark::DoNotOptimize(fcs::complete(rs));
}
BENCHMARK(BM_complete_nil);

void BM_presented_table(benchmark::State& state) {
  fcs::RuleSystem rs = load_rules("rf3.pres");
  for (auto _ : state) benchmark::DoNotOptimize(fcs::from_presentation(rs).sgr.n);
}
BENCHMARK(BM_presented_table);

void BM_structure_report(benchmark::State& state) {
  fcs::CayleySemigroup s = fcs::zn_semigroup(std::uint64_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fcs::structure_report(s).reports.size());
}
BENCHMARK(BM_structure_report)->Arg(60)->Arg(504);

void BM_zn_component_report(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fcs::zn_component_report(std::uint64_t(state.range(0))).components.size());
}
// 5040 materializes the element lists; 720720 stays arithmetic-only.
BENCHMARK(BM_zn_component_report)->Arg(5040)->Arg(720720);

void BM_smith_normal_form(benchmark::State& state) {
  // Fixed 6x6 matrix with mixed magnitudes so runs stay comparable.
  fcs::IntMatrix a = fcs::IntMatrix::zero(6, 6);
  std::int64_t v = 7;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      v = (v * 31 + 17) % 201;
      a.at(i, j) = v - 100;
    }
  for (auto _ : state) benchmark::DoNotOptimize(fcs::smith_normal_form(a).d.at(5, 5));
}
BENCHMARK(BM_smith_normal_form);

void BM_closure_cover(benchmark::State& state) {
  // Ladder of two-element premises over a 14-element ground set.
  fcs::ImplicationSystem sys;
  for (int i = 0; i < 14; ++i) sys.ground.push_back("g" + std::to_string(i));
  for (int i = 0; i + 2 < 14; ++i) {
    fcs::Implication imp;
    imp.premise = fcs::SubsetMask(1u << i | 1u << (i + 1));
    imp.conclusion = fcs::SubsetMask(1u << (i + 2));
    sys.implications.push_back(imp);
  }
  for (auto _ : state) benchmark::DoNotOptimize(fcs::closure_cover(sys).count);
}
BENCHMARK(BM_closure_cover);

} // namespace

BENCHMARK_MAIN();
