#include "avq/catalog/builtin.hpp"
#include "avq/groups/kernels.hpp"
#include "avq/smooth/audit.hpp"

#include <benchmark/benchmark.h>

using namespace avq;

namespace {

// G(6,1,4): 31104 elements of size 8.
const std::vector<LinearElement> &elements() {
  static const std::vector<LinearElement> els = build_gmpn(6, 1, 4).group.elements();
  return els;
}

TorsionPoint probe() {
  VecQ c(8, Rat(0));
  c[0] = Rat(1, 2);
  c[2] = Rat(1, 3);
  c[3] = Rat(2, 3);
  return TorsionPoint::from_rationals(c);
}

void BM_MultiplyAll(benchmark::State &state) {
  const auto &els = elements();
  std::vector<LinearElement> out;
  for (auto _ : state) {
    if (state.range(0))
      kernels::multiply_all_parallel(els, els[11], out);
    else
      kernels::multiply_all_serial(els, els[11], out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * els.size());
}

void BM_ScanStabilizer(benchmark::State &state) {
  const auto &els = elements();
  auto x = probe();
  for (auto _ : state) {
    auto idx = state.range(0) ? kernels::scan_stabilizer_parallel(els, x.numerators(), x.denominator())
                              : kernels::scan_stabilizer_serial(els, x.numerators(), x.denominator());
    benchmark::DoNotOptimize(idx.data());
  }
  state.SetItemsProcessed(state.iterations() * els.size());
}

void BM_ScanFixedCodim(benchmark::State &state) {
  const auto &els = elements();
  for (auto _ : state) {
    auto idx = state.range(0) ? kernels::scan_fixed_codim_parallel(els, 2) : kernels::scan_fixed_codim_serial(els, 2);
    benchmark::DoNotOptimize(idx.data());
  }
  state.SetItemsProcessed(state.iterations() * els.size());
}

void BM_Audit(benchmark::State &state) {
  kernels::set_parallel(state.range(0) != 0);
  auto s = build_example_a(4, 3);
  auto opt = AuditOptions::defaults_for(s);
  for (auto _ : state) {
    auto v = smoothness_audit(s, opt);
    benchmark::DoNotOptimize(v.strata_orbits);
  }
  kernels::set_parallel(true);
}

}  // namespace

BENCHMARK(BM_MultiplyAll)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanStabilizer)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanFixedCodim)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Audit)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
