#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "logvf/cech.hpp"
#include "logvf/derlog.hpp"
#include "logvf/liealg.hpp"
#include "logvf/normalform.hpp"
#include "logvf/parse.hpp"
#include "logvf/standard_bases.hpp"

using namespace logvf;

namespace {

struct Divisor {
  const char* name;
  const char* vars;
  const char* poly;
};

const Divisor kDivisors[] = {
    {"cusp", "x,y", "x^2+y^3"},
    {"four_lines", "x,y,z", "x*y*(x+y)*(x*z+y)"},
    {"swallowtail", "x,y,z", "16*x^4*z-4*x^3*y^2-128*x^2*z^2+144*x*y^2*z-27*y^4+256*z^3"},
    {"determinant", "x1,x2,x3,x4",
     "3*x2^2*x3^2-6*x1*x3^3-8*x2^3*x4+18*x1*x2*x3*x4-9*x1^2*x4^2"},
};

Polynomial parse(const Divisor& d) { return poly_parse(d.poly, parse_varlist(d.vars)); }

void BM_MinimalDerlog(benchmark::State& state) {
  Polynomial f = parse(kDivisors[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_derlog(f));
  state.SetLabel(kDivisors[state.range(0)].name);
}
BENCHMARK(BM_MinimalDerlog)->DenseRange(0, 3);

void BM_LocalJacobianBasis(benchmark::State& state) {
  Polynomial f = parse(kDivisors[state.range(0)]);
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < f.nvars(); ++i) jac.push_back(f.derivative(i));
  for (auto _ : state) benchmark::DoNotOptimize(standard_basis(jac, OrderingSpec::local()));
  state.SetLabel(kDivisors[state.range(0)].name);
}
BENCHMARK(BM_LocalJacobianBasis)->DenseRange(0, 3);

void BM_FreenessCheck(benchmark::State& state) {
  Polynomial f = parse(kDivisors[state.range(0)]);
  LogDerModule m = minimal_derlog(f);
  for (auto _ : state) benchmark::DoNotOptimize(decide_free(m));
  state.SetLabel(kDivisors[state.range(0)].name);
}
BENCHMARK(BM_FreenessCheck)->DenseRange(0, 3);

void BM_TruncatedLieAlgebra(benchmark::State& state) {
  Polynomial f = parse(kDivisors[3]);
  LogDerModule m = minimal_derlog(f);
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_solvable(truncated_lie_algebra(m, d)));
}
BENCHMARK(BM_TruncatedLieAlgebra)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_FormalStructure(benchmark::State& state) {
  Polynomial f = parse(kDivisors[state.range(0)]);
  int d = 2 * f.total_degree() + 2;
  for (auto _ : state) benchmark::DoNotOptimize(formal_structure(f, d));
  state.SetLabel(kDivisors[state.range(0)].name);
}
BENCHMARK(BM_FormalStructure)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_KernelWitness(benchmark::State& state) {
  Polynomial f = parse(kDivisors[1]);
  auto basis = *decide_free(minimal_derlog(f)).basis;
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d1_kernel_witness(basis, bound));
  state.counters["box_classes"] = bound * bound * bound;
}
BENCHMARK(BM_KernelWitness)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
