// OpenMP kernels against their serial references. The pairs must agree; the
// benchmark aborts otherwise.

#include <benchmark/benchmark.h>

#include <stdexcept>

#include "quivemb/fixtures.hpp"
#include "quivemb/grassmannian.hpp"
#include "quivemb/search.hpp"
#include "quivemb/stable.hpp"

using namespace quivemb;

namespace {

const Field kF3 = Field::finite(3);

// M^2 on the Kronecker quiver K_3, with e = (2, 3).
struct CountCase {
  Representation m = power(fixtures::kronecker_m(kF3), 2);
  DimVector e{std::vector<long>{2, 3}};
};

void BM_count(benchmark::State& state) {
  const CountCase c;
  const GrassmannianConfig config{100'000'000, false};
  const bool parallel = state.range(0);
  if (count(c.m, c.e, config) != count_serial(c.m, c.e, config)) throw std::logic_error("count mismatch");
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? count(c.m, c.e, config) : count_serial(c.m, c.e, config));
}
BENCHMARK(BM_count)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Walks Hom(P_i^2, M^2) over F_3 up to its first injective element.
void BM_scan_injective(benchmark::State& state) {
  const HomBasis hb = hom_basis(power(fixtures::kronecker_pi(kF3), 2), power(fixtures::kronecker_m(kF3), 2));
  const bool parallel = state.range(0);
  for (auto _ : state) {
    auto f = parallel ? scan_injective(hb, 100'000'000) : scan_injective_serial(hb, 100'000'000);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_scan_injective)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_search_stable(benchmark::State& state) {
  const Field q = Field::rationals();
  const auto n = fixtures::kronecker_pi(q), m = fixtures::kronecker_m(q);
  const bool parallel = state.range(0);
  if (search_stable_embedding(n, m, 2, 256, 0).r != search_stable_embedding_serial(n, m, 2, 256, 0).r)
    throw std::logic_error("search mismatch");
  for (auto _ : state) {
    auto s = parallel ? search_stable_embedding(n, m, 2, 256, 0) : search_stable_embedding_serial(n, m, 2, 256, 0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_search_stable)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_generic_hom(benchmark::State& state) {
  const auto m = fixtures::kronecker_m(Field::finite(5));
  const DimVector e{std::vector<long>{2, 1}};
  const bool parallel = state.range(0);
  if (generic_hom(m, e, 4, 32, 0).estimate != generic_hom_serial(m, e, 4, 32, 0).estimate)
    throw std::logic_error("generic_hom mismatch");
  for (auto _ : state) {
    auto g = parallel ? generic_hom(m, e, 4, 32, 0) : generic_hom_serial(m, e, 4, 32, 0);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_generic_hom)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
