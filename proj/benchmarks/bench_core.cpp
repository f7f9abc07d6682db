#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "su2opt/oracle.hpp"
#include "su2opt/solver.hpp"
#include "su2opt/splitting.hpp"

using namespace su2opt;

namespace {
constexpr double kPi = std::numbers::pi;
const ControlFrame kFrame(kPi / 2, 1.0);

Word make_word(std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i)
    w.letters.push_back({i % 2 == 0 ? Generator::X : Generator::Y, 0.3 + 0.1 * double(i)});
  return w;
}
}  // namespace

static void BM_QuatMul(benchmark::State& state) {
  const Quaternion p{0.3, -0.2, 0.8, 0.1}, q{0.5, 0.5, -0.5, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(quat_mul(p, q));
}
BENCHMARK(BM_QuatMul);

static void BM_ExpSu2(benchmark::State& state) {
  const Su2Vector v{0.4, -0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(exp_su2(v));
}
BENCHMARK(BM_ExpSu2);

static void BM_LogSu2(benchmark::State& state) {
  const UnitQuaternion q = exp_su2({0.4, -0.7, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(log_su2(q));
}
BENCHMARK(BM_LogSu2);

static void BM_EvalWord(benchmark::State& state) {
  const Word w = make_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_word(w, kFrame));
}
BENCHMARK(BM_EvalWord)->Arg(4)->Arg(8)->Arg(16);

static void BM_Trotter(benchmark::State& state) {
  const Su2Vector a{kPi / 4, 0, 0}, b{0, kPi / 4, 0};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie_trotter(a, b, n));
}
BENCHMARK(BM_Trotter)->Arg(64)->Arg(256)->Arg(1024);

static void BM_SolveFamily3(benchmark::State& state) {
  SolverConfig cfg;
  const Word w = make_word(3);
  const UnitQuaternion g = eval_word(w, kFrame);
  const auto fams = enumerate_families(kFrame, 3);
  const FamilyDescriptor* xyx = nullptr;
  for (const auto& f : fams)
    if (f.tag == "alt3:XYX") xyx = &f;
  for (auto _ : state) benchmark::DoNotOptimize(solve_family(g, *xyx, kFrame, cfg));
}
BENCHMARK(BM_SolveFamily3)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  SolverConfig cfg;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  const UnitQuaternion g(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g, kFrame, cfg, 4));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_OracleN3(benchmark::State& state) {
  OracleConfig cfg;
  cfg.restarts = 16;
  cfg.local_steps = 200;
  const Word w = make_word(3);
  const UnitQuaternion g = eval_word(w, kFrame);
  const std::vector<Generator> pattern{Generator::X, Generator::Y, Generator::X};
  for (auto _ : state) benchmark::DoNotOptimize(n_optimal(g, 3, pattern, kFrame, cfg));
}
BENCHMARK(BM_OracleN3)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
