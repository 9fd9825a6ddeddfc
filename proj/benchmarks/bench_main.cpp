#include <benchmark/benchmark.h>

#include "vaisman/classify/classify.hpp"
#include "vaisman/exact/smith.hpp"
#include "vaisman/hermitian/hermitian.hpp"
#include "vaisman/lattices/lattices.hpp"
#include "vaisman/liealg/structure.hpp"

#include <random>

using namespace vaisman;

namespace {

exact::IntMatrix random_int_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-20, 20);
  exact::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  return m;
}

std::vector<exact::Integer> speeds(std::size_t n) {
  std::vector<exact::Integer> a;
  for (std::size_t i = 0; i < n; ++i) a.emplace_back(static_cast<long>(i + 1));
  return a;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_int_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(exact::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

static void BM_OscillatorAbelianization(benchmark::State& state) {
  auto lp = lattices::lattice_presentation_oscillator(speeds(static_cast<std::size_t>(state.range(0))),
                                                      exact::Integer(3), lattices::QuarterTurn{1});
  for (auto _ : state) benchmark::DoNotOptimize(lattices::abelianization(lp));
}
BENCHMARK(BM_OscillatorAbelianization)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_Nilradical(benchmark::State& state) {
  auto h = lattices::oscillator_algebra(
      lattices::normalize(std::vector<exact::Rational>(static_cast<std::size_t>(state.range(0)), exact::Rational(1))));
  for (auto _ : state) benchmark::DoNotOptimize(liealg::nilradical(h.g));
}
BENCHMARK(BM_Nilradical)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

static void BM_ConstructAndVerify(benchmark::State& state) {
  std::vector<exact::Rational> a;
  for (long i = 1; i <= state.range(0); ++i) a.emplace_back(i);
  auto p = lattices::normalize(a);
  for (auto _ : state) {
    auto h = lattices::oscillator_algebra(p);
    benchmark::DoNotOptimize(hermitian::lck_verdict(h));
  }
}
BENCHMARK(BM_ConstructAndVerify)->Arg(1)->Arg(2)->Arg(3);

static void BM_ClassifyDim6(benchmark::State& state) {
  auto m = classify::build_family({classify::Family::RsD0S5, exact::Rational(0)});
  for (auto _ : state) benchmark::DoNotOptimize(classify::classify(m.structure.g));
}
BENCHMARK(BM_ClassifyDim6);
BENCHMARK_MAIN();
