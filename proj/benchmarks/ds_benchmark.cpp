#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "dsfuse/combination.hpp"
#include "dsfuse/decision.hpp"
#include "dsfuse/frame.hpp"
#include "dsfuse/mass_function.hpp"

namespace {

dsfuse::Frame frame_of(std::size_t n) {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back("e" + std::to_string(i));
  return dsfuse::Frame(std::move(elements));
}

// Deterministic mass function with the requested number of focal sets.
dsfuse::MassFunction make_mass(const dsfuse::Frame& frame, int focal_count,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, frame.full_mask());
  std::vector<std::uint64_t> picked;
  while (static_cast<int>(picked.size()) < focal_count) {
    const std::uint64_t bits = pick(rng);
    bool fresh = true;
    for (const auto seen : picked) fresh = fresh && seen != bits;
    if (fresh) picked.push_back(bits);
  }
  std::vector<std::pair<dsfuse::HypothesisSet, double>> assignments;
  double remaining = 1.0;
  for (std::size_t i = 0; i + 1 < picked.size(); ++i) {
    const double share = remaining * 0.5;
    assignments.emplace_back(dsfuse::HypothesisSet::from_bits(frame, picked[i]),
                             share);
    remaining -= share;
  }
  assignments.emplace_back(dsfuse::HypothesisSet::from_bits(frame, picked.back()),
                           remaining);
  return dsfuse::MassFunction(frame, assignments);
}

void BM_CombineDempster(benchmark::State& state) {
  const auto frame = frame_of(static_cast<std::size_t>(state.range(0)));
  const int focal = static_cast<int>(state.range(1));
  const auto m1 = make_mass(frame, focal, 1);
  const auto m2 = make_mass(frame, focal, 2);
  for (auto _ : state) {
    auto outcome = dsfuse::combine_dempster(m1, m2);
    benchmark::DoNotOptimize(outcome.combined);
  }
}
BENCHMARK(BM_CombineDempster)
    ->Args({4, 4})
    ->Args({8, 8})
    ->Args({16, 16})
    ->Args({64, 16})
    ->Args({64, 64});

void BM_CombineAll(benchmark::State& state) {
  const auto frame = frame_of(8);
  std::vector<dsfuse::MassFunction> sources;
  for (int i = 0; i < state.range(0); ++i)
    sources.push_back(make_mass(frame, 6, static_cast<std::uint64_t>(i + 1)));
  for (auto _ : state) {
    auto outcome = dsfuse::combine_all(sources);
    benchmark::DoNotOptimize(outcome.combined);
  }
}
BENCHMARK(BM_CombineAll)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_BeliefPlausibility(benchmark::State& state) {
  const auto frame = frame_of(static_cast<std::size_t>(state.range(0)));
  const auto m = make_mass(frame, 32, 3);
  const auto query = dsfuse::HypothesisSet::from_bits(frame, 0b1011);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsfuse::belief(m, query));
    benchmark::DoNotOptimize(dsfuse::plausibility(m, query));
  }
}
BENCHMARK(BM_BeliefPlausibility)->Arg(8)->Arg(64);

void BM_Pignistic(benchmark::State& state) {
  const auto frame = frame_of(static_cast<std::size_t>(state.range(0)));
  const auto m = make_mass(frame, 32, 4);
  for (auto _ : state) {
    auto scores = dsfuse::pignistic(m);
    benchmark::DoNotOptimize(scores);
  }
}
BENCHMARK(BM_Pignistic)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
