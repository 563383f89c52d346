// Randomized algebraic properties of the combination machinery, each suite
// cross-checked against the naive exponential-time reference where one
// exists. Seeds are fixed; a failure message carries the case index.
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "dsfuse/combination.hpp"
#include "dsfuse/decision.hpp"
#include "dsfuse/error.hpp"
#include "dsfuse/frame.hpp"
#include "dsfuse/hypothesis_set.hpp"
#include "dsfuse/mass_function.hpp"
#include "naive_ds.hpp"
#include "random_mass.hpp"

using dsfuse::combine_dempster;
using dsfuse::Frame;
using dsfuse::HypothesisSet;
using dsfuse::MassFunction;
using dsfuse::TotalConflictError;

namespace {

constexpr int kCases = 300;

std::size_t random_frame_size(std::mt19937_64& rng, std::size_t lo,
                              std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double max_focal_gap(const MassFunction& a, const MassFunction& b) {
  double gap = 0.0;
  for (const auto& f : a.focal())
    gap = std::max(gap, std::abs(f.mass - b.mass_of(a.set_of(f))));
  for (const auto& f : b.focal())
    gap = std::max(gap, std::abs(f.mass - a.mass_of(b.set_of(f))));
  return gap;
}

}  // namespace

TEST_CASE("combination agrees with the exhaustive reference") {
  std::mt19937_64 rng(20260815);
  for (int i = 0; i < kCases; ++i) {
    const int n = static_cast<int>(random_frame_size(rng, 1, 4));
    const Frame frame = rnd::frame_of(static_cast<std::size_t>(n));
    const MassFunction m1 = rnd::random_mass(rng, frame);
    const MassFunction m2 = rnd::random_mass(rng, frame);

    naive::CombineResult expected{};
    bool expected_total = false;
    try {
      expected = naive::combine(naive::to_dense(n, rnd::to_naive(m1)),
                                naive::to_dense(n, rnd::to_naive(m2)));
    } catch (const std::runtime_error&) {
      expected_total = true;
    }

    try {
      const auto outcome = combine_dempster(m1, m2);
      REQUIRE_MESSAGE(!expected_total, "case ", i, ": reference found total conflict");
      CHECK_MESSAGE(std::abs(outcome.conflict - expected.conflict) <= 1e-9,
                    "case ", i);
      // every subset of the frame, focal or not, must carry the same mass
      for (std::uint64_t bits = 1; bits < expected.mass.size(); ++bits) {
        const double got =
            outcome.combined.mass_of(HypothesisSet::from_bits(frame, bits));
        CHECK_MESSAGE(std::abs(got - expected.mass[bits]) <= 1e-9, "case ", i,
                      " bits ", bits);
      }
    } catch (const TotalConflictError&) {
      CHECK_MESSAGE(expected_total, "case ", i,
                    ": only the tested implementation found total conflict");
    }
  }
}

TEST_CASE("combination is commutative") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < kCases; ++i) {
    const Frame frame = rnd::frame_of(random_frame_size(rng, 1, 6));
    const MassFunction m1 = rnd::random_mass(rng, frame);
    const MassFunction m2 = rnd::random_mass(rng, frame);
    try {
      const auto ab = combine_dempster(m1, m2);
      const auto ba = combine_dempster(m2, m1);
      CHECK_MESSAGE(std::abs(ab.conflict - ba.conflict) <= 1e-9, "case ", i);
      CHECK_MESSAGE(max_focal_gap(ab.combined, ba.combined) <= 1e-9, "case ", i);
    } catch (const TotalConflictError&) {
      CHECK_THROWS_AS(combine_dempster(m2, m1), TotalConflictError);
    }
  }
}

TEST_CASE("combination is associative within tolerance") {
  std::mt19937_64 rng(7);
  int usable = 0;
  for (int i = 0; i < kCases; ++i) {
    const Frame frame = rnd::frame_of(random_frame_size(rng, 2, 6));
    const MassFunction m1 = rnd::random_mass(rng, frame);
    const MassFunction m2 = rnd::random_mass(rng, frame);
    const MassFunction m3 = rnd::random_mass(rng, frame);
    try {
      const auto left =
          combine_dempster(combine_dempster(m1, m2).combined, m3).combined;
      const auto right =
          combine_dempster(m1, combine_dempster(m2, m3).combined).combined;
      CHECK_MESSAGE(max_focal_gap(left, right) <= 1e-9, "case ", i);
      ++usable;
    } catch (const TotalConflictError&) {
      // grouping hit a totally conflicting intermediate; skip the case
    }
  }
  // the skip path must stay the exception, not the rule
  CHECK(usable > kCases / 2);
}

TEST_CASE("the vacuous mass is the identity of combination") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < kCases; ++i) {
    const Frame frame = rnd::frame_of(random_frame_size(rng, 1, 6));
    const MassFunction m = rnd::random_mass(rng, frame);
    const auto outcome = combine_dempster(m, dsfuse::vacuous(frame));
    CHECK(outcome.conflict == 0.0);
    CHECK_MESSAGE(max_focal_gap(outcome.combined, m) <= 1e-12, "case ", i);
  }
}

TEST_CASE("belief and plausibility are dual and ordered") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < kCases; ++i) {
    const Frame frame = rnd::frame_of(random_frame_size(rng, 1, 6));
    const MassFunction m = rnd::random_mass(rng, frame);
    std::uniform_int_distribution<std::uint64_t> pick_bits(0, frame.full_mask());
    const auto a = HypothesisSet::from_bits(frame, pick_bits(rng));

    const double bel = belief(m, a);
    const double pl = plausibility(m, a);
    CHECK_MESSAGE(std::abs(bel - (1.0 - plausibility(m, a.complement()))) <= 1e-12,
                  "case ", i);
    CHECK_MESSAGE(bel <= pl + 1e-12, "case ", i);

    // monotone under subset growth
    const auto b = a.union_with(HypothesisSet::from_bits(frame, pick_bits(rng)));
    CHECK_MESSAGE(belief(m, b) >= bel - 1e-12, "case ", i);

    // and they agree with the exhaustive definitions
    const auto ref =
        naive::to_dense(static_cast<int>(frame.size()), rnd::to_naive(m));
    CHECK_MESSAGE(std::abs(bel - naive::bel(ref, a.bits())) <= 1e-12, "case ", i);
    CHECK_MESSAGE(std::abs(pl - naive::pl(ref, a.bits())) <= 1e-12, "case ", i);
  }
}

TEST_CASE("Bayesian masses reduce to normalized pointwise products") {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < kCases; ++i) {
    const Frame frame = rnd::frame_of(random_frame_size(rng, 2, 6));
    const MassFunction m1 = rnd::random_bayesian_mass(rng, frame);
    const MassFunction m2 = rnd::random_bayesian_mass(rng, frame);

    double normalizer = 0.0;
    std::vector<double> product(frame.size());
    for (std::size_t e = 0; e < frame.size(); ++e) {
      const auto singleton = HypothesisSet::singleton(frame, frame.element(e));
      product[e] = m1.mass_of(singleton) * m2.mass_of(singleton);
      normalizer += product[e];
    }

    const auto outcome = combine_dempster(m1, m2);
    for (std::size_t e = 0; e < frame.size(); ++e) {
      const auto singleton = HypothesisSet::singleton(frame, frame.element(e));
      CHECK_MESSAGE(std::abs(outcome.combined.mass_of(singleton) -
                             product[e] / normalizer) <= 1e-9,
                    "case ", i, " element ", e);
    }
    CHECK_MESSAGE(std::abs(outcome.conflict - (1.0 - normalizer)) <= 1e-9,
                  "case ", i);
  }
}

TEST_CASE("pignistic scores match the reference and sum to one") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < kCases; ++i) {
    const int n = static_cast<int>(random_frame_size(rng, 1, 6));
    const Frame frame = rnd::frame_of(static_cast<std::size_t>(n));
    const MassFunction m = rnd::random_mass(rng, frame);
    const auto bet = dsfuse::pignistic(m);
    const auto ref = naive::pignistic(n, naive::to_dense(n, rnd::to_naive(m)));
    REQUIRE(bet.size() == frame.size());
    double total = 0.0;
    for (std::size_t e = 0; e < frame.size(); ++e) {
      CHECK_MESSAGE(std::abs(bet[e].score - ref[e]) <= 1e-12, "case ", i);
      total += bet[e].score;
    }
    CHECK_MESSAGE(std::abs(total - 1.0) <= 1e-9, "case ", i);
  }
}
