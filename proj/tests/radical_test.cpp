#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semirad/radical.hpp"
#include "test_corpus.hpp"

using namespace semirad;
using namespace testing_corpus;

namespace {

Submodule principal(const ModulePresentation& M, Scalar a) { return span_of(M, {{a}}); }

}  // namespace

TEST(PrimeSubmodules, Z4MatchesSubsetOracle) {
  const auto M = free_module(make_zn(4), 1);
  std::vector<std::vector<ElementId>> brute;
  for (const auto& mask : oracle::all_submodules_by_subsets(M))
    if (oracle::is_prime_literal(M, mask)) brute.push_back(oracle::members_of(mask));
  ASSERT_EQ(brute, (std::vector<std::vector<ElementId>>{{0, 2}}));

  const auto primes = prime_submodules(M);
  ASSERT_EQ(primes.size(), 1u);
  EXPECT_EQ(primes[0].members(), brute[0]);
}

TEST(RadicalByPrimes, Examples) {
  const auto z4 = free_module(make_zn(4), 1);
  EXPECT_EQ(radical_by_primes(Submodule::zero(z4)).members(), (std::vector<ElementId>{0, 2}));

  const auto z12 = free_module(make_zn(12), 1);
  EXPECT_EQ(radical_by_primes(principal(z12, 4)), principal(z12, 2));

  EXPECT_EQ(radical_by_primes(Submodule::whole(z12)), Submodule::whole(z12));
  // A module with no prime submodule at all.
  const auto zero = free_module(make_zn(2), 0);
  EXPECT_TRUE(prime_submodules(zero).empty());
  EXPECT_EQ(radical_by_primes(Submodule::zero(zero)), Submodule::whole(zero));
}

TEST(RadicalByPrimes, RespectsLatticeBound) {
  const auto M = free_module(make_zn(4), 2);
  EXPECT_THROW(radical_by_primes(Submodule::zero(M), 8), BoundExceeded);
  EXPECT_THROW(smallest_semiprime_over(Submodule::zero(M), 8), BoundExceeded);
}

TEST(FirstRadical, Examples) {
  const auto z4 = free_module(make_zn(4), 1);
  EXPECT_EQ(first_radical(Submodule::zero(z4)).members(), (std::vector<ElementId>{0, 2}));
  const auto half = Submodule::from_members(z4, {0, 2});
  EXPECT_EQ(first_radical(half), half);

  const auto M = free_module(make_zn(4), 2);
  EXPECT_EQ(vectors_of(first_radical(span_of(M, {{2, 0}}))),
            (std::vector<Vector>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST(RadicalByIteration, Z4ZeroTrace) {
  const auto z4 = free_module(make_zn(4), 1);
  const auto [rad, trace] = radical_by_iteration(Submodule::zero(z4));
  EXPECT_EQ(rad.members(), (std::vector<ElementId>{0, 2}));
  EXPECT_EQ(trace.fixpoint_index, 2u);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0].submodule.members(), (std::vector<ElementId>{0, 2}));
  EXPECT_EQ(trace.steps[0].new_elements, std::vector<ElementId>{2});
  ASSERT_EQ(trace.steps[0].witnesses.size(), 1u);
  EXPECT_EQ(trace.steps[0].witnesses[0].element, 2u);
  EXPECT_EQ(trace.steps[0].witnesses[0].colon.members(), (std::vector<Scalar>{0, 2}));
  EXPECT_EQ(trace.steps[1].submodule, trace.steps[0].submodule);
  EXPECT_TRUE(trace.steps[1].new_elements.empty());
  EXPECT_TRUE(trace_replays(trace));
}

TEST(RadicalByIteration, SemiprimeStartIsImmediateFixpoint) {
  const auto z6 = free_module(make_zn(6), 1);
  const auto [rad, trace] = radical_by_iteration(Submodule::zero(z6));
  EXPECT_TRUE(rad.is_zero());
  EXPECT_EQ(trace.fixpoint_index, 1u);
}

TEST(RadicalByIteration, RankTwoTrace) {
  const auto M = free_module(make_zn(4), 2);
  const auto [rad, trace] = radical_by_iteration(span_of(M, {{2, 0}}));
  EXPECT_EQ(rad, span_of(M, {{2, 0}, {0, 2}}));
  EXPECT_EQ(trace.fixpoint_index, 2u);
  EXPECT_EQ(trace.steps[0].new_elements, (std::vector<ElementId>{el(M, {0, 2}), el(M, {2, 2})}));
  EXPECT_TRUE(trace_replays(trace));
}

TEST(RadicalByIteration, WholeModuleStaysWhole) {
  const auto M = free_module(make_zn(4), 2);
  const auto [rad, trace] = radical_by_iteration(Submodule::whole(M));
  EXPECT_EQ(rad, Submodule::whole(M));
  EXPECT_EQ(trace.fixpoint_index, 1u);
  EXPECT_EQ(radical_by_primes(Submodule::whole(M)), rad);
}

TEST(SmallestSemiprimeOver, Examples) {
  const auto z4 = free_module(make_zn(4), 1);
  EXPECT_EQ(smallest_semiprime_over(Submodule::zero(z4)).members(), (std::vector<ElementId>{0, 2}));
  const auto half = Submodule::from_members(z4, {0, 2});
  EXPECT_EQ(smallest_semiprime_over(half), half);
  const auto z12 = free_module(make_zn(12), 1);
  EXPECT_EQ(smallest_semiprime_over(principal(z12, 4)), principal(z12, 2));
}

TEST(TraceReplay, DetectsTampering) {
  const auto z4 = free_module(make_zn(4), 1);
  auto trace = radical_by_iteration(Submodule::zero(z4)).trace;
  ASSERT_TRUE(trace_replays(trace));
  trace.steps[0].witnesses[0].element = 1;
  EXPECT_FALSE(trace_replays(trace));
  auto truncated = radical_by_iteration(Submodule::zero(z4)).trace;
  truncated.steps.pop_back();
  EXPECT_FALSE(trace_replays(truncated));
}

TEST(RadicalProperties, ThreeMethodsAgreeAndCharacterizeSemiprimes) {
  for (const auto& M : modules()) {
    const auto lattice = enumerate_submodules(M);
    const auto primes = prime_submodules(lattice);
    std::vector<Submodule> semiprimes;
    for (const auto& S : lattice)
      if (is_semiprime_submodule(S)) semiprimes.push_back(S);

    for (const auto& N : lattice) {
      const auto by_primes = radical_by_primes(N, primes);
      const auto [by_iteration, trace] = radical_by_iteration(N);
      const auto smallest = smallest_semiprime_over(N, semiprimes);
      EXPECT_EQ(by_primes, by_iteration);
      EXPECT_EQ(by_primes, smallest);
      EXPECT_TRUE(trace_replays(trace));
      EXPECT_LE(trace.fixpoint_index, M.size());
      if (N.is_proper()) EXPECT_EQ(is_semiprime_submodule(N).holds, by_primes == N);

      // idempotence and absorption into every prime above N
      EXPECT_EQ(radical_by_primes(by_primes, primes), by_primes);
      const auto first = first_radical(N);
      for (const auto& P : primes)
        if (N.subset_of(P)) EXPECT_TRUE(first.subset_of(P));
    }
  }
}

TEST(RadicalProperties, Monotone) {
  for (const auto& M : modules()) {
    if (M.size() > 36) continue;
    const auto lattice = enumerate_submodules(M);
    const auto primes = prime_submodules(lattice);
    for (const auto& A : lattice)
      for (const auto& B : lattice)
        if (A.subset_of(B)) EXPECT_TRUE(radical_by_primes(A, primes).subset_of(radical_by_primes(B, primes)));
  }
}

TEST(RadicalProperties, IdealsMatchNilpotentRadical) {
  for (std::uint32_t n : {2u, 4u, 6u, 8u, 9u, 12u, 16u, 18u, 36u}) {
    const auto R = make_zn(n);
    const auto M = free_module(R, 1);
    for (const auto& I : enumerate_ideals(R)) {
      const auto N = Submodule::from_members(M, I.members());
      EXPECT_EQ(radical_by_iteration(N).radical.members(), nilpotent_radical_of_ideal(I).members()) << n;
    }
  }
}
