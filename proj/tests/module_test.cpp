#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "semirad/module.hpp"

using namespace semirad;

namespace {

ElementId el(const ModulePresentation& M, std::initializer_list<Scalar> v) { return M.reduce(Vector(v)); }

Submodule span_of(const ModulePresentation& M, std::initializer_list<Vector> gens) {
  std::vector<ElementId> ids;
  for (const auto& v : gens) ids.push_back(M.reduce(v));
  return Submodule::generate(M, ids);
}

std::vector<Vector> vectors_of(const Submodule& N) {
  std::vector<Vector> out;
  for (auto e : N.members()) {
    const auto v = N.module().representative(e);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

std::vector<ModulePresentation> sample_modules() {
  const auto z2 = make_zn(2), z4 = make_zn(4), z6 = make_zn(6), z8 = make_zn(8), z12 = make_zn(12);
  const std::vector<FiniteRing> parts{make_zn(2), make_zn(4)};
  return {
      free_module(z2, 0),
      free_module(z4, 1),
      free_module(z6, 1),
      free_module(z2, 2),
      free_module(z4, 2),
      free_module(make_gf(2, 2, {1, 1, 1}), 2),
      free_module(make_product(parts), 1),
      ModulePresentation(z4, 2, {{2, 0}}),
      ModulePresentation(z8, 1, {{4}}),
      ModulePresentation(z12, 2, {{2, 4}}),
      ModulePresentation(z6, 2, {{1, 3}, {0, 2}}),
      ModulePresentation(z4, 2, {{1, 1}}),
  };
}

// K as a set of ambient vectors, closed naively with the ring tables.
std::set<Vector> relation_closure(const ModulePresentation& M) {
  const auto& R = M.ring();
  std::set<Vector> s(M.relations().begin(), M.relations().end());
  s.insert(Vector(M.rank(), 0));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Vector> cur(s.begin(), s.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        Vector c(M.rank());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.add(a[i], b[i]);
        grew |= s.insert(c).second;
      }
      for (Scalar r = 0; r < R.size(); ++r) {
        Vector c(M.rank());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.mul(r, a[i]);
        grew |= s.insert(c).second;
      }
    }
  }
  return s;
}

std::vector<Vector> all_vectors(const FiniteRing& R, std::size_t rank) {
  std::vector<Vector> out{Vector{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (Scalar c = 0; c < R.size(); ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(FreeModule, Sizes) {
  EXPECT_EQ(free_module(make_zn(4), 2).size(), 16u);
  const auto zero = free_module(make_zn(2), 0);
  EXPECT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.basis().empty());
  const auto r = free_module(make_zn(12), 1);
  EXPECT_EQ(r.size(), 12u);
  for (ElementId e = 0; e < 12; ++e) EXPECT_EQ(r.representative(e)[0], e);
}

TEST(FreeModule, BoundExceededNamesTheFlag) {
  try {
    free_module(make_zn(12), 5);
    FAIL() << "expected BoundExceeded";
  } catch (const BoundExceeded& e) {
    EXPECT_EQ(e.flag(), "--element-bound");
    EXPECT_EQ(e.required(), 248832u);
    EXPECT_NE(std::string(e.what()).find("--element-bound"), std::string::npos);
  }
  EXPECT_NO_THROW(free_module(make_zn(12), 5, 300000));
}

TEST(ModulePresentation, RejectsMalformedRelations) {
  EXPECT_THROW(ModulePresentation(make_zn(4), 2, {{1}}), std::invalid_argument);
  EXPECT_THROW(ModulePresentation(make_zn(4), 1, {{4}}), std::invalid_argument);
}

TEST(ModulePresentation, CanonicalizationMatchesRelationCosets) {
  for (const auto& M : sample_modules()) {
    if (M.ambient_size() > 4096) continue;
    const auto K = relation_closure(M);
    EXPECT_EQ(M.relation_size(), K.size());
    EXPECT_EQ(M.size() * M.relation_size(), M.ambient_size());
    const auto vs = all_vectors(M.ring(), M.rank());
    for (const auto& v : vs) {
      const ElementId e = M.reduce(v);
      const auto rep = M.representative(e);
      const Vector repv(rep.begin(), rep.end());
      EXPECT_EQ(M.reduce(repv), e);
      EXPECT_LE(repv, v);  // lexicographically least in its coset
      for (const auto& w : vs) {
        Vector diff(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) diff[i] = M.ring().sub(v[i], w[i]);
        ASSERT_EQ(M.reduce(v) == M.reduce(w), K.count(diff) == 1);
      }
    }
  }
}

TEST(SubmoduleGenerate, Examples) {
  const auto M = free_module(make_zn(4), 2);
  EXPECT_EQ(vectors_of(span_of(M, {{2, 0}})), (std::vector<Vector>{{0, 0}, {2, 0}}));
  EXPECT_TRUE(Submodule::generate(M, {}).is_zero());
  EXPECT_EQ(span_of(M, {{1, 0}, {0, 1}}).size(), 16u);
}

TEST(SubmoduleGenerate, MatchesNaiveClosure) {
  for (const auto& M : sample_modules()) {
    if (M.size() > 64) continue;
    for (ElementId a = 0; a < M.size(); a += 3)
      for (ElementId b = 0; b < M.size(); b += 5) {
        const auto N = Submodule::generate(M, std::vector<ElementId>{a, b});
        const auto expect = oracle::closure(M, {a, b});
        ASSERT_EQ(std::set<ElementId>(N.members().begin(), N.members().end()), expect);
      }
  }
}

TEST(Submodule, ContainsAndFromMembers) {
  const auto M = free_module(make_zn(4), 1);
  const auto N = Submodule::from_members(M, {0, 2});
  EXPECT_TRUE(contains(N, 2));
  EXPECT_FALSE(contains(N, 1));
  EXPECT_TRUE(contains(N, 0));
  EXPECT_TRUE(contains(Submodule::zero(M), 0));
  EXPECT_THROW(Submodule::from_members(M, {0, 1}), std::logic_error);
  EXPECT_THROW(Submodule::from_members(M, {2}), std::logic_error);
}

TEST(ColonIdeal, Examples) {
  const auto M = free_module(make_zn(4), 1);
  EXPECT_EQ(colon_ideal(Submodule::zero(M), 2).members(), (std::vector<Scalar>{0, 2}));
  const auto N = Submodule::from_members(M, {0, 2});
  EXPECT_TRUE(colon_ideal(N, 2).is_whole());

  const auto M2 = free_module(make_zn(4), 2);
  const auto N2 = span_of(M2, {{2, 0}});
  EXPECT_EQ(colon_ideal(N2, el(M2, {0, 2})).members(), (std::vector<Scalar>{0, 2}));
}

TEST(ColonModule, Examples) {
  const auto M = free_module(make_zn(4), 2);
  const auto twoM = span_of(M, {{2, 0}, {0, 2}});
  EXPECT_EQ(colon_module(twoM).members(), (std::vector<Scalar>{0, 2}));
  EXPECT_TRUE(colon_module(Submodule::whole(M)).is_whole());
  const auto M6 = free_module(make_zn(6), 2);
  EXPECT_EQ(colon_module(Submodule::zero(M6)).members(), std::vector<Scalar>{0});
}

TEST(ColonModule, EqualsIntersectionOfElementColons) {
  for (const auto& M : sample_modules()) {
    if (M.size() > 64) continue;
    for (const auto& N : enumerate_submodules(M)) {
      const auto whole = colon_module(N);
      std::set<Scalar> meet;
      for (Scalar r = 0; r < M.ring().size(); ++r) meet.insert(r);
      for (ElementId x = 0; x < M.size(); ++x) {
        const auto c = colon_ideal(N, x);
        EXPECT_TRUE(whole.subset_of(c));
        std::set<Scalar> next;
        for (Scalar r : meet)
          if (c.contains(r)) next.insert(r);
        meet = std::move(next);
      }
      EXPECT_EQ(std::set<Scalar>(whole.members().begin(), whole.members().end()), meet);
      // (N:M)M subset of N
      EXPECT_TRUE(ideal_times_module(whole, M).subset_of(N));
    }
  }
}

TEST(IdealTimesModule, Examples) {
  const auto R = make_zn(4);
  const auto M = free_module(R, 2);
  const auto two = Ideal::generate(R, std::vector<Scalar>{2});
  EXPECT_EQ(vectors_of(ideal_times_module(two, M)), (std::vector<Vector>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_TRUE(ideal_times_module(Ideal::zero(R), M).is_zero());
  EXPECT_EQ(ideal_times_module(Ideal::whole(R), M).size(), 16u);
  EXPECT_THROW(ideal_times_module(two, free_module(make_zn(2), 1)), std::invalid_argument);
}

TEST(IdealTimesModule, MatchesLiteralProductClosure) {
  for (const auto& M : sample_modules()) {
    if (M.size() > 64) continue;
    for (const auto& I : enumerate_ideals(M.ring())) {
      std::set<ElementId> products;
      for (Scalar r : I.members())
        for (ElementId x = 0; x < M.size(); ++x) products.insert(M.scale(r, x));
      const auto IM = ideal_times_module(I, M);
      EXPECT_EQ(std::set<ElementId>(IM.members().begin(), IM.members().end()), oracle::closure(M, products));
    }
  }
}

TEST(IntersectJoin, Examples) {
  const auto M = free_module(make_zn(4), 1);
  const auto half = Submodule::from_members(M, {0, 2});
  EXPECT_EQ(intersect(half, Submodule::whole(M)), half);
  EXPECT_EQ(intersect(half, half), half);

  const auto M2 = free_module(make_zn(4), 2);
  EXPECT_EQ(join(span_of(M2, {{2, 0}}), span_of(M2, {{0, 2}})), span_of(M2, {{2, 0}, {0, 2}}));

  const auto other = free_module(make_zn(4), 1);
  EXPECT_THROW(intersect(half, Submodule::zero(other)), std::invalid_argument);
  EXPECT_THROW(join(half, Submodule::zero(other)), std::invalid_argument);
}

TEST(EnumerateSubmodules, Examples) {
  const auto z4 = enumerate_submodules(free_module(make_zn(4), 1));
  ASSERT_EQ(z4.size(), 3u);
  EXPECT_EQ(z4[0].members(), std::vector<ElementId>{0});
  EXPECT_EQ(z4[1].members(), (std::vector<ElementId>{0, 2}));
  EXPECT_EQ(z4[2].size(), 4u);
  EXPECT_EQ(enumerate_submodules(free_module(make_zn(2), 2)).size(), 5u);
  EXPECT_EQ(enumerate_submodules(free_module(make_zn(2), 0)).size(), 1u);
}

TEST(EnumerateSubmodules, MatchesSubsetScan) {
  for (const auto& M : sample_modules()) {
    if (M.size() > 16) continue;
    const auto lattice = enumerate_submodules(M);
    std::set<std::vector<ElementId>> fast;
    for (const auto& N : lattice) {
      EXPECT_TRUE(oracle::closed(M, oracle::mask_of(M, N.members())));
      fast.insert(N.members());
    }
    EXPECT_EQ(fast.size(), lattice.size()) << "duplicates";
    std::set<std::vector<ElementId>> slow;
    for (const auto& mask : oracle::all_submodules_by_subsets(M)) slow.insert(oracle::members_of(mask));
    EXPECT_EQ(fast, slow);
    EXPECT_TRUE(std::is_sorted(lattice.begin(), lattice.end(), listing_order));
  }
}

TEST(EnumerateSubmodules, RespectsLatticeBound) {
  const auto M = free_module(make_zn(4), 2);
  EXPECT_THROW(enumerate_submodules(M, 15), BoundExceeded);
  try {
    enumerate_submodules(M, 8);
  } catch (const BoundExceeded& e) {
    EXPECT_EQ(e.flag(), "--lattice-bound");
  }
}

TEST(QuotientModule, Examples) {
  const auto M = free_module(make_zn(4), 1);
  const auto q = quotient_module(Submodule::from_members(M, {0, 2}));
  const auto& Q = q.quotient();
  ASSERT_EQ(Q.size(), 2u);
  const ElementId one = q.forward(1);
  EXPECT_NE(one, Q.zero());
  EXPECT_EQ(Q.add(one, one), Q.zero());
  EXPECT_EQ(q.forward(2), Q.zero());
  EXPECT_EQ(q.forward(3), one);

  const auto same = quotient_module(Submodule::zero(M));
  EXPECT_EQ(same.quotient().size(), 4u);
  for (ElementId e = 0; e < 4; ++e) EXPECT_EQ(same.forward(e), e);

  EXPECT_EQ(quotient_module(Submodule::whole(M)).quotient().size(), 1u);
}

TEST(QuotientModule, LatticeCorrespondenceIsBijective) {
  for (const auto& M : sample_modules()) {
    if (M.size() > 64) continue;
    const auto lattice = enumerate_submodules(M);
    for (const auto& sub : lattice) {
      const auto q = quotient_module(sub);
      std::size_t above = 0;
      for (const auto& N : lattice) {
        if (!sub.subset_of(N)) continue;
        ++above;
        EXPECT_EQ(q.preimage(q.image(N)), N);
      }
      const auto qlattice = enumerate_submodules(q.quotient());
      EXPECT_EQ(qlattice.size(), above);
      for (const auto& S : qlattice) EXPECT_EQ(q.image(q.preimage(S)), S);
    }
  }
}
