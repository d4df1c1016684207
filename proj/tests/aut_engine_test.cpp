#include "nnn/aut_engine.hpp"

#include <gtest/gtest.h>

#include <random>

#include "nnn/error.hpp"
#include "nnn/sweep.hpp"
#include "oracle.hpp"

namespace nnn {
namespace {

Digraph random_digraph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution arc(density);
  Digraph d(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && arc(rng)) d.add_arc(u, v);
  return d;
}

std::vector<char> matrix_of(const Digraph& d) {
  const std::size_t m = d.size();
  std::vector<char> adj(m * m, 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) adj[u * m + v] = d.has_arc(u, v) ? 1 : 0;
  return adj;
}

BigCount factorial(int m) {
  BigCount f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

TEST(RefineTest, DirectedPathSplitsBySignature) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  const Partition p = refine(d, Partition::unit(3));
  EXPECT_EQ(p, Partition(3, {bit(2), bit(0), bit(1)}));
  EXPECT_TRUE(p.is_discrete());
}

TEST(RefineTest, VertexTransitiveGraphStaysUnit) {
  Digraph d(5);
  for (std::size_t i = 0; i < 5; ++i) {
    d.add_arc(i, (i + 1) % 5);
    d.add_arc((i + 1) % 5, i);
  }
  EXPECT_EQ(refine(d, Partition::unit(5)).cell_count(), 1u);
  // Individualizing one vertex of the 5-cycle separates it, its two
  // neighbours and the remaining pair.
  const Partition p = refine(d, Partition(5, {bit(0), bit(1) | bit(2) | bit(3) | bit(4)}));
  ASSERT_EQ(p.cell_count(), 3u);
  EXPECT_EQ(p.cells()[0], bit(0));
}

TEST(RefineTest, ResultIsEquitable) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = random_digraph(rng, 9, 0.3);
    const Partition p = refine(d, Partition::unit(9));
    for (VertexMask cell : p.cells())
      for (VertexMask target : p.cells()) {
        const auto vs = vertices_of(cell);
        for (std::uint32_t v : vs) {
          EXPECT_EQ(std::popcount(d.out(v) & target), std::popcount(d.out(vs[0]) & target));
          EXPECT_EQ(std::popcount(d.in(v) & target), std::popcount(d.in(vs[0]) & target));
        }
      }
  }
}

TEST(RefineTest, RejectsMalformedPartitions) {
  EXPECT_THROW(Partition(3, {bit(0), bit(1)}), InvalidArgument);
  EXPECT_THROW(Partition(3, {bit(0) | bit(1), bit(1) | bit(2)}), InvalidArgument);
  EXPECT_THROW(Partition(2, {bit(0), 0, bit(1)}), InvalidArgument);
}

TEST(AutEngineTest, EmptyAndCompleteDigraphs) {
  for (int m : {1, 2, 5, 9, 20, 64}) {
    Digraph empty(static_cast<std::size_t>(m));
    EXPECT_EQ(automorphism_group(empty).order, factorial(m)) << m;
    Digraph complete(static_cast<std::size_t>(m));
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        if (u != v) complete.add_arc(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    EXPECT_EQ(automorphism_group(complete).order, factorial(m)) << m;
  }
  EXPECT_THROW(Digraph(65), CapExceeded);
}

TEST(AutEngineTest, MatchesAllPermutationScan) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const Digraph d = random_digraph(rng, n, trial % 2 ? 0.25 : 0.5);
    const auto want = oracle::all_automorphisms(matrix_of(d), static_cast<int>(n));
    const AutResult got = automorphism_group(d);
    EXPECT_EQ(got.order, BigCount(want.size()));
    for (const Perm& p : got.generators) EXPECT_TRUE(d.is_automorphism(p));
    EXPECT_EQ(brute_force_aut(d).order, BigCount(want.size()));
  }
}

TEST(AutEngineTest, CayleyDigraphsOfOrderEightMatchBruteForce) {
  for (const GroupSpec g : {GroupSpec::cyclic(8), GroupSpec::dihedral(4)}) {
    for (std::uint64_t mask : connection_masks(g, SweepMode::Digraph, false)) {
      const CayleyDigraph c(g, mask_to_set(mask));
      ASSERT_EQ(automorphism_group(c).order, brute_force_aut(c.digraph()).order) << g.name() << " " << mask;
    }
  }
}

TEST(AutEngineTest, ElementEnumerationMatchesClosure) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = random_digraph(rng, 4 + trial % 5, 0.4);
    const AutResult aut = automorphism_group(d);
    const auto elems = enumerate_elements(aut, d.size());
    ASSERT_TRUE(elems.has_value());
    const ClosureResult c = closure(aut.generators, kDefaultElementCap, d.size());
    EXPECT_EQ(*elems, c.elements);
    EXPECT_EQ(BigCount(elems->size()), aut.order);
  }
  const GroupSpec g = GroupSpec::dihedral(6);
  const AutResult aut = automorphism_group(CayleyDigraph(g, dihedral_nnn_set(6)));
  EXPECT_EQ(enumerate_elements(aut, 12)->size(), 48u);
  EXPECT_FALSE(enumerate_elements(aut, 12, 10).has_value());
  EXPECT_EQ(to_perm_group(aut, 12).order(), 48u);
}

TEST(AutEngineTest, SeedsMustBeAutomorphisms) {
  Digraph d(3);
  d.add_arc(0, 1);
  const std::vector<Perm> bad{Perm({1, 0, 2})};
  EXPECT_THROW(automorphism_group(d, bad), InvalidArgument);
  EXPECT_THROW(brute_force_aut(Digraph(9)), CapExceeded);
}

TEST(AutEngineTest, OrderIsProductOfBasicOrbits) {
  const GroupSpec g = GroupSpec::dihedral(12);
  const AutResult aut = automorphism_group(CayleyDigraph(g, dihedral_nnn_set(12)));
  BigCount product = 1;
  for (std::uint64_t s : aut.orbit_sizes) product *= s;
  EXPECT_EQ(product, aut.order);
  EXPECT_EQ(aut.order, 192);
  EXPECT_EQ(aut.base.size(), aut.orbit_sizes.size());
}

}  // namespace
}  // namespace nnn
