#include "nnn/cayley.hpp"

#include <gtest/gtest.h>

#include <set>

#include "nnn/classifier.hpp"
#include "nnn/error.hpp"
#include "oracle.hpp"

namespace nnn {
namespace {

ElemSet set_of(const GroupSpec& g, std::vector<std::uint32_t> codes) { return make_set(g, codes); }

// All 4-cycles of the underlying graph through {u, v}, as edge sets.
int brute_4cycles(const CayleyDigraph& c, std::uint32_t u, std::uint32_t v) {
  const auto m = static_cast<std::uint32_t>(c.size());
  auto edge = [&](std::uint32_t x, std::uint32_t y) { return c.has_arc(x, y) && c.has_arc(y, x); };
  std::set<std::set<std::pair<std::uint32_t, std::uint32_t>>> cycles;
  for (std::uint32_t w = 0; w < m; ++w)
    for (std::uint32_t x = 0; x < m; ++x) {
      if (std::set<std::uint32_t>{u, v, w, x}.size() != 4) continue;
      if (!edge(u, v) || !edge(v, w) || !edge(w, x) || !edge(x, u)) continue;
      auto e = [](std::uint32_t p, std::uint32_t q) { return std::pair{std::min(p, q), std::max(p, q)}; };
      cycles.insert({e(u, v), e(v, w), e(w, x), e(x, u)});
    }
  return static_cast<int>(cycles.size());
}

TEST(CayleyTest, ArcsGoFromGToSG) {
  const GroupSpec g = GroupSpec::dihedral(5);
  const CayleyDigraph c(g, set_of(g, {1, 5}));
  for (std::uint32_t u = 0; u < 10; ++u)
    for (std::uint32_t v = 0; v < 10; ++v) {
      const bool want = v == oracle::dihedral_product(5, 1, u) || v == oracle::dihedral_product(5, 5, u);
      EXPECT_EQ(c.has_arc(u, v), want);
    }
  EXPECT_EQ(c.digraph().arc_count(), 20u);
}

TEST(CayleyTest, RightRegularRepresentationActsAsAutomorphisms) {
  const GroupSpec g = GroupSpec::dihedral(6);
  const CayleyDigraph c(g, set_of(g, {1, 5, 6, 9}));
  for (std::uint32_t x = 0; x < 12; ++x) EXPECT_TRUE(c.digraph().is_automorphism(right_mult(g, GroupElem{x})));
  EXPECT_FALSE(c.digraph().is_automorphism(left_mult(g, GroupElem{1})));
}

TEST(CayleyTest, RejectsIdentityAndBadCodes) {
  const GroupSpec g = GroupSpec::cyclic(6);
  EXPECT_THROW(CayleyDigraph(g, ElemSet{kIdentity, GroupElem{1}}), PreconditionError);
  EXPECT_THROW(CayleyDigraph(g, ElemSet{GroupElem{6}}), InvalidArgument);
}

TEST(CayleyTest, ConnectivityAndSymmetry) {
  const GroupSpec c12 = GroupSpec::cyclic(12);
  EXPECT_TRUE(is_connected(CayleyDigraph(c12, set_of(c12, {5}))));
  EXPECT_FALSE(is_connected(CayleyDigraph(c12, set_of(c12, {4, 6}))));
  EXPECT_TRUE(is_connected(CayleyDigraph(c12, set_of(c12, {4, 6, 9}))));
  EXPECT_FALSE(is_connected(CayleyDigraph(c12, {})));
  EXPECT_TRUE(is_connected(CayleyDigraph(GroupSpec::cyclic(1), {})));
  EXPECT_TRUE(is_graph(c12, set_of(c12, {1, 11, 6})));
  EXPECT_FALSE(is_graph(c12, set_of(c12, {1, 6})));
  const GroupSpec d = GroupSpec::dihedral(6);
  EXPECT_TRUE(is_graph(d, dihedral_nnn_set(6)));
  EXPECT_TRUE(CayleyDigraph(d, dihedral_nnn_set(6)).digraph().is_symmetric());
}

TEST(CayleyTest, FourCyclesInTheEvenBranchGraph) {
  // n = 12: every rotation edge lies on exactly four 4-cycles, every
  // reflection edge on at least nine.
  const int n = 12;
  const GroupSpec g = GroupSpec::dihedral(n);
  const CayleyDigraph c(g, dihedral_nnn_set(n));
  for (std::uint32_t u = 0; u < c.size(); ++u)
    for (GroupElem s : c.connection_set()) {
      const std::uint32_t v = multiply(g, s, GroupElem{u}).code;
      const int count = count_4cycles_through_edge(c, u, v);
      EXPECT_EQ(count, brute_4cycles(c, u, v));
      if (s.code < static_cast<std::uint32_t>(n))
        EXPECT_EQ(count, 4);
      else
        EXPECT_GE(count, 9);
    }
}

TEST(CayleyTest, NoFourCycleThroughConsecutiveRotationEdges) {
  const int n = 10;
  const GroupSpec g = GroupSpec::dihedral(n);
  const CayleyDigraph c(g, dihedral_nnn_set(n));
  const Digraph& d = c.digraph();
  // No 4-cycle through 1, a, a^2.
  const std::uint32_t a = 1, a2 = 2;
  EXPECT_EQ(d.out(a2) & d.out(0) & ~bit(a), 0u);
  for (std::uint32_t u = 0; u < c.size(); ++u)
    for (std::uint32_t v : vertices_of(d.out(u))) EXPECT_EQ(count_4cycles_through_edge(c, u, v), brute_4cycles(c, u, v));
  EXPECT_THROW(count_4cycles_through_edge(c, 0, 3), PreconditionError);
}

TEST(CayleyTest, EdgeListOneArcPerLine) {
  const GroupSpec g = GroupSpec::cyclic(3);
  EXPECT_EQ(edge_list(CayleyDigraph(g, set_of(g, {1}))), "0 1\n1 2\n2 0\n");
}

}  // namespace
}  // namespace nnn
