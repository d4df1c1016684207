#include "nnn/classifier.hpp"

#include <gtest/gtest.h>

#include "nnn/error.hpp"
#include "nnn/sweep.hpp"
#include "oracle.hpp"

namespace nnn {
namespace {

ElemSet set_of(const GroupSpec& g, std::vector<std::uint32_t> codes) { return make_set(g, codes); }

TEST(ClassifierTest, CompleteGraphOnFourVertices) {
  const GroupSpec g = GroupSpec::cyclic(4);
  const Classification c = classify(g, set_of(g, {1, 2, 3}));
  EXPECT_EQ(c.aut_order, 24);
  EXPECT_FALSE(c.normal);
  EXPECT_FALSE(c.nnn);
  EXPECT_EQ(c.regular_subgroups, 3);
  EXPECT_EQ(c.ci, CiVerdict::Yes);
}

TEST(ClassifierTest, PentagonIsNormal) {
  const GroupSpec g = GroupSpec::cyclic(5);
  const Classification c = classify(g, set_of(g, {1, 4}));
  EXPECT_EQ(c.aut_order, 10);
  EXPECT_TRUE(c.normal);
  EXPECT_TRUE(c.connected);
  EXPECT_TRUE(c.graph);
  EXPECT_EQ(c.regular_subgroups, 1);
  EXPECT_EQ(c.nonnormal_regular, 0);
  EXPECT_EQ(c.ci, CiVerdict::Yes);
}

TEST(ClassifierTest, DirectedFourCycleHasOneRegularCyclicSubgroup) {
  const GroupSpec g = GroupSpec::cyclic(4);
  const Analysis a = analyze(g, set_of(g, {1}));
  EXPECT_EQ(a.record.aut_order, 4);
  EXPECT_EQ(a.record.regular_subgroups, 1);
  ASSERT_EQ(a.regular_subgroups.size(), 1u);
  EXPECT_TRUE(a.subgroup_is_normal[0]);
}

// Census, normality and the CI verdict against the slow reference on every
// Cayley digraph of groups of order at most 8.
class SmallGroupOracle : public ::testing::TestWithParam<GroupSpec> {};

TEST_P(SmallGroupOracle, AgreesWithReference) {
  const GroupSpec g = GetParam();
  const int m = g.order();
  const auto ci_reference = oracle::ci_by_definition(g);
  int census_checked = 0;
  for (std::uint64_t mask : connection_masks(g, SweepMode::Digraph, false)) {
    const ElemSet s = mask_to_set(mask);
    const Analysis a = analyze(g, s);
    const Classification& c = a.record;

    const auto codes = codes_of(s);
    const auto adj = oracle::cayley_matrix(g, codes);
    const auto auts = oracle::all_automorphisms(adj, m);
    ASSERT_EQ(c.aut_order, BigCount(auts.size())) << g.name() << " " << mask;

    std::vector<oracle::Map> reg;
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(m); ++x) {
      oracle::Map r(static_cast<std::size_t>(m));
      for (std::uint32_t y = 0; y < static_cast<std::uint32_t>(m); ++y)
        r[y] = static_cast<int>(oracle::product(g, y, x));
      reg.push_back(r);
    }
    const std::set<oracle::Map> rg(reg.begin(), reg.end());
    EXPECT_EQ(c.normal, oracle::normal_in(rg, auts)) << g.name() << " " << mask;
    EXPECT_EQ(c.ci == CiVerdict::Yes, ci_reference.at(codes)) << g.name() << " " << mask;

    if (auts.size() <= 400) {
      const auto subs = oracle::regular_subgroups(auts, g);
      int nonnormal = 0;
      for (const auto& h : subs) nonnormal += oracle::normal_in(h, auts) ? 0 : 1;
      EXPECT_EQ(c.regular_subgroups, static_cast<int>(subs.size())) << g.name() << " " << mask;
      EXPECT_EQ(c.nonnormal_regular, nonnormal) << g.name() << " " << mask;
      ++census_checked;
    }
  }
  EXPECT_GT(census_checked, 0);
}

INSTANTIATE_TEST_SUITE_P(OrderAtMostEight, SmallGroupOracle,
                         ::testing::Values(GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::cyclic(4),
                                           GroupSpec::cyclic(5), GroupSpec::cyclic(6), GroupSpec::cyclic(7),
                                           GroupSpec::cyclic(8), GroupSpec::dihedral(2),
                                           GroupSpec::dihedral(3), GroupSpec::dihedral(4)),
                         [](const auto& info) {
                           return (info.param.is_cyclic() ? "C" : "D") + std::to_string(info.param.order());
                         });

TEST(ClassifierTest, DihedralConstructionOddBranch) {
  const int n = 6;
  const GroupSpec g = GroupSpec::dihedral(n);
  EXPECT_EQ(codes_of(dihedral_nnn_set(n)), (std::vector<std::uint32_t>{1, 5, 6, 9}));
  const Classification c = classify(g, dihedral_nnn_set(n));
  EXPECT_TRUE(c.connected);
  EXPECT_TRUE(c.graph);
  EXPECT_TRUE(c.normal);
  EXPECT_TRUE(c.nnn);
  EXPECT_EQ(c.aut_order, 4 * 2 * n);
  EXPECT_EQ(c.ci, CiVerdict::No);
}

TEST(ClassifierTest, DihedralConstructionEvenBranch) {
  const int n = 12;
  const GroupSpec g = GroupSpec::dihedral(n);
  EXPECT_EQ(codes_of(dihedral_nnn_set(n)), (std::vector<std::uint32_t>{1, 11, 12, 15, 18, 21}));
  const Classification c = classify(g, dihedral_nnn_set(n));
  EXPECT_TRUE(c.normal);
  EXPECT_TRUE(c.nnn);
  EXPECT_EQ(c.aut_order, 8 * 2 * n);
}

TEST(ClassifierTest, DihedralConstructionPreconditions) {
  for (int n : {2, 3, 4, 5, 7, 8, 9})
    EXPECT_THROW(dihedral_nnn_set(n), PreconditionError) << n;
  try {
    dihedral_nnn_set(8);
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("n != 8"), std::string::npos);
  }
}

TEST(ClassifierTest, WitnessSubgroup) {
  for (int n : {6, 10, 12, 14, 16, 20}) {
    const WitnessReport w = check_dihedral_witness(n);
    EXPECT_EQ(w.order, static_cast<std::uint64_t>(2 * n));
    EXPECT_TRUE(w.regular);
    EXPECT_EQ(w.rotation_order, static_cast<std::uint64_t>(n));
    EXPECT_TRUE(w.dihedral_relation);
    EXPECT_TRUE(w.contained_in_aut);
    EXPECT_FALSE(w.normal_in_aut);
  }
}

TEST(ClassifierTest, NormalizerOfRegularRepresentation) {
  // Non-normal examples: the normalizer is R(G) x| Aut(G, S).
  for (const auto& [g, codes] : std::vector<std::pair<GroupSpec, std::vector<std::uint32_t>>>{
           {GroupSpec::cyclic(4), {1, 2, 3}},
           {GroupSpec::cyclic(6), {1, 5, 3}},
           {GroupSpec::dihedral(4), {1, 3}},
           {GroupSpec::dihedral(6), {3, 6}}}) {
    const ElemSet s = make_set(g, codes);
    const Analysis a = analyze(g, s);
    ASSERT_TRUE(a.aut_group.has_value());
    EXPECT_EQ(normalizer_order(*a.aut_group, g),
              static_cast<std::uint64_t>(g.order()) * aut_stabilizer(g, s).size());
  }
}

TEST(ClassifierTest, ConjugacyClassesOfRegularSubgroups) {
  const GroupSpec g = GroupSpec::cyclic(4);
  const Analysis a = analyze(g, set_of(g, {1, 2, 3}));
  ASSERT_TRUE(a.aut_group.has_value());
  EXPECT_EQ(conjugacy_class_count(*a.aut_group, a.regular_subgroups), 1u);
  const std::vector<PermGroup> partial{a.regular_subgroups.front()};
  EXPECT_THROW(conjugacy_class_count(*a.aut_group, partial), InternalError);
}

TEST(CertificateTest, IndexAboveTwo) {
  const GroupSpec g = GroupSpec::cyclic(9);
  const ElemSet s = set_of(g, {1, 4, 7});
  const std::vector<GroupAut> l{alpha_for_prime(9, 3)};
  const ElemSet k = generated_subgroup(g, {GroupElem{3}});
  const auto cert = certify_nonnormal(g, s, l, k);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->condition, 1);
  EXPECT_EQ(cert->index, 3);
  EXPECT_TRUE(recheck_certificate(g, s, *cert));
  EXPECT_FALSE(classify(g, s).normal);
}

TEST(CertificateTest, IndexTwoWithNonInvertedConjugate) {
  // D_16, S = {a, a^5, b, a^4 b}: L = <gamma^4> fixes <a> pointwise, its
  // orbits on reflections are the cosets of K = <a^4>.
  const GroupSpec g = GroupSpec::dihedral(8);
  const ElemSet s = set_of(g, {1, 5, 8, 12});
  const std::vector<GroupAut> l{GroupAut::dihedral_affine(g, 1, 4)};
  const ElemSet k = set_of(g, {0, 4});
  const auto cert = certify_nonnormal(g, s, l, k);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->condition, 3);
  EXPECT_EQ(cert->index, 2);
  EXPECT_EQ(*cert->gamma, GroupAut::dihedral_affine(g, 5, 0));
  EXPECT_TRUE(recheck_certificate(g, s, *cert));
  EXPECT_FALSE(classify(g, s).normal);

  NonNormalityCertificate forged = *cert;
  forged.gamma = GroupAut::dihedral_affine(g, 1, 4);
  EXPECT_FALSE(recheck_certificate(g, s, forged));
  forged.condition = 1;
  EXPECT_FALSE(recheck_certificate(g, s, forged));
}

TEST(CertificateTest, CompleteBipartiteOnD8) {
  // S = {a, a^3, b, a^2 b}; L = <b -> a^2 b> fixes <a>, K = <a^2> is central,
  // so condition (2) fails and (a -> a^3) supplies condition (3).
  const GroupSpec g = GroupSpec::dihedral(4);
  const ElemSet s = set_of(g, {1, 3, 4, 6});
  const std::vector<GroupAut> l{GroupAut::dihedral_affine(g, 1, 2)};
  const auto cert = certify_nonnormal(g, s, l, set_of(g, {0, 2}));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->condition, 3);
  EXPECT_EQ(*cert->gamma, GroupAut::dihedral_affine(g, 3, 0));
  EXPECT_TRUE(recheck_certificate(g, s, *cert));
  EXPECT_FALSE(classify(g, s).normal);

  NonNormalityCertificate forged = *cert;
  forged.condition = 2;
  forged.g = reflection(g, 0);
  forged.k = rotation(g, 2);
  EXPECT_FALSE(recheck_certificate(g, s, forged));
}

TEST(CertificateTest, Preconditions) {
  const GroupSpec g = GroupSpec::cyclic(9);
  const ElemSet s = set_of(g, {1, 4, 7});
  const std::vector<GroupAut> trivial{GroupAut::identity(g)};
  EXPECT_THROW(certify_nonnormal(g, s, trivial, set_of(g, {0})), PreconditionError);
  const std::vector<GroupAut> outside{GroupAut::cyclic_unit(g, 2)};
  EXPECT_THROW(certify_nonnormal(g, s, outside, set_of(g, {0})), PreconditionError);
  const std::vector<GroupAut> alpha{alpha_for_prime(9, 3)};
  EXPECT_THROW(certify_nonnormal(g, s, alpha, set_of(g, {0, 1})), PreconditionError);
  // K trivial: the cosets {1} .. {a^8} are not L-orbits.
  EXPECT_THROW(certify_nonnormal(g, s, alpha, set_of(g, {0})), PreconditionError);
}

TEST(CyclicStructureTest, RegularCyclicSubgroupsOfNormalCirculants) {
  const GroupSpec g = GroupSpec::cyclic(8);
  int pairs = 0, with_extra = 0;
  for (std::uint64_t mask : connection_masks(g, SweepMode::Digraph, false)) {
    const ElemSet s = mask_to_set(mask);
    const Analysis a = analyze(g, s);
    if (!a.record.normal) continue;
    if (a.regular_subgroups.size() > 1) ++with_extra;
    for (const PermGroup& h : a.regular_subgroups) {
      EXPECT_TRUE(check_cyclic_regular_structure(g, s, h)) << mask;
      ++pairs;
    }
  }
  EXPECT_GT(with_extra, 0);
  EXPECT_GT(pairs, 100);
  const ElemSet k4 = set_of(GroupSpec::cyclic(4), {1, 2, 3});
  const PermGroup r4 = right_regular(GroupSpec::cyclic(4));
  EXPECT_THROW(check_cyclic_regular_structure(GroupSpec::cyclic(4), k4, r4), PreconditionError);
}

}  // namespace
}  // namespace nnn
