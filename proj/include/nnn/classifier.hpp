#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nnn/aut_engine.hpp"
#include "nnn/cayley.hpp"
#include "nnn/count.hpp"
#include "nnn/group.hpp"
#include "nnn/perm.hpp"

namespace nnn {

enum class CiVerdict { Yes, No, Skipped };

/// Verdicts for one Cayley digraph Cay(G, S).
struct Classification {
  GroupSpec group = GroupSpec::cyclic(1);
  ElemSet set;
  bool connected = false;
  bool graph = false;
  BigCount aut_order = 0;
  bool normal = false;
  // Regular subgroups of Aut isomorphic to G; absent when the census was
  // skipped because Aut exceeded the element cap.
  std::optional<int> regular_subgroups;
  std::optional<int> nonnormal_regular;
  bool nnn = false;
  CiVerdict ci = CiVerdict::Skipped;

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct ClassifyOptions {
  std::size_t element_cap = kDefaultElementCap;
  // Run the regular-subgroup census (and the CI verdict) on non-normal
  // digraphs whose automorphism group fits under the cap.
  bool census_nonnormal = true;
};

/// Everything `classify` computes, kept for callers that check invariants.
struct Analysis {
  Classification record;
  AutResult aut;
  std::vector<GroupAut> stabilizer;  // Aut(G, S)
  std::vector<PermGroup> regular_subgroups;
  std::vector<bool> subgroup_is_normal;
  std::optional<PermGroup> aut_group;  // elements cached when the census ran
};

/// R(G) normal in A, tested by conjugating generators. Throws InternalError
/// if that disagrees with |A| = |G| |Aut(G, S)|.
bool is_normal_cayley(const GroupSpec& g, const ElemSet& s, const AutResult& aut);

/// Regular subgroups of `aut` isomorphic to G, sorted by element set.
std::vector<PermGroup> enumerate_regular_subgroups(const PermGroup& aut, const GroupSpec& g,
                                                   std::size_t cap = kDefaultElementCap);
std::vector<PermGroup> enumerate_regular_subgroups(const AutResult& aut, const GroupSpec& g,
                                                   std::size_t cap = kDefaultElementCap);

/// Number of conjugacy classes of `subgroups` under `ambient`. Every
/// conjugate of a listed subgroup must itself be listed.
std::size_t conjugacy_class_count(const PermGroup& ambient, std::span<const PermGroup> subgroups);

Analysis analyze(const GroupSpec& g, const ElemSet& s, const ClassifyOptions& opts = {});
Classification classify(const GroupSpec& g, const ElemSet& s, const ClassifyOptions& opts = {});

/// |N_A(R(G))|, counted over the elements of A.
std::uint64_t normalizer_order(const PermGroup& aut, const GroupSpec& g,
                               std::size_t cap = kDefaultElementCap);

/// Witness that Cay(G, S) is non-normal: L <= Aut(G, S) nontrivial, K normal
/// in G with every right coset Kg either fixed pointwise by L or an L-orbit,
/// plus one of three index conditions on the fixed subgroup F_G(L).
struct NonNormalityCertificate {
  int condition = 0;  // 1, 2 or 3
  std::vector<GroupAut> l_generators;
  ElemSet k_elements;
  ElemSet fixed;  // F_G(L)
  int index = 0;  // |G : F_G(L)|
  std::optional<GroupElem> g;  // condition 2
  std::optional<GroupElem> k;  // condition 2
  std::optional<GroupAut> gamma;  // condition 3
};

/// Returns the first of conditions (1), (2), (3) that holds, or nullopt when
/// none does. Throws PreconditionError when L, K or the coset hypothesis is
/// invalid.
std::optional<NonNormalityCertificate> certify_nonnormal(const GroupSpec& g, const ElemSet& s,
                                                         std::span<const GroupAut> l,
                                                         const ElemSet& k);

/// Re-derives every clause of a certificate from its stored witnesses.
bool recheck_certificate(const GroupSpec& g, const ElemSet& s, const NonNormalityCertificate& c);

/// Connection set of the NNN graph on D_2n (n even, n >= 6, n != 8):
/// {a, a^-1, b, a^(n/2) b} if n/2 is odd, otherwise
/// {a, a^-1, b, a^(n/4) b, a^(n/2) b, a^(3n/4) b}.
ElemSet dihedral_nnn_set(int n);

/// <R(ab) alpha, R(b)> with alpha: a -> a^-1, b -> b. Generators are listed
/// in that order.
PermGroup dihedral_nnn_witness(int n);

struct WitnessReport {
  int n = 0;
  std::uint64_t order = 0;
  bool regular = false;
  std::uint64_t rotation_order = 0;  // o(R(ab) alpha)
  bool dihedral_relation = false;    // y^-1 x y = x^-1
  BigCount aut_order = 0;
  bool contained_in_aut = false;
  bool normal_in_aut = true;
};

WitnessReport check_dihedral_witness(int n);

/// For a normal Cay(C_n, S) and a regular cyclic H <= Aut: the Sylow
/// p-subgroups of H and R(C_n) coincide for every odd p, and H lies in
/// R(C_n) x| T where T holds the automorphisms in Aut(C_n, S) acting
/// trivially on the odd part.
bool check_cyclic_regular_structure(const GroupSpec& g, const ElemSet& s, const PermGroup& h);

}  // namespace nnn
