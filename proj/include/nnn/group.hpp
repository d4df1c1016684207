#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nnn/perm.hpp"

namespace nnn {

enum class Family { Cyclic, Dihedral };

/// C_n (order n) or the dihedral group D_2n (order 2n) with presentation
/// <a, b | a^n = b^2 = 1, b^-1 a b = a^-1>.
class GroupSpec {
 public:
  GroupSpec(Family family, int n);
  static GroupSpec cyclic(int n) { return {Family::Cyclic, n}; }
  static GroupSpec dihedral(int n) { return {Family::Dihedral, n}; }

  Family family() const { return family_; }
  int n() const { return n_; }
  int order() const { return family_ == Family::Cyclic ? n_ : 2 * n_; }
  bool is_cyclic() const { return family_ == Family::Cyclic; }

  std::string family_name() const;  // "cyclic" | "dihedral"
  std::string name() const;         // "C_9", "D_12"

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_;
  int n_;
};

/// "cyclic:9", "dihedral:6", also the short forms "C9" / "D12" (order).
GroupSpec parse_group(std::string_view text);

/// Canonical element encoding: cyclic code i is a^i; dihedral code i < n is
/// a^i and code n + i is a^i b.
struct GroupElem {
  std::uint32_t code = 0;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

using ElemSet = std::vector<GroupElem>;  // sorted, duplicate-free

inline constexpr GroupElem kIdentity{0};

void check_elem(const GroupSpec& g, GroupElem x);
GroupElem multiply(const GroupSpec& g, GroupElem x, GroupElem y);
GroupElem inverse(const GroupSpec& g, GroupElem x);
GroupElem power(const GroupSpec& g, GroupElem x, long long e);
int element_order(const GroupSpec& g, GroupElem x);

GroupElem rotation(const GroupSpec& g, long long i);    // a^i
GroupElem reflection(const GroupSpec& g, long long i);  // a^i b (dihedral only)

/// a for cyclic groups, {a, b} for dihedral ones; empty for the trivial group.
std::vector<GroupElem> standard_generators(const GroupSpec& g);

/// Sorts, deduplicates and range-checks a list of codes.
ElemSet make_set(const GroupSpec& g, std::span<const std::uint32_t> codes);
std::vector<std::uint32_t> codes_of(const ElemSet& s);

/// Subgroup generated by `gens`, sorted.
ElemSet generated_subgroup(const GroupSpec& g, const ElemSet& gens);
bool is_subgroup(const GroupSpec& g, const ElemSet& s);

std::string format_elem(const GroupSpec& g, GroupElem x);  // "1", "a^3", "a^2*b"
/// Accepts products of a, b with optional integer exponents: "a^3*b", "b*a^-1", "1".
GroupElem parse_elem(const GroupSpec& g, std::string_view token);

/// R(g): x -> x g as a permutation of element codes.
Perm right_mult(const GroupSpec& g, GroupElem x);
/// L-side map x -> g x, used for arc bookkeeping.
Perm left_mult(const GroupSpec& g, GroupElem x);
PermGroup right_regular(const GroupSpec& g);

/// An automorphism of a cyclic or dihedral group, stored as its action on
/// element codes. Cyclic automorphisms are a -> a^r; dihedral ones are
/// a -> a^r, b -> a^s b except for the Klein group D_4, where the remaining
/// four automorphisms have no (r, s) form.
class GroupAut {
 public:
  static GroupAut cyclic_unit(const GroupSpec& g, long long r);
  static GroupAut dihedral_affine(const GroupSpec& g, long long r, long long s);
  /// Validates that `images` is a multiplication-preserving bijection.
  static GroupAut from_images(const GroupSpec& g, std::vector<Point> images);
  static GroupAut identity(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  GroupElem apply(GroupElem x) const { return GroupElem{map_[x.code]}; }
  const Perm& perm() const { return map_; }

  std::optional<int> r() const;
  std::optional<int> s() const;  // dihedral only

  bool is_identity() const { return map_.is_identity(); }
  std::uint64_t order() const { return map_.order(); }
  GroupAut inverse() const;

  std::string str() const;

  friend bool operator==(const GroupAut& x, const GroupAut& y) { return x.map_ == y.map_; }
  friend auto operator<=>(const GroupAut& x, const GroupAut& y) { return x.map_ <=> y.map_; }

 private:
  GroupAut(GroupSpec g, Perm map) : group_(g), map_(std::move(map)) {}

  GroupSpec group_;
  Perm map_;

  friend GroupAut compose(const GroupAut&, const GroupAut&);
};

/// Apply x first, then y.
GroupAut compose(const GroupAut& x, const GroupAut& y);

ElemSet image(const GroupAut& aut, const ElemSet& s);

/// Every automorphism, duplicate-free: phi(n) for C_n, n*phi(n) for D_2n with
/// n >= 3, and all six for D_4.
std::vector<GroupAut> aut_group(const GroupSpec& g);

/// Aut(G, S): automorphisms fixing S setwise. Throws if 1 is in S.
std::vector<GroupAut> aut_stabilizer(const GroupSpec& g, const ElemSet& s);

/// R(G) together with Aut(G) acting on element codes.
PermGroup holomorph(const GroupSpec& g);

struct PrimePower {
  int p;
  int k;
  std::uint32_t generator;  // a^(n / p^k), generates the p-component
  int value() const;
};

/// Prime powers of n, primes descending (so 2 comes last when present).
std::vector<PrimePower> factorize(int n);

/// The order-p automorphism of C_n that raises the p-component generator to
/// the power p^(k-1)+1 and fixes the other components. Requires k >= 2.
/// `component` indexes factorize(n).
GroupAut alpha_automorphism(int n, std::size_t component);
GroupAut alpha_for_prime(int n, int p);

/// The order-4 automorphism of C_n raising the 2-component generator to the
/// power 2^(k-2)+1. Requires 2^4 | n.
GroupAut beta_automorphism(int n);

/// Elements fixed by every automorphism in `auts`; always a subgroup.
ElemSet fixed_points(const GroupSpec& g, std::span<const GroupAut> auts);

int euler_phi(int n);

}  // namespace nnn
