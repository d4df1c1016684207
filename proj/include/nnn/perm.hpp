#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nnn {

using Point = std::uint32_t;

// Groups we enumerate stay far below this; Sym(16) and friends overflow it.
inline constexpr std::size_t kDefaultElementCap = 200000;

/// A bijection on {0, ..., degree-1}. Products use the right-action
/// convention: (p * q)(x) = q(p(x)), so R(g)R(h) = R(gh).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;
  // Cycle lengths in ascending order, fixed points included as 1-cycles.
  std::vector<std::size_t> cycle_type() const;

  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// a^-1 * p * a
Perm conjugate(const Perm& p, const Perm& a);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Smallest set containing `point` closed under every generator, sorted.
std::vector<Point> orbit(std::span<const Perm> gens, Point point);

/// True when the generators act transitively on all `degree` points.
bool is_transitive(std::span<const Perm> gens, std::size_t degree);

struct ClosureResult {
  std::vector<Perm> elements;  // sorted by image array; empty on overflow
  bool overflow = false;
  std::size_t reached = 0;  // elements discovered before stopping
};

/// Breadth-first product closure of <gens>. `degree` is only consulted when
/// `gens` is empty.
ClosureResult closure(std::span<const Perm> gens, std::size_t cap = kDefaultElementCap,
                      std::size_t degree = 0);

/// A permutation group given by generators. The element list is computed on
/// first request and cached; copies share the cache.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  /// Adopts a precomputed, sorted element list of <generators>.
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  // Throws CapExceeded when the group has more than `cap` elements.
  const std::vector<Perm>& elements(std::size_t cap = kDefaultElementCap) const;
  std::uint64_t order(std::size_t cap = kDefaultElementCap) const;
  bool contains(const Perm& p, std::size_t cap = kDefaultElementCap) const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<Cache> cache_;
};

bool is_member(const PermGroup& group, const Perm& p, std::size_t cap = kDefaultElementCap);

/// Tests a^-1 s a in `sub` for every generator a of `ambient` and s of `sub`.
/// Assumes sub <= ambient.
bool is_normal_subgroup(const PermGroup& ambient, const PermGroup& sub,
                        std::size_t cap = kDefaultElementCap);

/// Transitive with order equal to the degree.
bool is_regular(const PermGroup& group, std::size_t cap = kDefaultElementCap);

}  // namespace nnn
