#include "nnn/perm.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "nnn/error.hpp"

namespace nnn {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x]] = static_cast<Point>(x);
  Perm result;
  result.images_ = std::move(inv);
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type())
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i)
    os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("compose: degree mismatch (" + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()) + ")");
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = q[p[static_cast<Point>(x)]];
  return Perm(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& a) {
  if (p.degree() != a.degree()) throw InvalidArgument("conjugate: degree mismatch");
  // (a^-1 p a)(a(x)) = a(p(x))
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[a[static_cast<Point>(x)]] = a[p[static_cast<Point>(x)]];
  return Perm(std::move(images));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Point> orbit(std::span<const Perm> gens, Point point) {
  std::vector<Point> result{point};
  std::unordered_set<Point> seen{point};
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (const Perm& g : gens) {
      if (result[head] >= g.degree()) throw InvalidArgument("orbit: point out of range");
      Point y = g[result[head]];
      if (seen.insert(y).second) result.push_back(y);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_transitive(std::span<const Perm> gens, std::size_t degree) {
  if (degree <= 1) return true;
  return orbit(gens, 0).size() == degree;
}

ClosureResult closure(std::span<const Perm> gens, std::size_t cap, std::size_t degree) {
  if (!gens.empty()) degree = gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != degree) throw InvalidArgument("closure: generator degree mismatch");

  ClosureResult result;
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = queue[head] * g;
      if (seen.contains(next)) continue;
      if (seen.size() >= cap) {
        result.overflow = true;
        result.reached = seen.size() + 1;
        return result;
      }
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  result.reached = queue.size();
  result.elements = std::move(queue);
  return result;
}

struct PermGroup::Cache {
  std::mutex mutex;
  std::optional<std::vector<Perm>> elements;
  std::size_t overflowed_at = 0;  // largest cap known to overflow
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw InvalidArgument("permutation group degree must be positive");
  for (const Perm& g : generators_)
    if (g.degree() != degree_) throw InvalidArgument("generator degree differs from group degree");
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements)
    : PermGroup(degree, std::move(generators)) {
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw InvalidArgument("element list must be sorted");
  cache_->elements = std::move(elements);
}

const std::vector<Perm>& PermGroup::elements(std::size_t cap) const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->elements) {
    if (cache_->elements->size() > cap)
      throw CapExceeded("group order " + std::to_string(cache_->elements->size()) +
                        " exceeds element cap " + std::to_string(cap));
    return *cache_->elements;
  }
  if (cap <= cache_->overflowed_at)
    throw CapExceeded("group exceeds element cap " + std::to_string(cap));
  ClosureResult r = closure(generators_, cap, degree_);
  if (r.overflow) {
    cache_->overflowed_at = cap;
    throw CapExceeded("group exceeds element cap " + std::to_string(cap));
  }
  cache_->elements = std::move(r.elements);
  return *cache_->elements;
}

std::uint64_t PermGroup::order(std::size_t cap) const { return elements(cap).size(); }

bool PermGroup::contains(const Perm& p, std::size_t cap) const {
  if (p.degree() != degree_) throw InvalidArgument("membership: degree mismatch");
  const auto& elems = elements(cap);
  return std::binary_search(elems.begin(), elems.end(), p);
}

bool is_member(const PermGroup& group, const Perm& p, std::size_t cap) {
  return group.contains(p, cap);
}

bool is_normal_subgroup(const PermGroup& ambient, const PermGroup& sub, std::size_t cap) {
  if (ambient.degree() != sub.degree()) throw InvalidArgument("normality: degree mismatch");
  for (const Perm& a : ambient.generators())
    for (const Perm& s : sub.generators())
      if (!sub.contains(conjugate(s, a), cap)) return false;
  return true;
}

bool is_regular(const PermGroup& group, std::size_t cap) {
  if (!is_transitive(group.generators(), group.degree())) return false;
  // A transitive group has order >= degree; one more element than the degree
  // is enough to refute regularity without enumerating the rest.
  ClosureResult r = closure(group.generators(), std::min(cap, group.degree()), group.degree());
  return !r.overflow && r.elements.size() == group.degree();
}

}  // namespace nnn
