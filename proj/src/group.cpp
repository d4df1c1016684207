#include "nnn/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "nnn/error.hpp"

namespace nnn {
namespace {

long long mod(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  return value;
}

// Solves r = target (mod q), r = 1 (mod n/q) for coprime q and n/q.
long long crt_with_one(long long target, long long q, long long n) {
  for (long long r = mod(target, q); r < n; r += q)
    if (mod(r, n / q) == 1 % (n / q)) return r;
  throw InternalError("CRT: no solution");
}

}  // namespace

GroupSpec::GroupSpec(Family family, int n) : family_(family), n_(n) {
  if (family == Family::Cyclic && n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  if (family == Family::Dihedral && n < 2) throw InvalidArgument("dihedral group needs n >= 2");
}

std::string GroupSpec::family_name() const {
  return family_ == Family::Cyclic ? "cyclic" : "dihedral";
}

std::string GroupSpec::name() const {
  return (family_ == Family::Cyclic ? "C_" : "D_") + std::to_string(order());
}

GroupSpec parse_group(std::string_view text) {
  text = trim(text);
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    std::string family(trim(text.substr(0, colon)));
    std::transform(family.begin(), family.end(), family.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    int n = parse_int(text.substr(colon + 1), "n");
    if (family == "cyclic" || family == "c") return GroupSpec::cyclic(n);
    if (family == "dihedral" || family == "d") return GroupSpec::dihedral(n);
    throw InvalidArgument("unknown group family '" + family + "'");
  }
  if (text.size() >= 2 && (text[0] == 'C' || text[0] == 'D')) {
    std::string_view rest = text.substr(text[1] == '_' ? 2 : 1);
    int order = parse_int(rest, "group order");
    if (text[0] == 'C') return GroupSpec::cyclic(order);
    if (order % 2 != 0) throw InvalidArgument("dihedral group order must be even");
    return GroupSpec::dihedral(order / 2);
  }
  throw InvalidArgument("cannot parse group '" + std::string(text) + "' (expected e.g. dihedral:6)");
}

void check_elem(const GroupSpec& g, GroupElem x) {
  if (x.code >= static_cast<std::uint32_t>(g.order()))
    throw InvalidArgument("element code " + std::to_string(x.code) + " out of range for " +
                          g.name());
}

GroupElem rotation(const GroupSpec& g, long long i) {
  return GroupElem{static_cast<std::uint32_t>(mod(i, g.n()))};
}

GroupElem reflection(const GroupSpec& g, long long i) {
  if (g.is_cyclic()) throw InvalidArgument("cyclic groups have no reflections");
  return GroupElem{static_cast<std::uint32_t>(g.n() + mod(i, g.n()))};
}

GroupElem multiply(const GroupSpec& g, GroupElem x, GroupElem y) {
  check_elem(g, x);
  check_elem(g, y);
  const long long n = g.n();
  if (g.is_cyclic()) return GroupElem{static_cast<std::uint32_t>((x.code + y.code) % n)};
  const bool xf = x.code >= n, yf = y.code >= n;
  const long long i = xf ? x.code - n : x.code;
  const long long j = yf ? y.code - n : y.code;
  // b a^j = a^-j b
  const long long e = mod(xf ? i - j : i + j, n);
  return GroupElem{static_cast<std::uint32_t>((xf != yf) ? n + e : e)};
}

GroupElem inverse(const GroupSpec& g, GroupElem x) {
  check_elem(g, x);
  if (x.code >= static_cast<std::uint32_t>(g.n())) return x;
  return rotation(g, -static_cast<long long>(x.code));
}

GroupElem power(const GroupSpec& g, GroupElem x, long long e) {
  if (e < 0) return power(g, inverse(g, x), -e);
  GroupElem result = kIdentity;
  for (long long k = 0; k < e; ++k) result = multiply(g, result, x);
  return result;
}

int element_order(const GroupSpec& g, GroupElem x) {
  int k = 1;
  for (GroupElem y = x; y != kIdentity; y = multiply(g, y, x)) ++k;
  return k;
}

std::vector<GroupElem> standard_generators(const GroupSpec& g) {
  if (g.is_cyclic()) return g.n() == 1 ? std::vector<GroupElem>{} : std::vector{GroupElem{1}};
  return {GroupElem{1}, reflection(g, 0)};
}

ElemSet make_set(const GroupSpec& g, std::span<const std::uint32_t> codes) {
  ElemSet s;
  s.reserve(codes.size());
  for (std::uint32_t c : codes) {
    check_elem(g, GroupElem{c});
    s.push_back(GroupElem{c});
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::uint32_t> codes_of(const ElemSet& s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  for (GroupElem x : s) out.push_back(x.code);
  return out;
}

ElemSet generated_subgroup(const GroupSpec& g, const ElemSet& gens) {
  std::vector<bool> seen(g.order(), false);
  ElemSet out{kIdentity};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (GroupElem s : gens) {
      GroupElem y = multiply(g, out[head], s);
      if (!seen[y.code]) {
        seen[y.code] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const GroupSpec& g, const ElemSet& s) {
  if (!std::binary_search(s.begin(), s.end(), kIdentity)) return false;
  for (GroupElem x : s)
    for (GroupElem y : s)
      if (!std::binary_search(s.begin(), s.end(), multiply(g, x, y))) return false;
  return true;
}

std::string format_elem(const GroupSpec& g, GroupElem x) {
  check_elem(g, x);
  const std::uint32_t n = g.n();
  const bool flip = !g.is_cyclic() && x.code >= n;
  const std::uint32_t i = flip ? x.code - n : x.code;
  std::string rot = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
  if (!flip) return rot.empty() ? "1" : rot;
  return rot.empty() ? "b" : rot + "*b";
}

GroupElem parse_elem(const GroupSpec& g, std::string_view token) {
  token = trim(token);
  if (token == "1" || token == "e") return kIdentity;
  if (token.empty()) throw InvalidArgument("empty element token");
  GroupElem acc = kIdentity;
  std::size_t pos = 0;
  while (pos < token.size()) {
    char c = token[pos];
    if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 'a' && c != 'b')
      throw InvalidArgument("unexpected '" + std::string(1, c) + "' in element '" +
                            std::string(token) + "'");
    if (c == 'b' && g.is_cyclic())
      throw InvalidArgument("cyclic groups have no generator b");
    ++pos;
    long long exponent = 1;
    if (pos < token.size() && token[pos] == '^') {
      std::size_t end = ++pos;
      if (end < token.size() && token[end] == '-') ++end;
      while (end < token.size() && std::isdigit(static_cast<unsigned char>(token[end]))) ++end;
      exponent = parse_int(token.substr(pos, end - pos), "exponent");
      pos = end;
    }
    GroupElem base = c == 'a' ? rotation(g, 1) : reflection(g, 0);
    acc = multiply(g, acc, power(g, base, exponent));
  }
  return acc;
}

Perm right_mult(const GroupSpec& g, GroupElem x) {
  std::vector<Point> images(g.order());
  for (std::uint32_t v = 0; v < images.size(); ++v) images[v] = multiply(g, GroupElem{v}, x).code;
  return Perm(std::move(images));
}

Perm left_mult(const GroupSpec& g, GroupElem x) {
  std::vector<Point> images(g.order());
  for (std::uint32_t v = 0; v < images.size(); ++v) images[v] = multiply(g, x, GroupElem{v}).code;
  return Perm(std::move(images));
}

PermGroup right_regular(const GroupSpec& g) {
  std::vector<Perm> gens;
  for (GroupElem x : standard_generators(g)) gens.push_back(right_mult(g, x));
  return PermGroup(g.order(), std::move(gens));
}

// --- automorphisms ---------------------------------------------------------

GroupAut GroupAut::cyclic_unit(const GroupSpec& g, long long r) {
  if (!g.is_cyclic()) throw InvalidArgument("cyclic_unit on a dihedral group");
  const long long n = g.n();
  r = mod(r, n);
  if (std::gcd(r, n) != 1) throw InvalidArgument("automorphism exponent must be a unit mod n");
  std::vector<Point> images(n);
  for (long long i = 0; i < n; ++i) images[i] = static_cast<Point>(mod(r * i, n));
  return GroupAut(g, Perm(std::move(images)));
}

GroupAut GroupAut::dihedral_affine(const GroupSpec& g, long long r, long long s) {
  if (g.is_cyclic()) throw InvalidArgument("dihedral_affine on a cyclic group");
  const long long n = g.n();
  r = mod(r, n);
  s = mod(s, n);
  if (std::gcd(r, n) != 1) throw InvalidArgument("automorphism exponent must be a unit mod n");
  std::vector<Point> images(2 * n);
  for (long long i = 0; i < n; ++i) {
    images[i] = static_cast<Point>(mod(r * i, n));
    images[n + i] = static_cast<Point>(n + mod(r * i + s, n));
  }
  return GroupAut(g, Perm(std::move(images)));
}

GroupAut GroupAut::from_images(const GroupSpec& g, std::vector<Point> images) {
  if (images.size() != static_cast<std::size_t>(g.order()))
    throw InvalidArgument("automorphism image array has the wrong length");
  Perm map(std::move(images));
  for (std::uint32_t x = 0; x < map.degree(); ++x)
    for (std::uint32_t y = 0; y < map.degree(); ++y)
      if (map[multiply(g, GroupElem{x}, GroupElem{y}).code] !=
          multiply(g, GroupElem{map[x]}, GroupElem{map[y]}).code)
        throw InvalidArgument("map does not preserve multiplication");
  return GroupAut(g, std::move(map));
}

GroupAut GroupAut::identity(const GroupSpec& g) { return GroupAut(g, Perm::identity(g.order())); }

std::optional<int> GroupAut::r() const {
  const std::uint32_t n = group_.n();
  if (group_.is_cyclic()) return n == 1 ? 0 : static_cast<int>(map_[1]);
  if (map_[1] < n && map_[n] >= n) return static_cast<int>(map_[1]);
  return std::nullopt;
}

std::optional<int> GroupAut::s() const {
  const std::uint32_t n = group_.n();
  if (group_.is_cyclic()) return std::nullopt;
  if (map_[1] < n && map_[n] >= n) return static_cast<int>(map_[n] - n);
  return std::nullopt;
}

GroupAut GroupAut::inverse() const { return GroupAut(group_, map_.inverse()); }

std::string GroupAut::str() const {
  if (group_.is_cyclic()) return "a->a^" + std::to_string(*r());
  if (r()) return "(r=" + std::to_string(*r()) + ",s=" + std::to_string(*s()) + ")";
  return "map" + map_.str();
}

GroupAut compose(const GroupAut& x, const GroupAut& y) {
  if (!(x.group_ == y.group_)) throw InvalidArgument("composing automorphisms of different groups");
  return GroupAut(x.group_, x.map_ * y.map_);
}

ElemSet image(const GroupAut& aut, const ElemSet& s) {
  ElemSet out;
  out.reserve(s.size());
  for (GroupElem x : s) out.push_back(aut.apply(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupAut> aut_group(const GroupSpec& g) {
  std::vector<GroupAut> out;
  const int n = g.n();
  if (g.is_cyclic()) {
    for (int r = 0; r < n; ++r)
      if (std::gcd(r, n) == 1) out.push_back(GroupAut::cyclic_unit(g, r));
    return out;
  }
  if (n == 2) {
    // Klein group: every bijection fixing 1 is an automorphism.
    std::vector<Point> images{0, 1, 2, 3};
    do {
      out.push_back(GroupAut::from_images(g, images));
    } while (std::next_permutation(images.begin() + 1, images.end()));
    return out;
  }
  for (int r = 0; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    for (int s = 0; s < n; ++s) out.push_back(GroupAut::dihedral_affine(g, r, s));
  }
  return out;
}

std::vector<GroupAut> aut_stabilizer(const GroupSpec& g, const ElemSet& s) {
  if (std::binary_search(s.begin(), s.end(), kIdentity))
    throw PreconditionError("connection set contains the identity");
  std::vector<GroupAut> out;
  for (GroupAut& aut : aut_group(g))
    if (image(aut, s) == s) out.push_back(std::move(aut));
  return out;
}

PermGroup holomorph(const GroupSpec& g) {
  std::vector<Perm> gens = right_regular(g).generators();
  for (const GroupAut& aut : aut_group(g))
    if (!aut.is_identity()) gens.push_back(aut.perm());
  return PermGroup(g.order(), std::move(gens));
}

int PrimePower::value() const {
  int v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return v;
}

std::vector<PrimePower> factorize(int n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive");
  std::vector<PrimePower> out;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    out.push_back({p, k, 0});
  }
  if (rest > 1) out.push_back({rest, 1, 0});
  std::sort(out.begin(), out.end(), [](const PrimePower& x, const PrimePower& y) { return x.p > y.p; });
  for (PrimePower& pp : out) pp.generator = static_cast<std::uint32_t>(n / pp.value());
  return out;
}

GroupAut alpha_automorphism(int n, std::size_t component) {
  const auto factors = factorize(n);
  if (component >= factors.size())
    throw PreconditionError("component index " + std::to_string(component) +
                            " out of range for n=" + std::to_string(n));
  const PrimePower& pp = factors[component];
  if (pp.k < 2)
    throw PreconditionError("alpha needs p^2 | n; p=" + std::to_string(pp.p) + " has exponent 1");
  const long long q = pp.value();
  const long long r = crt_with_one(q / pp.p + 1, q, n);
  return GroupAut::cyclic_unit(GroupSpec::cyclic(n), r);
}

GroupAut alpha_for_prime(int n, int p) {
  const auto factors = factorize(n);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].p == p) return alpha_automorphism(n, i);
  throw PreconditionError(std::to_string(p) + " does not divide " + std::to_string(n));
}

GroupAut beta_automorphism(int n) {
  const auto factors = factorize(n);
  if (factors.empty() || factors.back().p != 2 || factors.back().k < 4)
    throw PreconditionError("beta needs 16 | n; n=" + std::to_string(n));
  const long long q = factors.back().value();
  const long long r = crt_with_one(q / 4 + 1, q, n);
  return GroupAut::cyclic_unit(GroupSpec::cyclic(n), r);
}

ElemSet fixed_points(const GroupSpec& g, std::span<const GroupAut> auts) {
  ElemSet out;
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(g.order()); ++c) {
    GroupElem x{c};
    if (std::all_of(auts.begin(), auts.end(), [&](const GroupAut& a) { return a.apply(x) == x; }))
      out.push_back(x);
  }
  if (!is_subgroup(g, out)) throw InternalError("fixed-point set is not a subgroup");
  return out;
}

int euler_phi(int n) {
  int count = 0;
  for (int r = 0; r < n; ++r)
    if (std::gcd(r, n) == 1) ++count;
  return count;
}

}  // namespace nnn
