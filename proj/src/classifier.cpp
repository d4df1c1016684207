#include "nnn/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "nnn/error.hpp"

namespace nnn {
namespace {

using Fingerprint = std::vector<Perm>;  // sorted element list

// True when every cycle of p has length `len`.
bool all_cycles_have_length(const Perm& p, std::size_t len) {
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t n = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      ++n;
    }
    if (n != len) return false;
  }
  return true;
}

std::vector<Perm> cyclic_powers(const Perm& x) {
  std::vector<Perm> powers{Perm::identity(x.degree())};
  for (Perm y = x; !y.is_identity(); y = y * x) powers.push_back(y);
  std::sort(powers.begin(), powers.end());
  return powers;
}

Fingerprint conjugate_set(const std::vector<Perm>& elems, const Perm& a) {
  Fingerprint out;
  out.reserve(elems.size());
  for (const Perm& h : elems) out.push_back(conjugate(h, a));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const ElemSet& s, GroupElem x) { return std::binary_search(s.begin(), s.end(), x); }

// Right cosets K g, each sorted; listed once.
std::vector<ElemSet> right_cosets(const GroupSpec& g, const ElemSet& k) {
  std::vector<ElemSet> cosets;
  std::vector<bool> seen(g.order(), false);
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(g.order()); ++c) {
    if (seen[c]) continue;
    ElemSet coset;
    for (GroupElem x : k) coset.push_back(multiply(g, x, GroupElem{c}));
    std::sort(coset.begin(), coset.end());
    for (GroupElem x : coset) seen[x.code] = true;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

bool fixes_each_coset_setwise(const GroupAut& gamma, const std::vector<ElemSet>& cosets) {
  return std::all_of(cosets.begin(), cosets.end(),
                     [&](const ElemSet& c) { return image(gamma, c) == c; });
}

bool is_normal_in_group(const GroupSpec& g, const ElemSet& k) {
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(g.order()); ++c) {
    GroupElem x{c};
    for (GroupElem y : k)
      if (!contains(k, multiply(g, multiply(g, inverse(g, x), y), x))) return false;
  }
  return true;
}

std::vector<Perm> aut_perms(std::span<const GroupAut> auts) {
  std::vector<Perm> out;
  for (const GroupAut& a : auts) out.push_back(a.perm());
  return out;
}

void check_witness_n(int n) {
  if (n % 2 != 0 || n < 6 || n == 8)
    throw PreconditionError("the NNN construction needs n even, n >= 6 and n != 8 (got n=" +
                            std::to_string(n) + ")");
}

bool is_prime_power_of(std::uint64_t value, std::uint64_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

}  // namespace

bool is_normal_cayley(const GroupSpec& g, const ElemSet& s, const AutResult& aut) {
  const PermGroup a(g.order(), aut.generators);
  const bool by_conjugation = is_normal_subgroup(a, right_regular(g));
  const BigCount expected = BigCount(g.order()) * aut_stabilizer(g, s).size();
  const bool by_order = aut.order == expected;
  if (by_conjugation != by_order)
    throw InternalError("normality of " + g.name() + ": conjugation test says " +
                        (by_conjugation ? "normal" : "non-normal") + ", |A| = " +
                        to_string(aut.order) + " vs |G||Aut(G,S)| = " + to_string(expected));
  return by_conjugation;
}

std::vector<PermGroup> enumerate_regular_subgroups(const PermGroup& aut, const GroupSpec& g,
                                                   std::size_t cap) {
  if (aut.degree() != static_cast<std::size_t>(g.order()))
    throw InvalidArgument("census: group degree differs from |G|");
  const std::vector<Perm>& elems = aut.elements(cap);
  const std::size_t degree = aut.degree();
  std::map<Fingerprint, PermGroup> found;

  if (g.is_cyclic()) {
    for (const Perm& x : elems) {
      if (!all_cycles_have_length(x, degree)) continue;
      Fingerprint powers = cyclic_powers(x);
      if (found.contains(powers)) continue;
      found.emplace(std::move(powers), PermGroup(degree, {x}));
    }
  } else {
    const std::size_t n = g.n();
    std::set<Fingerprint> seen_rotations;
    for (const Perm& x : elems) {
      if (!all_cycles_have_length(x, n)) continue;
      Fingerprint rotations = cyclic_powers(x);
      if (!seen_rotations.insert(rotations).second) continue;
      // A regular dihedral group containing <x> as its rotation subgroup has
      // exactly one reflection y with y(0) = t for t outside the x-orbit of
      // 0, and y x y = x^-1 forces y(x^k 0) = x^-k t and y(x^k t) = x^-k 0.
      std::vector<bool> in_orbit(degree, false);
      std::vector<Point> walk0, walk_t;
      for (Point p = 0; !in_orbit[p]; p = x[p]) {
        in_orbit[p] = true;
        walk0.push_back(p);
      }
      Point t = 0;
      while (in_orbit[t]) ++t;
      for (Point p = t, k = 0; k < n; p = x[p], ++k) walk_t.push_back(p);
      std::vector<Point> images(degree);
      for (std::size_t k = 0; k < n; ++k) {
        images[walk0[k]] = walk_t[(n - k) % n];
        images[walk_t[k]] = walk0[(n - k) % n];
      }
      Perm y(std::move(images));
      if (!std::binary_search(elems.begin(), elems.end(), y)) continue;
      PermGroup h(degree, {x, y});
      ClosureResult hc = closure(h.generators(), degree, degree);
      if (hc.overflow || hc.elements.size() != degree || !is_regular(h))
        throw InternalError("census: constructed dihedral subgroup is not regular of order 2n");
      if (found.contains(hc.elements)) continue;
      found.emplace(std::move(hc.elements), std::move(h));
    }
  }

  std::vector<PermGroup> out;
  for (auto& [fp, h] : found) out.push_back(std::move(h));
  return out;
}

std::vector<PermGroup> enumerate_regular_subgroups(const AutResult& aut, const GroupSpec& g,
                                                   std::size_t cap) {
  if (aut.order > cap) throw CapExceeded("automorphism group exceeds the element cap");
  return enumerate_regular_subgroups(to_perm_group(aut, g.order(), cap), g, cap);
}

std::size_t conjugacy_class_count(const PermGroup& ambient, std::span<const PermGroup> subgroups) {
  std::map<Fingerprint, std::size_t> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    index.emplace(subgroups[i].elements(), i);
  std::vector<bool> visited(subgroups.size(), false);
  std::size_t classes = 0;
  for (std::size_t start = 0; start < subgroups.size(); ++start) {
    if (visited[start]) continue;
    ++classes;
    visited[start] = true;
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto& elems = subgroups[queue[head]].elements();
      for (const Perm& a : ambient.generators()) {
        auto it = index.find(conjugate_set(elems, a));
        if (it == index.end())
          throw InternalError("conjugate of a listed subgroup is missing from the list");
        if (!visited[it->second]) {
          visited[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
  }
  return classes;
}

Analysis analyze(const GroupSpec& g, const ElemSet& s, const ClassifyOptions& opts) {
  if (g.order() > static_cast<int>(kMaxVertices))
    throw CapExceeded("classify supports groups of order at most 64");
  Analysis an;
  Classification& rec = an.record;
  rec.group = g;
  rec.set = s;
  const CayleyDigraph cay(g, s);
  rec.set = cay.connection_set();
  rec.connected = is_connected(cay);
  rec.graph = is_graph(g, rec.set);
  an.aut = automorphism_group(cay);
  an.stabilizer = aut_stabilizer(g, rec.set);
  rec.aut_order = an.aut.order;
  rec.normal = is_normal_cayley(g, rec.set, an.aut);

  const bool fits = an.aut.order <= opts.element_cap;
  if (rec.normal && !fits) throw InternalError("normal digraph with Aut above the element cap");
  if (fits && (rec.normal || opts.census_nonnormal)) {
    an.aut_group = to_perm_group(an.aut, g.order(), opts.element_cap);
    an.regular_subgroups = enumerate_regular_subgroups(*an.aut_group, g, opts.element_cap);
    int nonnormal = 0;
    for (const PermGroup& h : an.regular_subgroups) {
      const bool normal = is_normal_subgroup(*an.aut_group, h, opts.element_cap);
      an.subgroup_is_normal.push_back(normal);
      nonnormal += normal ? 0 : 1;
    }
    rec.regular_subgroups = static_cast<int>(an.regular_subgroups.size());
    rec.nonnormal_regular = nonnormal;
    const bool ci = conjugacy_class_count(*an.aut_group, an.regular_subgroups) == 1;
    rec.ci = ci ? CiVerdict::Yes : CiVerdict::No;
    if (rec.normal && ci != (an.regular_subgroups.size() == 1))
      throw InternalError("normal digraph: CI verdict disagrees with uniqueness of R(G)");
    rec.nnn = rec.normal && nonnormal > 0;
  }
  return an;
}

Classification classify(const GroupSpec& g, const ElemSet& s, const ClassifyOptions& opts) {
  return analyze(g, s, opts).record;
}

std::uint64_t normalizer_order(const PermGroup& aut, const GroupSpec& g, std::size_t cap) {
  std::vector<Perm> regular(g.order());
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(g.order()); ++c)
    regular[c] = right_mult(g, GroupElem{c});
  const auto r_gens = right_regular(g).generators();
  std::uint64_t count = 0;
  for (const Perm& a : aut.elements(cap)) {
    bool normalizes = true;
    for (const Perm& r : r_gens) {
      Perm c = conjugate(r, a);
      if (c != regular[c[0]]) {
        normalizes = false;
        break;
      }
    }
    count += normalizes ? 1 : 0;
  }
  return count;
}

// --- non-normality certificates ----------------------------------------------

std::optional<NonNormalityCertificate> certify_nonnormal(const GroupSpec& g, const ElemSet& s,
                                                         std::span<const GroupAut> l,
                                                         const ElemSet& k) {
  if (std::all_of(l.begin(), l.end(), [](const GroupAut& x) { return x.is_identity(); }))
    throw PreconditionError("L must be a nontrivial group of automorphisms");
  const std::vector<GroupAut> stabilizer = aut_stabilizer(g, s);
  for (const GroupAut& x : l)
    if (!(x.group() == g) || std::find(stabilizer.begin(), stabilizer.end(), x) == stabilizer.end())
      throw PreconditionError("L is not contained in Aut(G, S): " + x.str());
  if (!is_subgroup(g, k)) throw PreconditionError("K is not a subgroup of G");
  if (!is_normal_in_group(g, k)) throw PreconditionError("K is not normal in G");

  const std::vector<Perm> l_perms = aut_perms(l);
  const std::vector<ElemSet> cosets = right_cosets(g, k);
  for (const ElemSet& coset : cosets) {
    const bool pointwise = std::all_of(coset.begin(), coset.end(), [&](GroupElem x) {
      return std::all_of(l.begin(), l.end(), [&](const GroupAut& a) { return a.apply(x) == x; });
    });
    if (pointwise) continue;
    std::vector<Point> orb = orbit(l_perms, coset.front().code);
    if (codes_of(coset) != std::vector<std::uint32_t>(orb.begin(), orb.end()))
      throw PreconditionError("a coset of K is neither fixed pointwise by L nor an L-orbit");
  }

  NonNormalityCertificate cert;
  cert.l_generators.assign(l.begin(), l.end());
  cert.k_elements = k;
  cert.fixed = fixed_points(g, l);
  cert.index = g.order() / static_cast<int>(cert.fixed.size());
  if (cert.index > 2) {
    cert.condition = 1;
    return cert;
  }
  if (cert.index != 2) return std::nullopt;

  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(g.order()); ++c) {
    const GroupElem x{c};
    if (contains(cert.fixed, x)) continue;
    for (GroupElem y : k) {
      if (multiply(g, multiply(g, inverse(g, x), y), x) != inverse(g, y)) {
        cert.condition = 2;
        cert.g = x;
        cert.k = y;
        return cert;
      }
    }
  }
  for (const GroupAut& gamma : stabilizer) {
    if (gamma.is_identity()) continue;
    const GroupAut* single = &gamma;
    if (fixed_points(g, std::span(single, 1)) == cert.fixed) continue;
    if (!fixes_each_coset_setwise(gamma, cosets)) continue;
    cert.condition = 3;
    cert.gamma = gamma;
    return cert;
  }
  return std::nullopt;
}

bool recheck_certificate(const GroupSpec& g, const ElemSet& s, const NonNormalityCertificate& c) {
  try {
    const std::vector<GroupAut> stabilizer = aut_stabilizer(g, s);
    auto in_stabilizer = [&](const GroupAut& x) {
      return std::find(stabilizer.begin(), stabilizer.end(), x) != stabilizer.end();
    };
    if (c.l_generators.empty() ||
        std::all_of(c.l_generators.begin(), c.l_generators.end(),
                    [](const GroupAut& x) { return x.is_identity(); }))
      return false;
    if (!std::all_of(c.l_generators.begin(), c.l_generators.end(), in_stabilizer)) return false;
    if (!is_subgroup(g, c.k_elements) || !is_normal_in_group(g, c.k_elements)) return false;
    const std::vector<Perm> l_perms = aut_perms(c.l_generators);
    const std::vector<ElemSet> cosets = right_cosets(g, c.k_elements);
    for (const ElemSet& coset : cosets) {
      std::vector<Point> orb = orbit(l_perms, coset.front().code);
      const bool is_orbit = codes_of(coset) == std::vector<std::uint32_t>(orb.begin(), orb.end());
      const bool pointwise = std::all_of(coset.begin(), coset.end(), [&](GroupElem x) {
        return orbit(l_perms, x.code).size() == 1;
      });
      if (!is_orbit && !pointwise) return false;
    }
    if (fixed_points(g, c.l_generators) != c.fixed) return false;
    const int index = g.order() / static_cast<int>(c.fixed.size());
    if (index != c.index) return false;
    switch (c.condition) {
      case 1:
        return index > 2;
      case 2:
        return index == 2 && c.g && c.k && !contains(c.fixed, *c.g) &&
               contains(c.k_elements, *c.k) &&
               multiply(g, multiply(g, inverse(g, *c.g), *c.k), *c.g) != inverse(g, *c.k);
      case 3: {
        if (index != 2 || !c.gamma || c.gamma->is_identity() || !in_stabilizer(*c.gamma))
          return false;
        const GroupAut* single = &*c.gamma;
        return fixed_points(g, std::span(single, 1)) != c.fixed &&
               fixes_each_coset_setwise(*c.gamma, cosets);
      }
      default:
        return false;
    }
  } catch (const std::exception&) {
    return false;
  }
}

// --- the dihedral NNN construction -------------------------------------------

ElemSet dihedral_nnn_set(int n) {
  check_witness_n(n);
  const GroupSpec g = GroupSpec::dihedral(n);
  ElemSet s{rotation(g, 1), rotation(g, -1), reflection(g, 0), reflection(g, n / 2)};
  if ((n / 2) % 2 == 0) {
    s.push_back(reflection(g, n / 4));
    s.push_back(reflection(g, 3 * n / 4));
  }
  std::sort(s.begin(), s.end());
  return s;
}

PermGroup dihedral_nnn_witness(int n) {
  check_witness_n(n);
  const GroupSpec g = GroupSpec::dihedral(n);
  const GroupAut invert_a = GroupAut::dihedral_affine(g, -1, 0);
  const Perm x = right_mult(g, reflection(g, 1)) * invert_a.perm();
  const Perm y = right_mult(g, reflection(g, 0));
  return PermGroup(g.order(), {x, y});
}

WitnessReport check_dihedral_witness(int n) {
  const PermGroup h = dihedral_nnn_witness(n);
  const GroupSpec g = GroupSpec::dihedral(n);
  const Perm& x = h.generators()[0];
  const Perm& y = h.generators()[1];

  WitnessReport report;
  report.n = n;
  report.order = h.order();
  report.regular = is_regular(h);
  report.rotation_order = x.order();
  report.dihedral_relation = conjugate(x, y) == x.inverse() && y.order() == 2;

  const CayleyDigraph cay(g, dihedral_nnn_set(n));
  const AutResult aut = automorphism_group(cay);
  report.aut_order = aut.order;
  report.contained_in_aut = cay.digraph().is_automorphism(x) && cay.digraph().is_automorphism(y);
  report.normal_in_aut = is_normal_subgroup(PermGroup(g.order(), aut.generators), h);
  return report;
}

// --- regular cyclic subgroups of normal circulants ---------------------------

bool check_cyclic_regular_structure(const GroupSpec& g, const ElemSet& s, const PermGroup& h) {
  if (!g.is_cyclic()) throw PreconditionError("expected a cyclic group");
  const int n = g.n();
  if (h.degree() != static_cast<std::size_t>(n) || !is_regular(h))
    throw PreconditionError("H must be a regular permutation group on G");
  const auto& h_elems = h.elements();
  if (std::none_of(h_elems.begin(), h_elems.end(),
                   [&](const Perm& p) { return p.order() == static_cast<std::uint64_t>(n); }))
    throw PreconditionError("H is not cyclic");
  const CayleyDigraph cay(g, s);
  const AutResult aut = automorphism_group(cay);
  if (!is_normal_cayley(g, cay.connection_set(), aut))
    throw PreconditionError("Cay(G, S) is not normal");
  for (const Perm& p : h.generators())
    if (!cay.digraph().is_automorphism(p)) throw PreconditionError("H is not inside Aut(Cay(G, S))");

  const PermGroup regular = right_regular(g);
  const auto& r_elems = regular.elements();
  int odd_part = n;
  while (odd_part % 2 == 0) odd_part /= 2;
  for (const PrimePower& pp : factorize(n)) {
    if (pp.p == 2) continue;
    auto sylow = [&](const std::vector<Perm>& elems) {
      std::vector<Perm> out;
      for (const Perm& e : elems)
        if (is_prime_power_of(e.order(), pp.p)) out.push_back(e);
      return out;
    };
    if (sylow(h_elems) != sylow(r_elems)) return false;
  }

  std::set<int> two_part;  // units in Aut(C_n, S) acting trivially on the odd part
  for (const GroupAut& a : aut_stabilizer(g, cay.connection_set()))
    if (*a.r() % odd_part == 1 % odd_part) two_part.insert(*a.r());
  for (const Perm& e : h_elems) {
    const long long d = e[0];
    const long long r = ((static_cast<long long>(e[n > 1 ? 1 : 0]) - d) % n + n) % n;
    if (n > 1 && !two_part.contains(static_cast<int>(r))) return false;
    for (long long v = 0; v < n; ++v)
      if (e[static_cast<Point>(v)] != static_cast<Point>((r * v + d) % n)) return false;
  }
  return true;
}

}  // namespace nnn
