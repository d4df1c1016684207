#include "nnn/cayley.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "nnn/error.hpp"

namespace nnn {

CayleyDigraph::CayleyDigraph(const GroupSpec& group, ElemSet connection_set)
    : group_(group), set_(std::move(connection_set)), digraph_(group.order()) {
  std::sort(set_.begin(), set_.end());
  set_.erase(std::unique(set_.begin(), set_.end()), set_.end());
  for (GroupElem s : set_) check_elem(group_, s);
  if (std::binary_search(set_.begin(), set_.end(), kIdentity))
    throw PreconditionError("connection set contains the identity");
  for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(group_.order()); ++u)
    for (GroupElem s : set_) digraph_.add_arc(u, multiply(group_, s, GroupElem{u}).code);
}

bool is_connected(const CayleyDigraph& cay) {
  const bool generates =
      generated_subgroup(cay.group(), cay.connection_set()).size() ==
      static_cast<std::size_t>(cay.group().order());
  if (generates != cay.digraph().is_weakly_connected())
    throw InternalError("connectivity: <S> = G disagrees with weak connectivity");
  return generates;
}

bool is_graph(const GroupSpec& g, const ElemSet& s) {
  for (GroupElem x : s)
    if (!std::binary_search(s.begin(), s.end(), inverse(g, x))) return false;
  return true;
}

int count_4cycles_through_edge(const CayleyDigraph& cay, std::uint32_t u, std::uint32_t v) {
  const Digraph& d = cay.digraph();
  if (u >= d.size() || v >= d.size() || !d.has_arc(u, v) || !d.has_arc(v, u))
    throw PreconditionError("count_4cycles: {u, v} is not an edge");
  auto mutual = [&](std::uint32_t x) { return d.out(x) & d.in(x); };
  // A 4-cycle u-v-w-x-u through the edge is fixed by its pair (w, x).
  int cycles = 0;
  for (std::uint32_t w : vertices_of(mutual(v) & ~bit(u)))
    cycles += std::popcount(mutual(w) & mutual(u) & ~bit(v) & ~bit(w));
  return cycles;
}

std::string edge_list(const CayleyDigraph& cay) {
  std::ostringstream os;
  for (std::uint32_t u = 0; u < cay.size(); ++u)
    for (std::uint32_t v : vertices_of(cay.digraph().out(u))) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace nnn
