#pragma once

#include <cstdint>
#include <string>

#include "nnn/digraph.hpp"
#include "nnn/group.hpp"

namespace nnn {

/// Cay(G, S): vertex set G, arcs (g, s g) for g in G and s in S. Vertices are
/// element codes.
class CayleyDigraph {
 public:
  /// Throws PreconditionError when 1 is in S.
  CayleyDigraph(const GroupSpec& group, ElemSet connection_set);

  const GroupSpec& group() const { return group_; }
  const ElemSet& connection_set() const { return set_; }
  const Digraph& digraph() const { return digraph_; }
  std::size_t size() const { return digraph_.size(); }
  bool has_arc(std::uint32_t u, std::uint32_t v) const { return digraph_.has_arc(u, v); }

 private:
  GroupSpec group_;
  ElemSet set_;
  Digraph digraph_;
};

inline CayleyDigraph build(const GroupSpec& g, ElemSet s) { return CayleyDigraph(g, std::move(s)); }

/// <S> = G, cross-checked against weak connectivity of the arc set.
bool is_connected(const CayleyDigraph& cay);

/// S = S^-1.
bool is_graph(const GroupSpec& g, const ElemSet& s);

/// 4-cycles of the underlying graph through the edge {u, v}, each cycle once.
/// Every edge of the cycle must be present in both directions.
int count_4cycles_through_edge(const CayleyDigraph& cay, std::uint32_t u, std::uint32_t v);

/// One "u v" line per arc, vertices as element codes.
std::string edge_list(const CayleyDigraph& cay);

}  // namespace nnn
