#include "nnn/digraph.hpp"

#include <bit>
#include <string>

#include "nnn/error.hpp"

namespace nnn {

Digraph::Digraph(std::size_t vertices) : out_(vertices, 0), in_(vertices, 0) {
  if (vertices == 0) throw InvalidArgument("digraph needs at least one vertex");
  if (vertices > kMaxVertices)
    throw CapExceeded("digraphs are limited to " + std::to_string(kMaxVertices) + " vertices");
}

void Digraph::add_arc(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw InvalidArgument("arc endpoint out of range");
  out_[u] |= bit(v);
  in_[v] |= bit(u);
}

std::size_t Digraph::arc_count() const {
  std::size_t count = 0;
  for (VertexMask row : out_) count += std::popcount(row);
  return count;
}

bool Digraph::is_symmetric() const { return out_ == in_; }

bool Digraph::is_weakly_connected() const {
  VertexMask seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexMask next = 0;
    for (std::uint32_t v : vertices_of(frontier)) next |= out_[v] | in_[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(size());
}

bool Digraph::is_automorphism(const Perm& p) const {
  if (p.degree() != size()) return false;
  for (std::size_t u = 0; u < size(); ++u) {
    VertexMask mapped = 0;
    for (std::uint32_t v : vertices_of(out_[u])) mapped |= bit(p[v]);
    if (mapped != out_[p[static_cast<Point>(u)]]) return false;
  }
  return true;
}

std::vector<std::uint32_t> vertices_of(VertexMask m) {
  std::vector<std::uint32_t> out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace nnn
