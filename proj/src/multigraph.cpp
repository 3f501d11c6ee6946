#include "confpoly/multigraph.hpp"

#include <numeric>

namespace confpoly {

namespace {

// Plain union-find, path halving, union by size.
struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 1) throw ArgumentError("graph needs at least one vertex");
  if (edges_.size() > 64) throw CapacityError("graph beyond the 64-edge capacity");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
      throw ArgumentError("edge endpoint out of range");
    }
  }
}

Multigraph Multigraph::with_flipped_edges(EdgeSubset flip) const {
  std::vector<Edge> es = edges_;
  for (int i : flip.indices()) {
    if (i >= static_cast<int>(es.size())) throw ArgumentError("flip index out of range");
    std::swap(es[i].tail, es[i].head);
  }
  return Multigraph(vertex_count_, std::move(es));
}

Components components(const Multigraph& g, EdgeSubset use) {
  Dsu dsu(g.vertex_count());
  for (int i : use.indices()) {
    if (i >= g.edge_count()) throw ArgumentError("edge index out of range");
    const auto& e = g.edge(i);
    dsu.merge(e.tail, e.head);
  }
  Components out;
  out.comp_of_vertex.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int root = dsu.find(v);
    if (out.comp_of_vertex[root] == -1) out.comp_of_vertex[root] = out.count++;
    out.comp_of_vertex[v] = out.comp_of_vertex[root];
  }
  return out;
}

Components components(const Multigraph& g) {
  return components(g, EdgeSubset::full(g.edge_count()));
}

RatMatrix boundary_matrix(const Multigraph& g) {
  RatMatrix d(g.vertex_count(), g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (e.tail == e.head) continue;
    d.at(e.head, i) += 1;
    d.at(e.tail, i) -= 1;
  }
  return d;
}

int betti_number(const Multigraph& g) {
  return g.edge_count() - g.vertex_count() + components(g).count;
}

}  // namespace confpoly
