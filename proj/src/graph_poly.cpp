#include "confpoly/graph_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace confpoly {

namespace {

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

bool acyclic(const Multigraph& g, EdgeSubset s) {
  Dsu dsu(g.vertex_count());
  for (int i : s.indices()) {
    const auto& e = g.edge(i);
    if (e.tail == e.head) return false;
    if (!dsu.merge(e.tail, e.head)) return false;
  }
  return true;
}

int forest_size(const Multigraph& g) {
  return g.vertex_count() - components(g).count;
}

// Lex-ordered backtracking over acyclic subsets of the target size; this is
// the deletion/contraction recursion with the contraction carried by the DSU.
void forests_backtrack(const Multigraph& g, int idx, int chosen, int target, Dsu& dsu,
                       EdgeSubset cur, std::vector<EdgeSubset>& out) {
  if (chosen == target) {
    out.push_back(cur);
    return;
  }
  if (g.edge_count() - idx < target - chosen) return;
  for (int i = idx; i <= g.edge_count() - (target - chosen); ++i) {
    const auto& e = g.edge(i);
    if (e.tail == e.head) continue;
    Dsu next = dsu;
    if (!next.merge(e.tail, e.head)) continue;
    EdgeSubset with = cur;
    with.add(i);
    forests_backtrack(g, i + 1, chosen + 1, target, next, with, out);
  }
}

}  // namespace

bool is_conserved(const Multigraph& g, const Momentum& p) {
  if (static_cast<int>(p.size()) != g.vertex_count()) {
    throw MomentumError("momentum length must equal the vertex count");
  }
  Components comp = components(g);
  std::vector<Rational> sums(comp.count);
  for (int v = 0; v < g.vertex_count(); ++v) sums[comp.comp_of_vertex[v]] += p[v];
  for (const Rational& s : sums) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void require_conserved(const Multigraph& g, const Momentum& p) {
  if (!is_conserved(g, p)) {
    throw MomentumError("momentum is not conserved on every component");
  }
}

bool is_spanning_forest(const Multigraph& g, EdgeSubset f) {
  if (f.count() != forest_size(g)) return false;
  return acyclic(g, f);
}

std::vector<EdgeSubset> spanning_forests(const Multigraph& g) {
  const int n = g.edge_count();
  const int k = forest_size(g);
  if (n > 20) {
    std::vector<EdgeSubset> out;
    Dsu dsu(g.vertex_count());
    forests_backtrack(g, 0, 0, k, dsu, EdgeSubset(), out);
    return out;
  }
  const std::uint64_t total = comb_count(n, k);
  std::vector<std::uint8_t> ok(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
    EdgeSubset s = unrank_combination(n, k, static_cast<std::uint64_t>(r));
    ok[r] = acyclic(g, s) ? 1 : 0;
  }
  std::vector<EdgeSubset> out;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (ok[r]) out.push_back(unrank_combination(n, k, r));
  }
  return out;
}

std::vector<EdgeSubset> spanning_forests_serial(const Multigraph& g) {
  const int k = forest_size(g);
  std::vector<EdgeSubset> out;
  for (EdgeSubset s : all_combinations(g.edge_count(), k)) {
    if (acyclic(g, s)) out.push_back(s);
  }
  return out;
}

std::vector<EdgeSubset> quasi_spanning_forests(const Multigraph& g) {
  std::vector<EdgeSubset> out;
  for (EdgeSubset f : spanning_forests(g)) {
    for (int e : f.indices()) {
      EdgeSubset q = f;
      q.remove(e);
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeSubset> cut_sets(const Multigraph& g) {
  std::vector<EdgeSubset> out;
  for (EdgeSubset q : quasi_spanning_forests(g)) {
    out.push_back(q.complement(g.edge_count()));
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

QsfSplit qsf_split(const Multigraph& g, EdgeSubset qsf) {
  if (qsf.count() != forest_size(g) - 1 || !acyclic(g, qsf)) {
    throw ArgumentError("subset is not a quasi spanning forest");
  }
  Components under_g = components(g);
  Components under_q = components(g, qsf);
  // Exactly one component of G carries two trees of the quasi forest.
  std::vector<std::vector<int>> trees_per_comp(under_g.count);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& trees = trees_per_comp[under_g.comp_of_vertex[v]];
    int t = under_q.comp_of_vertex[v];
    if (std::find(trees.begin(), trees.end(), t) == trees.end()) trees.push_back(t);
  }
  int split_comp = -1;
  for (int c = 0; c < under_g.count; ++c) {
    if (trees_per_comp[c].size() == 2) {
      split_comp = c;
      break;
    }
  }
  if (split_comp == -1) throw ArgumentError("subset is not a quasi spanning forest");
  int tree_a = trees_per_comp[split_comp][0];
  int tree_b = trees_per_comp[split_comp][1];
  QsfSplit out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (under_q.comp_of_vertex[v] == tree_a) out.side_a.push_back(v);
    if (under_q.comp_of_vertex[v] == tree_b) out.side_b.push_back(v);
  }
  return out;
}

RatMatrix circuit_basis(const Multigraph& g, EdgeSubset forest) {
  if (!is_spanning_forest(g, forest)) {
    throw ArgumentError("subset is not a spanning forest");
  }
  const int n = g.edge_count();
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());  // (edge, other end)
  for (int i : forest.indices()) {
    const auto& e = g.edge(i);
    adj[e.tail].emplace_back(i, e.head);
    adj[e.head].emplace_back(i, e.tail);
  }
  std::vector<int> loose = forest.complement(n).indices();
  RatMatrix basis(static_cast<int>(loose.size()), n);
  for (std::size_t row = 0; row < loose.size(); ++row) {
    int e = loose[row];
    basis.at(static_cast<int>(row), e) = 1;
    int from = g.edge(e).head, to = g.edge(e).tail;
    if (from == to) continue;  // loop closes by itself
    // BFS through the forest; the path exists because both endpoints share a
    // component of G and the forest spans it.
    std::vector<int> via_edge(g.vertex_count(), -1), via_from(g.vertex_count(), -1);
    std::queue<int> bfs;
    bfs.push(from);
    via_edge[from] = -2;
    while (!bfs.empty() && via_edge[to] == -1) {
      int v = bfs.front();
      bfs.pop();
      for (auto [edge, other] : adj[v]) {
        if (via_edge[other] != -1) continue;
        via_edge[other] = edge;
        via_from[other] = v;
        bfs.push(other);
      }
    }
    if (via_edge[to] == -1) throw ArgumentError("forest does not span the graph");
    for (int v = to; v != from; v = via_from[v]) {
      int f = via_edge[v];
      // Step via_from[v] -> v traverses f forward when v is the head of f.
      basis.at(static_cast<int>(row), f) = g.edge(f).head == v ? 1 : -1;
    }
  }
  return basis;
}

Polynomial psi_forest_sum(const Multigraph& g) {
  const int n = g.edge_count();
  Polynomial psi(n);
  for (EdgeSubset f : spanning_forests(g)) {
    psi.add_term(Monomial::from_subset(f.complement(n)), 1);
  }
  return psi;
}

ChainVector momentum_lift(const Multigraph& g, const Momentum& p, EdgeSubset forest) {
  require_conserved(g, p);
  if (!is_spanning_forest(g, forest)) {
    throw ArgumentError("subset is not a spanning forest");
  }
  ChainVector q(g.edge_count());
  for (int f : forest.indices()) {
    EdgeSubset cut = forest;
    cut.remove(f);
    Components comp = components(g, cut);
    int head_side = comp.comp_of_vertex[g.edge(f).head];
    Rational flow = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (comp.comp_of_vertex[v] == head_side) flow += p[v];
    }
    q[f] = flow;
  }
  return q;
}

ChainVector momentum_lift(const Multigraph& g, const Momentum& p) {
  std::vector<EdgeSubset> forests = spanning_forests(g);
  return momentum_lift(g, p, forests.front());
}

Rational forest_momentum(const Multigraph& g, EdgeSubset qsf, const Momentum& p) {
  require_conserved(g, p);
  QsfSplit split = qsf_split(g, qsf);
  Rational m = 0;
  for (int v : split.side_a) m += p[v];
  return m;
}

Rational forest_momentum_from_chain(const Multigraph& g, EdgeSubset qsf, const ChainVector& q) {
  if (static_cast<int>(q.size()) != g.edge_count()) {
    throw ArgumentError("chain length must equal the edge count");
  }
  QsfSplit split = qsf_split(g, qsf);
  std::vector<char> in_a(g.vertex_count(), 0);
  for (int v : split.side_a) in_a[v] = 1;
  Rational m = 0;
  for (int e : qsf.complement(g.edge_count()).indices()) {
    int delta = in_a[g.edge(e).head] - in_a[g.edge(e).tail];
    if (delta == 1) m += q[e];
    if (delta == -1) m -= q[e];
  }
  return m;
}

Polynomial phi_cutset_sum(const Multigraph& g, const Momentum& p) {
  require_conserved(g, p);
  bool all_zero = std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); });
  if (all_zero) throw MomentumError("second graph polynomial needs a nonzero momentum");
  const int n = g.edge_count();
  Polynomial phi(n);
  for (EdgeSubset q : quasi_spanning_forests(g)) {
    Rational m = forest_momentum(g, q, p);
    if (m.is_zero()) continue;
    phi.add_term(Monomial::from_subset(q.complement(n)), m * m);
  }
  return phi;
}

}  // namespace confpoly
