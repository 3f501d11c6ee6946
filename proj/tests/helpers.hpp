#ifndef CONFPOLY_TESTS_HELPERS_HPP
#define CONFPOLY_TESTS_HELPERS_HPP

#include <vector>

#include "confpoly/matrix.hpp"
#include "confpoly/multigraph.hpp"
#include "confpoly/polynomial.hpp"

namespace confpoly::testing {

inline RatMatrix mat(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
  }
  return m;
}

/// Polynomial from (exponent vector, coefficient) pairs.
inline Polynomial poly_from_terms(
    int nvars, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  Polynomial p(nvars);
  for (const auto& [exps, c] : terms) {
    std::vector<Monomial::Entry> entries;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] != 0) entries.emplace_back(static_cast<int>(v), exps[v]);
    }
    p.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return p;
}

/// Test oracle: textbook cofactor expansion along the first row.
inline Rational cofactor_det(const RatMatrix& m) {
  if (m.rows != m.cols) throw ArgumentError("oracle needs a square matrix");
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m.at(0, 0);
  Rational acc = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (m.at(0, j).is_zero()) continue;
    RatMatrix minor(m.rows - 1, m.cols - 1);
    for (int r = 1; r < m.rows; ++r) {
      int cc = 0;
      for (int c = 0; c < m.cols; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Rational term = m.at(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Test oracle: spanning forests by exhaustive subset search with its own
/// DFS-based component and acyclicity logic (no union-find).
inline std::vector<EdgeSubset> brute_forests(const Multigraph& g) {
  const int n = g.edge_count();
  const int v = g.vertex_count();
  auto component_stats = [&](EdgeSubset use) {
    // per component: (vertex count, edge count), discovered by DFS
    std::vector<std::vector<std::pair<int, int>>> adj(v);  // (other, edge)
    int loops_present = 0;
    for (int i : use.indices()) {
      const auto& e = g.edge(i);
      if (e.tail == e.head) {
        ++loops_present;
        continue;
      }
      adj[e.tail].push_back({e.head, i});
      adj[e.head].push_back({e.tail, i});
    }
    std::vector<int> seen(v, 0);
    int comps = 0;
    bool acyclic = loops_present == 0;
    for (int s = 0; s < v; ++s) {
      if (seen[s]) continue;
      ++comps;
      int vertices = 0, edge_slots = 0;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        ++vertices;
        for (auto [other, edge] : adj[cur]) {
          ++edge_slots;  // each non-loop edge counted from both ends
          if (!seen[other]) {
            seen[other] = 1;
            stack.push_back(other);
          }
        }
      }
      // a connected component with e edges on w vertices is a tree iff e == w-1
      if (edge_slots / 2 != vertices - 1) acyclic = false;
    }
    return std::tuple{comps, acyclic};
  };
  auto [full_comps, full_acyclic] = component_stats(EdgeSubset::full(n));
  (void)full_acyclic;
  const int target = v - full_comps;
  std::vector<EdgeSubset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    EdgeSubset s(bits);
    if (s.count() != target) continue;
    auto [comps, acyclic] = component_stats(s);
    (void)comps;
    // acyclic subsets of the target size are exactly the spanning forests
    if (acyclic) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

}  // namespace confpoly::testing

#endif
