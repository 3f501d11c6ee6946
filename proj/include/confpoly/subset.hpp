#ifndef CONFPOLY_SUBSET_HPP
#define CONFPOLY_SUBSET_HPP

#include <cstdint>
#include <vector>

#include "confpoly/errors.hpp"

namespace confpoly {

/// Subset of at most 64 indexed objects (edges or coordinates), stored as a
/// bitmask.  Index i is always the position in the owning ordered list.
struct EdgeSubset {
  std::uint64_t bits = 0;

  EdgeSubset() = default;
  explicit EdgeSubset(std::uint64_t b) : bits(b) {}

  static EdgeSubset of(std::initializer_list<int> idx) {
    EdgeSubset s;
    for (int i : idx) s.add(i);
    return s;
  }
  static EdgeSubset of(const std::vector<int>& idx) {
    EdgeSubset s;
    for (int i : idx) s.add(i);
    return s;
  }
  static EdgeSubset full(int n) {
    check_index_range(n - 1);
    return n == 0 ? EdgeSubset() : EdgeSubset(~std::uint64_t(0) >> (64 - n));
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) {
    check_index_range(i);
    bits |= std::uint64_t(1) << i;
  }
  void remove(int i) { bits &= ~(std::uint64_t(1) << i); }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }

  EdgeSubset complement(int n) const { return EdgeSubset(full(n).bits & ~bits); }
  EdgeSubset united(EdgeSubset o) const { return EdgeSubset(bits | o.bits); }
  EdgeSubset minus(EdgeSubset o) const { return EdgeSubset(bits & ~o.bits); }
  bool subset_of(EdgeSubset o) const { return (bits & ~o.bits) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint64_t b = bits; b;) {
      out.push_back(__builtin_ctzll(b));
      b &= b - 1;
    }
    return out;
  }

  friend bool operator==(EdgeSubset a, EdgeSubset b) { return a.bits == b.bits; }
  friend bool operator!=(EdgeSubset a, EdgeSubset b) { return a.bits != b.bits; }

 private:
  static void check_index_range(int i) {
    if (i >= 64) throw CapacityError("edge index beyond the 64-edge capacity");
  }
};

/// Lexicographic order on the sorted index sequences.  This is the canonical
/// order for every enumeration the library emits.
inline bool subset_lex_less(EdgeSubset a, EdgeSubset b) {
  std::uint64_t x = a.bits, y = b.bits;
  while (x && y) {
    int i = __builtin_ctzll(x), j = __builtin_ctzll(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;  // proper prefix comes first
}

/// C(n, k) guarded against 64-bit overflow; throws CapacityError beyond.
inline std::uint64_t comb_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > ~std::uint64_t(0)) throw CapacityError("binomial count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

/// Subset of {0..n-1} with k elements at position `rank` in lexicographic
/// order of the index sequences, rank in [0, C(n,k)).  Used to split subset
/// sweeps across threads deterministically.
inline EdgeSubset unrank_combination(int n, int k, std::uint64_t rank) {
  EdgeSubset s;
  int v = 0;
  for (int pos = 0; pos < k; ++pos, ++v) {
    for (;; ++v) {
      std::uint64_t with_v = comb_count(n - v - 1, k - pos - 1);
      if (rank < with_v) break;
      rank -= with_v;
    }
    s.add(v);
  }
  return s;
}

/// All k-subsets of {0..n-1} in lexicographic order (serial reference).
inline std::vector<EdgeSubset> all_combinations(int n, int k) {
  std::vector<EdgeSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(EdgeSubset::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace confpoly

#endif
