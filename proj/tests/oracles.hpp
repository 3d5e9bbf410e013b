// Test-only oracles, independent of the library's enumeration paths.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sgt/poly.hpp"
#include "sgt/sgraph.hpp"

namespace sgt_test {

inline bool acyclic_and_count(const sgt::SignedGraph& g, const std::vector<int>& labels, int* merges) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int m = 0;
  for (int lbl : labels) {
    const sgt::Edge& e = g.edge(lbl);
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    ++m;
  }
  if (merges) *merges = m;
  return true;
}

/// Every maximal spanning forest by direct subset filtering.
inline std::vector<sgt::LabelSet> brute_force_forests(const sgt::SignedGraph& g) {
  const int n = g.num_edges();
  const int target = g.rank();
  std::vector<sgt::LabelSet> out;
  std::vector<int> subset;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) subset.push_back(i + 1);
    if (static_cast<int>(subset.size()) != target) continue;
    int merges = 0;
    if (acyclic_and_count(g, subset, &merges) && merges == target) out.push_back(subset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Matrix-tree spanning tree count of a connected multigraph via fraction-free
/// elimination of the reduced Laplacian.
inline sgt::BigInt kirchhoff_tree_count(const sgt::SignedGraph& g) {
  const int n = g.num_vertices();
  if (n == 1) return 1;
  std::vector<std::vector<sgt::BigInt>> lap(static_cast<std::size_t>(n),
                                            std::vector<sgt::BigInt>(static_cast<std::size_t>(n), 0));
  for (const sgt::Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    lap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.u)] += 1;
    lap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.v)] += 1;
    lap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] -= 1;
    lap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] -= 1;
  }
  const int m = n - 1;  // drop the last row and column
  std::vector<std::vector<sgt::BigInt>> a(static_cast<std::size_t>(m),
                                          std::vector<sgt::BigInt>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  // Bareiss
  sgt::BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < m; ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
            prev;
      }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  sgt::BigInt det = a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
  return sign > 0 ? det : sgt::BigInt(-det);
}

/// The reconstructed four-vertex example graph used across the test suites:
/// labels 1..6 on a complete graph with signs (+,+,-,+,-,+).
inline sgt::SignedGraph example_k4() {
  using sgt::Edge;
  using sgt::Sign;
  return sgt::SignedGraph(4, {
                                 Edge{0, 1, Sign::plus, 1},
                                 Edge{2, 3, Sign::plus, 2},
                                 Edge{0, 2, Sign::minus, 3},
                                 Edge{1, 2, Sign::plus, 4},
                                 Edge{1, 3, Sign::minus, 5},
                                 Edge{0, 3, Sign::plus, 6},
                             });
}

/// The four-vertex, four-edge alternating Tait graph with distinguished edge
/// 4: three vertices, a bridge-free theta shape.
inline sgt::SignedGraph figure_eight_n() {
  using sgt::Edge;
  using sgt::Sign;
  return sgt::SignedGraph(3, {
                                 Edge{0, 1, Sign::plus, 1},
                                 Edge{1, 2, Sign::plus, 2},
                                 Edge{1, 2, Sign::plus, 3},
                                 Edge{0, 2, Sign::plus, 4},
                             });
}

}  // namespace sgt_test
