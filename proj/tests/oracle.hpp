#pragma once

// Brute-force reference implementations, test-suite only.  Everything here
// trades speed for being mechanically different from the library code: walks
// are literally enumerated one step at a time, isomorphism tries every
// permutation of the vertex set.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walkcanon/graph.hpp"

namespace oracle {

using walkcanon::Graph;

// spans carry no operator==, so tests materialize rows before comparing
template <class T>
std::vector<T> to_vec(std::span<const T> s) {
  return {s.begin(), s.end()};
}

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

namespace detail {

inline void dfs_walks(const Graph& g, int v, int remaining, int target,
                      bool ends_anywhere, std::uint64_t& count) {
  if (remaining == 0) {
    if (ends_anywhere || v == target) ++count;
    return;
  }
  for (int y : g.neighbors(v))
    dfs_walks(g, y, remaining - 1, target, ends_anywhere, count);
}

}  // namespace detail

// Number of length-k walks starting at x, by explicit enumeration.
inline std::uint64_t walks_from(const Graph& g, int x, int k) {
  std::uint64_t count = 0;
  detail::dfs_walks(g, x, k, -1, true, count);
  return count;
}

// Number of length-k walks from x to y, by explicit enumeration.
inline std::uint64_t walks_between(const Graph& g, int x, int y, int k) {
  std::uint64_t count = 0;
  detail::dfs_walks(g, x, k, y, false, count);
  return count;
}

// Tries all n! vertex bijections.  Keep n <= 9 or so.
inline bool isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x + 1; y < n && ok; ++y)
        ok = g.adjacent(x, y) == h.adjacent(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All 2^C(n,2) labeled graphs on n vertices; pair bits follow the same
// lexicographic order the generator uses.
inline std::vector<Graph> all_graphs(int n) {
  if (n > 5) throw std::length_error("enumeration meant for n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<Graph> out;
  out.reserve(1ULL << pairs.size());
  for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
