#include "walkcanon/graph.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "walkcanon/rng.hpp"

namespace walkcanon {

Graph::Graph(int n) {
  if (n < 0) throw std::domain_error("graph order must be non-negative");
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int x) const {
  if (x < 0 || x >= n_)
    throw std::domain_error("vertex " + std::to_string(x) +
                            " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int x, int y) {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw std::domain_error("self-loops are not allowed");
  std::uint64_t& wx = bits_[x * words_ + y / 64];
  const std::uint64_t mx = 1ULL << (y % 64);
  if (wx & mx) return;  // already present
  wx |= mx;
  bits_[y * words_ + x / 64] |= 1ULL << (x % 64);
  ++edges_;
}

bool Graph::adjacent(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  return (bits_[x * words_ + y / 64] >> (y % 64)) & 1;
}

int Graph::degree(int x) const {
  check_vertex(x);
  int d = 0;
  for (std::uint64_t w : row(x)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int x) const {
  check_vertex(x);
  std::vector<int> out;
  const auto r = row(x);
  for (std::size_t wi = 0; wi < r.size(); ++wi) {
    std::uint64_t w = r[wi];
    while (w) {
      out.push_back(static_cast<int>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int x = 0; x < g.order(); ++x) d[x] = g.degree(x);
  std::sort(d.begin(), d.end());
  return d;
}

DisjointUnion disjoint_union(const Graph& g, const Graph& h) {
  DisjointUnion u;
  u.graph = Graph(g.order() + h.order());
  u.left.to.resize(g.order());
  u.right.to.resize(h.order());
  for (int x = 0; x < g.order(); ++x) u.left.to[x] = x;
  for (int x = 0; x < h.order(); ++x) u.right.to[x] = g.order() + x;
  for (int x = 0; x < g.order(); ++x)
    for (int y : g.neighbors(x))
      if (x < y) u.graph.add_edge(x, y);
  for (int x = 0; x < h.order(); ++x)
    for (int y : h.neighbors(x))
      if (x < y) u.graph.add_edge(u.right(x), u.right(y));
  return u;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::domain_error("permutation size does not match graph order");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::domain_error("not a permutation of 0..n-1");
    seen[v] = 1;
  }
  Graph out(n);
  for (int x = 0; x < n; ++x)
    for (int y : g.neighbors(x))
      if (x < y) out.add_edge(perm[x], perm[y]);
  return out;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::domain_error("graph order must be non-negative");
  if (!(p >= 0.0 && p <= 1.0))  // also rejects NaN
    throw std::domain_error("edge probability must lie in [0,1]");
  Graph g(n);
  Xoshiro256ss rng(seed);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rng.next_unit() < p) g.add_edge(x, y);
  return g;
}

}  // namespace walkcanon
