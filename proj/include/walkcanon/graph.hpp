#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace walkcanon {

// Simple undirected graph on vertices 0..n-1 with adjacency kept as packed
// bit rows (64 vertices per word).  Edges are set-like: adding one twice is a
// no-op.  Self-loops are rejected at the only mutation site, so rows stay
// symmetric with a zero diagonal by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  void add_edge(int x, int y);
  bool adjacent(int x, int y) const;

  int degree(int x) const;
  std::vector<int> neighbors(int x) const;

  // Raw bit row for x; the hot kernels iterate this directly.
  std::span<const std::uint64_t> row(int x) const {
    return {bits_.data() + static_cast<std::size_t>(x) * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int x) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Injective relabeling of one graph's vertex ids into another's id space.
struct VertexMap {
  std::vector<int> to;
  int operator()(int v) const { return to[v]; }
};

struct DisjointUnion {
  Graph graph;
  VertexMap left;   // ids of the first operand inside graph
  VertexMap right;  // ids of the second operand
};

DisjointUnion disjoint_union(const Graph& g, const Graph& h);

// Sorted ascending.
std::vector<int> degree_sequence(const Graph& g);

// Relabeled copy: vertex v of g becomes perm[v].  perm must be a permutation
// of 0..n-1.
Graph permute(const Graph& g, const std::vector<int>& perm);

// G(n,p): unordered pairs {x,y}, x < y, visited in lexicographic order; pair
// gets an edge when the next [0,1) draw of xoshiro256**(seed) lands below p.
// Same (n, p, seed) gives the same graph on any platform.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace walkcanon
