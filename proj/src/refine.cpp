#include "walkcanon/refine.hpp"

#include <stdexcept>
#include <utility>

namespace walkcanon {

Coloring Coloring::uniform(int n) {
  if (n < 0) throw std::domain_error("coloring size must be non-negative");
  Coloring c;
  c.colors.assign(n, 0);
  c.color_count = n == 0 ? 0 : 1;
  return c;
}

Coloring Coloring::from_colors(std::vector<int> colors) {
  int max_color = -1;
  for (int c : colors) {
    if (c < 0) throw std::domain_error("color ids must be non-negative");
    max_color = std::max(max_color, c);
  }
  std::vector<char> used(max_color + 1, 0);
  for (int c : colors) used[c] = 1;
  for (int c = 0; c <= max_color; ++c)
    if (!used[c])
      throw std::domain_error("color ids must be dense (id " +
                              std::to_string(c) + " unused)");
  Coloring out;
  out.colors = std::move(colors);
  out.color_count = max_color + 1;
  return out;
}

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> cls(color_count);
  for (int v = 0; v < num_vertices(); ++v) cls[colors[v]].push_back(v);
  return cls;  // members ascend since v does
}

std::vector<int> Coloring::multiset_of(const std::vector<int>& ids) const {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int v : ids) out.push_back(colors[v]);
  std::sort(out.begin(), out.end());
  return out;
}

RefinementTrace refine(const Graph& g, const Coloring& init) {
  const int n = g.order();
  if (init.num_vertices() != n)
    throw std::domain_error("initial coloring size does not match graph");

  RefinementTrace trace;
  trace.rounds.push_back(init);

  // Classes only ever split, so "same class count as last round" is exactly
  // "partition unchanged"; and because the old color leads each signature,
  // a stable round reproduces the previous ids verbatim.
  for (int round = 1; round <= n + 1; ++round) {
    const Coloring& prev = trace.rounds.back();
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = prev.colors[v];
      sig[v].second = prev.multiset_of(g.neighbors(v));
    }
    Coloring next = coloring_from_labels(sig);
    const bool stable = next.color_count == prev.color_count;
    trace.rounds.push_back(std::move(next));
    if (stable) {
      trace.stable_at = round;
      return trace;
    }
  }
  throw std::logic_error("refinement failed to stabilize within n+1 rounds");
}

bool is_cr_discrete(const Graph& g, const Coloring& init) {
  return refine(g, init).stable().color_count == g.order();
}

bool is_cr_discrete(const Graph& g) {
  return is_cr_discrete(g, Coloring::uniform(g.order()));
}

bool cr_distinguishes(const Graph& g, const Coloring& init_g, const Graph& h,
                      const Coloring& init_h) {
  if (init_g.num_vertices() != g.order() ||
      init_h.num_vertices() != h.order())
    throw std::domain_error("initial coloring size does not match graph");

  DisjointUnion u = disjoint_union(g, h);
  std::vector<int> joint = init_g.colors;
  joint.insert(joint.end(), init_h.colors.begin(), init_h.colors.end());
  // Two dense palettes overlaid share ids by value, which is the point:
  // equally colored vertices on either side start out equal.
  const RefinementTrace trace = refine(u.graph, Coloring::from_colors(joint));
  return trace.stable().multiset_of(u.left.to) !=
         trace.stable().multiset_of(u.right.to);
}

bool cr_distinguishes(const Graph& g, const Graph& h) {
  return cr_distinguishes(g, Coloring::uniform(g.order()), h,
                          Coloring::uniform(h.order()));
}

PartitionOrder compare_partitions(const Coloring& p, const Coloring& q) {
  if (p.num_vertices() != q.num_vertices())
    throw std::domain_error("partitions cover different vertex sets");

  const auto refines = [](const Coloring& a, const Coloring& b) {
    // a refines b iff every a-class maps into a single b-class.
    std::vector<int> image(a.color_count, -1);
    for (int v = 0; v < a.num_vertices(); ++v) {
      int& img = image[a.colors[v]];
      if (img == -1)
        img = b.colors[v];
      else if (img != b.colors[v])
        return false;
    }
    return true;
  };

  const bool pq = refines(p, q);
  const bool qp = refines(q, p);
  if (pq && qp) return PartitionOrder::Equal;
  if (pq) return PartitionOrder::PRefinesQ;
  if (qp) return PartitionOrder::QRefinesP;
  return PartitionOrder::Incomparable;
}

}  // namespace walkcanon
