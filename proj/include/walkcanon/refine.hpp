#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "walkcanon/graph.hpp"

namespace walkcanon {

// Vertex coloring with dense color ids 0..color_count-1 (every id occupied).
struct Coloring {
  std::vector<int> colors;
  int color_count = 0;

  static Coloring uniform(int n);
  // Validates density (each id in [0, max] occurs at least once).
  static Coloring from_colors(std::vector<int> colors);

  int num_vertices() const { return static_cast<int>(colors.size()); }
  // Color classes; class lists and their members are sorted.
  std::vector<std::vector<int>> classes() const;
  // Sorted color ids of the vertices selected by `ids` (a multiset).
  std::vector<int> multiset_of(const std::vector<int>& ids) const;
};

// Dense coloring grouping equal labels; ids follow sorted label order, so the
// result is independent of input order.
template <class Label>
Coloring coloring_from_labels(const std::vector<Label>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (labels[a] < labels[b]) return true;
    if (labels[b] < labels[a]) return false;
    return a < b;
  });
  Coloring c;
  c.colors.assign(n, 0);
  int next = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || labels[idx[i - 1]] < labels[idx[i]]) ++next;
    c.colors[idx[i]] = next;
  }
  c.color_count = n == 0 ? 0 : next + 1;
  return c;
}

// Rounds C_0..C_t of color refinement.  Round i recolors every vertex by the
// pair (previous color, sorted multiset of neighbor colors) and renames the
// resulting signatures to dense ids in sorted-signature order, which makes
// colors comparable across a shared run.  stable_at = t is the first index
// whose partition equals the previous round's.
struct RefinementTrace {
  std::vector<Coloring> rounds;
  int stable_at = 0;

  const Coloring& stable() const { return rounds.back(); }
  // C_k, clamped to the stable coloring for k past stabilization.
  const Coloring& round(int k) const {
    return rounds[static_cast<std::size_t>(std::min(k, stable_at))];
  }
};

RefinementTrace refine(const Graph& g, const Coloring& init);

// Stable partition is all singletons.
bool is_cr_discrete(const Graph& g, const Coloring& init);
bool is_cr_discrete(const Graph& g);  // from the uniform coloring

// Refines the disjoint union of (g, init_g) and (h, init_h) — equal input
// color ids mean the same color on both sides — and reports whether the two
// sides end up with different stable color multisets.
bool cr_distinguishes(const Graph& g, const Coloring& init_g, const Graph& h,
                      const Coloring& init_h);
bool cr_distinguishes(const Graph& g, const Graph& h);  // uniform colorings

enum class PartitionOrder { Equal, PRefinesQ, QRefinesP, Incomparable };

// Refinement order of two partitions of the same vertex set (strict in the
// PRefinesQ / QRefinesP cases).
PartitionOrder compare_partitions(const Coloring& p, const Coloring& q);

}  // namespace walkcanon
