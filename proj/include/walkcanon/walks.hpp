#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "walkcanon/graph.hpp"

namespace walkcanon {

using BigInt = boost::multiprecision::cpp_int;

// w_k(x) = number of walks of length exactly k starting at x.  Machine-word
// table of the first k counts per vertex; row x is (w_1(x), ..., w_k(x)).
struct WalkSignature {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> counts;  // row-major, n*k entries

  std::span<const std::uint64_t> row(int x) const {
    return {counts.data() + static_cast<std::size_t>(x) * k,
            static_cast<std::size_t>(k)};
  }
};

// out[x] = sum of v[y] over y adjacent to x, i.e. one multiplication of v by
// the adjacency matrix.  Additions are overflow-checked.
std::vector<std::uint64_t> walk_step(const Graph& g,
                                     std::span<const std::uint64_t> v);

// Requires 1 <= k and n^k < 2^64 so no entry can overflow (w_k(x) <= (n-1)^k).
WalkSignature walk_signature(const Graph& g, int k);

enum class CanonOutcome { Discrete, GiveUp };

struct CanonLabeling {
  CanonOutcome outcome = CanonOutcome::GiveUp;
  WalkSignature labels;                         // always the k=3 table
  std::optional<std::pair<int, int>> witness;   // set iff GiveUp; see below
};

// Canonical labeling attempt from (w_1, w_2, w_3): degrees by popcount, then
// two adjacency-vector products.  Discrete when all rows differ; otherwise
// GiveUp with the first duplicate pair in lexicographic row order (ties by
// vertex id, so the witness is deterministic).
CanonLabeling canonize_walk3(const Graph& g);

// Exact n x n table: entry (x, j) counts length-j walks from x, j = 0..n-1.
// Column 0 is all ones, column j+1 is the adjacency matrix times column j.
struct WalkMatrix {
  int n = 0;
  std::vector<BigInt> entries;  // row-major

  const BigInt& at(int x, int j) const {
    return entries[static_cast<std::size_t>(x) * n + j];
  }
  std::span<const BigInt> row(int x) const {
    return {entries.data() + static_cast<std::size_t>(x) * n,
            static_cast<std::size_t>(n)};
  }
};

WalkMatrix walk_matrix(const Graph& g);

// First pair of identical rows in lexicographic row order, or nullopt.
std::optional<std::pair<int, int>> duplicate_walk_rows(const WalkMatrix& wm);

// All walk-matrix rows pairwise distinct.
bool is_wm_discrete(const Graph& g);

// Same order and equal multisets of walk-matrix rows (rows sorted
// lexicographically as unbounded-integer tuples, then compared entrywise).
bool wm_equivalent(const Graph& g, const Graph& h);

inline constexpr int kSingularityOrderCap = 128;

// Exact singularity of the walk matrix via fraction-free (Bareiss)
// elimination over arbitrary-precision integers.  Orders above `cap` are
// rejected to keep the cubic bignum elimination bounded.
bool is_wm_singular(const Graph& g, int cap = kSingularityOrderCap);

// Number of length-k walks from x to y, exact.
BigInt pair_walk_counts(const Graph& g, int x, int y, int k);

}  // namespace walkcanon
