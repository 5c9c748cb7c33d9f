#include "walkcanon/walks.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace walkcanon {

namespace {

// True iff n^k fits in uint64, i.e. no walk count of length <= k can overflow
// (each of the k steps picks one of at most n-1 neighbors).
bool pow_fits_u64(int n, int k) {
  if (n <= 1) return true;
  std::uint64_t acc = 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < k; ++i) {
    if (acc > limit / n) return false;
    acc *= static_cast<std::uint64_t>(n);
  }
  return true;
}

// out[x] = sum over neighbors; plain uint64 with an explicit overflow check.
void step_u64(const Graph& g, const std::uint64_t* v, std::uint64_t* out) {
  const int n = g.order();
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int x = 0; x < n; ++x) {
    std::uint64_t acc = 0;
    const auto r = g.row(x);
    for (std::size_t wi = 0; wi < r.size(); ++wi) {
      std::uint64_t w = r[wi];
      const std::size_t base = wi * 64;
      while (w) {
        const std::uint64_t add = v[base + std::countr_zero(w)];
        if (add > kMax - acc)
          throw std::overflow_error("walk count exceeds 64 bits");
        acc += add;
        w &= w - 1;
      }
    }
    out[x] = acc;
  }
}

void step_big(const Graph& g, const std::vector<BigInt>& v,
              std::vector<BigInt>& out) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    BigInt acc = 0;
    const auto r = g.row(x);
    for (std::size_t wi = 0; wi < r.size(); ++wi) {
      std::uint64_t w = r[wi];
      const std::size_t base = wi * 64;
      while (w) {
        acc += v[base + std::countr_zero(w)];
        w &= w - 1;
      }
    }
    out[x] = std::move(acc);
  }
}

// First duplicate row under lexicographic row order, ties broken by vertex
// id.  row(a) must return something std::ranges::equal / lexicographical_
// compare can consume.
template <class RowOf>
std::optional<std::pair<int, int>> first_duplicate(int n, RowOf row) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto ra = row(a);
    const auto rb = row(b);
    if (std::ranges::lexicographical_compare(ra, rb)) return true;
    if (std::ranges::lexicographical_compare(rb, ra)) return false;
    return a < b;
  });
  for (int i = 0; i + 1 < n; ++i)
    if (std::ranges::equal(row(idx[i]), row(idx[i + 1])))
      return std::make_pair(idx[i], idx[i + 1]);
  return std::nullopt;
}

}  // namespace

std::vector<std::uint64_t> walk_step(const Graph& g,
                                     std::span<const std::uint64_t> v) {
  if (static_cast<int>(v.size()) != g.order())
    throw std::domain_error("vector length does not match graph order");
  std::vector<std::uint64_t> out(v.size());
  step_u64(g, v.data(), out.data());
  return out;
}

WalkSignature walk_signature(const Graph& g, int k) {
  if (k < 1) throw std::domain_error("walk signature needs k >= 1");
  const int n = g.order();
  if (!pow_fits_u64(n, k))
    throw std::overflow_error("n^k exceeds 64 bits; use walk_matrix instead");

  WalkSignature sig;
  sig.n = n;
  sig.k = k;
  sig.counts.assign(static_cast<std::size_t>(n) * k, 0);

  // w_1 is the degree row; each further column is one adjacency product.
  std::vector<std::uint64_t> cur(n), next(n);
  for (int x = 0; x < n; ++x) {
    int d = 0;
    for (std::uint64_t w : g.row(x)) d += std::popcount(w);
    cur[x] = static_cast<std::uint64_t>(d);
    sig.counts[static_cast<std::size_t>(x) * k] = cur[x];
  }
  for (int j = 1; j < k; ++j) {
    step_u64(g, cur.data(), next.data());
    cur.swap(next);
    for (int x = 0; x < n; ++x)
      sig.counts[static_cast<std::size_t>(x) * k + j] = cur[x];
  }
  return sig;
}

CanonLabeling canonize_walk3(const Graph& g) {
  CanonLabeling result;
  result.labels = walk_signature(g, 3);
  const auto dup =
      first_duplicate(g.order(), [&](int x) { return result.labels.row(x); });
  if (dup) {
    result.outcome = CanonOutcome::GiveUp;
    result.witness = *dup;
  } else {
    result.outcome = CanonOutcome::Discrete;
  }
  return result;
}

WalkMatrix walk_matrix(const Graph& g) {
  const int n = g.order();
  WalkMatrix wm;
  wm.n = n;
  wm.entries.assign(static_cast<std::size_t>(n) * n, BigInt(0));

  std::vector<BigInt> cur(n, BigInt(1)), next(n);
  for (int x = 0; x < n; ++x) wm.entries[static_cast<std::size_t>(x) * n] = 1;
  for (int j = 1; j < n; ++j) {
    step_big(g, cur, next);
    cur.swap(next);
    for (int x = 0; x < n; ++x)
      wm.entries[static_cast<std::size_t>(x) * n + j] = cur[x];
  }
  return wm;
}

std::optional<std::pair<int, int>> duplicate_walk_rows(const WalkMatrix& wm) {
  return first_duplicate(wm.n, [&](int x) { return wm.row(x); });
}

bool is_wm_discrete(const Graph& g) {
  return !duplicate_walk_rows(walk_matrix(g)).has_value();
}

bool wm_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  const int n = g.order();
  const auto rows_of = [n](const Graph& x) {
    const WalkMatrix wm = walk_matrix(x);
    std::vector<std::vector<BigInt>> rows(n);
    for (int v = 0; v < n; ++v) {
      const auto r = wm.row(v);
      rows[v].assign(r.begin(), r.end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  return rows_of(g) == rows_of(h);
}

bool is_wm_singular(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap)
    throw std::length_error(
        "order exceeds the exact-elimination cap of " + std::to_string(cap));
  if (n == 0) return false;

  WalkMatrix wm = walk_matrix(g);
  auto at = [&](int i, int j) -> BigInt& {
    return wm.entries[static_cast<std::size_t>(i) * n + j];
  };

  // Bareiss fraction-free elimination: every division below is exact, and the
  // final pivot is +/- det of the integer matrix.
  BigInt prev = 1;
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (at(rows[i], k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return true;  // a zero column: determinant vanishes
    std::swap(rows[k], rows[pivot]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        at(rows[i], j) = (at(rows[i], j) * at(rows[k], k) -
                          at(rows[i], k) * at(rows[k], j)) /
                         prev;
      at(rows[i], k) = 0;
    }
    prev = at(rows[k], k);
  }
  return at(rows[n - 1], n - 1) == 0;
}

BigInt pair_walk_counts(const Graph& g, int x, int y, int k) {
  const int n = g.order();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw std::domain_error("vertex out of range");
  if (k < 0) throw std::domain_error("walk length must be non-negative");
  std::vector<BigInt> cur(n, BigInt(0)), next(n);
  cur[x] = 1;
  for (int step = 0; step < k; ++step) {
    step_big(g, cur, next);
    cur.swap(next);
  }
  return cur[y];
}

}  // namespace walkcanon
