#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oracle.hpp"
#include "walkcanon/refine.hpp"
#include "walkcanon/rng.hpp"
#include "walkcanon/walks.hpp"

using namespace walkcanon;

namespace {

// partition of {0..n-1} as sorted list of sorted classes, for fixture checks
std::vector<std::vector<int>> classes_of(const Coloring& c) {
  auto cl = c.classes();
  for (auto& v : cl) std::sort(v.begin(), v.end());
  std::sort(cl.begin(), cl.end());
  return cl;
}

Graph permuted_copy(const Graph& g, std::uint64_t seed, std::vector<int>& perm) {
  const int n = g.order();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), 0);
  Xoshiro256ss rng(seed);
  for (int j = n - 1; j > 0; --j)
    std::swap(perm[j], perm[rng.next() % (j + 1)]);
  return permute(g, perm);
}

}  // namespace

TEST_CASE("Coloring construction and validation") {
  const Coloring u = Coloring::uniform(4);
  CHECK(u.color_count == 1);
  CHECK(u.colors == std::vector<int>{0, 0, 0, 0});

  const Coloring c = Coloring::from_colors({1, 0, 1});
  CHECK(c.color_count == 2);
  CHECK(classes_of(c) == std::vector<std::vector<int>>{{0, 2}, {1}});

  CHECK_THROWS_AS(Coloring::from_colors({0, 2}), std::domain_error);  // gap
  CHECK_THROWS_AS(Coloring::from_colors({-1, 0}), std::domain_error);
  CHECK_NOTHROW(Coloring::from_colors({}));
}

TEST_CASE("refinement of a path: endpoints split from the middle") {
  const Graph p3 = oracle::path(3);
  const RefinementTrace tr = refine(p3, Coloring::uniform(3));
  CHECK(tr.stable_at == 2);
  CHECK(classes_of(tr.stable()) == std::vector<std::vector<int>>{{0, 2}, {1}});
  // the partition stops changing one round before the ids are re-confirmed
  CHECK(classes_of(tr.round(1)) == classes_of(tr.round(2)));
  CHECK(classes_of(tr.round(0)) == std::vector<std::vector<int>>{{0, 1, 2}});
  // round() clamps past the stable point
  CHECK(tr.round(50).colors == tr.stable().colors);
}

TEST_CASE("refinement leaves vertex-transitive graphs uniform") {
  for (const Graph& g : {oracle::cycle(4), oracle::cycle(7), oracle::complete(5)}) {
    const RefinementTrace tr = refine(g, Coloring::uniform(g.order()));
    CHECK(tr.stable().color_count == 1);
    CHECK(tr.stable_at == 1);
    CHECK_FALSE(is_cr_discrete(g));
  }
}

TEST_CASE("each refinement round refines the previous one") {
  for (int i = 0; i < 30; ++i) {
    const int n = 4 + static_cast<int>(sample_seed(41, i) % 20);
    const Graph g = random_gnp(n, 0.4, sample_seed(42, i));
    const RefinementTrace tr = refine(g, Coloring::uniform(n));
    for (std::size_t r = 1; r < tr.rounds.size(); ++r) {
      const PartitionOrder ord =
          compare_partitions(tr.rounds[r], tr.rounds[r - 1]);
      CHECK((ord == PartitionOrder::Equal || ord == PartitionOrder::PRefinesQ));
    }
    // stable point: last two rounds carry the same partition
    CHECK(compare_partitions(tr.rounds[tr.stable_at],
                             tr.rounds[tr.stable_at - 1]) == PartitionOrder::Equal);
  }
}

TEST_CASE("a seeded coloring is respected and only ever split") {
  const Graph c6 = oracle::cycle(6);
  const Coloring init = Coloring::from_colors({1, 0, 0, 0, 0, 0});
  const RefinementTrace tr = refine(c6, init);
  // distance from vertex 0 determines the class
  CHECK(classes_of(tr.stable()) ==
        std::vector<std::vector<int>>{{0}, {1, 5}, {2, 4}, {3}});
  CHECK(compare_partitions(tr.stable(), init) == PartitionOrder::PRefinesQ);
}

TEST_CASE("compare_partitions fixtures") {
  const Coloring a = Coloring::from_colors({0, 0, 1, 1});
  const Coloring b = Coloring::from_colors({1, 1, 0, 0});  // same partition
  const Coloring f = Coloring::from_colors({0, 1, 2, 2});
  const Coloring x = Coloring::from_colors({0, 1, 0, 1});
  CHECK(compare_partitions(a, b) == PartitionOrder::Equal);
  CHECK(compare_partitions(f, a) == PartitionOrder::PRefinesQ);
  CHECK(compare_partitions(a, f) == PartitionOrder::QRefinesP);
  CHECK(compare_partitions(a, x) == PartitionOrder::Incomparable);
  CHECK_THROWS_AS(compare_partitions(a, Coloring::uniform(3)), std::domain_error);
}

TEST_CASE("refinement is isomorphism-invariant") {
  for (int i = 0; i < 25; ++i) {
    const int n = 4 + static_cast<int>(sample_seed(43, i) % 12);
    const Graph g = random_gnp(n, 0.5, sample_seed(44, i));
    std::vector<int> perm;
    const Graph h = permuted_copy(g, sample_seed(45, i), perm);
    const Coloring sg = refine(g, Coloring::uniform(n)).stable();
    const Coloring sh = refine(h, Coloring::uniform(n)).stable();
    CHECK(sg.color_count == sh.color_count);
    // class sizes agree, and corresponding vertices land in same-size classes
    std::vector<int> size_g(sg.color_count, 0), size_h(sh.color_count, 0);
    for (int v = 0; v < n; ++v) ++size_g[sg.colors[v]];
    for (int v = 0; v < n; ++v) ++size_h[sh.colors[v]];
    std::sort(size_g.begin(), size_g.end());
    std::sort(size_h.begin(), size_h.end());
    CHECK(size_g == size_h);
    CHECK_FALSE(cr_distinguishes(g, h));
  }
}

TEST_CASE("cr_distinguishes separates graphs with different degree sequences") {
  CHECK(cr_distinguishes(oracle::path(3), oracle::complete(3)));
  CHECK(cr_distinguishes(oracle::path(4),
                         oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(cr_distinguishes(oracle::cycle(4), oracle::cycle(4)));
}

TEST_CASE("cr_distinguishes cannot tell a hexagon from two triangles") {
  // the standard blind spot: both are 2-regular, so refinement never splits
  const Graph two_triangles = oracle::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(cr_distinguishes(oracle::cycle(6), two_triangles));
  CHECK_FALSE(oracle::isomorphic(oracle::cycle(6), two_triangles));
}

TEST_CASE("round-k colors determine the first k walk counts") {
  // vertices sharing a round-k color must share (w1..wk); equal stable
  // colors imply equal walk-count prefixes of every length
  for (int i = 0; i < 20; ++i) {
    const int n = 5 + static_cast<int>(sample_seed(46, i) % 26);
    const Graph g = random_gnp(n, 0.35, sample_seed(47, i));
    const RefinementTrace tr = refine(g, Coloring::uniform(n));
    const WalkMatrix wm = walk_matrix(g);
    for (int k = 1; k < n; ++k) {
      const int round = std::min(k, tr.stable_at);
      const Coloring& ck = tr.round(round);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (ck.colors[x] != ck.colors[y]) continue;
          for (int j = 1; j <= k; ++j)
            REQUIRE(wm.at(x, j) == wm.at(y, j));
        }
    }
  }
}

TEST_CASE("walk-row partition is coarser than the stable refinement partition") {
  for (int i = 0; i < 20; ++i) {
    const int n = 5 + static_cast<int>(sample_seed(48, i) % 26);
    const Graph g = random_gnp(n, 0.35, sample_seed(49, i));
    const Coloring stable = refine(g, Coloring::uniform(n)).stable();
    const WalkMatrix wm = walk_matrix(g);
    std::vector<std::vector<BigInt>> rows;
    for (int x = 0; x < n; ++x)
      rows.emplace_back(wm.row(x).begin(), wm.row(x).end());
    const Coloring by_rows = coloring_from_labels(rows);
    const PartitionOrder ord = compare_partitions(stable, by_rows);
    CHECK((ord == PartitionOrder::Equal || ord == PartitionOrder::PRefinesQ));
  }
}

TEST_CASE("inequivalent walk matrices are always distinguished by refinement") {
  int separated = 0;
  for (int i = 0; i < 150; ++i) {
    const int n = 4 + static_cast<int>(sample_seed(50, i) % 10);
    const Graph g = random_gnp(n, 0.4, sample_seed(51, i));
    const Graph h = random_gnp(n, 0.4, sample_seed(52, i));
    if (wm_equivalent(g, h)) continue;
    REQUIRE(cr_distinguishes(g, h));
    ++separated;
  }
  CHECK(separated > 100);
}

TEST_CASE("discrete refinement plus no separation implies isomorphism") {
  int checked = 0;
  for (int i = 0; checked < 25 && i < 400; ++i) {
    const int n = 5 + static_cast<int>(sample_seed(53, i) % 3);  // 5..7
    const Graph g = random_gnp(n, 0.45, sample_seed(54, i));
    if (!is_cr_discrete(g)) continue;
    std::vector<int> perm;
    const Graph h = permuted_copy(g, sample_seed(55, i), perm);
    CHECK_FALSE(cr_distinguishes(g, h));
    CHECK(oracle::isomorphic(g, h));
    ++checked;
  }
  CHECK(checked == 25);
}

TEST_CASE("coloring_from_labels orders colors by sorted label") {
  const std::vector<std::string> labels{"pear", "apple", "pear", "fig"};
  const Coloring c = coloring_from_labels(labels);
  CHECK(c.colors == std::vector<int>{2, 0, 2, 1});
  CHECK(c.color_count == 3);
}
