#include "walkcanon/gadget.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "walkcanon/walks.hpp"

namespace walkcanon {

namespace {

constexpr int kSide = 4;

int cell_id(int a, int b) {
  return kSide * ((a % kSide + kSide) % kSide) + ((b % kSide + kSide) % kSide);
}

// Anchor cells.  With connection set {±(1,0),±(0,1),±(1,1)} these satisfy:
// red~blue, (red,green) a Q-pair, (blue,green) a D-pair — checked again at
// runtime by colored_copies().
constexpr int kRedCellA = 1, kRedCellB = 1;     // (1,1)
constexpr int kBlueCellA = 2, kBlueCellB = 2;   // (2,2)
constexpr int kGreenCellA = 3, kGreenCellB = 1; // (3,1)

int common_neighbor_ids(const Graph& g, int u, int v, int out[2]) {
  int count = 0;
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  for (std::size_t wi = 0; wi < ru.size(); ++wi) {
    std::uint64_t w = ru[wi] & rv[wi];
    while (w) {
      if (count < 2) out[count] = static_cast<int>(wi * 64 + std::countr_zero(w));
      ++count;
      w &= w - 1;
    }
  }
  return count;
}

}  // namespace

Graph shrikhande() {
  Graph g(16);
  const int deltas[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < kSide; ++a)
    for (int b = 0; b < kSide; ++b)
      for (const auto& d : deltas)
        g.add_edge(cell_id(a, b), cell_id(a + d[0], b + d[1]));
  return g;
}

PairType classify_pair(const Graph& g, int u, int v) {
  if (u == v) throw std::domain_error("pair must consist of two vertices");
  if (g.adjacent(u, v)) return PairType::Adjacent;  // also range-checks
  int common[2];
  if (common_neighbor_ids(g, u, v, common) != 2) return PairType::Other;
  return g.adjacent(common[0], common[1]) ? PairType::DPair : PairType::QPair;
}

ColoredCopies colored_copies() {
  const Graph s = shrikhande();
  ColoredCopies out;
  out.a_anchors = {cell_id(kRedCellA, kRedCellB), cell_id(kBlueCellA, kBlueCellB),
                   cell_id(kGreenCellA, kGreenCellB)};
  out.b_anchors = {out.a_anchors[1], out.a_anchors[0], out.a_anchors[2]};

  const auto paint = [&](const std::array<int, 3>& anchors) {
    std::vector<int> colors(16, 0);
    colors[anchors[0]] = 1;  // red
    colors[anchors[1]] = 2;  // blue
    colors[anchors[2]] = 3;  // green
    return Coloring::from_colors(std::move(colors));
  };
  out.a = paint(out.a_anchors);
  out.b = paint(out.b_anchors);

  const auto check = [&](const std::array<int, 3>& anchors) {
    return s.adjacent(anchors[0], anchors[1]) &&
           classify_pair(s, anchors[0], anchors[2]) == PairType::QPair &&
           classify_pair(s, anchors[1], anchors[2]) == PairType::DPair;
  };
  if (!check(out.a_anchors))
    throw std::logic_error("anchor cells violate the red/blue/green pair conditions");
  // Copy B must satisfy the mirrored conditions (green's pair types flip).
  if (!(s.adjacent(out.b_anchors[0], out.b_anchors[1]) &&
        classify_pair(s, out.b_anchors[0], out.b_anchors[2]) == PairType::DPair &&
        classify_pair(s, out.b_anchors[1], out.b_anchors[2]) == PairType::QPair))
    throw std::logic_error("swapped anchors violate the mirrored pair conditions");
  return out;
}

namespace {

// Core wiring shared by the gadget and its twin: two 16-vertex copies plus
// connectors c1..c4 = 32..35, where c1 joins `first[0]` on the left to
// `second[0]` on the right, and so on; then the tail edges c2-c3 and c3-c4.
Graph wire_copies(const std::array<int, 3>& left_anchors,
                  const std::array<int, 3>& right_anchors) {
  const Graph s = shrikhande();
  Graph g(36);
  for (int x = 0; x < 16; ++x)
    for (int y : s.neighbors(x))
      if (x < y) {
        g.add_edge(x, y);
        g.add_edge(16 + x, 16 + y);
      }
  for (int i = 0; i < 3; ++i) {
    g.add_edge(left_anchors[i], 32 + i);
    g.add_edge(32 + i, 16 + right_anchors[i]);
  }
  g.add_edge(33, 34);
  g.add_edge(34, 35);
  return g;
}

}  // namespace

GadgetGraph build_gadget() {
  const ColoredCopies copies = colored_copies();
  GadgetGraph out;
  out.graph = wire_copies(copies.a_anchors, copies.b_anchors);
  out.a_side.to.resize(16);
  out.b_side.to.resize(16);
  for (int x = 0; x < 16; ++x) {
    out.a_side.to[x] = x;
    out.b_side.to[x] = 16 + x;
  }
  out.connectors = {32, 33, 34, 35};
  return out;
}

Graph build_gadget_prime() {
  const ColoredCopies copies = colored_copies();
  return wire_copies(copies.a_anchors, copies.a_anchors);
}

bool isomorphic_by_search(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  if (n == 0) return true;

  std::vector<int> gdeg(n), hdeg(n), freq(n, 0);
  for (int v = 0; v < n; ++v) {
    gdeg[v] = g.degree(v);
    hdeg[v] = h.degree(v);
  }
  for (int v = 0; v < n; ++v) ++freq[gdeg[v]];

  // Static order: touch mapped neighborhoods as early as possible, prefer
  // rare degrees, so candidate lists collapse near the root of the search.
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  std::vector<int> placed_nbrs(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    auto key = [&](int v) {
      return std::tuple(-placed_nbrs[v], freq[gdeg[v]], -gdeg[v], v);
    };
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (best == -1 || key(v) < key(best))) best = v;
    placed[best] = 1;
    order.push_back(best);
    for (int u : g.neighbors(best)) ++placed_nbrs[u];
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || hdeg[w] != gdeg[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = g.adjacent(v, u) == h.adjacent(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      image[v] = -1;
    }
    return false;
  };
  return extend(0);
}

bool GadgetReport::all_ok() const {
  return srg_parameters.ok && anchor_pair_types.ok &&
         round1_color_multisets_equal.ok && copies_refine_to_discrete.ok &&
         copies_distinguished_at_stable.ok && gadget_refines_to_discrete.ok &&
         stratified_walk_recurrences.ok && gadget_walk_rows_repeat.ok &&
         connector_walk_split.ok && prime_wm_equivalent.ok &&
         prime_not_isomorphic.ok;
}

namespace {

CheckResult check_srg_parameters(const Graph& s) {
  if (s.order() != 16) return {false, "order != 16"};
  for (int v = 0; v < 16; ++v)
    if (s.degree(v) != 6)
      return {false, "vertex " + std::to_string(v) + " has degree " +
                         std::to_string(s.degree(v))};
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      int ids[2];
      const int c = common_neighbor_ids(s, u, v, ids);
      const int want = 2;  // lambda and mu both equal 2
      if (c != want)
        return {false, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has " + std::to_string(c) + " common neighbors"};
    }
  return {true, "(16,6,2,2)"};
}

CheckResult check_anchor_pair_types() {
  const Graph s = shrikhande();
  const ColoredCopies copies = colored_copies();  // throws if violated
  const auto [ra, ba, ga] = copies.a_anchors;
  const auto [rb, bb, gb] = copies.b_anchors;
  std::ostringstream oss;
  oss << "A(red=" << ra << ",blue=" << ba << ",green=" << ga << ") adj/Q/D; "
      << "B(red=" << rb << ",blue=" << bb << ",green=" << gb << ") adj/D/Q";
  const bool ok = s.adjacent(ra, ba) &&
                  classify_pair(s, ra, ga) == PairType::QPair &&
                  classify_pair(s, ba, ga) == PairType::DPair &&
                  s.adjacent(rb, bb) &&
                  classify_pair(s, rb, gb) == PairType::DPair &&
                  classify_pair(s, bb, gb) == PairType::QPair;
  return {ok, oss.str()};
}

// Joint refinement of the two colored copies; returns the trace plus the two
// sides' vertex id lists.
struct JointRun {
  RefinementTrace trace;
  std::vector<int> left, right;
};

JointRun joint_copy_run() {
  const Graph s = shrikhande();
  const ColoredCopies copies = colored_copies();
  DisjointUnion u = disjoint_union(s, s);
  std::vector<int> joint = copies.a.colors;
  joint.insert(joint.end(), copies.b.colors.begin(), copies.b.colors.end());
  JointRun run;
  run.trace = refine(u.graph, Coloring::from_colors(std::move(joint)));
  run.left = u.left.to;
  run.right = u.right.to;
  return run;
}

CheckResult check_round1_equal() {
  const JointRun run = joint_copy_run();
  const Coloring& c1 = run.trace.rounds[1];
  if (c1.multiset_of(run.left) != c1.multiset_of(run.right))
    return {false, "round-1 color multisets differ"};
  return {true, "round-1 color multisets coincide"};
}

CheckResult check_copies_discrete() {
  const Graph s = shrikhande();
  const ColoredCopies copies = colored_copies();
  const bool a = is_cr_discrete(s, copies.a);
  const bool b = is_cr_discrete(s, copies.b);
  if (!a || !b)
    return {false, std::string("copy ") + (a ? "B" : "A") +
                       " does not refine to singletons"};
  return {true, "both copies refine to singletons"};
}

CheckResult check_copies_distinguished() {
  const Graph s = shrikhande();
  const ColoredCopies copies = colored_copies();
  if (!cr_distinguishes(s, copies.a, s, copies.b))
    return {false, "stable color multisets coincide"};
  return {true, "stable color multisets differ"};
}

CheckResult check_gadget_discrete(const Graph& g) {
  if (!is_cr_discrete(g, Coloring::uniform(g.order())))
    return {false, "stable partition is not discrete"};
  return {true, "uncolored gadget refines to singletons"};
}

CheckResult check_stratified_recurrences(const Graph& s) {
  // In a (16,6,2,2) graph the number of length-k walks between x and y can
  // only depend on whether x=y, x~y, or neither.  Verify that and the coupled
  // recurrences the three values obey:
  //   loop_{k+1}  = 6*adj_k
  //   adj_k+1     = loop_k + 2*adj_k + 3*non_k
  //   non_k+1     = 2*adj_k + 4*non_k
  const int kMax = 10;
  BigInt loop = 1, adj = 0, non = 0;  // k = 0
  std::vector<std::vector<BigInt>> count(16);
  for (int x = 0; x < 16; ++x) {
    count[x].assign(16, BigInt(0));
    count[x][x] = 1;
  }
  std::vector<BigInt> next(16);
  for (int k = 0; k <= kMax; ++k) {
    for (int x = 0; x < 16; ++x)
      for (int y = 0; y < 16; ++y) {
        const BigInt& want =
            x == y ? loop : (s.adjacent(x, y) ? adj : non);
        if (count[x][y] != want)
          return {false, "walk count at (" + std::to_string(x) + "," +
                             std::to_string(y) + "), k=" + std::to_string(k) +
                             " breaks the three-value split"};
      }
    const BigInt loop_next = 6 * adj;
    const BigInt adj_next = loop + 2 * adj + 3 * non;
    const BigInt non_next = 2 * adj + 4 * non;
    loop = loop_next;
    adj = adj_next;
    non = non_next;
    if (k == kMax) break;
    for (int x = 0; x < 16; ++x) {
      for (int y = 0; y < 16; ++y) {
        BigInt acc = 0;
        for (int z : s.neighbors(y)) acc += count[x][z];
        next[y] = std::move(acc);
      }
      count[x].swap(next);
    }
  }
  return {true, "three-value split and recurrences hold through k=10"};
}

// The three cells adjacent to green but to neither red nor blue, per side.
std::vector<int> expected_repeated_class(const ColoredCopies& copies,
                                         const Graph& s) {
  std::vector<int> out;
  for (int v = 0; v < 16; ++v) {
    if (s.adjacent(v, copies.a_anchors[2]) &&
        !s.adjacent(v, copies.a_anchors[0]) &&
        !s.adjacent(v, copies.a_anchors[1])) {
      out.push_back(v);
      out.push_back(16 + v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult check_walk_rows_repeat(const Graph& g, std::vector<int>& cls_out) {
  const WalkMatrix wm = walk_matrix(g);
  if (!duplicate_walk_rows(wm))
    return {false, "all walk-matrix rows are distinct"};

  std::vector<std::vector<BigInt>> rows(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const auto r = wm.row(v);
    rows[v].assign(r.begin(), r.end());
  }
  const Coloring parts = coloring_from_labels(rows);
  const auto classes = parts.classes();
  std::size_t largest = 0;
  for (const auto& c : classes) largest = std::max(largest, c.size());

  const std::vector<int> expected =
      expected_repeated_class(colored_copies(), shrikhande());
  if (expected.size() != 6)
    return {false, "expected witness class does not have six cells"};
  // The six must form one full equality class, as large as any other.
  const auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return c == expected; });
  if (it == classes.end())
    return {false, "witness vertices do not form a row-equality class"};
  if (largest > 6)
    return {false, "a larger repeated-row class exists (size " +
                       std::to_string(largest) + ")"};
  for (std::size_t i = 1; i < expected.size(); ++i)
    if (!std::ranges::equal(wm.row(expected[0]), wm.row(expected[i])))
      return {false, "witness rows are not pairwise identical"};
  cls_out = expected;
  std::string ids;
  for (int v : expected) ids += std::to_string(v) + " ";
  return {true, "six identical rows at vertices " + ids};
}

CheckResult check_connector_walk_split(const GadgetGraph& gg) {
  // Any walk that leaves the A side does so through one of the three anchor-
  // to-connector edges, so for every A-side vertex x and length k:
  //   walks_G(x,k) = walks_A(x,k)
  //     + sum_i sum_{j<k} walks_A(x->anchor_i, j) * walks_G(connector_i, k-j-1)
  const Graph s = shrikhande();
  const ColoredCopies copies = colored_copies();
  const WalkMatrix wm_g = walk_matrix(gg.graph);
  const WalkMatrix wm_s = walk_matrix(s);
  const int kMax = 12;
  for (int x = 0; x < 16; ++x) {
    for (int k = 0; k <= kMax; ++k) {
      BigInt expect = wm_s.at(x, k);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < k; ++j)
          expect += pair_walk_counts(s, x, copies.a_anchors[i], j) *
                    wm_g.at(gg.connectors[i], k - j - 1);
      if (wm_g.at(gg.a_side(x), k) != expect)
        return {false, "split identity fails at x=" + std::to_string(x) +
                           ", k=" + std::to_string(k)};
    }
  }
  return {true, "walk counts split at the connectors through k=12"};
}

CheckResult check_prime_wm_equivalent(const Graph& g, const Graph& gp) {
  if (!wm_equivalent(g, gp))
    return {false, "walk-matrix row multisets differ"};
  return {true, "equal walk-matrix row multisets"};
}

CheckResult check_prime_not_isomorphic(const Graph& g, const Graph& gp) {
  const bool separated = cr_distinguishes(g, Coloring::uniform(g.order()), gp,
                                          Coloring::uniform(gp.order()));
  if (!separated) return {false, "refinement does not separate the twin"};
  if (isomorphic_by_search(g, gp))
    return {false, "search found an isomorphism onto the twin"};
  return {true, "separated by refinement and by exhaustive search"};
}

}  // namespace

GadgetReport verify_gadget() {
  GadgetReport rep;
  const auto guard = [](CheckResult& slot, auto&& fn) {
    try {
      slot = fn();
    } catch (const std::exception& e) {
      slot = {false, std::string("exception: ") + e.what()};
    }
  };

  guard(rep.srg_parameters, [] { return check_srg_parameters(shrikhande()); });
  guard(rep.anchor_pair_types, [] { return check_anchor_pair_types(); });
  guard(rep.round1_color_multisets_equal, [] { return check_round1_equal(); });
  guard(rep.copies_refine_to_discrete, [] { return check_copies_discrete(); });
  guard(rep.copies_distinguished_at_stable,
        [] { return check_copies_distinguished(); });
  guard(rep.stratified_walk_recurrences,
        [] { return check_stratified_recurrences(shrikhande()); });
  try {
    const GadgetGraph gg = build_gadget();
    const Graph gp = build_gadget_prime();
    guard(rep.gadget_refines_to_discrete,
          [&] { return check_gadget_discrete(gg.graph); });
    guard(rep.gadget_walk_rows_repeat, [&] {
      return check_walk_rows_repeat(gg.graph, rep.repeated_row_class);
    });
    guard(rep.connector_walk_split,
          [&] { return check_connector_walk_split(gg); });
    guard(rep.prime_wm_equivalent,
          [&] { return check_prime_wm_equivalent(gg.graph, gp); });
    guard(rep.prime_not_isomorphic,
          [&] { return check_prime_not_isomorphic(gg.graph, gp); });
  } catch (const std::exception& e) {
    const CheckResult failed{false, std::string("exception: ") + e.what()};
    rep.gadget_refines_to_discrete = failed;
    rep.gadget_walk_rows_repeat = failed;
    rep.connector_walk_split = failed;
    rep.prime_wm_equivalent = failed;
    rep.prime_not_isomorphic = failed;
  }
  return rep;
}

std::string GadgetReport::to_json() const {
  nlohmann::ordered_json checks;
  const auto put = [&](const char* name, const CheckResult& c) {
    checks[name] = {{"ok", c.ok}, {"detail", c.detail}};
  };
  put("srg_parameters", srg_parameters);
  put("anchor_pair_types", anchor_pair_types);
  put("round1_color_multisets_equal", round1_color_multisets_equal);
  put("copies_refine_to_discrete", copies_refine_to_discrete);
  put("copies_distinguished_at_stable", copies_distinguished_at_stable);
  put("gadget_refines_to_discrete", gadget_refines_to_discrete);
  put("stratified_walk_recurrences", stratified_walk_recurrences);
  put("gadget_walk_rows_repeat", gadget_walk_rows_repeat);
  put("connector_walk_split", connector_walk_split);
  put("prime_wm_equivalent", prime_wm_equivalent);
  put("prime_not_isomorphic", prime_not_isomorphic);

  nlohmann::ordered_json doc;
  doc["schema"] = "gadget-report/1";
  doc["all_ok"] = all_ok();
  doc["repeated_row_class"] = repeated_row_class;
  doc["checks"] = std::move(checks);
  return doc.dump(2);
}

}  // namespace walkcanon
