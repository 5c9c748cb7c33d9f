#pragma once

#include <array>
#include <string>

#include "walkcanon/graph.hpp"
#include "walkcanon/refine.hpp"

namespace walkcanon {

// The 16-vertex strongly regular graph with parameters (16,6,2,2) that is not
// the 4x4 rook's graph: Cayley graph of Z4 x Z4 with connection set
// {±(1,0), ±(0,1), ±(1,1)}.  Cell (a,b) gets vertex id 4a+b.
Graph shrikhande();

// Non-adjacent vertex pairs whose two common neighbors are adjacent span a
// diamond (K4 minus an edge); if the common neighbors are non-adjacent the
// four vertices span a quadrilateral.  Other = anything that fits neither
// shape (adjacency aside), e.g. a common-neighbor count different from 2.
enum class PairType { Adjacent, DPair, QPair, Other };

PairType classify_pair(const Graph& g, int u, int v);

// Two individualizations of the Shrikhande graph, each painting three anchor
// cells red(1)/blue(2)/green(3) on the otherwise uniform color 0.  The anchors
// satisfy: red-blue adjacent, red-green a Q-pair, blue-green a D-pair.  Copy B
// swaps the red and blue cells, which flips the green vertex's pair types and
// makes the copies non-isomorphic as colored graphs.
struct ColoredCopies {
  Coloring a;
  Coloring b;
  std::array<int, 3> a_anchors;  // red, blue, green vertex ids for copy A
  std::array<int, 3> b_anchors;  // same roles for copy B
};

// Verifies the anchor conditions at construction; a violation would mean the
// embedded coordinates are wrong and throws logic_error.
ColoredCopies colored_copies();

// 36-vertex connected gadget: copy A on ids 0..15, copy B on 16..31, plus a
// connector path attaching equally-colored anchors through fresh vertices
// c1..c4 (ids 32..35) of degrees 2, 3, 4, 1:
//   red_A - c1 - red_B,  blue_A - c2 - blue_B,  green_A - c3 - green_B,
//   c2 - c3,  c3 - c4.
// The uneven connector degrees replace the colors, so the plain graph holds
// the same information as the two colored copies.
struct GadgetGraph {
  Graph graph;
  VertexMap a_side;
  VertexMap b_side;
  std::array<int, 4> connectors;
};

GadgetGraph build_gadget();

// Same wiring but with two copies of A (the connector path joins each anchor
// cell to itself on the far side).  The result is walk-matrix-equivalent to
// the gadget yet not isomorphic to it: swapping its two sides is an
// automorphism, which the gadget does not admit.
Graph build_gadget_prime();

// Isomorphism test by backtracking over candidate maps, vertices ordered to
// touch mapped neighborhoods early and candidates filtered by degree and
// adjacency consistency.  Exact, intended for the small graphs here.
bool isomorphic_by_search(const Graph& g, const Graph& h);

struct CheckResult {
  bool ok = false;
  std::string detail;
};

// One entry per verified property of the construction; verify_gadget never
// throws, it marks the failing check false with a witness in `detail`.
struct GadgetReport {
  CheckResult srg_parameters;          // (16,6,2,2), exact
  CheckResult anchor_pair_types;       // the six adjacency/D/Q conditions
  CheckResult round1_color_multisets_equal;      // copies agree after round 1
  CheckResult copies_refine_to_discrete;         // each copy alone: singletons
  CheckResult copies_distinguished_at_stable;    // joint run splits the copies
  CheckResult gadget_refines_to_discrete;        // uncolored gadget: singletons
  CheckResult stratified_walk_recurrences;       // SRG pair-walk recurrences
  CheckResult gadget_walk_rows_repeat;           // six equal walk-matrix rows
  std::vector<int> repeated_row_class;           // the six vertex ids
  CheckResult connector_walk_split;    // walk counts split at the connectors
  CheckResult prime_wm_equivalent;     // gadget vs prime: equal row multisets
  CheckResult prime_not_isomorphic;    // ...yet distinguishable two ways

  bool all_ok() const;
  std::string to_json() const;  // one stable "gadget-report/1" document
};

GadgetReport verify_gadget();

}  // namespace walkcanon
