#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace flopkit::walk {

inline constexpr int kCrossingGuard = 10000;

// A chamber of the wall-and-chamber structure, encoded combinatorially: the
// set of currently shaded vertices of the extended diagram, plus the wall
// that was crossed most recently (needed to walk a straight line in the
// one-parameter case without immediately bouncing back).
struct ChamberState {
  std::vector<int> shaded;          // sorted, always contains the latest crossing
  std::optional<int> last_crossed;
  auto operator<=>(const ChamberState&) const = default;
};

struct WallRecord {
  int position = 0;  // 0-based crossing index along the ray
  int label = 0;     // label of the crossed vertex
};

// Shades the chosen base vertices together with the balance vertex.  The
// chosen set must be a nonempty subset of the base diagram's vertices.
ChamberState initial_state(const rootsys::ExtendedDiagram& ext,
                           const std::vector<int>& chosen);

// Crossing the wall of shaded vertex v: delete v from the extended diagram,
// apply the canonical involution of each remaining component to the other
// shaded vertices, and re-shade v.  Self-inverse by construction.
std::pair<ChamberState, WallRecord> cross(const rootsys::ExtendedDiagram& ext,
                                          const ChamberState& state, int v);

// Labels of the first `count` walls met when walking the one-parameter ray
// for `vertex`: the first crossing is at the chosen vertex itself, and each
// subsequent crossing is at the shaded vertex not crossed last.
std::vector<WallRecord> label_sequence_1d(const rootsys::DynkinDiagram& d,
                                          int vertex, int count);

struct Period {
  int wall_count = 0;               // walls per unit translation
  std::vector<int> equator_labels;  // one period, rotated to start at a label-1 wall
};

// Detects the period of the one-parameter walk.  The walk state recurs (the
// step map is invertible, so its orbit is a pure cycle); the unit translation
// is the gap between consecutive label-1 walls, which the cycle must repeat
// uniformly.  Trips the internal guard after kCrossingGuard crossings.
Period period_1d(const rootsys::DynkinDiagram& d, int vertex);

// Breadth-first exploration of chambers reachable by wall crossings, chambers
// identified by their shaded set alone.  Nodes at depth == max_depth are kept
// but not expanded.
struct ChamberGraph {
  struct Edge {
    int from = 0, to = 0;
    int label = 0;           // label of the crossed vertex
    int crossed_vertex = 0;
  };
  std::vector<std::vector<int>> nodes;  // node 0 is the starting chamber
  std::vector<Edge> edges;
};

ChamberGraph chamber_graph(const rootsys::DynkinDiagram& d,
                           const std::vector<int>& chosen, int max_depth);

std::string chamber_graph_json(const ChamberGraph& g);

}  // namespace flopkit::walk
