#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "rootsys.hpp"

namespace flopkit::arrangement {

// Restriction of a root to the chosen vertex set, as the tuple of
// coefficients at those vertices (in ascending vertex order).
using Coeffs = std::vector<int>;

// All nonzero restrictions of positive roots, deduplicated (but not rescaled:
// non-primitive tuples are kept verbatim) and sorted lexicographically.
std::vector<Coeffs> restricted_roots(const rootsys::DynkinDiagram& d,
                                     const std::vector<int>& chosen);

struct Wall {
  Coeffs normal;             // length = dimension
  long long level = 0;       // the wall { theta : normal . theta = level }
  std::optional<int> label;  // one-parameter arrangements only
};

// Half-open axis box [lo, hi): the low face belongs to the window, the high
// face does not, so unit translates of a unit window tile without overlap.
struct Window {
  std::vector<Rational> lo, hi;
};

struct WallArrangement {
  int dimension = 1;
  std::vector<Coeffs> families;  // the restricted roots the walls came from
  std::vector<Wall> walls;
  Window window;
};

// One-parameter arrangement built directly from the restricted roots: a wall
// at every x with c*x integral for some restricted coefficient c, labelled by
// the smallest such c.  This is the closed-form oracle the walk is checked
// against.
WallArrangement oracle_walls_1d(const rootsys::DynkinDiagram& d, int vertex,
                                const Window& window);

// Two-parameter arrangement: the integral translates of the lines
// c1*x + c2*y = 0 over restricted pairs (c1, c2), clipped to the window.
// Coincident translates from different families are emitted once.
WallArrangement arrangement_2d(const rootsys::DynkinDiagram& d,
                               const std::vector<int>& chosen,
                               const Window& window);

// Connected cells of the unit fundamental cell [0,1)^dim cut by the wall
// families.  Cells are closed polytopes covering the closed cell; in one
// parameter they are the intervals between consecutive walls (the last wraps
// to the first wall translated by 1), in two parameters convex polygons with
// vertices in counterclockwise order.
struct Chambers {
  int count = 0;
  std::vector<std::vector<std::vector<Rational>>> cells;
};

Chambers chambers_in_fundamental_domain(const WallArrangement& arr);

std::string arrangement_json(const WallArrangement& arr);
std::string chambers_json(const Chambers& c, int dimension);

}  // namespace flopkit::arrangement
