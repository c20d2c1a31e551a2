#pragma once

#include <string>

#include "walk.hpp"

namespace flopkit::topology {

// The quotient of a one-parameter wall arrangement by its unit translation:
// a sphere with the wall points strung along the equator plus one puncture at
// each pole.
struct PuncturedSphere {
  int puncture_count = 0;           // equator punctures + 2 poles
  std::vector<int> equator_labels;  // starts at a label-1 puncture
};

PuncturedSphere sphere_for_period(const walk::Period& p);
PuncturedSphere punctured_sphere(const rootsys::DynkinDiagram& d, int vertex);

// 2 - punctures, as for any punctured sphere.
int euler_characteristic(const PuncturedSphere& s);

std::string sphere_json(const PuncturedSphere& s);

}  // namespace flopkit::topology
