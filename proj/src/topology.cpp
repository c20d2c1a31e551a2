#include "topology.hpp"

#include "json.hpp"

namespace flopkit::topology {

PuncturedSphere sphere_for_period(const walk::Period& p) {
  PuncturedSphere s;
  s.puncture_count = p.wall_count + 2;
  s.equator_labels = p.equator_labels;
  return s;
}

PuncturedSphere punctured_sphere(const rootsys::DynkinDiagram& d, int vertex) {
  return sphere_for_period(walk::period_1d(d, vertex));
}

int euler_characteristic(const PuncturedSphere& s) { return 2 - s.puncture_count; }

std::string sphere_json(const PuncturedSphere& s) {
  nlohmann::ordered_json j;
  j["N"] = static_cast<int>(s.equator_labels.size());
  j["punctures"] = s.puncture_count;
  j["equatorLabels"] = s.equator_labels;
  j["poles"] = {"north", "south"};
  return j.dump();
}

}  // namespace flopkit::topology
