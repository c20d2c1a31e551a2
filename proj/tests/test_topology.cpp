#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "topology.hpp"

using namespace flopkit;
using namespace flopkit::rootsys;
using namespace flopkit::topology;

TEST_CASE("punctured spheres for the table rows") {
  const auto e6 = punctured_sphere(build_diagram(DiagramType::E, 6), 3);
  CHECK(e6.puncture_count == 6);
  CHECK(e6.equator_labels == std::vector<int>{1, 3, 2, 3});

  const auto d5 = punctured_sphere(build_diagram(DiagramType::D, 5), 4);
  CHECK(d5.puncture_count == 3);
  CHECK(d5.equator_labels == std::vector<int>{1});

  const auto e8 = punctured_sphere(build_diagram(DiagramType::E, 8), 3);
  CHECK(e8.puncture_count == 14);
  CHECK(e8.equator_labels.size() == 12);
}

TEST_CASE("puncture count is always the equator count plus the two poles") {
  for (int n = 4; n <= 9; ++n) {
    const auto d = build_diagram(DiagramType::D, n);
    for (int v = 1; v <= n; ++v) {
      const auto s = punctured_sphere(d, v);
      CHECK(s.puncture_count == static_cast<int>(s.equator_labels.size()) + 2);
      CHECK(s.equator_labels.front() == 1);
    }
  }
}

TEST_CASE("sphere depends only on the vertex label") {
  const auto a = punctured_sphere(build_diagram(DiagramType::E, 6), 6);   // label 2
  const auto b = punctured_sphere(build_diagram(DiagramType::D, 8), 4);   // label 2
  const auto c = punctured_sphere(build_diagram(DiagramType::E, 8), 1);   // label 2
  CHECK(a.equator_labels == b.equator_labels);
  CHECK(a.equator_labels == c.equator_labels);
  CHECK(a.puncture_count == 4);
}

TEST_CASE("euler characteristic") {
  PuncturedSphere s;
  s.puncture_count = 6;
  s.equator_labels = {1, 3, 2, 3};
  CHECK(euler_characteristic(s) == -4);
  s.puncture_count = 3;
  s.equator_labels = {1};
  CHECK(euler_characteristic(s) == -1);
  s.puncture_count = 14;
  CHECK(euler_characteristic(s) == -12);
}

TEST_CASE("sphere JSON layout") {
  const auto j = nlohmann::json::parse(
      sphere_json(punctured_sphere(build_diagram(DiagramType::E, 6), 3)));
  CHECK(j["N"] == 4);
  CHECK(j["punctures"] == 6);
  CHECK(j["equatorLabels"] == nlohmann::json::array({1, 3, 2, 3}));
  CHECK(j["poles"] == nlohmann::json::array({"north", "south"}));
  // Field order is part of the documented schema.
  const std::string raw = sphere_json(punctured_sphere(build_diagram(DiagramType::A, 1), 1));
  CHECK(raw ==
        R"({"N":1,"punctures":3,"equatorLabels":[1],"poles":["north","south"]})");
}
