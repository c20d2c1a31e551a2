#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "flopkit/flopkit.h"
#include "json.hpp"

namespace {

// Takes ownership of the library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  flopkit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::string(flopkit_version()) == "0.1.0");
  CHECK(flopkit_diagram_create(nullptr, nullptr) == FLOPKIT_ERR_USAGE);
  CHECK(std::string(flopkit_last_error()) == "null argument");
}

TEST_CASE("diagram lifecycle") {
  flopkit_diagram* d = nullptr;
  REQUIRE(flopkit_diagram_create("E6", &d) == FLOPKIT_OK);
  REQUIRE(d != nullptr);

  int rank = 0;
  char type = 0;
  CHECK(flopkit_diagram_rank(d, &rank) == FLOPKIT_OK);
  CHECK(rank == 6);
  CHECK(flopkit_diagram_type(d, &type) == FLOPKIT_OK);
  CHECK(type == 'E');

  int labels[6];
  REQUIRE(flopkit_highest_root_labels(d, labels) == FLOPKIT_OK);
  const int expected[6] = {1, 2, 3, 2, 1, 2};
  CHECK(std::memcmp(labels, expected, sizeof expected) == 0);

  int image[6];
  REQUIRE(flopkit_dynkin_involution(d, image) == FLOPKIT_OK);
  const int expected_image[6] = {5, 4, 3, 2, 1, 6};
  CHECK(std::memcmp(image, expected_image, sizeof expected_image) == 0);

  long long roots = 0;
  CHECK(flopkit_positive_root_count(d, &roots) == FLOPKIT_OK);
  CHECK(roots == 36);

  flopkit_diagram_destroy(d);
}

TEST_CASE("diagram creation failures set the error code and message") {
  flopkit_diagram* d = nullptr;
  CHECK(flopkit_diagram_create("D3", &d) == FLOPKIT_ERR_DOMAIN);
  CHECK(d == nullptr);
  CHECK(std::string(flopkit_last_error()).find("invalid rank") != std::string::npos);
  CHECK(flopkit_diagram_create("X4", &d) == FLOPKIT_ERR_DOMAIN);
  CHECK(flopkit_diagram_create_typed('Q', 4, &d) == FLOPKIT_ERR_DOMAIN);
  CHECK(flopkit_diagram_create_typed('D', 4, &d) == FLOPKIT_OK);
  flopkit_diagram_destroy(d);
}

TEST_CASE("wall labels and equator through the C surface") {
  flopkit_diagram* d = nullptr;
  REQUIRE(flopkit_diagram_create("E6", &d) == FLOPKIT_OK);

  int labels[6];
  REQUIRE(flopkit_wall_labels(d, 3, 6, labels) == FLOPKIT_OK);
  const int expected[6] = {3, 2, 3, 1, 3, 2};
  CHECK(std::memcmp(labels, expected, sizeof expected) == 0);

  char* json = nullptr;
  REQUIRE(flopkit_equator_json(d, 3, &json) == FLOPKIT_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["N"] == 4);
  CHECK(j["punctures"] == 6);
  CHECK(j["equatorLabels"] == nlohmann::json::array({1, 3, 2, 3}));

  CHECK(flopkit_wall_labels(d, 9, 3, labels) == FLOPKIT_ERR_DOMAIN);
  flopkit_diagram_destroy(d);
}

TEST_CASE("equator by curve length") {
  char* json = nullptr;
  REQUIRE(flopkit_equator_for_length_json(6, &json) == FLOPKIT_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["N"] == 12);
  CHECK(j["equatorLabels"] ==
        nlohmann::json::array({1, 6, 5, 4, 3, 5, 2, 5, 3, 4, 5, 6}));
  CHECK(flopkit_equator_for_length_json(7, &json) == FLOPKIT_ERR_DOMAIN);
  CHECK(flopkit_equator_for_length_json(0, &json) == FLOPKIT_ERR_DOMAIN);
}

TEST_CASE("arrangement and chambers through the C surface") {
  flopkit_diagram* d = nullptr;
  REQUIRE(flopkit_diagram_create("E6", &d) == FLOPKIT_OK);

  const int verts1[1] = {3};
  const char* lo1[1] = {"0"};
  const char* hi1[1] = {"1"};
  char* json = nullptr;
  REQUIRE(flopkit_arrangement_json(d, verts1, 1, lo1, hi1, &json) == FLOPKIT_OK);
  auto j = nlohmann::json::parse(take(json));
  CHECK(j["dimension"] == 1);
  REQUIRE(j["walls"].size() == 4);
  CHECK(j["walls"][0]["label"] == 1);
  CHECK(j["walls"][1]["normal"] == nlohmann::json::array({3}));
  CHECK(j["walls"][1]["level"] == 1);

  REQUIRE(flopkit_chambers_json(d, verts1, 1, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j["count"] == 4);
  flopkit_diagram_destroy(d);

  REQUIRE(flopkit_diagram_create("A2", &d) == FLOPKIT_OK);
  const int verts2[2] = {1, 2};
  REQUIRE(flopkit_chambers_json(d, verts2, 2, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j["dimension"] == 2);
  CHECK(j["count"] == 2);

  const int verts_a2[1] = {1};
  REQUIRE(flopkit_chamber_graph_json(d, verts_a2, 1, 5, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j.contains("nodes"));
  CHECK(j.contains("edges"));
  flopkit_diagram_destroy(d);
}

TEST_CASE("helix through the C surface") {
  int n = 0;
  REQUIRE(flopkit_helix_period(5, &n) == FLOPKIT_OK);
  CHECK(n == 10);
  CHECK(flopkit_helix_period(9, &n) == FLOPKIT_ERR_DOMAIN);

  char* json = nullptr;
  REQUIRE(flopkit_helix_entry_json(3, -1, &json) == FLOPKIT_OK);
  auto j = nlohmann::json::parse(take(json));
  CHECK(j["kind"] == "omegaC");
  CHECK(j["a"] == 3);
  CHECK(j["twist"] == 0);

  REQUIRE(flopkit_helix_range_json(5, 0, 9, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  REQUIRE(j.size() == 10);
  CHECK(j[0]["index"] == 0);
  CHECK(j[0]["kind"] == "OC");
  CHECK(j[4]["kind"] == "Z");
  CHECK(j[6]["kind"] == "Zomega");

  REQUIRE(flopkit_heart_json(3, 0, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j["simples"][0]["shift"] == 1);

  int dim = -1;
  REQUIRE(flopkit_ext1_dimension(6, &dim) == FLOPKIT_OK);
  CHECK(dim == 1);
  CHECK(flopkit_ext1_dimension(2, &dim) == FLOPKIT_ERR_DOMAIN);

  REQUIRE(flopkit_symbol_dual_json(R"({"kind":"Z","twist":0,"shift":0})", &json) ==
          FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j["kind"] == "Zomega");
  CHECK(j["shift"] == 1);
  CHECK(flopkit_symbol_dual_json(R"({"kind":"OC","a":3})", &json) == FLOPKIT_ERR_DOMAIN);
}

TEST_CASE("word problem through the C surface") {
  char* text = nullptr;
  REQUIRE(flopkit_pi1_normal_form(4, "c b0 b1 b2 b3 a", &text) == FLOPKIT_OK);
  CHECK(take(text).empty());

  REQUIRE(flopkit_pi1_normal_form(1, "c", &text) == FLOPKIT_OK);
  CHECK(take(text) == "a^-1 b0^-1");

  int equal = -1;
  REQUIRE(flopkit_pi1_words_equal(3, "c^-1", "b0 b1 b2 a", &equal) == FLOPKIT_OK);
  CHECK(equal == 1);
  REQUIRE(flopkit_pi1_words_equal(2, "a", "b0", &equal) == FLOPKIT_OK);
  CHECK(equal == 0);
  CHECK(flopkit_pi1_words_equal(2, "a", "b7", &equal) == FLOPKIT_ERR_DOMAIN);

  REQUIRE(flopkit_pi1_monodromy(3, "c", &text) == FLOPKIT_OK);
  CHECK(take(text) == "flop^-1 . tensor(-1) . flop");

  char* json = nullptr;
  REQUIRE(flopkit_pi1_presentation_json(4, &json) == FLOPKIT_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["relation"] == "c b0 b1 b2 b3 a");
}

TEST_CASE("curve-counting table through the C surface") {
  char* csv = nullptr;
  REQUIRE(flopkit_gv_table_csv(&csv) == FLOPKIT_OK);
  const std::string table = take(csv);
  CHECK(table.find("4,\"(6,4,2,1)\",56") != std::string::npos);

  char* json = nullptr;
  REQUIRE(flopkit_gv_row_json(2, &json) == FLOPKIT_OK);
  auto j = nlohmann::json::parse(take(json));
  CHECK(j["dimLowerBound"] == 8);

  REQUIRE(flopkit_gv_deformation_json(6, 3, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j["exists"] == true);

  REQUIRE(flopkit_gv_realized_json(3, &json) == FLOPKIT_OK);
  j = nlohmann::json::parse(take(json));
  CHECK(j["smallestKnown"] == nlohmann::json::array({6, 3, 1}));

  CHECK(flopkit_gv_row_json(9, &json) == FLOPKIT_ERR_DOMAIN);
  CHECK(std::string(flopkit_last_error()).find("length") != std::string::npos);
}
