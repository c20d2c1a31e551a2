// flopkit: wall structures, helices, and curve-counting bounds for 3-fold
// flops, by curve length or by choice of labelled diagram vertices.
//
// This front end speaks only the public C API of libflopkit; everything it
// prints is assembled from that surface.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flopkit/flopkit.h"
#include "json.hpp"
#include "svg_render.hpp"

namespace {

bool use_color() {
  const char* mode = std::getenv("FLOPKIT_COLOR");
  if (mode && std::string(mode) == "never") return false;
  return isatty(fileno(stderr)) != 0;
}

// Prints the library's error message and passes its status through as the
// process exit code (the library's status codes are the documented exit
// codes: 2 usage, 3 domain, 4 internal).
int fail(int status) {
  const char* prefix = use_color() ? "\033[31merror:\033[0m " : "error: ";
  std::cerr << prefix << flopkit_last_error() << "\n";
  return status;
}

int usage_error(const std::string& message) {
  const char* prefix = use_color() ? "\033[31merror:\033[0m " : "error: ";
  std::cerr << prefix << message << "\n";
  return FLOPKIT_ERR_USAGE;
}

// Owns a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  flopkit_string_free(s);
  return out;
}

struct Diagram {
  flopkit_diagram* handle = nullptr;
  ~Diagram() { flopkit_diagram_destroy(handle); }
};

// Diagrams named on the command line: a failure to construct one is a usage
// error, unlike domain errors from the operations applied afterwards.
std::optional<int> open_diagram(const std::string& name, Diagram& d) {
  if (flopkit_diagram_create(name.c_str(), &d.handle) != FLOPKIT_OK) {
    fail(FLOPKIT_ERR_USAGE);
    return FLOPKIT_ERR_USAGE;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> parse_vertex_list(const std::string& text) {
  static const std::regex shape(R"(-?\d+(,-?\d+)*)");
  if (!std::regex_match(text, shape)) return std::nullopt;
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::optional<std::vector<std::string>> parse_rational_list(const std::string& text) {
  static const std::regex token(R"(-?\d+(/\d+)?)");
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string part = text.substr(pos, next - pos);
    if (!std::regex_match(part, token)) return std::nullopt;
    out.push_back(part);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

int cmd_labels(const std::string& type, int rank) {
  Diagram d;
  if (type.size() != 1 ||
      flopkit_diagram_create_typed(type[0], rank, &d.handle) != FLOPKIT_OK)
    return type.size() == 1 ? fail(FLOPKIT_ERR_USAGE)
                            : usage_error("diagram type must be A, D or E");
  std::vector<int> labels(static_cast<std::size_t>(rank));
  if (const int st = flopkit_highest_root_labels(d.handle, labels.data()); st != FLOPKIT_OK)
    return fail(st);

  const auto join = [&](int from, int to) {  // 1-based, inclusive
    std::string out;
    for (int v = from; v <= to; ++v) {
      if (!out.empty()) out += ' ';
      out += std::to_string(labels[static_cast<std::size_t>(v) - 1]);
    }
    return out;
  };
  if (type[0] == 'A') {
    std::cout << join(1, rank) << "\n";
  } else if (type[0] == 'D') {
    std::cout << "chain: " << join(1, rank - 2) << "\n"
              << "forks: " << join(rank - 1, rank) << "\n";
  } else {
    std::cout << "chain: " << join(1, rank - 1) << "\n"
              << "branch: " << join(rank, rank) << "\n";
  }
  return 0;
}

int cmd_equator(const std::optional<int>& ell, const std::optional<std::string>& name,
                const std::optional<int>& vertex) {
  char* json = nullptr;
  if (ell) {
    if (name || vertex)
      return usage_error("--ell cannot be combined with --diagram/--vertex");
    if (const int st = flopkit_equator_for_length_json(*ell, &json); st != FLOPKIT_OK)
      return fail(st);
  } else {
    if (!name || !vertex)
      return usage_error("need either --ell, or --diagram together with --vertex");
    Diagram d;
    if (const auto st = open_diagram(*name, d)) return *st;
    if (const int st = flopkit_equator_json(d.handle, *vertex, &json); st != FLOPKIT_OK)
      return fail(st);
  }
  std::cout << take(json) << "\n";
  return 0;
}

int cmd_arrangement(const std::string& name, const std::string& vertices_arg,
                    const std::string& window_arg, const std::string& format,
                    double scale) {
  const auto vertices = parse_vertex_list(vertices_arg);
  if (!vertices) return usage_error("--vertices expects a comma-separated integer list");
  const auto window = parse_rational_list(window_arg);
  if (!window)
    return usage_error("--window expects comma-separated rationals like 0,0,1,3/2");
  const std::size_t dim = vertices->size();
  if (window->size() != 2 * dim)
    return usage_error("--window needs " + std::to_string(2 * dim) +
                       " entries for " + std::to_string(dim) + " vertices (lo..., hi...)");
  if (!(scale > 0)) return usage_error("--scale must be positive");

  Diagram d;
  if (const auto st = open_diagram(name, d)) return *st;
  std::vector<const char*> lo, hi;
  for (std::size_t i = 0; i < dim; ++i) lo.push_back((*window)[i].c_str());
  for (std::size_t i = dim; i < 2 * dim; ++i) hi.push_back((*window)[i].c_str());
  char* json = nullptr;
  if (const int st =
          flopkit_arrangement_json(d.handle, vertices->data(), static_cast<int>(dim),
                                   lo.data(), hi.data(), &json);
      st != FLOPKIT_OK)
    return fail(st);
  const std::string doc = take(json);

  if (format == "json") {
    std::cout << doc << "\n";
    return 0;
  }
  try {
    std::cout << flopkit::tools::render_arrangement_svg(doc, scale);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return FLOPKIT_ERR_INTERNAL;
  }
  return 0;
}

int cmd_chambers(const std::string& name, const std::string& vertices_arg) {
  const auto vertices = parse_vertex_list(vertices_arg);
  if (!vertices) return usage_error("--vertices expects a comma-separated integer list");
  Diagram d;
  if (const auto st = open_diagram(name, d)) return *st;
  char* json = nullptr;
  if (const int st = flopkit_chambers_json(d.handle, vertices->data(),
                                           static_cast<int>(vertices->size()), &json);
      st != FLOPKIT_OK)
    return fail(st);
  std::cout << take(json) << "\n";
  return 0;
}

int cmd_chamber_graph(const std::string& name, const std::string& vertices_arg,
                      int depth) {
  const auto vertices = parse_vertex_list(vertices_arg);
  if (!vertices) return usage_error("--vertices expects a comma-separated integer list");
  Diagram d;
  if (const auto st = open_diagram(name, d)) return *st;
  char* json = nullptr;
  if (const int st =
          flopkit_chamber_graph_json(d.handle, vertices->data(),
                                     static_cast<int>(vertices->size()), depth, &json);
      st != FLOPKIT_OK)
    return fail(st);
  std::cout << take(json) << "\n";
  return 0;
}

std::string symbol_text_from_json(const nlohmann::json& s) {
  std::string out = s["kind"].get<std::string>();
  if (s.contains("a")) out += "(" + std::to_string(s["a"].get<long long>()) + ")";
  if (const auto t = s["twist"].get<long long>(); t != 0)
    out += "*O(" + std::to_string(t) + ")";
  if (const auto k = s["shift"].get<long long>(); k != 0)
    out += "[" + std::to_string(k) + "]";
  return out;
}

int cmd_helix(int ell, const std::string& range_arg) {
  static const std::regex shape(R"((-?\d+)\.\.(-?\d+))");
  std::smatch m;
  if (!std::regex_match(range_arg, m, shape))
    return usage_error("--range expects from..to, e.g. 0..9");
  char* json = nullptr;
  if (const int st = flopkit_helix_range_json(ell, std::stoll(m[1]), std::stoll(m[2]),
                                              &json);
      st != FLOPKIT_OK)
    return fail(st);
  for (const auto& entry : nlohmann::json::parse(take(json)))
    std::cout << entry["index"].get<long long>() << ": " << symbol_text_from_json(entry)
              << "\n";
  return 0;
}

int cmd_pi1(int ell, const std::string& word, bool monodromy) {
  int holes = 0;
  if (const int st = flopkit_helix_period(ell, &holes); st != FLOPKIT_OK) return fail(st);
  char* text = nullptr;
  if (const int st = flopkit_pi1_normal_form(holes, word.c_str(), &text);
      st != FLOPKIT_OK)
    return fail(st);
  const std::string normal = take(text);
  std::cout << (normal.empty() ? "trivial" : normal) << "\n";
  if (monodromy) {
    if (const int st = flopkit_pi1_monodromy(ell, word.c_str(), &text); st != FLOPKIT_OK)
      return fail(st);
    std::cout << "monodromy: " << take(text) << "\n";
  }
  return 0;
}

int cmd_gv(const std::optional<int>& ell, bool as_json, bool as_csv) {
  char* out = nullptr;
  if (as_csv) {
    if (const int st = flopkit_gv_table_csv(&out); st != FLOPKIT_OK) return fail(st);
    std::cout << take(out);
    return 0;
  }
  if (!ell) return usage_error("--ell is required unless --csv is given");
  if (const int st = flopkit_gv_row_json(*ell, &out); st != FLOPKIT_OK) return fail(st);
  const std::string doc = take(out);
  if (as_json) {
    std::cout << doc << "\n";
    return 0;
  }
  const auto j = nlohmann::json::parse(doc);
  std::string bounds;
  for (const auto& n : j["gvLowerBounds"]) {
    if (!bounds.empty()) bounds += ',';
    bounds += std::to_string(n.get<long long>());
  }
  std::cout << "(" << bounds << "), " << j["dimLowerBound"].get<long long>() << "\n";
  return 0;
}

int cmd_conventions() {
  std::cout <<
      "Vertex numbering\n"
      "  A_n: vertices 1..n along the chain.\n"
      "  D_n: vertices 1..n-2 along the chain; fork vertices n-1 and n are\n"
      "       both attached to vertex n-2.\n"
      "  E_n: vertices 1..n-1 along the long chain; branch vertex n is\n"
      "       attached to chain vertex 3 (the middle for E6).\n"
      "  The balance vertex of the extended diagram is numbered rank+1 and\n"
      "  always carries label 1.\n"
      "\n"
      "Windows\n"
      "  Axis windows are half-open boxes [lo, hi): the low face belongs to\n"
      "  the window, the high face does not, so unit translates tile the\n"
      "  plane without overlap.  Entries are rationals like -1, 2, or 3/2.\n"
      "\n"
      "Loop words\n"
      "  Whitespace-separated tokens a, c, b0, b1, ... with an optional ^-1\n"
      "  exponent, e.g. \"c b0 b1^-1 a\".\n"
      "\n"
      "Exit codes\n"
      "  0 success, 2 usage error, 3 domain error, 4 internal guard.\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wall structures, helices and curve-counting bounds for 3-fold flops"};
  app.set_version_flag("--version", std::string(flopkit_version()));
  app.require_subcommand(1);

  auto* labels = app.add_subcommand("labels", "highest-root labels of a diagram");
  std::string labels_type;
  int labels_rank = 0;
  labels->add_option("type", labels_type, "diagram type: A, D or E")->required();
  labels->add_option("rank", labels_rank, "diagram rank")->required();

  auto* equator = app.add_subcommand(
      "equator", "puncture count and equator labels of the walk sphere");
  std::optional<int> eq_ell, eq_vertex;
  std::optional<std::string> eq_diagram;
  equator->add_option("--ell", eq_ell, "curve length 1..6 (picks the ambient diagram)");
  equator->add_option("--diagram", eq_diagram, "diagram name like E6");
  equator->add_option("--vertex", eq_vertex, "vertex id in the named diagram");

  auto* arrangement =
      app.add_subcommand("arrangement", "wall arrangement in a rational window");
  std::string arr_diagram, arr_vertices, arr_window, arr_format = "json";
  double arr_scale = 100.0;
  arrangement->add_option("--diagram", arr_diagram, "diagram name like E8")->required();
  arrangement->add_option("--vertices", arr_vertices, "one or two vertex ids, comma-separated")
      ->required();
  arrangement
      ->add_option("--window", arr_window,
                   "half-open box: lo,hi in one parameter, xlo,ylo,xhi,yhi in two")
      ->required();
  arrangement->add_option("--format", arr_format, "json or svg (default json)")
      ->check(CLI::IsMember({"json", "svg"}));
  arrangement->add_option("--scale", arr_scale, "svg pixels per unit (default 100)");

  auto* chambers = app.add_subcommand(
      "chambers", "chambers of the unit fundamental cell, exact coordinates");
  std::string ch_diagram, ch_vertices;
  chambers->add_option("--diagram", ch_diagram, "diagram name")->required();
  chambers->add_option("--vertices", ch_vertices, "one or two vertex ids")->required();

  auto* graph = app.add_subcommand(
      "chambergraph", "breadth-first graph of chambers reachable by crossings");
  std::string gr_diagram, gr_vertices;
  int gr_depth = 4;
  graph->add_option("--diagram", gr_diagram, "diagram name")->required();
  graph->add_option("--vertices", gr_vertices, "chosen vertex ids")->required();
  graph->add_option("--depth", gr_depth, "maximum crossings from the start (default 4)");

  auto* helix = app.add_subcommand("helix", "entries of the simples helix");
  int hx_ell = 0;
  std::string hx_range;
  helix->add_option("--ell", hx_ell, "curve length 1..6")->required();
  helix->add_option("--range", hx_range, "index range like -3..9")->required();

  auto* pi1 = app.add_subcommand(
      "pi1", "normal form of a loop word on the punctured sphere");
  int p1_ell = 0;
  std::string p1_word;
  bool p1_monodromy = false;
  pi1->add_option("--ell", p1_ell, "curve length 1..6")->required();
  pi1->add_option("--word", p1_word, "loop word, e.g. \"c b0 b1 a\"")->required();
  pi1->add_flag("--monodromy", p1_monodromy, "also print the derived monodromy functor");

  auto* gv = app.add_subcommand("gv", "curve-counting lower bounds per length");
  std::optional<int> gv_ell;
  bool gv_json = false, gv_csv = false;
  gv->add_option("--ell", gv_ell, "curve length 1..6");
  gv->add_flag("--json", gv_json, "emit the row as JSON");
  gv->add_flag("--csv", gv_csv, "emit the whole table as CSV");

  auto* conventions =
      app.add_subcommand("conventions", "vertex numbering and format reference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : FLOPKIT_ERR_USAGE;
  }

  if (labels->parsed()) return cmd_labels(labels_type, labels_rank);
  if (equator->parsed()) return cmd_equator(eq_ell, eq_diagram, eq_vertex);
  if (arrangement->parsed())
    return cmd_arrangement(arr_diagram, arr_vertices, arr_window, arr_format, arr_scale);
  if (chambers->parsed()) return cmd_chambers(ch_diagram, ch_vertices);
  if (graph->parsed()) return cmd_chamber_graph(gr_diagram, gr_vertices, gr_depth);
  if (helix->parsed()) return cmd_helix(hx_ell, hx_range);
  if (pi1->parsed()) return cmd_pi1(p1_ell, p1_word, p1_monodromy);
  if (gv->parsed()) return cmd_gv(gv_ell, gv_json, gv_csv);
  if (conventions->parsed()) return cmd_conventions();
  return FLOPKIT_ERR_USAGE;
}
