#include "flopkit/flopkit.h"

#include <cstring>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "gv.hpp"
#include "helix.hpp"
#include "json.hpp"
#include "pi1.hpp"
#include "rootsys.hpp"
#include "topology.hpp"
#include "walk.hpp"

using namespace flopkit;

struct flopkit_diagram {
  rootsys::DynkinDiagram d;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

int usage(const std::string& message) { return fail(FLOPKIT_ERR_USAGE, message); }

// Runs the body, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return FLOPKIT_OK;
  } catch (const DomainError& e) {
    return fail(FLOPKIT_ERR_DOMAIN, e.what());
  } catch (const InternalError& e) {
    return fail(FLOPKIT_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(FLOPKIT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FLOPKIT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> vertex_vector(const int* vertices, int count) {
  if (count < 1) throw DomainError("no vertices chosen");
  return std::vector<int>(vertices, vertices + count);
}

// The standard ambient diagram and vertex for each curve length.
std::pair<rootsys::DynkinDiagram, int> ambient_for_length(int ell) {
  switch (ell) {
    case 1: return {rootsys::build_diagram(rootsys::DiagramType::A, 1), 1};
    case 2: return {rootsys::build_diagram(rootsys::DiagramType::D, 4), 2};
    case 3: return {rootsys::build_diagram(rootsys::DiagramType::E, 6), 3};
    case 4: return {rootsys::build_diagram(rootsys::DiagramType::E, 7), 3};
    case 5: return {rootsys::build_diagram(rootsys::DiagramType::E, 8), 4};
    case 6: return {rootsys::build_diagram(rootsys::DiagramType::E, 8), 3};
    default:
      throw DomainError("length must be between 1 and 6, got " + std::to_string(ell));
  }
}

arrangement::Window parse_window(const char* const* lo, const char* const* hi, int dim) {
  arrangement::Window w;
  for (int i = 0; i < dim; ++i) {
    if (!lo[i] || !hi[i]) throw DomainError("missing window bound");
    w.lo.push_back(parse_rational(lo[i]));
    w.hi.push_back(parse_rational(hi[i]));
  }
  return w;
}

}  // namespace

extern "C" {

const char* flopkit_version(void) { return "0.1.0"; }

const char* flopkit_last_error(void) { return g_last_error.c_str(); }

void flopkit_string_free(char* s) { delete[] s; }

int flopkit_diagram_create(const char* name, flopkit_diagram** out) {
  if (!name || !out) return usage("null argument");
  return guarded([&] { *out = new flopkit_diagram{rootsys::parse_diagram(name)}; });
}

int flopkit_diagram_create_typed(char type, int rank, flopkit_diagram** out) {
  if (!out) return usage("null argument");
  return guarded([&] {
    rootsys::DiagramType t;
    switch (type) {
      case 'A': t = rootsys::DiagramType::A; break;
      case 'D': t = rootsys::DiagramType::D; break;
      case 'E': t = rootsys::DiagramType::E; break;
      default: throw DomainError(std::string("unknown diagram type '") + type + "'");
    }
    *out = new flopkit_diagram{rootsys::build_diagram(t, rank)};
  });
}

void flopkit_diagram_destroy(flopkit_diagram* d) { delete d; }

int flopkit_diagram_rank(const flopkit_diagram* d, int* rank_out) {
  if (!d || !rank_out) return usage("null argument");
  *rank_out = d->d.rank;
  return FLOPKIT_OK;
}

int flopkit_diagram_type(const flopkit_diagram* d, char* type_out) {
  if (!d || !type_out) return usage("null argument");
  *type_out = rootsys::type_name(d->d.type)[0];
  return FLOPKIT_OK;
}

int flopkit_highest_root_labels(const flopkit_diagram* d, int* labels_out) {
  if (!d || !labels_out) return usage("null argument");
  return guarded([&] {
    const auto labels = rootsys::highest_root_labels(d->d);
    std::copy(labels.begin(), labels.end(), labels_out);
  });
}

int flopkit_dynkin_involution(const flopkit_diagram* d, int* image_out) {
  if (!d || !image_out) return usage("null argument");
  return guarded([&] {
    const auto image = rootsys::dynkin_involution(d->d);
    std::copy(image.begin(), image.end(), image_out);
  });
}

int flopkit_positive_root_count(const flopkit_diagram* d, long long* count_out) {
  if (!d || !count_out) return usage("null argument");
  return guarded(
      [&] { *count_out = static_cast<long long>(rootsys::positive_roots(d->d).size()); });
}

int flopkit_wall_labels(const flopkit_diagram* d, int vertex, int count, int* labels_out) {
  if (!d || !labels_out) return usage("null argument");
  return guarded([&] {
    const auto records = walk::label_sequence_1d(d->d, vertex, count);
    for (std::size_t i = 0; i < records.size(); ++i) labels_out[i] = records[i].label;
  });
}

int flopkit_equator_json(const flopkit_diagram* d, int vertex, char** json_out) {
  if (!d || !json_out) return usage("null argument");
  return guarded([&] {
    *json_out = copy_string(topology::sphere_json(topology::punctured_sphere(d->d, vertex)));
  });
}

int flopkit_equator_for_length_json(int ell, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded([&] {
    const auto [diagram, vertex] = ambient_for_length(ell);
    *json_out = copy_string(topology::sphere_json(topology::punctured_sphere(diagram, vertex)));
  });
}

int flopkit_arrangement_json(const flopkit_diagram* d, const int* vertices, int vertex_count,
                             const char* const* window_lo, const char* const* window_hi,
                             char** json_out) {
  if (!d || !vertices || !window_lo || !window_hi || !json_out) return usage("null argument");
  return guarded([&] {
    const auto verts = vertex_vector(vertices, vertex_count);
    if (verts.size() == 1) {
      const auto w = parse_window(window_lo, window_hi, 1);
      *json_out = copy_string(
          arrangement::arrangement_json(arrangement::oracle_walls_1d(d->d, verts[0], w)));
    } else if (verts.size() == 2) {
      const auto w = parse_window(window_lo, window_hi, 2);
      *json_out =
          copy_string(arrangement::arrangement_json(arrangement::arrangement_2d(d->d, verts, w)));
    } else {
      throw DomainError("arrangements support one or two vertices");
    }
  });
}

int flopkit_chambers_json(const flopkit_diagram* d, const int* vertices, int vertex_count,
                          char** json_out) {
  if (!d || !vertices || !json_out) return usage("null argument");
  return guarded([&] {
    const auto verts = vertex_vector(vertices, vertex_count);
    arrangement::WallArrangement arr;
    if (verts.size() == 1) {
      arrangement::Window w;
      w.lo = {Rational(0)};
      w.hi = {Rational(1)};
      arr = arrangement::oracle_walls_1d(d->d, verts[0], w);
    } else if (verts.size() == 2) {
      arrangement::Window w;
      w.lo = {Rational(0), Rational(0)};
      w.hi = {Rational(1), Rational(1)};
      arr = arrangement::arrangement_2d(d->d, verts, w);
    } else {
      throw DomainError("arrangements support one or two vertices");
    }
    *json_out = copy_string(
        arrangement::chambers_json(arrangement::chambers_in_fundamental_domain(arr), arr.dimension));
  });
}

int flopkit_chamber_graph_json(const flopkit_diagram* d, const int* vertices, int vertex_count,
                               int max_depth, char** json_out) {
  if (!d || !vertices || !json_out) return usage("null argument");
  return guarded([&] {
    const auto verts = vertex_vector(vertices, vertex_count);
    *json_out =
        copy_string(walk::chamber_graph_json(walk::chamber_graph(d->d, verts, max_depth)));
  });
}

int flopkit_helix_period(int ell, int* count_out) {
  if (!count_out) return usage("null argument");
  return guarded([&] { *count_out = helix::period_count(ell); });
}

int flopkit_helix_entry_json(int ell, long long index, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded(
      [&] { *json_out = copy_string(helix::symbol_json(helix::helix_entry(ell, index))); });
}

int flopkit_helix_range_json(int ell, long long from, long long to, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded([&] {
    if (from > to) throw DomainError("empty helix range");
    if (to - from > 10000) throw DomainError("helix range too large");
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (long long i = from; i <= to; ++i) {
      auto entry = nlohmann::ordered_json::parse(helix::symbol_json(helix::helix_entry(ell, i)));
      nlohmann::ordered_json wrapped;
      wrapped["index"] = i;
      wrapped.update(entry);
      j.push_back(std::move(wrapped));
    }
    *json_out = copy_string(j.dump());
  });
}

int flopkit_heart_json(int ell, long long t, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded([&] { *json_out = copy_string(helix::heart_json(helix::heart(ell, t))); });
}

int flopkit_ext1_dimension(int ell, int* dim_out) {
  if (!dim_out) return usage("null argument");
  return guarded([&] { *dim_out = helix::ext1_dimension(ell); });
}

int flopkit_symbol_dual_json(const char* symbol_json, char** json_out) {
  if (!symbol_json || !json_out) return usage("null argument");
  return guarded([&] {
    *json_out =
        copy_string(helix::symbol_json(helix::dual(helix::symbol_from_json(symbol_json))));
  });
}

int flopkit_pi1_presentation_json(int hole_count, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded(
      [&] { *json_out = copy_string(pi1::presentation_json(pi1::presentation(hole_count))); });
}

int flopkit_pi1_normal_form(int hole_count, const char* word, char** text_out) {
  if (!word || !text_out) return usage("null argument");
  return guarded([&] {
    const auto w = pi1::parse_word(word, hole_count);
    *text_out = copy_string(pi1::word_text(pi1::normal_form(w, hole_count)));
  });
}

int flopkit_pi1_words_equal(int hole_count, const char* word1, const char* word2,
                            int* equal_out) {
  if (!word1 || !word2 || !equal_out) return usage("null argument");
  return guarded([&] {
    const auto w1 = pi1::parse_word(word1, hole_count);
    const auto w2 = pi1::parse_word(word2, hole_count);
    *equal_out = pi1::words_equal(w1, w2, hole_count) ? 1 : 0;
  });
}

int flopkit_pi1_monodromy(int ell, const char* word, char** text_out) {
  if (!word || !text_out) return usage("null argument");
  return guarded([&] {
    const int n = helix::period_count(ell);
    const auto w = pi1::parse_word(word, n);
    *text_out = copy_string(pi1::functor_text(pi1::monodromy(w, ell)));
  });
}

int flopkit_gv_row_json(int ell, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded([&] { *json_out = copy_string(gv::row_json(ell)); });
}

int flopkit_gv_table_csv(char** csv_out) {
  if (!csv_out) return usage("null argument");
  return guarded([&] { *csv_out = copy_string(gv::table_csv()); });
}

int flopkit_gv_realized_json(int ell, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded([&] { *json_out = copy_string(gv::realization_json(ell)); });
}

int flopkit_gv_deformation_json(int ell, int a, char** json_out) {
  if (!json_out) return usage("null argument");
  return guarded(
      [&] { *json_out = copy_string(gv::deformation_json(gv::deformation_equivalents(ell, a))); });
}

}  // extern "C"
