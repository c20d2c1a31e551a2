#include "arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "json.hpp"

namespace flopkit::arrangement {

namespace {

std::vector<int> validate_chosen(const rootsys::DynkinDiagram& d,
                                 const std::vector<int>& chosen) {
  if (chosen.empty()) throw DomainError("no vertices chosen");
  std::vector<int> out = chosen;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw DomainError("repeated vertex");
  for (int v : out)
    if (v < 1 || v > d.rank) throw DomainError("unknown vertex " + std::to_string(v));
  return out;
}

void validate_window(const Window& w, int dimension) {
  if (static_cast<int>(w.lo.size()) != dimension ||
      static_cast<int>(w.hi.size()) != dimension)
    throw DomainError("window dimension mismatch");
  for (int i = 0; i < dimension; ++i)
    if (!(w.lo[static_cast<std::size_t>(i)] < w.hi[static_cast<std::size_t>(i)]))
      throw DomainError("empty window");
}

}  // namespace

std::vector<Coeffs> restricted_roots(const rootsys::DynkinDiagram& d,
                                     const std::vector<int>& chosen) {
  const auto verts = validate_chosen(d, chosen);
  std::set<Coeffs> seen;
  for (const auto& root : positive_roots(d)) {
    Coeffs c;
    for (int v : verts) c.push_back(root[static_cast<std::size_t>(v) - 1]);
    if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) seen.insert(c);
  }
  return {seen.begin(), seen.end()};
}

WallArrangement oracle_walls_1d(const rootsys::DynkinDiagram& d, int vertex,
                                const Window& window) {
  validate_window(window, 1);
  const auto families = restricted_roots(d, {vertex});

  // Wall positions are the rationals in the window whose denominator divides
  // some restricted coefficient; the label is the smallest coefficient that
  // clears the denominator.
  std::map<Rational, int> walls;
  for (const auto& fam : families) {
    const long long c = fam[0];
    for (long long n = rational_ceil(window.lo[0] * c); Rational(n, c) < window.hi[0]; ++n)
      walls.emplace(Rational(n, c), static_cast<int>(c));  // keeps the smallest c
  }

  WallArrangement arr;
  arr.dimension = 1;
  arr.families = families;
  arr.window = window;
  for (const auto& [x, label] : walls) {
    if (x.denominator() != label)
      throw InternalError("wall label differs from its reduced denominator");
    arr.walls.push_back(Wall{{static_cast<int>(x.denominator())}, x.numerator(), label});
  }
  return arr;
}

namespace {

using LineKey = std::array<long long, 3>;  // c1, c2, level; gcd = 1

LineKey canonical_line(long long c1, long long c2, long long n) {
  long long g = std::gcd(std::gcd(c1, c2), n < 0 ? -n : n);
  if (g == 0) throw InternalError("degenerate wall normal");
  return {c1 / g, c2 / g, n / g};
}

std::set<LineKey> enumerate_lines(const std::vector<Coeffs>& families,
                                  const Window& window) {
  std::set<LineKey> lines;
  for (const auto& fam : families) {
    const long long c1 = fam[0], c2 = fam[1];
    // With both coefficients nonnegative, the value range of c1*x + c2*y over
    // the half-open box is [value at lo, value at hi).
    const Rational fmin = window.lo[0] * c1 + window.lo[1] * c2;
    const Rational fsup = window.hi[0] * c1 + window.hi[1] * c2;
    for (long long n = rational_ceil(fmin); Rational(n) < fsup; ++n)
      lines.insert(canonical_line(c1, c2, n));
  }
  return lines;
}

}  // namespace

WallArrangement arrangement_2d(const rootsys::DynkinDiagram& d,
                               const std::vector<int>& chosen,
                               const Window& window) {
  const auto verts = validate_chosen(d, chosen);
  if (verts.size() != 2) throw DomainError("two-parameter arrangements need two vertices");
  validate_window(window, 2);

  WallArrangement arr;
  arr.dimension = 2;
  arr.families = restricted_roots(d, verts);
  arr.window = window;
  for (const auto& key : enumerate_lines(arr.families, window))
    arr.walls.push_back(
        Wall{{static_cast<int>(key[0]), static_cast<int>(key[1])}, key[2], std::nullopt});
  return arr;
}

namespace {

struct Pt {
  Rational x, y;
  bool operator==(const Pt&) const = default;
};
using Poly = std::vector<Pt>;  // counterclockwise

Rational line_value(const LineKey& k, const Pt& p) {
  return p.x * k[0] + p.y * k[1];
}

Rational area2(const Poly& poly) {
  Rational s(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

Poly dedup(Poly poly) {
  Poly out;
  for (const Pt& p : poly)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

// Splits a convex polygon along the line; returns the <= and >= sides.
// Points on the line go to both, so the pieces stay closed.
std::pair<Poly, Poly> split(const Poly& poly, const LineKey& line) {
  Poly lo, hi;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    const Rational fp = line_value(line, p) - line[2];
    const Rational fq = line_value(line, q) - line[2];
    if (!(fp > Rational(0))) lo.push_back(p);
    if (!(fp < Rational(0))) hi.push_back(p);
    if ((fp < Rational(0) && fq > Rational(0)) || (fp > Rational(0) && fq < Rational(0))) {
      const Rational t = -fp / (fq - fp);
      const Pt m{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
      lo.push_back(m);
      hi.push_back(m);
    }
  }
  return {dedup(lo), dedup(hi)};
}

Poly canonical_rotation(const Poly& poly) {
  const auto less = [](const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  };
  const auto first = std::min_element(poly.begin(), poly.end(), less);
  Poly out(first, poly.end());
  out.insert(out.end(), poly.begin(), first);
  return out;
}

Chambers chambers_1d(const std::vector<Coeffs>& families) {
  std::set<Rational> walls;
  for (const auto& fam : families) {
    const long long c = fam[0];
    for (long long n = 0; Rational(n, c) < Rational(1); ++n) walls.insert(Rational(n, c));
  }
  Chambers out;
  if (walls.empty()) {
    out.count = 1;
    out.cells.push_back({{Rational(0)}, {Rational(1)}});
    return out;
  }
  const std::vector<Rational> xs(walls.begin(), walls.end());
  out.count = static_cast<int>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational a = xs[i];
    const Rational b = i + 1 < xs.size() ? xs[i + 1] : xs[0] + 1;
    out.cells.push_back({{a}, {b}});
  }
  return out;
}

Chambers chambers_2d(const std::vector<Coeffs>& families) {
  Window unit;
  unit.lo = {Rational(0), Rational(0)};
  unit.hi = {Rational(1), Rational(1)};
  const auto lines = enumerate_lines(families, unit);

  std::vector<Poly> cells{{Pt{Rational(0), Rational(0)}, Pt{Rational(1), Rational(0)},
                           Pt{Rational(1), Rational(1)}, Pt{Rational(0), Rational(1)}}};
  for (const auto& line : lines) {
    std::vector<Poly> next;
    for (const Poly& cell : cells) {
      auto [lo, hi] = split(cell, line);
      if (lo.size() >= 3 && area2(lo) > Rational(0)) next.push_back(std::move(lo));
      if (hi.size() >= 3 && area2(hi) > Rational(0)) next.push_back(std::move(hi));
    }
    cells = std::move(next);
  }

  Chambers out;
  out.count = static_cast<int>(cells.size());
  for (const Poly& cell : cells) {
    const Poly canon = canonical_rotation(cell);
    std::vector<std::vector<Rational>> c;
    for (const Pt& p : canon) c.push_back({p.x, p.y});
    out.cells.push_back(std::move(c));
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

}  // namespace

Chambers chambers_in_fundamental_domain(const WallArrangement& arr) {
  if (arr.dimension == 1) return chambers_1d(arr.families);
  if (arr.dimension == 2) return chambers_2d(arr.families);
  throw DomainError("unsupported dimension");
}

std::string arrangement_json(const WallArrangement& arr) {
  nlohmann::ordered_json j;
  j["dimension"] = arr.dimension;
  j["walls"] = nlohmann::ordered_json::array();
  for (const auto& w : arr.walls) {
    nlohmann::ordered_json jw;
    jw["normal"] = w.normal;
    jw["level"] = w.level;
    if (w.label) jw["label"] = *w.label;
    j["walls"].push_back(std::move(jw));
  }
  const auto strs = [](const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
  };
  j["window"] = {{"lo", strs(arr.window.lo)}, {"hi", strs(arr.window.hi)}};
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (int i = 0; i < arr.dimension; ++i) {
    std::vector<int> g(static_cast<std::size_t>(arr.dimension), 0);
    g[static_cast<std::size_t>(i)] = 1;
    gens.push_back(g);
  }
  j["lattice"] = {{"dimension", arr.dimension}, {"generators", std::move(gens)}};
  return j.dump();
}

std::string chambers_json(const Chambers& c, int dimension) {
  nlohmann::ordered_json j;
  j["dimension"] = dimension;
  j["count"] = c.count;
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& cell : c.cells) {
    nlohmann::ordered_json jc = nlohmann::ordered_json::array();
    for (const auto& pt : cell) {
      std::vector<std::string> coords;
      for (const auto& r : pt) coords.push_back(to_string(r));
      jc.push_back(coords);
    }
    j["cells"].push_back(std::move(jc));
  }
  return j.dump();
}

}  // namespace flopkit::arrangement
