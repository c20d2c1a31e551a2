#include "walk.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "errors.hpp"
#include "json.hpp"

namespace flopkit::walk {

namespace {

std::vector<int> validate_chosen(const rootsys::ExtendedDiagram& ext,
                                 const std::vector<int>& chosen) {
  if (chosen.empty()) throw DomainError("no vertices chosen");
  std::vector<int> out = chosen;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out)
    if (v < 1 || v > ext.base.rank)
      throw DomainError("unknown vertex " + std::to_string(v));
  return out;
}

// Connected components of the extended diagram with `removed` deleted, as
// adjacency maps ready for shape classification.
std::vector<std::map<int, std::vector<int>>> components_without(
    const rootsys::ExtendedDiagram& ext, int removed) {
  std::vector<std::map<int, std::vector<int>>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(ext.vertex_count()) + 1, false);
  seen[static_cast<std::size_t>(removed)] = true;
  for (int start = 1; start <= ext.vertex_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::map<int, std::vector<int>> comp;
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      std::vector<int> nbrs;
      for (int u : ext.neighbours(v)) {
        if (u == removed) continue;
        nbrs.push_back(u);
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          queue.push_back(u);
        }
      }
      comp[v] = std::move(nbrs);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

ChamberState initial_state(const rootsys::ExtendedDiagram& ext,
                           const std::vector<int>& chosen) {
  ChamberState s;
  s.shaded = validate_chosen(ext, chosen);
  s.shaded.push_back(ext.affine_vertex);
  return s;
}

std::pair<ChamberState, WallRecord> cross(const rootsys::ExtendedDiagram& ext,
                                          const ChamberState& state, int v) {
  if (!std::binary_search(state.shaded.begin(), state.shaded.end(), v))
    throw DomainError("vertex " + std::to_string(v) + " is not shaded");

  std::map<int, int> image;
  for (const auto& comp : components_without(ext, v)) {
    const auto inv = rootsys::ade_involution(comp);
    image.insert(inv.begin(), inv.end());
  }

  ChamberState next;
  next.shaded.push_back(v);
  for (int u : state.shaded) {
    if (u == v) continue;
    next.shaded.push_back(image.at(u));
  }
  std::sort(next.shaded.begin(), next.shaded.end());
  next.last_crossed = v;
  return {next, WallRecord{0, ext.label(v)}};
}

std::vector<WallRecord> label_sequence_1d(const rootsys::DynkinDiagram& d,
                                          int vertex, int count) {
  if (count < 0) throw DomainError("negative wall count");
  const auto ext = rootsys::extend_affine(d);
  ChamberState state = initial_state(ext, {vertex});
  std::vector<WallRecord> out;
  int next = vertex;
  for (int k = 0; k < count; ++k) {
    auto [after, rec] = cross(ext, state, next);
    rec.position = k;
    out.push_back(rec);
    state = after;
    next = -1;
    for (int u : state.shaded)
      if (u != *state.last_crossed) next = u;
    if (next < 0) throw InternalError("walk state lost its second shaded vertex");
  }
  return out;
}

Period period_1d(const rootsys::DynkinDiagram& d, int vertex) {
  const auto ext = rootsys::extend_affine(d);
  ChamberState state = initial_state(ext, {vertex});
  int next = vertex;

  std::map<ChamberState, int> first_seen;  // state after crossing t -> t
  std::vector<int> labels;                 // labels[t] = label of crossing t
  int repeat_from = -1;
  for (int t = 0; t < kCrossingGuard; ++t) {
    auto [after, rec] = cross(ext, state, next);
    state = after;
    labels.push_back(rec.label);
    const auto [it, inserted] = first_seen.emplace(state, t);
    if (!inserted) {
      repeat_from = it->second;
      break;
    }
    next = -1;
    for (int u : state.shaded)
      if (u != *state.last_crossed) next = u;
  }
  if (repeat_from < 0) throw InternalError("walk failed to recur within the crossing guard");

  // One full cycle of labels: crossings repeat_from+1 .. t_repeat.
  const std::vector<int> window(labels.begin() + repeat_from + 1, labels.end());
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (window[i] == 1) ones.push_back(i);
  if (ones.empty()) throw InternalError("walk cycle contains no label-1 wall");

  const std::size_t n = window.size() / ones.size();
  if (n * ones.size() != window.size())
    throw InternalError("label-1 walls do not divide the walk cycle evenly");
  // Equal consecutive gaps force the wrap-around gap too, given the division.
  for (std::size_t k = 0; k + 1 < ones.size(); ++k)
    if (ones[k + 1] - ones[k] != n)
      throw InternalError("label-1 walls are not evenly spaced along the cycle");

  Period p;
  p.wall_count = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i)
    p.equator_labels.push_back(window[(ones.front() + i) % window.size()]);
  // All unit windows must agree, or the translation is not a symmetry.
  for (std::size_t k = 1; k < ones.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (window[(ones[k] + i) % window.size()] != p.equator_labels[i])
        throw InternalError("unit windows of the walk cycle disagree");
  return p;
}

ChamberGraph chamber_graph(const rootsys::DynkinDiagram& d,
                           const std::vector<int>& chosen, int max_depth) {
  if (max_depth < 1) throw DomainError("depth must be at least 1");
  const auto ext = rootsys::extend_affine(d);
  const ChamberState start = initial_state(ext, chosen);
  if (start.shaded.size() > 3)
    throw DomainError("at most two chosen vertices are supported");

  ChamberGraph g;
  std::map<std::vector<int>, int> index;
  std::deque<std::pair<int, int>> queue;  // node id, depth
  g.nodes.push_back(start.shaded);
  index[start.shaded] = 0;
  queue.emplace_back(0, 0);

  while (!queue.empty()) {
    const auto [id, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    const std::vector<int> shaded = g.nodes[static_cast<std::size_t>(id)];
    for (int v : shaded) {
      const auto [after, rec] = cross(ext, ChamberState{shaded, std::nullopt}, v);
      auto it = index.find(after.shaded);
      if (it == index.end()) {
        const int nid = static_cast<int>(g.nodes.size());
        g.nodes.push_back(after.shaded);
        it = index.emplace(after.shaded, nid).first;
        queue.emplace_back(nid, depth + 1);
      }
      g.edges.push_back(ChamberGraph::Edge{id, it->second, rec.label, v});
    }
  }
  return g;
}

std::string chamber_graph_json(const ChamberGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    j["nodes"].push_back({{"id", i}, {"shaded", g.nodes[i]}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"label", e.label},
                          {"crossedVertex", e.crossed_vertex}});
  return j.dump();
}

}  // namespace flopkit::walk
