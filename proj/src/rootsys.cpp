#include "rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "errors.hpp"

namespace flopkit::rootsys {

std::string type_name(DiagramType t) {
  switch (t) {
    case DiagramType::A: return "A";
    case DiagramType::D: return "D";
    case DiagramType::E: return "E";
  }
  throw InternalError("unhandled diagram type");
}

bool DynkinDiagram::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

std::vector<int> DynkinDiagram::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DynkinDiagram build_diagram(DiagramType type, int rank) {
  const auto reject = [&] {
    throw DomainError("invalid rank " + std::to_string(rank) + " for type " + type_name(type));
  };
  DynkinDiagram d;
  d.type = type;
  d.rank = rank;
  switch (type) {
    case DiagramType::A:
      if (rank < 1) reject();
      for (int i = 1; i < rank; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case DiagramType::D:
      if (rank < 4) reject();
      for (int i = 1; i < rank - 2; ++i) d.edges.emplace_back(i, i + 1);
      d.edges.emplace_back(rank - 2, rank - 1);
      d.edges.emplace_back(rank - 2, rank);
      break;
    case DiagramType::E:
      if (rank < 6 || rank > 8) reject();
      for (int i = 1; i < rank - 1; ++i) d.edges.emplace_back(i, i + 1);
      d.edges.emplace_back(3, rank);
      break;
  }
  return d;
}

DynkinDiagram parse_diagram(const std::string& name) {
  if (name.size() < 2) throw DomainError("malformed diagram name: '" + name + "'");
  DiagramType type;
  switch (name[0]) {
    case 'A': type = DiagramType::A; break;
    case 'D': type = DiagramType::D; break;
    case 'E': type = DiagramType::E; break;
    default: throw DomainError("malformed diagram name: '" + name + "'");
  }
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9')
      throw DomainError("malformed diagram name: '" + name + "'");
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw DomainError("malformed diagram name: '" + name + "'");
  }
  return build_diagram(type, rank);
}

namespace {

bool is_zero(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

std::vector<Root> positive_roots(const DynkinDiagram& d) {
  const int n = d.rank;
  const auto cartan = [&](int i, int j) {  // 0-based
    if (i == j) return 2;
    return d.adjacent(i + 1, j + 1) ? -1 : 0;
  };

  std::set<Root> known;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }

  // Breadth-first by height.  For a root r and simple root e_i, the string
  // r - p e_i ... r + q e_i satisfies p - q = <r, e_i^v>; everything below r
  // in height is already in `known`, so p is computable and q decides whether
  // r + e_i is a root.
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan(i, j) * r[j];
        int p = 0;
        for (Root s = r;;) {
          if (s[i] == 0) break;
          s[i] -= 1;
          if (is_zero(s) || known.find(s) == known.end()) break;
          ++p;
        }
        if (p - pairing > 0) {
          Root up = r;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Root> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::vector<int> highest_root_labels(const DynkinDiagram& d) {
  const auto roots = positive_roots(d);
  const Root& top = roots.back();
  if (roots.size() >= 2 && height(roots[roots.size() - 2]) == height(top))
    throw InternalError("highest root is not unique");
  return top;
}

namespace {

// Returns the vertices of `graph` ordered along a path, starting from the
// smaller endpoint.  Assumes `graph` is a path.
std::vector<int> order_path(const std::map<int, std::vector<int>>& graph) {
  if (graph.size() == 1) return {graph.begin()->first};
  int start = -1;
  for (const auto& [v, nbrs] : graph)
    if (nbrs.size() == 1) {
      start = v;
      break;
    }
  if (start < 0) throw InternalError("component is not of A/D/E shape (cycle)");
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (true) {
    const auto& nbrs = graph.at(cur);
    int next = -1;
    for (int u : nbrs)
      if (u != prev) next = u;
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  if (out.size() != graph.size()) throw InternalError("component is not connected");
  return out;
}

struct Arms {
  int branch = 0;
  std::vector<std::vector<int>> arms;  // outward from branch, sorted by (length, first id)
};

// Decomposes a graph with exactly one degree-3 vertex into its three arms.
Arms split_arms(const std::map<int, std::vector<int>>& graph, int branch) {
  Arms a;
  a.branch = branch;
  for (int first : graph.at(branch)) {
    std::vector<int> arm{first};
    int prev = branch, cur = first;
    while (true) {
      const auto& nbrs = graph.at(cur);
      if (nbrs.size() > 2) throw InternalError("component is not of A/D/E shape (two branch points)");
      int next = -1;
      for (int u : nbrs)
        if (u != prev) next = u;
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    a.arms.push_back(std::move(arm));
  }
  std::sort(a.arms.begin(), a.arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
  std::size_t total = 1;
  for (const auto& arm : a.arms) total += arm.size();
  if (total != graph.size()) throw InternalError("component is not connected");
  return a;
}

}  // namespace

Shape classify_shape(const std::map<int, std::vector<int>>& graph) {
  if (graph.empty()) throw InternalError("empty component");
  std::vector<int> branch_points;
  for (const auto& [v, nbrs] : graph) {
    if (nbrs.size() > 3) throw InternalError("component is not of A/D/E shape (degree > 3)");
    if (nbrs.size() == 3) branch_points.push_back(v);
  }
  const int n = static_cast<int>(graph.size());
  if (branch_points.empty()) {
    order_path(graph);  // validates path-ness
    return {DiagramType::A, n};
  }
  if (branch_points.size() > 1)
    throw InternalError("component is not of A/D/E shape (two branch points)");
  const Arms a = split_arms(graph, branch_points.front());
  const std::size_t l0 = a.arms[0].size(), l1 = a.arms[1].size(), l2 = a.arms[2].size();
  if (l0 == 1 && l1 == 1) return {DiagramType::D, n};
  if (l0 == 1 && l1 == 2 && l2 <= 4) return {DiagramType::E, n};
  throw InternalError("component is not of A/D/E shape (arm profile)");
}

std::map<int, int> ade_involution(const std::map<int, std::vector<int>>& graph) {
  const Shape shape = classify_shape(graph);
  std::map<int, int> out;
  for (const auto& [v, nbrs] : graph) out[v] = v;

  if (shape.type == DiagramType::A) {
    const auto path = order_path(graph);
    const std::size_t m = path.size();
    for (std::size_t k = 0; k < m; ++k) out[path[k]] = path[m - 1 - k];
    return out;
  }

  int branch = 0;
  for (const auto& [v, nbrs] : graph)
    if (nbrs.size() == 3) branch = v;
  const Arms a = split_arms(graph, branch);

  if (shape.type == DiagramType::D) {
    if (shape.rank % 2 == 1) {  // odd rank: swap the two fork tips
      out[a.arms[0].front()] = a.arms[1].front();
      out[a.arms[1].front()] = a.arms[0].front();
    }
    return out;
  }

  if (shape.rank == 6) {  // E6: reflect the two long arms through the short one
    for (std::size_t k = 0; k < 2; ++k) {
      out[a.arms[1][k]] = a.arms[2][k];
      out[a.arms[2][k]] = a.arms[1][k];
    }
  }
  return out;  // E7, E8: identity
}

std::vector<int> dynkin_involution(const DynkinDiagram& d) {
  std::map<int, std::vector<int>> graph;
  for (int v = 1; v <= d.rank; ++v) graph[v] = d.neighbours(v);
  const auto m = ade_involution(graph);
  std::vector<int> out(static_cast<std::size_t>(d.rank));
  for (int v = 1; v <= d.rank; ++v) out[static_cast<std::size_t>(v) - 1] = m.at(v);
  return out;
}

bool ExtendedDiagram::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (v == affine_vertex)
    return std::find(affine_attachments.begin(), affine_attachments.end(), u) !=
           affine_attachments.end();
  return base.adjacent(u, v);
}

std::vector<int> ExtendedDiagram::neighbours(int v) const {
  if (v == affine_vertex) return affine_attachments;
  std::vector<int> out = base.neighbours(v);
  if (adjacent(v, affine_vertex)) out.push_back(affine_vertex);
  return out;
}

ExtendedDiagram extend_affine(const DynkinDiagram& d) {
  ExtendedDiagram e;
  e.base = d;
  e.affine_vertex = d.rank + 1;
  e.labels = highest_root_labels(d);
  e.labels.push_back(1);

  // The attachment points are exactly where the balance condition
  // 2*label(v) = sum of neighbour labels fails by the label of the new
  // vertex.  Rank-1 type A is the degenerate case: the single vertex is short
  // by 2, which the doubled bond supplies.
  if (d.type == DiagramType::A && d.rank == 1) {
    e.affine_attachments = {1};
    e.affine_a1 = true;
    return e;
  }
  for (int v = 1; v <= d.rank; ++v) {
    int sum = 0;
    for (int u : d.neighbours(v)) sum += e.label(u);
    const int defect = 2 * e.label(v) - sum;
    if (defect == 1)
      e.affine_attachments.push_back(v);
    else if (defect != 0)
      throw InternalError("unexpected balance defect at vertex " + std::to_string(v));
  }
  int attach_sum = 0;
  for (int v : e.affine_attachments) attach_sum += e.label(v);
  if (attach_sum != 2) throw InternalError("balance fails at the attached vertex");
  return e;
}

}  // namespace flopkit::rootsys
