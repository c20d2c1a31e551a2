#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flopkit::rootsys {

enum class DiagramType { A, D, E };

std::string type_name(DiagramType t);

// Simply laced Dynkin diagram with the canonical vertex numbering:
//   A_n : 1..n along the chain
//   D_n : 1..n-2 along the chain, fork vertices n-1 and n both attached to n-2
//   E_n : chain 1..n-1 numbered from the end further from the branch point,
//         vertex n attached to chain vertex 3
// Valid ranks: A_n n>=1, D_n n>=4, E_n n in {6,7,8}.
struct DynkinDiagram {
  DiagramType type = DiagramType::A;
  int rank = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, 1-based vertex ids

  bool adjacent(int u, int v) const;
  std::vector<int> neighbours(int v) const;
};

DynkinDiagram build_diagram(DiagramType type, int rank);

// Parses names like "A7", "D12", "E6".
DynkinDiagram parse_diagram(const std::string& name);

// A root written in the basis of simple roots; entry v-1 is the coefficient
// at vertex v.
using Root = std::vector<int>;

// All positive roots, computed by closing the simple roots under root-string
// addition.  Sorted by (height, lexicographic) so output is deterministic.
std::vector<Root> positive_roots(const DynkinDiagram& d);

// Coefficients of the unique maximal-height root, indexed by vertex - 1.
std::vector<int> highest_root_labels(const DynkinDiagram& d);

// Image of each vertex (index v-1) under the canonical diagram involution:
// chain reversal for A_n, fork swap for D_n with n odd, the reflection for
// E6, and the identity otherwise (including D_n with n even).
std::vector<int> dynkin_involution(const DynkinDiagram& d);

struct Shape {
  DiagramType type = DiagramType::A;
  int rank = 0;
  bool operator==(const Shape&) const = default;
};

// Classifies a connected simply laced graph, given as vertex -> sorted
// neighbour list.  Throws InternalError if the graph is not of A/D/E shape;
// the callers only ever feed it graphs that must be.
Shape classify_shape(const std::map<int, std::vector<int>>& graph);

// The canonical involution of such a graph, as a vertex -> image map over
// exactly the vertices of `graph`.  Does not depend on how the component was
// numbered, only on its shape.
std::map<int, int> ade_involution(const std::map<int, std::vector<int>>& graph);

// The diagram with the extra balance vertex attached.  Labels extend the
// highest-root labels by 1 at the new vertex, and then every vertex v
// satisfies 2 * label(v) = sum of neighbour labels.  For rank-1 type A the
// attachment is a doubled bond, recorded by the flag instead of a second
// edge.
struct ExtendedDiagram {
  DynkinDiagram base;
  int affine_vertex = 0;                // always base.rank + 1
  std::vector<int> affine_attachments;  // base vertices joined to it, sorted
  bool affine_a1 = false;
  std::vector<int> labels;              // index v-1, over 1..rank+1

  int vertex_count() const { return base.rank + 1; }
  int label(int v) const { return labels[static_cast<std::size_t>(v) - 1]; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbours(int v) const;
};

ExtendedDiagram extend_affine(const DynkinDiagram& d);

}  // namespace flopkit::rootsys
