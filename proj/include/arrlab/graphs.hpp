#pragma once

#include <optional>
#include <vector>

#include "arrlab/geometry.hpp"

namespace arrlab {

struct GraphEdge {
  int v = 0;
  int w = 0;
  int line = 0; // arrangement line carrying the edge
};

// Fan's graph: vertices are points of multiplicity >= 3, each line contributes
// a path through its vertices in the deterministic point order.
struct FanGraph {
  std::vector<MultiplePoint> vertices;
  std::vector<std::vector<int>> per_line; // vertex ids per arrangement line
  std::vector<GraphEdge> edges;
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

FanGraph fan_graph(const Arrangement& a);
// Affine variant: finite multiple points, each line's vertices ordered by x.
FanGraph fan_graph_affine(const Arrangement& a);

struct ForestCertificate {
  bool forest = true;
  std::vector<std::vector<int>> components;   // when forest
  std::vector<int> cycle_vertices;            // closed walk when not
  std::vector<int> cycle_edges;
};

ForestCertificate is_forest(const FanGraph& f);

// Jiang-Yau graph: an edge for every vertex pair spanning an arrangement line.
struct JYGraph {
  std::vector<MultiplePoint> vertices;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> adjacent_edges; // edge ids per vertex
  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

JYGraph jy_graph(const Arrangement& a);

struct Star {
  int center = 0;
  std::vector<int> vertices;
  std::vector<int> edges;
};

Star star_of(const JYGraph& g, int v);

// Closed vertex tuple (first == last) whose consecutive triples are never
// collinear, including around the wrap; nullopt when none exists.
std::optional<std::vector<int>> has_reduced_circle(const JYGraph& g);

struct NiceResult {
  bool nice = false;
  std::vector<int> witness; // centers of the pairwise disjoint stars
};

// Searches vertex subsets (smallest first, the empty set included) with
// pairwise disjoint stars whose removal leaves no reduced circle.
std::optional<std::vector<int>> is_nice(const Arrangement& a, int max_vertices = 20);

}  // namespace arrlab
