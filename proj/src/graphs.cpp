#include "arrlab/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

FanGraph build_fan(const Arrangement& a, const std::vector<MultiplePoint>& verts, bool by_x) {
  FanGraph f;
  f.vertices = verts;
  f.per_line.assign(static_cast<size_t>(a.size()), {});
  for (int v = 0; v < f.vertex_count(); ++v)
    for (int l : f.vertices[static_cast<size_t>(v)].incident)
      f.per_line[static_cast<size_t>(l)].push_back(v);
  for (int l = 0; l < a.size(); ++l) {
    auto& vs = f.per_line[static_cast<size_t>(l)];
    if (by_x)
      std::sort(vs.begin(), vs.end(), [&](int p, int q) {
        return f.vertices[static_cast<size_t>(p)].point.affine_x() <
               f.vertices[static_cast<size_t>(q)].point.affine_x();
      });
    // multiple_points already sorts vertices by normalized coordinates, so
    // the default order is the deterministic point order
    for (size_t i = 0; i + 1 < vs.size(); ++i)
      f.edges.push_back(GraphEdge{vs[i], vs[i + 1], l});
  }
  return f;
}

}  // namespace

FanGraph fan_graph(const Arrangement& a) {
  if (a.form != Form::projective) throw StructureError("fan_graph expects a projective arrangement");
  return build_fan(a, multiple_points(a, 3), false);
}

FanGraph fan_graph_affine(const Arrangement& a) {
  if (a.form != Form::affine) throw StructureError("fan_graph_affine expects an affine arrangement");
  for (const auto& l : a.lines)
    if (l.is_vertical()) throw NeedsShear("affine Fan graph needs no vertical lines");
  return build_fan(a, multiple_points(a, 3), true);
}

ForestCertificate is_forest(const FanGraph& f) {
  int n = f.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };

  ForestCertificate cert;
  int offending = -1;
  for (int e = 0; e < f.edge_count(); ++e) {
    int a = find(f.edges[static_cast<size_t>(e)].v);
    int b = find(f.edges[static_cast<size_t>(e)].w);
    if (a == b) {
      offending = e;
      break;
    }
    parent[static_cast<size_t>(a)] = b;
  }

  if (offending < 0) {
    cert.forest = true;
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
    for (auto& [root, members] : comps) cert.components.push_back(members);
    return cert;
  }

  // recover a cycle: path between the endpoints of the offending edge through
  // the already-joined edges, then close it up
  cert.forest = false;
  int s = f.edges[static_cast<size_t>(offending)].v;
  int t = f.edges[static_cast<size_t>(offending)].w;
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n)); // (vertex, edge)
  for (int e = 0; e < offending; ++e) {
    adj[static_cast<size_t>(f.edges[static_cast<size_t>(e)].v)].push_back({f.edges[static_cast<size_t>(e)].w, e});
    adj[static_cast<size_t>(f.edges[static_cast<size_t>(e)].w)].push_back({f.edges[static_cast<size_t>(e)].v, e});
  }
  std::vector<int> prev_vertex(static_cast<size_t>(n), -1), prev_edge(static_cast<size_t>(n), -1);
  std::vector<int> stack{s};
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[static_cast<size_t>(s)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == t) break;
    for (auto [w, e] : adj[static_cast<size_t>(v)]) {
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      prev_vertex[static_cast<size_t>(w)] = v;
      prev_edge[static_cast<size_t>(w)] = e;
      stack.push_back(w);
    }
  }
  std::vector<int> path_vertices, path_edges;
  for (int v = t; v != -1; v = prev_vertex[static_cast<size_t>(v)]) {
    path_vertices.push_back(v);
    if (prev_edge[static_cast<size_t>(v)] >= 0) path_edges.push_back(prev_edge[static_cast<size_t>(v)]);
  }
  std::reverse(path_vertices.begin(), path_vertices.end());
  std::reverse(path_edges.begin(), path_edges.end());
  cert.cycle_vertices = path_vertices; // s ... t
  cert.cycle_vertices.push_back(s);    // close with the offending edge
  cert.cycle_edges = path_edges;
  cert.cycle_edges.push_back(offending);
  return cert;
}

JYGraph jy_graph(const Arrangement& a) {
  if (a.form != Form::projective) throw StructureError("jy_graph expects a projective arrangement");
  JYGraph g;
  g.vertices = multiple_points(a, 3);
  int n = g.vertex_count();
  g.adjacent_edges.assign(static_cast<size_t>(n), {});
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      // the spanning line must itself belong to the arrangement
      std::vector<int> common;
      std::set_intersection(g.vertices[static_cast<size_t>(v)].incident.begin(),
                            g.vertices[static_cast<size_t>(v)].incident.end(),
                            g.vertices[static_cast<size_t>(w)].incident.begin(),
                            g.vertices[static_cast<size_t>(w)].incident.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      if (common.size() > 1) throw StructureError("two points on two distinct lines");
      int e = static_cast<int>(g.edges.size());
      g.edges.push_back(GraphEdge{v, w, common.front()});
      g.adjacent_edges[static_cast<size_t>(v)].push_back(e);
      g.adjacent_edges[static_cast<size_t>(w)].push_back(e);
    }
  return g;
}

Star star_of(const JYGraph& g, int v) {
  Star s;
  s.center = v;
  std::set<int> verts{v};
  std::set<int> lines_through_v(g.vertices[static_cast<size_t>(v)].incident.begin(),
                                g.vertices[static_cast<size_t>(v)].incident.end());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& ed = g.edges[static_cast<size_t>(e)];
    bool touches = ed.v == v || ed.w == v;
    bool collinear = lines_through_v.count(ed.line) > 0;
    if (touches || collinear) s.edges.push_back(e);
    if (touches) {
      verts.insert(ed.v);
      verts.insert(ed.w);
    }
  }
  s.vertices.assign(verts.begin(), verts.end());
  return s;
}

namespace {

// Reduced circles are exactly directed cycles in the edge-transition graph
// whose moves change the carrying line, wrap-around included.
std::optional<std::vector<int>> reduced_circle_in(const JYGraph& g,
                                                  const std::vector<bool>& edge_alive,
                                                  const std::vector<bool>& vertex_alive) {
  struct DirEdge {
    int from, to, line, undirected;
  };
  std::vector<DirEdge> dir;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!edge_alive[static_cast<size_t>(e)]) continue;
    const auto& ed = g.edges[static_cast<size_t>(e)];
    if (!vertex_alive[static_cast<size_t>(ed.v)] || !vertex_alive[static_cast<size_t>(ed.w)]) continue;
    dir.push_back(DirEdge{ed.v, ed.w, ed.line, e});
    dir.push_back(DirEdge{ed.w, ed.v, ed.line, e});
  }
  int m = static_cast<int>(dir.size());
  std::vector<std::vector<int>> out(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (dir[static_cast<size_t>(i)].to == dir[static_cast<size_t>(j)].from &&
          dir[static_cast<size_t>(i)].line != dir[static_cast<size_t>(j)].line)
        out[static_cast<size_t>(i)].push_back(j);

  // iterative DFS with colors; a back edge closes a reduced circle
  std::vector<int> color(static_cast<size_t>(m), 0); // 0 new, 1 on stack, 2 done
  std::vector<int> stack_pos(static_cast<size_t>(m), -1);
  std::vector<int> path;
  std::function<std::optional<std::vector<int>>(int)> dfs =
      [&](int u) -> std::optional<std::vector<int>> {
    color[static_cast<size_t>(u)] = 1;
    stack_pos[static_cast<size_t>(u)] = static_cast<int>(path.size());
    path.push_back(u);
    for (int v : out[static_cast<size_t>(u)]) {
      if (color[static_cast<size_t>(v)] == 1) {
        std::vector<int> cycle(path.begin() + stack_pos[static_cast<size_t>(v)], path.end());
        std::vector<int> witness;
        for (int de : cycle) witness.push_back(dir[static_cast<size_t>(de)].from);
        witness.push_back(dir[static_cast<size_t>(cycle.front())].from);
        return witness;
      }
      if (color[static_cast<size_t>(v)] == 0)
        if (auto w = dfs(v)) return w;
    }
    path.pop_back();
    color[static_cast<size_t>(u)] = 2;
    return std::nullopt;
  };
  for (int u = 0; u < m; ++u)
    if (color[static_cast<size_t>(u)] == 0)
      if (auto w = dfs(u)) return w;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> has_reduced_circle(const JYGraph& g) {
  std::vector<bool> edges(g.edges.size(), true), verts(static_cast<size_t>(g.vertex_count()), true);
  return reduced_circle_in(g, edges, verts);
}

std::optional<std::vector<int>> is_nice(const Arrangement& a, int max_vertices) {
  JYGraph g = jy_graph(a.form == Form::projective ? a : cone(a));
  int n = g.vertex_count();
  if (n > max_vertices)
    throw SearchBoundExceeded("JY graph has " + std::to_string(n) + " vertices, bound " +
                              std::to_string(max_vertices));

  std::vector<Star> stars;
  for (int v = 0; v < n; ++v) stars.push_back(star_of(g, v));
  auto disjoint = [&](const Star& s1, const Star& s2) {
    std::vector<int> common;
    std::set_intersection(s1.vertices.begin(), s1.vertices.end(), s2.vertices.begin(),
                          s2.vertices.end(), std::back_inserter(common));
    if (!common.empty()) return false;
    std::set_intersection(s1.edges.begin(), s1.edges.end(), s2.edges.begin(), s2.edges.end(),
                          std::back_inserter(common));
    return common.empty();
  };

  auto check = [&](const std::vector<int>& centers) {
    std::vector<bool> edge_alive(g.edges.size(), true);
    std::vector<bool> vertex_alive(static_cast<size_t>(n), true);
    for (int c : centers) {
      for (int e : stars[static_cast<size_t>(c)].edges) edge_alive[static_cast<size_t>(e)] = false;
      vertex_alive[static_cast<size_t>(c)] = false;
    }
    return !reduced_circle_in(g, edge_alive, vertex_alive).has_value();
  };

  // subsets by increasing size, vertices in deterministic order
  std::vector<int> current;
  std::function<std::optional<std::vector<int>>(int, int, int)> search =
      [&](int size, int depth, int from) -> std::optional<std::vector<int>> {
    if (depth == size) {
      if (check(current)) return current;
      return std::nullopt;
    }
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int c : current)
        if (!disjoint(stars[static_cast<size_t>(c)], stars[static_cast<size_t>(v)])) ok = false;
      if (!ok) continue;
      current.push_back(v);
      if (auto w = search(size, depth + 1, v + 1)) return w;
      current.pop_back();
    }
    return std::nullopt;
  };
  for (int size = 0; size <= n; ++size)
    if (auto w = search(size, 0, 0)) return w;
  return std::nullopt;
}

}  // namespace arrlab
