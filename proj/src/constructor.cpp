#include "arrlab/constructor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"

namespace arrlab {

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Pencil: return "pencil";
    case StepKind::TP3: return "tp3";
    case StepKind::D3: return "d3";
    case StepKind::AddGenericLine: return "add_generic_line";
    case StepKind::Nodal: return "nodal";
  }
  return "?";
}

Arrangement build_affine_nodal(const TypeVector& type) {
  if (type.empty()) throw EmptyType("type vector is empty");
  for (int m : type)
    if (m < 1) throw EmptyType("type entries must be positive");
  std::vector<Line> lines;
  int r = static_cast<int>(type.size());
  for (int fam = 1; fam <= r; ++fam) {
    for (int member = 0; member < type[static_cast<size_t>(fam - 1)]; ++member) {
      bool placed = false;
      for (int offset = 0; offset < 4096 && !placed; ++offset) {
        // slope fam, candidate intercept: fam*x - y + offset = 0
        Line cand = Line::from_triple({Int(fam), Int(-1), Int(offset)});
        std::vector<Line> probe = lines;
        probe.push_back(cand);
        Arrangement test = make_affine(probe);
        if (!multiple_points(test, 3).empty()) continue;
        if (!is_ra_generic(test)) continue;
        lines = std::move(probe);
        placed = true;
      }
      if (!placed) throw GenericityFailure("no nodal offset found");
    }
  }
  return make_affine(std::move(lines));
}

namespace {

struct TreeContext {
  const FanGraph* fan;
  std::vector<std::set<int>> verts_on_line; // graph vertices per line
};

// Lines incident to any vertex of the component.
std::vector<int> component_lines(const TreeContext& ctx, const std::set<int>& verts) {
  std::set<int> lines;
  for (int v : verts)
    for (int l : ctx.fan->vertices[static_cast<size_t>(v)].incident) lines.insert(l);
  return {lines.begin(), lines.end()};
}

// Lemma-3.10 peel: single-edge vertices come off as pencils glued by TP3.
int tree_plan(BuildPlan& plan, const TreeContext& ctx, std::set<int> verts) {
  if (verts.size() == 1) {
    int v = *verts.begin();
    BuildStep step;
    step.kind = StepKind::Pencil;
    step.mu = ctx.fan->vertices[static_cast<size_t>(v)].multiplicity();
    step.provenance = ctx.fan->vertices[static_cast<size_t>(v)].incident;
    plan.steps.push_back(std::move(step));
    return static_cast<int>(plan.steps.size()) - 1;
  }

  // leaf vertex with the lexicographically smallest coordinates
  int leaf = -1, carrier = -1;
  for (int v : verts) {
    std::vector<int> carriers;
    for (int l : ctx.fan->vertices[static_cast<size_t>(v)].incident) {
      int others = 0;
      for (int w : ctx.verts_on_line[static_cast<size_t>(l)])
        if (w != v && verts.count(w)) others++;
      if (others > 0) carriers.push_back(l);
    }
    if (carriers.size() != 1) continue;
    if (leaf < 0 || ctx.fan->vertices[static_cast<size_t>(v)].point <
                        ctx.fan->vertices[static_cast<size_t>(leaf)].point) {
      leaf = v;
      carrier = carriers.front();
    }
  }
  if (leaf < 0) throw StructureError("tree component without a leaf");

  std::set<int> rest = verts;
  rest.erase(leaf);
  int sub = tree_plan(plan, ctx, rest);

  BuildStep pencil;
  pencil.kind = StepKind::Pencil;
  pencil.mu = ctx.fan->vertices[static_cast<size_t>(leaf)].multiplicity();
  pencil.provenance.push_back(carrier); // base line first
  for (int l : ctx.fan->vertices[static_cast<size_t>(leaf)].incident)
    if (l != carrier) pencil.provenance.push_back(l);
  plan.steps.push_back(pencil);
  int pencil_id = static_cast<int>(plan.steps.size()) - 1;

  int base_right = -1;
  const auto& sub_prov = plan.steps[static_cast<size_t>(sub)].provenance;
  for (size_t i = 0; i < sub_prov.size(); ++i)
    if (sub_prov[i] == carrier) base_right = static_cast<int>(i);
  if (base_right < 0) throw StructureError("carrier line missing from the sub-plan");

  BuildStep join;
  join.kind = StepKind::TP3;
  join.left = pencil_id;
  join.base_left = 0;
  join.right = sub;
  join.base_right = base_right;
  join.provenance = plan.steps[static_cast<size_t>(pencil_id)].provenance;
  for (size_t i = 0; i < sub_prov.size(); ++i)
    if (static_cast<int>(i) != base_right) join.provenance.push_back(sub_prov[i]);
  plan.steps.push_back(std::move(join));
  return static_cast<int>(plan.steps.size()) - 1;
}

}  // namespace

BuildPlan plan_construction(const Arrangement& a) {
  Arrangement proj = a.form == Form::projective ? a : cone(a);
  FanGraph fan = fan_graph(proj);
  ForestCertificate cert = is_forest(fan);
  if (!cert.forest) throw NotDirectSumOfFreeGroups("Fan graph contains a cycle");

  BuildPlan plan;
  plan.source = proj;

  TreeContext ctx;
  ctx.fan = &fan;
  ctx.verts_on_line.assign(static_cast<size_t>(proj.size()), {});
  for (int v = 0; v < fan.vertex_count(); ++v)
    for (int l : fan.vertices[static_cast<size_t>(v)].incident)
      ctx.verts_on_line[static_cast<size_t>(l)].insert(v);

  std::set<int> lines_with_vertex;
  int root = -1;
  for (const auto& comp : cert.components) {
    std::set<int> verts(comp.begin(), comp.end());
    for (int l : component_lines(ctx, verts)) lines_with_vertex.insert(l);
    int comp_step = tree_plan(plan, ctx, verts);
    if (root < 0) {
      root = comp_step;
    } else {
      BuildStep join;
      join.kind = StepKind::D3;
      join.left = root;
      join.right = comp_step;
      join.provenance = plan.steps[static_cast<size_t>(root)].provenance;
      const auto& rp = plan.steps[static_cast<size_t>(comp_step)].provenance;
      join.provenance.insert(join.provenance.end(), rp.begin(), rp.end());
      plan.steps.push_back(std::move(join));
      root = static_cast<int>(plan.steps.size()) - 1;
    }
  }

  if (root >= 0 && plan.steps[static_cast<size_t>(root)].kind == StepKind::Pencil) {
    // a bare pencil closes with the vacuous transversal connection
    BuildStep single;
    single.kind = StepKind::Pencil;
    single.mu = 1;
    single.provenance = {plan.steps[static_cast<size_t>(root)].provenance.front()};
    plan.steps.push_back(single);
    BuildStep join;
    join.kind = StepKind::TP3;
    join.left = root;
    join.base_left = 0;
    join.right = static_cast<int>(plan.steps.size()) - 1;
    join.base_right = 0;
    join.provenance = plan.steps[static_cast<size_t>(root)].provenance;
    plan.steps.push_back(std::move(join));
    root = static_cast<int>(plan.steps.size()) - 1;
  }

  for (int l = 0; l < proj.size(); ++l) {
    if (lines_with_vertex.count(l)) continue;
    if (root < 0) {
      BuildStep seed;
      seed.kind = StepKind::Pencil;
      seed.mu = 1;
      seed.provenance = {l};
      plan.steps.push_back(std::move(seed));
      root = static_cast<int>(plan.steps.size()) - 1;
      continue;
    }
    BuildStep add;
    add.kind = StepKind::AddGenericLine;
    add.left = root;
    add.provenance = plan.steps[static_cast<size_t>(root)].provenance;
    add.provenance.push_back(l);
    plan.steps.push_back(std::move(add));
    root = static_cast<int>(plan.steps.size()) - 1;
  }
  return plan;
}

namespace {

Arrangement pencil_realization(int mu) {
  std::vector<Line> lines;
  lines.push_back(Line::from_triple({Int(0), Int(0), Int(1)}));
  for (int i = 0; i + 1 < mu; ++i)
    lines.push_back(Line::from_triple({Int(1), Int(0), Int(-i)}));
  if (mu == 1) lines = {Line::from_triple({Int(1), Int(0), Int(0)})};
  return make_projective(std::move(lines));
}

Arrangement add_generic_line(const Arrangement& a) {
  IntersectionLattice base = lattice_of(a);
  IntersectionLattice one_line(1, {Flat{{}, 0}, Flat{{0}, 1}});
  IntersectionLattice expected = truncate_to_rank3(direct_sum_lattice(base, one_line));
  for (int t = 1; t <= 256; ++t)
    for (int c = 0; c <= 256; ++c) {
      Line cand = Line::from_triple({Int(1), Int(t), Int(c)});
      bool dup = false;
      for (const auto& l : a.lines)
        if (l == cand) dup = true;
      if (dup) continue;
      std::vector<Line> lines = a.lines;
      lines.push_back(cand);
      Arrangement probe = make_projective(lines);
      if (lattice_of(probe) == expected) return probe;
    }
  throw GenericityFailure("no generic line found");
}

}  // namespace

ExecuteResult execute_plan(const BuildPlan& plan) {
  struct Value {
    Arrangement arr;
    std::vector<int> prov;
  };
  std::vector<Value> values(plan.steps.size());

  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const BuildStep& s = plan.steps[i];
    auto child = [&](int id) -> const Value& {
      if (id < 0 || id >= static_cast<int>(i))
        throw StructureError("plan step references a later step");
      return values[static_cast<size_t>(id)];
    };
    switch (s.kind) {
      case StepKind::Pencil: {
        values[i] = Value{pencil_realization(s.mu), s.provenance};
        if (static_cast<int>(s.provenance.size()) != s.mu)
          throw StructureError("pencil provenance size mismatch");
        break;
      }
      case StepKind::Nodal: {
        Arrangement nodal = cone(build_affine_nodal(s.type));
        values[i] = Value{nodal, std::vector<int>(static_cast<size_t>(nodal.size()), -1)};
        break;
      }
      case StepKind::TP3: {
        const Value& l = child(s.left);
        const Value& r = child(s.right);
        Arrangement joined = tp3(l.arr, s.base_left, r.arr, s.base_right);
        std::vector<int> prov = l.prov;
        for (size_t k = 0; k < r.prov.size(); ++k)
          if (static_cast<int>(k) != s.base_right) prov.push_back(r.prov[k]);
        values[i] = Value{std::move(joined), std::move(prov)};
        break;
      }
      case StepKind::D3: {
        const Value& l = child(s.left);
        const Value& r = child(s.right);
        Arrangement joined = d3(l.arr, r.arr);
        std::vector<int> prov = l.prov;
        prov.insert(prov.end(), r.prov.begin(), r.prov.end());
        values[i] = Value{std::move(joined), std::move(prov)};
        break;
      }
      case StepKind::AddGenericLine: {
        const Value& l = child(s.left);
        Arrangement grown = add_generic_line(l.arr);
        std::vector<int> prov = l.prov;
        prov.push_back(s.provenance.empty() ? -1 : s.provenance.back());
        values[i] = Value{std::move(grown), std::move(prov)};
        break;
      }
    }
    if (values[i].arr.size() != static_cast<int>(values[i].prov.size()))
      throw StructureError("provenance does not cover the step output");
  }

  if (plan.steps.empty()) {
    if (plan.source.size() != 0) throw StructureError("empty plan for a nonempty source");
    return ExecuteResult{make_projective({}), {}};
  }

  ExecuteResult res{values.back().arr, values.back().prov};
  if (plan.source.size() > 0) {
    if (!is_lattice_isomorphism(lattice_of(res.arrangement), lattice_of(plan.source),
                                res.bijection))
      throw StructureError("executed plan is not lattice-isomorphic to its source");
  }
  return res;
}

}  // namespace arrlab
