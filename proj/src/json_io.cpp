#include "arrlab/json_io.hpp"

#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

Json triple_json(const Triple& t) {
  Json j = Json::array();
  for (const auto& x : t) j.push_back(x.str());
  return j;
}

Json word_json(const Presentation& p, const Word& w) {
  Json j = Json::array();
  for (const auto& l : w.letters())
    j.push_back(Json::array({p.generators[static_cast<size_t>(l.gen)], l.sign}));
  return j;
}

}  // namespace

Json arrangement_to_json(const Arrangement& a) {
  Json j;
  j["form"] = a.form == Form::projective ? "projective" : "affine";
  if (!a.label.empty()) j["label"] = a.label;
  if (a.form == Form::affine) j["infinity"] = triple_json({Int(0), Int(0), Int(1)});
  Json lines = Json::array();
  for (const auto& l : a.lines) lines.push_back(triple_json(l.coeffs()));
  j["lines"] = lines;
  return j;
}

Json multiple_points_to_json(const std::vector<MultiplePoint>& pts) {
  Json j = Json::array();
  for (const auto& p : pts) {
    Json e;
    e["point"] = triple_json(p.point.coords());
    e["incident"] = p.incident;
    e["multiplicity"] = p.multiplicity();
    j.push_back(e);
  }
  return j;
}

Json lattice_to_json(const IntersectionLattice& l) {
  Json j;
  j["atoms"] = l.atom_count();
  j["rank"] = l.rank();
  Json by_rank = Json::array();
  for (int r = 0; r <= l.rank(); ++r) {
    Json level = Json::array();
    for (const auto& f : l.flats_of_rank(r)) level.push_back(f.atoms);
    by_rank.push_back(level);
  }
  j["flats_by_rank"] = by_rank;
  return j;
}

Json fan_to_json(const FanGraph& f) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : f.vertices) {
    Json e;
    e["point"] = triple_json(v.point.coords());
    e["incident"] = v.incident;
    verts.push_back(e);
  }
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : f.edges) edges.push_back(Json::array({e.v, e.w, e.line}));
  j["edges"] = edges;
  return j;
}

Json jy_to_json(const JYGraph& g) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : g.vertices) {
    Json e;
    e["point"] = triple_json(v.point.coords());
    e["incident"] = v.incident;
    verts.push_back(e);
  }
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.v, e.w, e.line}));
  j["edges"] = edges;
  return j;
}

Json forest_to_json(const ForestCertificate& c) {
  Json j;
  j["forest"] = c.forest;
  if (c.forest)
    j["components"] = c.components;
  else {
    j["cycle_vertices"] = c.cycle_vertices;
    j["cycle_edges"] = c.cycle_edges;
  }
  return j;
}

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators;
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(word_json(p, r));
  j["relators"] = rels;
  if (!p.vertex_points.empty()) {
    Json pts = Json::array();
    for (const auto& pt : p.vertex_points) pts.push_back(triple_json(pt.coords()));
    j["vertex_points"] = pts;
    j["relator_vertex"] = p.relator_vertex;
  }
  return j;
}

Json transcript_to_json(const Transcript& t) {
  Json moves = Json::array();
  for (const auto& m : t.moves) {
    Json e;
    e["kind"] = move_kind_name(m.kind);
    switch (m.kind) {
      case MoveKind::i: {
        e["relator"] = m.relator;
        Json w = Json::array();
        for (const auto& l : m.conjugator.letters()) w.push_back(Json::array({l.gen, l.sign}));
        e["conjugator"] = w;
        e["sign"] = m.sign;
        break;
      }
      case MoveKind::iii:
        e["relator"] = m.relator;
        e["other"] = m.other;
        break;
      case MoveKind::ii:
        e["relator"] = m.relator;
        e["gen"] = m.gen;
        break;
      case MoveKind::ii_inverse: {
        e["gen"] = m.gen;
        Json w = Json::array();
        for (const auto& l : m.defining.letters()) w.push_back(Json::array({l.gen, l.sign}));
        e["defining"] = w;
        break;
      }
      case MoveKind::iv: {
        Json w = Json::array();
        for (const auto& l : m.inserted.letters()) w.push_back(Json::array({l.gen, l.sign}));
        e["inserted"] = w;
        break;
      }
    }
    moves.push_back(e);
  }
  Json j;
  j["moves"] = moves;
  j["homotopy_preserving"] = t.homotopy_preserving();
  Json renames = Json::array();
  for (const auto& [from, to] : t.renames) renames.push_back(Json::array({from, to}));
  j["renames"] = renames;
  return j;
}

namespace {

Word raw_word_from_json(const Json& j) {
  std::vector<Letter> ls;
  for (const auto& item : j) ls.push_back(Letter{item.at(0).get<int>(), item.at(1).get<int>()});
  return Word(std::move(ls));
}

}  // namespace

Transcript transcript_from_json(const Json& j, const Presentation& context) {
  (void)context;
  Transcript t;
  for (const auto& e : j.at("moves")) {
    TietzeMove m;
    m.kind = move_kind_from_name(e.at("kind").get<std::string>());
    switch (m.kind) {
      case MoveKind::i:
        m.relator = e.at("relator").get<int>();
        m.conjugator = raw_word_from_json(e.at("conjugator"));
        m.sign = e.at("sign").get<int>();
        break;
      case MoveKind::iii:
        m.relator = e.at("relator").get<int>();
        m.other = e.at("other").get<int>();
        break;
      case MoveKind::ii:
        m.relator = e.at("relator").get<int>();
        m.gen = e.at("gen").get<std::string>();
        break;
      case MoveKind::ii_inverse:
        m.gen = e.at("gen").get<std::string>();
        m.defining = raw_word_from_json(e.at("defining"));
        break;
      case MoveKind::iv:
        m.inserted = raw_word_from_json(e.at("inserted"));
        break;
    }
    t.moves.push_back(std::move(m));
  }
  if (j.contains("renames"))
    for (const auto& r : j.at("renames"))
      t.renames.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
  return t;
}

Json normalize_to_json(const NormalizeResult& r) {
  Json j;
  j["type"] = r.type;
  j["initial"] = presentation_to_json(r.initial);
  j["final"] = presentation_to_json(r.final_presentation);
  j["transcript"] = transcript_to_json(r.transcript);
  Json naming = Json::array();
  for (const auto& [from, to] : r.naming) naming.push_back(Json::array({from, to}));
  j["naming"] = naming;
  return j;
}

Json compare_to_json(const CompareResult& r) {
  Json j;
  switch (r.verdict) {
    case HomotopyVerdict::Equivalent: j["verdict"] = "Equivalent"; break;
    case HomotopyVerdict::NotEquivalent: j["verdict"] = "NotEquivalent"; break;
    case HomotopyVerdict::Inconclusive: j["verdict"] = "Inconclusive"; break;
  }
  j["reason"] = r.reason;
  if (r.type1) j["type1"] = *r.type1;
  if (r.type2) j["type2"] = *r.type2;
  if (r.left) j["left"] = normalize_to_json(*r.left);
  if (r.right) j["right"] = normalize_to_json(*r.right);
  if (r.preferred1) j["preferred1"] = arrangement_to_json(*r.preferred1);
  if (r.preferred2) j["preferred2"] = arrangement_to_json(*r.preferred2);
  return j;
}

Json plan_to_json(const BuildPlan& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json e;
    e["kind"] = step_kind_name(s.kind);
    switch (s.kind) {
      case StepKind::Pencil: e["mu"] = s.mu; break;
      case StepKind::TP3:
        e["left"] = s.left;
        e["base_left"] = s.base_left;
        e["right"] = s.right;
        e["base_right"] = s.base_right;
        break;
      case StepKind::D3:
        e["left"] = s.left;
        e["right"] = s.right;
        break;
      case StepKind::AddGenericLine: e["left"] = s.left; break;
      case StepKind::Nodal: e["type"] = s.type; break;
    }
    e["provenance"] = s.provenance;
    steps.push_back(e);
  }
  Json j;
  j["steps"] = steps;
  j["source"] = arrangement_to_json(p.source);
  return j;
}

std::string fan_to_graphviz(const FanGraph& f) {
  std::ostringstream os;
  os << "graph fan {\n";
  for (int v = 0; v < f.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << f.vertices[static_cast<size_t>(v)].point.to_string()
       << "\"];\n";
  for (const auto& e : f.edges)
    os << "  v" << e.v << " -- v" << e.w << " [label=\"L" << e.line << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string jy_to_graphviz(const JYGraph& g) {
  std::ostringstream os;
  os << "graph jy {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << g.vertices[static_cast<size_t>(v)].point.to_string()
       << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.v << " -- v" << e.w << " [label=\"L" << e.line << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace arrlab
