#include "arrlab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/lattice.hpp"

namespace arrlab {

bool normalize_triple(Triple& t) {
  Int g = gcd_int(gcd_int(t[0], t[1]), t[2]);
  if (g == 0) return false;
  for (auto& x : t) x /= g;
  for (const auto& x : t) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : t) y = -y;
      break;
    }
  }
  return true;
}

bool normalize_rational_triple(const std::array<Rat, 3>& in, Triple& out) {
  Int den = 1;
  for (const auto& r : in) den = den / gcd_int(den, denominator(r)) * denominator(r);
  for (int i = 0; i < 3; ++i) {
    Rat scaled = in[i] * den;
    out[i] = numerator(scaled);
  }
  return normalize_triple(out);
}

int compare_triples(const Triple& a, const Triple& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

std::string triple_to_string(const Triple& t) {
  std::ostringstream os;
  os << t[0] << " " << t[1] << " " << t[2];
  return os.str();
}

Line Line::from_triple(const Triple& t) {
  Triple c = t;
  if (!normalize_triple(c)) throw DegenerateLine("all three coefficients are zero");
  return Line(c);
}

Line Line::from_rationals(const std::array<Rat, 3>& t) {
  Triple c;
  if (!normalize_rational_triple(t, c)) throw DegenerateLine("all three coefficients are zero");
  return Line(c);
}

Rat Line::slope() const {
  if (is_vertical()) throw StructureError("slope of a vertical line");
  return Rat(-c_[0]) / Rat(c_[1]);
}

Rat Line::y_at(const Rat& x) const {
  if (is_vertical()) throw StructureError("y_at on a vertical line");
  return (Rat(-c_[2]) - Rat(c_[0]) * x) / Rat(c_[1]);
}

ProjPoint ProjPoint::from_triple(const Triple& t) {
  Triple c = t;
  if (!normalize_triple(c)) throw StructureError("zero point triple");
  return ProjPoint(c);
}

ProjPoint ProjPoint::from_affine(const Rat& x, const Rat& y) {
  Int den = denominator(x) / gcd_int(denominator(x), denominator(y)) * denominator(y);
  Rat xs = x * den;
  Rat ys = y * den;
  Triple t{numerator(xs), numerator(ys), den};
  return from_triple(t);
}

bool ProjPoint::incident(const Line& l) const {
  return l.a() * c_[0] + l.b() * c_[1] + l.c() * c_[2] == 0;
}

Rat ProjPoint::affine_x() const {
  if (!is_finite()) throw StructureError("affine_x of a point at infinity");
  return Rat(c_[0]) / Rat(c_[2]);
}

Rat ProjPoint::affine_y() const {
  if (!is_finite()) throw StructureError("affine_y of a point at infinity");
  return Rat(c_[1]) / Rat(c_[2]);
}

std::optional<int> Arrangement::find(const Line& l) const {
  for (int i = 0; i < size(); ++i)
    if (lines[i] == l) return i;
  return std::nullopt;
}

namespace {

void check_distinct(const std::vector<Line>& lines) {
  std::set<Triple> seen;
  for (const auto& l : lines)
    if (!seen.insert(l.coeffs()).second)
      throw DuplicateLine("repeated line " + l.to_string());
}

const Line kInfinity = Line::from_triple({Int(0), Int(0), Int(1)});

}  // namespace

Arrangement make_projective(std::vector<Line> lines, std::string label) {
  check_distinct(lines);
  return Arrangement{Form::projective, std::move(lines), std::move(label)};
}

Arrangement make_affine(std::vector<Line> lines, std::string label) {
  check_distinct(lines);
  for (const auto& l : lines)
    if (l == kInfinity) throw DuplicateLine("affine arrangement contains the infinity line");
  return Arrangement{Form::affine, std::move(lines), std::move(label)};
}

namespace {

Rat parse_rational(const std::string& tok) {
  auto bad = [&] { throw ParseError("bad rational '" + tok + "'"); };
  std::string num = tok, den = "1";
  if (auto pos = tok.find('/'); pos != std::string::npos) {
    num = tok.substr(0, pos);
    den = tok.substr(pos + 1);
  }
  auto check = [&](const std::string& s) {
    if (s.empty()) bad();
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) bad();
  };
  check(num);
  check(den);
  Int d(den);
  if (d == 0) bad();
  return Rat(Int(num)) / Rat(d);
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  Form form = Form::projective;
  bool have_infinity = false;
  Line infinity = kInfinity;
  std::vector<Line> lines;
  std::string label;
  while (std::getline(in, raw)) {
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "form:") {
      std::string f;
      if (!(ls >> f) || (f != "projective" && f != "affine"))
        throw ParseError("form must be projective or affine");
      form = f == "affine" ? Form::affine : Form::projective;
      continue;
    }
    if (first == "infinity:") {
      std::string t1, t2, t3;
      if (!(ls >> t1 >> t2 >> t3)) throw ParseError("infinity: needs three rationals");
      infinity = Line::from_rationals({parse_rational(t1), parse_rational(t2), parse_rational(t3)});
      have_infinity = true;
      continue;
    }
    if (first == "label:") {
      std::getline(ls, label);
      while (!label.empty() && label.front() == ' ') label.erase(label.begin());
      continue;
    }
    std::string t2, t3, extra;
    if (!(ls >> t2 >> t3)) throw ParseError("line needs three rationals: '" + raw + "'");
    if (ls >> extra) throw ParseError("trailing tokens: '" + raw + "'");
    lines.push_back(Line::from_rationals({parse_rational(first), parse_rational(t2), parse_rational(t3)}));
  }
  if (form == Form::projective) {
    if (have_infinity) throw ParseError("infinity: only valid for affine form");
    return make_projective(std::move(lines), label);
  }
  if (have_infinity && infinity != kInfinity) {
    // Move the declared infinity line to z = 0 so affine pictures use the
    // standard chart.
    std::vector<Line> all = lines;
    all.push_back(infinity);
    Arrangement proj = make_projective(all);
    Arrangement aff = decone(proj, proj.size() - 1);
    aff.label = label;
    return aff;
  }
  return make_affine(std::move(lines), label);
}

std::string serialize_arrangement(const Arrangement& a) {
  std::ostringstream os;
  if (!a.label.empty()) os << "label: " << a.label << "\n";
  os << "form: " << (a.form == Form::projective ? "projective" : "affine") << "\n";
  if (a.form == Form::affine) os << "infinity: 0 0 1\n";
  for (const auto& l : a.lines) os << l.to_string() << "\n";
  return os.str();
}

ProjPoint intersect(const Line& l1, const Line& l2) {
  if (l1 == l2) throw DegenerateIntersection("equal lines " + l1.to_string());
  const Triple& a = l1.coeffs();
  const Triple& b = l2.coeffs();
  Triple x{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  return ProjPoint::from_triple(x);
}

std::vector<MultiplePoint> multiple_points(const Arrangement& a, int min_mult) {
  std::map<Triple, std::set<int>> at_point;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      ProjPoint p = intersect(a.lines[i], a.lines[j]);
      if (a.form == Form::affine && !p.is_finite()) continue;
      auto& s = at_point[p.coords()];
      s.insert(i);
      s.insert(j);
    }
  std::vector<MultiplePoint> out;
  for (const auto& [coords, incident] : at_point) {
    if (static_cast<int>(incident.size()) < min_mult) continue;
    MultiplePoint mp;
    mp.point = ProjPoint::from_triple(coords);
    mp.incident.assign(incident.begin(), incident.end());
    out.push_back(std::move(mp));
  }
  return out;
}

namespace {

Int det3(const std::array<Triple, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<Triple, 3> adjugate(const std::array<Triple, 3>& m) {
  std::array<Triple, 3> r;
  auto c = [&](int i, int j) {
    int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = c(j, i);
  return r;
}

Triple apply_row(const Triple& row, const std::array<Triple, 3>& m) {
  Triple r{Int(0), Int(0), Int(0)};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) r[j] += row[k] * m[k][j];
  return r;
}

}  // namespace

Arrangement decone(const Arrangement& a, int h0) {
  if (a.form != Form::projective) throw StructureError("decone expects a projective arrangement");
  if (h0 < 0 || h0 >= a.size()) throw StructureError("decone index out of range");
  // Matrix with third row = h0 completed to an invertible integer matrix;
  // lines transform by the adjugate.
  std::array<Triple, 3> m;
  m[2] = a.lines[h0].coeffs();
  const std::array<Triple, 3> basis{Triple{Int(1), Int(0), Int(0)}, Triple{Int(0), Int(1), Int(0)},
                                    Triple{Int(0), Int(0), Int(1)}};
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = i + 1; j < 3 && !found; ++j) {
      m[0] = basis[i];
      m[1] = basis[j];
      if (det3(m) != 0) found = true;
    }
  if (!found) throw ChangeOfCoordsFailure("could not complete the coordinate change");
  auto adj = adjugate(m);
  std::vector<Line> out;
  for (int i = 0; i < a.size(); ++i) {
    if (i == h0) continue;
    out.push_back(Line::from_triple(apply_row(a.lines[i].coeffs(), adj)));
  }
  Arrangement res = make_affine(std::move(out), a.label);
  return res;
}

Arrangement cone(const Arrangement& a) {
  if (a.form == Form::projective) return a;
  std::vector<Line> lines = a.lines;
  lines.push_back(kInfinity);
  return make_projective(std::move(lines), a.label);
}

namespace {

Arrangement shear_by(const Arrangement& a, const Rat& t) {
  // Points (x, y) -> (x + t*y, y); line (a, b, c) -> (a, b - t*a, c).
  std::vector<Line> lines;
  for (const auto& l : a.lines)
    lines.push_back(Line::from_rationals({Rat(l.a()), Rat(l.b()) - t * Rat(l.a()), Rat(l.c())}));
  return make_affine(std::move(lines), a.label);
}

}  // namespace

bool is_ra_generic(const Arrangement& a) {
  if (a.form != Form::affine) return false;
  for (const auto& l : a.lines)
    if (l.is_vertical()) return false;
  auto pts = multiple_points(a, 2);
  std::set<Rat> xs;
  for (const auto& p : pts)
    if (!xs.insert(p.point.affine_x()).second) return false;
  return true;
}

Arrangement shear_to_generic(const Arrangement& a) {
  if (a.form != Form::affine) throw StructureError("shear expects an affine arrangement");
  if (is_ra_generic(a)) return a;
  for (int k = 1; k <= 10000; ++k) {
    Arrangement sheared = shear_by(a, Rat(1, k));
    if (is_ra_generic(sheared)) return sheared;
  }
  throw GenericityFailure("no shear x -> x + y/k made the picture generic");
}

bool preferred_predicate(const Arrangement& a) {
  FanGraph f = fan_graph_affine(a);
  std::vector<int> degree(f.vertex_count(), 0);
  for (const auto& e : f.edges) {
    degree[e.v]++;
    degree[e.w]++;
  }
  for (int v = 0; v < f.vertex_count(); ++v) {
    if (degree[v] <= 1) continue;
    Rat x = f.vertices[v].point.affine_x();
    bool has_larger = false;
    for (int w = 0; w < f.vertex_count(); ++w)
      if (f.vertices[w].point.affine_x() > x) has_larger = true;
    if (!has_larger) return false;
  }
  return true;
}

namespace {

struct PeelChoice {
  int vertex;
  int h1;                 // line kept with the sub-arrangement
  std::vector<int> rest;  // other lines through the vertex, removed by the peel
};

// Endpoint or isolated vertex of the affine Fan graph together with the line
// that stays behind. For an endpoint the carrier of its edge is forced.
std::optional<PeelChoice> pick_peel_vertex(const Arrangement& a, const FanGraph& f) {
  std::vector<std::set<int>> lines_with_more(a.size());
  for (int v = 0; v < f.vertex_count(); ++v)
    for (int l : f.vertices[v].incident) lines_with_more[l].insert(v);
  for (int v = 0; v < f.vertex_count(); ++v) {
    std::vector<int> carriers;
    for (int l : f.vertices[v].incident)
      if (lines_with_more[l].size() >= 2) carriers.push_back(l);
    if (carriers.size() > 1) continue; // interior vertex
    PeelChoice c;
    c.vertex = v;
    c.h1 = carriers.empty() ? f.vertices[v].incident.front() : carriers.front();
    for (int l : f.vertices[v].incident)
      if (l != c.h1) c.rest.push_back(l);
    return c;
  }
  return std::nullopt;
}

}  // namespace

PreferredResult preferred_representation(const Arrangement& input) {
  if (input.form != Form::affine) throw StructureError("preferred_representation expects affine input");
  ForestCertificate cert = is_forest(fan_graph(cone(input)));
  if (!cert.forest) throw NotForest("Fan graph of the cone contains a cycle");

  IntersectionLattice reference = lattice_of(cone(input));

  // Remark-3.12 induction: peel a pencil at an endpoint/isolated vertex,
  // rebuild the rest, then re-attach the pencil past every existing point.
  std::function<PreferredResult(const Arrangement&)> rebuild = [&](const Arrangement& a) -> PreferredResult {
    FanGraph f = fan_graph_affine(a);
    if (f.vertex_count() <= 1) {
      Arrangement sheared = shear_to_generic(a);
      PreferredResult r{sheared, {}};
      r.line_map.resize(a.size());
      for (int i = 0; i < a.size(); ++i) r.line_map[i] = i;
      return r;
    }
    auto choice = pick_peel_vertex(a, f);
    if (!choice) throw StructureError("forest without an endpoint or isolated vertex");
    std::vector<int> keep;
    std::vector<int> removed = choice->rest;
    std::sort(removed.begin(), removed.end());
    for (int i = 0; i < a.size(); ++i)
      if (!std::binary_search(removed.begin(), removed.end(), i)) keep.push_back(i);
    std::vector<Line> sub_lines;
    for (int i : keep) sub_lines.push_back(a.lines[i]);
    PreferredResult sub = rebuild(make_affine(std::move(sub_lines)));

    // keep[k] -> sub.line_map[k] in the rebuilt base
    int h1_pos = -1;
    for (size_t k = 0; k < keep.size(); ++k)
      if (keep[k] == choice->h1) h1_pos = sub.line_map[static_cast<int>(k)];

    const Arrangement& base = sub.arrangement;
    auto base_pts = multiple_points(base, 2);
    Rat n_clear(0);
    bool first = true;
    for (const auto& p : base_pts) {
      Rat x = p.point.affine_x();
      if (first || x > n_clear) n_clear = x;
      first = false;
    }
    if (first) n_clear = Rat(0);

    const Line& h1 = base.lines[h1_pos];
    int pencil_size = static_cast<int>(choice->rest.size());

    Rat max_slope(0);
    for (const auto& l : base.lines) {
      Rat s = l.slope();
      if (s < 0) s = -s;
      if (s > max_slope) max_slope = s;
    }

    for (int shift = 1; shift <= 64; ++shift) {
      Rat qx = n_clear + shift;
      bool q_clear = true;
      for (int i = 0; i < base.size(); ++i) {
        if (i == h1_pos) continue;
        if (base.lines[i].y_at(qx) == h1.y_at(qx)) q_clear = false;
      }
      if (!q_clear) continue;
      ProjPoint q = ProjPoint::from_affine(qx, h1.y_at(qx));

      for (int steep = 1; steep <= 256; ++steep) {
        // pencil slopes: distinct, positive, steeper than anything present
        std::vector<Line> lines = base.lines;
        Int base_slope = numerator(max_slope) / denominator(max_slope) + 1 + steep;
        bool ok = true;
        for (int t = 0; t < pencil_size && ok; ++t) {
          Rat s = Rat(base_slope + t * steep);
          // y - qy = s (x - qx)  =>  s*x - y + (qy - s*qx) = 0
          Line nl = Line::from_rationals({s, Rat(-1), h1.y_at(qx) - s * qx});
          for (const auto& l : lines)
            if (l == nl || (!l.is_vertical() && l.slope() == s)) ok = false;
          lines.push_back(nl);
        }
        if (!ok) continue;
        Arrangement cand = make_affine(lines);
        // fresh crossings must stay right of the old picture and all vertex
        // x coordinates must stay distinct
        auto pts = multiple_points(cand, 2);
        std::set<Rat> xs;
        for (const auto& p : pts) {
          if (!xs.insert(p.point.affine_x()).second) ok = false;
          bool involves_new = false;
          for (int l : p.incident)
            if (l >= base.size()) involves_new = true;
          if (involves_new && !(p.point.affine_x() > n_clear)) ok = false;
        }
        for (const auto& l : cand.lines)
          if (l.is_vertical()) ok = false;
        if (!ok) continue;
        if (!preferred_predicate(cand)) continue;

        PreferredResult r;
        r.arrangement = cand;
        r.line_map.resize(a.size(), -1);
        for (size_t k = 0; k < keep.size(); ++k)
          r.line_map[keep[k]] = sub.line_map[static_cast<int>(k)];
        for (int t = 0; t < pencil_size; ++t)
          r.line_map[choice->rest[static_cast<size_t>(t)]] = base.size() + t;
        return r;
      }
    }
    throw GenericityFailure("could not re-attach a pencil generically");
  };

  PreferredResult result = rebuild(input);

  auto witness = lattice_isomorphic(lattice_of(cone(result.arrangement)), reference);
  if (!witness) throw StructureError("preferred representation changed the lattice class");
  if (!preferred_predicate(result.arrangement))
    throw StructureError("preferred representation violates the x-ordering predicate");
  return result;
}

}  // namespace arrlab
