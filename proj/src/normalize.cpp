#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/presentations.hpp"

namespace arrlab {

namespace {

// u, eps with reduce(u^-1 r^eps u) == d, if the two words are conjugate up to
// inversion. Both are decomposed as prefix * cyclic core * prefix^-1 and the
// cores matched over all rotations.
std::optional<std::pair<Word, int>> conjugating_word(const Word& r, const Word& d) {
  Word pr, pd;
  Word cr = r.cyclic_reduced(&pr);
  Word cd = d.cyclic_reduced(&pd);
  if (cr.size() != cd.size()) return std::nullopt;
  for (int eps : {1, -1}) {
    Word ce = eps > 0 ? cr : cr.inverse();
    std::vector<Letter> ls = ce.letters();
    int len = static_cast<int>(ls.size());
    for (int k = 0; k < std::max(1, len); ++k) {
      std::vector<Letter> rot(ls.begin() + k, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + k);
      if (Word(rot) == cd) {
        Word s(std::vector<Letter>(ls.begin(), ls.begin() + k));
        Word u = pr * s * pd.inverse();
        Word check = u.inverse() * (eps > 0 ? r : r.inverse()) * u;
        if (check == d) return std::make_pair(u, eps);
      }
      if (len == 0) break;
    }
  }
  return std::nullopt;
}

bool is_plain_commutator(const Word& w, int* x = nullptr, int* y = nullptr) {
  Word c = w.cyclic_canonical();
  const auto& L = c.letters();
  if (L.size() != 4) return false;
  if (L[0].gen != L[2].gen || L[1].gen != L[3].gen || L[0].gen == L[1].gen) return false;
  if (L[0].sign != -L[2].sign || L[1].sign != -L[3].sign) return false;
  if (x) *x = L[0].gen;
  if (y) *y = L[1].gen;
  return true;
}

Word plain_commutator(int x, int y) {
  return Word::gen(x) * Word::gen(y) * Word::gen(x, -1) * Word::gen(y, -1);
}

struct RelatorTag {
  bool nodal = false;
  ProjPoint point; // vertex the relator was read off, when not nodal
  int t = 0;       // position among the vertex's bracket relations
};

struct Engine {
  Presentation pres;
  Transcript transcript;
  std::vector<RelatorTag> tags;
  Arrangement cur;
  std::vector<std::string> line_gen; // generator name per current line
  std::vector<std::vector<std::string>> families;
  int fresh = 0;
  long budget = 400000;

  void apply(TietzeMove m) {
    if (--budget < 0) throw StructureError("move budget exhausted");
    pres = apply_move(pres, m);
    if (m.kind == MoveKind::ii) {
      tags.erase(tags.begin() + m.relator);
    } else if (m.kind == MoveKind::ii_inverse || m.kind == MoveKind::iv) {
      tags.push_back(RelatorTag{true, {}, 0});
    }
    transcript.moves.push_back(std::move(m));
  }

  int rel_count() const { return static_cast<int>(pres.relators.size()); }

  std::map<std::pair<int, int>, int> commutators() const {
    std::map<std::pair<int, int>, int> out;
    for (int t = 0; t < rel_count(); ++t) {
      int x, y;
      if (is_plain_commutator(pres.relators[static_cast<size_t>(t)], &x, &y)) {
        out.insert({{x, y}, t});
        out.insert({{y, x}, t});
      }
    }
    return out;
  }

  // Exchanges the letters at pos, pos+1 of relator t via the available plain
  // commutator of their generators.
  void swap_adjacent(int t, int pos, const std::map<std::pair<int, int>, int>& comm) {
    const Word r = pres.relators[static_cast<size_t>(t)];
    const auto& L = r.letters();
    Letter X = L[static_cast<size_t>(pos)];
    Letter Y = L[static_cast<size_t>(pos + 1)];
    auto it = comm.find({X.gen, Y.gen});
    if (it == comm.end() || it->second == t)
      throw StructureError("no commutator available for a swap");
    int s = it->second;

    Word A(std::vector<Letter>(L.begin(), L.begin() + pos));
    // c = Y X Y^-1 X^-1 ; after r -> A^-1 r A, left-multiplying by c swaps X Y
    Word c = Word({Y, X, Letter{Y.gen, -Y.sign}, Letter{X.gen, -X.sign}});
    auto ue = conjugating_word(pres.relators[static_cast<size_t>(s)], c.inverse());
    if (!ue) throw StructureError("commutator relator is not in commutator form");

    if (!A.empty()) apply(TietzeMove{MoveKind::i, t, A, 1, "", {}, -1, {}});
    apply(TietzeMove{MoveKind::i, s, ue->first, ue->second, "", {}, -1, {}});
    apply(TietzeMove{MoveKind::i, t, {}, -1, "", {}, -1, {}});
    apply(TietzeMove{MoveKind::iii, t, {}, 1, "", {}, s, {}});
    apply(TietzeMove{MoveKind::i, t, {}, -1, "", {}, -1, {}});
    apply(TietzeMove{MoveKind::i, s, ue->first.inverse(), ue->second, "", {}, -1, {}});
    if (!A.empty()) apply(TietzeMove{MoveKind::i, t, A.inverse(), 1, "", {}, -1, {}});
  }

  struct Plan {
    int rotate = 0; // conjugate by this prefix first
    int cost = 0;   // swaps needed afterwards
  };

  // Cheapest cancellable pair of opposite letters of a removable generator:
  // one of the two cyclic arcs between them must consist of letters whose
  // commutators with the generator are available.
  std::optional<Plan> find_plan(int t, const std::set<int>& removable,
                                const std::map<std::pair<int, int>, int>& comm) const {
    const auto& L = pres.relators[static_cast<size_t>(t)].letters();
    int len = static_cast<int>(L.size());
    std::optional<Plan> best;
    auto ok = [&](int g, int h) { return g != h && comm.count({g, h}) > 0; };
    for (int p = 0; p < len; ++p) {
      if (!removable.count(L[static_cast<size_t>(p)].gen)) continue;
      for (int q = p + 1; q < len; ++q) {
        if (L[static_cast<size_t>(q)].gen != L[static_cast<size_t>(p)].gen) continue;
        if (L[static_cast<size_t>(q)].sign != -L[static_cast<size_t>(p)].sign) continue;
        int g = L[static_cast<size_t>(p)].gen;
        bool inner = true;
        for (int i = p + 1; i < q; ++i)
          if (!ok(g, L[static_cast<size_t>(i)].gen)) inner = false;
        if (inner) {
          Plan pl{p, q - p - 1};
          if (!best || pl.cost < best->cost) best = pl;
        }
        bool outer = true;
        for (int i = q + 1; i < len; ++i)
          if (!ok(g, L[static_cast<size_t>(i)].gen)) outer = false;
        for (int i = 0; i < p; ++i)
          if (!ok(g, L[static_cast<size_t>(i)].gen)) outer = false;
        if (outer) {
          Plan pl{q, len - (q - p) - 1};
          if (!best || pl.cost < best->cost) best = pl;
        }
      }
    }
    return best;
  }

  // Cancels pairs of removable letters while any cancellable pair remains.
  bool scrub(int t, const std::set<int>& removable) {
    bool progress = false;
    while (true) {
      auto comm = commutators();
      auto plan = find_plan(t, removable, comm);
      if (!plan) break;
      progress = true;
      int before = pres.relators[static_cast<size_t>(t)].size();
      if (plan->rotate > 0) {
        const auto& L = pres.relators[static_cast<size_t>(t)].letters();
        Word prefix(std::vector<Letter>(L.begin(), L.begin() + plan->rotate));
        apply(TietzeMove{MoveKind::i, t, prefix, 1, "", {}, -1, {}});
      }
      // the chosen letter is now at the front; bubble it right until the pair
      // cancels and the word shortens
      int pos = 0;
      int guard = plan->cost + 2;
      while (pres.relators[static_cast<size_t>(t)].size() >= before) {
        if (--guard < 0) throw StructureError("swap chain did not shorten the relator");
        swap_adjacent(t, pos, commutators());
        ++pos;
      }
    }
    return progress;
  }

  bool has_removable(int t, const std::set<int>& removable) const {
    for (const auto& l : pres.relators[static_cast<size_t>(t)].letters())
      if (removable.count(l.gen)) return true;
    return false;
  }

  // Conjugates relator t into the literal target word.
  void align(int t, const Word& target) {
    if (pres.relators[static_cast<size_t>(t)] == target) return;
    auto ue = conjugating_word(pres.relators[static_cast<size_t>(t)], target);
    if (!ue) throw StructureError("relator cannot be aligned with its target");
    apply(TietzeMove{MoveKind::i, t, ue->first, ue->second, "", {}, -1, {}});
  }

  int gen_of_line(int line) const {
    int g = pres.find_gen(line_gen[static_cast<size_t>(line)]);
    if (g < 0) throw StructureError("line generator vanished");
    return g;
  }
};

struct PeelData {
  int vertex = -1;           // index into the affine multiple points of cur
  ProjPoint point;
  std::vector<int> h_lines;  // lines through the peeled point
  int h1 = -1;               // the line that stays
  std::vector<int> phi;      // removed lines
};

PeelData choose_peel(const Arrangement& cur) {
  FanGraph f = fan_graph_affine(cur);
  std::vector<std::set<int>> verts_on_line(static_cast<size_t>(cur.size()));
  for (int v = 0; v < f.vertex_count(); ++v)
    for (int l : f.vertices[static_cast<size_t>(v)].incident)
      verts_on_line[static_cast<size_t>(l)].insert(v);

  PeelData best;
  for (int v = 0; v < f.vertex_count(); ++v) {
    std::vector<int> carriers;
    for (int l : f.vertices[static_cast<size_t>(v)].incident)
      if (verts_on_line[static_cast<size_t>(l)].size() >= 2) carriers.push_back(l);
    if (carriers.size() > 1) continue; // not an endpoint or isolated vertex
    if (best.vertex >= 0 &&
        f.vertices[static_cast<size_t>(v)].point.affine_x() <= best.point.affine_x())
      continue;

    PeelData cand;
    cand.vertex = v;
    cand.point = f.vertices[static_cast<size_t>(v)].point;
    cand.h_lines = f.vertices[static_cast<size_t>(v)].incident;

    auto others_cross_everything = [&](int h1) {
      for (int l : cand.h_lines) {
        if (l == h1) continue;
        for (int b = 0; b < cur.size(); ++b) {
          if (std::find(cand.h_lines.begin(), cand.h_lines.end(), b) != cand.h_lines.end())
            continue;
          if (cur.lines[static_cast<size_t>(l)].slope() == cur.lines[static_cast<size_t>(b)].slope())
            return false;
        }
      }
      return true;
    };
    if (carriers.size() == 1) {
      cand.h1 = carriers.front();
      if (!others_cross_everything(cand.h1)) continue;
    } else {
      for (int l : cand.h_lines)
        if (others_cross_everything(l)) {
          cand.h1 = l;
          break;
        }
      if (cand.h1 < 0) continue;
    }
    for (int l : cand.h_lines)
      if (l != cand.h1) cand.phi.push_back(l);
    best = cand;
  }
  if (best.vertex < 0)
    throw StructureError("no eligible endpoint or isolated multiple point to peel");
  return best;
}

std::string letter_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "g" + std::to_string(k);
}

void init_engine(Engine& e, const Arrangement& a, const Presentation& p) {
  e.pres = p;
  e.cur = a;
  for (int i = 0; i < a.size(); ++i) e.line_gen.push_back(letter_name(i));
  e.tags.resize(p.relators.size());
  std::map<int, int> seen;
  for (size_t r = 0; r < p.relators.size(); ++r) {
    int v = p.relator_vertex[r];
    e.tags[r].nodal = false;
    e.tags[r].point = p.vertex_points[static_cast<size_t>(v)];
    e.tags[r].t = seen[v]++;
  }
}

// One induction step: pencil at the rightmost eligible vertex is disentangled
// from the rest of the presentation, the pivot generator is traded for the
// local full product, and the remaining relators are restored to the wiring
// presentation of the smaller arrangement.
void peel_once(Engine& e) {
  PeelData peel = choose_peel(e.cur);

  std::vector<int> keep;
  for (int i = 0; i < e.cur.size(); ++i)
    if (std::find(peel.phi.begin(), peel.phi.end(), i) == peel.phi.end()) keep.push_back(i);

  std::vector<Line> sub_lines;
  for (int i : keep) sub_lines.push_back(e.cur.lines[static_cast<size_t>(i)]);
  Arrangement sub = make_affine(sub_lines);
  Presentation sub_pres = randell_presentation(sub);

  // engine generator index for sub generator k
  std::vector<int> sub_to_engine(static_cast<size_t>(sub.size()));
  for (size_t k = 0; k < keep.size(); ++k)
    sub_to_engine[k] = e.gen_of_line(keep[k]);

  // target words per (vertex point, bracket position)
  std::map<std::pair<Triple, int>, Word> target;
  {
    std::map<int, int> seen;
    for (size_t r = 0; r < sub_pres.relators.size(); ++r) {
      int v = sub_pres.relator_vertex[r];
      const ProjPoint& pt = sub_pres.vertex_points[static_cast<size_t>(v)];
      target[{pt.coords(), seen[v]++}] = sub_pres.relators[r].remap(sub_to_engine);
    }
  }

  std::set<int> phi_gens;
  for (int l : peel.phi) phi_gens.insert(e.gen_of_line(l));
  int h1_gen = e.gen_of_line(peel.h1);

  auto vertex_has_phi = [&](const ProjPoint& pt) {
    for (int l : peel.phi)
      if (pt.incident(e.cur.lines[static_cast<size_t>(l)])) return true;
    return false;
  };

  // Phase A: remove the conjugations left of the peeled point.
  bool moved = true;
  int rounds = 0;
  while (moved) {
    moved = false;
    if (++rounds > 4 * e.rel_count() + 8) throw StructureError("conjugation removal does not settle");
    for (int t = 0; t < e.rel_count(); ++t) {
      if (e.tags[static_cast<size_t>(t)].nodal) continue;
      const ProjPoint pt = e.tags[static_cast<size_t>(t)].point;
      if (pt == peel.point) continue; // the bracket at the peeled point stays
      if (vertex_has_phi(pt)) {
        // crossing of a pencil line: target is the plain commutator
        int x, y;
        if (is_plain_commutator(e.pres.relators[static_cast<size_t>(t)], &x, &y)) continue;
        std::set<int> removable = phi_gens;
        for (int l : peel.phi)
          if (pt.incident(e.cur.lines[static_cast<size_t>(l)]))
            removable.erase(e.gen_of_line(l));
        if (e.scrub(t, removable)) moved = true;
      } else {
        auto it = target.find({pt.coords(), e.tags[static_cast<size_t>(t)].t});
        if (it == target.end()) throw StructureError("relator has no counterpart after the peel");
        if (e.pres.relators[static_cast<size_t>(t)] == it->second) continue;
        if (e.scrub(t, phi_gens)) moved = true;
      }
    }
  }
  for (int t = 0; t < e.rel_count(); ++t) {
    if (e.tags[static_cast<size_t>(t)].nodal) continue;
    const ProjPoint pt = e.tags[static_cast<size_t>(t)].point;
    if (pt == peel.point) continue;
    if (vertex_has_phi(pt)) {
      int x, y;
      if (!is_plain_commutator(e.pres.relators[static_cast<size_t>(t)], &x, &y))
        throw StructureError("pencil crossing did not reduce to a commutator");
      e.align(t, plain_commutator(std::min(x, y), std::max(x, y)));
    } else {
      e.align(t, target.at({pt.coords(), e.tags[static_cast<size_t>(t)].t}));
    }
  }

  // Phase B: trade the pivot generator for the local product.
  // tau = lines through the point, top to bottom just right of it
  Rat x_eval = peel.point.affine_x();
  {
    Rat next(0);
    bool have = false;
    for (const auto& mp : multiple_points(e.cur, 2)) {
      Rat x = mp.point.affine_x();
      if (x > x_eval && (!have || x < next)) {
        next = x;
        have = true;
      }
    }
    if (have)
      x_eval = (x_eval + next) / 2;
    else
      x_eval = x_eval + 1;
  }
  std::vector<int> tau = peel.h_lines;
  std::sort(tau.begin(), tau.end(), [&](int l, int r) {
    return e.cur.lines[static_cast<size_t>(l)].y_at(x_eval) >
           e.cur.lines[static_cast<size_t>(r)].y_at(x_eval);
  });
  std::vector<Word> tau_words;
  for (int l : tau) tau_words.push_back(Word::gen(e.gen_of_line(l)));
  {
    // the bracket at the peeled point must be the plain bracket in tau order
    auto expect = bracket_relators(tau_words);
    for (int t = 0; t < e.rel_count(); ++t) {
      if (e.tags[static_cast<size_t>(t)].nodal || !(e.tags[static_cast<size_t>(t)].point == peel.point))
        continue;
      int pos = e.tags[static_cast<size_t>(t)].t;
      if (!(e.pres.relators[static_cast<size_t>(t)] == expect[static_cast<size_t>(pos)]))
        throw StructureError("bracket at the peeled point is not in plain form");
    }
  }

  int s = -1;
  for (size_t i = 0; i < tau.size(); ++i)
    if (tau[i] == peel.h1) s = static_cast<int>(i);
  int j = static_cast<int>(tau.size());
  Word defining;
  for (int i = 0; i < j; ++i)
    defining = defining * tau_words[static_cast<size_t>((s + i) % j)];
  std::string fresh_name = "p" + std::to_string(e.fresh++);
  e.apply(TietzeMove{MoveKind::ii_inverse, -1, {}, 1, fresh_name, defining, -1, {}});
  int t_new = e.rel_count() - 1;
  e.apply(TietzeMove{MoveKind::i, t_new, {}, -1, "", {}, -1, {}});
  std::string h1_name = e.pres.generators[static_cast<size_t>(h1_gen)];
  e.apply(TietzeMove{MoveKind::ii, t_new, {}, 1, h1_name, {}, -1, {}});

  // generator indices shifted with the deletion; refresh bookkeeping by name
  int g_new = e.pres.find_gen(fresh_name);
  if (g_new < 0) throw StructureError("replacement generator is missing");
  e.line_gen[static_cast<size_t>(peel.h1)] = fresh_name;
  phi_gens.clear();
  for (int l : peel.phi) phi_gens.insert(e.gen_of_line(l));

  // Phase C: crunch the substituted relators back to their normal forms.
  std::set<int> all_gens;
  for (int g = 0; g < e.pres.gen_count(); ++g) all_gens.insert(g);
  std::map<std::pair<Triple, int>, Word> target2;
  {
    int sub_h1 = -1;
    for (size_t k = 0; k < keep.size(); ++k)
      if (keep[k] == peel.h1) sub_h1 = static_cast<int>(k);
    std::vector<int> remap(static_cast<size_t>(sub.size()));
    for (size_t k = 0; k < keep.size(); ++k)
      remap[k] = static_cast<int>(k) == sub_h1 ? g_new : e.gen_of_line(keep[static_cast<size_t>(k)]);
    std::map<int, int> seen;
    for (size_t r = 0; r < sub_pres.relators.size(); ++r) {
      int v = sub_pres.relator_vertex[r];
      const ProjPoint& pt = sub_pres.vertex_points[static_cast<size_t>(v)];
      target2[{pt.coords(), seen[v]++}] = sub_pres.relators[r].remap(remap);
    }
  }

  moved = true;
  rounds = 0;
  while (moved) {
    moved = false;
    if (++rounds > 4 * e.rel_count() + 8) throw StructureError("post-substitution crunch does not settle");
    for (int t = 0; t < e.rel_count(); ++t) {
      const auto& tag = e.tags[static_cast<size_t>(t)];
      if (tag.nodal) {
        int x, y;
        if (is_plain_commutator(e.pres.relators[static_cast<size_t>(t)], &x, &y)) continue;
        if (e.scrub(t, all_gens)) moved = true;
        continue;
      }
      if (tag.point == peel.point) {
        int x, y;
        if (is_plain_commutator(e.pres.relators[static_cast<size_t>(t)], &x, &y)) continue;
        if (e.scrub(t, all_gens)) moved = true;
        continue;
      }
      if (vertex_has_phi(tag.point)) continue; // already a plain commutator
      auto it = target2.find({tag.point.coords(), tag.t});
      if (it == target2.end()) throw StructureError("missing post-substitution target");
      if (e.pres.relators[static_cast<size_t>(t)] == it->second) continue;
      if (e.scrub(t, phi_gens)) moved = true;
    }
  }

  // final shapes: former bracket relations are commutators of the pencil
  // generators with the replacement, everything else sits on its target
  std::set<std::pair<int, int>> expected_pairs;
  for (int g : phi_gens) expected_pairs.insert({std::min(g, g_new), std::max(g, g_new)});
  std::set<std::pair<int, int>> got_pairs;
  for (int t = 0; t < e.rel_count(); ++t) {
    auto& tag = e.tags[static_cast<size_t>(t)];
    if (tag.nodal) {
      int x, y;
      if (!is_plain_commutator(e.pres.relators[static_cast<size_t>(t)], &x, &y))
        throw StructureError("nodal relator lost its commutator form");
      e.align(t, plain_commutator(std::min(x, y), std::max(x, y)));
      continue;
    }
    if (tag.point == peel.point) {
      int x, y;
      if (!is_plain_commutator(e.pres.relators[static_cast<size_t>(t)], &x, &y))
        throw StructureError("bracket relation did not become a commutator");
      got_pairs.insert({std::min(x, y), std::max(x, y)});
      e.align(t, plain_commutator(std::min(x, y), std::max(x, y)));
      tag.nodal = true;
      continue;
    }
    if (vertex_has_phi(tag.point)) {
      tag.nodal = true;
      continue;
    }
    e.align(t, target2.at({tag.point.coords(), tag.t}));
  }
  if (got_pairs != expected_pairs)
    throw StructureError("bracket relations did not produce the expected commutators");

  std::vector<std::string> family;
  for (int l : peel.phi) family.push_back(e.line_gen[static_cast<size_t>(l)]);
  std::sort(family.begin(), family.end());
  e.families.push_back(std::move(family));

  std::vector<Line> next_lines;
  std::vector<std::string> next_gen;
  for (int i : keep) {
    next_lines.push_back(e.cur.lines[static_cast<size_t>(i)]);
    next_gen.push_back(e.line_gen[static_cast<size_t>(i)]);
  }
  e.cur = make_affine(std::move(next_lines));
  e.line_gen = std::move(next_gen);
}

}  // namespace

NormalizeResult normalize_to_nodal(const Arrangement& a) {
  if (a.form != Form::affine)
    throw StructureError("normalize_to_nodal expects an affine arrangement");
  ForestCertificate cert = is_forest(fan_graph(cone(a)));
  if (!cert.forest) throw NotDirectSumOfFreeGroups("Fan graph of the cone contains a cycle");

  Engine e;
  Presentation start = randell_presentation(a);
  init_engine(e, a, start);

  while (!multiple_points(e.cur, 3).empty()) peel_once(e);

  // remaining parallel classes of the final picture are the untouched families
  {
    std::map<Rat, std::vector<std::string>> by_slope;
    for (int i = 0; i < e.cur.size(); ++i)
      by_slope[e.cur.lines[static_cast<size_t>(i)].slope()].push_back(
          e.line_gen[static_cast<size_t>(i)]);
    for (auto& [slope, members] : by_slope) {
      std::sort(members.begin(), members.end());
      e.families.push_back(members);
    }
  }

  NormalizeResult res;
  res.initial = start;
  res.transcript = e.transcript;

  TypeVector type;
  for (const auto& f : e.families) type.push_back(static_cast<int>(f.size()));
  res.type = normalize_type(type);

  // canonical naming: families by descending size then first member name
  std::vector<std::vector<std::string>> fams = e.families;
  std::sort(fams.begin(), fams.end(), [](const auto& l, const auto& r) {
    if (l.size() != r.size()) return l.size() > r.size();
    return l < r;
  });
  if (!fams.empty()) {
    Presentation expected = affine_nodal_presentation(res.type);
    std::vector<int> name_map(static_cast<size_t>(e.pres.gen_count()), -1);
    int next = 0;
    for (const auto& fam : fams)
      for (const auto& name : fam) {
        int g = e.pres.find_gen(name);
        if (g < 0) throw StructureError("family member without a generator");
        name_map[static_cast<size_t>(g)] = next;
        res.naming.emplace_back(name, expected.generators[static_cast<size_t>(next)]);
        next++;
      }
    if (next != e.pres.gen_count())
      throw StructureError("families do not cover the generators");

    std::multiset<Word> got, want;
    for (const auto& r : e.pres.relators) got.insert(r.remap(name_map).cyclic_canonical());
    for (const auto& r : expected.relators) want.insert(r.cyclic_canonical());
    if (got != want)
      throw StructureError("final presentation is not the nodal presentation of its type");
  }
  e.transcript.renames = res.naming;
  res.transcript = e.transcript;
  res.final_presentation = e.pres;
  return res;
}

NormalizeResult normalize_to_nodal(const Arrangement& a, const Presentation& p) {
  Presentation expected = randell_presentation(a);
  if (!p.same_presentation(expected))
    throw StructureError("presentation does not match the wiring presentation of the arrangement");
  return normalize_to_nodal(a);
}

}  // namespace arrlab
