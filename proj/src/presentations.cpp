#include "arrlab/presentations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"

namespace arrlab {

void Word::reduce() {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].gen != o.letters_[i].gen) return letters_[i].gen < o.letters_[i].gen;
    if (letters_[i].sign != o.letters_[i].sign) return letters_[i].sign > o.letters_[i].sign;
  }
  return false;
}

Word Word::cyclic_reduced(Word* conjugator) const {
  std::vector<Letter> core = letters_;
  std::vector<Letter> prefix;
  while (core.size() >= 2 && core.front().gen == core.back().gen &&
         core.front().sign == -core.back().sign) {
    prefix.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  if (conjugator) *conjugator = Word(std::move(prefix));
  return Word(std::move(core));
}

Word Word::cyclic_canonical() const {
  Word core = cyclic_reduced();
  if (core.empty()) return core;
  Word best = core;
  for (int inv = 0; inv < 2; ++inv) {
    Word w = inv == 0 ? core : core.inverse();
    std::vector<Letter> ls = w.letters();
    for (size_t k = 0; k < ls.size(); ++k) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      Word cand(ls);
      if (cand < best) best = cand;
    }
  }
  return best;
}

bool Word::contains_gen(int g) const {
  for (const auto& l : letters_)
    if (l.gen == g) return true;
  return false;
}

Int Word::exponent_sum(int g) const {
  Int s(0);
  for (const auto& l : letters_)
    if (l.gen == g) s += l.sign;
  return s;
}

Word Word::substitute(int g, const Word& w) const {
  std::vector<Letter> out;
  Word winv = w.inverse();
  for (const auto& l : letters_) {
    if (l.gen != g) {
      out.push_back(l);
      continue;
    }
    const auto& rep = l.sign > 0 ? w.letters() : winv.letters();
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return Word(std::move(out));
}

Word Word::remap(const std::vector<int>& gen_map) const {
  std::vector<Letter> out;
  for (const auto& l : letters_)
    out.push_back(Letter{gen_map[static_cast<size_t>(l.gen)], l.sign});
  return Word(std::move(out));
}

std::vector<Word> bracket_relators(const std::vector<Word>& meridians) {
  int k = static_cast<int>(meridians.size());
  std::vector<Word> out;
  auto rot_product = [&](int t) {
    Word p;
    for (int i = 0; i < k; ++i) p = p * meridians[static_cast<size_t>((t + i) % k)];
    return p;
  };
  for (int t = 0; t + 1 < k; ++t) out.push_back(rot_product(t) * rot_product(t + 1).inverse());
  return out;
}

int Presentation::find_gen(const std::string& name) const {
  for (int i = 0; i < gen_count(); ++i)
    if (generators[static_cast<size_t>(i)] == name) return i;
  return -1;
}

std::string Presentation::word_to_string(const Word& w) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << " ";
    os << generators[static_cast<size_t>(l.gen)];
    if (l.sign < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::i: return "i";
    case MoveKind::ii: return "ii";
    case MoveKind::ii_inverse: return "ii_inverse";
    case MoveKind::iii: return "iii";
    case MoveKind::iv: return "iv";
  }
  return "?";
}

MoveKind move_kind_from_name(const std::string& s) {
  if (s == "i") return MoveKind::i;
  if (s == "ii") return MoveKind::ii;
  if (s == "ii_inverse") return MoveKind::ii_inverse;
  if (s == "iii") return MoveKind::iii;
  if (s == "iv") return MoveKind::iv;
  throw ParseError("unknown move kind '" + s + "'");
}

bool Transcript::homotopy_preserving() const {
  for (const auto& m : moves)
    if (m.kind == MoveKind::iv) return false;
  return true;
}

Presentation Transcript::replay(const Presentation& start) const {
  Presentation p = start;
  for (const auto& m : moves) p = apply_move(p, m);
  return p;
}

Presentation apply_move(const Presentation& p, const TietzeMove& m) {
  Presentation q = p;
  auto check_relator = [&](int t) {
    if (t < 0 || t >= static_cast<int>(q.relators.size()))
      throw IllegalMove("relator index " + std::to_string(t) + " out of range");
  };
  switch (m.kind) {
    case MoveKind::i: {
      check_relator(m.relator);
      if (m.sign != 1 && m.sign != -1) throw IllegalMove("move i sign must be +1 or -1");
      Word& r = q.relators[static_cast<size_t>(m.relator)];
      Word base = m.sign > 0 ? r : r.inverse();
      r = m.conjugator.inverse() * base * m.conjugator;
      break;
    }
    case MoveKind::iii: {
      check_relator(m.relator);
      check_relator(m.other);
      if (m.relator == m.other) throw IllegalMove("move iii needs distinct relators");
      q.relators[static_cast<size_t>(m.relator)] =
          q.relators[static_cast<size_t>(m.relator)] * q.relators[static_cast<size_t>(m.other)];
      break;
    }
    case MoveKind::ii: {
      check_relator(m.relator);
      int g = q.find_gen(m.gen);
      if (g < 0) throw IllegalMove("no generator named '" + m.gen + "'");
      const Word& r = q.relators[static_cast<size_t>(m.relator)];
      if (r.empty() || r.letters().front().gen != g || r.letters().front().sign != 1)
        throw IllegalMove("relator is not of the shape g w^-1");
      std::vector<Letter> rest(r.letters().begin() + 1, r.letters().end());
      Word w_inv(rest);
      if (w_inv.contains_gen(g)) throw IllegalMove("defining word contains the deleted generator");
      Word w = w_inv.inverse();
      q.relators.erase(q.relators.begin() + m.relator);
      if (!q.relator_vertex.empty()) q.relator_vertex.erase(q.relator_vertex.begin() + m.relator);
      std::vector<int> gen_map(static_cast<size_t>(q.gen_count()));
      for (int i = 0, j = 0; i < q.gen_count(); ++i)
        gen_map[static_cast<size_t>(i)] = i == g ? -1 : j++;
      Word w_mapped;
      {
        std::vector<Letter> ls;
        for (const auto& l : w.letters()) ls.push_back(Letter{gen_map[static_cast<size_t>(l.gen)], l.sign});
        w_mapped = Word(std::move(ls));
      }
      for (auto& rel : q.relators) {
        rel = rel.substitute(g, w);
        std::vector<Letter> ls;
        for (const auto& l : rel.letters()) {
          int ng = gen_map[static_cast<size_t>(l.gen)];
          if (ng < 0) throw IllegalMove("substitution left the deleted generator behind");
          ls.push_back(Letter{ng, l.sign});
        }
        rel = Word(std::move(ls));
      }
      (void)w_mapped;
      q.generators.erase(q.generators.begin() + g);
      break;
    }
    case MoveKind::ii_inverse: {
      if (q.find_gen(m.gen) >= 0) throw IllegalMove("generator '" + m.gen + "' already exists");
      for (const auto& l : m.defining.letters())
        if (l.gen < 0 || l.gen >= q.gen_count())
          throw IllegalMove("defining word references a missing generator");
      q.generators.push_back(m.gen);
      int g = q.gen_count() - 1;
      q.relators.push_back(Word::gen(g) * m.defining.inverse());
      if (!q.relator_vertex.empty()) q.relator_vertex.push_back(-1);
      break;
    }
    case MoveKind::iv: {
      q.relators.push_back(m.inserted);
      if (!q.relator_vertex.empty()) q.relator_vertex.push_back(-1);
      break;
    }
  }
  return q;
}

TypeVector normalize_type(TypeVector t) {
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

namespace {

std::string letter_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "g" + std::to_string(k);
}

}  // namespace

Presentation affine_nodal_presentation(const TypeVector& type) {
  if (type.empty()) throw EmptyType("type vector is empty");
  for (int m : type)
    if (m < 1) throw EmptyType("type entries must be positive");
  Presentation p;
  int r = static_cast<int>(type.size());
  std::vector<std::vector<int>> family(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < type[static_cast<size_t>(i)]; ++j) {
      family[static_cast<size_t>(i)].push_back(p.gen_count());
      p.generators.push_back(letter_name(p.gen_count()));
    }
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k)
      for (int x : family[static_cast<size_t>(i)])
        for (int y : family[static_cast<size_t>(k)]) {
          p.relators.push_back(Word::gen(x) * Word::gen(y) * Word::gen(x, -1) * Word::gen(y, -1));
          p.relator_vertex.push_back(-1);
        }
  return p;
}

std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int t = 0;
  auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  std::vector<Int> diag;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    Int best(0);
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (at(i, j) != 0 && (pi < 0 || abs_int(at(i, j)) < best)) {
          best = abs_int(at(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(pi)]);
    for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pj));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        Int qfac = at(i, t) / at(t, t);
        for (int j = t; j < cols; ++j) at(i, j) -= qfac * at(t, j);
        if (at(i, t) != 0) {
          std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(i)]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        Int qfac = at(t, j) / at(t, t);
        for (int i = t; i < rows; ++i) at(i, j) -= qfac * at(i, t);
        if (at(t, j) != 0) {
          for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, j));
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the remaining block
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (at(i, j) % at(t, t) != 0) {
              for (int jj = t; jj < cols; ++jj) at(t, jj) += at(i, jj);
              clean = false;
            }
      }
    }
    diag.push_back(abs_int(at(t, t)));
    t++;
  }
  return diag;
}

Abelianization abelianization(const Presentation& p) {
  std::vector<std::vector<Int>> m;
  for (const auto& r : p.relators) {
    std::vector<Int> row;
    for (int g = 0; g < p.gen_count(); ++g) row.push_back(r.exponent_sum(g));
    m.push_back(std::move(row));
  }
  std::vector<Int> diag = smith_normal_form(std::move(m));
  Abelianization ab;
  int nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    nonzero++;
    if (d > 1) ab.torsion.push_back(d);
  }
  std::sort(ab.torsion.begin(), ab.torsion.end());
  ab.rank = p.gen_count() - nonzero;
  return ab;
}

TypeVector dsfg_type(const Arrangement& a) {
  Arrangement proj = a.form == Form::projective ? a : cone(a);
  ForestCertificate cert = is_forest(fan_graph(proj));
  if (!cert.forest) throw NotDirectSumOfFreeGroups("Fan graph contains a cycle");
  int n = proj.size() - 1;
  if (n < 0) n = 0;
  TypeVector t;
  int used = 0;
  for (const auto& mp : multiple_points(proj, 3)) {
    t.push_back(mp.multiplicity() - 1);
    used += mp.multiplicity() - 1;
  }
  if (used > n) throw StructureError("multiple point budget exceeds line count");
  for (int i = used; i < n; ++i) t.push_back(1);
  return normalize_type(std::move(t));
}

CompareResult compare_homotopy(const Arrangement& a1, const Arrangement& a2) {
  CompareResult res;
  Arrangement p1 = a1.form == Form::projective ? a1 : cone(a1);
  Arrangement p2 = a2.form == Form::projective ? a2 : cone(a2);
  ForestCertificate c1 = is_forest(fan_graph(p1));
  ForestCertificate c2 = is_forest(fan_graph(p2));
  if (!c1.forest || !c2.forest) {
    res.verdict = HomotopyVerdict::Inconclusive;
    res.reason = !c1.forest && !c2.forest
                     ? "both Fan graphs contain cycles"
                     : (!c1.forest ? "first Fan graph contains a cycle"
                                   : "second Fan graph contains a cycle");
    return res;
  }

  auto pipeline = [](const Arrangement& proj, const Arrangement& orig) {
    struct Side {
      TypeVector type;
      std::optional<NormalizeResult> norm;
      std::optional<Arrangement> preferred;
    } side;
    side.type = dsfg_type(proj);
    if (proj.size() <= 1) return side; // nothing to normalize
    Arrangement affine = orig.form == Form::affine ? orig : decone(proj, 0);
    Arrangement sheared = shear_to_generic(affine);
    PreferredResult pref = preferred_representation(sheared);
    NormalizeResult norm = normalize_to_nodal(pref.arrangement);
    if (norm.type != side.type)
      throw StructureError("normalization type disagrees with the closed form");
    side.norm = std::move(norm);
    side.preferred = pref.arrangement;
    return side;
  };

  auto s1 = pipeline(p1, a1);
  auto s2 = pipeline(p2, a2);
  res.type1 = s1.type;
  res.type2 = s2.type;
  res.left = std::move(s1.norm);
  res.right = std::move(s2.norm);
  res.preferred1 = std::move(s1.preferred);
  res.preferred2 = std::move(s2.preferred);
  if (s1.type == s2.type) {
    res.verdict = HomotopyVerdict::Equivalent;
    res.reason = "type vectors agree";
  } else {
    res.verdict = HomotopyVerdict::NotEquivalent;
    res.reason = "type vectors differ";
  }
  return res;
}

std::string presentation_to_text(const Presentation& p) {
  if (p.gen_count() > 26)
    throw ParseError("text format supports at most 26 generators");
  std::ostringstream os;
  bool renamed = false;
  for (int i = 0; i < p.gen_count(); ++i)
    if (p.generators[static_cast<size_t>(i)] != letter_name(i)) renamed = true;
  if (renamed) {
    os << "# names:";
    for (const auto& g : p.generators) os << " " << g;
    os << "\n";
  }
  os << "gens:";
  for (int i = 0; i < p.gen_count(); ++i) os << " " << letter_name(i);
  os << "\n";
  for (const auto& r : p.relators) {
    os << "rel:";
    for (const auto& l : r.letters()) {
      char c = static_cast<char>('a' + l.gen);
      os << " " << (l.sign > 0 ? c : static_cast<char>(toupper(c)));
    }
    os << "\n";
  }
  return os.str();
}

Presentation presentation_from_text(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string raw;
  bool have_gens = false;
  while (std::getline(in, raw)) {
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      std::string tok;
      while (ls >> tok) p.generators.push_back(tok);
      have_gens = true;
      continue;
    }
    if (head == "rel:") {
      if (!have_gens) throw ParseError("rel: before gens:");
      std::vector<Letter> ls2;
      std::string tok;
      while (ls >> tok) {
        if (tok.size() != 1 || !isalpha(static_cast<unsigned char>(tok[0])))
          throw ParseError("relator tokens must be single letters");
        char c = tok[0];
        int g = tolower(c) - 'a';
        if (g < 0 || g >= p.gen_count()) throw ParseError("unknown generator letter");
        ls2.push_back(Letter{g, islower(static_cast<unsigned char>(c)) ? 1 : -1});
      }
      p.relators.push_back(Word(std::move(ls2)));
      p.relator_vertex.push_back(-1);
      continue;
    }
    throw ParseError("unrecognized line '" + raw + "'");
  }
  if (!have_gens) throw ParseError("missing gens: line");
  return p;
}

}  // namespace arrlab
