#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/presentations.hpp"

using namespace arrlab;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ARRLAB_FIXTURES) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Arrangement fixture(const std::string& name) { return parse_arrangement(slurp(name)); }

std::multiset<Word> canonical_renamed(const Presentation& p,
                                      const std::vector<std::pair<std::string, std::string>>& naming,
                                      const Presentation& target) {
  std::vector<int> map(static_cast<size_t>(p.gen_count()), -1);
  for (const auto& [from, to] : naming) {
    int g = p.find_gen(from);
    int h = target.find_gen(to);
    REQUIRE(g >= 0);
    REQUIRE(h >= 0);
    map[static_cast<size_t>(g)] = h;
  }
  std::multiset<Word> out;
  for (const auto& r : p.relators) out.insert(r.remap(map).cyclic_canonical());
  return out;
}

std::multiset<Word> canonical(const Presentation& p) {
  std::multiset<Word> out;
  for (const auto& r : p.relators) out.insert(r.cyclic_canonical());
  return out;
}

}  // namespace

TEST_CASE("normalize a nodal picture: nothing to peel") {
  Arrangement a = fixture("ex2_da1.arr");
  Arrangement sheared = shear_to_generic(a);
  NormalizeResult res = normalize_to_nodal(sheared);
  CHECK(res.type == TypeVector({2, 2, 2}));
  CHECK(res.transcript.moves.empty());
  CHECK(res.transcript.homotopy_preserving());
}

TEST_CASE("normalize the worked six-line example") {
  Arrangement a = fixture("ex2_da2.arr");
  NormalizeResult res = normalize_to_nodal(a);
  CHECK(res.type == TypeVector({2, 2, 2}));
  CHECK(res.transcript.homotopy_preserving());
  for (const auto& m : res.transcript.moves)
    CHECK(m.kind != MoveKind::iv);

  // replay is bit-exact
  Presentation replayed = res.transcript.replay(res.initial);
  CHECK(replayed.same_presentation(res.final_presentation));

  // final presentation is the nodal presentation of the type, up to renaming
  Presentation nodal = affine_nodal_presentation(res.type);
  CHECK(canonical_renamed(res.final_presentation, res.naming, nodal) == canonical(nodal));

  // every move preserves the abelianization
  Presentation cur = res.initial;
  Abelianization ab0 = abelianization(cur);
  CHECK(ab0.rank == 6);
  for (const auto& m : res.transcript.moves) {
    cur = apply_move(cur, m);
    Abelianization ab = abelianization(cur);
    CHECK(ab.rank == ab0.rank);
    CHECK(ab.torsion == ab0.torsion);
  }

  // the conjugation-removal prefix uses kinds i and iii only and already
  // produces the plain commutators [c,v] and [d,v]
  size_t first_ii = 0;
  while (first_ii < res.transcript.moves.size() &&
         res.transcript.moves[first_ii].kind != MoveKind::ii &&
         res.transcript.moves[first_ii].kind != MoveKind::ii_inverse)
    first_ii++;
  Presentation prefix = res.initial;
  for (size_t i = 0; i < first_ii; ++i) prefix = apply_move(prefix, res.transcript.moves[i]);
  auto rels = canonical(prefix);
  Word cv = (Word::gen(2) * Word::gen(4) * Word::gen(2, -1) * Word::gen(4, -1)).cyclic_canonical();
  Word dv = (Word::gen(3) * Word::gen(4) * Word::gen(3, -1) * Word::gen(4, -1)).cyclic_canonical();
  CHECK(rels.count(cv) == 1);
  CHECK(rels.count(dv) == 1);
}

TEST_CASE("normalize rejects non-forest input") {
  Arrangement a = fixture("ex3_a1.arr");
  Arrangement affine = decone(a, 2);
  CHECK_THROWS_AS(normalize_to_nodal(shear_to_generic(affine)), NotDirectSumOfFreeGroups);
}

TEST_CASE("type sums match the affine line count") {
  for (const char* name : {"ex2_da1.arr", "ex2_da2.arr"}) {
    Arrangement a = shear_to_generic(fixture(name));
    NormalizeResult res = normalize_to_nodal(a);
    int total = 0;
    for (int m : res.type) total += m;
    CHECK(total == a.size());
    CHECK(total == abelianization(res.initial).rank);
  }
}

TEST_CASE("compare the worked pairs") {
  SUBCASE("six-line pair is equivalent of type (2,2,2)") {
    CompareResult res = compare_homotopy(fixture("ex2_da2.arr"), fixture("ex2_da1.arr"));
    CHECK(res.verdict == HomotopyVerdict::Equivalent);
    CHECK(*res.type1 == TypeVector({2, 2, 2}));
    CHECK(*res.type2 == TypeVector({2, 2, 2}));
    REQUIRE(res.left);
    REQUIRE(res.right);
    CHECK(res.left->transcript.homotopy_preserving());
    CHECK(res.right->transcript.homotopy_preserving());
  }
  SUBCASE("projective pair is equivalent of type (2,2,1)") {
    CompareResult res = compare_homotopy(fixture("ex1_a1.arr"), fixture("ex1_a2.arr"));
    CHECK(res.verdict == HomotopyVerdict::Equivalent);
    CHECK(*res.type1 == TypeVector({2, 2, 1}));
  }
  SUBCASE("non-forest pair is inconclusive") {
    CompareResult res = compare_homotopy(fixture("ex3_a1.arr"), fixture("ex3_a2.arr"));
    CHECK(res.verdict == HomotopyVerdict::Inconclusive);
    CHECK(!res.type1);
  }
  SUBCASE("pencil versus generic is not equivalent") {
    CompareResult res = compare_homotopy(fixture("pencil5.arr"), fixture("generic4.arr"));
    CHECK(res.verdict == HomotopyVerdict::NotEquivalent);
  }
}
