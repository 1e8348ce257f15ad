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

// positive k = generator k, negative k = inverse of generator -k-1
Word w(std::initializer_list<int> gens) {
  std::vector<Letter> ls;
  for (int g : gens) ls.push_back(Letter{g < 0 ? -g - 1 : g, g < 0 ? -1 : 1});
  return Word(std::move(ls));
}

Word comm(int x, int y) { return w({x, y, -x - 1, -y - 1}); }

std::multiset<Word> canonical_relators(const Presentation& p) {
  std::multiset<Word> out;
  for (const auto& r : p.relators) out.insert(r.cyclic_canonical());
  return out;
}

std::multiset<Word> canonical_relators(const std::vector<Word>& rels) {
  std::multiset<Word> out;
  for (const auto& r : rels) out.insert(r.cyclic_canonical());
  return out;
}

}  // namespace

TEST_CASE("words reduce and canonicalize") {
  Word ab = w({0, 1, -1, -2});
  CHECK(ab.size() == 4);
  CHECK((w({0, -1}).empty()));
  CHECK(w({0, 1}) * w({-2, -1}) == Word());
  CHECK(comm(0, 1).cyclic_canonical() == comm(1, 0).cyclic_canonical());
  Word conj = comm(0, 1).conjugate(w({2, 1, 0}));
  CHECK(conj.cyclic_canonical() == comm(0, 1).cyclic_canonical());
}

TEST_CASE("bracket relators at a double point are the commutator") {
  auto rels = bracket_relators({Word::gen(0), Word::gen(1)});
  REQUIRE(rels.size() == 1);
  CHECK(rels[0] == comm(0, 1));
}

TEST_CASE("bracket relators at a triple point equate the rotations") {
  auto rels = bracket_relators({Word::gen(0), Word::gen(1), Word::gen(2)});
  REQUIRE(rels.size() == 2);
  CHECK(rels[0] == w({0, 1, 2}) * w({1, 2, 0}).inverse());
  CHECK(rels[1] == w({1, 2, 0}) * w({2, 0, 1}).inverse());
}

TEST_CASE("affine nodal presentations") {
  Presentation p11 = affine_nodal_presentation({1, 1});
  CHECK(p11.gen_count() == 2);
  REQUIRE(p11.relators.size() == 1);
  CHECK(p11.relators[0] == comm(0, 1));

  Presentation free3 = affine_nodal_presentation({3});
  CHECK(free3.gen_count() == 3);
  CHECK(free3.relators.empty());

  Presentation p22 = affine_nodal_presentation({2, 2});
  CHECK(p22.gen_count() == 4);
  CHECK(p22.relators.size() == 4);
  Abelianization ab = abelianization(p22);
  CHECK(ab.rank == 4);
  CHECK(ab.torsion.empty());

  CHECK_THROWS_AS(affine_nodal_presentation({}), EmptyType);
  CHECK_THROWS_AS(affine_nodal_presentation({2, 0}), EmptyType);
}

TEST_CASE("tietze moves") {
  Presentation p;
  p.generators = {"a", "b", "c"};
  p.relators = {comm(0, 1), comm(0, 2)};

  SUBCASE("kind iii concatenates relators") {
    TietzeMove m;
    m.kind = MoveKind::iii;
    m.relator = 0;
    m.other = 1;
    Presentation q = apply_move(p, m);
    CHECK(q.relators[0] == comm(0, 1) * comm(0, 2));
    TietzeMove bad;
    bad.kind = MoveKind::iii;
    bad.relator = 0;
    bad.other = 0;
    CHECK_THROWS_AS(apply_move(p, bad), IllegalMove);
  }

  SUBCASE("kind i conjugates") {
    TietzeMove m;
    m.kind = MoveKind::i;
    m.relator = 0;
    m.conjugator = Word::gen(1);
    m.sign = 1;
    Presentation q = apply_move(p, m);
    CHECK(q.relators[0] == comm(0, 1).conjugate(Word::gen(1)));
  }

  SUBCASE("kind ii_inverse then ii round-trips") {
    TietzeMove add;
    add.kind = MoveKind::ii_inverse;
    add.gen = "d";
    add.defining = w({0, 1});
    Presentation q = apply_move(p, add);
    CHECK(q.gen_count() == 4);
    CHECK(q.relators.back() == Word::gen(3) * w({0, 1}).inverse());

    TietzeMove del;
    del.kind = MoveKind::ii;
    del.gen = "d";
    del.relator = 2;
    Presentation r = apply_move(q, del);
    CHECK(r.same_presentation(p));
  }

  SUBCASE("kind ii requires the g w^-1 shape") {
    TietzeMove del;
    del.kind = MoveKind::ii;
    del.gen = "a";
    del.relator = 0;
    CHECK_THROWS_AS(apply_move(p, del), IllegalMove);
  }

  SUBCASE("kind iv flags the transcript") {
    Transcript t;
    TietzeMove m;
    m.kind = MoveKind::iv;
    m.inserted = comm(0, 1);
    t.moves.push_back(m);
    CHECK(!t.homotopy_preserving());
  }
}

TEST_CASE("abelianization ranks and torsion") {
  Presentation p;
  p.generators = {"a"};
  p.relators = {w({0, 0})};
  Abelianization ab = abelianization(p);
  CHECK(ab.rank == 0);
  REQUIRE(ab.torsion.size() == 1);
  CHECK(ab.torsion[0] == 2);

  CHECK(smith_normal_form({{Int(2), Int(4)}, {Int(6), Int(8)}}) ==
        std::vector<Int>{Int(2), Int(4)});
}

TEST_CASE("randell presentation of two crossing lines") {
  Arrangement a = make_affine({Line::from_triple({Int(1), Int(-1), Int(0)}),
                               Line::from_triple({Int(1), Int(1), Int(-2)})});
  Presentation p = randell_presentation(a);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].cyclic_canonical() == comm(0, 1).cyclic_canonical());
}

TEST_CASE("randell presentation needs a generic picture") {
  Arrangement vertical = make_affine({Line::from_triple({Int(1), Int(0), Int(0)}),
                                      Line::from_triple({Int(0), Int(1), Int(0)})});
  CHECK_THROWS_AS(randell_presentation(vertical), NeedsShear);
}

TEST_CASE("randell presentation reproduces the worked six-line example") {
  // lines in file order a,b,c,d,v,w; generators 0..5 with e=v, f=w
  Arrangement a = fixture("ex2_da2.arr");
  Presentation p = randell_presentation(a);
  CHECK(p.gen_count() == 6);
  CHECK(p.relators.size() == 12); // 8 double points plus two triple brackets

  const int A = 0, B = 1, C = 2, D = 3, V = 4, W = 5;
  Word v_conj_b = Word::gen(V).conjugate(Word::gen(B)); // b^-1 v b
  std::vector<Word> expected;
  expected.push_back(comm(B, D));
  expected.push_back(comm(A, C));
  expected.push_back(comm(B, W));
  for (auto& r : bracket_relators({Word::gen(A), Word::gen(V), Word::gen(B)}))
    expected.push_back(r);
  expected.push_back(comm(B, C));
  expected.push_back(comm(A, W));
  expected.push_back(Word::gen(C) * v_conj_b * Word::gen(C, -1) * v_conj_b.inverse());
  expected.push_back(comm(A, D));
  for (auto& r : bracket_relators({Word::gen(C), Word::gen(W), Word::gen(D)}))
    expected.push_back(r);
  expected.push_back(Word::gen(D) * v_conj_b * Word::gen(D, -1) * v_conj_b.inverse());

  CHECK(canonical_relators(p) == canonical_relators(expected));

  Abelianization ab = abelianization(p);
  CHECK(ab.rank == 6);
  CHECK(ab.torsion.empty());
}

TEST_CASE("dsfg type closed form") {
  CHECK(dsfg_type(fixture("pencil5.arr")) == TypeVector{4});
  CHECK(dsfg_type(fixture("generic4.arr")) == TypeVector({1, 1, 1}));
  CHECK(dsfg_type(fixture("ex1_a1.arr")) == TypeVector({2, 2, 1}));
  CHECK(dsfg_type(fixture("ex1_a2.arr")) == TypeVector({2, 2, 1}));
  CHECK(dsfg_type(fixture("ex2_da2.arr")) == TypeVector({2, 2, 2}));
  CHECK_THROWS_AS(dsfg_type(fixture("ex3_a1.arr")), NotDirectSumOfFreeGroups);
}

TEST_CASE("presentation text round trip") {
  Presentation p = affine_nodal_presentation({2, 1});
  std::string text = presentation_to_text(p);
  Presentation q = presentation_from_text(text);
  CHECK(q.same_presentation(p));
}
