#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrlab/geometry.hpp"
#include "arrlab/numbers.hpp"

namespace arrlab {

struct Letter {
  int gen = 0;
  int sign = 1; // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
};

// Freely reduced word in the generators of a presentation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

  static Word gen(int g, int sign = 1) { return Word({Letter{g, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& o) const;
  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator<(const Word& o) const;

  Word conjugate(const Word& w) const { return w.inverse() * (*this) * w; }
  // Lexicographically least among all rotations of the cyclic reduction of
  // the word and of its inverse; relators compare equal as relations iff
  // their canonical forms agree.
  Word cyclic_canonical() const;
  Word cyclic_reduced(Word* conjugator = nullptr) const;

  bool contains_gen(int g) const;
  Int exponent_sum(int g) const;
  Word substitute(int g, const Word& w) const;
  Word remap(const std::vector<int>& gen_map) const;

  void reduce();

 private:
  std::vector<Letter> letters_;
};

// Relations equating all cyclic rotations of the product m1*m2*...*mk.
std::vector<Word> bracket_relators(const std::vector<Word>& meridians);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // Optional provenance: intersection point per relator, -1 when absent.
  std::vector<int> relator_vertex;
  std::vector<ProjPoint> vertex_points;

  int gen_count() const { return static_cast<int>(generators.size()); }
  int find_gen(const std::string& name) const;
  std::string word_to_string(const Word& w) const;
  bool same_presentation(const Presentation& o) const {
    return generators == o.generators && relators == o.relators;
  }
};

enum class MoveKind { i, ii, ii_inverse, iii, iv };

std::string move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& s);

struct TietzeMove {
  MoveKind kind = MoveKind::i;
  int relator = -1;        // i, ii, iii: target relator index
  Word conjugator;         // i
  int sign = 1;            // i
  std::string gen;         // ii: deleted generator, ii_inverse: new generator
  Word defining;           // ii_inverse: g * defining^-1 is appended
  int other = -1;          // iii: appended relator index
  Word inserted;           // iv
};

struct Transcript {
  std::vector<TietzeMove> moves;
  std::vector<std::pair<std::string, std::string>> renames; // annotations
  bool homotopy_preserving() const;
  Presentation replay(const Presentation& start) const;
};

Presentation apply_move(const Presentation& p, const TietzeMove& m);

// Descending multiset of free-factor ranks.
using TypeVector = std::vector<int>;
TypeVector normalize_type(TypeVector t);

// Commutator presentation of an affine nodal arrangement of the given type.
Presentation affine_nodal_presentation(const TypeVector& t);

// Wiring-diagram presentation of a complexified-real affine arrangement read
// off a right-to-left sweep. Requires no vertical lines and distinct vertex
// x coordinates.
Presentation randell_presentation(const Arrangement& a);

struct Abelianization {
  int rank = 0;
  std::vector<Int> torsion;
  bool operator==(const Abelianization& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
};

Abelianization abelianization(const Presentation& p);
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m);

struct NormalizeResult {
  TypeVector type;
  Transcript transcript;
  Presentation initial;
  Presentation final_presentation;
  // generator name -> canonical nodal generator name
  std::vector<std::pair<std::string, std::string>> naming;
};

// Theorem-4.2-style normalization: peels multiple points of the affine
// picture rightmost first, emitting a transcript of kinds i, ii, ii_inverse,
// iii that ends at the affine nodal presentation of the type vector.
NormalizeResult normalize_to_nodal(const Arrangement& a);
NormalizeResult normalize_to_nodal(const Arrangement& a, const Presentation& p);

// Closed form: one factor of rank mu-1 per multiple point of the projective
// arrangement plus rank-1 factors up to n = |A| - 1.
TypeVector dsfg_type(const Arrangement& a);

enum class HomotopyVerdict { Equivalent, NotEquivalent, Inconclusive };

struct CompareResult {
  HomotopyVerdict verdict = HomotopyVerdict::Inconclusive;
  std::string reason;
  std::optional<TypeVector> type1, type2;
  std::optional<NormalizeResult> left, right;
  std::optional<Arrangement> preferred1, preferred2;
};

CompareResult compare_homotopy(const Arrangement& a1, const Arrangement& a2);

std::string presentation_to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& text);

}  // namespace arrlab
