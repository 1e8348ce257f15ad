#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrlab/numbers.hpp"

namespace arrlab {

// Projective line a*x + b*y + c*z = 0 with primitive integer coefficients,
// first nonzero entry positive. Two lines are equal iff their triples are.
class Line {
 public:
  Line() : c_{Int(0), Int(0), Int(1)} {}
  static Line from_triple(const Triple& t);
  static Line from_rationals(const std::array<Rat, 3>& t);

  const Triple& coeffs() const { return c_; }
  const Int& a() const { return c_[0]; }
  const Int& b() const { return c_[1]; }
  const Int& c() const { return c_[2]; }

  bool operator==(const Line& o) const { return c_ == o.c_; }
  bool operator!=(const Line& o) const { return c_ != o.c_; }
  bool operator<(const Line& o) const { return compare_triples(c_, o.c_) < 0; }

  // Affine picture helpers (infinity line z = 0).
  bool is_vertical() const { return c_[1] == 0; }
  Rat slope() const;            // requires non-vertical
  Rat y_at(const Rat& x) const; // requires non-vertical

  std::string to_string() const { return triple_to_string(c_); }

 private:
  explicit Line(const Triple& t) : c_(t) {}
  Triple c_;
};

class ProjPoint {
 public:
  ProjPoint() : c_{Int(0), Int(0), Int(1)} {}
  static ProjPoint from_triple(const Triple& t);
  static ProjPoint from_affine(const Rat& x, const Rat& y);

  const Triple& coords() const { return c_; }
  bool incident(const Line& l) const;
  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return c_ != o.c_; }
  bool operator<(const ProjPoint& o) const { return compare_triples(c_, o.c_) < 0; }

  // Finite means not on the standard infinity line z = 0.
  bool is_finite() const { return c_[2] != 0; }
  Rat affine_x() const; // requires finite
  Rat affine_y() const;

  std::string to_string() const { return triple_to_string(c_); }

 private:
  explicit ProjPoint(const Triple& t) : c_(t) {}
  Triple c_;
};

enum class Form { projective, affine };

// Ordered set of distinct lines. Affine arrangements use the standard chart:
// the line at infinity is z = 0 and is not a member.
struct Arrangement {
  Form form = Form::projective;
  std::vector<Line> lines;
  std::string label;

  int size() const { return static_cast<int>(lines.size()); }
  std::optional<int> find(const Line& l) const;
};

Arrangement make_projective(std::vector<Line> lines, std::string label = "");
Arrangement make_affine(std::vector<Line> lines, std::string label = "");

struct MultiplePoint {
  ProjPoint point;
  std::vector<int> incident; // sorted arrangement line indices
  int multiplicity() const { return static_cast<int>(incident.size()); }
};

// File format: one "a b c" rational triple per line, '#' comments, optional
// "form:" and "infinity:" headers.
Arrangement parse_arrangement(const std::string& text);
std::string serialize_arrangement(const Arrangement& a);

ProjPoint intersect(const Line& l1, const Line& l2);

// All intersection points of multiplicity >= min_mult, sorted by normalized
// coordinates. For affine arrangements only finite points are reported.
std::vector<MultiplePoint> multiple_points(const Arrangement& a, int min_mult);

// Sends the chosen line to infinity by an integer change of coordinates.
Arrangement decone(const Arrangement& a, int h0);
// Appends z = 0 as the last line.
Arrangement cone(const Arrangement& a);

// x -> x + t*y with t = 1, 1/2, 1/3, ... until no line is vertical and all
// intersection points have distinct x coordinates.
Arrangement shear_to_generic(const Arrangement& a);

bool is_ra_generic(const Arrangement& a);

struct PreferredResult {
  Arrangement arrangement;
  // line_map[i] = index in `arrangement` of the line playing input line i's role
  std::vector<int> line_map;
};

// Rebuilds a real affine forest arrangement so that every multiple point that
// is neither an endpoint nor isolated in the affine Fan graph has another
// multiple point strictly to its right. Lattice class is preserved (verified).
PreferredResult preferred_representation(const Arrangement& a);

bool preferred_predicate(const Arrangement& a);

}  // namespace arrlab
