#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

using Triple = std::array<Int, 3>;

// Scales to a primitive integer triple with positive leading nonzero entry.
// Returns false for the zero triple.
bool normalize_triple(Triple& t);

// Clears denominators of a rational triple, then normalizes.
bool normalize_rational_triple(const std::array<Rat, 3>& in, Triple& out);

int compare_triples(const Triple& a, const Triple& b);

std::string triple_to_string(const Triple& t);

}  // namespace arrlab
