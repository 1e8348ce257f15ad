#include <algorithm>
#include <map>

#include "arrlab/errors.hpp"
#include "arrlab/presentations.hpp"

namespace arrlab {

namespace {

std::string letter_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "g" + std::to_string(k);
}

}  // namespace

// Right-to-left wiring sweep for a complexified-real affine arrangement.
// Wire words start as plain generators on a vertical base line right of all
// vertices. At each vertex the entering words u1..uk (top to bottom) emit the
// cyclic relations of u1*...*uk; afterwards the bundle reverses and the wire
// entering at position j leaves conjugated by the product of the entering
// words below it. The top wire's conjugate collapses to its plain word by the
// local relation, which keeps the emitted relators in the sparse form used
// throughout the worked examples.
Presentation randell_presentation(const Arrangement& a) {
  if (a.form != Form::affine)
    throw StructureError("randell_presentation expects an affine arrangement");
  if (!is_ra_generic(a))
    throw NeedsShear("vertical line or repeated vertex x coordinate; shear first");

  int n = a.size();
  Presentation p;
  for (int i = 0; i < n; ++i) p.generators.push_back(letter_name(i));

  auto vertices = multiple_points(a, 2);
  std::sort(vertices.begin(), vertices.end(), [](const MultiplePoint& l, const MultiplePoint& r) {
    return l.point.affine_x() > r.point.affine_x();
  });

  Rat x0(0);
  if (!vertices.empty()) x0 = vertices.front().point.affine_x() + 1;
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    Rat yl = a.lines[static_cast<size_t>(l)].y_at(x0);
    Rat yr = a.lines[static_cast<size_t>(r)].y_at(x0);
    if (yl != yr) return yl > yr; // top first
    return a.lines[static_cast<size_t>(l)].slope() < a.lines[static_cast<size_t>(r)].slope();
  });

  std::vector<Word> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = Word::gen(i);

  for (int vi = 0; vi < static_cast<int>(vertices.size()); ++vi) {
    const auto& v = vertices[static_cast<size_t>(vi)];
    int k = v.multiplicity();
    int start = -1;
    for (int pos = 0; pos + k <= n; ++pos) {
      bool match = true;
      for (int t = 0; t < k; ++t) {
        int line = order[static_cast<size_t>(pos + t)];
        if (!std::binary_search(v.incident.begin(), v.incident.end(), line)) match = false;
      }
      if (match) {
        start = pos;
        break;
      }
    }
    if (start < 0) throw StructureError("vertex bundle is not contiguous in the wire order");

    std::vector<Word> entering;
    for (int t = 0; t < k; ++t)
      entering.push_back(word[static_cast<size_t>(order[static_cast<size_t>(start + t)])]);

    for (auto& rel : bracket_relators(entering)) {
      p.relators.push_back(std::move(rel));
      p.relator_vertex.push_back(vi);
    }

    for (int j = 2; j <= k; ++j) { // entering position, 1-based; top wire keeps its word
      Word suffix;
      for (int t = j; t < k; ++t) suffix = suffix * entering[static_cast<size_t>(t)];
      int line = order[static_cast<size_t>(start + j - 1)];
      word[static_cast<size_t>(line)] =
          suffix.inverse() * entering[static_cast<size_t>(j - 1)] * suffix;
    }
    std::reverse(order.begin() + start, order.begin() + start + k);
  }

  for (const auto& v : vertices) p.vertex_points.push_back(v.point);
  return p;
}

}  // namespace arrlab
