#include "arrlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "arrlab/errors.hpp"

namespace arrlab {

IntersectionLattice::IntersectionLattice(int atom_count, std::vector<Flat> flats)
    : atom_count_(atom_count) {
  int top = 0;
  for (const auto& f : flats) top = std::max(top, f.rank);
  by_rank_.assign(static_cast<size_t>(top) + 1, {});
  for (auto& f : flats) {
    if (!std::is_sorted(f.atoms.begin(), f.atoms.end()))
      std::sort(f.atoms.begin(), f.atoms.end());
    by_rank_[static_cast<size_t>(f.rank)].push_back(std::move(f));
  }
  for (auto& level : by_rank_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
}

const std::vector<Flat>& IntersectionLattice::flats_of_rank(int r) const {
  static const std::vector<Flat> empty;
  if (r < 0 || r > rank()) return empty;
  return by_rank_[static_cast<size_t>(r)];
}

std::vector<Flat> IntersectionLattice::all_flats() const {
  std::vector<Flat> out;
  for (const auto& level : by_rank_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

bool IntersectionLattice::has_flat(const std::vector<int>& atoms) const {
  for (const auto& level : by_rank_)
    for (const auto& f : level)
      if (f.atoms == atoms) return true;
  return false;
}

const Flat& IntersectionLattice::closure(const std::vector<int>& atoms) const {
  const Flat* best = nullptr;
  for (const auto& level : by_rank_)
    for (const auto& f : level)
      if (std::includes(f.atoms.begin(), f.atoms.end(), atoms.begin(), atoms.end())) {
        if (!best || f.rank < best->rank ||
            (f.rank == best->rank && f.atoms.size() < best->atoms.size()))
          best = &f;
      }
  if (!best) throw StructureError("no flat contains the given atoms");
  return *best;
}

void IntersectionLattice::validate() const {
  if (flats_of_rank(0).size() != 1 || !flats_of_rank(0).front().atoms.empty())
    throw StructureError("rank-0 flat must be the empty set");
  std::set<int> singles;
  for (const auto& f : flats_of_rank(1)) {
    if (f.atoms.size() != 1) throw StructureError("rank-1 flat is not a singleton");
    singles.insert(f.atoms[0]);
  }
  if (static_cast<int>(singles.size()) != atom_count_)
    throw StructureError("rank-1 flats are not exactly the atoms");
  if (rank() >= 2) {
    for (int i = 0; i < atom_count_; ++i)
      for (int j = i + 1; j < atom_count_; ++j) {
        int covers = 0;
        for (const auto& f : flats_of_rank(2))
          if (std::binary_search(f.atoms.begin(), f.atoms.end(), i) &&
              std::binary_search(f.atoms.begin(), f.atoms.end(), j))
            covers++;
        if (covers != 1) throw StructureError("atom pair not in exactly one rank-2 flat");
      }
  }
  if (rank() >= 1) {
    const auto& tops = flats_of_rank(rank());
    if (tops.size() != 1 || static_cast<int>(tops.front().atoms.size()) != atom_count_)
      throw StructureError("top flat must contain all atoms");
  }
  // closures of flats are themselves
  for (const auto& level : by_rank_)
    for (const auto& f : level)
      if (!(closure(f.atoms) == f)) throw StructureError("flat is not closed");
}

IntersectionLattice IntersectionLattice::relabel(const std::vector<int>& atom_map) const {
  std::vector<Flat> flats;
  for (const auto& level : by_rank_)
    for (const auto& f : level) {
      Flat g;
      g.rank = f.rank;
      for (int a : f.atoms) g.atoms.push_back(atom_map[static_cast<size_t>(a)]);
      std::sort(g.atoms.begin(), g.atoms.end());
      flats.push_back(std::move(g));
    }
  return IntersectionLattice(atom_count_, std::move(flats));
}

CentralArrangement make_central(int dim, std::vector<std::vector<Int>> normals) {
  for (auto& n : normals) {
    if (static_cast<int>(n.size()) != dim) throw StructureError("normal has wrong dimension");
    Int g = 0;
    for (const auto& x : n) g = gcd_int(g, x);
    if (g == 0) throw DegenerateLine("zero normal vector");
    for (auto& x : n) x /= g;
    for (const auto& x : n) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : n) y = -y;
        break;
      }
    }
  }
  std::set<std::vector<Int>> seen;
  for (const auto& n : normals)
    if (!seen.insert(n).second) throw DuplicateLine("repeated hyperplane");
  return CentralArrangement{dim, std::move(normals)};
}

CentralArrangement plane_to_central(const Arrangement& a) {
  Arrangement p = a.form == Form::projective ? a : cone(a);
  std::vector<std::vector<Int>> normals;
  for (const auto& l : p.lines)
    normals.push_back({l.a(), l.b(), l.c()});
  return make_central(3, std::move(normals));
}

Arrangement central_to_plane(const CentralArrangement& a) {
  if (a.dim != 3) throw StructureError("central_to_plane expects ambient dimension 3");
  std::vector<Line> lines;
  for (const auto& n : a.normals) lines.push_back(Line::from_triple({n[0], n[1], n[2]}));
  return make_projective(std::move(lines));
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
      Rat factor = m[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                   m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
      for (int k = c; k < cols; ++k)
        m[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
            factor * m[static_cast<size_t>(rank)][static_cast<size_t>(k)];
    }
    rank++;
  }
  return rank;
}

namespace {

int subset_rank(const CentralArrangement& a, const std::vector<int>& atoms) {
  std::vector<std::vector<Rat>> m;
  for (int i : atoms) {
    std::vector<Rat> row;
    for (const auto& x : a.normals[static_cast<size_t>(i)]) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

std::vector<int> closure_in(const CentralArrangement& a, const std::vector<int>& atoms, int r) {
  std::vector<int> out;
  for (int j = 0; j < a.size(); ++j) {
    std::vector<int> probe = atoms;
    probe.push_back(j);
    if (subset_rank(a, probe) == r) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

IntersectionLattice lattice_of(const CentralArrangement& a) {
  int n = a.size();
  std::vector<Flat> flats;
  flats.push_back(Flat{{}, 0});
  std::set<std::vector<int>> seen;
  // every rank-k flat is the closure of k independent atoms
  std::vector<std::vector<int>> frontier{{}};
  int total_rank = subset_rank(a, [&] {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  for (int r = 1; r <= total_rank; ++r) {
    std::vector<std::vector<int>> next;
    std::set<std::vector<int>> level_seen;
    for (const auto& base : frontier) {
      int start = base.empty() ? 0 : base.back() + 1;
      for (int j = start; j < n; ++j) {
        std::vector<int> probe = base;
        probe.push_back(j);
        if (subset_rank(a, probe) != r) continue;
        std::vector<int> cl = closure_in(a, probe, r);
        if (level_seen.insert(cl).second) flats.push_back(Flat{cl, r});
        next.push_back(std::move(probe));
      }
    }
    frontier = std::move(next);
  }
  return IntersectionLattice(n, std::move(flats));
}

IntersectionLattice lattice_of(const Arrangement& a) {
  return lattice_of(plane_to_central(a));
}

IntersectionLattice truncate(const IntersectionLattice& l) {
  if (l.rank() < 2) throw RankTooLow("truncate needs rank >= 2");
  std::vector<Flat> flats;
  for (int r = 0; r <= l.rank() - 2; ++r)
    for (const auto& f : l.flats_of_rank(r)) flats.push_back(f);
  std::vector<int> all(static_cast<size_t>(l.atom_count()));
  std::iota(all.begin(), all.end(), 0);
  flats.push_back(Flat{all, l.rank() - 1});
  return IntersectionLattice(l.atom_count(), std::move(flats));
}

IntersectionLattice truncate_to_rank3(const IntersectionLattice& l) {
  IntersectionLattice out = l;
  while (out.rank() > 3) out = truncate(out);
  return out;
}

CentralArrangement truncate_arrangement(const CentralArrangement& a, long seed) {
  if (a.dim < 2) throw RankTooLow("cannot truncate below dimension 2");
  IntersectionLattice current = lattice_of(a);
  // A generic section of a non-essential arrangement keeps the whole lattice;
  // only the essential case loses its corank-1 flats.
  IntersectionLattice expected = current.rank() == a.dim ? truncate(current) : current;
  int d = a.dim;
  for (long k = 1; k <= 1000; ++k) {
    // Vandermonde-style normals are generic for all but finitely many t.
    Int t(seed + k);
    std::vector<Int> g(static_cast<size_t>(d));
    Int p(1);
    for (int i = 0; i < d; ++i) {
      g[static_cast<size_t>(i)] = p;
      p *= t;
    }
    // integer basis of ker(g): g[0] = 1, so x0 = -sum g[i] x_i
    std::vector<std::vector<Int>> basis;
    for (int i = 1; i < d; ++i) {
      std::vector<Int> b(static_cast<size_t>(d), Int(0));
      b[static_cast<size_t>(i)] = 1;
      b[0] = -g[static_cast<size_t>(i)];
      basis.push_back(std::move(b));
    }
    std::vector<std::vector<Int>> normals;
    bool degenerate = false;
    for (const auto& h : a.normals) {
      std::vector<Int> row(static_cast<size_t>(d - 1), Int(0));
      bool zero = true;
      for (int j = 0; j < d - 1; ++j) {
        Int s(0);
        for (int i = 0; i < d; ++i)
          s += h[static_cast<size_t>(i)] * basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
        row[static_cast<size_t>(j)] = s;
        if (s != 0) zero = false;
      }
      if (zero) {
        degenerate = true;
        break;
      }
      normals.push_back(std::move(row));
    }
    if (degenerate) continue;
    CentralArrangement cand;
    try {
      cand = make_central(d - 1, std::move(normals));
    } catch (const Error&) {
      continue; // hyperplanes collided, not generic
    }
    if (lattice_of(cand) == expected) return cand;
  }
  throw GenericityFailure("no generic section among 1000 candidates for dimension " +
                          std::to_string(d));
}

BasePointedLattice parallel_connection(const BasePointedLattice& l1,
                                       const BasePointedLattice& l2) {
  if (l1.lattice.rank() < 1 || l2.lattice.rank() < 1)
    throw RankTooLow("parallel connection needs rank >= 1 on both sides");
  int n1 = l1.lattice.atom_count();
  int n2 = l2.lattice.atom_count();
  // atoms: A1 keeps its labels with the base renamed to H' = base1;
  // A2 \ base2 gets fresh labels n1, n1+1, ...
  std::vector<int> map2(static_cast<size_t>(n2), -1);
  int next = n1;
  for (int i = 0; i < n2; ++i) map2[static_cast<size_t>(i)] = i == l2.base ? l1.base : next++;

  std::vector<Flat> flats;
  for (const auto& f1 : l1.lattice.all_flats()) {
    bool base1_in = std::binary_search(f1.atoms.begin(), f1.atoms.end(), l1.base);
    for (const auto& f2 : l2.lattice.all_flats()) {
      bool base2_in = std::binary_search(f2.atoms.begin(), f2.atoms.end(), l2.base);
      if (base1_in != base2_in) continue;
      Flat k;
      k.atoms = f1.atoms;
      for (int a : f2.atoms)
        if (a != l2.base) k.atoms.push_back(map2[static_cast<size_t>(a)]);
      std::sort(k.atoms.begin(), k.atoms.end());
      k.rank = f1.rank + f2.rank - (base1_in ? 1 : 0);
      flats.push_back(std::move(k));
    }
  }
  return BasePointedLattice{IntersectionLattice(n1 + n2 - 1, std::move(flats)), l1.base};
}

CentralArrangement parallel_connection_realization(const CentralArrangement& a1, int h1,
                                                   const CentralArrangement& a2, int h2) {
  if (h1 < 0 || h1 >= a1.size() || h2 < 0 || h2 >= a2.size())
    throw StructureError("base hyperplane index out of range");
  // change coordinates on each factor so the base hyperplane is the first
  // coordinate hyperplane
  auto to_first_coord = [](const CentralArrangement& a, int h) {
    int d = a.dim;
    const auto& f = a.normals[static_cast<size_t>(h)];
    int pivot = -1;
    for (int i = 0; i < d; ++i)
      if (f[static_cast<size_t>(i)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw ChangeOfCoordsFailure("zero base functional");
    // columns: t1 = e_pivot, then kernel basis of f
    std::vector<std::vector<Int>> cols;
    std::vector<Int> t1(static_cast<size_t>(d), Int(0));
    t1[static_cast<size_t>(pivot)] = 1;
    cols.push_back(t1);
    for (int i = 0; i < d; ++i) {
      if (i == pivot) continue;
      std::vector<Int> b(static_cast<size_t>(d), Int(0));
      b[static_cast<size_t>(i)] = f[static_cast<size_t>(pivot)];
      b[static_cast<size_t>(pivot)] = -f[static_cast<size_t>(i)];
      cols.push_back(std::move(b));
    }
    std::vector<std::vector<Int>> out;
    for (const auto& h_row : a.normals) {
      std::vector<Int> row(static_cast<size_t>(d), Int(0));
      for (int j = 0; j < d; ++j) {
        Int s(0);
        for (int i = 0; i < d; ++i)
          s += h_row[static_cast<size_t>(i)] * cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
        row[static_cast<size_t>(j)] = s;
      }
      out.push_back(std::move(row));
    }
    return make_central(d, std::move(out));
  };

  CentralArrangement b1 = to_first_coord(a1, h1);
  CentralArrangement b2 = to_first_coord(a2, h2);
  int n = b1.dim, m = b2.dim;
  std::vector<std::vector<Int>> normals;
  for (const auto& h : b1.normals) {
    std::vector<Int> row(static_cast<size_t>(n + m - 1), Int(0));
    for (int i = 0; i < n; ++i) row[static_cast<size_t>(i)] = h[static_cast<size_t>(i)];
    normals.push_back(std::move(row));
  }
  for (int j = 0; j < b2.size(); ++j) {
    if (j == h2) continue;
    const auto& h = b2.normals[static_cast<size_t>(j)];
    std::vector<Int> row(static_cast<size_t>(n + m - 1), Int(0));
    row[0] = h[0];
    for (int i = 1; i < m; ++i) row[static_cast<size_t>(n + i - 1)] = h[static_cast<size_t>(i)];
    normals.push_back(std::move(row));
  }
  CentralArrangement result = make_central(n + m - 1, std::move(normals));

  BasePointedLattice ref = parallel_connection(BasePointedLattice{lattice_of(a1), h1},
                                               BasePointedLattice{lattice_of(a2), h2});
  // result atom order (a1's atoms, then a2 minus its base in order) matches
  // the labelling used by parallel_connection
  if (!(lattice_of(result) == ref.lattice))
    throw StructureError("parallel connection realization does not match the lattice");
  return result;
}

CentralArrangement direct_sum(const CentralArrangement& a1, const CentralArrangement& a2) {
  std::vector<std::vector<Int>> normals;
  for (const auto& h : a1.normals) {
    std::vector<Int> row = h;
    row.resize(static_cast<size_t>(a1.dim + a2.dim), Int(0));
    normals.push_back(std::move(row));
  }
  for (const auto& h : a2.normals) {
    std::vector<Int> row(static_cast<size_t>(a1.dim), Int(0));
    row.insert(row.end(), h.begin(), h.end());
    normals.push_back(std::move(row));
  }
  return make_central(a1.dim + a2.dim, std::move(normals));
}

IntersectionLattice direct_sum_lattice(const IntersectionLattice& l1,
                                       const IntersectionLattice& l2) {
  int n1 = l1.atom_count();
  std::vector<Flat> flats;
  for (const auto& f1 : l1.all_flats())
    for (const auto& f2 : l2.all_flats()) {
      Flat k;
      k.atoms = f1.atoms;
      for (int a : f2.atoms) k.atoms.push_back(n1 + a);
      k.rank = f1.rank + f2.rank;
      flats.push_back(std::move(k));
    }
  return IntersectionLattice(n1 + l2.atom_count(), std::move(flats));
}

namespace {

CentralArrangement truncate_central_to_dim3(CentralArrangement c, long seed) {
  while (c.dim > 3) c = truncate_arrangement(c, seed);
  return c;
}

}  // namespace

Arrangement tp3(const Arrangement& a1, int h1, const Arrangement& a2, int h2) {
  CentralArrangement c1 = plane_to_central(a1);
  CentralArrangement c2 = plane_to_central(a2);
  CentralArrangement conn = parallel_connection_realization(c1, h1, c2, h2);
  CentralArrangement cut = truncate_central_to_dim3(conn, 0);
  IntersectionLattice expected = truncate_to_rank3(
      parallel_connection(BasePointedLattice{lattice_of(c1), h1},
                          BasePointedLattice{lattice_of(c2), h2})
          .lattice);
  if (!(lattice_of(cut) == expected))
    throw StructureError("tp3 result does not match the truncated connection lattice");
  return central_to_plane(cut);
}

Arrangement d3(const Arrangement& a1, const Arrangement& a2) {
  CentralArrangement c1 = plane_to_central(a1);
  CentralArrangement c2 = plane_to_central(a2);
  CentralArrangement sum = direct_sum(c1, c2);
  CentralArrangement cut = truncate_central_to_dim3(sum, 0);
  IntersectionLattice expected =
      truncate_to_rank3(direct_sum_lattice(lattice_of(c1), lattice_of(c2)));
  if (!(lattice_of(cut) == expected))
    throw StructureError("d3 result does not match the truncated sum lattice");
  return central_to_plane(cut);
}

bool is_lattice_isomorphism(const IntersectionLattice& l1, const IntersectionLattice& l2,
                            const std::vector<int>& atom_map) {
  if (l1.atom_count() != l2.atom_count()) return false;
  if (static_cast<int>(atom_map.size()) != l1.atom_count()) return false;
  std::vector<bool> hit(atom_map.size(), false);
  for (int x : atom_map) {
    if (x < 0 || x >= l2.atom_count() || hit[static_cast<size_t>(x)]) return false;
    hit[static_cast<size_t>(x)] = true;
  }
  return l1.relabel(atom_map) == l2;
}

std::optional<std::vector<int>> lattice_isomorphic(const IntersectionLattice& l1,
                                                   const IntersectionLattice& l2) {
  int n = l1.atom_count();
  if (n != l2.atom_count() || l1.rank() != l2.rank()) return std::nullopt;
  for (int r = 0; r <= l1.rank(); ++r)
    if (l1.flats_of_rank(r).size() != l2.flats_of_rank(r).size()) return std::nullopt;

  // backtracking seeded by the multiset of rank-2 flat sizes through each atom
  auto signature = [](const IntersectionLattice& l) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(l.atom_count()));
    for (const auto& f : l.flats_of_rank(2))
      for (int a : f.atoms) sig[static_cast<size_t>(a)].push_back(static_cast<int>(f.atoms.size()));
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  auto sig1 = signature(l1);
  auto sig2 = signature(l2);
  {
    auto m1 = sig1;
    auto m2 = sig2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
  }

  std::set<std::vector<int>> rank2_of_l2;
  for (const auto& f : l2.flats_of_rank(2)) rank2_of_l2.insert(f.atoms);

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = 0, cb = 0;
    for (const auto& s : sig1) {
      if (s == sig1[static_cast<size_t>(a)]) ca++;
      if (s == sig1[static_cast<size_t>(b)]) cb++;
    }
    if (ca != cb) return ca < cb;
    return a < b;
  });

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);

  auto consistent = [&](int pos) {
    // every rank-2 flat fully inside the mapped part must land on a flat
    for (const auto& f : l1.flats_of_rank(2)) {
      std::vector<int> image;
      bool full = true;
      for (int a : f.atoms) {
        if (map[static_cast<size_t>(a)] < 0) {
          full = false;
          break;
        }
        image.push_back(map[static_cast<size_t>(a)]);
      }
      (void)pos;
      if (!full) continue;
      std::sort(image.begin(), image.end());
      bool found = false;
      for (const auto& g : rank2_of_l2)
        if (std::includes(g.begin(), g.end(), image.begin(), image.end()) &&
            g.size() == image.size()) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };

  std::function<bool(int)> place = [&](int idx) -> bool {
    if (idx == n) return is_lattice_isomorphism(l1, l2, map);
    int a = order[static_cast<size_t>(idx)];
    for (int b = 0; b < n; ++b) {
      if (used[static_cast<size_t>(b)]) continue;
      if (sig1[static_cast<size_t>(a)] != sig2[static_cast<size_t>(b)]) continue;
      map[static_cast<size_t>(a)] = b;
      used[static_cast<size_t>(b)] = true;
      if (consistent(idx) && place(idx + 1)) return true;
      map[static_cast<size_t>(a)] = -1;
      used[static_cast<size_t>(b)] = false;
    }
    return false;
  };
  if (place(0)) return map;
  return std::nullopt;
}

}  // namespace arrlab
