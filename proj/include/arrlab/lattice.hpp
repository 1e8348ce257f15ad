#pragma once

#include <optional>
#include <vector>

#include "arrlab/geometry.hpp"
#include "arrlab/numbers.hpp"

namespace arrlab {

struct Flat {
  std::vector<int> atoms; // sorted
  int rank = 0;
  bool operator==(const Flat& o) const { return atoms == o.atoms && rank == o.rank; }
  bool operator<(const Flat& o) const {
    if (rank != o.rank) return rank < o.rank;
    return atoms < o.atoms;
  }
};

// Geometric lattice of a central arrangement, flats grouped by rank and kept
// sorted so equal lattices compare equal.
class IntersectionLattice {
 public:
  IntersectionLattice() = default;
  IntersectionLattice(int atom_count, std::vector<Flat> flats);

  int atom_count() const { return atom_count_; }
  int rank() const { return static_cast<int>(by_rank_.size()) - 1; }
  const std::vector<Flat>& flats_of_rank(int r) const;
  std::vector<Flat> all_flats() const;

  bool has_flat(const std::vector<int>& atoms) const;
  // Smallest flat containing the given atoms.
  const Flat& closure(const std::vector<int>& atoms) const;
  int rank_of(const std::vector<int>& atoms) const { return closure(atoms).rank; }

  // Checks the geometric-lattice axioms used by this artifact: rank-1 flats
  // are the singletons, every atom pair lies in exactly one rank-2 flat when
  // rank >= 2, ranks are consistent with closures.
  void validate() const;

  bool operator==(const IntersectionLattice& o) const {
    return atom_count_ == o.atom_count_ && by_rank_ == o.by_rank_;
  }

  IntersectionLattice relabel(const std::vector<int>& atom_map) const;

 private:
  int atom_count_ = 0;
  std::vector<std::vector<Flat>> by_rank_;
};

struct BasePointedLattice {
  IntersectionLattice lattice;
  int base = 0;
};

// Central arrangement in C^dim given by integer normal vectors.
struct CentralArrangement {
  int dim = 0;
  std::vector<std::vector<Int>> normals;
  int size() const { return static_cast<int>(normals.size()); }
};

CentralArrangement make_central(int dim, std::vector<std::vector<Int>> normals);
CentralArrangement plane_to_central(const Arrangement& a); // cones affine input
Arrangement central_to_plane(const CentralArrangement& a);

int matrix_rank(std::vector<std::vector<Rat>> m);

IntersectionLattice lattice_of(const CentralArrangement& a);
IntersectionLattice lattice_of(const Arrangement& a);

// Drops the corank-1 flats and lowers the top rank by one.
IntersectionLattice truncate(const IntersectionLattice& l);

// Generic hyperplane section through the origin; the lattice contract is
// verified, not assumed. Deterministic candidate sequence, budget 1000.
CentralArrangement truncate_arrangement(const CentralArrangement& a, long seed = 0);

BasePointedLattice parallel_connection(const BasePointedLattice& l1,
                                       const BasePointedLattice& l2);

// Realization glueing the base hyperplanes along a shared coordinate; the
// resulting lattice is verified against parallel_connection.
CentralArrangement parallel_connection_realization(const CentralArrangement& a1, int h1,
                                                   const CentralArrangement& a2, int h2);

CentralArrangement direct_sum(const CentralArrangement& a1, const CentralArrangement& a2);
IntersectionLattice direct_sum_lattice(const IntersectionLattice& l1,
                                       const IntersectionLattice& l2);

IntersectionLattice truncate_to_rank3(const IntersectionLattice& l);

// 3-truncated parallel connection and 3-generic direct sum of plane
// arrangements, verified against the lattice-level composites.
Arrangement tp3(const Arrangement& a1, int h1, const Arrangement& a2, int h2);
Arrangement d3(const Arrangement& a1, const Arrangement& a2);

// Atom bijection carrying flats to flats bijectively, if one exists.
std::optional<std::vector<int>> lattice_isomorphic(const IntersectionLattice& l1,
                                                   const IntersectionLattice& l2);

bool is_lattice_isomorphism(const IntersectionLattice& l1, const IntersectionLattice& l2,
                            const std::vector<int>& atom_map);

}  // namespace arrlab
