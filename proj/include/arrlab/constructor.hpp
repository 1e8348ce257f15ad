#pragma once

#include <string>
#include <vector>

#include "arrlab/geometry.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/presentations.hpp"

namespace arrlab {

enum class StepKind { Pencil, TP3, D3, AddGenericLine, Nodal };

std::string step_kind_name(StepKind k);

struct BuildStep {
  StepKind kind = StepKind::Pencil;
  int mu = 0;              // Pencil
  int left = -1;           // TP3, D3, AddGenericLine
  int right = -1;          // TP3, D3
  int base_left = -1;      // TP3: base line index within the left step output
  int base_right = -1;     // TP3
  TypeVector type;         // Nodal
  // input line ids carried by this step's output, aligned with its lines;
  // -1 marks lines with no input counterpart
  std::vector<int> provenance;
};

// Steps form a DAG evaluated bottom-up; the last step is the root.
struct BuildPlan {
  std::vector<BuildStep> steps;
  Arrangement source; // input the plan was derived from, used for verification
};

// Real affine arrangement with r parallel families of slopes 1..r and only
// double points across families (verified, offsets found constructively).
Arrangement build_affine_nodal(const TypeVector& t);

// Theorem-3.8 plan: tree components peeled at single-edge vertices into
// pencil + TP3 chains, components joined by D3, double-point-only lines
// appended last.
BuildPlan plan_construction(const Arrangement& a);

struct ExecuteResult {
  Arrangement arrangement;
  // atom bijection: result line i plays the role of input line bijection[i]
  std::vector<int> bijection;
};

// Evaluates the plan; every TP3/D3 step re-verifies its lattice contract and
// the final lattice isomorphism with the plan source is a hard postcondition.
ExecuteResult execute_plan(const BuildPlan& p);

}  // namespace arrlab
