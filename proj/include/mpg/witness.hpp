#pragma once

// Constructive search for an M-copy of P10 through a prescribed matching
// edge e, for instances where e lies on every M-C4. The search follows the
// inductive argument step by step:
//
//   1. an M-C4 through e exists   -> delete its other matching edge, recurse;
//   2. H_e has an induced P4 xyzw -> {e, x, y, z, w} is an M-P10;
//   3. otherwise H_e has twins    -> keep only e and the twin block, recurse.
//
// Every step shrinks m, and the witness found in the reduced instance lifts
// unchanged (as a set of surviving matching edges) to the original one.

#include <variant>
#include <vector>

#include "mpg/cograph.hpp"
#include "mpg/graph.hpp"

namespace mpg {

/// Reduced instance together with its relabeling: origin[i] is the A-index in
/// the parent instance of new A-index i. The anchor's new index is `anchor`.
struct Reduction {
  Mpg graph;
  int anchor = 0;
  std::vector<int> origin;
};

/// Lemma: an induced P4 xyzw of H_a yields the M-P10 {a, x, y, z, w}.
/// Throws Error{NotAnInducedP4}.
PetersenWitness p10_from_p4(const Mpg& g, int a, const InducedPath4& p);

/// Deletes the matching edge z of the M-C4 a z z' a' and suppresses z, z'.
/// Throws Error{TooSmall} when m = 3, Error{NotAC4ThroughE} when a, z do not
/// span an M-C4.
Reduction c4_reduce(const Mpg& g, int a, int z);

/// Keeps a, a', the arc xCy and its matched arc Q' (x'C'y' for false twins,
/// y'C'x' for true twins), closing both cycles through a and a'. The pair is
/// re-oriented so that x precedes y going around from a.
/// Throws Error{NotTwins} or Error{DegenerateArc}.
Reduction twin_contract(const Mpg& g, int a, const TwinPair& twins);

/// Arc of A' matched to the arc xCy (x before y from a), per twin kind.
Arc matched_arc(const Mpg& g, int x, int y, TwinKind kind);

struct C4ReduceStep {
  int m = 0;  // size of the instance the step was applied to
  int a = 0;
  int z = 0;
  friend bool operator==(const C4ReduceStep&, const C4ReduceStep&) = default;
};

struct TwinContractStep {
  int m = 0;
  int a = 0;
  int x = 0;
  int y = 0;
  TwinKind kind = TwinKind::False;
  Arc q;
  friend bool operator==(const TwinContractStep&, const TwinContractStep&) = default;
};

struct P4FoundStep {
  int m = 0;
  int a = 0;
  InducedPath4 path;
  friend bool operator==(const P4FoundStep&, const P4FoundStep&) = default;
};

using TraceStep = std::variant<C4ReduceStep, TwinContractStep, P4FoundStep>;

/// Labels inside each step refer to the instance that step acted on.
struct ReductionTrace {
  std::vector<TraceStep> steps;
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct WitnessResult {
  PetersenWitness witness;
  ReductionTrace trace;
};

/// Throws Error{PreconditionViolated} (certificate: an M-C4 avoiding e) or
/// Error{InternalInvariantViolated} (certificate: failing step). The
/// returned witness is re-verified against g before returning.
WitnessResult find_p10_through(const Mpg& g, int e);

/// Re-applies a trace to (g, e) and returns the lifted witness.
PetersenWitness replay(const Mpg& g, int e, const ReductionTrace& trace);

}  // namespace mpg
