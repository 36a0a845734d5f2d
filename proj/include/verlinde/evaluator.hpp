#pragma once

#include <string>
#include <vector>

#include "verlinde/analytic.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/partition.hpp"

namespace verlinde {

enum class Engine { analytic, recursive, both };

enum class ReductionRule { degree, genus, split, base };

struct ReductionStep {
  ReductionRule rule;
  std::string parameters;
  std::size_t subproblems = 0;
};

// Ordered log of the reduction rules applied by verlinde_recursive; replaying
// the same instance yields the same steps and value.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

std::string format_trace(const ReductionTrace& trace);

// Value-preserving degree normalization: the degree becomes 0. When the
// degree residue is nonzero the lexicographically largest point (a trivial
// point is appended first if there are none) absorbs it through the
// elementary transform with block rank - residue.
ProblemInstance reduce_degree(const ProblemInstance& inst);

// One handle removed: children run over all mu with entries below the level,
// each appending mu and its dual. The child values sum to the input's value.
std::vector<ProblemInstance> reduce_genus_once(const ProblemInstance& inst);

// One genus-zero node split separating points i and j from the rest. Summing
// left*right values over the terms reproduces the input's value.
struct SplitTerm {
  ProblemInstance left;   // degree 0: points i, j and the channel weight
  ProblemInstance right;  // original degree: the rest and the dual weight
};
std::vector<SplitTerm> split_points_once(const ProblemInstance& inst, int i, int j);

// Exact integer value via degree normalization, genus reduction, point
// splitting, and the three-point coefficients.
BigInt verlinde_recursive(const ProblemInstance& inst, FusionCache* cache = nullptr,
                          ReductionTrace* trace = nullptr);

struct CheckedResult {
  BigInt value;
  double residual = 0.0;  // rounding residual when the analytic engine ran
};

// Runs the selected engine; "both" insists on exact agreement and reports a
// disagreement as EngineMismatchError carrying the two values. The trace, if
// requested, records the recursive engine's reduction steps.
CheckedResult verlinde_checked(const ProblemInstance& inst, Engine engine,
                               FusionCache* cache = nullptr, const EvalConfig& cfg = {},
                               ReductionTrace* trace = nullptr);

// Verifies the two-branch degeneration identity with degree spread over the
// branches: part1/part2 must partition the point indices, g1 + g2 the genus,
// and the c-weighted slope parts must be integers (error otherwise). Both
// sides are evaluated analytically; returns whether they agree exactly.
bool check_degree_varying_split(const ProblemInstance& inst, int g1, int g2,
                                const std::vector<int>& part1, const std::vector<int>& part2,
                                long long c1, long long c2, const EvalConfig& cfg = {});

}  // namespace verlinde
