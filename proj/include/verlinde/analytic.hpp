#pragma once

#include "verlinde/bigint.hpp"
#include "verlinde/unity.hpp"

namespace verlinde {

struct AnalyticResult {
  BigInt value;
  double residual = 0.0;   // distance of the raw complex sum from the integer
  std::size_t terms = 0;   // eval points summed (0 when gated out)
};

// Closed-formula evaluation: sums over all eval points the product of the
// degree/weight character, the per-point alternant ratios, and the sine
// factor to the power 2(1-g), then applies the prefactor
// (-1)^(d(r-1)) (k/r)^g (r(r+k)^(r-1))^(g-1) and rounds to an integer.
// Escalates precision once before failing with PrecisionError.
AnalyticResult verlinde_analytic(const ProblemInstance& inst, const EvalConfig& cfg = {});

}  // namespace verlinde
