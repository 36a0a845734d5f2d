#pragma once

#include <complex>
#include <vector>

#include "verlinde/partition.hpp"

namespace verlinde {

using Cplx = std::complex<double>;

// Evaluation node on the torus: strictly decreasing integer exponents with
// v_r = 0 and v_1 < order, where order = r + k.
struct EvalPoint {
  std::vector<int> v;
  int order = 0;
};

EvalPoint make_eval_point(std::vector<int> v, int order);
std::vector<EvalPoint> enumerate_eval_points(int rank, Entry level);
long long eval_sum(const EvalPoint& p);

// exp(2*pi*i * e / order).
Cplx root_power(long long order, long long e);

struct EvalConfig {
  double identity_tol = 1e-9;      // identity-residual budget
  double round_tol = 1e-6;         // integer-rounding budget
  bool escalate = true;            // retry in extended precision before failing
  bool gate_non_divisible = true;  // short-circuit instances failing the degree test
};

// Ratio of alternants det(z_j^(lam_i + r - i)) / det(z_j^(r - i)) at
// z_j = exp(2*pi*i*v_j/order).
Cplx schur_at(const Partition& lam, const EvalPoint& p);

// Vandermonde product over i<j of (z_i - z_j), and its squared modulus,
// which equals prod over i<j of (2 sin pi(v_i - v_j)/order)^2.
struct DeltaNorm {
  Cplx delta;
  double norm_sq = 0.0;
};
DeltaNorm delta_norm(const EvalPoint& p);

// sumP: sum over P of S_mu * S_mu-dual at one node against its closed form;
// sumW: the same over W; orth: the two-node cross sum against zero.
enum class IdentityKind { sumP, sumW, orth };

double identity_residual(IdentityKind kind, int rank, Entry level, const EvalPoint& p,
                         const EvalPoint* p2 = nullptr, const EvalConfig& cfg = {});

}  // namespace verlinde
