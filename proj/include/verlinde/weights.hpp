#pragma once

#include <boost/rational.hpp>

#include "verlinde/partition.hpp"

namespace verlinde {

using Rational = boost::rational<long long>;

// Nonnegative residue of a mod m, for any sign of a.
long long mod_floor(long long a, long long m);

// P: all mu with 0 <= mu_r <= ... <= mu_1 <= k-1.
// W: all lambda with lambda_r = 0, lambda_1 <= k.
enum class WeightSet { P, W };

std::vector<Partition> enumerate_weights(int rank, Entry level, WeightSet kind);
// Subset of W with |lambda| = residue (mod rank).
std::vector<Partition> enumerate_weights_res(int rank, Entry level, int residue);

// Flag data of the two branches of a one-node degeneration attached to mu:
// the first carries mu, the second its dual, both up to shift.
struct NodalData {
  ParabolicPoint x1;
  ParabolicPoint x2;
};
NodalData nodal_point_data(const Partition& mu, Entry level);

// Elementary wall-crossing transform on weights. For m < r the image is
//   (k - mu_{r-m} + mu_{r-m+j})_{j<=m}  followed by  (mu_{j-m} - mu_{r-m})_{j>m},
// and m = r normalizes. Applying it shifts the instance degree by +m.
Partition hecke(const Partition& mu, int m, Entry level);

// Degree-residue-steered transform: requires k | (A + |mu|); with
// d1 = (A + |mu|)/k - r and i = d1 mod r, returns hecke(mu, r - i) (r when
// i = 0). Bijects {mu in P : k | A+|mu|} onto {lambda in W : r | A+|lambda|}.
Partition phi(const Partition& mu, long long A, Entry level);

// s = index of the last positive gap (0 for constant), m = sum of the first
// s entries. m - s = 0 exactly on the fundamental weights.
struct GapStats {
  int s = 0;
  Entry m = 0;
};
GapStats stats(const Partition& lam);

// The exact slope parameter (k*chi - sum_x sum_i d_i(x) r_i(x)) / r with
// chi = d + r(1-g); integral iff divisible() holds (points normalized).
Rational level_ell(const ProblemInstance& inst);
bool divisible(const ProblemInstance& inst);

}  // namespace verlinde
