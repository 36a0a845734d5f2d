#pragma once

// Independent reference implementations used only by tests. They deliberately
// take different algorithmic routes from the library so agreement is evidence,
// not tautology.

#include <complex>
#include <initializer_list>
#include <vector>

#include "verlinde/bigint.hpp"
#include "verlinde/partition.hpp"

namespace oracle {

using verlinde::BigInt;
using verlinde::Entry;
using verlinde::Partition;

inline Partition P(std::initializer_list<Entry> entries) {
  return Partition(std::vector<Entry>(entries));
}

inline verlinde::ProblemInstance inst(int genus, int rank, long long degree, Entry level,
                                      std::initializer_list<Partition> points) {
  return verlinde::make_instance(genus, rank, degree, level,
                                 std::vector<Partition>(points));
}

inline std::complex<double> cpow(std::complex<double> z, long long e) {
  std::complex<double> out = 1.0;
  for (long long i = 0; i < e; ++i) out *= z;
  return out;
}

// Schur polynomial by the branching rule: peel the last variable, summing over
// interlacing subdiagrams. Equivalent to the tableau monomial sum, and a
// different algorithm from the library's determinant quotient.
inline std::complex<double> schur_branching(const std::vector<Entry>& lam,
                                            const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  if (n == 0) return 1.0;
  if (n == 1) return cpow(x[0], lam[0]);
  long long lam_total = 0;
  for (Entry e : lam) lam_total += e;
  std::complex<double> total = 0.0;
  std::vector<Entry> mu(n - 1);
  const std::vector<std::complex<double>> head(x.begin(), x.end() - 1);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n - 1) {
      long long mu_total = 0;
      for (Entry e : mu) mu_total += e;
      total += cpow(x[n - 1], lam_total - mu_total) * schur_branching(mu, head);
      return;
    }
    for (Entry v = lam[i + 1]; v <= lam[i]; ++v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return total;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace oracle
