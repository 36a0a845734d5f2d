#pragma once

// Shared floating-point core for the torus-node evaluations, templated on the
// working precision. Source-local: the public headers expose only the double
// entry points plus the escalation behavior.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "verlinde/error.hpp"
#include "verlinde/partition.hpp"
#include "verlinde/unity.hpp"
#include "verlinde/weights.hpp"

namespace verlinde::detail {

template <class Real>
struct EvalCore {
  int r;
  long long k;
  long long N;  // r + k
  long long M;  // 2*r*N: one root order covering every exponent that occurs
  std::vector<std::complex<Real>> root;

  EvalCore(int rank, Entry level)
      : r(rank),
        k(level),
        N(rank + level),
        M(2LL * rank * (rank + level)),
        root(static_cast<std::size_t>(M)) {
    const Real two_pi = Real(2) * Real(3.141592653589793238462643383279502884L);
    for (long long e = 0; e < M; ++e) {
      const Real ang = two_pi * Real(e) / Real(M);
      root[static_cast<std::size_t>(e)] = {std::cos(ang), std::sin(ang)};
    }
  }

  // e counts 1/M turns.
  std::complex<Real> power(long long e) const {
    return root[static_cast<std::size_t>(mod_floor(e, M))];
  }
  // e counts 1/N turns.
  std::complex<Real> root_n(long long e) const { return power(2LL * r * e); }

  // Determinant by row reduction with partial pivoting. guard_singular is set
  // for matrices that are nonsingular by construction (the denominator
  // alternant); a vanishing pivot there means the precision budget is gone.
  std::complex<Real> det(std::vector<std::complex<Real>>& a, bool guard_singular) const {
    const int n = r;
    std::complex<Real> result(1);
    for (int col = 0; col < n; ++col) {
      int pivot = col;
      Real best = std::abs(a[static_cast<std::size_t>(col * n + col)]);
      for (int row = col + 1; row < n; ++row) {
        const Real mag = std::abs(a[static_cast<std::size_t>(row * n + col)]);
        if (mag > best) {
          best = mag;
          pivot = row;
        }
      }
      if (best < std::numeric_limits<Real>::epsilon() * Real(1024)) {
        if (guard_singular)
          throw PrecisionError("alternant pivot collapsed; precision exhausted");
        // Numerator alternants may vanish legitimately.
        return std::complex<Real>(0);
      }
      if (pivot != col) {
        for (int j = col; j < n; ++j)
          std::swap(a[static_cast<std::size_t>(col * n + j)],
                    a[static_cast<std::size_t>(pivot * n + j)]);
        result = -result;
      }
      const std::complex<Real> lead = a[static_cast<std::size_t>(col * n + col)];
      result *= lead;
      for (int row = col + 1; row < n; ++row) {
        const std::complex<Real> f = a[static_cast<std::size_t>(row * n + col)] / lead;
        if (f == std::complex<Real>(0)) continue;
        for (int j = col; j < n; ++j)
          a[static_cast<std::size_t>(row * n + j)] -= f * a[static_cast<std::size_t>(col * n + j)];
      }
    }
    return result;
  }

  std::complex<Real> schur(const Partition& lam, const EvalPoint& p) const {
    const int n = r;
    std::vector<std::complex<Real>> num(static_cast<std::size_t>(n) * n);
    std::vector<std::complex<Real>> den(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      const long long shifted = lam[i] + (n - 1 - i);
      for (int j = 0; j < n; ++j) {
        num[static_cast<std::size_t>(i * n + j)] = root_n(p.v[static_cast<std::size_t>(j)] * shifted);
        den[static_cast<std::size_t>(i * n + j)] =
            root_n(static_cast<long long>(p.v[static_cast<std::size_t>(j)]) * (n - 1 - i));
      }
    }
    const std::complex<Real> bottom = det(den, true);
    const std::complex<Real> top = det(num, false);
    const std::complex<Real> out = top / bottom;
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
      throw PrecisionError("schur evaluation overflowed");
    return out;
  }

  Real sine_sq(const EvalPoint& p) const {
    const Real pi = Real(3.141592653589793238462643383279502884L);
    Real prod(1);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        const Real s = Real(2) * std::sin(pi * Real(p.v[static_cast<std::size_t>(i)] -
                                                    p.v[static_cast<std::size_t>(j)]) /
                                          Real(N));
        prod *= s * s;
      }
    return prod;
  }

  std::complex<Real> vandermonde(const EvalPoint& p) const {
    std::complex<Real> prod(1);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        prod *= root_n(p.v[static_cast<std::size_t>(i)]) - root_n(p.v[static_cast<std::size_t>(j)]);
    return prod;
  }
};

}  // namespace verlinde::detail
