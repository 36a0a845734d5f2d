#include "verlinde/unity.hpp"

#include <algorithm>
#include <cmath>

#include "eval_core.hpp"
#include "verlinde/weights.hpp"

namespace verlinde {

EvalPoint make_eval_point(std::vector<int> v, int order) {
  if (v.empty()) throw ValidationError("eval point needs at least one exponent");
  if (v.back() != 0) throw ValidationError("eval point must end in 0");
  if (v.front() >= order) throw ValidationError("eval point exponents must stay below the order");
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] <= v[i + 1]) throw ValidationError("eval point exponents must strictly decrease");
  return EvalPoint{std::move(v), order};
}

std::vector<EvalPoint> enumerate_eval_points(int rank, Entry level) {
  if (rank < 1 || level < 1) throw ValidationError("enumerate_eval_points: need rank, level >= 1");
  const int order = static_cast<int>(rank + level);
  std::vector<EvalPoint> out;
  // Choose the r-1 positive exponents in descending order; recursion from
  // small first coordinates upward yields ascending lexicographic output.
  std::vector<int> acc;
  auto rec = [&](auto&& self, int remaining, int lo) -> void {
    if (remaining == 0) {
      // acc holds ascending choices; the point wants them descending, then 0.
      std::vector<int> w(acc.rbegin(), acc.rend());
      w.push_back(0);
      out.push_back(EvalPoint{std::move(w), order});
      return;
    }
    for (int x = lo; x <= order - remaining; ++x) {
      acc.push_back(x);
      self(self, remaining - 1, x + 1);
      acc.pop_back();
    }
  };
  rec(rec, rank - 1, 1);
  std::sort(out.begin(), out.end(), [](const EvalPoint& a, const EvalPoint& b) { return a.v < b.v; });
  return out;
}

long long eval_sum(const EvalPoint& p) {
  long long s = 0;
  for (int x : p.v) s += x;
  return s;
}

Cplx root_power(long long order, long long e) {
  if (order <= 0) throw ValidationError("root_power: order must be positive");
  const double ang = 2.0 * 3.141592653589793238462643 * static_cast<double>(mod_floor(e, order)) /
                     static_cast<double>(order);
  return Cplx{std::cos(ang), std::sin(ang)};
}

Cplx schur_at(const Partition& lam, const EvalPoint& p) {
  if (lam.rank() != static_cast<int>(p.v.size()))
    throw ValidationError("schur_at: partition rank and eval point size differ");
  if (p.order <= lam.rank()) throw ValidationError("schur_at: order must exceed the rank");
  detail::EvalCore<double> core(lam.rank(), p.order - lam.rank());
  return core.schur(lam, p);
}

DeltaNorm delta_norm(const EvalPoint& p) {
  const int r = static_cast<int>(p.v.size());
  if (p.order <= r) throw ValidationError("delta_norm: order must exceed the rank");
  detail::EvalCore<double> core(r, p.order - r);
  return DeltaNorm{core.vandermonde(p), core.sine_sq(p)};
}

namespace {

template <class Real>
Real residual_impl(IdentityKind kind, int rank, Entry level, const EvalPoint& p,
                   const EvalPoint* p2) {
  detail::EvalCore<Real> core(rank, level);
  const long long N = core.N;
  std::complex<Real> lhs(0), rhs(0);
  switch (kind) {
    case IdentityKind::sumP:
    case IdentityKind::sumW: {
      const auto& mus = enumerate_weights(
          rank, level, kind == IdentityKind::sumP ? WeightSet::P : WeightSet::W);
      for (const Partition& mu : mus) lhs += core.schur(mu, p) * core.schur(dual(mu, level), p);
      Real front(kind == IdentityKind::sumP ? Real(level) : Real(rank));
      for (int i = 0; i < rank - 1; ++i) front *= Real(N);
      rhs = core.root_n(level * eval_sum(p)) * front / core.sine_sq(p);
      break;
    }
    case IdentityKind::orth: {
      const long long sv = eval_sum(p);
      const long long sw = eval_sum(*p2);
      for (const Partition& mu : enumerate_weights(rank, level, WeightSet::W)) {
        const Partition mus = dual(mu, level);
        // Fractional characters exp(-2*pi*i*|mu|*sum(v)/(r*N)) live at 2/M turns.
        std::complex<Real> term = core.power(-2 * mu.sum() * sv) * core.power(-2 * mus.sum() * sw);
        term *= core.schur(mu, p) * core.schur(mus, *p2);
        lhs += term;
      }
      rhs = std::complex<Real>(0);
      break;
    }
  }
  return std::abs(lhs - rhs);
}

// Smallest residual the working precision can certify: anything below this is
// indistinguishable from rounding noise, so demanding it is a precision error.
template <class Real>
double residual_floor(int rank, Entry level) {
  const double terms = static_cast<double>(
      enumerate_weights(rank, level, WeightSet::P).size());
  return 1024.0 * std::max(1.0, terms) *
         static_cast<double>(std::numeric_limits<Real>::epsilon());
}

}  // namespace

double identity_residual(IdentityKind kind, int rank, Entry level, const EvalPoint& p,
                         const EvalPoint* p2, const EvalConfig& cfg) {
  if (rank < 2) throw ValidationError("identity_residual: needs rank >= 2");
  if (kind == IdentityKind::orth) {
    if (p2 == nullptr) throw ValidationError("identity_residual: orth needs two eval points");
    if (p.v == p2->v)
      throw ValidationError("identity_residual: orth requires inequivalent eval points");
  }
  const bool double_ok = cfg.identity_tol >= residual_floor<double>(rank, level);
  if (double_ok) {
    const double res = residual_impl<double>(kind, rank, level, p, p2);
    if (res <= cfg.identity_tol || !cfg.escalate) return res;
  }
  if (!cfg.escalate && !double_ok)
    throw PrecisionError("identity tolerance below what double precision can certify");
  if (cfg.identity_tol < residual_floor<long double>(rank, level))
    throw PrecisionError("identity tolerance below what extended precision can certify");
  return static_cast<double>(residual_impl<long double>(kind, rank, level, p, p2));
}

}  // namespace verlinde
