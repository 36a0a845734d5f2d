#include "verlinde/analytic.hpp"

#include <cmath>

#include "eval_core.hpp"
#include "verlinde/weights.hpp"

namespace verlinde {

namespace {

struct RawValue {
  long double re = 0;
  long double im = 0;
  std::size_t terms = 0;
};

template <class Real>
RawValue evaluate(const ProblemInstance& inst) {
  const int r = inst.rank;
  const int g = inst.genus;
  detail::EvalCore<Real> core(r, inst.level);
  const long long N = core.N;

  long long omega_total = 0;
  for (const Partition& p : inst.points) omega_total += p.sum();
  // Degree enters the character and the sign only through residues that are
  // invariant under d -> d + r, so reduce first to keep exponents small.
  const long long dm = mod_floor(inst.degree, r);

  std::complex<Real> sum(0);
  std::size_t terms = 0;
  for (const EvalPoint& p : enumerate_eval_points(r, inst.level)) {
    const long long sv = eval_sum(p);
    // exp(2*pi*i (d/r - |omega|/(rN)) sum(v)) in 1/(2rN)-turn units.
    std::complex<Real> term = core.power(2 * (dm * N - omega_total) * sv);
    for (const Partition& lam : inst.points) term *= core.schur(lam, p);
    const Real s2 = core.sine_sq(p);
    term *= std::pow(s2, Real(1 - g));
    sum += term;
    ++terms;
  }

  Real pref = std::pow(Real(inst.level), Real(g)) / Real(r);
  pref *= std::pow(Real(N), Real((r - 1) * (g - 1)));
  if (dm % 2 == 1 && (r - 1) % 2 == 1) pref = -pref;
  sum *= pref;
  return RawValue{static_cast<long double>(sum.real()), static_cast<long double>(sum.imag()),
                  terms};
}

struct Rounded {
  BigInt value;
  double residual;
};

Rounded round_to_integer(const RawValue& raw) {
  const long double nearest = std::round(raw.re);
  if (std::abs(nearest) >= 9.0e18L)
    throw PrecisionError("value exceeds the integer resolution of the float evaluation");
  const double residual =
      static_cast<double>(std::max(std::abs(raw.im), std::abs(raw.re - nearest)));
  return Rounded{BigInt(static_cast<long long>(nearest)), residual};
}

}  // namespace

AnalyticResult verlinde_analytic(const ProblemInstance& inst, const EvalConfig& cfg) {
  if (inst.rank < 1 || inst.level < 1 || inst.genus < 0)
    throw ValidationError("verlinde_analytic: invalid instance " + format_instance(inst));
  for (const Partition& p : inst.points)
    if (p.rank() != inst.rank || !p.is_normalized() || p.first() > inst.level)
      throw ValidationError("verlinde_analytic: point " + format_partition(p) +
                            " not normalized against the instance");
  if (cfg.gate_non_divisible && !divisible(inst)) return AnalyticResult{BigInt(0), 0.0, 0};

  const RawValue first = evaluate<double>(inst);
  Rounded rounded = round_to_integer(first);
  if (rounded.residual <= cfg.round_tol)
    return AnalyticResult{rounded.value, rounded.residual, first.terms};
  if (!cfg.escalate)
    throw PrecisionError("rounding residual " + std::to_string(rounded.residual) +
                         " over budget on " + format_instance(inst));
  const RawValue second = evaluate<long double>(inst);
  rounded = round_to_integer(second);
  if (rounded.residual <= cfg.round_tol)
    return AnalyticResult{rounded.value, rounded.residual, second.terms};
  throw PrecisionError("rounding residual " + std::to_string(rounded.residual) +
                       " over budget after escalation on " + format_instance(inst));
}

}  // namespace verlinde
