#include "verlinde/evaluator.hpp"

#include <algorithm>

#include "verlinde/weights.hpp"

namespace verlinde {

namespace {

void validate_instance(const ProblemInstance& inst, const char* who) {
  if (inst.rank < 1 || inst.level < 1 || inst.genus < 0)
    throw ValidationError(std::string(who) + ": invalid instance " + format_instance(inst));
  for (const Partition& p : inst.points)
    if (p.rank() != inst.rank || !p.is_normalized() || p.first() > inst.level)
      throw ValidationError(std::string(who) + ": point " + format_partition(p) +
                            " not normalized against the instance");
}

void trace_step(ReductionTrace* trace, ReductionRule rule, std::string parameters,
                std::size_t subproblems) {
  if (trace) trace->steps.push_back(ReductionStep{rule, std::move(parameters), subproblems});
}

BigInt base_value(const ProblemInstance& inst, FusionCache& cache, ReductionTrace* trace) {
  const auto& pts = inst.points;
  switch (pts.size()) {
    case 0:
      trace_step(trace, ReductionRule::base, "no points", 1);
      return 1;
    case 1:
      trace_step(trace, ReductionRule::base, "single point", 1);
      return pts[0].is_zero() ? 1 : 0;
    case 2:
      trace_step(trace, ReductionRule::base, "dual pairing", 1);
      return normalize(dual(pts[1], inst.level)) == pts[0] ? 1 : 0;
    default:
      trace_step(trace, ReductionRule::base, "three-point coefficient", 1);
      return fusion_coeff(pts[0], pts[1], pts[2], inst.rank, inst.level, &cache);
  }
}

BigInt recursive_value(const ProblemInstance& inst, FusionCache& cache, ReductionTrace* trace) {
  if (inst.genus > 0) {
    std::vector<ProblemInstance> children = reduce_genus_once(inst);
    trace_step(trace, ReductionRule::genus,
               "g=" + std::to_string(inst.genus) + " -> " + std::to_string(inst.genus - 1),
               children.size());
    BigInt total = 0;
    for (const ProblemInstance& child : children) total += recursive_value(child, cache, trace);
    return total;
  }
  if (inst.points.size() > 3) {
    std::vector<SplitTerm> terms = split_points_once(inst, 0, 1);
    trace_step(trace, ReductionRule::split,
               "points 0,1 of " + std::to_string(inst.points.size()), terms.size());
    BigInt total = 0;
    for (const SplitTerm& term : terms) {
      const BigInt left = recursive_value(term.left, cache, trace);
      if (left == 0) continue;  // the right factor cannot contribute
      total += left * recursive_value(term.right, cache, trace);
    }
    return total;
  }
  return base_value(inst, cache, trace);
}

}  // namespace

std::string format_trace(const ReductionTrace& trace) {
  std::string out;
  for (const ReductionStep& step : trace.steps) {
    switch (step.rule) {
      case ReductionRule::degree: out += "degree "; break;
      case ReductionRule::genus: out += "genus  "; break;
      case ReductionRule::split: out += "split  "; break;
      case ReductionRule::base: out += "base   "; break;
    }
    out += step.parameters + "  [" + std::to_string(step.subproblems) + "]\n";
  }
  return out;
}

ProblemInstance reduce_degree(const ProblemInstance& inst) {
  validate_instance(inst, "reduce_degree");
  ProblemInstance out = inst;
  out.degree = 0;
  const long long dm = mod_floor(inst.degree, inst.rank);
  if (dm == 0) return out;
  if (out.points.empty()) out.points.push_back(Partition::zero(inst.rank));
  std::size_t target = 0;
  for (std::size_t i = 1; i < out.points.size(); ++i)
    if (out.points[target] < out.points[i]) target = i;
  out.points[target] = hecke(out.points[target], inst.rank - static_cast<int>(dm), inst.level);
  return out;
}

std::vector<ProblemInstance> reduce_genus_once(const ProblemInstance& inst) {
  validate_instance(inst, "reduce_genus_once");
  if (inst.genus < 1) throw ValidationError("reduce_genus_once: genus must be positive");
  std::vector<ProblemInstance> out;
  for (const Partition& mu : enumerate_weights(inst.rank, inst.level, WeightSet::P)) {
    ProblemInstance child = inst;
    child.genus -= 1;
    child.points.push_back(normalize(mu));
    child.points.push_back(normalize(dual(mu, inst.level)));
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<SplitTerm> split_points_once(const ProblemInstance& inst, int i, int j) {
  validate_instance(inst, "split_points_once");
  if (inst.genus != 0) throw ValidationError("split_points_once: genus must be zero");
  const int n = static_cast<int>(inst.points.size());
  if (n < 4) throw ValidationError("split_points_once: needs at least four points");
  if (i < 0 || j <= i || j >= n) throw ValidationError("split_points_once: bad point indices");
  const int rho = static_cast<int>(
      mod_floor(-(inst.points[static_cast<std::size_t>(i)].sum() +
                  inst.points[static_cast<std::size_t>(j)].sum()),
                inst.rank));
  std::vector<SplitTerm> out;
  for (const Partition& nu : enumerate_weights_res(inst.rank, inst.level, rho)) {
    SplitTerm term;
    term.left.genus = 0;
    term.left.rank = inst.rank;
    term.left.degree = 0;
    term.left.level = inst.level;
    term.left.points = {inst.points[static_cast<std::size_t>(i)],
                        inst.points[static_cast<std::size_t>(j)], nu};
    term.right.genus = 0;
    term.right.rank = inst.rank;
    term.right.degree = inst.degree;
    term.right.level = inst.level;
    for (int t = 0; t < n; ++t)
      if (t != i && t != j) term.right.points.push_back(inst.points[static_cast<std::size_t>(t)]);
    term.right.points.push_back(normalize(dual(nu, inst.level)));
    out.push_back(std::move(term));
  }
  return out;
}

BigInt verlinde_recursive(const ProblemInstance& inst, FusionCache* cache,
                          ReductionTrace* trace) {
  validate_instance(inst, "verlinde_recursive");
  if (!divisible(inst)) {
    trace_step(trace, ReductionRule::base, "weight-sum obstruction", 1);
    return 0;
  }
  FusionCache local;
  FusionCache& shared = cache ? *cache : local;
  const long long dm = mod_floor(inst.degree, inst.rank);
  std::string note = "d=" + std::to_string(inst.degree) + " -> 0";
  if (dm != 0) note += " via block " + std::to_string(inst.rank - dm);
  trace_step(trace, ReductionRule::degree, note, 1);
  return recursive_value(reduce_degree(inst), shared, trace);
}

CheckedResult verlinde_checked(const ProblemInstance& inst, Engine engine, FusionCache* cache,
                               const EvalConfig& cfg, ReductionTrace* trace) {
  switch (engine) {
    case Engine::analytic: {
      const AnalyticResult got = verlinde_analytic(inst, cfg);
      return CheckedResult{got.value, got.residual};
    }
    case Engine::recursive:
      return CheckedResult{verlinde_recursive(inst, cache, trace), 0.0};
    case Engine::both: {
      const AnalyticResult got = verlinde_analytic(inst, cfg);
      const BigInt rec = verlinde_recursive(inst, cache, trace);
      if (got.value != rec)
        throw EngineMismatchError(got.value.str(), rec.str(), format_instance(inst));
      return CheckedResult{got.value, got.residual};
    }
  }
  throw std::logic_error("verlinde_checked: unreachable engine selector");
}

bool check_degree_varying_split(const ProblemInstance& inst, int g1, int g2,
                                const std::vector<int>& part1, const std::vector<int>& part2,
                                long long c1, long long c2, const EvalConfig& cfg) {
  validate_instance(inst, "check_degree_varying_split");
  if (g1 < 0 || g2 < 0 || g1 + g2 != inst.genus)
    throw ValidationError("check_degree_varying_split: genera must add up to the instance genus");
  if (c1 < 1 || c2 < 1)
    throw ValidationError("check_degree_varying_split: weights c1, c2 must be positive");
  const int n = static_cast<int>(inst.points.size());
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const std::vector<int>* part : {&part1, &part2})
    for (int idx : *part) {
      if (idx < 0 || idx >= n)
        throw ValidationError("check_degree_varying_split: point index out of range");
      seen[static_cast<std::size_t>(idx)] += 1;
    }
  for (int count : seen)
    if (count != 1)
      throw ValidationError("check_degree_varying_split: parts must partition the points");

  const Rational ell = level_ell(inst);
  const Rational ell1 = ell * c1 / (c1 + c2);
  const Rational ell2 = ell * c2 / (c1 + c2);
  if (ell1.denominator() != 1 || ell2.denominator() != 1)
    throw ValidationError("check_degree_varying_split: c-weighted slope parts are not integers");

  long long branch_sum = inst.rank * ell1.numerator();
  for (int idx : part1) branch_sum += inst.points[static_cast<std::size_t>(idx)].sum();

  BigInt right = 0;
  for (const Partition& mu : enumerate_weights(inst.rank, inst.level, WeightSet::P)) {
    if (mod_floor(branch_sum + mu.sum(), inst.level) != 0) continue;
    const long long d1 =
        (branch_sum + mu.sum()) / inst.level + static_cast<long long>(inst.rank) * (g1 - 1);
    const long long d2 = inst.degree - d1;
    const NodalData nodes = nodal_point_data(mu, inst.level);

    std::vector<Partition> pts1;
    for (int idx : part1) pts1.push_back(inst.points[static_cast<std::size_t>(idx)]);
    pts1.push_back(omega_to_partition(nodes.x1, inst.level));
    std::vector<Partition> pts2;
    for (int idx : part2) pts2.push_back(inst.points[static_cast<std::size_t>(idx)]);
    pts2.push_back(omega_to_partition(nodes.x2, inst.level));

    const BigInt left_factor =
        verlinde_analytic(make_instance(g1, inst.rank, d1, inst.level, std::move(pts1)), cfg)
            .value;
    if (left_factor == 0) continue;
    right += left_factor *
             verlinde_analytic(make_instance(g2, inst.rank, d2, inst.level, std::move(pts2)), cfg)
                 .value;
  }
  return verlinde_analytic(inst, cfg).value == right;
}

}  // namespace verlinde
