// Acceptance gate: one line per criterion, exit 0 only when every criterion
// passes. Grids, seeds, and runtime budgets are pinned here on purpose so a
// regression cannot hide behind a smaller sweep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "verlinde/evaluator.hpp"
#include "verlinde/unity.hpp"
#include "verlinde/weights.hpp"

using namespace verlinde;

namespace {

struct Gate {
  bool ok = true;
  long long checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (ok) first_failure = what;
    ok = false;
  }
};

struct Criterion {
  int number;
  std::string name;
  long long budget_ms;
  std::function<void(Gate&)> run;
};

ProblemInstance sample_instance(std::mt19937_64& rng, int max_points) {
  const int r = 2 + static_cast<int>(rng() % 2);
  const Entry k = 1 + static_cast<Entry>(rng() % 3);
  const int g = static_cast<int>(rng() % 3);
  const long long d = static_cast<long long>(rng() % static_cast<unsigned>(r));
  const auto weights = enumerate_weights(r, k, WeightSet::W);
  std::vector<Partition> points;
  const std::size_t count = rng() % static_cast<unsigned>(max_points + 1);
  for (std::size_t i = 0; i < count; ++i)
    points.push_back(weights[rng() % weights.size()]);
  return make_instance(g, r, d, k, std::move(points));
}

void rank_one_closed_form(Gate& gate) {
  for (int g = 0; g <= 5; ++g)
    for (Entry k = 1; k <= 8; ++k)
      for (long long d = 0; d <= 3; ++d) {
        BigInt expect = 1;
        for (int i = 0; i < g; ++i) expect *= k;
        const BigInt got = verlinde_analytic(oracle::inst(g, 1, d, k, {})).value;
        gate.expect(got == expect, "rank 1 g=" + std::to_string(g) + " k=" + std::to_string(k) +
                                       " d=" + std::to_string(d) + ": " + got.str());
      }
}

void base_case_tables(Gate& gate) {
  for (int r = 2; r <= 3; ++r)
    for (Entry k = 1; k <= 3; ++k) {
      const auto weights = enumerate_weights(r, k, WeightSet::W);
      for (const Partition& lam : weights) {
        const BigInt got = verlinde_analytic(oracle::inst(0, r, 0, k, {lam})).value;
        gate.expect(got == (lam.is_zero() ? 1 : 0),
                    "one point " + format_partition(lam) + ": " + got.str());
      }
      for (const Partition& lam : weights)
        for (const Partition& mu : weights) {
          const BigInt got = verlinde_analytic(oracle::inst(0, r, 0, k, {lam, mu})).value;
          const BigInt expect = normalize(dual(mu, k)) == lam ? 1 : 0;
          gate.expect(got == expect, "two points " + format_partition(lam) + " / " +
                                         format_partition(mu) + ": " + got.str());
        }
    }
}

void fundamental_three_point_rule(Gate& gate) {
  for (int r = 2; r <= 3; ++r)
    for (Entry k = 1; k <= 2; ++k)
      for (int s = 1; s < r; ++s)
        for (const Partition& y : enumerate_weights(r, k, WeightSet::W))
          for (const Partition& z : enumerate_weights(r, k, WeightSet::W)) {
            const BigInt got =
                verlinde_analytic(oracle::inst(0, r, 0, k, {omega(r, s), y, z})).value;
            const int rule = fusion_base3(s, y, z, r, k);
            gate.expect(got == rule, "s=" + std::to_string(s) + " y=" + format_partition(y) +
                                         " z=" + format_partition(z) + ": " + got.str() +
                                         " vs " + std::to_string(rule));
          }
}

void cross_engine_agreement(Gate& gate) {
  std::mt19937_64 rng(20240817);
  FusionCache cache;
  for (int trial = 0; trial < 220; ++trial) {
    const ProblemInstance inst = sample_instance(rng, 3);
    const BigInt closed = verlinde_analytic(inst).value;
    const BigInt recursive = verlinde_recursive(inst, &cache);
    gate.expect(closed == recursive, format_instance(inst) + ": " + closed.str() + " vs " +
                                         recursive.str());
  }
}

void character_identity_residuals(Gate& gate) {
  for (int r = 2; r <= 4; ++r)
    for (Entry k = 1; k <= 4; ++k) {
      const auto points = enumerate_eval_points(r, k);
      for (const EvalPoint& p : points) {
        const double below = identity_residual(IdentityKind::sumP, r, k, p);
        const double full = identity_residual(IdentityKind::sumW, r, k, p);
        gate.expect(below < 1e-9, "node sum over P at r=" + std::to_string(r) +
                                      " k=" + std::to_string(k));
        gate.expect(full < 1e-9, "node sum over W at r=" + std::to_string(r) +
                                     " k=" + std::to_string(k));
      }
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
          if (i == j) continue;
          const double cross =
              identity_residual(IdentityKind::orth, r, k, points[i], &points[j]);
          gate.expect(cross < 1e-9, "cross-node sum at r=" + std::to_string(r) +
                                        " k=" + std::to_string(k));
        }
    }
}

void degeneration_identities(Gate& gate) {
  // One handle removed, on the sampled cross-engine grid.
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 220; ++trial) {
    const ProblemInstance inst = sample_instance(rng, 3);
    if (inst.genus == 0) continue;
    BigInt assembled = 0;
    for (const ProblemInstance& child : reduce_genus_once(inst))
      assembled += verlinde_analytic(child).value;
    const BigInt whole = verlinde_analytic(inst).value;
    gate.expect(assembled == whole,
                "handle removal on " + format_instance(inst) + ": " + assembled.str() +
                    " vs " + whole.str());
  }

  // Node split at genus zero, over every choice of the separated pair.
  std::mt19937_64 rng2(777);
  for (int trial = 0; trial < 40; ++trial) {
    ProblemInstance inst = sample_instance(rng2, 3);
    inst.genus = 0;
    const auto weights = enumerate_weights(inst.rank, inst.level, WeightSet::W);
    const std::size_t target = 4 + rng2() % 2;
    while (inst.points.size() < target)
      inst.points.push_back(weights[rng2() % weights.size()]);
    const BigInt whole = verlinde_analytic(inst).value;
    const int n = static_cast<int>(inst.points.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        BigInt assembled = 0;
        for (const SplitTerm& term : split_points_once(inst, i, j))
          assembled +=
              verlinde_analytic(term.left).value * verlinde_analytic(term.right).value;
        gate.expect(assembled == whole, "node split " + std::to_string(i) + "," +
                                            std::to_string(j) + " on " +
                                            format_instance(inst));
      }
  }

  // Two-branch degeneration with the degree spread across the branches.
  std::mt19937_64 rng3(4242);
  int found = 0;
  for (int attempt = 0; attempt < 600 && found < 20; ++attempt) {
    ProblemInstance inst = sample_instance(rng3, 3);
    if (inst.genus == 0) inst.genus = 1;
    const Rational ell = level_ell(inst);
    if (ell.denominator() != 1) continue;
    long long c1 = 1, c2 = 1;
    const long long mag = ell.numerator() < 0 ? -ell.numerator() : ell.numerator();
    if (mag == 1) continue;
    if (mag > 1) c2 = mag - 1;
    const int g1 = static_cast<int>(rng3() % static_cast<unsigned>(inst.genus + 1));
    std::vector<int> part1, part2;
    for (int idx = 0; idx < static_cast<int>(inst.points.size()); ++idx)
      (rng3() % 2 == 0 ? part1 : part2).push_back(idx);
    gate.expect(check_degree_varying_split(inst, g1, inst.genus - g1, part1, part2, c1, c2),
                "degree-spread split on " + format_instance(inst));
    ++found;
  }
  gate.expect(found >= 20, "only " + std::to_string(found) + " admissible degree-spread splits");
}

void degree_shift_invariance(Gate& gate) {
  std::mt19937_64 rng(1618);
  int done = 0;
  while (done < 120) {
    ProblemInstance inst = sample_instance(rng, 3);
    if (inst.points.empty() || inst.rank < 2) continue;
    const std::size_t z = rng() % inst.points.size();
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(inst.rank - 1));
    ProblemInstance moved = inst;
    moved.degree += m;
    moved.points[z] = hecke(inst.points[z], m, inst.level);
    moved = make_instance(moved.genus, moved.rank, moved.degree, moved.level, moved.points);
    const BigInt before = verlinde_analytic(inst).value;
    const BigInt after = verlinde_analytic(moved).value;
    gate.expect(before == after, "transform m=" + std::to_string(m) + " on " +
                                     format_instance(inst) + ": " + before.str() + " vs " +
                                     after.str());
    ++done;
  }
}

void weight_bijection(Gate& gate) {
  for (int r = 2; r <= 4; ++r)
    for (Entry k = 1; k <= 5; ++k)
      for (long long A = 0; A <= r * k; ++A) {
        std::set<Partition> image;
        std::size_t domain = 0;
        for (const Partition& mu : enumerate_weights(r, k, WeightSet::P)) {
          if (mod_floor(A + mu.sum(), k) != 0) continue;
          ++domain;
          const Partition lam = phi(mu, A, k);
          gate.expect(mod_floor(A + lam.sum(), r) == 0,
                      "image residue at r=" + std::to_string(r) + " k=" + std::to_string(k) +
                          " A=" + std::to_string(A));
          image.insert(lam);
        }
        std::size_t codomain = 0;
        for (const Partition& lam : enumerate_weights(r, k, WeightSet::W))
          if (mod_floor(A + lam.sum(), r) == 0) ++codomain;
        gate.expect(image.size() == domain && image.size() == codomain,
                    "bijection counts at r=" + std::to_string(r) + " k=" + std::to_string(k) +
                        " A=" + std::to_string(A));
      }
}

void genus_one_weight_count(Gate& gate) {
  FusionCache cache;
  for (int r = 2; r <= 3; ++r)
    for (Entry k = 1; k <= 5; ++k) {
      const BigInt expect = oracle::binomial(k + r - 1, r);
      const ProblemInstance inst = oracle::inst(1, r, 0, k, {});
      const BigInt closed = verlinde_analytic(inst).value;
      const BigInt recursive = verlinde_recursive(inst, &cache);
      gate.expect(closed == expect && recursive == expect,
                  "genus-one count r=" + std::to_string(r) + " k=" + std::to_string(k) + ": " +
                      closed.str() + "/" + recursive.str() + " vs " + expect.str());
    }
}

void fusion_symmetry_and_split_independence(Gate& gate) {
  for (Entry k = 1; k <= 3; ++k) {
    FusionCache cache;
    const auto weights = enumerate_weights(2, k, WeightSet::W);
    for (const Partition& a : weights)
      for (const Partition& b : weights)
        for (const Partition& c : weights) {
          const BigInt base = fusion_coeff(a, b, c, 2, k, &cache);
          bool stable = true;
          stable = stable && fusion_coeff(a, c, b, 2, k, &cache) == base;
          stable = stable && fusion_coeff(b, a, c, 2, k, &cache) == base;
          stable = stable && fusion_coeff(b, c, a, 2, k, &cache) == base;
          stable = stable && fusion_coeff(c, a, b, 2, k, &cache) == base;
          stable = stable && fusion_coeff(c, b, a, 2, k, &cache) == base;
          gate.expect(stable, "permutations of " + format_partition(a) + "," +
                                  format_partition(b) + "," + format_partition(c) +
                                  " at k=" + std::to_string(k));
        }

    for (const Partition& a : weights)
      for (const Partition& b : weights)
        for (const Partition& c : weights)
          for (const Partition& d : weights) {
            const ProblemInstance four = make_instance(0, 2, 0, k, {a, b, c, d});
            const BigInt whole = verlinde_recursive(four, &cache);
            bool stable = true;
            for (int i = 0; i < 4 && stable; ++i)
              for (int j = i + 1; j < 4 && stable; ++j) {
                BigInt assembled = 0;
                for (const SplitTerm& term : split_points_once(four, i, j))
                  assembled += verlinde_recursive(term.left, &cache) *
                               verlinde_recursive(term.right, &cache);
                stable = assembled == whole;
              }
            gate.expect(stable, "four-point split of " + format_points(four.points) +
                                    " at k=" + std::to_string(k));
          }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rank-one closed form", 1000, rank_one_closed_form},
      {2, "one- and two-point base cases", 10000, base_case_tables},
      {3, "fundamental-weight three-point rule", 30000, fundamental_three_point_rule},
      {4, "cross-engine agreement on sampled instances", 120000, cross_engine_agreement},
      {5, "character identity residuals", 60000, character_identity_residuals},
      {6, "degeneration identities", 120000, degeneration_identities},
      {7, "degree-shift invariance", 60000, degree_shift_invariance},
      {8, "degree-steered weight bijection", 10000, weight_bijection},
      {9, "genus-one weight count", 10000, genus_one_weight_count},
      {10, "fusion symmetry and split independence", 60000, fusion_symmetry_and_split_independence},
  };

  bool all_ok = true;
  for (const Criterion& criterion : criteria) {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(gate);
    } catch (const std::exception& e) {
      gate.expect(false, std::string("exception: ") + e.what());
    }
    const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (ms > criterion.budget_ms)
      gate.expect(false, "runtime " + std::to_string(ms) + " ms over the " +
                             std::to_string(criterion.budget_ms) + " ms budget");
    std::printf("%s %2d. %s (%lld checks, %lld ms)\n", gate.ok ? "PASS" : "FAIL",
                criterion.number, criterion.name.c_str(), gate.checks, ms);
    if (!gate.ok) std::printf("        first failure: %s\n", gate.first_failure.c_str());
    all_ok = all_ok && gate.ok;
  }
  return all_ok ? 0 : 1;
}
