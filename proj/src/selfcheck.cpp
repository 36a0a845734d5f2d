#include "verlinde/selfcheck.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "verlinde/weights.hpp"

namespace verlinde {

namespace {

std::string fmt_residual(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

// All randomness below uses rng() % n directly: the mt19937_64 stream is
// pinned by the standard, so reports are identical across platforms.
ProblemInstance sample_instance(std::mt19937_64& rng, const SelfcheckConfig& cfg, int min_genus,
                                int point_count, bool solve_degree) {
  const int r = 2 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_rank - 1));
  const Entry k = 1 + static_cast<Entry>(rng() % static_cast<unsigned>(cfg.max_level));
  const int g =
      min_genus + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_genus - min_genus + 1));
  const auto weights = enumerate_weights(r, k, WeightSet::W);
  const int n = point_count >= 0 ? point_count : static_cast<int>(rng() % 4);
  std::vector<Partition> pts;
  for (int i = 0; i < n; ++i) pts.push_back(weights[rng() % weights.size()]);
  long long d = static_cast<long long>(rng() % static_cast<unsigned>(r));
  ProblemInstance inst = make_instance(g, r, d, k, std::move(pts));
  if (solve_degree) {
    for (long long cand = 0; cand < r; ++cand) {
      inst.degree = cand;
      if (divisible(inst)) return inst;
    }
    inst.degree = d;
  }
  return inst;
}

SuiteResult suite_character_identities(const SelfcheckConfig& cfg) {
  SuiteResult res{"character-identities", true, 0, 0.0, ""};
  for (int r = 2; r <= cfg.max_rank; ++r) {
    for (Entry k = 1; k <= cfg.max_level; ++k) {
      const auto pts = enumerate_eval_points(r, k);
      auto note = [&](IdentityKind kind, double got, const EvalPoint& p) {
        ++res.checks;
        res.max_residual = std::max(res.max_residual, got);
        if (got >= cfg.eval.identity_tol && res.pass) {
          res.pass = false;
          res.detail = "r=" + std::to_string(r) + " k=" + std::to_string(k) + " kind=" +
                       std::to_string(static_cast<int>(kind)) + " residual=" + fmt_residual(got) +
                       " at v=" + [&] {
                         std::string s;
                         for (int v : p.v) s += (s.empty() ? "" : ",") + std::to_string(v);
                         return s;
                       }();
        }
      };
      for (const EvalPoint& p : pts) {
        note(IdentityKind::sumP, identity_residual(IdentityKind::sumP, r, k, p, nullptr, cfg.eval),
             p);
        note(IdentityKind::sumW, identity_residual(IdentityKind::sumW, r, k, p, nullptr, cfg.eval),
             p);
      }
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          note(IdentityKind::orth,
               identity_residual(IdentityKind::orth, r, k, pts[i], &pts[j], cfg.eval), pts[i]);
    }
  }
  return res;
}

SuiteResult suite_cross_engine(const SelfcheckConfig& cfg) {
  SuiteResult res{"cross-engine", true, 0, 0.0, ""};
  std::mt19937_64 rng(cfg.seed);
  FusionCache cache;
  for (int t = 0; t < cfg.trials; ++t) {
    // Every fourth trial keeps a random degree so the zero gate is exercised.
    const ProblemInstance inst = sample_instance(rng, cfg, 0, -1, t % 4 != 0);
    try {
      const CheckedResult got = verlinde_checked(inst, Engine::both, &cache, cfg.eval);
      res.max_residual = std::max(res.max_residual, got.residual);
      ++res.checks;
    } catch (const EngineMismatchError& e) {
      res.pass = false;
      res.detail = e.what();
      break;
    }
  }
  return res;
}

SuiteResult suite_factor_genus(const SelfcheckConfig& cfg) {
  SuiteResult res{"factor-genus", true, 0, 0.0, ""};
  std::mt19937_64 rng(cfg.seed + 1);
  const int trials = std::max(20, cfg.trials / 5);
  for (int t = 0; t < trials && cfg.max_genus >= 1; ++t) {
    const ProblemInstance inst = sample_instance(rng, cfg, 1, -1, t % 4 != 0);
    const BigInt whole = verlinde_analytic(inst, cfg.eval).value;
    BigInt sum = 0;
    for (const ProblemInstance& child : reduce_genus_once(inst))
      sum += verlinde_analytic(child, cfg.eval).value;
    ++res.checks;
    if (whole != sum) {
      res.pass = false;
      res.detail = format_instance(inst) + ": whole=" + whole.str() + " parts=" + sum.str();
      break;
    }
  }
  return res;
}

SuiteResult suite_factor_split(const SelfcheckConfig& cfg) {
  SuiteResult res{"factor-split", true, 0, 0.0, ""};
  std::mt19937_64 rng(cfg.seed + 2);
  const int trials = std::max(20, cfg.trials / 5);
  for (int t = 0; t < trials; ++t) {
    ProblemInstance inst = sample_instance(rng, cfg, 0, 4, t % 4 != 0);
    inst.genus = 0;
    const int i = static_cast<int>(rng() % 4);
    int j = static_cast<int>(rng() % 4);
    while (j == i) j = static_cast<int>(rng() % 4);
    const BigInt whole = verlinde_analytic(inst, cfg.eval).value;
    BigInt sum = 0;
    for (const SplitTerm& term : split_points_once(inst, std::min(i, j), std::max(i, j))) {
      const BigInt left = verlinde_analytic(term.left, cfg.eval).value;
      if (left == 0) continue;
      sum += left * verlinde_analytic(term.right, cfg.eval).value;
    }
    ++res.checks;
    if (whole != sum) {
      res.pass = false;
      res.detail = format_instance(inst) + ": whole=" + whole.str() + " parts=" + sum.str();
      break;
    }
  }
  return res;
}

SuiteResult suite_factor_degree_split(const SelfcheckConfig& cfg) {
  SuiteResult res{"factor-degree-split", true, 0, 0.0, ""};
  std::mt19937_64 rng(cfg.seed + 3);
  const int wanted = 20;
  for (int attempt = 0; attempt < 400 && static_cast<int>(res.checks) < wanted; ++attempt) {
    const ProblemInstance inst = sample_instance(rng, cfg, 0, -1, true);
    const Rational ell = level_ell(inst);
    if (ell.denominator() != 1) continue;
    const long long whole_ell = ell.numerator();
    long long c1 = 1, c2 = 1;
    if (whole_ell != 0) {
      const long long mag = whole_ell < 0 ? -whole_ell : whole_ell;
      if (mag == 1) continue;  // no positive split makes both parts integral
      c2 = mag - 1;
    }
    const int g1 = static_cast<int>(rng() % static_cast<unsigned>(inst.genus + 1));
    const int g2 = inst.genus - g1;
    std::vector<int> part1, part2;
    for (int idx = 0; idx < static_cast<int>(inst.points.size()); ++idx)
      (rng() % 2 == 0 ? part1 : part2).push_back(idx);
    ++res.checks;
    if (!check_degree_varying_split(inst, g1, g2, part1, part2, c1, c2, cfg.eval)) {
      res.pass = false;
      res.detail = format_instance(inst) + " g1=" + std::to_string(g1) +
                   " c=(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
      break;
    }
  }
  if (res.checks == 0) {
    res.pass = false;
    res.detail = "no admissible instances sampled";
  }
  return res;
}

SuiteResult suite_hecke_invariance(const SelfcheckConfig& cfg) {
  SuiteResult res{"hecke-invariance", true, 0, 0.0, ""};
  std::mt19937_64 rng(cfg.seed + 4);
  const int trials = std::max(100, cfg.trials / 2);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const ProblemInstance inst = sample_instance(rng, cfg, 0, n, t % 4 != 0);
    const int z = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(inst.rank));
    ProblemInstance moved = inst;
    moved.degree += m;
    moved.points[static_cast<std::size_t>(z)] =
        hecke(inst.points[static_cast<std::size_t>(z)], m, inst.level);
    const BigInt before = verlinde_analytic(inst, cfg.eval).value;
    const BigInt after = verlinde_analytic(moved, cfg.eval).value;
    ++res.checks;
    if (before != after) {
      res.pass = false;
      res.detail = format_instance(inst) + " z=" + std::to_string(z) +
                   " m=" + std::to_string(m) + ": " + before.str() + " vs " + after.str();
      break;
    }
  }
  return res;
}

SuiteResult suite_phi_bijectivity(const SelfcheckConfig& cfg) {
  SuiteResult res{"phi-bijectivity", true, 0, 0.0, ""};
  for (int r = 2; r <= cfg.max_rank && res.pass; ++r) {
    for (Entry k = 1; k <= cfg.max_level && res.pass; ++k) {
      const auto below = enumerate_weights(r, k, WeightSet::P);
      const auto target = enumerate_weights(r, k, WeightSet::W);
      for (long long A = 0; A <= r * k; ++A) {
        std::set<Partition> image;
        std::size_t domain = 0;
        for (const Partition& mu : below) {
          if (mod_floor(A + mu.sum(), k) != 0) continue;
          ++domain;
          image.insert(phi(mu, A, k));
        }
        std::size_t codomain = 0;
        bool inside = true;
        for (const Partition& lam : target) {
          if (mod_floor(A + lam.sum(), r) != 0) continue;
          ++codomain;
        }
        for (const Partition& lam : image)
          if (mod_floor(A + lam.sum(), r) != 0 || lam.first() > k) inside = false;
        ++res.checks;
        if (image.size() != domain || image.size() != codomain || !inside) {
          res.pass = false;
          res.detail = "r=" + std::to_string(r) + " k=" + std::to_string(k) +
                       " A=" + std::to_string(A) + ": domain=" + std::to_string(domain) +
                       " image=" + std::to_string(image.size()) +
                       " codomain=" + std::to_string(codomain);
          break;
        }
      }
    }
  }
  return res;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckConfig& cfg) {
  if (cfg.max_rank < 2 || cfg.max_level < 1 || cfg.max_genus < 0 || cfg.trials < 1)
    throw ValidationError("run_selfcheck: bounds must satisfy rank>=2, level>=1, genus>=0, trials>=1");
  std::vector<SuiteResult> out;
  out.push_back(suite_character_identities(cfg));
  out.push_back(suite_cross_engine(cfg));
  out.push_back(suite_factor_genus(cfg));
  out.push_back(suite_factor_split(cfg));
  out.push_back(suite_factor_degree_split(cfg));
  out.push_back(suite_hecke_invariance(cfg));
  out.push_back(suite_phi_bijectivity(cfg));
  return out;
}

bool selfcheck_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.pass; });
}

std::string format_selfcheck_report(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const SuiteResult& r : results) {
    std::string line = r.name;
    line.resize(22, ' ');
    line += r.pass ? "pass" : "FAIL";
    line += "  checks=" + std::to_string(r.checks);
    line += "  max-residual=" + fmt_residual(r.max_residual);
    out += line + "\n";
    if (!r.pass) out += "  first failure: " + r.detail + "\n";
  }
  out += selfcheck_passed(results) ? "overall: pass\n" : "overall: FAIL\n";
  return out;
}

}  // namespace verlinde
