#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlinde/evaluator.hpp"
#include "verlinde/selfcheck.hpp"

namespace {

using nlohmann::ordered_json;
using namespace verlinde;

Engine parse_engine(const std::string& name) {
  if (name == "analytic") return Engine::analytic;
  if (name == "recursive") return Engine::recursive;
  if (name == "both") return Engine::both;
  throw ValidationError("unknown engine '" + name + "'");
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

// A cache file binds one (rank, level); refuse to mix it with another run.
struct CacheBinding {
  FusionCache cache;
  std::string path;

  void open(const std::string& file, int rank, Entry level) {
    path = file;
    if (path.empty()) return;
    if (!std::filesystem::exists(path)) return;  // first run creates it
    const CacheFileInfo info = cache_load(path, cache);
    if (info.entries > 0 && (info.rank != rank || info.level != level))
      throw ValidationError("cache file " + path + " holds rank " + std::to_string(info.rank) +
                            " level " + std::to_string(info.level) +
                            ", which does not match this computation");
  }

  void save(int rank, Entry level) {
    if (!path.empty()) cache_store(path, cache, rank, level);
  }
};

struct ComputeArgs {
  int genus = 0;
  int rank = 1;
  long long degree = 0;
  Entry level = 1;
  std::string weights;
  std::string engine = "both";
  std::string format = "plain";
  double round_tol = EvalConfig{}.round_tol;
  std::string cache_path;
  bool trace = false;
};

int run_compute(const ComputeArgs& args) {
  EvalConfig cfg;
  cfg.round_tol = args.round_tol;
  const Engine engine = parse_engine(args.engine);
  const ProblemInstance inst =
      make_instance(args.genus, args.rank, args.degree, args.level,
                    parse_points(args.weights, args.rank, args.level));
  CacheBinding bound;
  bound.open(args.cache_path, args.rank, args.level);
  ReductionTrace trace;
  const auto start = std::chrono::steady_clock::now();
  const CheckedResult got = verlinde_checked(inst, engine, &bound.cache, cfg,
                                             args.trace ? &trace : nullptr);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  bound.save(args.rank, args.level);
  if (args.trace) std::cerr << format_trace(trace);

  if (args.format == "plain") {
    std::cout << got.value.str() << "\n";
  } else if (args.format == "json") {
    ordered_json doc;
    doc["genus"] = inst.genus;
    doc["rank"] = inst.rank;
    doc["degree"] = inst.degree;
    doc["level"] = inst.level;
    doc["weights"] = format_points(inst.points);
    doc["value"] = got.value.str();
    doc["engine"] = args.engine;
    doc["residual"] = got.residual;
    doc["millis"] = millis;
    std::cout << doc.dump() << "\n";
  } else if (args.format == "csv") {
    std::cout << "genus,rank,degree,level,weights,value\n";
    std::cout << inst.genus << "," << inst.rank << "," << inst.degree << "," << inst.level << ","
              << csv_quote(format_points(inst.points)) << "," << got.value.str() << "\n";
  } else {
    throw ValidationError("unknown format '" + args.format + "'");
  }
  return 0;
}

struct FusionArgs {
  int rank = 2;
  Entry level = 1;
  std::string a, b, c;
  std::string format = "plain";
  std::string cache_path;
};

int run_fusion(const FusionArgs& args) {
  auto read = [&](const std::string& text, const char* who) {
    Partition p = normalize(parse_partition(text));
    if (p.rank() != args.rank)
      throw ValidationError(std::string(who) + ": expected " + std::to_string(args.rank) +
                            " entries in '" + text + "'");
    if (p.first() > args.level)
      throw ValidationError(std::string(who) + ": '" + text + "' exceeds level " +
                            std::to_string(args.level));
    return p;
  };
  const Partition a = read(args.a, "--a"), b = read(args.b, "--b"), c = read(args.c, "--c");
  CacheBinding bound;
  bound.open(args.cache_path, args.rank, args.level);
  const BigInt value = fusion_coeff(a, b, c, args.rank, args.level, &bound.cache);
  bound.save(args.rank, args.level);

  if (args.format == "plain") {
    std::cout << value.str() << "\n";
  } else if (args.format == "json") {
    ordered_json doc;
    doc["rank"] = args.rank;
    doc["level"] = args.level;
    doc["a"] = format_partition(a);
    doc["b"] = format_partition(b);
    doc["c"] = format_partition(c);
    doc["value"] = value.str();
    std::cout << doc.dump() << "\n";
  } else if (args.format == "csv") {
    std::cout << "rank,level,a,b,c,value\n";
    std::cout << args.rank << "," << args.level << "," << csv_quote(format_partition(a)) << ","
              << csv_quote(format_partition(b)) << "," << csv_quote(format_partition(c)) << ","
              << value.str() << "\n";
  } else {
    throw ValidationError("unknown format '" + args.format + "'");
  }
  return 0;
}

struct TableArgs {
  int rank = 1;
  int genus_from = 0, genus_to = 0;
  Entry level_from = 1, level_to = 1;
  long long degree_from = 0, degree_to = 0;
  std::string weights;
  std::string engine = "both";
  double round_tol = EvalConfig{}.round_tol;
  std::string cache_path;
};

int run_table(const TableArgs& args) {
  EvalConfig cfg;
  cfg.round_tol = args.round_tol;
  const Engine engine = parse_engine(args.engine);
  CacheBinding bound;
  // A multi-level table cannot bind a single-slice cache file.
  if (!args.cache_path.empty() && args.level_from != args.level_to)
    throw ValidationError("table: --cache requires a single level");
  bound.open(args.cache_path, args.rank, args.level_from);
  std::cout << "genus,rank,degree,level,weights,value\n";
  for (int g = args.genus_from; g <= args.genus_to; ++g)
    for (Entry k = args.level_from; k <= args.level_to; ++k)
      for (long long d = args.degree_from; d <= args.degree_to; ++d) {
        const ProblemInstance inst =
            make_instance(g, args.rank, d, k, parse_points(args.weights, args.rank, k));
        const CheckedResult got = verlinde_checked(inst, engine, &bound.cache, cfg);
        std::cout << g << "," << args.rank << "," << d << "," << k << ","
                  << csv_quote(format_points(inst.points)) << "," << got.value.str() << "\n";
      }
  bound.save(args.rank, args.level_from);
  return 0;
}

struct SelfcheckArgs {
  SelfcheckConfig cfg;
  double tol = -1.0;  // unset
};

int run_selfcheck_cmd(SelfcheckArgs args) {
  if (args.tol >= 0.0) {
    args.cfg.eval.identity_tol = args.tol;
    args.cfg.eval.round_tol = args.tol;
  }
  const std::vector<SuiteResult> results = run_selfcheck(args.cfg);
  std::cout << format_selfcheck_report(results);
  return selfcheck_passed(results) ? 0 : 1;
}

int run_cache_export(const std::string& from, const std::string& out) {
  FusionCache cache;
  const CacheFileInfo info = cache_load(from, cache);
  if (info.entries == 0) {
    std::ofstream touch(out, std::ios::trunc);
    if (!touch) throw ValidationError("cache export: cannot open " + out);
    std::cout << "entries: 0\n";
    return 0;
  }
  const std::size_t stored = cache_store(out, cache, info.rank, info.level);
  std::cout << "entries: " << stored << "\n";
  return 0;
}

int run_cache_import(const std::string& into, const std::string& from) {
  FusionCache cache;
  const CacheFileInfo incoming = cache_load(from, cache);
  if (incoming.entries == 0) throw ValidationError("cache import: " + from + " holds no entries");
  if (std::filesystem::exists(into)) {
    const CacheFileInfo present = cache_load(into, cache);
    if (present.entries > 0 &&
        (present.rank != incoming.rank || present.level != incoming.level))
      throw ValidationError("cache import: " + into + " and " + from +
                            " hold different rank/level slices");
  }
  const std::size_t stored = cache_store(into, cache, incoming.rank, incoming.level);
  std::cout << "entries: " << stored << "\n";
  return 0;
}

int run_cache_clear(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ValidationError("cache clear: cannot open " + path);
  std::cout << "entries: 0\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimensions of spaces of conformal blocks for sl(r) at a fixed level"};
  app.require_subcommand(1);

  // The only environment override: a default cache path.
  std::string env_cache;
  if (const char* env = std::getenv("VERLINDE_CACHE")) env_cache = env;

  ComputeArgs compute;
  compute.cache_path = env_cache;
  CLI::App* compute_cmd = app.add_subcommand("compute", "Compute one value");
  compute_cmd->add_option("--genus", compute.genus, "Curve genus (>= 0)");
  compute_cmd->add_option("--rank", compute.rank, "Bundle rank (>= 1)");
  compute_cmd->add_option("--degree", compute.degree, "Bundle degree (any integer)");
  compute_cmd->add_option("--level", compute.level, "Level (>= 1)")->required();
  compute_cmd->add_option("--weights", compute.weights,
                          "Marked points: \"1,0;2,0\" or flag form \"n=1,1;a=0,2\"");
  compute_cmd->add_option("--engine", compute.engine, "analytic|recursive|both (default both)");
  compute_cmd->add_option("--format", compute.format, "plain|json|csv (default plain)");
  compute_cmd->add_option("--round-tol", compute.round_tol, "Integer rounding tolerance");
  compute_cmd->add_option("--cache", compute.cache_path, "Memo cache file to reuse and extend");
  compute_cmd->add_flag("--trace", compute.trace, "Print the reduction trace to stderr");

  FusionArgs fusion;
  fusion.cache_path = env_cache;
  CLI::App* fusion_cmd = app.add_subcommand("fusion", "Three-point genus-zero coefficient");
  fusion_cmd->add_option("--rank", fusion.rank, "Rank (>= 1)")->required();
  fusion_cmd->add_option("--level", fusion.level, "Level (>= 1)")->required();
  fusion_cmd->add_option("--a", fusion.a, "First weight, e.g. 1,0")->required();
  fusion_cmd->add_option("--b", fusion.b, "Second weight")->required();
  fusion_cmd->add_option("--c", fusion.c, "Third weight")->required();
  fusion_cmd->add_option("--format", fusion.format, "plain|json|csv (default plain)");
  fusion_cmd->add_option("--cache", fusion.cache_path, "Memo cache file to reuse and extend");

  TableArgs table;
  table.cache_path = env_cache;
  CLI::App* table_cmd = app.add_subcommand("table", "CSV table over parameter ranges");
  table_cmd->add_option("--rank", table.rank, "Rank (fixed)")->required();
  table_cmd->add_option("--genus-from", table.genus_from, "First genus");
  table_cmd->add_option("--genus-to", table.genus_to, "Last genus");
  table_cmd->add_option("--level-from", table.level_from, "First level")->required();
  table_cmd->add_option("--level-to", table.level_to, "Last level")->required();
  table_cmd->add_option("--degree-from", table.degree_from, "First degree");
  table_cmd->add_option("--degree-to", table.degree_to, "Last degree");
  table_cmd->add_option("--weights", table.weights, "Marked points, fixed across rows");
  table_cmd->add_option("--engine", table.engine, "analytic|recursive|both (default both)");
  table_cmd->add_option("--round-tol", table.round_tol, "Integer rounding tolerance");
  table_cmd->add_option("--cache", table.cache_path, "Memo cache file (single level only)");

  SelfcheckArgs selfcheck;
  CLI::App* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the verification suites");
  selfcheck_cmd->add_option("--max-rank", selfcheck.cfg.max_rank, "Largest rank (default 3)");
  selfcheck_cmd->add_option("--max-level", selfcheck.cfg.max_level, "Largest level (default 3)");
  selfcheck_cmd->add_option("--max-genus", selfcheck.cfg.max_genus, "Largest genus (default 2)");
  selfcheck_cmd->add_option("--trials", selfcheck.cfg.trials, "Sampled instances (default 200)");
  selfcheck_cmd->add_option("--seed", selfcheck.cfg.seed, "Sampling seed (default 12345)");
  selfcheck_cmd->add_option("--tol", selfcheck.tol,
                            "Override both identity and rounding tolerances");

  CLI::App* cache_cmd = app.add_subcommand("cache", "Cache file management");
  cache_cmd->require_subcommand(1);
  std::string cache_file = env_cache, cache_out, cache_from;
  CLI::App* export_cmd = cache_cmd->add_subcommand("export", "Rewrite a cache file canonically");
  export_cmd->add_option("--cache", cache_file, "Source cache file")->required();
  export_cmd->add_option("--out", cache_out, "Destination file")->required();
  CLI::App* import_cmd = cache_cmd->add_subcommand("import", "Merge entries from another file");
  import_cmd->add_option("--cache", cache_file, "Destination cache file")->required();
  import_cmd->add_option("--from", cache_from, "Source cache file")->required();
  CLI::App* clear_cmd = cache_cmd->add_subcommand("clear", "Empty a cache file");
  clear_cmd->add_option("--cache", cache_file, "Cache file to empty")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*fusion_cmd) return run_fusion(fusion);
    if (*table_cmd) return run_table(table);
    if (*selfcheck_cmd) return run_selfcheck_cmd(selfcheck);
    if (*export_cmd) return run_cache_export(cache_file, cache_out);
    if (*import_cmd) return run_cache_import(cache_file, cache_from);
    if (*clear_cmd) return run_cache_clear(cache_file);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CacheVersionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CacheCorruptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EngineMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
