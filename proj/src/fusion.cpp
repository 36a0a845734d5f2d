#include "verlinde/fusion.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "verlinde/weights.hpp"

namespace verlinde {

namespace {

// All weakly decreasing results of adding s boxes to lam, no two in one row.
std::vector<Partition> raw_strips(const Partition& lam, int s) {
  const int r = lam.rank();
  std::vector<Partition> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (left == 0) {
      std::vector<Entry> e = lam.entries();
      for (int i : rows) e[static_cast<std::size_t>(i)] += 1;
      bool ok = true;
      for (int i = 1; i < r; ++i)
        if (e[static_cast<std::size_t>(i - 1)] < e[static_cast<std::size_t>(i)]) ok = false;
      if (ok) out.push_back(Partition(std::move(e)));
      return;
    }
    if (r - pos < left) return;
    rows.push_back(pos);
    self(self, pos + 1, left - 1);
    rows.pop_back();
    self(self, pos + 1, left);
  };
  rec(rec, 0, s);
  return out;
}

std::string key_text(const FusionKey& key) {
  return "a=" + format_partition(key.triple[0]) + "|b=" + format_partition(key.triple[1]) +
         "|c=" + format_partition(key.triple[2]);
}

void check_operand(const Partition& p, int rank, Entry level, const char* who) {
  if (p.rank() != rank || !p.is_normalized() || p.first() > level)
    throw ValidationError(std::string(who) + ": partition " + format_partition(p) +
                          " is not a normalized level-" + std::to_string(level) + " weight");
}

struct Ctx {
  int rank;
  Entry level;
  FusionCache& cache;
  int depth_cap;
};

BigInt coeff_rec(Ctx& ctx, const Partition& a, const Partition& b, const Partition& c,
                 int depth) {
  if (depth > ctx.depth_cap)
    throw RecursionBudgetError("fusion_coeff: depth cap " + std::to_string(ctx.depth_cap) +
                               " exceeded");
  const int r = ctx.rank;
  if (mod_floor(a.sum() + b.sum() + c.sum(), r) != 0) return 0;

  std::array<Partition, 3> tri{a, b, c};
  std::sort(tri.begin(), tri.end());
  const FusionKey key{r, ctx.level, tri};
  if (BigInt hit; ctx.cache.lookup(key, hit)) return hit;

  BigInt value;
  if (tri[0].is_zero()) {
    // Two-point rule: a trivial point drops out, the rest must pair as duals.
    value = normalize(dual(tri[2], ctx.level)) == tri[1] ? 1 : 0;
  } else {
    GapStats st[3];
    for (int i = 0; i < 3; ++i) st[i] = stats(tri[i]);
    int fund = -1;
    for (int i = 0; i < 3 && fund < 0; ++i)
      if (st[i].m == st[i].s) fund = i;
    if (fund >= 0) {
      const Partition& y = tri[fund == 0 ? 1 : 0];
      const Partition& z = tri[fund == 2 ? 1 : 2];
      value = fusion_base3(st[fund].s, y, z, r, ctx.level);
    } else {
      // Pivot with the smallest measure m - s; ties break on the partition.
      int piv = 0;
      for (int i = 1; i < 3; ++i)
        if (std::pair(st[i].m - st[i].s, tri[i]) < std::pair(st[piv].m - st[piv].s, tri[piv]))
          piv = i;
      const Partition& px = tri[piv];
      const Partition& y = tri[piv == 0 ? 1 : 0];
      const Partition& z = tri[piv == 2 ? 1 : 2];
      const int s = st[piv].s;
      std::vector<Entry> e = px.entries();
      for (int i = 0; i < s; ++i) e[static_cast<std::size_t>(i)] -= 1;
      const Partition peeled(std::move(e));

      // Four-point value of {omega_s, y, peeled, z} split between the pairs,
      // minus the strip extensions of peeled other than px itself.
      const int rho = static_cast<int>(mod_floor(-(s + y.sum()), r));
      BigInt four = 0;
      for (const Partition& nu : enumerate_weights_res(r, ctx.level, rho)) {
        if (fusion_base3(s, y, nu, r, ctx.level) == 0) continue;
        four += coeff_rec(ctx, peeled, z, normalize(dual(nu, ctx.level)), depth + 1);
      }
      BigInt rest = 0;
      for (const Partition& mu : pieri_set(peeled, s, ctx.level)) {
        if (mu == px) continue;
        rest += coeff_rec(ctx, mu, y, z, depth + 1);
      }
      value = four - rest;
      if (value < 0)
        throw std::logic_error("fusion_coeff: negative value at key " + key_text(key));
    }
  }
  ctx.cache.insert(key, value);
  return value;
}

}  // namespace

std::vector<Partition> pieri_set(const Partition& lam, int s, Entry level) {
  const int r = lam.rank();
  if (s < 1 || s > r - 1) throw ValidationError("pieri_set: strip size out of range");
  check_operand(lam, r, level, "pieri_set");
  std::vector<Partition> out;
  for (const Partition& mu : raw_strips(lam, s)) {
    Partition norm = normalize(mu);
    if (norm.first() <= level) out.push_back(std::move(norm));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int fusion_base3(int s, const Partition& lam_y, const Partition& lam_z, int rank, Entry level) {
  if (s < 1 || s > rank - 1) throw ValidationError("fusion_base3: s out of range");
  check_operand(lam_y, rank, level, "fusion_base3");
  check_operand(lam_z, rank, level, "fusion_base3");
  const Partition target = dual(lam_z, level);
  for (const Partition& mu : raw_strips(lam_y, s))
    if (equivalent(mu, target)) return 1;
  return 0;
}

bool FusionCache::lookup(const FusionKey& key, BigInt& out) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void FusionCache::insert(const FusionKey& key, const BigInt& value) {
  std::lock_guard<std::mutex> lock(mu_);
  table_[key] = value;
}

std::size_t FusionCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return table_.size();
}

void FusionCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  table_.clear();
}

std::map<std::string, BigInt> FusionCache::slice(int rank, Entry level) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::map<std::string, BigInt> out;
  for (const auto& [key, value] : table_)
    if (key.rank == rank && key.level == level) out[key_text(key)] = value;
  return out;
}

BigInt fusion_coeff(const Partition& a, const Partition& b, const Partition& c, int rank,
                    Entry level, FusionCache* cache, int depth_cap) {
  if (rank < 1 || level < 1) throw ValidationError("fusion_coeff: need rank, level >= 1");
  check_operand(a, rank, level, "fusion_coeff");
  check_operand(b, rank, level, "fusion_coeff");
  check_operand(c, rank, level, "fusion_coeff");
  FusionCache local;
  Ctx ctx{rank, level, cache ? *cache : local, depth_cap};
  return coeff_rec(ctx, a, b, c, 0);
}

std::size_t cache_store(const std::string& path, const FusionCache& cache, int rank,
                        Entry level) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cache_store: cannot open " + path);
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["rank"] = rank;
  doc["level"] = level;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  const auto slice = cache.slice(rank, level);
  for (const auto& [key, value] : slice) entries[key] = value.str();
  doc["entries"] = std::move(entries);
  out << doc.dump(2) << "\n";
  if (!out) throw ValidationError("cache_store: write failed on " + path);
  return slice.size();
}

namespace {

Partition parse_key_part(const std::string& piece, char tag, int rank) {
  if (piece.size() < 2 || piece[0] != tag || piece[1] != '=')
    throw CacheCorruptError("cache entry key piece '" + piece + "' lacks prefix");
  Partition p = parse_partition(piece.substr(2));
  if (p.rank() != rank || !p.is_normalized())
    throw CacheCorruptError("cache entry key piece '" + piece + "' is not normalized rank-" +
                            std::to_string(rank));
  return p;
}

}  // namespace

CacheFileInfo cache_load(const std::string& path, FusionCache& cache) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cache_load: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return CacheFileInfo{};

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheCorruptError("cache file " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
    throw CacheCorruptError("cache file " + path + ": missing version");
  if (doc["version"].get<long long>() != 1)
    throw CacheVersionError("cache file " + path + ": version " + doc["version"].dump() +
                            " unsupported (expected 1)");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer() || !doc.contains("level") ||
      !doc["level"].is_number_integer() || !doc.contains("entries") || !doc["entries"].is_object())
    throw CacheCorruptError("cache file " + path + ": missing rank/level/entries");
  const int rank = doc["rank"].get<int>();
  const Entry level = doc["level"].get<Entry>();
  if (rank < 1 || level < 1)
    throw CacheCorruptError("cache file " + path + ": rank/level out of range");

  CacheFileInfo info{0, rank, level};
  for (const auto& [key, value] : doc["entries"].items()) {
    std::vector<std::string> pieces;
    std::size_t start = 0;
    for (std::size_t bar = key.find('|'); bar != std::string::npos; bar = key.find('|', start)) {
      pieces.push_back(key.substr(start, bar - start));
      start = bar + 1;
    }
    pieces.push_back(key.substr(start));
    if (pieces.size() != 3) throw CacheCorruptError("cache entry key '" + key + "' malformed");
    FusionKey parsed;
    try {
      parsed = FusionKey{rank, level,
                         {parse_key_part(pieces[0], 'a', rank), parse_key_part(pieces[1], 'b', rank),
                          parse_key_part(pieces[2], 'c', rank)}};
    } catch (const ValidationError& e) {
      throw CacheCorruptError(std::string("cache entry key invalid: ") + e.what());
    }
    if (!std::is_sorted(parsed.triple.begin(), parsed.triple.end()))
      throw CacheCorruptError("cache entry key '" + key + "' not in canonical order");
    if (!value.is_string()) throw CacheCorruptError("cache entry '" + key + "' value not text");
    BigInt parsed_value;
    try {
      parsed_value = BigInt(value.get<std::string>());
    } catch (const std::exception&) {
      throw CacheCorruptError("cache entry '" + key + "' value is not an integer");
    }
    if (parsed_value < 0)
      throw CacheCorruptError("cache entry '" + key + "' value is negative");
    cache.insert(parsed, parsed_value);
    ++info.entries;
  }
  return info;
}

}  // namespace verlinde
