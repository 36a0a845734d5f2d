#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "verlinde/bigint.hpp"
#include "verlinde/partition.hpp"

namespace verlinde {

// Level-admissible weights reachable from lam by adding s boxes, no two in
// the same row. Raw results are normalized and kept only when the normalized
// first entry is at most the level. Duplicate-free, ascending.
std::vector<Partition> pieri_set(const Partition& lam, int s, Entry level);

// Three-point number with one fundamental factor omega_s: 1 exactly when
// dual(lam_z) is equivalent to a raw strip extension of lam_y (no level
// filter, no normalization; distinct raw extensions are never equivalent).
int fusion_base3(int s, const Partition& lam_y, const Partition& lam_z, int rank, Entry level);

// Memo key: algebra parameters plus the canonically ordered triple. Keys need
// not satisfy the weight-sum divisibility; such keys always hold value 0.
struct FusionKey {
  int rank = 0;
  Entry level = 0;
  std::array<Partition, 3> triple;  // normalized, ascending
  friend auto operator<=>(const FusionKey&, const FusionKey&) = default;
};

// Shared memo table. Insertion of an existing key overwrites; values are
// deterministic per key, so concurrent writers cannot disagree.
class FusionCache {
 public:
  bool lookup(const FusionKey& key, BigInt& out) const;
  void insert(const FusionKey& key, const BigInt& value);
  std::size_t size() const;
  void clear();
  // Entries for one (rank, level), keyed by canonical text "a=…|b=…|c=…".
  std::map<std::string, BigInt> slice(int rank, Entry level) const;

 private:
  mutable std::mutex mu_;
  std::map<FusionKey, BigInt> table_;
};

// Three-point genus-zero number for the given rank and level. Partitions must
// be normalized with entries at most the level. Without a cache a call-local
// memo is used. The recursion strictly shrinks the pivot measure, so depth
// beyond the cap indicates a logic error, never an unlucky input.
BigInt fusion_coeff(const Partition& a, const Partition& b, const Partition& c, int rank,
                    Entry level, FusionCache* cache = nullptr, int depth_cap = 64);

// Persistent form: one file holds the slice for a single (rank, level).
struct CacheFileInfo {
  std::size_t entries = 0;
  int rank = 0;  // zero when the file was empty
  Entry level = 0;
};

std::size_t cache_store(const std::string& path, const FusionCache& cache, int rank, Entry level);
CacheFileInfo cache_load(const std::string& path, FusionCache& cache);

}  // namespace verlinde
