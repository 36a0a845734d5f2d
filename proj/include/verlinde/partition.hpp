#pragma once

#include <compare>
#include <string>
#include <vector>

#include "verlinde/error.hpp"

namespace verlinde {

using Entry = long long;

// Weakly decreasing tuple of nonnegative integers with fixed length r.
// Normalized means the last entry is zero; two partitions are equivalent
// when they differ by a constant shift of all entries.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Entry> entries);
  static Partition zero(int rank);

  int rank() const { return static_cast<int>(e_.size()); }
  Entry operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  Entry first() const { return e_.front(); }
  Entry last() const { return e_.back(); }
  Entry sum() const;
  bool is_zero() const;
  bool is_normalized() const { return !e_.empty() && e_.back() == 0; }
  const std::vector<Entry>& entries() const { return e_; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Entry> e_;
};

Partition normalize(const Partition& lam);
Partition dual(const Partition& lam, Entry level);
bool equivalent(const Partition& a, const Partition& b);

// s-th fundamental weight as a partition: 1 repeated s times, then zeros.
Partition omega(int rank, int s);

// Quasi-parabolic flag data at one point: block sizes n_i (summing to r)
// and strictly increasing weights a_i, with 0 <= a_1 and a_{l+1} <= k.
struct ParabolicPoint {
  std::vector<int> blocks;
  std::vector<Entry> weights;
};

ParabolicPoint make_parabolic(std::vector<int> blocks, std::vector<Entry> weights,
                              int rank, Entry level);
Partition omega_to_partition(const ParabolicPoint& p, Entry level);
ParabolicPoint partition_to_omega(const Partition& lam, Entry level);

// One computation: genus, rank, degree, level, and marked-point weights.
// Points are stored normalized; make_instance normalizes and validates.
struct ProblemInstance {
  int genus = 0;
  int rank = 1;
  long long degree = 0;
  Entry level = 1;
  std::vector<Partition> points;
};

ProblemInstance make_instance(int genus, int rank, long long degree, Entry level,
                              std::vector<Partition> points);

// Text formats: a partition is "3,1,0"; a point list joins partitions with
// ";"; a point may instead be given as flag data "n=1,1,1;a=0,2,3" (the two
// segments pair up). Empty text means no points.
std::string format_partition(const Partition& lam);
Partition parse_partition(const std::string& text);
std::string format_points(const std::vector<Partition>& points);
std::vector<Partition> parse_points(const std::string& text, int rank, Entry level);
std::string format_instance(const ProblemInstance& inst);

}  // namespace verlinde
