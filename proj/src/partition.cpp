#include "verlinde/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace verlinde {

Partition::Partition(std::vector<Entry> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw ValidationError("partition must have at least one entry");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < 0) throw ValidationError("partition entries must be nonnegative");
    if (i + 1 < e_.size() && e_[i] < e_[i + 1])
      throw ValidationError("partition entries must be weakly decreasing");
  }
}

Partition Partition::zero(int rank) {
  if (rank < 1) throw ValidationError("rank must be positive");
  return Partition(std::vector<Entry>(static_cast<std::size_t>(rank), 0));
}

Entry Partition::sum() const { return std::accumulate(e_.begin(), e_.end(), Entry{0}); }

bool Partition::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Entry x) { return x == 0; });
}

Partition normalize(const Partition& lam) {
  std::vector<Entry> e = lam.entries();
  const Entry c = e.back();
  for (Entry& x : e) x -= c;
  return Partition(std::move(e));
}

Partition dual(const Partition& lam, Entry level) {
  if (lam.first() > level)
    throw ValidationError("dual: first entry " + std::to_string(lam.first()) +
                          " exceeds level " + std::to_string(level));
  std::vector<Entry> e(lam.entries().rbegin(), lam.entries().rend());
  for (Entry& x : e) x = level - x;
  return Partition(std::move(e));
}

bool equivalent(const Partition& a, const Partition& b) {
  if (a.rank() != b.rank()) return false;
  const Entry shift = a[0] - b[0];
  for (int i = 1; i < a.rank(); ++i)
    if (a[i] - b[i] != shift) return false;
  return true;
}

Partition omega(int rank, int s) {
  if (s < 0 || s > rank) throw ValidationError("omega: index out of range");
  std::vector<Entry> e(static_cast<std::size_t>(rank), 0);
  std::fill(e.begin(), e.begin() + s, Entry{1});
  return Partition(std::move(e));
}

ParabolicPoint make_parabolic(std::vector<int> blocks, std::vector<Entry> weights,
                              int rank, Entry level) {
  if (blocks.empty() || blocks.size() != weights.size())
    throw ValidationError("parabolic point needs matching nonempty block and weight lists");
  int total = 0;
  for (int n : blocks) {
    if (n < 1) throw ValidationError("parabolic block sizes must be positive");
    total += n;
  }
  if (total != rank) throw ValidationError("parabolic block sizes must sum to the rank");
  if (weights.front() < 0 || weights.back() > level)
    throw ValidationError("parabolic weights must lie in [0, level]");
  for (std::size_t i = 0; i + 1 < weights.size(); ++i)
    if (weights[i] >= weights[i + 1])
      throw ValidationError("parabolic weights must be strictly increasing");
  if (weights.back() - weights.front() > level)
    throw ValidationError("parabolic weight spread exceeds the level");
  return ParabolicPoint{std::move(blocks), std::move(weights)};
}

Partition omega_to_partition(const ParabolicPoint& p, Entry level) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    e.insert(e.end(), static_cast<std::size_t>(p.blocks[i]), level - p.weights[i]);
  return Partition(std::move(e));
}

ParabolicPoint partition_to_omega(const Partition& lam, Entry level) {
  if (lam.first() > level)
    throw ValidationError("partition_to_omega: first entry exceeds level");
  std::vector<int> blocks;
  std::vector<Entry> weights;
  for (int i = 0; i < lam.rank(); ++i) {
    if (i == 0 || lam[i] != lam[i - 1]) {
      blocks.push_back(1);
      weights.push_back(level - lam[i]);
    } else {
      ++blocks.back();
    }
  }
  return ParabolicPoint{std::move(blocks), std::move(weights)};
}

ProblemInstance make_instance(int genus, int rank, long long degree, Entry level,
                              std::vector<Partition> points) {
  if (genus < 0) throw ValidationError("genus must be nonnegative");
  if (rank < 1) throw ValidationError("rank must be positive");
  if (level < 1) throw ValidationError("level must be positive");
  for (Partition& p : points) {
    if (p.rank() != rank)
      throw ValidationError("point " + format_partition(p) + " does not have rank " +
                            std::to_string(rank));
    p = normalize(p);
    if (p.first() > level)
      throw ValidationError("point " + format_partition(p) + " exceeds level " +
                            std::to_string(level) + " after normalization");
  }
  return ProblemInstance{genus, rank, degree, level, std::move(points)};
}

std::string format_partition(const Partition& lam) {
  std::ostringstream out;
  for (int i = 0; i < lam.rank(); ++i) {
    if (i) out << ',';
    out << lam[i];
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

Entry parse_integer(const std::string& text) {
  std::size_t used = 0;
  Entry value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw ValidationError("trailing characters in integer: '" + text + "'");
  return value;
}

std::vector<Entry> parse_integer_list(const std::string& text) {
  std::vector<Entry> out;
  for (const std::string& piece : split(text, ','))
    out.push_back(parse_integer(piece));
  return out;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  return Partition(parse_integer_list(text));
}

std::string format_points(const std::vector<Partition>& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ';';
    out += format_partition(points[i]);
  }
  return out;
}

std::vector<Partition> parse_points(const std::string& text, int rank, Entry level) {
  std::vector<Partition> out;
  if (text.empty()) return out;
  const std::vector<std::string> segs = split(text, ';');
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string& seg = segs[i];
    if (seg.rfind("n=", 0) == 0) {
      // Flag-data form occupies two segments: "n=..." then "a=...".
      if (i + 1 >= segs.size() || segs[i + 1].rfind("a=", 0) != 0)
        throw ValidationError("flag-data point 'n=...' must be followed by 'a=...'");
      std::vector<int> blocks;
      for (Entry n : parse_integer_list(seg.substr(2)))
        blocks.push_back(static_cast<int>(n));
      std::vector<Entry> weights = parse_integer_list(segs[i + 1].substr(2));
      ++i;
      ParabolicPoint p = make_parabolic(std::move(blocks), std::move(weights), rank, level);
      out.push_back(omega_to_partition(p, level));
    } else if (seg.empty()) {
      throw ValidationError("empty point in weight list");
    } else {
      Partition lam = parse_partition(seg);
      if (lam.rank() != rank)
        throw ValidationError("point '" + seg + "' does not have rank " + std::to_string(rank));
      out.push_back(std::move(lam));
    }
  }
  return out;
}

std::string format_instance(const ProblemInstance& inst) {
  std::ostringstream out;
  out << "(g=" << inst.genus << ", r=" << inst.rank << ", d=" << inst.degree
      << ", k=" << inst.level << ", points={" << format_points(inst.points) << "})";
  return out.str();
}

}  // namespace verlinde
