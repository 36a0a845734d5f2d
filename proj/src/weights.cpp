#include "verlinde/weights.hpp"

#include <algorithm>

namespace verlinde {

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

// Weakly decreasing vectors of the given length with entries in [0, cap],
// optionally with a forced trailing zero. Ascending lexicographic order
// falls out of recursing on each position from 0 upward.
void emit(std::vector<Entry>& acc, int length, Entry cap, bool trailing_zero,
          std::vector<Partition>& out) {
  if (static_cast<int>(acc.size()) == length) {
    if (trailing_zero) {
      acc.push_back(0);
      out.push_back(Partition(acc));
      acc.pop_back();
    } else {
      out.push_back(Partition(acc));
    }
    return;
  }
  for (Entry v = 0; v <= cap; ++v) {
    acc.push_back(v);
    emit(acc, length, v, trailing_zero, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_weights(int rank, Entry level, WeightSet kind) {
  if (rank < 1 || level < 1) throw ValidationError("enumerate_weights: need rank, level >= 1");
  std::vector<Partition> out;
  std::vector<Entry> acc;
  if (kind == WeightSet::P)
    emit(acc, rank, level - 1, false, out);
  else
    emit(acc, rank - 1, level, true, out);
  return out;
}

std::vector<Partition> enumerate_weights_res(int rank, Entry level, int residue) {
  if (residue < 0 || residue >= rank) throw ValidationError("residue out of range");
  std::vector<Partition> out;
  for (Partition& lam : enumerate_weights(rank, level, WeightSet::W))
    if (mod_floor(lam.sum(), rank) == residue) out.push_back(std::move(lam));
  return out;
}

NodalData nodal_point_data(const Partition& mu, Entry level) {
  const int r = mu.rank();
  if (mu.first() >= level)
    throw ValidationError("nodal_point_data: weight entries must be strictly below the level");
  // Positions (1-based) and sizes of the nonzero gaps of mu.
  std::vector<int> pos;
  std::vector<Entry> gap;
  for (int i = 1; i < r; ++i) {
    if (mu[i - 1] - mu[i] > 0) {
      pos.push_back(i);
      gap.push_back(mu[i - 1] - mu[i]);
    }
  }
  const int l = static_cast<int>(pos.size());
  auto assemble = [&](const std::vector<int>& rs, const std::vector<Entry>& ds) {
    std::vector<Entry> a(1, mu.last());
    for (Entry d : ds) a.push_back(a.back() + d);
    std::vector<int> n;
    int prev = 0;
    for (int rp : rs) {
      n.push_back(rp - prev);
      prev = rp;
    }
    n.push_back(r - prev);
    return make_parabolic(std::move(n), std::move(a), r, level);
  };
  // The second branch reverses the gap list and reflects the positions.
  std::vector<int> pos2;
  std::vector<Entry> gap2;
  for (int i = l - 1; i >= 0; --i) {
    pos2.push_back(r - pos[static_cast<std::size_t>(i)]);
    gap2.push_back(gap[static_cast<std::size_t>(i)]);
  }
  return NodalData{assemble(pos, gap), assemble(pos2, gap2)};
}

Partition hecke(const Partition& mu, int m, Entry level) {
  const int r = mu.rank();
  if (m < 1 || m > r) throw ValidationError("hecke: block size out of range");
  if (mu.first() > level) throw ValidationError("hecke: entries must be at most the level");
  if (m == r) return normalize(mu);
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(r));
  const Entry base = mu[r - m - 1];  // mu_{r-m} in 1-based labels
  for (int j = 1; j <= m; ++j) out.push_back(level - base + mu[r - m + j - 1]);
  for (int j = m + 1; j <= r; ++j) out.push_back(mu[j - m - 1] - base);
  return Partition(std::move(out));
}

Partition phi(const Partition& mu, long long A, Entry level) {
  const int r = mu.rank();
  if (mu.first() >= level)
    throw ValidationError("phi: weight entries must be strictly below the level");
  if ((A + mu.sum()) % level != 0)
    throw ValidationError("phi: level must divide A + |mu|");
  const long long d1 = (A + mu.sum()) / level - r;
  const int i = static_cast<int>(mod_floor(d1, r));
  return hecke(mu, r - i, level);  // i = 0 gives the normalizing block m = r
}

GapStats stats(const Partition& lam) {
  if (!lam.is_normalized()) throw ValidationError("stats: partition must be normalized");
  GapStats st;
  for (int i = 1; i < lam.rank(); ++i)
    if (lam[i - 1] - lam[i] > 0) st.s = i;
  for (int i = 0; i < st.s; ++i) st.m += lam[i];
  return st;
}

Rational level_ell(const ProblemInstance& inst) {
  // With normalized points the flag sum telescopes to |lambda| per point.
  long long chi = inst.degree + static_cast<long long>(inst.rank) * (1 - inst.genus);
  long long weight_sum = 0;
  for (const Partition& p : inst.points) weight_sum += p.sum();
  return Rational(inst.level * chi - weight_sum, inst.rank);
}

bool divisible(const ProblemInstance& inst) {
  long long weight_sum = 0;
  for (const Partition& p : inst.points) weight_sum += p.sum();
  return mod_floor(inst.level * inst.degree - weight_sum, inst.rank) == 0;
}

}  // namespace verlinde
