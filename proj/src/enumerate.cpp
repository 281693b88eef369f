#include <algorithm>

#include "zelpack/rank_triangle.hpp"

namespace zelpack {

namespace {

std::vector<std::vector<int>> zero_rows(int levels) {
  std::vector<std::vector<int>> rows;
  for (int d = 1; d < levels; ++d) rows.emplace_back(levels - d, 0);
  return rows;
}

// Backtracking in depth-major position order: depth 1..k, within a depth
// i = k down to d. When entry (i, i-d) is placed, both parents and every
// Frobenius quadruple with deepest corner (i, i-d) are already fixed, so the
// feasible values form the exact window [lb, ub]; every leaf is a valid
// triangle and leaves appear in lexicographic order of the row data.
struct OrbitSearch {
  const Support& s;
  int k;
  std::vector<std::vector<int>> rows;
  std::vector<RankTriangle>& out;

  int rank(int i, int j) const { return rows[i - j - 1][k - i]; }

  void fill(int d, int i) {
    if (d > k) {
      out.emplace_back(s, rows);
      return;
    }
    int nd = d, ni = i - 1;
    if (i == d) {
      nd = d + 1;
      ni = k;
    }
    int j = i - d;
    int ub = d == 1 ? std::min(s.mults[i], s.mults[i - 1])
                    : std::min(rank(i, j + 1), rank(i - 1, j));
    // Frobenius and Sylvester lower bounds; every quadruple with deepest
    // corner (i,j) involves only shallower, already placed entries
    int lb = 0;
    for (int t = j + 1; t < i; ++t)
      for (int l = t; l < i; ++l) {
        int mid = (l == t) ? s.mults[t] : rank(l, t);
        lb = std::max(lb, rank(i, t) + rank(l, j) - mid);
      }
    for (int v = lb; v <= ub; ++v) {
      rows[d - 1][k - i] = v;
      fill(nd, ni);
    }
    rows[d - 1][k - i] = 0;
  }
};

}  // namespace

std::vector<RankTriangle> enumerate_orbits_serial(const Support& s) {
  std::vector<RankTriangle> out;
  int k = s.levels() - 1;
  OrbitSearch search{s, k, zero_rows(s.levels()), out};
  search.fill(1, k);
  return out;
}

std::vector<RankTriangle> enumerate_orbits(const Support& s) {
  int k = s.levels() - 1;
  if (k < 2) return enumerate_orbits_serial(s);

  // depth-1 entries are mutually unconstrained; enumerate those rows in
  // lexicographic order and search the deeper rows of each in parallel
  std::vector<int> caps(k);
  long long total = 1;
  for (int i = k; i >= 1; --i) {
    caps[k - i] = std::min(s.mults[i], s.mults[i - 1]);
    total *= caps[k - i] + 1;
    if (total > (1 << 22)) return enumerate_orbits_serial(s);
  }

  std::vector<std::vector<RankTriangle>> buckets(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long t = 0; t < total; ++t) {
    auto rows = zero_rows(s.levels());
    long long rest = t;  // mixed radix, leftmost digit most significant
    for (int p = k - 1; p >= 0; --p) {
      rows[0][p] = static_cast<int>(rest % (caps[p] + 1));
      rest /= caps[p] + 1;
    }
    OrbitSearch search{s, k, std::move(rows), buckets[t]};
    search.fill(2, k);
  }

  std::vector<RankTriangle> out;
  for (auto& b : buckets) {
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  return out;
}

namespace {

// Branch on segments covering the highest exponent that still has coverage
// left. Any such segment must end there, and forcing non-increasing bases
// across a run of equal ends makes each multisegment appear exactly once.
void enum_msegs(const Support& s, std::vector<int>& left, int last_end, int last_base,
                std::vector<Segment>& acc, std::vector<Multisegment>& out) {
  int levels = s.levels();
  int t = 0;
  while (t < levels && left[t] == 0) ++t;
  if (t == levels) {
    out.push_back(Multisegment(acc));
    return;
  }
  int start = (last_end == t) ? last_base : t;
  // walking from t keeps every interior index of [t, bidx] covered; choices
  // below start would break the non-increasing base rule and are skipped
  for (int bidx = t; bidx < levels && left[bidx] > 0; ++bidx) {
    if (bidx < start) continue;
    for (int u = t; u <= bidx; ++u) --left[u];
    acc.emplace_back(s.exponents[bidx], s.exponents[t]);
    enum_msegs(s, left, t, bidx, acc, out);
    acc.pop_back();
    for (int u = t; u <= bidx; ++u) ++left[u];
  }
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(const Support& s) {
  std::vector<Multisegment> out;
  std::vector<int> left = s.mults;
  std::vector<Segment> acc;
  enum_msegs(s, left, -1, -1, acc, out);
  return out;
}

}  // namespace zelpack
