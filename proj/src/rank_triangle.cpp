#include "zelpack/rank_triangle.hpp"

#include <algorithm>

namespace zelpack {

static std::vector<std::vector<int>> zero_rows(int levels) {
  std::vector<std::vector<int>> rows;
  for (int d = 1; d < levels; ++d) rows.emplace_back(levels - d, 0);
  return rows;
}

RankTriangle::RankTriangle(Support s)
    : support_(std::move(s)), rows_(zero_rows(support_.levels())) {}

RankTriangle::RankTriangle(Support s, std::vector<std::vector<int>> rows)
    : support_(std::move(s)), rows_(std::move(rows)) {
  int k = levels() - 1;
  if (static_cast<int>(rows_.size()) != std::max(k, 0))
    throw InvalidTriangle("rank rows: expected one row per depth 1.." + std::to_string(k));
  for (int d = 1; d <= k; ++d) {
    if (static_cast<int>(rows_[d - 1].size()) != k - d + 1)
      throw InvalidTriangle("rank row at depth " + std::to_string(d) + " has wrong length");
    for (int v : rows_[d - 1])
      if (v < 0) throw InvalidTriangle("negative rank entry");
  }
}

std::string RankTriangle::str() const {
  // smallest exponent leftmost, matching the usual table display
  int k = levels() - 1;
  auto cell = [](const std::string& s) {
    std::string out = s;
    while (out.size() < 4) out = " " + out;
    return out;
  };
  std::string out = "e:";
  for (int i = k; i >= 0; --i) out += cell(support_.exponents[i].str());
  out += "\nm:";
  for (int i = k; i >= 0; --i) out += cell(std::to_string(support_.mults[i]));
  for (int d = 1; d <= k; ++d) {
    out += "\n  " + std::string(2 * d, ' ');
    for (int i = k; i >= d; --i) out += cell(std::to_string(rank(i, i - d)));
  }
  return out;
}

bool validate(const RankTriangle& t) {
  int k = t.levels() - 1;
  const auto& m = t.support().mults;
  for (int i = 1; i <= k; ++i)
    if (t.rank(i, i - 1) > std::min(m[i], m[i - 1])) return false;
  for (int d = 2; d <= k; ++d)
    for (int i = k; i >= d; --i) {
      int j = i - d;
      if (t.rank(i, j) > t.rank(i, j + 1) || t.rank(i, j) > t.rank(i - 1, j)) return false;
    }
  // Frobenius exchange with the depth-0 convention r_ss = m_s; the s = l
  // case is Sylvester's bound and only j < s <= l < i is nontrivial
  for (int i = 2; i <= k; ++i)
    for (int j = 0; j <= i - 2; ++j)
      for (int s = j + 1; s < i; ++s)
        for (int l = s; l < i; ++l) {
          int mid = (l == s) ? m[s] : t.rank(l, s);
          if (t.rank(i, s) + t.rank(l, j) > t.rank(i, j) + mid) return false;
        }
  return true;
}

RankTriangle triangle_of_segment(const Segment& d, const Support& s) {
  int ie = s.index_of(d.e), ib = s.index_of(d.b);
  if (ie < 0 || ib < 0)
    throw SegmentOutsideSupport("segment " + d.str() + " not contained in chain " + s.str());
  int k = s.levels() - 1;
  std::vector<int> ind(s.levels(), 0);
  for (int t = ie; t <= ib; ++t) ind[t] = 1;
  auto rows = zero_rows(s.levels());
  for (int i = ie + 1; i <= ib; ++i)
    for (int j = ie; j < i; ++j) rows[i - j - 1][k - i] = 1;
  return RankTriangle(Support(s.exponents, std::move(ind)), std::move(rows));
}

RankTriangle multiseg_to_triangle(const Multisegment& a, const Support& s) {
  int k = s.levels() - 1;
  std::vector<int> cover(s.levels(), 0);
  auto rows = zero_rows(s.levels());
  for (const auto& seg : a.segments()) {
    int ie = s.index_of(seg.e), ib = s.index_of(seg.b);
    if (ie < 0 || ib < 0)
      throw SegmentOutsideSupport("segment " + seg.str() + " not contained in chain " + s.str());
    for (int t = ie; t <= ib; ++t) ++cover[t];
    for (int i = ie + 1; i <= ib; ++i)
      for (int j = ie; j < i; ++j) ++rows[i - j - 1][k - i];
  }
  if (cover != s.mults)
    throw SupportMismatch("multisegment coverage does not match support multiplicities");
  return RankTriangle(s, std::move(rows));
}

RankTriangle multiseg_to_triangle(const Multisegment& a) {
  return multiseg_to_triangle(a, support_of(a));
}

Multisegment triangle_to_multiseg(const RankTriangle& t) {
  if (!validate(t)) throw InvalidTriangle("rank constraints violated");
  int k = t.levels() - 1;
  auto rows = t.rank_rows();
  auto mult = t.support().mults;
  std::vector<Segment> segs;
  for (;;) {
    // deepest nonzero entry, leftmost (largest i) first
    int bi = -1, bj = -1;
    for (int d = k; d >= 1 && bi < 0; --d)
      for (int i = k; i >= d; --i)
        if (rows[d - 1][k - i] > 0) {
          bi = i;
          bj = i - d;
          break;
        }
    if (bi < 0) break;
    segs.emplace_back(t.support().exponents[bi], t.support().exponents[bj]);
    for (int i = bj + 1; i <= bi; ++i)
      for (int j = bj; j < i; ++j)
        if (--rows[i - j - 1][k - i] < 0)
          throw InvalidTriangle("rank residue went negative during extraction");
    for (int i = bj; i <= bi; ++i)
      if (--mult[i] < 0)
        throw InvalidTriangle("multiplicity residue went negative during extraction");
  }
  for (int i = 0; i <= k; ++i)
    for (int c = 0; c < mult[i]; ++c) segs.push_back(Segment::point(t.support().exponents[i]));
  return Multisegment(std::move(segs));
}

bool leq_triangle(const RankTriangle& t1, const RankTriangle& t2) {
  if (t1.support() != t2.support())
    throw SupportMismatch("leq_triangle: operands do not share a support");
  // the all-zero triangle (closed orbit) is the minimum
  const auto& r1 = t1.rank_rows();
  const auto& r2 = t2.rank_rows();
  for (std::size_t d = 0; d < r1.size(); ++d)
    for (std::size_t p = 0; p < r1[d].size(); ++p)
      if (r1[d][p] > r2[d][p]) return false;
  return true;
}

RankTriangle triangle_dual(const RankTriangle& t) {
  // transported through the bijection; kept on the original chain so ends
  // with multiplicity zero survive the round trip
  return multiseg_to_triangle(mw_dual(triangle_to_multiseg(t)), t.support());
}

}  // namespace zelpack
