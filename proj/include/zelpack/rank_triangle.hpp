#pragma once

#include <string>
#include <vector>

#include "zelpack/support.hpp"

namespace zelpack {

// Orbit invariant on a support with levels k+1: the ranks r(i,j) of the
// composite maps E_i -> E_j for k >= i > j >= 0. Stored depth-major: row d
// (1-based) holds r(i, i-d) for i = k down to d, so rank(i,j) lives at
// rows[i-j-1][k-i].
//
// The constructor checks shape and nonnegativity only; whether the entries
// satisfy the rank constraints is the job of validate(), so candidate data
// can be materialized and then rejected.
class RankTriangle {
 public:
  explicit RankTriangle(Support s);  // all ranks zero
  RankTriangle(Support s, std::vector<std::vector<int>> rows);

  const Support& support() const { return support_; }
  int levels() const { return support_.levels(); }
  const std::vector<std::vector<int>>& rank_rows() const { return rows_; }

  int rank(int i, int j) const { return rows_[i - j - 1][levels() - 1 - i]; }

  friend bool operator==(const RankTriangle&, const RankTriangle&) = default;

  std::string str() const;  // block display, smallest exponent leftmost

 private:
  Support support_;
  std::vector<std::vector<int>> rows_;
};

// The three constraint families: adjacent ranks bounded by neighbouring
// multiplicities, deeper ranks bounded by their two parents, and the
// Frobenius exchange inequalities.
bool validate(const RankTriangle& t);

// Indicator triangle of one segment on the chain of s (its own indicator
// multiplicities, not those of s).
RankTriangle triangle_of_segment(const Segment& d, const Support& s);

RankTriangle multiseg_to_triangle(const Multisegment& a);
// Same, on a fixed chain; coverage of a must equal s.mults exactly.
RankTriangle multiseg_to_triangle(const Multisegment& a, const Support& s);

Multisegment triangle_to_multiseg(const RankTriangle& t);

// Pointwise comparison of all ranks; closure order on orbits.
bool leq_triangle(const RankTriangle& t1, const RankTriangle& t2);

// Involution transported through the multisegment bijection, on the same
// support.
RankTriangle triangle_dual(const RankTriangle& t);

// All valid triangles on s, in lexicographic depth-major order. The OpenMP
// version partitions on the depth-1 row (those entries are mutually
// unconstrained) and yields exactly the serial order.
std::vector<RankTriangle> enumerate_orbits(const Support& s);
std::vector<RankTriangle> enumerate_orbits_serial(const Support& s);

// Independent enumeration on the multisegment side: branch on the segments
// covering the highest remaining exponent, non-increasing bases within a
// block of equal ends, so each multisegment appears exactly once.
std::vector<Multisegment> enumerate_multisegments(const Support& s);

}  // namespace zelpack
