#pragma once

#include <set>
#include <string>
#include <vector>

#include "zelpack/segment.hpp"

namespace zelpack {

// Multiset of segments with all endpoints in one Z-coset. Stored canonically
// (descending base, then descending end) so vector equality is multiset
// equality.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }

  friend auto operator<=>(const Multisegment&, const Multisegment&) = default;

  std::string str() const;

 private:
  std::vector<Segment> segs_;
};

struct MultisegmentStats {
  int longest = 0;  // L: length of the longest segment
  int count = 0;    // n: number of segments
  int cover = 0;    // c: least number of segments the union splits into
  friend bool operator==(const MultisegmentStats&, const MultisegmentStats&) = default;
};

MultisegmentStats stats(const Multisegment& a);

// Immediate coarsenings: replace an overlapping non-nested pair by union and
// intersection, or a linked disjoint pair by its union. Deduplicated.
std::set<Multisegment> elementary_successors(const Multisegment& a);

// Reflexive-transitive closure of elementary_successors, reachability test.
// Both arguments must share a support.
bool leq_oracle(const Multisegment& a, const Multisegment& b);

// Everything reachable from a, including a itself.
std::set<Multisegment> upper_set(const Multisegment& a);

// Zelevinsky involution, computed by the Moeglin-Waldspurger algorithm.
Multisegment mw_dual(const Multisegment& a);

// staircase {[b+t, e+t] : 0 <= t < n}
bool is_simple(const Multisegment& a);
Multisegment simple_multisegment(HalfInt b, HalfInt e, int n);

// closed form of the dual of simple_multisegment(b, e, n)
Multisegment simple_dual_formula(HalfInt b, HalfInt e, int n);

}  // namespace zelpack
