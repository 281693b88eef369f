#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "zelpack/errors.hpp"
#include "zelpack/halfint.hpp"

namespace zelpack {

// Interval [b, e] of half-integers with unit spacing, b <= e, both in one
// coset. Stands for the exponent string b, b+1, ..., e.
struct Segment {
  HalfInt b, e;

  Segment(HalfInt b_, HalfInt e_) : b(b_), e(e_) {
    if (!same_coset(b, e) || e < b)
      throw BadSegment("segment [" + b.str() + "," + e.str() +
                       "]: end - base must be a nonnegative integer");
  }

  static Segment point(HalfInt v) { return Segment(v, v); }

  int length() const { return steps(e, b) + 1; }

  bool contains(HalfInt v) const { return same_coset(v, b) && b <= v && v <= e; }
  bool contains(const Segment& o) const {
    return same_coset(o.b, b) && b <= o.b && o.e <= e;
  }

  friend auto operator<=>(const Segment&, const Segment&) = default;

  std::string str() const {
    if (b == e) return "[" + b.str() + "]";
    return "[" + b.str() + "," + e.str() + "]";
  }
};

// d1 precedes d2: starts and ends strictly earlier, close enough that the
// union is again a segment.
inline bool precedes(const Segment& d1, const Segment& d2) {
  return d1.b < d2.b && d1.e < d2.e && d2.b <= d1.e + 1;
}

inline std::optional<Segment> intersection(const Segment& d1, const Segment& d2) {
  if (!same_coset(d1.b, d2.b)) return std::nullopt;
  HalfInt lo = std::max(d1.b, d2.b), hi = std::min(d1.e, d2.e);
  if (hi < lo) return std::nullopt;
  return Segment(lo, hi);
}

// union when it is again a segment (the two overlap or are adjacent)
inline std::optional<Segment> merged(const Segment& d1, const Segment& d2) {
  if (!same_coset(d1.b, d2.b)) return std::nullopt;
  if (std::min(d1.e, d2.e) + 1 < std::max(d1.b, d2.b)) return std::nullopt;
  return Segment(std::min(d1.b, d2.b), std::max(d1.e, d2.e));
}

}  // namespace zelpack
