#pragma once

#include <compare>
#include <string>

namespace zelpack {

// Exact half-integer; the represented value is twice/2. Stored doubled so all
// arithmetic and comparisons stay integral.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt whole(int v) { return HalfInt{2 * v}; }
  static constexpr HalfInt halves(int t) { return HalfInt{t}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  // shifts by whole integers keep the coset
  friend constexpr HalfInt operator+(HalfInt a, int n) { return HalfInt{a.twice + 2 * n}; }
  friend constexpr HalfInt operator-(HalfInt a, int n) { return HalfInt{a.twice - 2 * n}; }

  // "2", "-1", "3/2", "-1/2"
  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

// a - b as a whole number of unit steps; meaningful only within one coset
constexpr int steps(HalfInt a, HalfInt b) { return (a.twice - b.twice) / 2; }

constexpr bool same_coset(HalfInt a, HalfInt b) { return (a.twice - b.twice) % 2 == 0; }

}  // namespace zelpack
