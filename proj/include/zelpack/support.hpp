#pragma once

#include <string>
#include <vector>

#include "zelpack/halfint.hpp"
#include "zelpack/multisegment.hpp"

namespace zelpack {

// Exponent chain with multiplicities: exponents[i+1] = exponents[i] - 1,
// mults[i] >= 0. Zero multiplicities inside the chain are allowed.
struct Support {
  std::vector<HalfInt> exponents;
  std::vector<int> mults;

  Support() = default;
  Support(std::vector<HalfInt> exps, std::vector<int> ms);

  int levels() const { return static_cast<int>(exponents.size()); }
  int total() const;
  int index_of(HalfInt e) const;  // -1 when absent

  friend bool operator==(const Support&, const Support&) = default;

  std::string str() const;
};

// Chain from the largest end down to the smallest base of a, with coverage
// multiplicities. Empty multisegment gives the empty support.
Support support_of(const Multisegment& a);

}  // namespace zelpack
