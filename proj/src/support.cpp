#include "zelpack/support.hpp"

#include <algorithm>
#include <numeric>

#include "zelpack/errors.hpp"

namespace zelpack {

Support::Support(std::vector<HalfInt> exps, std::vector<int> ms)
    : exponents(std::move(exps)), mults(std::move(ms)) {
  if (exponents.size() != mults.size())
    throw Error("support: exponent and multiplicity lists differ in length");
  for (std::size_t i = 1; i < exponents.size(); ++i)
    if (exponents[i] != exponents[i - 1] - 1)
      throw Error("support: exponents must descend by 1");
  for (int m : mults)
    if (m < 0) throw Error("support: negative multiplicity");
}

int Support::total() const { return std::accumulate(mults.begin(), mults.end(), 0); }

int Support::index_of(HalfInt e) const {
  if (exponents.empty() || !same_coset(e, exponents[0])) return -1;
  int idx = steps(exponents[0], e);
  return (idx >= 0 && idx < levels()) ? idx : -1;
}

std::string Support::str() const {
  std::string out = "(";
  for (int i = 0; i < levels(); ++i) {
    if (i) out += ", ";
    out += exponents[i].str() + ":" + std::to_string(mults[i]);
  }
  return out + ")";
}

Support support_of(const Multisegment& a) {
  if (a.empty()) return Support{};
  const auto& segs = a.segments();
  HalfInt hi = segs[0].e, lo = segs[0].b;
  for (const auto& s : segs) {
    hi = std::max(hi, s.e);
    lo = std::min(lo, s.b);
  }
  int len = steps(hi, lo) + 1;
  std::vector<HalfInt> exps;
  exps.reserve(len);
  for (int t = 0; t < len; ++t) exps.push_back(hi - t);
  std::vector<int> mults(len, 0);
  for (const auto& s : segs)
    for (int t = steps(hi, s.e); t <= steps(hi, s.b); ++t) ++mults[t];
  return Support(std::move(exps), std::move(mults));
}

}  // namespace zelpack
