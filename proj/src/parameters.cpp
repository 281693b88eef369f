#include "zelpack/parameters.hpp"

#include <algorithm>

namespace zelpack {

Support infinitesimal_support(int d, int a) {
  if (d < 0 || a < 0) throw Error("infinitesimal_support: d and a must be nonnegative");
  int len = d + a + 1;
  std::vector<HalfInt> exps;
  std::vector<int> mults;
  exps.reserve(len);
  mults.reserve(len);
  for (int t = 0; t < len; ++t) {
    exps.push_back(HalfInt::halves(d + a - 2 * t));
    mults.push_back(std::min({t, a, d, d + a - t}) + 1);
  }
  return Support(std::move(exps), std::move(mults));
}

VoganShape vogan_shape(const Support& s) {
  VoganShape v;
  v.support = s;
  v.h_factors = s.mults;
  for (int i = 1; i < s.levels(); ++i) {
    long long h = static_cast<long long>(s.mults[i]) * s.mults[i - 1];
    v.hom_dims.push_back(h);
    v.dim_v += h;
  }
  return v;
}

Multisegment simple_arthur_multisegment(int d, int a) {
  if (d < 0 || a < 0) throw Error("simple_arthur_multisegment: d and a must be nonnegative");
  return simple_multisegment(HalfInt::halves(-(d + a)), HalfInt::halves(d - a), a + 1);
}

ArthurParameter arthur_hat(const ArthurParameter& p) {
  ArthurParameter q = p;
  std::swap(q.d, q.a);
  return q;
}

UnramifiedReduction hyper_unramify(const ArthurParameter& p) {
  if (p.m < 1) throw Error("hyper_unramify: m must be at least 1");
  UnramifiedReduction r;
  r.reduced_rank = (p.d + 1) * (p.a + 1);
  r.nr = ArthurParameter{1, p.d, p.a, ""};
  return r;
}

Multisegment translate_segments(const Multisegment& a, const std::string&, TwistDirection) {
  // the twist moves the cuspidal datum, not the exponents
  return a;
}

std::string render_segment(const Segment& s, const std::string& rho_label) {
  if (rho_label.empty()) return s.str();
  auto point = [&](HalfInt v) { return "π_" + rho_label + "(" + v.str() + ")"; };
  if (s.b == s.e) return "[" + point(s.b) + "]";
  return "[" + point(s.b) + "," + point(s.e) + "]";
}

std::string render_multisegment(const Multisegment& a, const std::string& rho_label) {
  if (rho_label.empty()) return a.str();
  std::string out = "{";
  const auto& segs = a.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i) out += ",";
    out += render_segment(segs[i], rho_label);
  }
  return out + "}";
}

}  // namespace zelpack
