#pragma once

#include <string>
#include <vector>

#include "zelpack/rank_triangle.hpp"

namespace zelpack {

// Unramified-twist datum (m,d,a): m copies of a cuspidal rho, d+1 and a+1 the
// sizes of the two SL2 factors. Total rank m(d+1)(a+1).
struct ArthurParameter {
  int m = 1;
  int d = 0;
  int a = 0;
  std::string rho_label;  // empty for the unramified twist itself

  int rank() const { return m * (d + 1) * (a + 1); }
  bool simple() const { return m == 1; }

  friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;
};

// Exponent chain (a+d)/2 - t for t = 0..a+d with multiplicities
// min(t, a, d, a+d-t) + 1.
Support infinitesimal_support(int d, int a);

// Dimension data of the variety attached to a support: one Hom block per
// adjacent pair of eigenspaces, acted on by a product of general linear
// groups of the multiplicities.
struct VoganShape {
  Support support;
  std::vector<long long> hom_dims;  // hom_dims[i] = mults[i+1] * mults[i]
  long long dim_v = 0;
  std::vector<int> h_factors;

  friend bool operator==(const VoganShape&, const VoganShape&) = default;
};

VoganShape vogan_shape(const Support& s);

// Staircase attached to (d,a): {[-(d+a)/2 + t, -(d+a)/2 + d + t] : 0 <= t <= a}.
Multisegment simple_arthur_multisegment(int d, int a);

// swap of the two SL2 factors
ArthurParameter arthur_hat(const ArthurParameter& p);

struct UnramifiedReduction {
  int reduced_rank = 0;     // (d+1)(a+1)
  ArthurParameter nr;       // m = 1, unramified
};

// Strip the cuspidal twist: the packet computation factors through the m = 1
// unramified parameter of rank (d+1)(a+1).
UnramifiedReduction hyper_unramify(const ArthurParameter& p);

enum class TwistDirection { to_unramified, from_unramified };

// Endpoint data is twist-invariant; the twist only shows up in rendering.
Multisegment translate_segments(const Multisegment& a, const std::string& rho_label,
                                TwistDirection dir);

std::string render_segment(const Segment& s, const std::string& rho_label);
std::string render_multisegment(const Multisegment& a, const std::string& rho_label);

}  // namespace zelpack
