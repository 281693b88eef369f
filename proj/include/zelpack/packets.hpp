#pragma once

#include <vector>

#include "zelpack/parameters.hpp"
#include "zelpack/rank_triangle.hpp"

namespace zelpack {

// Orbits C on the support of base with base <= C and dual(base) <= dual(C),
// in enumeration order. singleton is true exactly when members == {base}.
struct PrePacket {
  RankTriangle base;
  std::vector<RankTriangle> members;
  bool singleton = false;
};

PrePacket pre_packet(const RankTriangle& base);         // OpenMP filter
PrePacket pre_packet_serial(const RankTriangle& base);  // reference
// Filter against a precomputed orbit list on the same support.
PrePacket pre_packet(const RankTriangle& base, const std::vector<RankTriangle>& orbits);

// For simple alpha: no other multisegment on the support satisfies both
// alpha <= beta and dual(alpha) <= dual(beta). Throws NotSimple otherwise.
bool verify_main_lemma(const Multisegment& alpha);

// Pre-packet of the staircase attached to (d,a) is a singleton.
bool verify_theorem(int d, int a);

// Same check for a twisted parameter, through its unramified reduction.
bool verify_theorem_irreducible(const ArthurParameter& p);

// The pre-packet the two verifiers inspect, for reporting.
PrePacket packet_of_parameter(const ArthurParameter& p);

}  // namespace zelpack
