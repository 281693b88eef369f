#include "zelpack/packets.hpp"

namespace zelpack {

PrePacket pre_packet(const RankTriangle& base, const std::vector<RankTriangle>& orbits) {
  if (!validate(base)) throw InvalidTriangle("pre_packet: base fails rank constraints");
  RankTriangle base_dual = triangle_dual(base);
  std::vector<char> keep(orbits.size(), 0);
  std::ptrdiff_t count = static_cast<std::ptrdiff_t>(orbits.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    const RankTriangle& c = orbits[idx];
    keep[idx] = leq_triangle(base, c) && leq_triangle(base_dual, triangle_dual(c));
  }
  PrePacket pp{base, {}, false};
  for (std::size_t idx = 0; idx < orbits.size(); ++idx)
    if (keep[idx]) pp.members.push_back(orbits[idx]);
  pp.singleton = pp.members.size() == 1 && pp.members[0] == base;
  return pp;
}

PrePacket pre_packet(const RankTriangle& base) {
  return pre_packet(base, enumerate_orbits(base.support()));
}

PrePacket pre_packet_serial(const RankTriangle& base) {
  if (!validate(base)) throw InvalidTriangle("pre_packet: base fails rank constraints");
  RankTriangle base_dual = triangle_dual(base);
  PrePacket pp{base, {}, false};
  for (const RankTriangle& c : enumerate_orbits_serial(base.support()))
    if (leq_triangle(base, c) && leq_triangle(base_dual, triangle_dual(c)))
      pp.members.push_back(c);
  pp.singleton = pp.members.size() == 1 && pp.members[0] == base;
  return pp;
}

bool verify_main_lemma(const Multisegment& alpha) {
  if (!is_simple(alpha)) throw NotSimple("verify_main_lemma: multisegment is not simple");
  Multisegment alpha_dual = mw_dual(alpha);
  for (const auto& beta : upper_set(alpha)) {
    if (beta == alpha) continue;
    if (leq_oracle(alpha_dual, mw_dual(beta))) return false;
  }
  return true;
}

PrePacket packet_of_parameter(const ArthurParameter& p) {
  auto red = hyper_unramify(p);
  return pre_packet(
      multiseg_to_triangle(simple_arthur_multisegment(red.nr.d, red.nr.a)));
}

bool verify_theorem(int d, int a) {
  return pre_packet(multiseg_to_triangle(simple_arthur_multisegment(d, a))).singleton;
}

bool verify_theorem_irreducible(const ArthurParameter& p) {
  auto red = hyper_unramify(p);
  if (red.reduced_rank * p.m != p.rank()) return false;
  return verify_theorem(red.nr.d, red.nr.a);
}

}  // namespace zelpack
