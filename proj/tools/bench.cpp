// Timing comparison of the OpenMP kernels against their serial reference
// implementations: orbit enumeration and pre-packet filtering on growing
// eigenvalue supports. Results are checked for equality as they are timed,
// so the benchmark doubles as a stress test.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "zelpack/packets.hpp"
#include "zelpack/parallel.hpp"

using namespace zelpack;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int max = 8;
  if (argc > 1) max = std::atoi(argv[1]);
  std::printf("threads: %d\n", max_jobs());
  std::printf("%-8s %10s %14s %14s %9s %14s %14s %9s\n", "(d,a)", "orbits", "enum serial",
              "enum parallel", "speedup", "filter serial", "filter parallel", "speedup");

  bool mismatch = false;
  for (int d = 1; d <= max / 2; ++d) {
    int a = max - d;
    if (a < d) break;  // (d,a) and (a,d) give the same sizes
    Support s = infinitesimal_support(d, a);
    RankTriangle base = multiseg_to_triangle(simple_arthur_multisegment(d, a), s);
    RankTriangle base_dual = triangle_dual(base);

    std::vector<RankTriangle> serial, parallel;
    double es = time_ms([&] { serial = enumerate_orbits_serial(s); });
    double ep = time_ms([&] { parallel = enumerate_orbits(s); });
    if (serial != parallel) mismatch = true;

    // filter stage alone, on the shared orbit list
    std::vector<RankTriangle> members;
    double fs = time_ms([&] {
      for (const RankTriangle& c : serial)
        if (leq_triangle(base, c) && leq_triangle(base_dual, triangle_dual(c)))
          members.push_back(c);
    });
    PrePacket pp{base, {}, false};
    double fp = time_ms([&] { pp = pre_packet(base, parallel); });
    if (members != pp.members) mismatch = true;

    std::printf("(%d,%d)%*s %10zu %12.1fms %12.1fms %8.2fx %12.1fms %12.1fms %8.2fx%s\n", d, a,
                d > 9 || a > 9 ? 1 : 3, "", serial.size(), es, ep, es / (ep > 0 ? ep : 1e-9),
                fs, fp, fs / (fp > 0 ? fp : 1e-9), mismatch ? "  MISMATCH" : "");
  }
  if (mismatch) {
    std::printf("parallel and serial kernels disagree\n");
    return 1;
  }
  std::printf("parallel results identical to serial reference\n");
  return 0;
}
