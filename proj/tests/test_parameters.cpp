#include "zelpack/parameters.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace zptest;

TEST_CASE("infinitesimal support") {
  Support s11 = infinitesimal_support(1, 1);
  CHECK(s11.exponents == std::vector<HalfInt>{W(1), W(0), W(-1)});
  CHECK(s11.mults == std::vector<int>{1, 2, 1});

  Support s21 = infinitesimal_support(2, 1);
  CHECK(s21.exponents == std::vector<HalfInt>{H(3), H(1), H(-1), H(-3)});
  CHECK(s21.mults == std::vector<int>{1, 2, 2, 1});

  CHECK(infinitesimal_support(0, 0).mults == std::vector<int>{1});
  CHECK(infinitesimal_support(4, 0).mults == std::vector<int>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(infinitesimal_support(-1, 0), Error);
}

TEST_CASE("multiplicities count lattice pairs and sum to the rank") {
  for (int d = 0; d <= 6; ++d)
    for (int a = 0; a <= 6; ++a) {
      Support s = infinitesimal_support(d, a);
      CHECK(s.total() == (d + 1) * (a + 1));
      for (int t = 0; t <= d + a; ++t) {
        int pairs = 0;
        for (int i = 0; i <= d; ++i)
          for (int j = 0; j <= a; ++j)
            if (i + j == t) ++pairs;
        CHECK(s.mults[t] == pairs);
      }
    }
}

TEST_CASE("vogan shape") {
  VoganShape v = vogan_shape(infinitesimal_support(1, 1));
  CHECK(v.hom_dims == std::vector<long long>{2, 2});
  CHECK(v.dim_v == 4);
  CHECK(v.h_factors == std::vector<int>{1, 2, 1});

  VoganShape deep = vogan_shape(infinitesimal_support(2, 2));
  CHECK(deep.h_factors == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(deep.dim_v == 2 + 6 + 6 + 2);
  CHECK(vogan_shape(Support{}).dim_v == 0);
}

TEST_CASE("arthur staircases") {
  CHECK(simple_arthur_multisegment(1, 1) == ms({seg(-1, 0), seg(0, 1)}));
  CHECK(simple_arthur_multisegment(2, 1) ==
        Multisegment({Segment(H(-3), H(1)), Segment(H(-1), H(3))}));
  CHECK(simple_arthur_multisegment(0, 0) == ms({seg(0, 0)}));
  CHECK(simple_arthur_multisegment(3, 0) == Multisegment({Segment(H(-3), H(3))}));
  for (int d = 0; d <= 5; ++d)
    for (int a = 0; a <= 5; ++a) {
      Multisegment alpha = simple_arthur_multisegment(d, a);
      CHECK(is_simple(alpha));
      CHECK(support_of(alpha) == infinitesimal_support(d, a));
    }
}

TEST_CASE("hat swaps the two factors") {
  ArthurParameter p{2, 3, 1, "rho"};
  ArthurParameter q = arthur_hat(p);
  CHECK(q == ArthurParameter{2, 1, 3, "rho"});
  CHECK(arthur_hat(q) == p);
  CHECK(q.rank() == p.rank());
}

TEST_CASE("unramified reduction") {
  ArthurParameter p{3, 2, 1, "rho"};
  CHECK(p.rank() == 18);
  CHECK_FALSE(p.simple());
  auto red = hyper_unramify(p);
  CHECK(red.reduced_rank == 6);
  CHECK(red.nr == ArthurParameter{1, 2, 1, ""});
  CHECK(red.nr.simple());
  CHECK(red.reduced_rank * p.m == p.rank());
  CHECK_THROWS_AS(hyper_unramify(ArthurParameter{0, 1, 1, ""}), Error);
}

TEST_CASE("twist translation keeps endpoints and changes rendering only") {
  Multisegment a = ms({seg(-1, 0), seg(0, 1)});
  CHECK(translate_segments(a, "rho", TwistDirection::to_unramified) == a);
  CHECK(translate_segments(a, "rho", TwistDirection::from_unramified) == a);
  CHECK(render_multisegment(a, "") == "{[0,1],[-1,0]}");
  CHECK(render_segment(seg(0, 1), "rho") == "[π_rho(0),π_rho(1)]");
  CHECK(render_segment(seg(2, 2), "rho") == "[π_rho(2)]");
}
