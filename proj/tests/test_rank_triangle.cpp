#include "zelpack/rank_triangle.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace zptest;

namespace {

RankTriangle tri(const std::vector<int>& mults, std::vector<std::vector<int>> rows) {
  return RankTriangle(centered_support(mults), std::move(rows));
}

}  // namespace

TEST_CASE("construction checks shape, not the rank constraints") {
  CHECK_NOTHROW(tri({1, 2, 1}, {{1, 1}, {0}}));
  CHECK_NOTHROW(tri({1, 2, 1}, {{1, 0}, {1}}));  // invalid ranks still materialize
  CHECK(RankTriangle(centered_support({1, 2, 1})).rank_rows() ==
        std::vector<std::vector<int>>{{0, 0}, {0}});
  CHECK_THROWS_AS(tri({1, 2, 1}, {{1, 1}}), InvalidTriangle);
  CHECK_THROWS_AS(tri({1, 2, 1}, {{1}, {0}}), InvalidTriangle);
  CHECK_THROWS_AS(tri({1, 2, 1}, {{1, -1}, {0}}), InvalidTriangle);
  CHECK_NOTHROW(RankTriangle(Support{}));
  CHECK_NOTHROW(tri({3}, {}));
}

TEST_CASE("validate") {
  CHECK(validate(tri({1, 2, 1}, {{1, 1}, {1}})));
  CHECK(validate(tri({1, 2, 1}, {{1, 1}, {0}})));
  // a deep rank above one of its parents
  CHECK_FALSE(validate(tri({1, 2, 1}, {{1, 0}, {1}})));
  // an adjacent rank above the neighbouring multiplicities
  CHECK_FALSE(validate(tri({1, 2, 1}, {{2, 1}, {0}})));
  // parents fine, Frobenius exchange violated: r31 + r20 > r30 + r21
  CHECK_FALSE(validate(tri({1, 1, 1, 1}, {{1, 1, 1}, {1, 1}, {0}})));
  CHECK(validate(tri({1, 1, 1, 1}, {{1, 1, 1}, {1, 1}, {1}})));
  CHECK(validate(RankTriangle(Support{})));
  CHECK(validate(tri({4}, {})));
}

TEST_CASE("indicator triangle of one segment") {
  Support s = centered_support({1, 2, 1});  // exponents 1, 0, -1
  RankTriangle t = triangle_of_segment(seg(-1, 0), s);
  CHECK(t.support().mults == std::vector<int>{0, 1, 1});
  CHECK(t.rank_rows() == std::vector<std::vector<int>>{{1, 0}, {0}});
  RankTriangle full = triangle_of_segment(seg(-1, 1), s);
  CHECK(full.support().mults == std::vector<int>{1, 1, 1});
  CHECK(full.rank_rows() == std::vector<std::vector<int>>{{1, 1}, {1}});
  CHECK_THROWS_AS(triangle_of_segment(seg(-2, 0), s), SegmentOutsideSupport);
  CHECK_THROWS_AS(triangle_of_segment(Segment(H(1), H(1)), s), SegmentOutsideSupport);
}

TEST_CASE("the five orbits of the rank-4 support") {
  Support s = centered_support({1, 2, 1});
  auto pairs = std::vector<std::pair<Multisegment, std::vector<std::vector<int>>>>{
      {ms({seg(1, 1), seg(0, 0), seg(0, 0), seg(-1, -1)}), {{0, 0}, {0}}},
      {ms({seg(0, 1), seg(0, 0), seg(-1, -1)}), {{0, 1}, {0}}},
      {ms({seg(1, 1), seg(0, 0), seg(-1, 0)}), {{1, 0}, {0}}},
      {ms({seg(0, 1), seg(-1, 0)}), {{1, 1}, {0}}},
      {ms({seg(-1, 1), seg(0, 0)}), {{1, 1}, {1}}},
  };
  for (const auto& [a, rows] : pairs) {
    RankTriangle t(s, rows);
    CHECK(multiseg_to_triangle(a) == t);
    CHECK(triangle_to_multiseg(t) == a);
  }
}

TEST_CASE("extraction pulls the deepest band first") {
  // mults (1,2,1) with ranks r21=1, r10=1, r20=0 splits into [-1,0] and [0,1]
  RankTriangle t = tri({1, 2, 1}, {{1, 1}, {0}});
  CHECK(triangle_to_multiseg(t) == ms({seg(-1, 0), seg(0, 1)}));
  CHECK_THROWS_AS(triangle_to_multiseg(tri({1, 2, 1}, {{1, 0}, {1}})), InvalidTriangle);
}

TEST_CASE("conversion respects an explicitly given chain") {
  Support wide = centered_support({0, 2, 0});  // exponents 1, 0, -1
  Multisegment a = ms({seg(0, 0), seg(0, 0)});
  RankTriangle t = multiseg_to_triangle(a, wide);
  CHECK(t.support() == wide);
  CHECK(triangle_to_multiseg(t) == a);
  CHECK_THROWS_AS(multiseg_to_triangle(ms({seg(0, 1), seg(0, 0)}), wide), SupportMismatch);
  CHECK_THROWS_AS(multiseg_to_triangle(ms({seg(-3, 0)}), wide), SegmentOutsideSupport);
}

TEST_CASE("triangle order") {
  RankTriangle closed = tri({1, 2, 1}, {{0, 0}, {0}});
  RankTriangle sub = tri({1, 2, 1}, {{1, 1}, {0}});
  RankTriangle open = tri({1, 2, 1}, {{1, 1}, {1}});
  CHECK(leq_triangle(closed, open));
  CHECK(leq_triangle(sub, open));
  CHECK(leq_triangle(sub, sub));
  CHECK_FALSE(leq_triangle(open, sub));
  CHECK_FALSE(leq_triangle(sub, closed));
  CHECK_THROWS_AS((void)leq_triangle(closed, tri({1, 1}, {{1}})), SupportMismatch);
}

TEST_CASE("triangle dual") {
  RankTriangle closed = tri({1, 2, 1}, {{0, 0}, {0}});
  RankTriangle sub = tri({1, 2, 1}, {{1, 1}, {0}});
  RankTriangle open = tri({1, 2, 1}, {{1, 1}, {1}});
  CHECK(triangle_dual(closed) == open);
  CHECK(triangle_dual(open) == closed);
  CHECK(triangle_dual(sub) == sub);
  CHECK(triangle_dual(tri({1, 2, 1}, {{1, 0}, {0}})) == tri({1, 2, 1}, {{0, 1}, {0}}));
  // ends with multiplicity zero survive the round trip
  RankTriangle padded = tri({0, 2, 0}, {{0, 0}, {0}});
  CHECK(triangle_dual(padded).support() == padded.support());
  CHECK_THROWS_AS(triangle_dual(tri({1, 2, 1}, {{1, 0}, {1}})), InvalidTriangle);
}
