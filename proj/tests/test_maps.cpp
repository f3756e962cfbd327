#include <doctest.h>

#include "topolab/enumerate.hpp"
#include "topolab/function_space.hpp"
#include "topolab/maps.hpp"

using namespace topolab;

namespace {
PointSet pts(std::initializer_list<int> xs) { return PointSet::from_points(xs); }
}

TEST_CASE("map construction and the continuity witness") {
  FiniteSpace s = sierpinski();
  CHECK_NOTHROW(ContinuousMap::identity(s));
  CHECK_NOTHROW(ContinuousMap::constant(FiniteSpace::one_point(), s, 1));

  // the swap on the two-point chain is not continuous; witness {top}
  CHECK_THROWS_AS(ContinuousMap::make(s, s, {1, 0}), Error);
  auto w = continuity_witness(s, s, {1, 0});
  REQUIRE(w.has_value());
  CHECK(*w == pts({1}));

  CHECK_THROWS_AS(ContinuousMap::make(s, s, {0, 3}), Error);  // out of range
  CHECK_THROWS_AS(ContinuousMap::make(s, s, {0}), Error);     // not total
}

TEST_CASE("image, preimage, fiber") {
  FiniteSpace s = sierpinski();
  ContinuousMap id = ContinuousMap::identity(s);
  CHECK(id.image(pts({0})) == pts({0}));
  CHECK(id.preimage(pts({1})) == pts({1}));

  ContinuousMap c = ContinuousMap::constant(FiniteSpace::discrete(2), s, 1);
  CHECK(c.fiber(1) == pts({0, 1}));
  CHECK(c.fiber(0) == pts({}));

  SpaceProduct ss = product(s, s);
  CHECK(ss.proj_left.preimage(pts({1})) == pts({2, 3}));  // {top} x full
  CHECK(ss.proj_left.image(pts({0})) == pts({0}));
}

TEST_CASE("projections of products are continuous") {
  for (const FiniteSpace& x : all_topologies(2))
    for (const FiniteSpace& y : all_topologies(2)) {
      SpaceProduct p = product(x, y);
      CHECK(p.proj_left.dom() == p.space);
      CHECK(p.proj_right.cod() == y);
    }
}

TEST_CASE("closed-map decisions") {
  FiniteSpace s = sierpinski();
  CHECK(is_closed_map(ContinuousMap::identity(s)));

  // constant top from the one-point space: image of the full (closed) set is
  // {top}, which is not closed
  ContinuousMap c = ContinuousMap::constant(FiniteSpace::one_point(), s, 1);
  CHECK(!is_closed_map(c));

  // any map into a one-point space is closed
  ContinuousMap bang = ContinuousMap::constant(s, FiniteSpace::one_point(), 0);
  CHECK(is_closed_map(bang));
}

TEST_CASE("product with the identity") {
  FiniteSpace s = sierpinski();
  FiniteSpace one = FiniteSpace::one_point();

  ContinuousMap f = ContinuousMap::constant(one, s, 1);
  ContinuousMap lifted = product_with_identity(one, f);
  CHECK(lifted.dom() == product_space(one, one));
  CHECK(lifted.graph() == std::vector<int>{1});

  ContinuousMap idlift = product_with_identity(s, ContinuousMap::identity(s));
  CHECK(idlift.graph() == std::vector<int>{0, 1, 2, 3});

  // embedding z -> (z, top) is not closed
  ContinuousMap emb = product_with_identity(s, f);
  CHECK(!is_closed_map(emb));
}

TEST_CASE("properness on the named examples") {
  FiniteSpace s = sierpinski();

  ProperVerdict v1 = is_proper(ContinuousMap::identity(s), 3);
  CHECK(v1.agree());
  CHECK(v1.criteria[0]);

  ProperVerdict v2 = is_proper(ContinuousMap::constant(FiniteSpace::one_point(), s, 1), 3);
  CHECK(v2.agree());
  CHECK(!v2.criteria[0]);
  CHECK(!v2.criteria[4]);

  // compact domain, Hausdorff codomain: proper
  ProperVerdict v3 =
      is_proper(ContinuousMap::constant(FiniteSpace::discrete(2), FiniteSpace::discrete(2), 0), 3);
  CHECK(v3.agree());
  CHECK(v3.criteria[0]);
}

TEST_CASE("criterion one at a one-point test space is closedness") {
  for (const FiniteSpace& x : all_topologies(2))
    for (const FiniteSpace& y : all_topologies(2))
      for (const std::vector<int>& g : continuous_graphs(x, y)) {
        ContinuousMap f = ContinuousMap::make(x, y, g);
        ProperVerdict v = is_proper(f, 1);
        CHECK(v.criteria[0] == is_closed_map(f));
      }
}

TEST_CASE("preimage is a lattice morphism; image preserves unions only") {
  FiniteSpace s = sierpinski();
  FiniteSpace d2 = FiniteSpace::discrete(2);
  bool image_intersection_always_equal = true;
  for (const std::vector<int>& g : continuous_graphs(d2, s)) {
    ContinuousMap f = ContinuousMap::make(d2, s, g);
    for (int am = 0; am < 4; ++am)
      for (int bm = 0; bm < 4; ++bm) {
        PointSet a = PointSet::from_word(static_cast<std::uint64_t>(am));
        PointSet b = PointSet::from_word(static_cast<std::uint64_t>(bm));
        CHECK(f.preimage(a | b) == (f.preimage(a) | f.preimage(b)));
        CHECK(f.preimage(a & b) == (f.preimage(a) & f.preimage(b)));
        CHECK(f.image(a | b) == (f.image(a) | f.image(b)));
        CHECK(f.image(a & b).subset_of(f.image(a) & f.image(b)));
        if (f.image(a & b) != (f.image(a) & f.image(b)))
          image_intersection_always_equal = false;
      }
  }
  CHECK(!image_intersection_always_equal);  // the constant map breaks it
}

TEST_CASE("continuous graph enumeration is canonical") {
  FiniteSpace s = sierpinski();
  std::vector<std::vector<int>> maps = continuous_graphs(s, s);
  REQUIRE(maps.size() == 3);
  CHECK(maps[0] == std::vector<int>{0, 0});
  CHECK(maps[1] == std::vector<int>{0, 1});
  CHECK(maps[2] == std::vector<int>{1, 1});
}
