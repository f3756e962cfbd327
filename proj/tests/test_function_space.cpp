#include <doctest.h>

#include "topolab/enumerate.hpp"
#include "topolab/function_space.hpp"

using namespace topolab;

namespace {
PointSet pts(std::initializer_list<int> xs) { return PointSet::from_points(xs); }
}

TEST_CASE("the two-point classifier") {
  FiniteSpace s = sierpinski();
  CHECK(s.points() == 2);
  CHECK(s.opens() == std::vector<PointSet>{pts({}), pts({1}), pts({0, 1})});
  CHECK(s.leq(0, 1));

  // characteristic maps of opens are continuous, of non-opens are not
  for (const FiniteSpace& x : all_topologies(3)) {
    for (int m = 0; m < 8; ++m) {
      PointSet a = PointSet::from_word(static_cast<std::uint64_t>(m));
      std::vector<int> chi(3, 0);
      a.for_each([&](int p) { chi[static_cast<std::size_t>(p)] = 1; });
      CHECK(is_continuous_graph(x, s, chi) == x.is_open(a));
    }
  }
}

TEST_CASE("self-exponential of the classifier") {
  FunctionSpace fs = exponential(sierpinski(), sierpinski());
  REQUIRE(fs.graphs.size() == 3);  // constant bot, identity, constant top
  CHECK(fs.graphs[0] == std::vector<int>{0, 0});
  CHECK(fs.graphs[1] == std::vector<int>{0, 1});
  CHECK(fs.graphs[2] == std::vector<int>{1, 1});
  // three-element chain: up-sets are the four opens
  CHECK(fs.space.open_count() == 4);
  CHECK(fs.space.leq(0, 1));
  CHECK(fs.space.leq(1, 2));
  CHECK(!fs.space.leq(1, 0));
}

TEST_CASE("degenerate exponentials") {
  FiniteSpace s = sierpinski();
  FunctionSpace from_point = exponential(FiniteSpace::one_point(), s);
  CHECK(from_point.graphs.size() == 2);
  CHECK(from_point.space == s);  // maps from a point are the points

  FunctionSpace to_point = exponential(s, FiniteSpace::one_point());
  CHECK(to_point.graphs.size() == 1);
  CHECK(to_point.space == FiniteSpace::one_point());
}

TEST_CASE("evaluation and transposes at small scale") {
  for (const FiniteSpace& x : all_topologies(2))
    for (const FiniteSpace& y : all_topologies(2)) {
      FunctionSpace fs = exponential(x, y);
      CHECK_NOTHROW(evaluation_map(fs));
      for (const FiniteSpace& z : all_topologies(2)) {
        FiniteSpace zx = product_space(z, x);
        for (const std::vector<int>& h : continuous_graphs(zx, y)) {
          std::vector<int> tg = transpose_graph(fs, z, h);
          CHECK(is_continuous_graph(z, fs.space, tg));
        }
      }
    }
}

TEST_CASE("the opens space is the transported exponential") {
  OpensSpace one = sierpinski_exponential_as_opens(FiniteSpace::one_point());
  CHECK(one.space == sierpinski());  // two opens ordered by inclusion

  OpensSpace chain = sierpinski_exponential_as_opens(sierpinski());
  REQUIRE(chain.space.points() == 3);
  CHECK(chain.space.leq(0, 1));
  CHECK(chain.space.leq(1, 2));
  CHECK(chain.space.open_count() == 4);
  CHECK(chain.decode == std::vector<PointSet>{pts({}), pts({1}), pts({0, 1})});

  // membership {(U, p) : p in U} is open in the product
  for (const FiniteSpace& x : all_topologies(3)) {
    OpensSpace os = sierpinski_exponential_as_opens(x);
    FiniteSpace prod = product_space(os.space, x);
    PointSet member;
    for (std::size_t i = 0; i < os.decode.size(); ++i)
      os.decode[i].for_each(
          [&](int p) { member.set(pair_index(static_cast<int>(i), p, x.points())); });
    CHECK(prod.is_open(member));
  }
}

TEST_CASE("universal quantifiers") {
  FiniteSpace s = sierpinski();
  FunctionSpace ss = exponential(s, s);

  ContinuousMap a_empty = universal_quantifier(ss, pts({}));
  CHECK(a_empty.graph() == std::vector<int>{1, 1, 1});  // constant top

  ContinuousMap a_full = universal_quantifier(ss, s.full());
  // top only for the constant-top map
  CHECK(a_full.graph() == std::vector<int>{0, 0, 1});

  // preimage of top matches {U : q within U} along characteristic maps
  OpensSpace os = sierpinski_exponential_as_opens(s);
  PointSet pre = a_full.preimage(pts({1}));
  PointSet uq;
  for (std::size_t i = 0; i < os.decode.size(); ++i)
    if (s.full().subset_of(os.decode[i])) uq.set(static_cast<int>(i));
  // both say: only the full open
  CHECK(pre == pts({2}));
  CHECK(uq == pts({2}));
}

TEST_CASE("subbasic opens") {
  FiniteSpace s = sierpinski();
  FunctionSpace ss = exponential(s, s);
  CHECK(subbasic_open(ss, pts({}), pts({1})) == ss.space.full());
  CHECK(subbasic_open(ss, s.full(), s.full()) == ss.space.full());
  // maps sending bot to top: only the constant top
  CHECK(subbasic_open(ss, pts({0}), pts({1})) == pts({2}));
  CHECK(ss.space.is_open(subbasic_open(ss, pts({0}), pts({1}))));
  CHECK_THROWS_AS(subbasic_open(ss, pts({0}), pts({0})), Error);  // {bot} not open
}
