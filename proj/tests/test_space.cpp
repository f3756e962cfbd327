#include <doctest.h>

#include <algorithm>

#include "topolab/enumerate.hpp"
#include "topolab/function_space.hpp"
#include "topolab/space.hpp"

using namespace topolab;

namespace {

PointSet pts(std::initializer_list<int> xs) { return PointSet::from_points(xs); }

// Independent oracles used to freeze expected values: interiors and closures
// by scanning the full open family, products by closing the set of open
// boxes under union.
PointSet interior_by_scan(const FiniteSpace& x, const PointSet& a) {
  PointSet out;
  for (const PointSet& u : x.opens())
    if (u.subset_of(a)) out |= u;
  return out;
}

PointSet closure_by_scan(const FiniteSpace& x, const PointSet& a) {
  PointSet out = x.full();
  for (const PointSet& c : x.closed_sets())
    if (a.subset_of(c) && c.subset_of(out)) out = c;
  return out;
}

std::vector<PointSet> product_opens_by_boxes(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<PointSet> boxes;
  for (const PointSet& u : x.opens())
    for (const PointSet& v : y.opens()) {
      PointSet box;
      u.for_each([&](int a) { box.or_shifted(v, a * y.points()); });
      boxes.push_back(box);
    }
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  // close under unions until stable
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = boxes.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        PointSet un = boxes[i] | boxes[j];
        if (!std::binary_search(boxes.begin(), boxes.end(), un)) {
          boxes.insert(std::lower_bound(boxes.begin(), boxes.end(), un), un);
          grew = true;
        }
      }
  }
  return boxes;
}

}  // namespace

TEST_CASE("make_space accepts the two-point chain and rejects non-topologies") {
  FiniteSpace s = make_space(2, {pts({}), pts({1}), pts({0, 1})});
  CHECK(s.points() == 2);
  CHECK(s.open_count() == 3);
  CHECK(s == sierpinski());

  FiniteSpace one = make_space(1, {pts({}), pts({0})});
  CHECK(one.open_count() == 2);

  CHECK_THROWS_AS(make_space(2, {pts({}), pts({0}), pts({1})}), Error);  // full set missing
  try {
    make_space(2, {pts({}), pts({0}), pts({1})});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATopology);
  }
  CHECK_THROWS_AS(make_space(2, {pts({}), pts({2}), pts({0, 1})}), Error);  // out of range
  // union of {0} and {1} missing
  CHECK_THROWS_AS(make_space(3, {pts({}), pts({0}), pts({1}), pts({0, 1, 2})}), Error);
}

TEST_CASE("specialization preorder of the basic spaces") {
  FiniteSpace s = sierpinski();
  SpacePreorder p = specialization_preorder(s);
  CHECK(p.leq(0, 1));   // bot below top
  CHECK(!p.leq(1, 0));

  SpacePreorder d = specialization_preorder(FiniteSpace::discrete(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(d.leq(a, b) == (a == b));

  SpacePreorder i = specialization_preorder(FiniteSpace::indiscrete(2));
  CHECK(i.leq(0, 1));
  CHECK(i.leq(1, 0));
}

TEST_CASE("from_preorder gives the up-set topology") {
  // two-element chain
  SpacePreorder chain{2, {pts({0, 1}), pts({1})}};
  CHECK(from_preorder(chain) == sierpinski());

  // antichain of three: discrete, eight opens
  SpacePreorder anti{3, {pts({0}), pts({1}), pts({2})}};
  FiniteSpace d = from_preorder(anti);
  CHECK(d.open_count() == 8);
  CHECK(d == FiniteSpace::discrete(3));

  // total preorder on two points: indiscrete
  SpacePreorder total{2, {pts({0, 1}), pts({0, 1})}};
  CHECK(from_preorder(total) == FiniteSpace::indiscrete(2));
}

TEST_CASE("interior and closure on the named examples") {
  FiniteSpace s = sierpinski();
  CHECK(s.interior(pts({1})) == pts({1}));
  CHECK(s.closure(pts({1})) == pts({0, 1}));
  CHECK(s.interior(s.full()) == s.full());
  CHECK(s.closure(s.full()) == s.full());

  FiniteSpace ind = FiniteSpace::indiscrete(2);
  CHECK(ind.interior(pts({0})) == pts({}));
  CHECK(ind.closure(pts({0})) == ind.full());

  CHECK_THROWS_AS(s.interior(pts({5})), Error);
}

TEST_CASE("interior/closure laws against the scanning oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSpace& x : all_topologies(n)) {
      for (int m = 0; m < (1 << n); ++m) {
        PointSet a = PointSet::from_word(static_cast<std::uint64_t>(m));
        PointSet in = x.interior(a);
        PointSet cl = x.closure(a);
        CHECK(in == interior_by_scan(x, a));
        CHECK(cl == closure_by_scan(x, a));
        CHECK(x.interior(in) == in);
        CHECK(x.closure(cl) == cl);
        CHECK(in.subset_of(a));
        CHECK(a.subset_of(cl));
        CHECK(cl == x.interior(a.complement_in(n)).complement_in(n));
      }
    }
  }
}

TEST_CASE("minimal open neighbourhoods") {
  FiniteSpace s = sierpinski();
  CHECK(s.min_open_nbhd(pts({0})) == pts({0, 1}));
  CHECK(s.min_open_nbhd(pts({})) == pts({}));
  FiniteSpace d = FiniteSpace::discrete(3);
  CHECK(d.min_open_nbhd(pts({0, 2})) == pts({0, 2}));
}

TEST_CASE("products: named examples and the box-closure oracle") {
  FiniteSpace s = sierpinski();
  FiniteSpace one = FiniteSpace::one_point();

  CHECK(product_space(one, s) == s);  // unit law under the pair encoding

  FiniteSpace ss = product_space(s, s);
  CHECK(ss.points() == 4);
  CHECK(ss.open_count() == 6);

  FiniteSpace dd = product_space(FiniteSpace::discrete(2), FiniteSpace::discrete(2));
  CHECK(dd == FiniteSpace::discrete(4));
  CHECK(dd.open_count() == 16);

  for (int nx = 1; nx <= 2; ++nx)
    for (int ny = 1; ny <= 2; ++ny)
      for (const FiniteSpace& x : all_topologies(nx))
        for (const FiniteSpace& y : all_topologies(ny)) {
          FiniteSpace p = product_space(x, y);
          CHECK(p.opens() == product_opens_by_boxes(x, y));
        }
}

TEST_CASE("product associativity under the fixed encoding") {
  for (const FiniteSpace& x : all_topologies(2))
    for (const FiniteSpace& y : all_topologies(2)) {
      FiniteSpace z = sierpinski();
      CHECK(product_space(product_space(x, y), z) == product_space(x, product_space(y, z)));
    }
}

TEST_CASE("subspaces") {
  FiniteSpace s = sierpinski();
  CHECK(subspace(s, pts({1})) == FiniteSpace::one_point());
  CHECK(subspace(s, pts({0})) == FiniteSpace::one_point());
  CHECK(subspace(s, s.full()) == s);
}

TEST_CASE("diagonal classification") {
  DiagonalClass d3 = diagonal_class(FiniteSpace::discrete(3));
  CHECK(d3.hausdorff);
  CHECK(d3.discrete);

  DiagonalClass si = diagonal_class(sierpinski());
  CHECK(!si.hausdorff);
  CHECK(!si.discrete);

  DiagonalClass in = diagonal_class(FiniteSpace::indiscrete(2));
  CHECK(!in.hausdorff);
  CHECK(!in.discrete);
}

TEST_CASE("the two enumeration oracles agree and match the known counts") {
  const std::uint64_t expected[] = {0, 1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t families = count_topologies_by_family_filter(n);
    std::uint64_t preorders = count_preorders(n);
    CHECK(families == expected[n]);
    CHECK(preorders == expected[n]);
  }
  CHECK(count_topologies(5) == 6942);
  CHECK_THROWS_AS(all_topologies(5), Error);
}

TEST_CASE("every enumerated space round-trips through its preorder") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& x : all_topologies(n)) {
      CHECK(from_preorder(specialization_preorder(x)) == x);
      DiagonalClass d = diagonal_class(x);
      CHECK(d.hausdorff == d.discrete);
    }
}

TEST_CASE("preorder enumeration matches the enumerated spaces setwise") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<FiniteSpace> via_preorders;
    for (const SpacePreorder& p : all_preorders(n)) via_preorders.push_back(from_preorder(p));
    std::vector<FiniteSpace> direct = all_topologies(n);
    CHECK(via_preorders.size() == direct.size());
    for (const FiniteSpace& x : direct)
      CHECK(std::count(via_preorders.begin(), via_preorders.end(), x) == 1);
  }
}

TEST_CASE("enumeration restarts from a cursor") {
  TopologyEnumerator full(2);
  std::vector<std::uint64_t> cursors;
  std::vector<FiniteSpace> spaces;
  while (true) {
    auto x = full.next();
    if (!x) break;
    spaces.push_back(*x);
    cursors.push_back(full.cursor());
  }
  REQUIRE(spaces.size() == 4);
  TopologyEnumerator resumed(2, cursors[1]);
  auto x = resumed.next();
  REQUIRE(x.has_value());
  CHECK(*x == spaces[2]);
}
