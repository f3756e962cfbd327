#include <doctest.h>

#include "topolab/enumerate.hpp"
#include "topolab/verify.hpp"

using namespace topolab;

TEST_CASE("every theorem id parses, prints and has a checker") {
  const std::vector<TheoremId>& ids = all_theorems();
  CHECK(ids.size() == 29);
  for (TheoremId t : ids) {
    std::string name = theorem_name(t);
    auto back = parse_theorem(name);
    REQUIRE(back.has_value());
    CHECK(*back == t);
    CHECK(std::string(theorem_summary(t)).size() > 0);
    Bounds d = default_bounds(t);
    CHECK(d.max_x >= 1);
  }
  CHECK(!parse_theorem("sec9-nonsense").has_value());
}

TEST_CASE("verification runs at tiny bounds") {
  // every checker on one-point sweeps; fast smoke pass
  for (TheoremId t : all_theorems()) {
    Bounds b;
    b.max_x = 1;
    if (default_bounds(t).max_y > 0) b.max_y = 1;
    if (default_bounds(t).max_z > 0) b.max_z = 1;
    VerificationReport r = verify(t, b);
    CHECK(r.pass());
  }
}

TEST_CASE("a known equivalence suite passes at two points") {
  VerificationReport r = verify(TheoremId::Sec2LemmaEquiv, Bounds{2, 0, 2});
  CHECK(r.pass());
  CHECK(r.instances_checked == 25);  // five spaces squared
}

TEST_CASE("bounds above the limits are refused") {
  CHECK_THROWS_AS(verify(TheoremId::Sec2LemmaEquiv, Bounds{9, 0, 0}), Error);
  try {
    verify(TheoremId::Sec2LemmaEquiv, Bounds{9, 0, 0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}

TEST_CASE("reports are deterministic across worker counts") {
  VerificationReport one = verify(TheoremId::Sec4CompactSet, Bounds{2, 0, 2}, 1);
  VerificationReport four = verify(TheoremId::Sec4CompactSet, Bounds{2, 0, 2}, 4);
  CHECK(report_to_json(one).dump() == report_to_json(four).dump());

  VerificationReport again = verify(TheoremId::Sec4CompactSet, Bounds{2, 0, 2}, 1);
  CHECK(report_to_json(one).dump() == report_to_json(again).dump());
}

TEST_CASE("isomorphism reduction keeps one space per class") {
  // unlabeled topologies on 1..4 points
  CHECK(representative_topologies(1).size() == 1);
  CHECK(representative_topologies(2).size() == 3);
  CHECK(representative_topologies(3).size() == 9);
  CHECK(representative_topologies(4).size() == 33);

  // reduced sweeps still pass, over fewer instances
  VerificationReport full = verify(TheoremId::Sec2LemmaEquiv, Bounds{2, 0, 2}, 1, false);
  VerificationReport reduced = verify(TheoremId::Sec2LemmaEquiv, Bounds{2, 0, 2}, 1, true);
  CHECK(full.pass());
  CHECK(reduced.pass());
  CHECK(full.instances_checked == 25);    // five spaces squared
  CHECK(reduced.instances_checked == 16); // four representatives squared
}

TEST_CASE("wall time stays out of the canonical report") {
  VerificationReport r = verify(TheoremId::Sec8Sigma, Bounds{2, 0, 0});
  Json canonical = report_to_json(r);
  CHECK(!canonical.contains("wall_time_ms"));
  Json timed = report_to_json(r, true);
  CHECK(timed.contains("wall_time_ms"));
}

// A deliberately false claim, checked with the same sweep machinery the real
// checkers use: "every space with at most two points is discrete". Its
// counterexamples must re-validate through the module operations.
TEST_CASE("counterexamples re-validate through the module operations") {
  std::vector<Json> cex;
  for (const FiniteSpace& x : all_topologies(2)) {
    if (!diagonal_class(x).discrete) {
      Json j;
      j["claim"] = "all-two-point-spaces-discrete";
      j["x"] = space_to_json(x);
      cex.push_back(std::move(j));
    }
  }
  REQUIRE(cex.size() == 3);  // all but the discrete doubleton
  for (const Json& j : cex) {
    FiniteSpace x = space_from_json(j["x"]);
    CHECK(!diagonal_class(x).discrete);  // the violation reproduces
  }
}
