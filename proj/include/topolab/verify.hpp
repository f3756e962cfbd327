#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topolab/json_io.hpp"

namespace topolab {

// One checker per verified claim. The sec<k>- prefixes group the built-in
// catalog; `verify --all` runs every entry.
enum class TheoremId {
  Sec2Intersection,
  Sec2Universal,
  Sec2LemmaEquiv,
  Sec3Exponential,
  Sec3Quantifier,
  Sec4Indexed,
  Sec4Witness,
  Sec4CompactSet,
  Sec5P1,
  Sec5P2,
  Sec5P3,
  Sec5P4,
  Sec5P5,
  Sec5P6,
  Sec5P7,
  Sec6Proper,
  Sec6ClosedReform,
  Sec6CompactHausdorffProper,
  Sec7WaybelowEquiv,
  Sec7C1,
  Sec7C2,
  Sec7C3,
  Sec7C4,
  Sec8OpensLemma,
  Sec8ProdCharac,
  Sec8CCompact,
  Sec8Projection,
  Sec8CompactCoincide,
  Sec8Sigma,
};

const char* theorem_name(TheoremId t);
std::optional<TheoremId> parse_theorem(const std::string& name);
const std::vector<TheoremId>& all_theorems();

// A short statement of what the checker sweeps.
const char* theorem_summary(TheoremId t);

struct Bounds {
  int max_x = 0;  // 0 picks the checker default
  int max_y = 0;
  int max_z = 0;
};

Bounds default_bounds(TheoremId t);
Bounds limit_bounds(TheoremId t);

struct VerificationReport {
  TheoremId theorem{};
  Bounds bounds{};
  std::uint64_t instances_checked = 0;
  std::vector<Json> counterexamples;  // canonical order
  std::chrono::milliseconds wall_time{0};

  bool pass() const { return counterexamples.empty(); }
};

// Canonical serialization. Wall time is volatile and therefore excluded
// unless explicitly requested; reports are byte-identical across reruns and
// worker counts.
Json report_to_json(const VerificationReport& r, bool include_time = false);

// iso_reduce restricts the space sweeps to one representative per
// homeomorphism class (the claims are all invariant under relabeling); it is
// an optimization, off by default, and labeled sweeps remain the canonical
// reports.
VerificationReport verify(TheoremId t, Bounds bounds = {}, int workers = 1,
                          bool iso_reduce = false);
std::vector<VerificationReport> verify_all(int workers = 1, bool iso_reduce = false);

// One lexicographically least representative per homeomorphism class.
std::vector<FiniteSpace> representative_topologies(int n);

}  // namespace topolab
