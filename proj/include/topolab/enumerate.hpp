#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

// Exhaustive enumeration limits. All topologies on up to kEnumerateMax
// labeled points can be streamed; one point more is supported for counting
// only (via the preorder bijection).
inline constexpr int kEnumerateMax = 4;
inline constexpr int kCountOnlyMax = 5;

// Streams every topology on n labeled points exactly once, ordered by the
// bitmask of the open family (bit s set iff the subset with mask s is open).
// Restartable: construction may resume from any family-mask cursor.
class TopologyEnumerator {
 public:
  explicit TopologyEnumerator(int n, std::uint64_t start_cursor = 0);

  std::optional<FiniteSpace> next();

  std::uint64_t cursor() const { return cursor_; }

 private:
  int n_;
  std::uint64_t cursor_;
  std::uint64_t limit_;
};

// All topologies on n labeled points, canonical order (n <= kEnumerateMax).
std::vector<FiniteSpace> all_topologies(int n);

// Brute-force oracle: count subset families satisfying the topology axioms.
std::uint64_t count_topologies_by_family_filter(int n);

// Independent oracle: preorders on n labeled points (reflexive transitive
// relation matrices, enumerated in canonical matrix order).
std::vector<SpacePreorder> all_preorders(int n);
std::uint64_t count_preorders(int n);

// Counting front-end: family filter for n <= kEnumerateMax, preorder
// bijection for n = kCountOnlyMax.
std::uint64_t count_topologies(int n);

// Up-sets of a preorder given as up-masks over <= 64 elements, sorted
// ascending by mask value. up[i] must contain i and be transitively closed.
std::vector<std::uint64_t> upset_masks(const std::vector<std::uint64_t>& up);

}  // namespace topolab
