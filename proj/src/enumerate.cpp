#include "topolab/enumerate.hpp"

#include <algorithm>
#include <bit>

namespace topolab {

namespace {

// A family mask over the 2^n subsets of {0..n-1} describes a topology iff it
// contains the empty and full subsets and is closed under pairwise union and
// intersection.
bool family_is_topology(std::uint64_t fam, int n) {
  int subsets = 1 << n;
  std::uint64_t fullbit = 1ull << (subsets - 1);
  if (!(fam & 1ull) || !(fam & fullbit)) return false;
  std::vector<int> members;
  for (int s = 0; s < subsets; ++s)
    if ((fam >> s) & 1u) members.push_back(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!((fam >> (members[i] | members[j])) & 1u)) return false;
      if (!((fam >> (members[i] & members[j])) & 1u)) return false;
    }
  return true;
}

FiniteSpace space_from_family_mask(std::uint64_t fam, int n) {
  std::vector<PointSet> opens;
  int subsets = 1 << n;
  for (int s = 0; s < subsets; ++s)
    if ((fam >> s) & 1u) opens.push_back(PointSet::from_word(static_cast<std::uint64_t>(s)));
  return make_space(n, opens);
}

}  // namespace

TopologyEnumerator::TopologyEnumerator(int n, std::uint64_t start_cursor)
    : n_(n), cursor_(start_cursor) {
  if (n < 1 || n > kEnumerateMax)
    fail(ErrorKind::BoundExceeded,
         "topology enumeration supports 1.." + std::to_string(kEnumerateMax) + " points");
  int subsets = 1 << n;
  limit_ = 1ull << subsets;  // n=4: 2^16 candidate families
}

std::optional<FiniteSpace> TopologyEnumerator::next() {
  for (; cursor_ < limit_; ++cursor_) {
    if (family_is_topology(cursor_, n_)) {
      FiniteSpace x = space_from_family_mask(cursor_, n_);
      ++cursor_;
      return x;
    }
  }
  return std::nullopt;
}

std::vector<FiniteSpace> all_topologies(int n) {
  TopologyEnumerator e(n);
  std::vector<FiniteSpace> out;
  while (auto x = e.next()) out.push_back(std::move(*x));
  return out;
}

std::uint64_t count_topologies_by_family_filter(int n) {
  TopologyEnumerator e(n);
  std::uint64_t c = 0;
  while (e.next()) ++c;
  return c;
}

std::vector<SpacePreorder> all_preorders(int n) {
  if (n < 1 || n > kCountOnlyMax)
    fail(ErrorKind::BoundExceeded,
         "preorder enumeration supports 1.." + std::to_string(kCountOnlyMax) + " points");
  // Off-diagonal cells in row-major order drive the candidate mask; the
  // diagonal is forced by reflexivity.
  int cells = n * (n - 1);
  std::vector<std::pair<int, int>> cell_at;
  cell_at.reserve(static_cast<std::size_t>(cells));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cell_at.emplace_back(i, j);

  std::vector<SpacePreorder> out;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n));
  for (std::uint64_t m = 0; m < (1ull << cells); ++m) {
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = 1ull << i;
    for (int c = 0; c < cells; ++c)
      if ((m >> c) & 1u)
        row[static_cast<std::size_t>(cell_at[static_cast<std::size_t>(c)].first)] |=
            1ull << cell_at[static_cast<std::size_t>(c)].second;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      std::uint64_t r = row[static_cast<std::size_t>(i)];
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        if ((row[static_cast<std::size_t>(j)] & ~row[static_cast<std::size_t>(i)]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    SpacePreorder p;
    p.n = n;
    p.up.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      p.up.push_back(PointSet::from_word(row[static_cast<std::size_t>(i)]));
    out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t count_preorders(int n) { return all_preorders(n).size(); }

std::uint64_t count_topologies(int n) {
  if (n >= 1 && n <= kEnumerateMax) return count_topologies_by_family_filter(n);
  if (n == kCountOnlyMax) return count_preorders(n);
  fail(ErrorKind::BoundExceeded,
       "topology counting supports 1.." + std::to_string(kCountOnlyMax) + " points");
}

std::vector<std::uint64_t> upset_masks(const std::vector<std::uint64_t>& up) {
  std::size_t k = up.size();
  if (k > 64) fail(ErrorKind::BoundExceeded, "up-set enumeration limited to 64 elements");
  // Depth-first: each element is either excluded together with everything
  // below it, or included together with everything above it.
  std::vector<std::uint64_t> down(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((up[j] >> i) & 1u) down[i] |= 1ull << j;

  std::vector<std::uint64_t> out;
  struct Frame {
    std::uint64_t in, outm;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0});
  std::uint64_t all = k == 64 ? ~0ull : ((1ull << k) - 1);
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    std::uint64_t undecided = all & ~f.in & ~f.outm;
    if (!undecided) {
      out.push_back(f.in);
      continue;
    }
    int e = std::countr_zero(undecided);
    // include e and everything above it, unless something above is out
    if ((up[static_cast<std::size_t>(e)] & f.outm) == 0)
      stack.push_back({f.in | up[static_cast<std::size_t>(e)], f.outm});
    // exclude e and everything below it, unless something below is in
    if ((down[static_cast<std::size_t>(e)] & f.in) == 0)
      stack.push_back({f.in, f.outm | down[static_cast<std::size_t>(e)]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace topolab
