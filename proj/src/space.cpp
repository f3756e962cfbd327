#include "topolab/space.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace topolab {

namespace {

std::string set_to_string(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  });
  return out + "}";
}

}  // namespace

void SpacePreorder::validate() const {
  if (static_cast<int>(up.size()) != n)
    fail(ErrorKind::InvalidPreorder, "relation table size does not match carrier");
  for (int p = 0; p < n; ++p) {
    if (up[p].max_point() >= n)
      fail(ErrorKind::PointOutOfRange, "relation row exceeds carrier");
    if (!up[p].test(p))
      fail(ErrorKind::InvalidPreorder, "not reflexive at " + std::to_string(p));
  }
  for (int p = 0; p < n; ++p) {
    bool ok = true;
    up[p].for_each([&](int q) {
      if (!up[q].subset_of(up[p])) ok = false;
    });
    if (!ok) fail(ErrorKind::InvalidPreorder, "not transitive at " + std::to_string(p));
  }
}

struct FiniteSpace::OpensCache {
  std::once_flag flag;
  std::vector<PointSet> opens;
  std::exception_ptr err;
};

FiniteSpace::FiniteSpace() : FiniteSpace(0, {}, {}) {}

FiniteSpace::FiniteSpace(int n, std::vector<PointSet> min,
                         std::vector<std::string> labels)
    : n_(n), min_(std::move(min)), labels_(std::move(labels)),
      cache_(std::make_shared<OpensCache>()) {}

FiniteSpace FiniteSpace::from_min_nbhds(int n, std::vector<PointSet> min,
                                        std::vector<std::string> labels) {
  if (n < 0 || n > kMaxCarrier) fail(ErrorKind::CarrierOverflow, "carrier size " + std::to_string(n));
  SpacePreorder p{n, min};
  p.validate();
  return FiniteSpace(n, std::move(min), std::move(labels));
}

FiniteSpace FiniteSpace::from_preorder(const SpacePreorder& p,
                                       std::vector<std::string> labels) {
  p.validate();
  return FiniteSpace(p.n, p.up, std::move(labels));
}

FiniteSpace FiniteSpace::from_opens(int n, std::vector<PointSet> opens,
                                    std::vector<std::string> labels) {
  if (n < 0 || n > kMaxCarrier) fail(ErrorKind::CarrierOverflow, "carrier size " + std::to_string(n));
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(ErrorKind::InvalidInput, "label count does not match carrier");

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  PointSet full = PointSet::full_set(n);
  for (const PointSet& u : opens)
    if (!u.subset_of(full))
      fail(ErrorKind::PointOutOfRange, "open " + set_to_string(u) + " exceeds carrier");
  if (opens.empty() || !opens.front().is_empty())
    fail(ErrorKind::NotATopology, "empty set missing from family");
  if (opens.back() != full)
    fail(ErrorKind::NotATopology, "full set missing from family");

  auto member = [&](const PointSet& s) {
    return std::binary_search(opens.begin(), opens.end(), s);
  };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!member(opens[i] | opens[j]))
        fail(ErrorKind::NotATopology,
             "union of " + set_to_string(opens[i]) + " and " + set_to_string(opens[j]) +
                 " missing from family");
      if (!member(opens[i] & opens[j]))
        fail(ErrorKind::NotATopology,
             "intersection of " + set_to_string(opens[i]) + " and " + set_to_string(opens[j]) +
                 " missing from family");
    }
  }

  std::vector<PointSet> min(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    PointSet m = full;
    for (const PointSet& u : opens)
      if (u.test(p)) m &= u;
    min[static_cast<std::size_t>(p)] = m;
  }

  FiniteSpace x(n, std::move(min), std::move(labels));
  std::call_once(x.cache_->flag, [&] { x.cache_->opens = std::move(opens); });
  return x;
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<PointSet> min(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) min[static_cast<std::size_t>(p)] = PointSet::single(p);
  return from_min_nbhds(n, std::move(min));
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  std::vector<PointSet> min(static_cast<std::size_t>(n), PointSet::full_set(n));
  return from_min_nbhds(n, std::move(min));
}

void FiniteSpace::check_subset(const PointSet& a) const {
  if (a.max_point() >= n_)
    fail(ErrorKind::PointOutOfRange,
         "set " + set_to_string(a) + " exceeds carrier of size " + std::to_string(n_));
}

bool FiniteSpace::is_open(const PointSet& u) const {
  check_subset(u);
  bool open = true;
  u.for_each([&](int p) {
    if (open && !min_[p].subset_of(u)) open = false;
  });
  return open;
}

bool FiniteSpace::is_closed(const PointSet& a) const {
  return is_open(a.complement_in(n_));
}

PointSet FiniteSpace::interior(const PointSet& a) const {
  check_subset(a);
  PointSet out;
  a.for_each([&](int p) {
    if (min_[p].subset_of(a)) out.set(p);
  });
  return out;
}

PointSet FiniteSpace::closure(const PointSet& a) const {
  check_subset(a);
  PointSet out;
  for (int p = 0; p < n_; ++p)
    if (min_[p].intersects(a)) out.set(p);
  return out;
}

PointSet FiniteSpace::min_open_nbhd(const PointSet& a) const {
  check_subset(a);
  PointSet out;
  a.for_each([&](int p) { out |= min_[p]; });
  return out;
}

const std::vector<PointSet>& FiniteSpace::opens() const {
  std::call_once(cache_->flag, [&] {
    try {
      if (n_ > 64)
        fail(ErrorKind::BoundExceeded,
             "open family enumeration limited to carriers of 64 points");
      // Up-sets are the unions of minimal neighbourhoods; breadth-first
      // closure with dedup by bit pattern.
      std::unordered_set<std::uint64_t> seen;
      std::vector<std::uint64_t> todo;
      seen.insert(0);
      todo.push_back(0);
      std::vector<std::uint64_t> minw(static_cast<std::size_t>(n_));
      for (int p = 0; p < n_; ++p) minw[static_cast<std::size_t>(p)] = min_[p].word(0);
      while (!todo.empty()) {
        std::uint64_t cur = todo.back();
        todo.pop_back();
        for (int p = 0; p < n_; ++p) {
          if ((cur >> p) & 1u) continue;
          std::uint64_t nxt = cur | minw[static_cast<std::size_t>(p)];
          if (seen.insert(nxt).second) {
            if (seen.size() > kMaxOpenFamily)
              fail(ErrorKind::BoundExceeded, "open family too large to materialize");
            todo.push_back(nxt);
          }
        }
      }
      std::vector<std::uint64_t> masks(seen.begin(), seen.end());
      std::sort(masks.begin(), masks.end());
      cache_->opens.reserve(masks.size());
      for (std::uint64_t m : masks) cache_->opens.push_back(PointSet::from_word(m));
    } catch (...) {
      cache_->err = std::current_exception();
    }
  });
  if (cache_->err) std::rethrow_exception(cache_->err);
  return cache_->opens;
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens().size());
  for (const PointSet& u : opens()) out.push_back(u.complement_in(n_));
  std::sort(out.begin(), out.end());
  return out;
}

int FiniteSpace::open_index(const PointSet& u) const {
  const std::vector<PointSet>& fam = opens();
  auto it = std::lower_bound(fam.begin(), fam.end(), u);
  if (it == fam.end() || *it != u) return -1;
  return static_cast<int>(it - fam.begin());
}

std::string FiniteSpace::label(int p) const {
  if (p < 0 || p >= n_) fail(ErrorKind::PointOutOfRange, "point " + std::to_string(p));
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(p)];
  return std::to_string(p);
}

FiniteSpace make_space(int n, const std::vector<PointSet>& opens,
                       std::vector<std::string> labels) {
  return FiniteSpace::from_opens(n, opens, std::move(labels));
}

SpacePreorder specialization_preorder(const FiniteSpace& x) {
  SpacePreorder p;
  p.n = x.points();
  p.up.reserve(static_cast<std::size_t>(p.n));
  for (int q = 0; q < p.n; ++q) p.up.push_back(x.min_nbhd(q));
  return p;
}

FiniteSpace from_preorder(const SpacePreorder& p) {
  return FiniteSpace::from_preorder(p);
}

FiniteSpace product_space(const FiniteSpace& x, const FiniteSpace& y) {
  long long nn = static_cast<long long>(x.points()) * y.points();
  if (nn > kMaxCarrier)
    fail(ErrorKind::CarrierOverflow, "product carrier has " + std::to_string(nn) + " points");
  int nx = x.points(), ny = y.points();
  std::vector<PointSet> min(static_cast<std::size_t>(nn));
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < ny; ++b) {
      PointSet m;
      x.min_nbhd(a).for_each(
          [&](int a2) { m.or_shifted(y.min_nbhd(b), a2 * ny); });
      min[static_cast<std::size_t>(pair_index(a, b, ny))] = std::move(m);
    }
  }
  return FiniteSpace::from_min_nbhds(static_cast<int>(nn), std::move(min));
}

FiniteSpace subspace(const FiniteSpace& x, const PointSet& a) {
  x.check_subset(a);
  std::vector<int> pts = a.points();
  std::vector<int> where(static_cast<std::size_t>(x.points()), -1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    where[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);
  std::vector<PointSet> min(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // trace of the minimal neighbourhood, re-indexed
    PointSet m;
    x.min_nbhd(pts[i]).for_each([&](int q) {
      if (where[static_cast<std::size_t>(q)] >= 0)
        m.set(where[static_cast<std::size_t>(q)]);
    });
    min[i] = std::move(m);
  }
  std::vector<std::string> labels;
  if (!x.labels().empty()) {
    labels.reserve(pts.size());
    for (int p : pts) labels.push_back(x.label(p));
  }
  return FiniteSpace::from_min_nbhds(static_cast<int>(pts.size()), std::move(min),
                                     std::move(labels));
}

DiagonalClass diagonal_class(const FiniteSpace& x) {
  FiniteSpace p = product_space(x, x);
  PointSet diag;
  for (int q = 0; q < x.points(); ++q) diag.set(pair_index(q, q, x.points()));
  DiagonalClass out;
  out.discrete = p.is_open(diag);
  out.hausdorff = p.is_open(diag.complement_in(p.points()));
  return out;
}

}  // namespace topolab
