#include "topolab/pointset.hpp"

namespace topolab {

PointSet PointSet::full_set(int n) {
  PointSet s;
  if (n <= 0) return s;
  if (n <= 64) {
    s.w0_ = n == 64 ? ~0ull : ((1ull << n) - 1);
    return s;
  }
  s.w0_ = ~0ull;
  int rest = n - 64;
  while (rest >= 64) {
    s.hi_.push_back(~0ull);
    rest -= 64;
  }
  if (rest > 0) s.hi_.push_back((1ull << rest) - 1);
  return s;
}

PointSet PointSet::from_points(const std::vector<int>& pts) {
  PointSet s;
  for (int p : pts) s.set(p);
  return s;
}

void PointSet::set(int p) {
  if (p < 64) {
    w0_ |= 1ull << p;
    return;
  }
  std::size_t wi = static_cast<std::size_t>(p / 64) - 1;
  if (wi >= hi_.size()) hi_.resize(wi + 1, 0);
  hi_[wi] |= 1ull << (p % 64);
}

void PointSet::reset(int p) {
  if (p < 64) {
    w0_ &= ~(1ull << p);
    return;
  }
  std::size_t wi = static_cast<std::size_t>(p / 64) - 1;
  if (wi < hi_.size()) {
    hi_[wi] &= ~(1ull << (p % 64));
    trim();
  }
}

int PointSet::max_point() const {
  for (std::size_t i = hi_.size(); i-- > 0;)
    if (hi_[i]) return static_cast<int>(i + 1) * 64 + 63 - std::countl_zero(hi_[i]);
  if (w0_) return 63 - std::countl_zero(w0_);
  return -1;
}

PointSet PointSet::complement_in(int n) const {
  PointSet full = full_set(n);
  full -= *this;
  return full;
}

void PointSet::or_shifted(const PointSet& src, int offset) {
  src.for_each([&](int p) { set(p + offset); });
}

std::vector<int> PointSet::points() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int p) { out.push_back(p); });
  return out;
}

PointSet& PointSet::operator|=(const PointSet& o) {
  w0_ |= o.w0_;
  if (hi_.size() < o.hi_.size()) hi_.resize(o.hi_.size(), 0);
  for (std::size_t i = 0; i < o.hi_.size(); ++i) hi_[i] |= o.hi_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& o) {
  w0_ &= o.w0_;
  if (hi_.size() > o.hi_.size()) hi_.resize(o.hi_.size());
  for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] &= o.hi_[i];
  trim();
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& o) {
  w0_ &= ~o.w0_;
  std::size_t k = hi_.size() < o.hi_.size() ? hi_.size() : o.hi_.size();
  for (std::size_t i = 0; i < k; ++i) hi_[i] &= ~o.hi_[i];
  trim();
  return *this;
}

}  // namespace topolab
