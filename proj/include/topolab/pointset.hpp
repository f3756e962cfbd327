#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace topolab {

// Subset of a carrier {0..n-1}, stored as a bit vector of arbitrary width.
// The first word is inline so sets over carriers of up to 64 points never
// allocate; wider carriers (products of function spaces and the like) spill
// into extra words. Trailing zero words are trimmed so that equality and the
// numeric order used for canonical sorting are plain member comparisons.
class PointSet {
 public:
  PointSet() = default;

  static PointSet from_word(std::uint64_t w) {
    PointSet s;
    s.w0_ = w;
    return s;
  }

  static PointSet single(int p) {
    PointSet s;
    s.set(p);
    return s;
  }

  static PointSet full_set(int n);
  static PointSet from_points(const std::vector<int>& pts);

  bool test(int p) const {
    if (p < 64) return (w0_ >> p) & 1u;
    std::size_t wi = static_cast<std::size_t>(p / 64) - 1;
    if (wi >= hi_.size()) return false;
    return (hi_[wi] >> (p % 64)) & 1u;
  }

  void set(int p);
  void reset(int p);

  bool is_empty() const { return w0_ == 0 && hi_.empty(); }

  int count() const {
    int c = std::popcount(w0_);
    for (std::uint64_t w : hi_) c += std::popcount(w);
    return c;
  }

  // Largest set point, -1 when empty.
  int max_point() const;

  std::uint64_t word(std::size_t i) const {
    if (i == 0) return w0_;
    return i - 1 < hi_.size() ? hi_[i - 1] : 0;
  }

  std::size_t word_count() const { return hi_.size() + 1; }

  bool subset_of(const PointSet& o) const {
    if (w0_ & ~o.w0_) return false;
    for (std::size_t i = 0; i < hi_.size(); ++i) {
      std::uint64_t ow = i < o.hi_.size() ? o.hi_[i] : 0;
      if (hi_[i] & ~ow) return false;
    }
    return true;
  }

  bool intersects(const PointSet& o) const {
    if (w0_ & o.w0_) return true;
    std::size_t k = hi_.size() < o.hi_.size() ? hi_.size() : o.hi_.size();
    for (std::size_t i = 0; i < k; ++i)
      if (hi_[i] & o.hi_[i]) return true;
    return false;
  }

  PointSet complement_in(int n) const;

  // this |= (src << offset); used to assemble product-space neighbourhoods.
  void or_shifted(const PointSet& src, int offset);

  std::vector<int> points() const;

  template <class F>
  void for_each(F&& f) const {
    std::uint64_t w = w0_;
    while (w) {
      f(std::countr_zero(w));
      w &= w - 1;
    }
    for (std::size_t i = 0; i < hi_.size(); ++i) {
      w = hi_[i];
      int base = static_cast<int>(i + 1) * 64;
      while (w) {
        f(base + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  PointSet& operator|=(const PointSet& o);
  PointSet& operator&=(const PointSet& o);
  PointSet& operator-=(const PointSet& o);  // set difference

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  bool operator==(const PointSet& o) const {
    return w0_ == o.w0_ && hi_ == o.hi_;
  }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  // Numeric order on the bit pattern; the canonical order for open families.
  bool operator<(const PointSet& o) const {
    if (hi_.size() != o.hi_.size()) return hi_.size() < o.hi_.size();
    for (std::size_t i = hi_.size(); i-- > 0;)
      if (hi_[i] != o.hi_[i]) return hi_[i] < o.hi_[i];
    return w0_ < o.w0_;
  }

 private:
  std::uint64_t w0_ = 0;
  std::vector<std::uint64_t> hi_;

  void trim() {
    while (!hi_.empty() && hi_.back() == 0) hi_.pop_back();
  }
};

}  // namespace topolab
