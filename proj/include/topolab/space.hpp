#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/pointset.hpp"

namespace topolab {

// Carriers larger than this are refused outright (CarrierOverflow).
inline constexpr int kMaxCarrier = 4096;

// Cap on materializing a complete open family. Spaces whose family would be
// larger still support all pointwise operations through their minimal
// neighbourhoods; only explicit enumeration of the family is refused.
inline constexpr std::size_t kMaxOpenFamily = std::size_t(1) << 21;

// Reflexive transitive relation on {0..n-1}; up[p] = {q : p <= q}.
struct SpacePreorder {
  int n = 0;
  std::vector<PointSet> up;

  bool leq(int p, int q) const { return up[p].test(q); }

  // Throws InvalidPreorder unless reflexive and transitive.
  void validate() const;

  bool operator==(const SpacePreorder& o) const = default;
};

// A finite topological space. Finite topologies are exactly the Alexandrov
// topologies, so the canonical representation is the table of minimal open
// neighbourhoods min(p) = intersection of all opens containing p; a set U is
// open iff min(p) is contained in U for every p in U. The complete open
// family (sorted ascending by bit pattern) is derived on demand and cached;
// it is the list of up-sets of the specialization preorder.
class FiniteSpace {
 public:
  FiniteSpace();  // the empty space

  // Validates the topology axioms on the given family; fails rather than
  // repairs. The canonical sorted deduplicated family is retained.
  static FiniteSpace from_opens(int n, std::vector<PointSet> opens,
                                std::vector<std::string> labels = {});

  // Opens are the up-sets of the preorder.
  static FiniteSpace from_preorder(const SpacePreorder& p,
                                   std::vector<std::string> labels = {});

  // Trusted internal constructor; checks the table is a preorder table.
  static FiniteSpace from_min_nbhds(int n, std::vector<PointSet> min,
                                    std::vector<std::string> labels = {});

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  static FiniteSpace one_point() { return discrete(1); }

  int points() const { return n_; }
  PointSet full() const { return PointSet::full_set(n_); }

  const PointSet& min_nbhd(int p) const { return min_[p]; }

  // Specialization order: p <= q iff every open containing p contains q.
  bool leq(int p, int q) const { return min_[p].test(q); }

  void check_subset(const PointSet& a) const;  // PointOutOfRange guard

  bool is_open(const PointSet& u) const;
  bool is_closed(const PointSet& a) const;

  PointSet interior(const PointSet& a) const;
  PointSet closure(const PointSet& a) const;
  PointSet min_open_nbhd(const PointSet& a) const;

  // The complete open family, canonical order. Throws BoundExceeded when the
  // family is too large to materialize.
  const std::vector<PointSet>& opens() const;
  std::size_t open_count() const { return opens().size(); }
  std::vector<PointSet> closed_sets() const;

  // Index into opens(), -1 if not open.
  int open_index(const PointSet& u) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int p) const;

  // Topological identity: same carrier size and same minimal neighbourhoods.
  // Labels are presentation only.
  bool operator==(const FiniteSpace& o) const {
    return n_ == o.n_ && min_ == o.min_;
  }
  bool operator!=(const FiniteSpace& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<PointSet> min_;
  std::vector<std::string> labels_;

  struct OpensCache;
  std::shared_ptr<OpensCache> cache_;

  FiniteSpace(int n, std::vector<PointSet> min, std::vector<std::string> labels);
};

// Free-function surface.
FiniteSpace make_space(int n, const std::vector<PointSet>& opens,
                       std::vector<std::string> labels = {});
SpacePreorder specialization_preorder(const FiniteSpace& x);
FiniteSpace from_preorder(const SpacePreorder& p);

inline PointSet interior(const FiniteSpace& x, const PointSet& a) { return x.interior(a); }
inline PointSet closure(const FiniteSpace& x, const PointSet& a) { return x.closure(a); }
inline PointSet min_open_nbhd(const FiniteSpace& x, const PointSet& a) { return x.min_open_nbhd(a); }

// Pair (x, y) lives at index x*ny + y.
inline int pair_index(int x, int y, int ny) { return x * ny + y; }

// Product topology; on finite carriers its minimal neighbourhoods are the
// boxes min(x) x min(y).
FiniteSpace product_space(const FiniteSpace& x, const FiniteSpace& y);

// Carrier re-indexed to the points of a in increasing order; opens are the
// traces of the opens of x.
FiniteSpace subspace(const FiniteSpace& x, const PointSet& a);

struct DiagonalClass {
  bool hausdorff = false;  // complement of the diagonal open in X x X
  bool discrete = false;   // diagonal open in X x X
};
DiagonalClass diagonal_class(const FiniteSpace& x);

}  // namespace topolab
