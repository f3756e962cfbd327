#pragma once

#include <cstdint>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

// Directed family of opens covering a target set. Directedness is the
// pairwise condition: every two members have a member containing their
// union. A finite directed family always contains its own union.
struct DirectedCover {
  FiniteSpace space;
  std::vector<PointSet> members;  // canonical ascending order, deduplicated
  PointSet target;
};

DirectedCover make_directed_cover(FiniteSpace space, std::vector<PointSet> members,
                                  PointSet target);

enum class FamilyRole { Opens, Compacts };

// Assignment of a subset of a target space to each point of an index space.
struct IndexedFamily {
  FiniteSpace index;
  FiniteSpace target;
  FamilyRole role;
  std::vector<PointSet> assign;  // one set per index point
};

IndexedFamily make_indexed_family(FiniteSpace index, FiniteSpace target, FamilyRole role,
                                  std::vector<PointSet> assign);

// Every directed open cover of q has a member containing q. Decided by the
// definitional sweep over all directed covers, cross-checked against the
// finite-space fact that every subset is compact; disagreement raises
// InternalInvariant. Throws BoundExceeded when the open family is too large
// to sweep.
bool is_compact_subset(const FiniteSpace& x, const PointSet& q);

// s way below t: every directed open cover of t has a member containing s.
// The definitional sweep must match the closed form
// s within min_open_nbhd(t); the sweep is run whenever the family size
// permits, and the closed form is returned.
bool way_below(const FiniteSpace& x, const PointSet& s, const PointSet& t);

// s within the interior of t.
bool interior_containment(const FiniteSpace& x, const PointSet& s, const PointSet& t);

// {z : for all q in Q, (z,q) in w} for w within the product Z x X. No
// openness requirement on w or on the result.
PointSet quantified_open(const FiniteSpace& z, const FiniteSpace& x, const PointSet& w,
                         const PointSet& q);

// Opens role: the graph {(z,i) : z in V_i} is open in target x index.
// Compacts role: {i : Q_i within U} is open in the index for every open U.
bool is_continuously_indexed(const IndexedFamily& f);

// Intersection over all index points of an opens-role family.
PointSet family_intersection(const IndexedFamily& f);

// Hyperspace of all subsets of x (every subset of a finite space is
// compact), topology generated by the boxes {Q : Q within U} for U open.
// Point i decodes to the subset with bit pattern i.
struct UpperVietoris {
  FiniteSpace space;
  std::vector<PointSet> decode;
};
UpperVietoris upper_vietoris(const FiniteSpace& x);

// Index-point graph of a compacts-role family into the hyperspace carrier.
std::vector<int> vietoris_point_graph(const IndexedFamily& f);

// The converse-direction construction: a space whose points are the opens of
// x, where V is open iff it is up-closed under inclusion and, whenever the
// union of the cover lies in V, some cover member does. The membership set
// {(U, p) : p in U} is open in witness x x.
struct WitnessSpace {
  FiniteSpace space;              // carrier: opens of x in canonical order
  PointSet membership;            // {(U, p) : p in U} within space x x
  std::vector<PointSet> decode;   // open of x at each witness point
};

WitnessSpace witness_space(const FiniteSpace& x, const DirectedCover& cover);

namespace detail {

// Per-space tables shared by witness_space and the bulk sweeps.
struct WitnessBase {
  FiniteSpace z;                       // all up-sets of (opens(x), inclusion)
  PointSet membership;                 // membership set, dimensions |opens| x n
  bool membership_open = false;
  std::vector<PointSet> decode;        // opens of x
  std::vector<std::uint64_t> upsets;   // masks over open indices, ascending
  int full_index = 0;                  // index of the full carrier among opens
};

WitnessBase witness_base(const FiniteSpace& x);
WitnessSpace witness_space_from(const WitnessBase& base, const FiniteSpace& x,
                                const DirectedCover& cover);

// Enumerates every directed subfamily of opens(x) as (top open index, member
// index mask); every finite directed family contains its union, so families
// are keyed by their top. fn(top_index, member_mask).
template <class F>
void for_each_directed_family(const std::vector<PointSet>& opens, F&& fn) {
  int k = static_cast<int>(opens.size());
  for (int t = 0; t < k; ++t) {
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (i != t && opens[static_cast<std::size_t>(i)].subset_of(opens[static_cast<std::size_t>(t)]))
        sub.push_back(i);
    std::uint64_t top_bit = 1ull << t;
    std::uint64_t combos = 1ull << sub.size();
    for (std::uint64_t d = 0; d < combos; ++d) {
      std::uint64_t mask = top_bit;
      std::uint64_t rest = d;
      while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        mask |= 1ull << sub[static_cast<std::size_t>(b)];
      }
      fn(t, mask);
    }
  }
}

// Number of directed subfamilies, used to gate definitional sweeps.
std::uint64_t directed_family_count(const std::vector<PointSet>& opens);

}  // namespace detail

}  // namespace topolab
