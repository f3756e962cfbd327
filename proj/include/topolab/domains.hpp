#pragma once

#include <cstdint>
#include <vector>

#include "topolab/maps.hpp"
#include "topolab/space.hpp"

namespace topolab {

// Finite partial order; every finite poset is a dcpo.
struct FinitePoset {
  int n = 0;
  std::vector<PointSet> up;  // up[p] = {q : p <= q}

  bool leq(int p, int q) const { return up[p].test(q); }
};

FinitePoset make_poset(int n, std::vector<PointSet> up);

// All partial orders on n labeled elements, canonical matrix order.
std::vector<FinitePoset> all_posets(int n);

// On finite posets the Scott opens are exactly the up-sets.
FiniteSpace scott_topology(const FinitePoset& p);

// Scott topology on objects, identical graphs on maps.
FiniteSpace sigma_functor(const FinitePoset& p);
ContinuousMap sigma_map(const FinitePoset& d, const FinitePoset& e, const std::vector<int>& graph);

// Componentwise order; pair (d, e) sits at index d*|E| + e, matching the
// product-space encoding.
FinitePoset poset_product(const FinitePoset& d, const FinitePoset& e);

// Scott-open families of opens(x): up-sets of the inclusion order on the
// canonical open list, as masks over open indices.
std::vector<std::uint64_t> scott_open_families(const FiniteSpace& x);

// Three characterizations of openness of w within y x x:
//   product_open  - w open in the product topology;
//   left_charac   - every section {x : (y,x) in w} open, and for every Scott
//                   open family of opens of x the set of rows landing in it
//                   is open in y;
//   right_charac  - the mirrored condition.
struct ProductCharacterization {
  bool product_open = false;
  bool left_charac = false;
  bool right_charac = false;

  bool agree() const { return product_open == left_charac && left_charac == right_charac; }
};

ProductCharacterization check_prod_charac(const FiniteSpace& y, const FiniteSpace& x,
                                          const PointSet& w);

namespace detail {
ProductCharacterization prod_charac_with(const FiniteSpace& y, const FiniteSpace& x,
                                         const PointSet& w, const FiniteSpace& product,
                                         const std::vector<std::uint64_t>& scott_x,
                                         const std::vector<std::uint64_t>& scott_y);
}

// Scott topology of the product order equals the product of the Scott
// topologies, compared as canonical spaces.
bool check_sigma_products(const FinitePoset& d, const FinitePoset& e);

}  // namespace topolab
