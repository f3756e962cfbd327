#pragma once

#include <array>
#include <optional>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

// Total point function between finite spaces, continuity-checked at
// construction. On finite spaces continuity is equivalent to monotonicity
// for the specialization preorders; a violating pair yields the witness open
// min_nbhd(f(p)) whose preimage is not open.
class ContinuousMap {
 public:
  static ContinuousMap make(FiniteSpace dom, FiniteSpace cod, std::vector<int> graph);
  static ContinuousMap identity(const FiniteSpace& x);
  static ContinuousMap constant(const FiniteSpace& dom, const FiniteSpace& cod, int y);

  const FiniteSpace& dom() const { return dom_; }
  const FiniteSpace& cod() const { return cod_; }
  const std::vector<int>& graph() const { return graph_; }
  int operator()(int p) const { return graph_[static_cast<std::size_t>(p)]; }

  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& b) const;
  PointSet fiber(int y) const;

 private:
  ContinuousMap(FiniteSpace dom, FiniteSpace cod, std::vector<int> graph)
      : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {}

  FiniteSpace dom_;
  FiniteSpace cod_;
  std::vector<int> graph_;
};

// Non-throwing continuity test for a candidate graph.
bool is_continuous_graph(const FiniteSpace& dom, const FiniteSpace& cod,
                         const std::vector<int>& graph);

// Open set of the codomain whose preimage is not open, if any.
std::optional<PointSet> continuity_witness(const FiniteSpace& dom, const FiniteSpace& cod,
                                           const std::vector<int>& graph);

// All continuous dom -> cod graphs in lexicographic order.
std::vector<std::vector<int>> continuous_graphs(const FiniteSpace& dom, const FiniteSpace& cod);

template <class F>
void for_each_continuous_graph(const FiniteSpace& dom, const FiniteSpace& cod, F&& fn) {
  int nd = dom.points(), nc = cod.points();
  std::vector<int> g(static_cast<std::size_t>(nd), -1);
  // depth-first extension with monotonicity pruning
  auto rec = [&](auto&& self, int p) -> void {
    if (p == nd) {
      fn(const_cast<const std::vector<int>&>(g));
      return;
    }
    for (int v = 0; v < nc; ++v) {
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        if (dom.leq(q, p) && !cod.leq(g[static_cast<std::size_t>(q)], v)) ok = false;
        if (dom.leq(p, q) && !cod.leq(v, g[static_cast<std::size_t>(q)])) ok = false;
      }
      if (!ok) continue;
      g[static_cast<std::size_t>(p)] = v;
      self(self, p + 1);
    }
    g[static_cast<std::size_t>(p)] = -1;
  };
  if (nd == 0) {
    fn(const_cast<const std::vector<int>&>(g));
    return;
  }
  rec(rec, 0);
}

struct SpaceProduct {
  FiniteSpace space;
  ContinuousMap proj_left;
  ContinuousMap proj_right;
};

// Product with the two projections; pair (x, y) sits at index x*|Y| + y.
SpaceProduct product(const FiniteSpace& x, const FiniteSpace& y);

// (z, x) |-> (z, f(x)) between the corresponding product spaces.
ContinuousMap product_with_identity(const FiniteSpace& z, const ContinuousMap& f);

// Two routes, compared: images of closed sets are closed, and
// {b : fiber(b) subset of U} open for every open U of the domain. Returns the
// first verdict; disagreement raises InternalInvariant.
bool is_closed_map(const ContinuousMap& f);

namespace detail {
// (method A, method B) without the agreement check.
std::pair<bool, bool> closed_map_methods(const ContinuousMap& f);
std::pair<bool, bool> closed_map_methods(const FiniteSpace& dom, const FiniteSpace& cod,
                                         const std::vector<int>& graph);
}  // namespace detail

struct ProperVerdict {
  // 1: id_Z x f closed for all Z up to the bound
  // 2: {(z,y) : {z} x fiber(y) within W} open for all Z and open W
  // 3: closed and preimages of compact sets compact
  // 4: closed and fibers compact
  // 5: fibers form a continuously indexed family of compact sets
  std::array<bool, 5> criteria{};

  bool agree() const {
    for (bool c : criteria)
      if (c != criteria[0]) return false;
    return true;
  }
};

ProperVerdict is_proper(const ContinuousMap& f, int z_bound);

// Same criteria over a caller-supplied list of test spaces Z with prebuilt
// products Z x dom and Z x cod (both orders of construction are the hot path
// of the verification sweeps).
struct ZContext {
  const FiniteSpace* z;
  const FiniteSpace* z_dom;  // product_space(*z, f.dom())
  const FiniteSpace* z_cod;  // product_space(*z, f.cod())
};
ProperVerdict is_proper_with(const ContinuousMap& f, const std::vector<ZContext>& zs);

}  // namespace topolab
