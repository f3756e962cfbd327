#pragma once

#include <vector>

#include "topolab/maps.hpp"
#include "topolab/space.hpp"

namespace topolab {

// Exponential of finite spaces: all continuous maps dom -> cod in graph
// lexicographic order, topologized by the sets N(Q, V) = {f : f(Q) within V}
// for every subset Q of the domain (all subsets of a finite space are
// compact) and every open V of the codomain, closed under union and
// intersection.
struct FunctionSpace {
  FiniteSpace dom;
  FiniteSpace cod;
  std::vector<std::vector<int>> graphs;  // sorted lexicographically
  FiniteSpace space;                     // carrier: graph indices

  int index_of(const std::vector<int>& graph) const;
};

// Two points bot=0, top=1; opens are empty, {top}, {bot, top}.
FiniteSpace sierpinski();

FunctionSpace exponential(const FiniteSpace& x, const FiniteSpace& y);

// The open-set lattice of x carrying the topology transported from the
// exponential sierpinski^x along U <-> characteristic map of U. Point i is
// the i-th open in canonical order.
struct OpensSpace {
  FiniteSpace space;
  std::vector<PointSet> decode;
};
OpensSpace sierpinski_exponential_as_opens(const FiniteSpace& x);

// A_Q : sierpinski^x -> sierpinski, top iff the map sends all of q to top.
ContinuousMap universal_quantifier(const FunctionSpace& sx, const PointSet& q);
ContinuousMap universal_quantifier(const FiniteSpace& x, const PointSet& q);

// {f : f(q) within v} as a subset of the function-space carrier.
PointSet subbasic_open(const FunctionSpace& fs, const PointSet& q, const PointSet& v);

// e(f, x) = f(x) from space x dom to cod; construction re-checks continuity.
ContinuousMap evaluation_map(const FunctionSpace& fs);

// Transpose of a continuous h : z x dom -> cod as a graph z -> map index.
std::vector<int> transpose_graph(const FunctionSpace& fs, const FiniteSpace& z,
                                 const std::vector<int>& h_graph);

}  // namespace topolab
