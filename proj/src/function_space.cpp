#include "topolab/function_space.hpp"

#include <algorithm>

namespace topolab {

int FunctionSpace::index_of(const std::vector<int>& graph) const {
  auto it = std::lower_bound(graphs.begin(), graphs.end(), graph);
  if (it == graphs.end() || *it != graph) return -1;
  return static_cast<int>(it - graphs.begin());
}

FiniteSpace sierpinski() {
  return make_space(
      2,
      {PointSet(), PointSet::single(1), PointSet::full_set(2)},
      {"bot", "top"});
}

FunctionSpace exponential(const FiniteSpace& x, const FiniteSpace& y) {
  FunctionSpace fs;
  fs.dom = x;
  fs.cod = y;
  for_each_continuous_graph(x, y, [&](const std::vector<int>& g) {
    if (fs.graphs.size() >= static_cast<std::size_t>(kMaxCarrier))
      fail(ErrorKind::CarrierOverflow, "function space carrier exceeds the point limit");
    fs.graphs.push_back(g);
  });
  std::size_t m = fs.graphs.size();

  // Minimal neighbourhood of f in the topology generated by the N(Q, V):
  // the maps g satisfying every constraint f(Q) within V that f satisfies.
  // Collecting the constraints over singleton Q against minimal opens of the
  // codomain shows this is exactly {g : f <= g pointwise}; the generation
  // below stays with the defining subbasis.
  int nx = x.points();
  if (nx > 20) fail(ErrorKind::CarrierOverflow, "domain too large for subbasis generation");
  std::uint64_t qcount = 1ull << nx;
  const std::vector<PointSet>& vopens = y.opens();

  std::vector<PointSet> min(m);
  for (std::size_t f = 0; f < m; ++f) min[f] = PointSet::full_set(static_cast<int>(m));
  for (std::uint64_t qm = 0; qm < qcount; ++qm) {
    PointSet q = PointSet::from_word(qm);
    for (const PointSet& v : vopens) {
      // N(q, v)
      PointSet member;
      for (std::size_t f = 0; f < m; ++f) {
        bool inside = true;
        q.for_each([&](int p) {
          if (inside && !v.test(fs.graphs[f][static_cast<std::size_t>(p)])) inside = false;
        });
        if (inside) member.set(static_cast<int>(f));
      }
      for (std::size_t f = 0; f < m; ++f)
        if (member.test(static_cast<int>(f))) min[f] &= member;
    }
  }
  fs.space = FiniteSpace::from_min_nbhds(static_cast<int>(m), std::move(min));
  return fs;
}

OpensSpace sierpinski_exponential_as_opens(const FiniteSpace& x) {
  FunctionSpace sx = exponential(x, sierpinski());
  const std::vector<PointSet>& op = x.opens();
  if (op.size() != sx.graphs.size())
    fail(ErrorKind::InternalInvariant,
         "opens of a space must biject with its maps into the two-point space");
  // Transport the topology along U -> characteristic map of U.
  std::vector<int> to_map(op.size());
  std::vector<int> to_open(op.size(), -1);
  for (std::size_t i = 0; i < op.size(); ++i) {
    std::vector<int> chi(static_cast<std::size_t>(x.points()), 0);
    op[i].for_each([&](int p) { chi[static_cast<std::size_t>(p)] = 1; });
    int mi = sx.index_of(chi);
    if (mi < 0)
      fail(ErrorKind::InternalInvariant, "characteristic map of an open must be continuous");
    to_map[i] = mi;
    to_open[static_cast<std::size_t>(mi)] = static_cast<int>(i);
  }
  std::vector<PointSet> min(op.size());
  for (std::size_t i = 0; i < op.size(); ++i) {
    PointSet m;
    sx.space.min_nbhd(to_map[i]).for_each(
        [&](int mj) { m.set(to_open[static_cast<std::size_t>(mj)]); });
    min[i] = std::move(m);
  }
  OpensSpace out;
  out.space = FiniteSpace::from_min_nbhds(static_cast<int>(op.size()), std::move(min));
  out.decode = op;
  return out;
}

ContinuousMap universal_quantifier(const FunctionSpace& sx, const PointSet& q) {
  sx.dom.check_subset(q);
  std::vector<int> g(sx.graphs.size(), 1);
  for (std::size_t f = 0; f < sx.graphs.size(); ++f) {
    bool all_top = true;
    q.for_each([&](int p) {
      if (all_top && sx.graphs[f][static_cast<std::size_t>(p)] != 1) all_top = false;
    });
    g[f] = all_top ? 1 : 0;
  }
  // Continuity must hold: finite sets are compact. A failure here is a bug.
  if (!is_continuous_graph(sx.space, sx.cod, g))
    fail(ErrorKind::InternalInvariant, "universal quantifier of a finite set must be continuous");
  return ContinuousMap::make(sx.space, sx.cod, std::move(g));
}

ContinuousMap universal_quantifier(const FiniteSpace& x, const PointSet& q) {
  return universal_quantifier(exponential(x, sierpinski()), q);
}

PointSet subbasic_open(const FunctionSpace& fs, const PointSet& q, const PointSet& v) {
  fs.dom.check_subset(q);
  if (!fs.cod.is_open(v)) fail(ErrorKind::NotOpen, "v is not open in the codomain");
  PointSet out;
  for (std::size_t f = 0; f < fs.graphs.size(); ++f) {
    bool inside = true;
    q.for_each([&](int p) {
      if (inside && !v.test(fs.graphs[f][static_cast<std::size_t>(p)])) inside = false;
    });
    if (inside) out.set(static_cast<int>(f));
  }
  return out;
}

ContinuousMap evaluation_map(const FunctionSpace& fs) {
  FiniteSpace dom = product_space(fs.space, fs.dom);
  int nx = fs.dom.points();
  std::vector<int> g(static_cast<std::size_t>(dom.points()));
  for (std::size_t f = 0; f < fs.graphs.size(); ++f)
    for (int p = 0; p < nx; ++p)
      g[static_cast<std::size_t>(pair_index(static_cast<int>(f), p, nx))] =
          fs.graphs[f][static_cast<std::size_t>(p)];
  return ContinuousMap::make(std::move(dom), fs.cod, std::move(g));
}

std::vector<int> transpose_graph(const FunctionSpace& fs, const FiniteSpace& z,
                                 const std::vector<int>& h_graph) {
  int nx = fs.dom.points();
  std::vector<int> out(static_cast<std::size_t>(z.points()));
  std::vector<int> section(static_cast<std::size_t>(nx));
  for (int a = 0; a < z.points(); ++a) {
    for (int p = 0; p < nx; ++p)
      section[static_cast<std::size_t>(p)] =
          h_graph[static_cast<std::size_t>(pair_index(a, p, nx))];
    int idx = fs.index_of(section);
    if (idx < 0)
      fail(ErrorKind::NotContinuous, "a section of the map is not continuous");
    out[static_cast<std::size_t>(a)] = idx;
  }
  return out;
}

}  // namespace topolab
