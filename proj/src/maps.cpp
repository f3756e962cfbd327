#include "topolab/maps.hpp"

#include <mutex>

#include "topolab/compactness.hpp"
#include "topolab/enumerate.hpp"

namespace topolab {

namespace {

std::string set_str(const PointSet& s) {
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

bool is_continuous_graph(const FiniteSpace& dom, const FiniteSpace& cod,
                         const std::vector<int>& graph) {
  int nd = dom.points();
  for (int p = 0; p < nd; ++p)
    for (int q = 0; q < nd; ++q)
      if (dom.leq(p, q) &&
          !cod.leq(graph[static_cast<std::size_t>(p)], graph[static_cast<std::size_t>(q)]))
        return false;
  return true;
}

std::optional<PointSet> continuity_witness(const FiniteSpace& dom, const FiniteSpace& cod,
                                           const std::vector<int>& graph) {
  int nd = dom.points();
  for (int p = 0; p < nd; ++p)
    for (int q = 0; q < nd; ++q)
      if (dom.leq(p, q) &&
          !cod.leq(graph[static_cast<std::size_t>(p)], graph[static_cast<std::size_t>(q)]))
        return cod.min_nbhd(graph[static_cast<std::size_t>(p)]);
  return std::nullopt;
}

ContinuousMap ContinuousMap::make(FiniteSpace dom, FiniteSpace cod, std::vector<int> graph) {
  if (static_cast<int>(graph.size()) != dom.points())
    fail(ErrorKind::InvalidInput, "graph is not total on the domain carrier");
  for (int v : graph)
    if (v < 0 || v >= cod.points())
      fail(ErrorKind::PointOutOfRange, "graph value " + std::to_string(v) + " outside codomain");
  if (auto w = continuity_witness(dom, cod, graph))
    fail(ErrorKind::NotContinuous,
         "preimage of open " + set_str(*w) + " is not open");
  return ContinuousMap(std::move(dom), std::move(cod), std::move(graph));
}

ContinuousMap ContinuousMap::identity(const FiniteSpace& x) {
  std::vector<int> g(static_cast<std::size_t>(x.points()));
  for (int p = 0; p < x.points(); ++p) g[static_cast<std::size_t>(p)] = p;
  return make(x, x, std::move(g));
}

ContinuousMap ContinuousMap::constant(const FiniteSpace& dom, const FiniteSpace& cod, int y) {
  if (y < 0 || y >= cod.points()) fail(ErrorKind::PointOutOfRange, "constant value");
  return make(dom, cod, std::vector<int>(static_cast<std::size_t>(dom.points()), y));
}

PointSet ContinuousMap::image(const PointSet& a) const {
  dom_.check_subset(a);
  PointSet out;
  a.for_each([&](int p) { out.set(graph_[static_cast<std::size_t>(p)]); });
  return out;
}

PointSet ContinuousMap::preimage(const PointSet& b) const {
  cod_.check_subset(b);
  PointSet out;
  for (int p = 0; p < dom_.points(); ++p)
    if (b.test(graph_[static_cast<std::size_t>(p)])) out.set(p);
  return out;
}

PointSet ContinuousMap::fiber(int y) const {
  if (y < 0 || y >= cod_.points()) fail(ErrorKind::PointOutOfRange, "fiber point");
  PointSet out;
  for (int p = 0; p < dom_.points(); ++p)
    if (graph_[static_cast<std::size_t>(p)] == y) out.set(p);
  return out;
}

std::vector<std::vector<int>> continuous_graphs(const FiniteSpace& dom, const FiniteSpace& cod) {
  std::vector<std::vector<int>> out;
  for_each_continuous_graph(dom, cod, [&](const std::vector<int>& g) { out.push_back(g); });
  return out;
}

SpaceProduct product(const FiniteSpace& x, const FiniteSpace& y) {
  FiniteSpace p = product_space(x, y);
  int ny = y.points();
  std::vector<int> gl(static_cast<std::size_t>(p.points()));
  std::vector<int> gr(static_cast<std::size_t>(p.points()));
  for (int a = 0; a < x.points(); ++a)
    for (int b = 0; b < ny; ++b) {
      gl[static_cast<std::size_t>(pair_index(a, b, ny))] = a;
      gr[static_cast<std::size_t>(pair_index(a, b, ny))] = b;
    }
  ContinuousMap pl = ContinuousMap::make(p, x, std::move(gl));
  ContinuousMap pr = ContinuousMap::make(p, y, std::move(gr));
  return SpaceProduct{std::move(p), std::move(pl), std::move(pr)};
}

ContinuousMap product_with_identity(const FiniteSpace& z, const ContinuousMap& f) {
  FiniteSpace zx = product_space(z, f.dom());
  FiniteSpace zy = product_space(z, f.cod());
  int nx = f.dom().points(), ny = f.cod().points();
  std::vector<int> g(static_cast<std::size_t>(zx.points()));
  for (int a = 0; a < z.points(); ++a)
    for (int b = 0; b < nx; ++b)
      g[static_cast<std::size_t>(pair_index(a, b, nx))] = pair_index(a, f(b), ny);
  return ContinuousMap::make(std::move(zx), std::move(zy), std::move(g));
}

namespace detail {

std::pair<bool, bool> closed_map_methods(const FiniteSpace& dom, const FiniteSpace& cod,
                                         const std::vector<int>& graph) {
  // A: the image of every closed set is closed.
  bool a = true;
  for (const PointSet& c : dom.closed_sets()) {
    PointSet img;
    c.for_each([&](int p) { img.set(graph[static_cast<std::size_t>(p)]); });
    if (!cod.is_closed(img)) {
      a = false;
      break;
    }
  }
  // B: {b : fiber(b) within U} is open in the codomain for every open U.
  std::vector<PointSet> fibers(static_cast<std::size_t>(cod.points()));
  for (int p = 0; p < dom.points(); ++p)
    fibers[static_cast<std::size_t>(graph[static_cast<std::size_t>(p)])].set(p);
  bool b = true;
  for (const PointSet& u : dom.opens()) {
    PointSet good;
    for (int y = 0; y < cod.points(); ++y)
      if (fibers[static_cast<std::size_t>(y)].subset_of(u)) good.set(y);
    if (!cod.is_open(good)) {
      b = false;
      break;
    }
  }
  return {a, b};
}

std::pair<bool, bool> closed_map_methods(const ContinuousMap& f) {
  return closed_map_methods(f.dom(), f.cod(), f.graph());
}

}  // namespace detail

bool is_closed_map(const ContinuousMap& f) {
  auto [a, b] = detail::closed_map_methods(f);
  if (a != b)
    fail(ErrorKind::InternalInvariant, "closed-map decision methods disagree");
  return a;
}

namespace {

// Shared per-size catalogs of test spaces for the Z quantifier.
const std::vector<FiniteSpace>& topologies_upto(int bound) {
  static std::mutex mu;
  static std::vector<std::vector<FiniteSpace>> memo;  // memo[n] = spaces with <= n points
  std::scoped_lock lock(mu);
  if (static_cast<int>(memo.size()) <= bound) memo.resize(static_cast<std::size_t>(bound) + 1);
  auto& slot = memo[static_cast<std::size_t>(bound)];
  if (slot.empty()) {
    for (int n = 1; n <= bound; ++n)
      for (FiniteSpace& x : all_topologies(n)) slot.push_back(std::move(x));
  }
  return slot;
}

}  // namespace

ProperVerdict is_proper_with(const ContinuousMap& f, const std::vector<ZContext>& zs) {
  ProperVerdict v;
  const FiniteSpace& x = f.dom();
  const FiniteSpace& y = f.cod();
  int nx = x.points(), ny = y.points();

  std::vector<PointSet> fibers(static_cast<std::size_t>(ny));
  for (int p = 0; p < nx; ++p) fibers[static_cast<std::size_t>(f(p))].set(p);

  // (1) id_Z x f closed for every Z.
  bool c1 = true;
  for (const ZContext& zc : zs) {
    int nz = zc.z->points();
    std::vector<int> g(static_cast<std::size_t>(zc.z_dom->points()));
    for (int a = 0; a < nz; ++a)
      for (int b = 0; b < nx; ++b)
        g[static_cast<std::size_t>(pair_index(a, b, nx))] = pair_index(a, f(b), ny);
    auto [ma, mb] = detail::closed_map_methods(*zc.z_dom, *zc.z_cod, g);
    if (ma != mb)
      fail(ErrorKind::InternalInvariant, "closed-map decision methods disagree");
    if (!ma) {
      c1 = false;
      break;
    }
  }
  v.criteria[0] = c1;

  // (2) {(z,y) : {z} x fiber(y) within W} open for every Z and every open W.
  bool c2 = true;
  for (const ZContext& zc : zs) {
    int nz = zc.z->points();
    for (const PointSet& w : zc.z_dom->opens()) {
      PointSet t;
      for (int a = 0; a < nz && c2; ++a) {
        // section of w at a
        PointSet sec;
        for (int b = 0; b < nx; ++b)
          if (w.test(pair_index(a, b, nx))) sec.set(b);
        for (int yy = 0; yy < ny; ++yy)
          if (fibers[static_cast<std::size_t>(yy)].subset_of(sec))
            t.set(pair_index(a, yy, ny));
      }
      if (!zc.z_cod->is_open(t)) {
        c2 = false;
        break;
      }
    }
    if (!c2) break;
  }
  v.criteria[1] = c2;

  bool closed = is_closed_map(f);

  // (3) closed and preimages of compact sets compact.
  bool c3 = closed;
  if (c3) {
    PointSet q;
    std::uint64_t subsets = 1ull << ny;
    for (std::uint64_t m = 0; m < subsets && c3; ++m) {
      q = PointSet::from_word(m);
      if (!is_compact_subset(y, q)) continue;  // never on finite spaces
      if (!is_compact_subset(x, f.preimage(q))) c3 = false;
    }
  }
  v.criteria[2] = c3;

  // (4) closed and fibers compact.
  bool c4 = closed;
  for (int yy = 0; yy < ny && c4; ++yy)
    if (!is_compact_subset(x, fibers[static_cast<std::size_t>(yy)])) c4 = false;
  v.criteria[3] = c4;

  // (5) the fibers form a continuously indexed family of compact sets.
  IndexedFamily fam{y, x, FamilyRole::Compacts, fibers};
  v.criteria[4] = is_continuously_indexed(fam);

  return v;
}

ProperVerdict is_proper(const ContinuousMap& f, int z_bound) {
  if (z_bound < 1 || z_bound > kEnumerateMax)
    fail(ErrorKind::BoundExceeded, "z bound outside the enumeration range");
  const std::vector<FiniteSpace>& zspaces = topologies_upto(z_bound);
  std::vector<FiniteSpace> zdom, zcod;
  zdom.reserve(zspaces.size());
  zcod.reserve(zspaces.size());
  for (const FiniteSpace& z : zspaces) {
    zdom.push_back(product_space(z, f.dom()));
    zcod.push_back(product_space(z, f.cod()));
  }
  std::vector<ZContext> zs;
  zs.reserve(zspaces.size());
  for (std::size_t i = 0; i < zspaces.size(); ++i)
    zs.push_back(ZContext{&zspaces[i], &zdom[i], &zcod[i]});
  return is_proper_with(f, zs);
}

}  // namespace topolab
