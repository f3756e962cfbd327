#include "topolab/verify.hpp"

#include <algorithm>
#include <thread>

#include "topolab/compactness.hpp"
#include "topolab/domains.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/function_space.hpp"
#include "topolab/maps.hpp"

namespace topolab {

namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  const char* summary;
  Bounds defaults;
  Bounds limits;
};

const TheoremInfo kTheorems[] = {
    {TheoremId::Sec2Intersection, "sec2-intersection",
     "intersections of continuously indexed families of opens are open",
     {3, 0, 3}, {3, 0, 3}},
    {TheoremId::Sec2Universal, "sec2-universal",
     "universally quantified sections of open sets are open",
     {3, 0, 3}, {3, 0, 3}},
    {TheoremId::Sec2LemmaEquiv, "sec2-lemma-equiv",
     "indexed intersections, quantified opens and closed projections agree",
     {3, 0, 3}, {3, 0, 3}},
    {TheoremId::Sec3Exponential, "sec3-exponential",
     "evaluation and all transposes of exponentials are continuous",
     {3, 3, 3}, {3, 3, 3}},
    {TheoremId::Sec3Quantifier, "sec3-quantifier",
     "a space is compact iff its universal quantifier is continuous",
     {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec4Indexed, "sec4-indexed",
     "families of compacts: quantified opens and hyperspace continuity",
     {3, 3, 3}, {3, 3, 3}},
    {TheoremId::Sec4Witness, "sec4-witness",
     "the witness space of a directed cover is a topology with open membership",
     {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec4CompactSet, "sec4-compact-set",
     "compactness of a subset equals openness of its quantified sections",
     {3, 0, 3}, {3, 0, 3}},
    {TheoremId::Sec5P1, "sec5-p1",
     "compact subsets of Hausdorff spaces are closed", {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec5P2, "sec5-p2",
     "closed subsets of compact spaces are compact", {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec5P3, "sec5-p3",
     "continuous images of compact sets are compact", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec5P4, "sec5-p4",
     "products of compact spaces are compact", {2, 2, 2}, {2, 2, 3}},
    {TheoremId::Sec5P5, "sec5-p5",
     "exponentials with Hausdorff codomain are Hausdorff", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec5P6, "sec5-p6",
     "exponentials of compact domain and discrete codomain are discrete",
     {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec5P7, "sec5-p7",
     "the sets {f : f(Q) within V} are open in exponentials", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec6Proper, "sec6-proper",
     "the five characterizations of proper maps agree", {3, 3, 3}, {3, 3, 3}},
    {TheoremId::Sec6ClosedReform, "sec6-closed-reform",
     "closed maps via closed images and via fiber neighbourhoods agree",
     {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec6CompactHausdorffProper, "sec6-compact-hausdorff-proper",
     "maps from compact spaces to Hausdorff spaces are proper", {3, 3, 3}, {3, 3, 3}},
    {TheoremId::Sec7WaybelowEquiv, "sec7-waybelow-equiv",
     "the four characterizations of way-below agree; the sweep matches the "
     "minimal-neighbourhood form",
     {4, 0, 3}, {4, 0, 3}},
    {TheoremId::Sec7C1, "sec7-c1",
     "closed sets way below the space are compact", {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec7C2, "sec7-c2",
     "in Hausdorff spaces way-below implies closure containment", {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec7C3, "sec7-c3",
     "continuous maps preserve way-below", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec7C4, "sec7-c4",
     "way-below is preserved by binary products", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec8OpensLemma, "sec8-opens-lemma",
     "the open-set space agrees with the Scott topology; membership and "
     "transposes behave",
     {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec8ProdCharac, "sec8-prod-charac",
     "product openness equals the sectionwise Scott characterizations",
     {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec8CCompact, "sec8-ccompact",
     "the three characterizations of generated-compactness agree", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec8Projection, "sec8-projection",
     "projections along finite spaces are closed", {3, 3, 0}, {3, 3, 0}},
    {TheoremId::Sec8CompactCoincide, "sec8-compact-coincide",
     "compact and generated-compact subsets coincide", {4, 0, 0}, {4, 0, 0}},
    {TheoremId::Sec8Sigma, "sec8-sigma",
     "the Scott topology of a product order is the product of Scott topologies",
     {3, 0, 0}, {4, 0, 0}},
};

const TheoremInfo& info(TheoremId t) {
  for (const TheoremInfo& i : kTheorems)
    if (i.id == t) return i;
  fail(ErrorKind::UnknownTheorem, "unregistered theorem id");
}

// ---------------------------------------------------------------------------
// sweep bookkeeping

struct Sweep {
  std::uint64_t instances = 0;
  std::vector<Json> cex;

  void tick() { ++instances; }
  void add(Json j) { cex.push_back(std::move(j)); }
  void merge(Sweep&& o) {
    instances += o.instances;
    for (Json& j : o.cex) cex.push_back(std::move(j));
  }
};

template <class F>
void run_one_unit(F& fn, std::size_t u, Sweep& s) {
  try {
    fn(u, s);
  } catch (const std::exception& e) {
    Json j;
    j["unit"] = u;
    j["unit_error"] = e.what();
    s.add(std::move(j));
  }
}

template <class F>
Sweep run_units(std::size_t units, int workers, F&& fn) {
  if (workers <= 1 || units <= 1) {
    Sweep s;
    for (std::size_t u = 0; u < units; ++u) run_one_unit(fn, u, s);
    return s;
  }
  int w = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), units));
  std::vector<Sweep> parts(static_cast<std::size_t>(w));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(w));
  for (int t = 0; t < w; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t u = static_cast<std::size_t>(t); u < units;
           u += static_cast<std::size_t>(w))
        run_one_unit(fn, u, parts[static_cast<std::size_t>(t)]);
    });
  for (std::thread& th : threads) th.join();
  Sweep out;
  for (Sweep& p : parts) out.merge(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// instance catalog shared by the checkers

// Family bitmask of a space: bit s set iff the subset with pattern s is open.
std::uint32_t family_mask(const FiniteSpace& x) {
  std::uint32_t fam = 0;
  for (const PointSet& u : x.opens()) fam |= 1u << u.word(0);
  return fam;
}

// Least family mask over all relabelings of the carrier.
bool is_class_representative(const FiniteSpace& x) {
  int n = x.points();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::uint32_t fam = family_mask(x);
  const std::vector<PointSet>& opens = x.opens();
  do {
    std::uint32_t relabeled = 0;
    for (const PointSet& u : opens) {
      std::uint32_t w = 0;
      u.for_each([&](int p) { w |= 1u << perm[static_cast<std::size_t>(p)]; });
      relabeled |= 1u << w;
    }
    if (relabeled < fam) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

struct Catalog {
  int max_n = 0;
  std::vector<FiniteSpace> spaces;
  std::vector<std::size_t> upto_;  // upto_[n] = spaces with <= n points
  std::size_t p3 = 0;              // spaces with <= min(3, max_n) points

  std::vector<FiniteSpace> products;  // p3 x p3, opens materialized
  std::vector<std::vector<std::vector<int>>> graphs;
  std::vector<FunctionSpace> expos;
  std::vector<std::vector<std::uint64_t>> scotts;  // per space < p3
  std::vector<OpensSpace> ospaces;
  std::vector<UpperVietoris> viet;
  bool has_products = false, has_graphs = false, has_expos = false;
  bool has_scotts = false, has_ospaces = false, has_viet = false;

  explicit Catalog(int maxn, bool iso_reduce = false) : max_n(maxn) {
    upto_.assign(static_cast<std::size_t>(maxn) + 1, 0);
    for (int n = 1; n <= maxn; ++n) {
      for (FiniteSpace& x : all_topologies(n)) {
        if (iso_reduce && !is_class_representative(x)) continue;
        x.opens();  // materialize while single-threaded
        spaces.push_back(std::move(x));
      }
      upto_[static_cast<std::size_t>(n)] = spaces.size();
    }
    p3 = upto(std::min(3, maxn));
  }

  std::size_t upto(int n) const {
    if (n <= 0) return 0;
    if (n > max_n) n = max_n;
    return upto_[static_cast<std::size_t>(n)];
  }

  std::size_t pidx(std::size_t i, std::size_t j) const { return i * p3 + j; }

  const FiniteSpace& prod(std::size_t i, std::size_t j) const {
    return products[pidx(i, j)];
  }

  void ensure_products() {
    if (has_products) return;
    products.reserve(p3 * p3);
    for (std::size_t i = 0; i < p3; ++i)
      for (std::size_t j = 0; j < p3; ++j) {
        products.push_back(product_space(spaces[i], spaces[j]));
        products.back().opens();
      }
    has_products = true;
  }

  void ensure_graphs() {
    if (has_graphs) return;
    graphs.resize(p3 * p3);
    for (std::size_t i = 0; i < p3; ++i)
      for (std::size_t j = 0; j < p3; ++j)
        graphs[pidx(i, j)] = continuous_graphs(spaces[i], spaces[j]);
    has_graphs = true;
  }

  void ensure_expos() {
    if (has_expos) return;
    // Function-space carriers can be large (27 points for the biggest pair
    // at three points) and their open families explode; all consumers test
    // openness through minimal neighbourhoods, so the families stay lazy.
    expos.reserve(p3 * p3);
    for (std::size_t i = 0; i < p3; ++i)
      for (std::size_t j = 0; j < p3; ++j)
        expos.push_back(exponential(spaces[i], spaces[j]));
    has_expos = true;
  }

  void ensure_scotts() {
    if (has_scotts) return;
    scotts.reserve(p3);
    for (std::size_t i = 0; i < p3; ++i) scotts.push_back(scott_open_families(spaces[i]));
    has_scotts = true;
  }

  void ensure_ospaces() {
    if (has_ospaces) return;
    ospaces.reserve(p3);
    for (std::size_t i = 0; i < p3; ++i)
      ospaces.push_back(sierpinski_exponential_as_opens(spaces[i]));
    has_ospaces = true;
  }

  void ensure_viet() {
    if (has_viet) return;
    viet.reserve(p3);
    for (std::size_t i = 0; i < p3; ++i) viet.push_back(upper_vietoris(spaces[i]));
    has_viet = true;
  }
};

// ---------------------------------------------------------------------------
// shared kernels

std::uint64_t word_of(const PointSet& s) { return s.word(0); }

// Row {b : (a,b) in w} of a one-word product subset.
std::uint64_t row_of(std::uint64_t w, int a, int nb) {
  return (w >> (a * nb)) & ((nb == 64 ? ~0ull : (1ull << nb) - 1));
}

// Relative-compactness matrix at small scale: bit s of wb[t] says that every
// directed open cover of subset-mask t has a member containing subset-mask s.
// One pass over all directed subfamilies, keyed by their top member.
std::vector<std::uint64_t> wb_matrix(const FiniteSpace& x) {
  int n = x.points();
  if (n > 5) fail(ErrorKind::BoundExceeded, "way-below matrices limited to 5 points");
  const std::vector<PointSet>& opens = x.opens();
  int k = static_cast<int>(opens.size());
  int subsets = 1 << n;
  std::uint64_t allmask = (subsets == 64) ? ~0ull : ((1ull << subsets) - 1);

  // covered_by[i]: subsets contained in opens[i]
  std::vector<std::uint64_t> covered_by(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    std::uint64_t u = word_of(opens[static_cast<std::size_t>(i)]);
    std::uint64_t sub = u;
    while (true) {
      covered_by[static_cast<std::size_t>(i)] |= 1ull << sub;
      if (sub == 0) break;
      sub = (sub - 1) & u;
    }
  }

  std::vector<std::uint64_t> wb(static_cast<std::size_t>(subsets), allmask);
  detail::for_each_directed_family(opens, [&](int top, std::uint64_t mask) {
    std::uint64_t covered = 0;
    std::uint64_t m = mask;
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      covered |= covered_by[static_cast<std::size_t>(i)];
    }
    // the family covers exactly the subsets of its top member
    std::uint64_t ts = covered_by[static_cast<std::size_t>(top)];
    while (ts) {
      int t = std::countr_zero(ts);
      ts &= ts - 1;
      wb[static_cast<std::size_t>(t)] &= covered;
    }
  });
  return wb;
}

Json space_json(const FiniteSpace& x) { return space_to_json(x); }

Json mask_json(std::uint64_t m) {
  Json out = Json::array();
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// checkers

using Checker = Sweep (*)(Catalog&, const Bounds&, int);

Sweep check_sec2_intersection(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  std::size_t cz = cat.upto(b.max_z), cx = cat.upto(b.max_x);
  return run_units(cz * cx, workers, [&](std::size_t u, Sweep& s) {
    std::size_t zi = u / cx, xi = u % cx;
    const FiniteSpace& z = cat.spaces[zi];
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& zx = cat.prod(zi, xi);
    const std::vector<PointSet>& famz = z.opens();
    int nx = x.points();
    std::vector<std::size_t> pick(static_cast<std::size_t>(nx), 0);
    while (true) {
      // graph {(z,i) : z in V_i} in target x index coordinates
      PointSet graph;
      for (int i = 0; i < nx; ++i)
        famz[pick[static_cast<std::size_t>(i)]].for_each(
            [&](int zp) { graph.set(pair_index(zp, i, nx)); });
      if (zx.is_open(graph)) {
        s.tick();
        PointSet inter = z.full();
        for (int i = 0; i < nx; ++i) inter &= famz[pick[static_cast<std::size_t>(i)]];
        if (!z.is_open(inter)) {
          Json j;
          j["theorem"] = "sec2-intersection";
          j["z"] = space_json(z);
          j["x"] = space_json(x);
          Json assign = Json::array();
          for (int i = 0; i < nx; ++i)
            assign.push_back(set_to_json(famz[pick[static_cast<std::size_t>(i)]]));
          j["family"] = std::move(assign);
          j["intersection"] = set_to_json(inter);
          s.add(std::move(j));
        }
      }
      int c = 0;
      while (c < nx) {
        if (++pick[static_cast<std::size_t>(c)] < famz.size()) break;
        pick[static_cast<std::size_t>(c)] = 0;
        ++c;
      }
      if (c == nx) break;
    }
  });
}

Sweep check_sec2_universal(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  std::size_t cz = cat.upto(b.max_z), cx = cat.upto(b.max_x);
  return run_units(cz * cx, workers, [&](std::size_t u, Sweep& s) {
    std::size_t zi = u / cx, xi = u % cx;
    const FiniteSpace& z = cat.spaces[zi];
    const FiniteSpace& x = cat.spaces[xi];
    PointSet full = x.full();
    for (const PointSet& w : cat.prod(zi, xi).opens()) {
      s.tick();
      PointSet q = quantified_open(z, x, w, full);
      if (!z.is_open(q)) {
        Json j;
        j["theorem"] = "sec2-universal";
        j["z"] = space_json(z);
        j["x"] = space_json(x);
        j["w"] = set_to_json(w);
        j["quantified"] = set_to_json(q);
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec2_lemma_equiv(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  std::size_t cz = cat.upto(b.max_z), cx = cat.upto(b.max_x);
  return run_units(cz * cx, workers, [&](std::size_t u, Sweep& s) {
    std::size_t zi = u / cx, xi = u % cx;
    const FiniteSpace& z = cat.spaces[zi];
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& zx = cat.prod(zi, xi);
    int nx = x.points();
    const std::vector<PointSet>& famz = z.opens();

    // (1) closure under continuously indexed intersections, by family sweep
    bool c1 = true;
    {
      std::vector<std::size_t> pick(static_cast<std::size_t>(nx), 0);
      while (true) {
        PointSet graph;
        for (int i = 0; i < nx; ++i)
          famz[pick[static_cast<std::size_t>(i)]].for_each(
              [&](int zp) { graph.set(pair_index(zp, i, nx)); });
        if (zx.is_open(graph)) {
          PointSet inter = z.full();
          for (int i = 0; i < nx; ++i) inter &= famz[pick[static_cast<std::size_t>(i)]];
          if (!z.is_open(inter)) {
            c1 = false;
            break;
          }
        }
        int c = 0;
        while (c < nx) {
          if (++pick[static_cast<std::size_t>(c)] < famz.size()) break;
          pick[static_cast<std::size_t>(c)] = 0;
          ++c;
        }
        if (c == nx) break;
      }
    }

    // (2) quantified sections of opens are open; cross-checked against the
    // sectionwise family of each open graph
    bool c2 = true;
    bool routes_agree = true;
    PointSet fullx = x.full();
    for (const PointSet& w : zx.opens()) {
      PointSet q = quantified_open(z, x, w, fullx);
      if (!z.is_open(q)) c2 = false;
      PointSet inter = z.full();
      for (int i = 0; i < nx; ++i) {
        PointSet sec;
        for (int a = 0; a < z.points(); ++a)
          if (w.test(pair_index(a, i, nx))) sec.set(a);
        inter &= sec;
      }
      if (inter != q) routes_agree = false;
    }

    // (3) the projection to z is a closed map
    std::vector<int> pg(static_cast<std::size_t>(zx.points()));
    for (int a = 0; a < z.points(); ++a)
      for (int i = 0; i < nx; ++i)
        pg[static_cast<std::size_t>(pair_index(a, i, nx))] = a;
    bool c3 = false;
    bool internal_fail = false;
    try {
      c3 = is_closed_map(ContinuousMap::make(zx, z, pg));
    } catch (const Error&) {
      internal_fail = true;
    }

    s.tick();
    if (!(c1 == c2 && c2 == c3) || !routes_agree || internal_fail) {
      Json j;
      j["theorem"] = "sec2-lemma-equiv";
      j["z"] = space_json(z);
      j["x"] = space_json(x);
      j["indexed_intersections"] = c1;
      j["quantified_opens"] = c2;
      j["projection_closed"] = c3;
      j["routes_agree"] = routes_agree;
      if (internal_fail) j["internal_failure"] = true;
      s.add(std::move(j));
    }
  });
}

Sweep check_sec3_exponential(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_expos();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y), cz = cat.upto(b.max_z);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FunctionSpace& fs = cat.expos[cat.pidx(xi, yi)];
    const FiniteSpace& y = cat.spaces[yi];

    s.tick();
    try {
      evaluation_map(fs);
    } catch (const Error&) {
      Json j;
      j["theorem"] = "sec3-exponential";
      j["part"] = "evaluation";
      j["x"] = space_json(fs.dom);
      j["y"] = space_json(fs.cod);
      s.add(std::move(j));
    }

    for (std::size_t zi = 0; zi < cz; ++zi) {
      const FiniteSpace& z = cat.spaces[zi];
      const FiniteSpace& zx = cat.prod(zi, xi);
      for_each_continuous_graph(zx, y, [&](const std::vector<int>& h) {
        s.tick();
        bool ok = true;
        std::vector<int> tg;
        try {
          tg = transpose_graph(fs, z, h);
          ok = is_continuous_graph(z, fs.space, tg);
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) {
          Json j;
          j["theorem"] = "sec3-exponential";
          j["part"] = "transpose";
          j["x"] = space_json(fs.dom);
          j["y"] = space_json(fs.cod);
          j["z"] = space_json(z);
          j["h"] = h;
          s.add(std::move(j));
        }
      });
    }
  });
}

Sweep check_sec3_quantifier(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    s.tick();
    bool compact = is_compact_subset(x, x.full());
    FunctionSpace sx = exponential(x, sierpinski());
    bool cont = true;
    try {
      universal_quantifier(sx, x.full());
    } catch (const Error&) {
      cont = false;
    }
    if (compact != cont || !compact) {
      Json j;
      j["theorem"] = "sec3-quantifier";
      j["x"] = space_json(x);
      j["compact"] = compact;
      j["quantifier_continuous"] = cont;
      s.add(std::move(j));
    }
  });
}

Sweep check_sec4_indexed(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_viet();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y), cz = cat.upto(b.max_z);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    const UpperVietoris& uv = cat.viet[xi];
    int nx = x.points(), ny = y.points();
    int qcount = 1 << nx;

    // all assignments of subsets of x to points of y
    std::vector<std::vector<int>> families;  // masks per y point
    std::vector<int> pick(static_cast<std::size_t>(ny), 0);
    std::vector<int> vgraph(static_cast<std::size_t>(ny));
    while (true) {
      // continuously indexed, by the open-preimage formula
      bool ci = true;
      for (const PointSet& open_u : x.opens()) {
        std::uint64_t uw = word_of(open_u);
        PointSet good;
        for (int a = 0; a < ny; ++a) {
          std::uint64_t qw = static_cast<std::uint64_t>(pick[static_cast<std::size_t>(a)]);
          if ((qw & ~uw) == 0) good.set(a);
        }
        if (!y.is_open(good)) {
          ci = false;
          break;
        }
      }
      // hyperspace route: continuity of the point map into the hyperspace
      for (int a = 0; a < ny; ++a) vgraph[static_cast<std::size_t>(a)] = pick[static_cast<std::size_t>(a)];
      bool cont = is_continuous_graph(y, uv.space, vgraph);
      s.tick();
      if (ci != cont) {
        Json j;
        j["theorem"] = "sec4-indexed";
        j["part"] = "hyperspace";
        j["x"] = space_json(x);
        j["y"] = space_json(y);
        Json assign = Json::array();
        for (int a = 0; a < ny; ++a)
          assign.push_back(mask_json(static_cast<std::uint64_t>(pick[static_cast<std::size_t>(a)])));
        j["family"] = std::move(assign);
        j["indexed"] = ci;
        j["hyperspace_continuous"] = cont;
        s.add(std::move(j));
      }
      if (ci) families.push_back(pick);

      int c = 0;
      while (c < ny) {
        if (++pick[static_cast<std::size_t>(c)] < qcount) break;
        pick[static_cast<std::size_t>(c)] = 0;
        ++c;
      }
      if (c == ny) break;
    }

    // quantified sections over every test space and open set
    std::vector<std::uint64_t> zset(static_cast<std::size_t>(qcount));
    for (std::size_t zi = 0; zi < cz; ++zi) {
      const FiniteSpace& z = cat.spaces[zi];
      const FiniteSpace& zy = cat.prod(zi, yi);
      int nz = z.points();
      for (const PointSet& w : cat.prod(zi, xi).opens()) {
        std::uint64_t ww = word_of(w);
        for (int qm = 0; qm < qcount; ++qm) {
          std::uint64_t zs = 0;
          for (int a = 0; a < nz; ++a)
            if ((static_cast<std::uint64_t>(qm) & ~row_of(ww, a, nx)) == 0) zs |= 1ull << a;
          zset[static_cast<std::size_t>(qm)] = zs;
        }
        for (const std::vector<int>& fam : families) {
          s.tick();
          PointSet m;
          for (int a = 0; a < nz; ++a) {
            for (int yy = 0; yy < ny; ++yy)
              if ((zset[static_cast<std::size_t>(fam[static_cast<std::size_t>(yy)])] >> a) & 1u)
                m.set(pair_index(a, yy, ny));
          }
          if (!zy.is_open(m)) {
            Json j;
            j["theorem"] = "sec4-indexed";
            j["part"] = "quantified";
            j["x"] = space_json(x);
            j["y"] = space_json(y);
            j["z"] = space_json(z);
            j["w"] = set_to_json(w);
            Json assign = Json::array();
            for (int yy = 0; yy < ny; ++yy)
              assign.push_back(mask_json(static_cast<std::uint64_t>(fam[static_cast<std::size_t>(yy)])));
            j["family"] = std::move(assign);
            s.add(std::move(j));
          }
        }
      }
    }
  });
}

Sweep check_sec4_witness(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    int n = x.points();
    detail::WitnessBase base = detail::witness_base(x);
    const std::vector<PointSet>& decode = base.decode;
    int k = static_cast<int>(decode.size());

    auto fail_json = [&](const char* what, std::uint64_t members, std::uint64_t target) {
      Json j;
      j["theorem"] = "sec4-witness";
      j["x"] = space_json(x);
      j["failure"] = what;
      Json ms = Json::array();
      std::uint64_t mm = members;
      while (mm) {
        int i = std::countr_zero(mm);
        mm &= mm - 1;
        ms.push_back(set_to_json(decode[static_cast<std::size_t>(i)]));
      }
      j["members"] = std::move(ms);
      j["target"] = mask_json(target);
      return j;
    };

    if (!base.membership_open) s.add(fail_json("membership set not open", 0, 0));

    // covered_by[i]: target masks contained in decode[i]
    std::vector<std::uint64_t> covered_by(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      std::uint64_t u = word_of(decode[static_cast<std::size_t>(i)]);
      std::uint64_t sub = u;
      while (true) {
        covered_by[static_cast<std::size_t>(i)] |= 1ull << sub;
        if (sub == 0) break;
        sub = (sub - 1) & u;
      }
    }
    // the up-family {U : T within U} is open in the witness space for each T
    int subsets = 1 << n;
    std::vector<bool> vt_open(static_cast<std::size_t>(subsets), false);
    for (int t = 0; t < subsets; ++t) {
      PointSet vt;
      for (int i = 0; i < k; ++i)
        if ((covered_by[static_cast<std::size_t>(i)] >> t) & 1u) vt.set(i);
      vt_open[static_cast<std::size_t>(t)] = base.z.is_open(vt);
    }

    detail::for_each_directed_family(decode, [&](int top, std::uint64_t mask) {
      std::vector<PointSet> members;
      std::uint64_t mm = mask;
      while (mm) {
        int i = std::countr_zero(mm);
        mm &= mm - 1;
        members.push_back(decode[static_cast<std::size_t>(i)]);
      }
      PointSet un = decode[static_cast<std::size_t>(top)];
      DirectedCover cover = make_directed_cover(x, members, un);
      WitnessSpace ws = detail::witness_space_from(base, x, cover);
      if (ws.space != base.z) {
        // general path taken; re-verify membership openness there
        if (!product_space(ws.space, x).is_open(ws.membership))
          s.add(fail_json("membership set not open", mask, word_of(un)));
      }
      std::uint64_t covered = 0;
      mm = mask;
      while (mm) {
        int i = std::countr_zero(mm);
        mm &= mm - 1;
        covered |= covered_by[static_cast<std::size_t>(i)];
      }
      // every subset of the union is a target of this cover
      std::uint64_t ts = covered_by[static_cast<std::size_t>(top)];
      while (ts) {
        int t = std::countr_zero(ts);
        ts &= ts - 1;
        s.tick();
        if (!vt_open[static_cast<std::size_t>(t)])
          s.add(fail_json("target up-family not open", mask, static_cast<std::uint64_t>(t)));
        if (!((covered >> t) & 1u))
          s.add(fail_json("no member contains the target", mask, static_cast<std::uint64_t>(t)));
      }
    });
  });
}

Sweep check_sec4_compact_set(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  std::size_t cx = cat.upto(b.max_x), cz = cat.upto(b.max_z);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    int nx = x.points();
    for (int qm = 0; qm < (1 << nx); ++qm) {
      PointSet q = PointSet::from_word(static_cast<std::uint64_t>(qm));
      bool c1 = is_compact_subset(x, q);
      bool c2 = true, c3 = true;
      for (std::size_t zi = 0; zi < cz && (c2 || c3); ++zi) {
        const FiniteSpace& z = cat.spaces[zi];
        for (const PointSet& w : cat.prod(zi, xi).opens()) {
          PointSet qo = quantified_open(z, x, w, q);
          if (!z.is_open(qo)) c2 = false;
          // mask route: {z : q within row(z)}
          std::uint64_t ww = word_of(w);
          PointSet qo2;
          for (int a = 0; a < z.points(); ++a)
            if ((static_cast<std::uint64_t>(qm) & ~row_of(ww, a, nx)) == 0) qo2.set(a);
          if (!z.is_open(qo2)) c3 = false;
          if (!c2 && !c3) break;
        }
      }
      s.tick();
      if (!(c1 == c2 && c2 == c3)) {
        Json j;
        j["theorem"] = "sec4-compact-set";
        j["x"] = space_json(x);
        j["q"] = set_to_json(q);
        j["compact"] = c1;
        j["quantified_opens"] = c2;
        j["subset_sections"] = c3;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec5_p1(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    if (!diagonal_class(x).hausdorff) return;
    int nx = x.points();
    for (int qm = 0; qm < (1 << nx); ++qm) {
      PointSet q = PointSet::from_word(static_cast<std::uint64_t>(qm));
      if (!is_compact_subset(x, q)) continue;
      s.tick();
      if (!x.is_closed(q)) {
        Json j;
        j["theorem"] = "sec5-p1";
        j["x"] = space_json(x);
        j["q"] = set_to_json(q);
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec5_p2(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    if (!is_compact_subset(x, x.full())) return;
    for (const PointSet& u : x.opens()) {
      PointSet f = u.complement_in(x.points());
      s.tick();
      if (!is_compact_subset(x, f)) {
        Json j;
        j["theorem"] = "sec5-p2";
        j["x"] = space_json(x);
        j["f"] = set_to_json(f);
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec5_p3(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_graphs();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    int nx = x.points();
    for (const std::vector<int>& g : cat.graphs[cat.pidx(xi, yi)]) {
      for (int qm = 0; qm < (1 << nx); ++qm) {
        PointSet q = PointSet::from_word(static_cast<std::uint64_t>(qm));
        if (!is_compact_subset(x, q)) continue;
        PointSet img;
        q.for_each([&](int p) { img.set(g[static_cast<std::size_t>(p)]); });
        s.tick();
        if (!is_compact_subset(y, img)) {
          Json j;
          j["theorem"] = "sec5-p3";
          j["x"] = space_json(x);
          j["y"] = space_json(y);
          j["graph"] = g;
          j["q"] = set_to_json(q);
          s.add(std::move(j));
        }
      }
    }
  });
}

Sweep check_sec5_p4(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y), cz = cat.upto(b.max_z);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    if (!is_compact_subset(x, x.full()) || !is_compact_subset(y, y.full())) return;
    FiniteSpace p = product_space(x, y);
    s.tick();
    bool direct = is_compact_subset(p, p.full());
    bool quantified = true;
    for (std::size_t zi = 0; zi < cz && quantified; ++zi) {
      const FiniteSpace& z = cat.spaces[zi];
      FiniteSpace zp = product_space(z, p);
      PointSet fullp = p.full();
      for (const PointSet& w : zp.opens()) {
        if (!z.is_open(quantified_open(z, p, w, fullp))) {
          quantified = false;
          break;
        }
      }
    }
    if (!direct || !quantified) {
      Json j;
      j["theorem"] = "sec5-p4";
      j["x"] = space_json(x);
      j["y"] = space_json(y);
      j["directed_cover_route"] = direct;
      j["quantified_route"] = quantified;
      s.add(std::move(j));
    }
  });
}

Sweep check_sec5_p5(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_expos();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    if (!diagonal_class(cat.spaces[yi]).hausdorff) return;
    const FunctionSpace& fs = cat.expos[cat.pidx(xi, yi)];
    s.tick();
    if (!diagonal_class(fs.space).hausdorff) {
      Json j;
      j["theorem"] = "sec5-p5";
      j["x"] = space_json(fs.dom);
      j["y"] = space_json(fs.cod);
      s.add(std::move(j));
    }
  });
}

Sweep check_sec5_p6(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_expos();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    if (!is_compact_subset(x, x.full())) return;
    if (!diagonal_class(cat.spaces[yi]).discrete) return;
    const FunctionSpace& fs = cat.expos[cat.pidx(xi, yi)];
    s.tick();
    if (!diagonal_class(fs.space).discrete) {
      Json j;
      j["theorem"] = "sec5-p6";
      j["x"] = space_json(fs.dom);
      j["y"] = space_json(fs.cod);
      s.add(std::move(j));
    }
  });
}

Sweep check_sec5_p7(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_expos();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FunctionSpace& fs = cat.expos[cat.pidx(xi, yi)];
    int nx = fs.dom.points();
    for (int qm = 0; qm < (1 << nx); ++qm) {
      PointSet q = PointSet::from_word(static_cast<std::uint64_t>(qm));
      for (const PointSet& v : fs.cod.opens()) {
        s.tick();
        PointSet nqv = subbasic_open(fs, q, v);
        if (!fs.space.is_open(nqv)) {
          Json j;
          j["theorem"] = "sec5-p7";
          j["x"] = space_json(fs.dom);
          j["y"] = space_json(fs.cod);
          j["q"] = set_to_json(q);
          j["v"] = set_to_json(v);
          s.add(std::move(j));
        }
      }
    }
  });
}

std::vector<ZContext> z_contexts(const Catalog& cat, std::size_t cz, std::size_t xi,
                                 std::size_t yi) {
  std::vector<ZContext> zs;
  zs.reserve(cz);
  for (std::size_t zi = 0; zi < cz; ++zi)
    zs.push_back(ZContext{&cat.spaces[zi], &cat.products[cat.pidx(zi, xi)],
                          &cat.products[cat.pidx(zi, yi)]});
  return zs;
}

Sweep check_sec6_proper(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_graphs();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y), cz = cat.upto(b.max_z);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    std::vector<ZContext> zs = z_contexts(cat, cz, xi, yi);
    for (const std::vector<int>& g : cat.graphs[cat.pidx(xi, yi)]) {
      s.tick();
      Json fault;
      bool bad = false;
      try {
        ContinuousMap f = ContinuousMap::make(x, y, g);
        ProperVerdict v = is_proper_with(f, zs);
        if (!v.agree()) {
          bad = true;
          fault["criteria"] = v.criteria;
        }
      } catch (const Error& e) {
        bad = true;
        fault["error"] = e.what();
      }
      if (bad) {
        Json j;
        j["theorem"] = "sec6-proper";
        j["x"] = space_json(x);
        j["y"] = space_json(y);
        j["graph"] = g;
        for (auto& [k, v] : fault.items()) j[k] = v;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec6_closed_reform(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_graphs();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    for (const std::vector<int>& g : cat.graphs[cat.pidx(xi, yi)]) {
      s.tick();
      auto [a, b2] = detail::closed_map_methods(x, y, g);
      if (a != b2) {
        Json j;
        j["theorem"] = "sec6-closed-reform";
        j["x"] = space_json(x);
        j["y"] = space_json(y);
        j["graph"] = g;
        j["closed_images"] = a;
        j["fiber_neighbourhoods"] = b2;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec6_chp(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_graphs();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y), cz = cat.upto(b.max_z);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    if (!is_compact_subset(x, x.full())) return;
    if (!diagonal_class(y).hausdorff) return;
    std::vector<ZContext> zs = z_contexts(cat, cz, xi, yi);
    for (const std::vector<int>& g : cat.graphs[cat.pidx(xi, yi)]) {
      s.tick();
      ContinuousMap f = ContinuousMap::make(x, y, g);
      ProperVerdict v = is_proper_with(f, zs);
      bool all = v.agree() && v.criteria[0];
      if (!all) {
        Json j;
        j["theorem"] = "sec6-compact-hausdorff-proper";
        j["x"] = space_json(x);
        j["y"] = space_json(y);
        j["graph"] = g;
        j["criteria"] = v.criteria;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec7_waybelow_equiv(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  int four_bound = std::min(b.max_x, 3);
  std::size_t cx4way = cat.upto(four_bound);
  std::size_t cz = cat.upto(b.max_z);
  std::size_t cxb = cat.upto(std::min(b.max_x, 4));

  // phase A: four-way equivalence plus the constructive route
  Sweep a = run_units(cx4way, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    int nx = x.points();
    int subsets = 1 << nx;
    std::vector<std::uint64_t> wb = wb_matrix(x);

    std::vector<std::uint64_t> c2(static_cast<std::size_t>(subsets), ~0ull);
    std::vector<std::uint64_t> c3(static_cast<std::size_t>(subsets), ~0ull);
    std::vector<std::uint64_t> c4(static_cast<std::size_t>(subsets), ~0ull);
    // cN[t] bit s: condition N holds for the pair (s, t)

    std::vector<std::uint64_t> q(static_cast<std::size_t>(subsets));
    std::vector<std::uint64_t> qn(static_cast<std::size_t>(subsets));
    for (std::size_t zi = 0; zi < cz; ++zi) {
      const FiniteSpace& z = cat.spaces[zi];
      const FiniteSpace& zx = cat.prod(zi, xi);
      int nz = z.points();
      // interiors of all subsets of z
      std::vector<std::uint64_t> zint(1u << nz);
      for (std::uint64_t m = 0; m < (1ull << nz); ++m)
        zint[m] = word_of(z.interior(PointSet::from_word(m)));
      std::vector<std::uint64_t> zopens;
      for (const PointSet& v : z.opens()) zopens.push_back(word_of(v));

      for (const PointSet& w : zx.opens()) {
        std::uint64_t ww = word_of(w);
        for (int t = 0; t < subsets; ++t) {
          std::uint64_t zs = 0;
          for (int zp = 0; zp < nz; ++zp)
            if ((static_cast<std::uint64_t>(t) & ~row_of(ww, zp, nx)) == 0) zs |= 1ull << zp;
          q[static_cast<std::size_t>(t)] = zs;
        }
        for (int t = 0; t < subsets; ++t)
          for (int sm = 0; sm < subsets; ++sm) {
            // (2): {z : {z} x t within w} within interior of {z : {z} x s within w}
            if (q[static_cast<std::size_t>(t)] & ~zint[q[static_cast<std::size_t>(sm)]])
              c2[static_cast<std::size_t>(t)] &= ~(1ull << sm);
            // (3): every such z has an open v with v x s within w
            std::uint64_t have = 0;
            for (std::uint64_t vo : zopens)
              if ((vo & ~q[static_cast<std::size_t>(sm)]) == 0) have |= vo;
            if (q[static_cast<std::size_t>(t)] & ~have)
              c3[static_cast<std::size_t>(t)] &= ~(1ull << sm);
          }
      }

      // (4): over all pairs m within interior(n)
      int pn = zx.points();
      for (std::uint64_t nm = 0; nm < (1ull << pn); ++nm) {
        std::uint64_t intn = word_of(zx.interior(PointSet::from_word(nm)));
        for (int t = 0; t < subsets; ++t) {
          std::uint64_t zs = 0;
          for (int zp = 0; zp < nz; ++zp)
            if ((static_cast<std::uint64_t>(t) & ~row_of(nm, zp, nx)) == 0) zs |= 1ull << zp;
          qn[static_cast<std::size_t>(t)] = zint[zs];  // interior of the s side
        }
        std::uint64_t mm = intn;
        while (true) {
          for (int t = 0; t < subsets; ++t) {
            std::uint64_t zs = 0;
            for (int zp = 0; zp < nz; ++zp)
              if ((static_cast<std::uint64_t>(t) & ~row_of(mm, zp, nx)) == 0) zs |= 1ull << zp;
            q[static_cast<std::size_t>(t)] = zs;
          }
          for (int t = 0; t < subsets; ++t)
            for (int sm = 0; sm < subsets; ++sm)
              if (q[static_cast<std::size_t>(t)] & ~qn[static_cast<std::size_t>(sm)])
                c4[static_cast<std::size_t>(t)] &= ~(1ull << sm);
          if (mm == 0) break;
          mm = (mm - 1) & intn;
        }
      }
    }

    // constructive reproof of (3) => (1): walk the witness space of every
    // directed cover of t and extract a member containing s
    detail::WitnessBase base = detail::witness_base(x);
    const std::vector<PointSet>& decode = base.decode;
    int k = static_cast<int>(decode.size());
    std::vector<std::uint64_t> good(static_cast<std::size_t>(subsets), 0);
    for (int sm = 0; sm < subsets; ++sm)
      for (int i = 0; i < k; ++i)
        if ((static_cast<std::uint64_t>(sm) & ~word_of(decode[static_cast<std::size_t>(i)])) == 0)
          good[static_cast<std::size_t>(sm)] |= 1ull << i;
    std::vector<std::uint64_t> constructive(static_cast<std::size_t>(subsets), ~0ull);
    detail::for_each_directed_family(decode, [&](int top, std::uint64_t mask) {
      std::uint64_t topw = word_of(decode[static_cast<std::size_t>(top)]);
      for (int t = 0; t < subsets; ++t) {
        if (static_cast<std::uint64_t>(t) & ~topw) continue;  // not a cover of t
        for (int sm = 0; sm < subsets; ++sm) {
          if (!((c3[static_cast<std::size_t>(t)] >> sm) & 1u)) continue;
          // find an open v of the witness space with top in v and v x s in w
          bool found = false;
          for (std::uint64_t v : base.upsets) {
            if (!((v >> top) & 1u)) continue;
            if (v & ~good[static_cast<std::size_t>(sm)]) continue;
            // a member in v must contain s
            std::uint64_t inside = v & mask;
            bool member_ok = false;
            while (inside) {
              int i = std::countr_zero(inside);
              inside &= inside - 1;
              if ((static_cast<std::uint64_t>(sm) &
                   ~word_of(decode[static_cast<std::size_t>(i)])) == 0) {
                member_ok = true;
                break;
              }
            }
            if (member_ok) {
              found = true;
              break;
            }
          }
          if (!found) constructive[static_cast<std::size_t>(t)] &= ~(1ull << sm);
        }
      }
    });

    for (int t = 0; t < subsets; ++t)
      for (int sm = 0; sm < subsets; ++sm) {
        s.tick();
        bool w1 = (wb[static_cast<std::size_t>(t)] >> sm) & 1u;
        bool w2 = (c2[static_cast<std::size_t>(t)] >> sm) & 1u;
        bool w3 = (c3[static_cast<std::size_t>(t)] >> sm) & 1u;
        bool w4 = (c4[static_cast<std::size_t>(t)] >> sm) & 1u;
        bool wc = (constructive[static_cast<std::size_t>(t)] >> sm) & 1u;
        bool closed_form =
            (static_cast<std::uint64_t>(sm) &
             ~word_of(x.min_open_nbhd(PointSet::from_word(static_cast<std::uint64_t>(t))))) == 0;
        if (w1 != w2 || w2 != w3 || w3 != w4 || (w3 && !wc) || w1 != closed_form) {
          Json j;
          j["theorem"] = "sec7-waybelow-equiv";
          j["x"] = space_json(x);
          j["s"] = mask_json(static_cast<std::uint64_t>(sm));
          j["t"] = mask_json(static_cast<std::uint64_t>(t));
          j["way_below"] = w1;
          j["quantified_containment"] = w2;
          j["neighbourhood_form"] = w3;
          j["interior_pairs_form"] = w4;
          j["constructive"] = wc;
          j["closed_form"] = closed_form;
          s.add(std::move(j));
        }
      }
  });

  // phase B: definitional sweep equals the minimal-neighbourhood form
  Sweep bsweep = run_units(cxb, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    int subsets = 1 << x.points();
    std::vector<std::uint64_t> wb = wb_matrix(x);
    for (int t = 0; t < subsets; ++t) {
      std::uint64_t minw =
          word_of(x.min_open_nbhd(PointSet::from_word(static_cast<std::uint64_t>(t))));
      for (int sm = 0; sm < subsets; ++sm) {
        s.tick();
        bool definitional = (wb[static_cast<std::size_t>(t)] >> sm) & 1u;
        bool closed_form = (static_cast<std::uint64_t>(sm) & ~minw) == 0;
        if (definitional != closed_form) {
          Json j;
          j["theorem"] = "sec7-waybelow-equiv";
          j["part"] = "closed-form";
          j["x"] = space_json(x);
          j["s"] = mask_json(static_cast<std::uint64_t>(sm));
          j["t"] = mask_json(static_cast<std::uint64_t>(t));
          j["definitional"] = definitional;
          j["closed_form"] = closed_form;
          s.add(std::move(j));
        }
      }
    }
  });

  a.merge(std::move(bsweep));
  return a;
}

Sweep check_sec7_c1(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    int n = x.points();
    std::vector<std::uint64_t> wb = wb_matrix(x);
    std::uint64_t fullm = word_of(x.full());
    for (const PointSet& u : x.opens()) {
      PointSet f = u.complement_in(n);
      std::uint64_t fm = word_of(f);
      if (!((wb[static_cast<std::size_t>(fullm)] >> fm) & 1u)) continue;
      s.tick();
      // compactness by the same definitional matrix
      if (!((wb[static_cast<std::size_t>(fm)] >> fm) & 1u)) {
        Json j;
        j["theorem"] = "sec7-c1";
        j["x"] = space_json(x);
        j["f"] = set_to_json(f);
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec7_c2(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    if (!diagonal_class(x).hausdorff) return;
    int subsets = 1 << x.points();
    std::vector<std::uint64_t> wb = wb_matrix(x);
    for (int t = 0; t < subsets; ++t)
      for (int sm = 0; sm < subsets; ++sm) {
        if (!((wb[static_cast<std::size_t>(t)] >> sm) & 1u)) continue;
        s.tick();
        std::uint64_t cl =
            word_of(x.closure(PointSet::from_word(static_cast<std::uint64_t>(sm))));
        if (cl & ~static_cast<std::uint64_t>(t)) {
          Json j;
          j["theorem"] = "sec7-c2";
          j["x"] = space_json(x);
          j["s"] = mask_json(static_cast<std::uint64_t>(sm));
          j["t"] = mask_json(static_cast<std::uint64_t>(t));
          s.add(std::move(j));
        }
      }
  });
}

Sweep check_sec7_c3(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_graphs();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    int subsets = 1 << x.points();
    std::vector<std::uint64_t> wbx = wb_matrix(x);
    std::vector<std::uint64_t> wby = wb_matrix(y);
    for (const std::vector<int>& g : cat.graphs[cat.pidx(xi, yi)]) {
      // image masks of all subsets
      std::vector<std::uint64_t> img(static_cast<std::size_t>(subsets), 0);
      for (int m = 1; m < subsets; ++m) {
        int p = std::countr_zero(static_cast<unsigned>(m));
        img[static_cast<std::size_t>(m)] =
            img[static_cast<std::size_t>(m & (m - 1))] | (1ull << g[static_cast<std::size_t>(p)]);
      }
      for (int t = 0; t < subsets; ++t)
        for (int sm = 0; sm < subsets; ++sm) {
          if (!((wbx[static_cast<std::size_t>(t)] >> sm) & 1u)) continue;
          s.tick();
          if (!((wby[img[static_cast<std::size_t>(t)]] >> img[static_cast<std::size_t>(sm)]) & 1u)) {
            Json j;
            j["theorem"] = "sec7-c3";
            j["x"] = space_json(x);
            j["y"] = space_json(y);
            j["graph"] = g;
            j["s"] = mask_json(static_cast<std::uint64_t>(sm));
            j["t"] = mask_json(static_cast<std::uint64_t>(t));
            s.add(std::move(j));
          }
        }
    }
  });
}

Sweep check_sec7_c4(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx * cy, workers, [&](std::size_t u, Sweep& s) {
    std::size_t xi = u / cy, yi = u % cy;
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& y = cat.spaces[yi];
    const FiniteSpace& p = cat.prod(xi, yi);
    int nx = x.points(), ny = y.points();
    std::vector<std::uint64_t> wbx = wb_matrix(x);
    std::vector<std::uint64_t> wby = wb_matrix(y);
    auto box = [&](int xm, int ym) {
      std::uint64_t out = 0;
      std::uint64_t m = static_cast<std::uint64_t>(xm);
      while (m) {
        int a = std::countr_zero(m);
        m &= m - 1;
        out |= static_cast<std::uint64_t>(ym) << (a * ny);
      }
      return out;
    };
    for (int t = 0; t < (1 << nx); ++t)
      for (int sm = 0; sm < (1 << nx); ++sm) {
        if (!((wbx[static_cast<std::size_t>(t)] >> sm) & 1u)) continue;
        for (int bm = 0; bm < (1 << ny); ++bm)
          for (int am = 0; am < (1 << ny); ++am) {
            if (!((wby[static_cast<std::size_t>(bm)] >> am) & 1u)) continue;
            s.tick();
            // the product relation decided by minimal neighbourhoods
            PointSet tb = PointSet::from_word(box(t, bm));
            PointSet sa = PointSet::from_word(box(sm, am));
            if (!sa.subset_of(p.min_open_nbhd(tb))) {
              Json j;
              j["theorem"] = "sec7-c4";
              j["x"] = space_json(x);
              j["y"] = space_json(y);
              j["s"] = mask_json(static_cast<std::uint64_t>(sm));
              j["t"] = mask_json(static_cast<std::uint64_t>(t));
              j["a"] = mask_json(static_cast<std::uint64_t>(am));
              j["b"] = mask_json(static_cast<std::uint64_t>(bm));
              s.add(std::move(j));
            }
          }
      }
  });
}

Sweep check_sec8_opens_lemma(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_scotts();
  cat.ensure_ospaces();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    const OpensSpace& os = cat.ospaces[xi];
    int k = static_cast<int>(os.decode.size());

    auto report = [&](const char* part, Json extra = Json::object()) {
      Json j;
      j["theorem"] = "sec8-opens-lemma";
      j["part"] = part;
      j["x"] = space_json(x);
      for (auto& [kk, vv] : extra.items()) j[kk] = vv;
      s.add(std::move(j));
    };

    // items 1 and 2: every Scott family is open (finer) and the topologies
    // coincide outright
    s.tick();
    for (std::uint64_t fam : cat.scotts[xi]) {
      PointSet v = PointSet::from_word(fam);
      if (!os.space.is_open(v)) report("scott-family-not-open", Json{{"family", mask_json(fam)}});
    }
    std::vector<PointSet> up(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j2 = 0; j2 < k; ++j2)
        if (os.decode[static_cast<std::size_t>(i)].subset_of(os.decode[static_cast<std::size_t>(j2)]))
          up[static_cast<std::size_t>(i)].set(j2);
    FiniteSpace scott = FiniteSpace::from_min_nbhds(k, std::move(up));
    if (os.space != scott) report("scott-coincidence");

    // item 4: the membership set is open in the product
    s.tick();
    FiniteSpace prod = product_space(os.space, x);
    PointSet member;
    for (int i = 0; i < k; ++i)
      os.decode[static_cast<std::size_t>(i)].for_each(
          [&](int p) { member.set(pair_index(i, p, x.points())); });
    if (!prod.is_open(member)) report("membership-not-open");

    // item 3: w open iff the transpose into the opens space is continuous
    int nx = x.points();
    for (std::size_t yi = 0; yi < cy; ++yi) {
      const FiniteSpace& y = cat.spaces[yi];
      const FiniteSpace& yx = cat.prod(yi, xi);
      int ny = y.points();
      std::vector<int> tg(static_cast<std::size_t>(ny));
      for (std::uint64_t wm = 0; wm < (1ull << (ny * nx)); ++wm) {
        s.tick();
        bool sections_open = true;
        for (int a = 0; a < ny && sections_open; ++a) {
          PointSet row = PointSet::from_word(row_of(wm, a, nx));
          int idx = x.open_index(row);
          if (idx < 0)
            sections_open = false;
          else
            tg[static_cast<std::size_t>(a)] = idx;
        }
        bool transpose_cont = sections_open && is_continuous_graph(y, os.space, tg);
        bool wopen = yx.is_open(PointSet::from_word(wm));
        if (wopen != transpose_cont)
          report("transpose", Json{{"y", space_json(y)}, {"w", mask_json(wm)},
                                   {"w_open", wopen},
                                   {"transpose_continuous", transpose_cont}});
      }
    }
  });
}

Sweep check_sec8_prod_charac(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_scotts();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cy * cx, workers, [&](std::size_t u, Sweep& s) {
    std::size_t yi = u / cx, xi = u % cx;
    const FiniteSpace& y = cat.spaces[yi];
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& yx = cat.prod(yi, xi);
    int total = y.points() * x.points();
    for (std::uint64_t wm = 0; wm < (1ull << total); ++wm) {
      s.tick();
      ProductCharacterization r = detail::prod_charac_with(
          y, x, PointSet::from_word(wm), yx, cat.scotts[xi], cat.scotts[yi]);
      if (!r.agree()) {
        Json j;
        j["theorem"] = "sec8-prod-charac";
        j["y"] = space_json(y);
        j["x"] = space_json(x);
        j["w"] = mask_json(wm);
        j["product_open"] = r.product_open;
        j["left"] = r.left_charac;
        j["right"] = r.right_charac;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec8_ccompact(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  cat.ensure_ospaces();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    const OpensSpace& os = cat.ospaces[xi];
    FiniteSpace sp = sierpinski();
    FunctionSpace sx = exponential(x, sp);
    int nx = x.points();
    int k = static_cast<int>(os.decode.size());
    for (int qm = 0; qm < (1 << nx); ++qm) {
      // (1) {U : q within U} open in the opens space
      PointSet uq;
      for (int i = 0; i < k; ++i)
        if ((static_cast<std::uint64_t>(qm) & ~word_of(os.decode[static_cast<std::size_t>(i)])) == 0)
          uq.set(i);
      bool c1 = os.space.is_open(uq);

      // (2) quantified sections open for every test space and open w
      bool c2 = true;
      for (std::size_t yi = 0; yi < cy && c2; ++yi) {
        const FiniteSpace& y = cat.spaces[yi];
        for (const PointSet& w : cat.prod(yi, xi).opens()) {
          std::uint64_t ww = word_of(w);
          PointSet qy;
          for (int a = 0; a < y.points(); ++a)
            if ((static_cast<std::uint64_t>(qm) & ~row_of(ww, a, nx)) == 0) qy.set(a);
          if (!y.is_open(qy)) {
            c2 = false;
            break;
          }
        }
      }

      // (3) the universal quantifier at q is continuous
      std::vector<int> ag(sx.graphs.size());
      for (std::size_t f = 0; f < sx.graphs.size(); ++f) {
        bool all_top = true;
        for (int p = 0; p < nx && all_top; ++p)
          if (((qm >> p) & 1) && sx.graphs[f][static_cast<std::size_t>(p)] != 1) all_top = false;
        ag[f] = all_top ? 1 : 0;
      }
      bool c3 = is_continuous_graph(sx.space, sp, ag);

      // cross-route: the preimage of top under the quantifier corresponds to
      // {U : q within U} along characteristic maps
      bool iso_ok = true;
      for (int i = 0; i < k; ++i) {
        std::vector<int> chi(static_cast<std::size_t>(nx), 0);
        os.decode[static_cast<std::size_t>(i)].for_each(
            [&](int p) { chi[static_cast<std::size_t>(p)] = 1; });
        int mi = sx.index_of(chi);
        bool in_uq = uq.test(i);
        bool in_pre = ag[static_cast<std::size_t>(mi)] == 1;
        if (in_uq != in_pre) iso_ok = false;
      }

      s.tick();
      if (!(c1 == c2 && c2 == c3) || !iso_ok) {
        Json j;
        j["theorem"] = "sec8-ccompact";
        j["x"] = space_json(x);
        j["q"] = mask_json(static_cast<std::uint64_t>(qm));
        j["opens_space_open"] = c1;
        j["quantified_sections"] = c2;
        j["quantifier_continuous"] = c3;
        j["iso_consistent"] = iso_ok;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec8_projection(Catalog& cat, const Bounds& b, int workers) {
  cat.ensure_products();
  std::size_t cx = cat.upto(b.max_x), cy = cat.upto(b.max_y);
  return run_units(cy * cx, workers, [&](std::size_t u, Sweep& s) {
    std::size_t yi = u / cx, xi = u % cx;
    const FiniteSpace& y = cat.spaces[yi];
    const FiniteSpace& x = cat.spaces[xi];
    const FiniteSpace& yx = cat.prod(yi, xi);
    std::vector<int> g(static_cast<std::size_t>(yx.points()));
    for (int a = 0; a < y.points(); ++a)
      for (int p = 0; p < x.points(); ++p)
        g[static_cast<std::size_t>(pair_index(a, p, x.points()))] = a;
    s.tick();
    bool closed = false;
    try {
      closed = is_closed_map(ContinuousMap::make(yx, y, g));
    } catch (const Error&) {
      closed = false;
    }
    if (!closed) {
      Json j;
      j["theorem"] = "sec8-projection";
      j["y"] = space_json(y);
      j["x"] = space_json(x);
      s.add(std::move(j));
    }
  });
}

Sweep check_sec8_compact_coincide(Catalog& cat, const Bounds& b, int workers) {
  std::size_t cx = cat.upto(b.max_x);
  return run_units(cx, workers, [&](std::size_t xi, Sweep& s) {
    const FiniteSpace& x = cat.spaces[xi];
    OpensSpace os = sierpinski_exponential_as_opens(x);
    int nx = x.points();
    int k = static_cast<int>(os.decode.size());
    std::vector<std::uint64_t> wb = wb_matrix(x);
    for (int qm = 0; qm < (1 << nx); ++qm) {
      bool compact = (wb[static_cast<std::size_t>(qm)] >> qm) & 1u;
      PointSet uq;
      for (int i = 0; i < k; ++i)
        if ((static_cast<std::uint64_t>(qm) & ~word_of(os.decode[static_cast<std::size_t>(i)])) == 0)
          uq.set(i);
      bool ccompact = os.space.is_open(uq);
      s.tick();
      if (compact != ccompact || !compact) {
        Json j;
        j["theorem"] = "sec8-compact-coincide";
        j["x"] = space_json(x);
        j["q"] = mask_json(static_cast<std::uint64_t>(qm));
        j["compact"] = compact;
        j["generated_compact"] = ccompact;
        s.add(std::move(j));
      }
    }
  });
}

Sweep check_sec8_sigma(Catalog& cat, const Bounds& b, int workers) {
  (void)cat;
  std::vector<FinitePoset> posets;
  for (int n = 1; n <= b.max_x; ++n)
    for (FinitePoset& p : all_posets(n)) posets.push_back(std::move(p));
  return run_units(posets.size() * posets.size(), workers, [&](std::size_t u, Sweep& s) {
    std::size_t di = u / posets.size(), ei = u % posets.size();
    s.tick();
    if (!check_sigma_products(posets[di], posets[ei])) {
      Json j;
      j["theorem"] = "sec8-sigma";
      j["d"] = poset_to_json(posets[di]);
      j["e"] = poset_to_json(posets[ei]);
      s.add(std::move(j));
    }
  });
}

Checker checker_for(TheoremId t) {
  switch (t) {
    case TheoremId::Sec2Intersection: return check_sec2_intersection;
    case TheoremId::Sec2Universal: return check_sec2_universal;
    case TheoremId::Sec2LemmaEquiv: return check_sec2_lemma_equiv;
    case TheoremId::Sec3Exponential: return check_sec3_exponential;
    case TheoremId::Sec3Quantifier: return check_sec3_quantifier;
    case TheoremId::Sec4Indexed: return check_sec4_indexed;
    case TheoremId::Sec4Witness: return check_sec4_witness;
    case TheoremId::Sec4CompactSet: return check_sec4_compact_set;
    case TheoremId::Sec5P1: return check_sec5_p1;
    case TheoremId::Sec5P2: return check_sec5_p2;
    case TheoremId::Sec5P3: return check_sec5_p3;
    case TheoremId::Sec5P4: return check_sec5_p4;
    case TheoremId::Sec5P5: return check_sec5_p5;
    case TheoremId::Sec5P6: return check_sec5_p6;
    case TheoremId::Sec5P7: return check_sec5_p7;
    case TheoremId::Sec6Proper: return check_sec6_proper;
    case TheoremId::Sec6ClosedReform: return check_sec6_closed_reform;
    case TheoremId::Sec6CompactHausdorffProper: return check_sec6_chp;
    case TheoremId::Sec7WaybelowEquiv: return check_sec7_waybelow_equiv;
    case TheoremId::Sec7C1: return check_sec7_c1;
    case TheoremId::Sec7C2: return check_sec7_c2;
    case TheoremId::Sec7C3: return check_sec7_c3;
    case TheoremId::Sec7C4: return check_sec7_c4;
    case TheoremId::Sec8OpensLemma: return check_sec8_opens_lemma;
    case TheoremId::Sec8ProdCharac: return check_sec8_prod_charac;
    case TheoremId::Sec8CCompact: return check_sec8_ccompact;
    case TheoremId::Sec8Projection: return check_sec8_projection;
    case TheoremId::Sec8CompactCoincide: return check_sec8_compact_coincide;
    case TheoremId::Sec8Sigma: return check_sec8_sigma;
  }
  fail(ErrorKind::UnknownTheorem, "unregistered theorem id");
}

}  // namespace

const char* theorem_name(TheoremId t) { return info(t).name; }
const char* theorem_summary(TheoremId t) { return info(t).summary; }

std::optional<TheoremId> parse_theorem(const std::string& name) {
  for (const TheoremInfo& i : kTheorems)
    if (name == i.name) return i.id;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const TheoremInfo& i : kTheorems) out.push_back(i.id);
    return out;
  }();
  return ids;
}

Bounds default_bounds(TheoremId t) { return info(t).defaults; }
Bounds limit_bounds(TheoremId t) { return info(t).limits; }

Json report_to_json(const VerificationReport& r, bool include_time) {
  Json j;
  j["theorem"] = theorem_name(r.theorem);
  Json bounds;
  bounds["max_x"] = r.bounds.max_x;
  bounds["max_y"] = r.bounds.max_y;
  bounds["max_z"] = r.bounds.max_z;
  j["bounds"] = std::move(bounds);
  j["instances_checked"] = r.instances_checked;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["counterexamples"] = r.counterexamples;
  if (include_time) j["wall_time_ms"] = r.wall_time.count();
  return j;
}

std::vector<FiniteSpace> representative_topologies(int n) {
  std::vector<FiniteSpace> out;
  for (FiniteSpace& x : all_topologies(n))
    if (is_class_representative(x)) out.push_back(std::move(x));
  return out;
}

VerificationReport verify(TheoremId t, Bounds bounds, int workers, bool iso_reduce) {
  const TheoremInfo& i = info(t);
  Bounds resolved = i.defaults;
  auto pick = [](int user, int def, int lim, const char* axis) {
    int v = user > 0 ? user : def;
    if (v > lim)
      fail(ErrorKind::BoundExceeded,
           std::string(axis) + " bound " + std::to_string(v) + " exceeds the limit " +
               std::to_string(lim));
    return v;
  };
  resolved.max_x = pick(bounds.max_x, i.defaults.max_x, i.limits.max_x, "x");
  if (i.defaults.max_y > 0)
    resolved.max_y = pick(bounds.max_y, i.defaults.max_y, i.limits.max_y, "y");
  if (i.defaults.max_z > 0)
    resolved.max_z = pick(bounds.max_z, i.defaults.max_z, i.limits.max_z, "z");

  int need = std::max({resolved.max_x, resolved.max_y, resolved.max_z, 1});
  Catalog cat(std::min(need, kEnumerateMax), iso_reduce);

  auto start = std::chrono::steady_clock::now();
  Sweep s = checker_for(t)(cat, resolved, workers);
  auto stop = std::chrono::steady_clock::now();

  VerificationReport r;
  r.theorem = t;
  r.bounds = resolved;
  r.instances_checked = s.instances;
  std::sort(s.cex.begin(), s.cex.end(),
            [](const Json& a, const Json& b2) { return a.dump() < b2.dump(); });
  r.counterexamples = std::move(s.cex);
  r.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start);
  return r;
}

std::vector<VerificationReport> verify_all(int workers, bool iso_reduce) {
  std::vector<VerificationReport> out;
  out.reserve(all_theorems().size());
  for (TheoremId t : all_theorems()) out.push_back(verify(t, Bounds{}, workers, iso_reduce));
  return out;
}

}  // namespace topolab
