#include "topolab/domains.hpp"

#include "topolab/enumerate.hpp"

namespace topolab {

FinitePoset make_poset(int n, std::vector<PointSet> up) {
  SpacePreorder pre{n, up};
  try {
    pre.validate();
  } catch (const Error& e) {
    fail(ErrorKind::InvalidPoset, e.what());
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (up[static_cast<std::size_t>(p)].test(q) && up[static_cast<std::size_t>(q)].test(p))
        fail(ErrorKind::InvalidPoset,
             "not antisymmetric at " + std::to_string(p) + "," + std::to_string(q));
  return FinitePoset{n, std::move(up)};
}

std::vector<FinitePoset> all_posets(int n) {
  std::vector<FinitePoset> out;
  for (SpacePreorder& p : all_preorders(n)) {
    bool antisym = true;
    for (int a = 0; a < n && antisym; ++a)
      for (int b = a + 1; b < n && antisym; ++b)
        if (p.up[static_cast<std::size_t>(a)].test(b) && p.up[static_cast<std::size_t>(b)].test(a))
          antisym = false;
    if (antisym) out.push_back(FinitePoset{n, std::move(p.up)});
  }
  return out;
}

FiniteSpace scott_topology(const FinitePoset& p) {
  return FiniteSpace::from_min_nbhds(p.n, p.up);
}

FiniteSpace sigma_functor(const FinitePoset& p) { return scott_topology(p); }

ContinuousMap sigma_map(const FinitePoset& d, const FinitePoset& e,
                        const std::vector<int>& graph) {
  if (static_cast<int>(graph.size()) != d.n)
    fail(ErrorKind::InvalidInput, "graph is not total");
  for (int v : graph)
    if (v < 0 || v >= e.n) fail(ErrorKind::PointOutOfRange, "graph value outside codomain");
  for (int p = 0; p < d.n; ++p)
    for (int q = 0; q < d.n; ++q)
      if (d.leq(p, q) &&
          !e.leq(graph[static_cast<std::size_t>(p)], graph[static_cast<std::size_t>(q)]))
        fail(ErrorKind::NotMonotone,
             "violated at " + std::to_string(p) + " <= " + std::to_string(q));
  return ContinuousMap::make(scott_topology(d), scott_topology(e), graph);
}

FinitePoset poset_product(const FinitePoset& d, const FinitePoset& e) {
  long long nn = static_cast<long long>(d.n) * e.n;
  if (nn > kMaxCarrier) fail(ErrorKind::CarrierOverflow, "product carrier too large");
  std::vector<PointSet> up(static_cast<std::size_t>(nn));
  for (int a = 0; a < d.n; ++a)
    for (int b = 0; b < e.n; ++b) {
      PointSet m;
      d.up[static_cast<std::size_t>(a)].for_each(
          [&](int a2) { m.or_shifted(e.up[static_cast<std::size_t>(b)], a2 * e.n); });
      up[static_cast<std::size_t>(pair_index(a, b, e.n))] = std::move(m);
    }
  return FinitePoset{static_cast<int>(nn), std::move(up)};
}

std::vector<std::uint64_t> scott_open_families(const FiniteSpace& x) {
  const std::vector<PointSet>& op = x.opens();
  if (op.size() > 64)
    fail(ErrorKind::BoundExceeded, "Scott families limited to 64 opens");
  std::vector<std::uint64_t> up(op.size(), 0);
  for (std::size_t i = 0; i < op.size(); ++i)
    for (std::size_t j = 0; j < op.size(); ++j)
      if (op[i].subset_of(op[j])) up[i] |= 1ull << j;
  return upset_masks(up);
}

namespace detail {

ProductCharacterization prod_charac_with(const FiniteSpace& y, const FiniteSpace& x,
                                         const PointSet& w, const FiniteSpace& product,
                                         const std::vector<std::uint64_t>& scott_x,
                                         const std::vector<std::uint64_t>& scott_y) {
  int ny = y.points(), nx = x.points();
  ProductCharacterization out;
  out.product_open = product.is_open(w);

  // rows: U_y = {x : (y,x) in w}; columns: V_x = {y : (y,x) in w}
  std::vector<PointSet> row(static_cast<std::size_t>(ny));
  std::vector<PointSet> col(static_cast<std::size_t>(nx));
  for (int a = 0; a < ny; ++a)
    for (int b = 0; b < nx; ++b)
      if (w.test(pair_index(a, b, nx))) {
        row[static_cast<std::size_t>(a)].set(b);
        col[static_cast<std::size_t>(b)].set(a);
      }

  auto charac = [](const FiniteSpace& outer, const FiniteSpace& inner,
                   const std::vector<PointSet>& sections,
                   const std::vector<std::uint64_t>& scott) {
    std::vector<int> idx(sections.size());
    for (std::size_t i = 0; i < sections.size(); ++i) {
      idx[i] = inner.open_index(sections[i]);
      if (idx[i] < 0) return false;  // a section is not open
    }
    for (std::uint64_t fam : scott) {
      PointSet v;
      for (std::size_t i = 0; i < sections.size(); ++i)
        if ((fam >> idx[i]) & 1u) v.set(static_cast<int>(i));
      if (!outer.is_open(v)) return false;
    }
    return true;
  };

  out.left_charac = charac(y, x, row, scott_x);
  out.right_charac = charac(x, y, col, scott_y);
  return out;
}

}  // namespace detail

ProductCharacterization check_prod_charac(const FiniteSpace& y, const FiniteSpace& x,
                                          const PointSet& w) {
  long long nn = static_cast<long long>(y.points()) * x.points();
  if (nn > kMaxCarrier) fail(ErrorKind::CarrierOverflow, "product carrier too large");
  if (w.max_point() >= nn) fail(ErrorKind::PointOutOfRange, "w exceeds the product carrier");
  FiniteSpace prod = product_space(y, x);
  return detail::prod_charac_with(y, x, w, prod, scott_open_families(x),
                                  scott_open_families(y));
}

bool check_sigma_products(const FinitePoset& d, const FinitePoset& e) {
  FiniteSpace lhs = scott_topology(poset_product(d, e));
  FiniteSpace rhs = product_space(scott_topology(d), scott_topology(e));
  return lhs == rhs;
}

}  // namespace topolab
