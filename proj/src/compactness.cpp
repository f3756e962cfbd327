#include "topolab/compactness.hpp"

#include <algorithm>

#include "topolab/enumerate.hpp"

namespace topolab {

namespace {

// Gate for sweeping every directed subfamily of an open family.
constexpr std::uint64_t kDirectedSweepCap = 1ull << 22;

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

DirectedCover make_directed_cover(FiniteSpace space, std::vector<PointSet> members,
                                  PointSet target) {
  space.check_subset(target);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty())
    fail(ErrorKind::NotDirected, "a directed family must be nonempty");
  PointSet un;
  for (const PointSet& m : members) {
    if (!space.is_open(m))
      fail(ErrorKind::NotOpen, "cover member " + set_str(m) + " is not open");
    un |= m;
  }
  if (!target.subset_of(un))
    fail(ErrorKind::InvalidInput, "members do not cover the target");
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      PointSet u = members[i] | members[j];
      bool bounded = false;
      for (const PointSet& m : members)
        if (u.subset_of(m)) {
          bounded = true;
          break;
        }
      if (!bounded)
        fail(ErrorKind::NotDirected,
             "no member contains " + set_str(members[i]) + " union " + set_str(members[j]));
    }
  return DirectedCover{std::move(space), std::move(members), std::move(target)};
}

IndexedFamily make_indexed_family(FiniteSpace index, FiniteSpace target, FamilyRole role,
                                  std::vector<PointSet> assign) {
  if (static_cast<int>(assign.size()) != index.points())
    fail(ErrorKind::InvalidInput, "family must assign a set to every index point");
  for (const PointSet& s : assign) target.check_subset(s);
  return IndexedFamily{std::move(index), std::move(target), role, std::move(assign)};
}

namespace detail {

std::uint64_t directed_family_count(const std::vector<PointSet>& opens) {
  std::uint64_t total = 0;
  int k = static_cast<int>(opens.size());
  for (int t = 0; t < k; ++t) {
    int sub = 0;
    for (int i = 0; i < k; ++i)
      if (i != t && opens[static_cast<std::size_t>(i)].subset_of(opens[static_cast<std::size_t>(t)]))
        ++sub;
    if (sub >= 62) return ~0ull;
    total += 1ull << sub;
    if (total > (1ull << 62)) return ~0ull;
  }
  return total;
}

}  // namespace detail

namespace {

// Definitional relative-compactness sweep: every directed cover of t has a
// member containing s. Assumes the sweep is within the gate.
bool way_below_definitional(const FiniteSpace& x, const PointSet& s, const PointSet& t) {
  const std::vector<PointSet>& opens = x.opens();
  bool ok = true;
  detail::for_each_directed_family(opens, [&](int /*top*/, std::uint64_t mask) {
    if (!ok) return;
    PointSet un;
    std::uint64_t m = mask;
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      un |= opens[static_cast<std::size_t>(i)];
    }
    if (!t.subset_of(un)) return;  // not a cover of t
    m = mask;
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      if (s.subset_of(opens[static_cast<std::size_t>(i)])) return;  // member covers s
    }
    ok = false;
  });
  return ok;
}

bool directed_sweep_feasible(const FiniteSpace& x) {
  if (x.points() > 64) return false;
  return detail::directed_family_count(x.opens()) <= kDirectedSweepCap;
}

}  // namespace

bool is_compact_subset(const FiniteSpace& x, const PointSet& q) {
  x.check_subset(q);
  if (!directed_sweep_feasible(x))
    fail(ErrorKind::BoundExceeded, "open family too large for the definitional sweep");
  bool definitional = way_below_definitional(x, q, q);
  // Every subset of a finite space is compact.
  if (!definitional)
    fail(ErrorKind::InternalInvariant,
         "definitional compactness sweep contradicts the finite-space fact for " + set_str(q));
  return definitional;
}

bool way_below(const FiniteSpace& x, const PointSet& s, const PointSet& t) {
  x.check_subset(s);
  x.check_subset(t);
  bool closed_form = s.subset_of(x.min_open_nbhd(t));
  if (directed_sweep_feasible(x)) {
    bool definitional = way_below_definitional(x, s, t);
    if (definitional != closed_form)
      fail(ErrorKind::InternalInvariant,
           "way-below sweep disagrees with the minimal-neighbourhood form");
  }
  return closed_form;
}

bool interior_containment(const FiniteSpace& x, const PointSet& s, const PointSet& t) {
  x.check_subset(s);
  x.check_subset(t);
  return s.subset_of(x.interior(t));
}

PointSet quantified_open(const FiniteSpace& z, const FiniteSpace& x, const PointSet& w,
                         const PointSet& q) {
  long long nn = static_cast<long long>(z.points()) * x.points();
  if (nn > kMaxCarrier) fail(ErrorKind::CarrierOverflow, "product carrier too large");
  if (w.max_point() >= nn) fail(ErrorKind::PointOutOfRange, "w exceeds the product carrier");
  x.check_subset(q);
  int nx = x.points();
  PointSet out;
  for (int a = 0; a < z.points(); ++a) {
    bool all = true;
    q.for_each([&](int b) {
      if (all && !w.test(pair_index(a, b, nx))) all = false;
    });
    if (all) out.set(a);
  }
  return out;
}

bool is_continuously_indexed(const IndexedFamily& f) {
  int ni = f.index.points();
  if (f.role == FamilyRole::Opens) {
    for (const PointSet& v : f.assign)
      if (!f.target.is_open(v))
        fail(ErrorKind::RoleViolation,
             "opens-role family contains the non-open set " + set_str(v));
    FiniteSpace prod = product_space(f.target, f.index);
    PointSet graph;
    for (int i = 0; i < ni; ++i)
      f.assign[static_cast<std::size_t>(i)].for_each(
          [&](int zp) { graph.set(pair_index(zp, i, ni)); });
    return prod.is_open(graph);
  }
  // compacts role
  for (const PointSet& u : f.target.opens()) {
    PointSet good;
    for (int i = 0; i < ni; ++i)
      if (f.assign[static_cast<std::size_t>(i)].subset_of(u)) good.set(i);
    if (!f.index.is_open(good)) return false;
  }
  return true;
}

PointSet family_intersection(const IndexedFamily& f) {
  if (f.role != FamilyRole::Opens)
    fail(ErrorKind::RoleViolation, "family intersection is defined for opens-role families");
  for (const PointSet& v : f.assign)
    if (!f.target.is_open(v))
      fail(ErrorKind::RoleViolation,
           "opens-role family contains the non-open set " + set_str(v));
  PointSet out = f.target.full();
  for (const PointSet& v : f.assign) out &= v;
  return out;
}

UpperVietoris upper_vietoris(const FiniteSpace& x) {
  int n = x.points();
  if (n > 12) fail(ErrorKind::CarrierOverflow, "hyperspace carrier 2^n exceeds the limit");
  int hn = 1 << n;
  // The minimal neighbourhood of a subset Q is the box of the smallest open
  // containing Q: all subsets of min_open_nbhd(Q).
  std::vector<PointSet> min(static_cast<std::size_t>(hn));
  std::vector<PointSet> decode(static_cast<std::size_t>(hn));
  for (int qm = 0; qm < hn; ++qm) {
    PointSet q = PointSet::from_word(static_cast<std::uint64_t>(qm));
    decode[static_cast<std::size_t>(qm)] = q;
    std::uint64_t u = x.min_open_nbhd(q).word(0);
    // enumerate submasks of u
    PointSet nb;
    std::uint64_t sub = u;
    while (true) {
      nb.set(static_cast<int>(sub));
      if (sub == 0) break;
      sub = (sub - 1) & u;
    }
    min[static_cast<std::size_t>(qm)] = std::move(nb);
  }
  return UpperVietoris{FiniteSpace::from_min_nbhds(hn, std::move(min)), std::move(decode)};
}

std::vector<int> vietoris_point_graph(const IndexedFamily& f) {
  if (f.role != FamilyRole::Compacts)
    fail(ErrorKind::RoleViolation, "hyperspace graphs are for compacts-role families");
  std::vector<int> g;
  g.reserve(f.assign.size());
  for (const PointSet& q : f.assign) g.push_back(static_cast<int>(q.word(0)));
  return g;
}

namespace detail {

WitnessBase witness_base(const FiniteSpace& x) {
  WitnessBase base;
  base.decode = x.opens();
  int k = static_cast<int>(base.decode.size());
  if (k > 62) fail(ErrorKind::BoundExceeded, "witness construction limited to 62 opens");

  // Inclusion order on the opens; candidate opens of the witness space are
  // its up-sets (the cover condition never removes one: a finite directed
  // cover contains its union, which is itself the required member).
  std::vector<std::uint64_t> up(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (base.decode[static_cast<std::size_t>(i)].subset_of(base.decode[static_cast<std::size_t>(j)]))
        up[static_cast<std::size_t>(i)] |= 1ull << j;
  base.upsets = upset_masks(up);

  std::vector<PointSet> fam;
  fam.reserve(base.upsets.size());
  for (std::uint64_t m : base.upsets) fam.push_back(PointSet::from_word(m));
  base.z = make_space(k, fam);

  base.full_index = base.z.points() - 1;  // full carrier is the largest open
  int n = x.points();
  for (int i = 0; i < k; ++i)
    base.decode[static_cast<std::size_t>(i)].for_each(
        [&](int p) { base.membership.set(pair_index(i, p, n)); });
  base.membership_open = product_space(base.z, x).is_open(base.membership);
  return base;
}

WitnessSpace witness_space_from(const WitnessBase& base, const FiniteSpace& x,
                                const DirectedCover& cover) {
  // Opens: up-sets V of the inclusion order such that, if the union of the
  // cover lies in V, so does some member.
  std::uint64_t member_mask = 0;
  PointSet un;
  for (const PointSet& m : cover.members) un |= m;
  for (std::size_t i = 0; i < base.decode.size(); ++i)
    for (const PointSet& m : cover.members)
      if (base.decode[i] == m) member_mask |= 1ull << i;
  int union_index = -1;
  for (std::size_t i = 0; i < base.decode.size(); ++i)
    if (base.decode[i] == un) union_index = static_cast<int>(i);
  if (union_index < 0)
    fail(ErrorKind::InternalInvariant, "union of a directed open family must be open");

  std::vector<std::uint64_t> kept;
  kept.reserve(base.upsets.size());
  for (std::uint64_t v : base.upsets)
    if (!((v >> union_index) & 1u) || (v & member_mask)) kept.push_back(v);

  WitnessSpace out;
  out.decode = base.decode;
  out.membership = base.membership;
  if (kept.size() == base.upsets.size()) {
    out.space = base.z;
  } else {
    std::vector<PointSet> fam;
    fam.reserve(kept.size());
    for (std::uint64_t m : kept) fam.push_back(PointSet::from_word(m));
    out.space = make_space(static_cast<int>(base.decode.size()), fam);
    if (!product_space(out.space, x).is_open(out.membership))
      fail(ErrorKind::InternalInvariant, "membership set not open in the witness product");
    return out;
  }
  if (!base.membership_open)
    fail(ErrorKind::InternalInvariant, "membership set not open in the witness product");
  return out;
}

}  // namespace detail

WitnessSpace witness_space(const FiniteSpace& x, const DirectedCover& cover) {
  if (cover.space != x)
    fail(ErrorKind::InvalidInput, "cover does not live in the given space");
  detail::WitnessBase base = detail::witness_base(x);
  return detail::witness_space_from(base, x, cover);
}

}  // namespace topolab
