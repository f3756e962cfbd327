#include "topolab/dot.hpp"

#include <sstream>

namespace topolab {

namespace {

std::string hasse(int n, const std::vector<PointSet>& up,
                  const std::vector<std::string>& labels) {
  // Merge preorder-equivalent points, then draw covering edges upward.
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) {
    if (cls[static_cast<std::size_t>(p)] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(p);
    for (int q = p; q < n; ++q)
      if (up[static_cast<std::size_t>(p)].test(q) && up[static_cast<std::size_t>(q)].test(p))
        cls[static_cast<std::size_t>(q)] = c;
  }
  int k = static_cast<int>(reps.size());
  auto leq = [&](int a, int b) {
    return up[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])].test(
        reps[static_cast<std::size_t>(b)]);
  };

  std::ostringstream out;
  out << "digraph specialization {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int c = 0; c < k; ++c) {
    out << "  n" << c << " [label=\"";
    bool first = true;
    for (int p = 0; p < n; ++p)
      if (cls[static_cast<std::size_t>(p)] == c) {
        if (!first) out << ",";
        out << (labels.empty() ? std::to_string(p) : labels[static_cast<std::size_t>(p)]);
        first = false;
      }
    out << "\"];\n";
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < k && covering; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covering = false;
      if (covering) out << "  n" << a << " -> n" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const FiniteSpace& x) {
  std::vector<PointSet> up;
  up.reserve(static_cast<std::size_t>(x.points()));
  for (int p = 0; p < x.points(); ++p) up.push_back(x.min_nbhd(p));
  return hasse(x.points(), up, x.labels());
}

std::string to_dot(const FinitePoset& p) { return hasse(p.n, p.up, {}); }

}  // namespace topolab
