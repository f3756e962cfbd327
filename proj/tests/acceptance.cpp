// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria run the full verification sweeps at their contract bounds and
// print PASS/FAIL with instance counts and wall time.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "topolab/enumerate.hpp"
#include "topolab/verify.hpp"

using namespace topolab;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void line(const std::string& name, bool pass, const std::string& detail, double secs) {
  std::printf("%-34s %s  (%s, %.1f s)\n", name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str(), secs);
  if (!pass) ++failures;
}

int workers() {
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) hc = 1;
  if (hc > 8) hc = 8;
  return static_cast<int>(hc);
}

bool run_suite(TheoremId t, Bounds b, std::uint64_t& instances, std::string& note) {
  VerificationReport r = verify(t, b, workers());
  instances += r.instances_checked;
  if (!r.pass()) {
    note += std::string(theorem_name(t)) + ": " + std::to_string(r.counterexamples.size()) +
            " counterexamples; ";
    return false;
  }
  return true;
}

void criterion_enumeration() {
  Timer timer;
  const std::uint64_t expected[] = {0, 1, 4, 29, 355};
  bool pass = true;
  std::string detail;
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t families = count_topologies_by_family_filter(n);
    std::uint64_t preorders = count_preorders(n);
    if (families != preorders || families != expected[n]) pass = false;
    detail += std::to_string(families);
    if (n < 4) detail += "/";
  }
  double secs = timer.seconds();
  if (secs >= 30.0) pass = false;
  line("enumeration-cross-check", pass, "counts " + detail, secs);
}

void criterion_sec2() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = run_suite(TheoremId::Sec2LemmaEquiv, Bounds{3, 0, 3}, n, note);
  pass = run_suite(TheoremId::Sec2Intersection, Bounds{3, 0, 3}, n, note) && pass;
  pass = run_suite(TheoremId::Sec2Universal, Bounds{3, 0, 3}, n, note) && pass;
  double secs = timer.seconds();
  if (secs >= 300.0) pass = false;
  line("sec2-lemma-equivalence", pass, std::to_string(n) + " instances" + note, secs);
}

void criterion_sec4_witness() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = run_suite(TheoremId::Sec4Witness, Bounds{4, 0, 0}, n, note);
  line("sec4-witness-construction", pass, std::to_string(n) + " covers/targets" + note,
       timer.seconds());
}

void criterion_sec6() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = run_suite(TheoremId::Sec6Proper, Bounds{3, 3, 3}, n, note);
  pass = run_suite(TheoremId::Sec6ClosedReform, Bounds{3, 3, 0}, n, note) && pass;
  line("sec6-proper-five-criteria", pass, std::to_string(n) + " maps" + note, timer.seconds());
}

void criterion_sec7() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = run_suite(TheoremId::Sec7WaybelowEquiv, Bounds{4, 0, 3}, n, note);
  pass = run_suite(TheoremId::Sec7C1, Bounds{4, 0, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec7C2, Bounds{4, 0, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec7C3, Bounds{3, 3, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec7C4, Bounds{3, 3, 0}, n, note) && pass;
  line("sec7-waybelow", pass, std::to_string(n) + " instances" + note, timer.seconds());
}

void criterion_sec5() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = true;
  pass = run_suite(TheoremId::Sec5P1, Bounds{}, n, note) && pass;
  pass = run_suite(TheoremId::Sec5P2, Bounds{}, n, note) && pass;
  pass = run_suite(TheoremId::Sec5P3, Bounds{}, n, note) && pass;
  pass = run_suite(TheoremId::Sec5P4, Bounds{}, n, note) && pass;
  pass = run_suite(TheoremId::Sec5P5, Bounds{}, n, note) && pass;
  pass = run_suite(TheoremId::Sec5P6, Bounds{}, n, note) && pass;
  pass = run_suite(TheoremId::Sec5P7, Bounds{}, n, note) && pass;
  line("sec5-propositions", pass, std::to_string(n) + " instances" + note, timer.seconds());
}

void criterion_function_spaces() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = true;
  pass = run_suite(TheoremId::Sec3Exponential, Bounds{3, 3, 3}, n, note) && pass;
  pass = run_suite(TheoremId::Sec3Quantifier, Bounds{4, 0, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec8OpensLemma, Bounds{3, 3, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec8CCompact, Bounds{3, 3, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec8CompactCoincide, Bounds{4, 0, 0}, n, note) && pass;
  pass = run_suite(TheoremId::Sec8Projection, Bounds{3, 3, 0}, n, note) && pass;
  line("sec3-sec8-function-spaces", pass, std::to_string(n) + " instances" + note,
       timer.seconds());
}

void criterion_sec8_products() {
  Timer timer;
  std::uint64_t n = 0;
  std::string note;
  bool pass = run_suite(TheoremId::Sec8ProdCharac, Bounds{3, 3, 0}, n, note);
  pass = run_suite(TheoremId::Sec8Sigma, Bounds{3, 0, 0}, n, note) && pass;
  double secs = timer.seconds();
  if (secs >= 300.0) pass = false;
  line("sec8-product-theorems", pass, std::to_string(n) + " instances" + note, secs);
}

std::string all_reports(int nworkers) {
  std::string out;
  for (const VerificationReport& r : verify_all(nworkers)) out += report_to_json(r).dump();
  return out;
}

void criterion_determinism() {
  Timer timer;
  std::string serial_a = all_reports(1);
  std::string serial_b = all_reports(1);
  std::string parallel = all_reports(workers());
  bool pass = serial_a == serial_b && serial_a == parallel;
  line("determinism", pass,
       pass ? "reports byte-identical across reruns and worker counts"
            : "reports differ",
       timer.seconds());
}

}  // namespace

int main() {
  criterion_enumeration();
  criterion_sec2();
  criterion_sec4_witness();
  criterion_sec6();
  criterion_sec7();
  criterion_sec5();
  criterion_function_spaces();
  criterion_sec8_products();
  criterion_determinism();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
