// Command-line surface: validation, enumeration, products, exponentials,
// way-below queries, witness spaces and the verification suites.
//
// Exit codes: 0 pass/valid, 1 counterexample found, 2 usage error,
// 3 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "topolab/dot.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/json_io.hpp"
#include "topolab/verify.hpp"

namespace {

using namespace topolab;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

PointSet parse_points(const std::string& csv) {
  PointSet out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = -1;
    try {
      v = std::stoi(tok);
    } catch (...) {
      fail(ErrorKind::InvalidInput, "bad point list: " + csv);
    }
    if (v < 0) fail(ErrorKind::InvalidInput, "bad point list: " + csv);
    out.set(v);
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnknownTheorem:
      return kExitUsage;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topology and domain theory workbench"};
  app.require_subcommand(1);

  // check
  std::string check_file, check_dot;
  CLI::App* check = app.add_subcommand("check", "validate a space file");
  check->add_option("space", check_file, "space JSON file")->required();
  check->add_option("--dot", check_dot, "write the specialization Hasse diagram to a DOT file");

  // enumerate
  int enum_points = 0;
  bool enum_count = false;
  std::uint64_t enum_from = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "stream all topologies on n points");
  enumerate->add_option("--points", enum_points, "number of points")->required();
  enumerate->add_flag("--count", enum_count, "print only the number of topologies");
  enumerate->add_option("--from", enum_from, "restart the stream from a family-mask cursor");

  // product
  std::string prod_a, prod_b, prod_out, prod_dot;
  CLI::App* prod = app.add_subcommand("product", "product of two spaces");
  prod->add_option("a", prod_a, "left space JSON file")->required();
  prod->add_option("b", prod_b, "right space JSON file")->required();
  prod->add_option("-o,--output", prod_out, "output file (default stdout)");
  prod->add_option("--dot", prod_dot, "write the product's Hasse diagram to a DOT file");

  // exponential
  std::string exp_x, exp_y, exp_out;
  CLI::App* expc = app.add_subcommand("exponential", "function space of two spaces");
  expc->add_option("x", exp_x, "domain space JSON file")->required();
  expc->add_option("y", exp_y, "codomain space JSON file")->required();
  expc->add_option("-o,--output", exp_out, "output file (default stdout)");

  // waybelow
  std::string wb_file, wb_s, wb_t;
  bool wb_json = false;
  CLI::App* wb = app.add_subcommand("waybelow", "decide the way-below relation");
  wb->add_option("space", wb_file, "space JSON file")->required();
  wb->add_option("--s", wb_s, "comma-separated points of s")->required();
  wb->add_option("--t", wb_t, "comma-separated points of t")->required();
  wb->add_flag("--json", wb_json, "structured output");

  // witness
  std::string wit_file, wit_cover, wit_out;
  CLI::App* wit = app.add_subcommand("witness", "witness space of a directed cover");
  wit->add_option("space", wit_file, "space JSON file")->required();
  wit->add_option("--cover", wit_cover, "cover JSON file with members and target")->required();
  wit->add_option("-o,--output", wit_out, "output file (default stdout)");

  // verify
  std::string verify_theorem;
  bool verify_all_flag = false, verify_json = false, verify_timings = false;
  bool verify_list = false, iso_reduce = false;
  int vx = 0, vy = 0, vz = 0, workers = 1;
  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--theorem", verify_theorem, "theorem id (see --list)");
  ver->add_flag("--all", verify_all_flag, "run every suite");
  ver->add_flag("--list", verify_list, "list theorem ids");
  ver->add_option("--max-x", vx, "bound for the primary space sweep");
  ver->add_option("--max-y", vy, "bound for the secondary space sweep");
  ver->add_option("--max-z", vz, "bound for the test-space sweep");
  ver->add_option("--workers", workers, "worker threads (default 1)");
  ver->add_flag("--iso-reduce", iso_reduce,
                "sweep one representative per homeomorphism class");
  ver->add_flag("--json", verify_json, "emit reports as JSON");
  ver->add_flag("--timings", verify_timings, "include wall time in JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) {
      FiniteSpace x = space_from_json(load_json_file(check_file));
      std::cout << "valid: " << x.points() << " points, " << x.open_count() << " opens\n";
      if (!check_dot.empty()) write_output(check_dot, to_dot(x));
      return kExitPass;
    }

    if (*enumerate) {
      if (enum_count) {
        std::cout << count_topologies(enum_points) << "\n";
        return kExitPass;
      }
      TopologyEnumerator e(enum_points, enum_from);
      while (auto x = e.next()) std::cout << space_to_json(*x).dump() << "\n";
      return kExitPass;
    }

    if (*prod) {
      FiniteSpace a = space_from_json(load_json_file(prod_a));
      FiniteSpace b = space_from_json(load_json_file(prod_b));
      FiniteSpace p = product_space(a, b);
      write_output(prod_out, space_to_json(p).dump(2) + "\n");
      if (!prod_dot.empty()) write_output(prod_dot, to_dot(p));
      return kExitPass;
    }

    if (*expc) {
      FiniteSpace x = space_from_json(load_json_file(exp_x));
      FiniteSpace y = space_from_json(load_json_file(exp_y));
      FunctionSpace fs = exponential(x, y);
      write_output(exp_out, function_space_to_json(fs).dump(2) + "\n");
      return kExitPass;
    }

    if (*wb) {
      FiniteSpace x = space_from_json(load_json_file(wb_file));
      PointSet s = parse_points(wb_s);
      PointSet t = parse_points(wb_t);
      bool below = way_below(x, s, t);
      if (wb_json) {
        Json j;
        j["s"] = set_to_json(s);
        j["t"] = set_to_json(t);
        j["way_below"] = below;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (below ? "true" : "false") << "\n";
      }
      return kExitPass;
    }

    if (*wit) {
      FiniteSpace x = space_from_json(load_json_file(wit_file));
      DirectedCover cover = cover_from_json(load_json_file(wit_cover), &x);
      WitnessSpace ws = witness_space(x, cover);
      Json j;
      j["space"] = space_to_json(ws.space);
      Json decode = Json::array();
      for (const PointSet& u : ws.decode) decode.push_back(set_to_json(u));
      j["decode"] = std::move(decode);
      Json wpairs = Json::array();
      ws.membership.for_each([&](int idx) {
        Json pair = Json::array();
        pair.push_back(idx / x.points());
        pair.push_back(idx % x.points());
        wpairs.push_back(std::move(pair));
      });
      j["membership"] = std::move(wpairs);
      write_output(wit_out, j.dump(2) + "\n");
      return kExitPass;
    }

    if (*ver) {
      if (verify_list) {
        for (TheoremId t : all_theorems())
          std::cout << theorem_name(t) << ": " << theorem_summary(t) << "\n";
        return kExitPass;
      }
      std::vector<TheoremId> todo;
      if (verify_all_flag) {
        todo = all_theorems();
      } else if (!verify_theorem.empty()) {
        auto t = parse_theorem(verify_theorem);
        if (!t) fail(ErrorKind::UnknownTheorem, verify_theorem);
        todo.push_back(*t);
      } else {
        std::cerr << "verify needs --theorem <id> or --all\n";
        return kExitUsage;
      }
      Bounds bounds{vx, vy, vz};
      bool all_pass = true;
      Json reports = Json::array();
      for (TheoremId t : todo) {
        VerificationReport r = verify(t, bounds, workers, iso_reduce);
        all_pass = all_pass && r.pass();
        if (verify_json) {
          reports.push_back(report_to_json(r, verify_timings));
        } else {
          std::cout << theorem_name(t) << ": " << (r.pass() ? "pass" : "FAIL") << " ("
                    << r.instances_checked << " instances";
          if (verify_timings) std::cout << ", " << r.wall_time.count() << " ms";
          std::cout << ")\n";
          for (const Json& c : r.counterexamples) std::cout << "  counterexample: " << c.dump() << "\n";
        }
      }
      if (verify_json) std::cout << reports.dump(2) << "\n";
      return all_pass ? kExitPass : kExitCounterexample;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
