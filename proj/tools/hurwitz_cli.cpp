// Command-line surface: class numbers, relation checkers, coset tables,
// tessellation point location, SVG figures, and the verification
// harness.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
// 3 descent depth exhaustion.

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/class_numbers.hpp"
#include "hurwitz/cosets.hpp"
#include "hurwitz/fundamental_domain.hpp"
#include "hurwitz/modular_group.hpp"
#include "hurwitz/tessellation.hpp"
#include "hurwitz/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using hurwitz::Int;
using hurwitz::Rat;
using json = nlohmann::ordered_json;

int env_max_depth() {
  if (const char* value = std::getenv("HURWITZ_MAX_DEPTH")) {
    try {
      int depth = std::stoi(value);
      if (depth > 0) return depth;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring bad HURWITZ_MAX_DEPTH\n";
  }
  return hurwitz::kDefaultMaxDepth;
}

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad integer literal \"" + text + "\"");
  }
}

int run_class_number(const std::string& d_text) {
  Int d = parse_int(d_text);
  std::cout << hurwitz::to_string(hurwitz::hurwitz_class_number(d)) << "\n";
  return 0;
}

int run_relation(const std::string& n_text, bool eq0) {
  Int n = parse_int(n_text);
  hurwitz::RelationSides sides =
      eq0 ? hurwitz::eq0_sides(n) : hurwitz::theorem1_sides(n);
  json record;
  if (n.fits_slong_p())
    record["n"] = static_cast<long long>(n.get_si());
  else
    record["n"] = n.get_str();
  record["lhs"] = hurwitz::to_string(sides.lhs);
  record["rhs"] = hurwitz::to_string(sides.rhs);
  record["ok"] = sides.ok();
  std::cout << record.dump() << "\n";
  return sides.ok() ? 0 : 1;
}

int run_cosets(const std::string& n_text) {
  Int n = parse_int(n_text);
  bool all_ok = true;
  std::cout << "n\tdelta_prime\tbeta\tdelta\tsum\tpredicted\tok\n";
  for (const hurwitz::CosetRow& row : hurwitz::theorem2_table(n)) {
    bool ok = row.ok();
    all_ok = all_ok && ok;
    std::cout << n << "\t" << row.label.delta_prime << "\t" << row.label.beta
              << "\t" << row.label.delta << "\t"
              << hurwitz::to_string(row.sum) << "\t"
              << hurwitz::to_string(row.predicted) << "\t"
              << (ok ? "true" : "false") << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_locate(const std::string& x_text, const std::string& y_text,
               int max_depth) {
  hurwitz::RatPoint p{hurwitz::parse_rational(x_text),
                      hurwitz::parse_rational(y_text)};
  json labels = json::array();
  for (const hurwitz::GroupElement& g : hurwitz::locate(p, max_depth))
    labels.push_back(hurwitz::to_string(hurwitz::word_from_matrix(g)));
  std::cout << labels.dump() << "\n";
  return 0;
}

int run_alpha_sum(const std::string& x_text, const std::string& y_text,
                  int max_depth) {
  Rat x = hurwitz::parse_rational(x_text);
  Rat y = hurwitz::parse_rational(y_text);
  Rat sum = hurwitz::theorem21_sum(x, y, max_depth);
  Rat predicted = Rat(1 + hurwitz::sign(y - 1)) / 2;
  json record;
  record["x"] = hurwitz::to_string(x);
  record["y"] = hurwitz::to_string(y);
  record["sum"] = hurwitz::to_string(sum);
  record["predicted"] = hurwitz::to_string(predicted);
  record["ok"] = (sum == predicted);
  std::cout << record.dump() << "\n";
  return sum == predicted ? 0 : 1;
}

int run_figure(const std::string& viewport_text, int depth,
               const std::string& out_path) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(viewport_text);
  while (std::getline(stream, part, ',')) parts.push_back(part);
  if (parts.size() != 4)
    throw std::invalid_argument(
        "viewport must be xmin,xmax,ymin,ymax rationals");
  hurwitz::Viewport vp{
      hurwitz::parse_rational(parts[0]), hurwitz::parse_rational(parts[1]),
      hurwitz::parse_rational(parts[2]), hurwitz::parse_rational(parts[3])};
  std::string svg = hurwitz::svg_render(vp, depth);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << svg;
  return 0;
}

void print_report(const hurwitz::VerifyReport& report, bool stable) {
  std::cout << (report.ok() ? "[PASS] " : "[FAIL] ") << report.suite << ": "
            << report.cases << " cases, " << report.failures.size()
            << " failures";
  if (!stable) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2f s)", report.wall_seconds);
    std::cout << buf;
  }
  std::cout << "\n";
  for (const std::string& note : report.notes)
    std::cout << "    note: " << note << "\n";
  std::size_t shown = 0;
  for (const std::string& failure : report.failures) {
    if (++shown > 20) {
      std::cout << "    ... " << (report.failures.size() - 20) << " more\n";
      break;
    }
    std::cout << "    " << failure << "\n";
  }
}

int run_verify(const std::string& suite, long n_max, int samples,
               unsigned long seed, bool stable,
               const std::string& report_tsv) {
  using hurwitz::VerifyReport;
  std::vector<VerifyReport> reports;
  const auto want = [&suite](const char* name) {
    return suite == "all" || suite == name;
  };
  if (!report_tsv.empty()) {
    std::ofstream out(report_tsv, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + report_tsv);
    out << hurwitz::tessellation_sample_tsv(samples > 0 ? samples : 500,
                                            seed);
  }
  if (want("golden")) reports.push_back(hurwitz::verify_golden_table());
  if (want("thm1"))
    reports.push_back(hurwitz::verify_theorem1(n_max > 0 ? n_max : 500));
  if (want("eq0"))
    reports.push_back(hurwitz::verify_eq0(n_max > 0 ? n_max : 500));
  if (want("thm2"))
    reports.push_back(hurwitz::verify_theorem2(n_max > 0 ? n_max : 200));
  if (want("thm21"))
    reports.push_back(
        hurwitz::verify_theorem21(samples > 0 ? samples : 1000, seed));
  if (want("tessellation")) {
    reports.push_back(
        hurwitz::verify_tessellation_oracle(samples > 0 ? samples : 500,
                                            seed));
    reports.push_back(
        hurwitz::verify_tessellation_geometry(samples > 0 ? samples : 500,
                                              seed));
  }
  if (want("equivariance"))
    reports.push_back(
        hurwitz::verify_equivariance(samples > 0 ? samples : 1000, seed));
  if (want("roundtrip")) reports.push_back(hurwitz::verify_word_roundtrip());
  if (want("crosslink"))
    reports.push_back(
        hurwitz::verify_crosslink(samples > 0 ? samples : 200, seed));
  if (reports.empty()) {
    std::cerr << "unknown suite \"" << suite
              << "\" (try: all, golden, thm1, eq0, thm2, thm21, "
                 "tessellation, equivariance, roundtrip, crosslink)\n";
    return 2;
  }
  bool all_ok = true;
  for (const VerifyReport& report : reports) {
    print_report(report, stable);
    all_ok = all_ok && report.ok();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact class-number relations over PSL2(Z) and the triangle "
      "tessellation of the half-plane y >= 1"};
  app.require_subcommand(1);
  int max_depth = env_max_depth();

  std::string d_text;
  auto* cmd_class = app.add_subcommand(
      "class-number", "Hurwitz class number H(D), exact rational");
  cmd_class->add_option("D", d_text, "D >= 0 with D = 0,3 mod 4")->required();

  std::string n_text;
  bool eq0 = false;
  auto* cmd_relation = app.add_subcommand(
      "relation", "both sides of the class number relation for n");
  cmd_relation->add_option("n", n_text, "n >= 1")->required();
  cmd_relation->add_flag("--eq0", eq0,
                         "weighted elliptic form (adds 1/6 at squares)");

  std::string cosets_n;
  auto* cmd_cosets = app.add_subcommand(
      "cosets", "per-coset subtotals of M_n as a TSV table");
  cmd_cosets->add_option("n", cosets_n, "n >= 1")->required();

  std::string x_text, y_text;
  auto* cmd_locate = app.add_subcommand(
      "locate", "labels of all triangles containing the point (x, y)");
  cmd_locate->add_option("x", x_text, "rational p or p/q")->required();
  cmd_locate->add_option("y", y_text, "rational, y >= 1")->required();
  cmd_locate->add_option("--max-depth", max_depth, "descent depth limit");

  std::string ax_text, ay_text;
  auto* cmd_alpha = app.add_subcommand(
      "alpha-sum", "sum of alpha([[y,x],[0,1]] g) over the group");
  cmd_alpha->add_option("x", ax_text, "rational p or p/q")->required();
  cmd_alpha->add_option("y", ay_text, "rational, y > 0")->required();
  cmd_alpha->add_option("--max-depth", max_depth, "descent depth limit");

  std::string viewport = "-4,5,1,6";
  int depth = 4;
  std::string out_path = "figure.svg";
  auto* cmd_figure =
      app.add_subcommand("figure", "render the tessellation as SVG");
  cmd_figure->add_option("--viewport", viewport, "xmin,xmax,ymin,ymax");
  cmd_figure->add_option("--depth", depth, "max word length");
  cmd_figure->add_option("--out", out_path, "output file");

  std::string suite = "all";
  long n_max = 0;
  int samples = 0;
  unsigned long seed = 1;
  bool stable = false;
  auto* cmd_verify =
      app.add_subcommand("verify", "run the verification suites");
  cmd_verify->add_option("--suite", suite,
                         "all, golden, thm1, eq0, thm2, thm21, tessellation, "
                         "equivariance, roundtrip, crosslink");
  cmd_verify->add_option("--n-max", n_max, "range override for thm1/eq0/thm2");
  cmd_verify->add_option("--samples", samples, "sample-count override");
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_flag("--stable", stable, "omit timings from the output");
  std::string report_tsv;
  cmd_verify->add_option("--report-tsv", report_tsv,
                         "write the tessellation sample report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_class->parsed()) return run_class_number(d_text);
    if (cmd_relation->parsed()) return run_relation(n_text, eq0);
    if (cmd_cosets->parsed()) return run_cosets(cosets_n);
    if (cmd_locate->parsed()) return run_locate(x_text, y_text, max_depth);
    if (cmd_alpha->parsed()) return run_alpha_sum(ax_text, ay_text, max_depth);
    if (cmd_figure->parsed()) return run_figure(viewport, depth, out_path);
    if (cmd_verify->parsed())
      return run_verify(suite, n_max, samples, seed, stable, report_tsv);
  } catch (const hurwitz::DepthExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
