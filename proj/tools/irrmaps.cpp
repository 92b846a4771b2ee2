// Command-line front end: series tables, map and tree censuses, validation suites.
#include "irrmaps/boundary.hpp"
#include "irrmaps/integrable.hpp"
#include "irrmaps/maps.hpp"
#include "irrmaps/substitution.hpp"
#include "irrmaps/suites.hpp"
#include "irrmaps/trees.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>

using namespace irrmaps;
using nlohmann::json;

namespace {

// thrown after a failed assertion; the report is already printed
struct AssertionFailure {};

struct RunConfig {
  int d = 4;
  int order = 8;
  int max_degree = 0;  // 0: d + 2
  bool bipartite = false;
  bool pure = false;
  int n = -1;
  int central = -1;
  int m = 0;
  int m2 = 0;
  int k = -1;
  int max_edges = 7;
  int max_face = 0;
  int girth = 0;
  int i_max = -1;
  int jobs = 1;
  std::string format = "text";
  std::string out;
  std::string suite = "all";
  std::string action = "enumerate";
  std::string what = "hierarchy";
  std::string baseline;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot write " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Named series printed as text, csv rows or one json object.
void emit_series(const RunConfig& cfg, const std::vector<std::pair<std::string, Series>>& named) {
  Output out(cfg.out);
  auto& os = out.os();
  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [name, s] : named) j[name] = to_json(s);
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "context,monomial,coefficient\n";
    for (const auto& [name, s] : named)
      for (const auto& t : s.terms())
        os << name << "," << monomial_string(*s.vars(), s.exponents(t)) << "," << to_string(t.coeff) << "\n";
  } else {
    for (const auto& [name, s] : named) os << name << " = " << s.to_string() << "\n";
  }
}

void report_checks(const std::vector<CheckResult>& checks, std::ostream& os = std::cout) {
  bool ok = true;
  for (const auto& c : checks) {
    os << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.ok) os << ": " << c.detail;
    os << "\n";
    ok = ok && c.ok;
  }
  if (!ok) throw AssertionFailure{};
}

WeightSpec weights(const RunConfig& cfg) {
  if (cfg.pure) return WeightSpec::pure(cfg.d, cfg.order);
  int top = cfg.max_degree > 0 ? cfg.max_degree : cfg.d + 2;
  bool bip = cfg.bipartite;
  return WeightSpec::up_to(cfg.d, top, cfg.order, bip);
}

void dump_cache(const KernelState& ks) {
  const char* dir = std::getenv("IRRMAPS_CACHE_DIR");
  if (!dir || !*dir) return;
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / (kernel_cache_key(ks.spec) + ".json"));
  f << kernel_to_json(ks).dump() << "\n";
}

KernelState kernel_for(const RunConfig& cfg) {
  auto spec = weights(cfg);
  spec.validate();
  auto ks = solve_kernel(spec);
  dump_cache(ks);
  return ks;
}

std::vector<int> outer_degrees(const RunConfig& cfg) {
  std::vector<int> out;
  if (cfg.n >= 0) {
    out.push_back(cfg.n);
  } else {
    for (int n = 0; n <= cfg.d + 4; ++n) out.push_back(n);
  }
  return out;
}

void cmd_kernel(const RunConfig& cfg) {
  auto ks = kernel_for(cfg);
  if (cfg.format == "json") {
    Output out(cfg.out);
    out.os() << kernel_to_json(ks).dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, Series>> named{{"r^(" + std::to_string(cfg.d) + ")", ks.r},
                                                    {"s^(" + std::to_string(cfg.d) + ")", ks.s}};
  for (int k = 1; k <= cfg.d; ++k) named.emplace_back("v_" + std::to_string(k), ks.V(k));
  emit_series(cfg, named);
}

void cmd_boundary(const RunConfig& cfg) {
  auto ks = kernel_for(cfg);
  std::vector<BoundaryGF> rows;
  for (int n : outer_degrees(cfg)) rows.push_back(boundary(n, ks));
  Output out(cfg.out);
  if (cfg.format == "csv") {
    write_boundary_csv(out.os(), rows);
    return;
  }
  std::vector<std::pair<std::string, Series>> named;
  for (const auto& b : rows) named.emplace_back("F_" + std::to_string(b.n), b.series);
  emit_series(cfg, named);
}

void cmd_pointing(const RunConfig& cfg) {
  auto ks = kernel_for(cfg);
  std::vector<std::pair<std::string, Series>> named;
  std::vector<CheckResult> checks;
  for (int n : outer_degrees(cfg)) {
    named.emplace_back("P_" + std::to_string(cfg.d) + "(" + std::to_string(n) + ")", pointing_gf(n, ks));
    checks.push_back(check_pointing(n, ks));
  }
  emit_series(cfg, named);
  report_checks(checks, std::cerr);
}

void cmd_annular(const RunConfig& cfg) {
  auto ks = kernel_for(cfg);
  int central = cfg.central >= 0 ? cfg.central : cfg.d;
  std::vector<std::pair<std::string, Series>> named;
  std::vector<CheckResult> checks;
  for (int n : outer_degrees(cfg)) {
    auto a = annular_gf(n, central, ks);
    named.emplace_back("I(" + std::to_string(n) + ")", a.irreducible);
    named.emplace_back("I~(" + std::to_string(n) + ")", a.quasi_irreducible);
    auto more = check_annular(a, ks);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  emit_series(cfg, named);
  report_checks(checks, std::cerr);
}

void cmd_hd(const RunConfig& cfg) {
  auto ks = kernel_for(cfg);
  auto h = weak_irreducible_H(ks);
  emit_series(cfg, {{"h_" + std::to_string(cfg.d), h.h}, {"X_" + std::to_string(cfg.d), h.renormalized}});
  report_checks(check_weak_irreducible(ks), std::cerr);
}

void cmd_twoface(const RunConfig& cfg) {
  if (cfg.d % 2 != 0) throw std::invalid_argument("two-face series need even d");
  RunConfig c = cfg;
  c.bipartite = true;
  if (c.max_degree <= 0) c.max_degree = std::max({c.d + 2, 2 * c.m, 2 * c.m2});
  auto ks = kernel_for(c);
  emit_series(cfg, {{"closed", two_face_closed(cfg.m, cfg.m2, ks)}, {"derivative", two_face_derivative(cfg.m, cfg.m2, ks)}});
  report_checks(check_two_face(cfg.m, cfg.m2, ks), std::cerr);
}

void cmd_enumerate(const RunConfig& cfg) {
  if (cfg.max_edges < 0 || cfg.max_edges > kMaxEdges)
    throw std::invalid_argument("--max-edges must be in 0.." + std::to_string(kMaxEdges));
  MapFilter filter;
  filter.min_girth = cfg.girth;
  filter.max_inner_degree = cfg.max_face;
  filter.outer_degree = cfg.n;
  const bool unfiltered = cfg.girth == 0 && cfg.max_face == 0 && cfg.n < 0;
  Output out(cfg.out);
  auto& os = out.os();
  json rows = json::array();
  if (cfg.format == "csv") os << "edges,maps,formula\n";
  bool ok = true;
  for (int e = 0; e <= cfg.max_edges; ++e) {
    long count = 0;
    enumerate_maps(e, filter, [&](const CombMap&) { ++count; });
    std::string formula = unfiltered ? rooted_map_count(e).get_str() : "";
    if (unfiltered) ok = ok && Integer(count) == rooted_map_count(e);
    if (cfg.format == "csv")
      os << e << "," << count << "," << formula << "\n";
    else if (cfg.format == "json")
      rows.push_back({{"edges", e}, {"maps", count}, {"formula", formula}});
    else
      os << e << " edges: " << count << " maps" << (unfiltered ? " (formula " + formula + ")" : "") << "\n";
  }
  if (cfg.format == "json") os << rows.dump(2) << "\n";
  if (!ok) {
    std::cerr << "map counts differ from the formula\n";
    throw AssertionFailure{};
  }
}

void cmd_crossvalidate(const RunConfig& cfg) {
  if (cfg.n < 0) throw std::invalid_argument("--n is required");
  auto rep = cross_validate(cfg.d, cfg.n, cfg.max_edges, cfg.max_face, cfg.jobs);
  Output out(cfg.out);
  auto& os = out.os();
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"context", r.context},
                      {"monomial", r.monomial},
                      {"expected", to_string(r.expected)},
                      {"computed", r.computed},
                      {"status", r.ok() ? "ok" : "mismatch"}});
    os << json{{"d", rep.d}, {"n", rep.n}, {"max_edges", rep.max_edges}, {"ok", rep.ok()}, {"rows", rows}}.dump(2)
       << "\n";
  } else {
    os << "context,monomial,expected,computed,status\n";
    for (const auto& r : rep.rows)
      os << r.context << "," << r.monomial << "," << to_string(r.expected) << "," << r.computed << ","
         << (r.ok() ? "ok" : "mismatch") << "\n";
  }
  if (!rep.ok()) {
    std::cerr << "series and exhaustive counts disagree\n";
    throw AssertionFailure{};
  }
}

void cmd_trees(const RunConfig& cfg) {
  if (cfg.d < 3) throw std::invalid_argument("--d must be >= 3");
  if (cfg.max_edges < 1 || cfg.max_edges > 12) throw std::invalid_argument("--max-edges must be in 1..12");
  std::vector<int> ks;
  if (cfg.k >= 0)
    ks.push_back(cfg.k);
  else
    for (int k = 1; k <= cfg.d - 2; ++k) ks.push_back(k);
  Output out(cfg.out);
  auto& os = out.os();
  std::vector<CheckResult> checks;
  for (int k : ks) {
    long total = 0, bad = 0;
    enumerate_trees(cfg.d, k, cfg.max_edges, [&](const OrientedTree& t) {
      ++total;
      if (cfg.action == "enumerate") {
        os << tree_to_json(t).dump() << "\n";
      } else if (cfg.action == "closure") {
        auto pkg = closure(t);
        os << json{{"tree", tree_to_json(t)}, {"map", map_to_json(pkg.map)}, {"apex", pkg.apex}, {"k", pkg.k}, {"p", pkg.p}}
                  .dump()
           << "\n";
      } else if (cfg.action == "roundtrip") {
        auto pkg = closure(t);
        if (!certify_slice(pkg) || open_slice(pkg, cfg.d) != t) ++bad;
      } else {
        throw std::invalid_argument("--action must be enumerate, closure or roundtrip");
      }
    });
    if (cfg.action == "roundtrip")
      checks.push_back({"d=" + std::to_string(cfg.d) + " k=" + std::to_string(k) + " roundtrip over " +
                            std::to_string(total) + " trees",
                        bad == 0, std::to_string(bad) + " failures"});
  }
  report_checks(checks);
}

void cmd_integrable(const RunConfig& cfg) {
  int i_max = cfg.i_max >= 0 ? cfg.i_max : cfg.order + 2;
  Output out(cfg.out);
  std::vector<CheckResult> checks;
  if (!cfg.baseline.empty()) {
    Baseline b;
    if (cfg.baseline == "quadrangular")
      b = Baseline::Quadrangular;
    else if (cfg.baseline == "triangular")
      b = Baseline::Triangular;
    else
      throw std::invalid_argument("--baseline must be quadrangular or triangular");
    checks = cfg.what == "closed" ? closed_form_check(b, cfg.order, i_max) : conserved_quantities(b, cfg.order, i_max);
    report_checks(checks, out.os());
    return;
  }
  if (cfg.what == "hierarchy") {
    auto h = hierarchy(cfg.d, cfg.order, i_max);
    write_hierarchy_csv(out.os(), h);
    checks = check_hierarchy(h, solve_distance_kernel(WeightSpec::pure(cfg.d, cfg.order), i_max));
    report_checks(checks, std::cerr);
  } else if (cfg.what == "conserved") {
    report_checks(conserved_quantities(cfg.d, cfg.order, i_max), out.os());
  } else if (cfg.what == "closed") {
    report_checks(closed_form_check(cfg.d, cfg.order, i_max), out.os());
  } else if (cfg.what == "depth") {
    auto dk = solve_distance_kernel(WeightSpec::pure(cfg.d, cfg.order), i_max);
    auto dep = solve_depth_kernel(cfg.d, cfg.order, i_max);
    auto& os = out.os();
    os << "k,p,n,coefficient\n";
    for (int k = 1; k <= cfg.d - 2; ++k)
      for (int p = 0; p <= i_max; ++p)
        for (int n = 0; n <= cfg.order; ++n) os << k << "," << p << "," << n << "," << to_string(dep.V(k, p).coeff_of("z", n)) << "\n";
    report_checks(check_depth_kernel(dep, dk, std::min(cfg.order, 7)), std::cerr);
  } else {
    throw std::invalid_argument("--what must be hierarchy, conserved, closed or depth");
  }
}

void cmd_validate(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.suite == "all")
    names = suite_names();
  else
    names.push_back(cfg.suite);
  std::vector<SuiteReport> reports;
  for (const auto& name : names) {
    auto rep = run_suite(name, cfg.jobs);
    for (const auto& c : rep.checks) {
      std::cout << (c.ok ? "PASS " : "FAIL ") << rep.name << ": " << c.name;
      if (!c.ok) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << (rep.ok() ? "PASS " : "FAIL ") << "suite " << rep.name << (rep.in_time() ? "" : " (over time budget)")
              << "\n";
    reports.push_back(std::move(rep));
  }
  json summary = suite_summary(reports);
  if (cfg.out.empty()) {
    std::cout << summary.dump(2) << "\n";
  } else {
    Output out(cfg.out);
    out.os() << summary.dump(2) << "\n";
  }
  if (!summary["ok"].get<bool>()) throw AssertionFailure{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible planar map series, censuses and validation"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", cfg.out, "Output file (stdout by default)");
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "Girth parameter d")->check(CLI::Range(0, 12));
    sub->add_option("--order", cfg.order, "Truncation order in total degree")->check(CLI::Range(0, 60));
    sub->add_option("--max-degree", cfg.max_degree, "Largest weighted face degree M (default d+2)")->check(CLI::Range(0, 20));
    sub->add_flag("--bipartite", cfg.bipartite, "Even face degrees only");
    sub->add_flag("--pure", cfg.pure, "d-angular faces only");
    add_format(sub);
  };

  std::map<CLI::App*, void (*)(const RunConfig&)> handlers;
  auto series_cmd = [&](const char* name, const char* help, void (*fn)(const RunConfig&)) {
    auto* sub = app.add_subcommand(name, help);
    add_weights(sub);
    handlers[sub] = fn;
    return sub;
  };

  series_cmd("kernel", "Solve the slice kernel and dump R, S, V_k", cmd_kernel);
  series_cmd("boundary", "Boundary series F_n", cmd_boundary)->add_option("--n", cfg.n, "Outer degree (default 0..d+4)");
  series_cmd("pointing", "Maps with a marked inner d-face", cmd_pointing)->add_option("--n", cfg.n, "Outer degree");
  auto* ann = series_cmd("annular", "Irreducible and quasi-irreducible annular maps", cmd_annular);
  ann->add_option("--n", cfg.n, "Outer degree");
  ann->add_option("--central", cfg.central, "Central face degree (default d)");
  series_cmd("hd", "Weakly irreducible dissections of the d-gon", cmd_hd);
  auto* two = series_cmd("twoface", "Two marked faces, bipartite", cmd_twoface);
  two->add_option("--m", cfg.m, "Half degree of the first face")->required();
  two->add_option("--m2", cfg.m2, "Half degree of the second face")->required();

  auto* en = app.add_subcommand("enumerate", "Census of rooted planar maps");
  en->add_option("--max-edges", cfg.max_edges, "Largest edge count");
  en->add_option("--girth", cfg.girth, "Minimum girth");
  en->add_option("--max-face", cfg.max_face, "Largest inner face degree");
  en->add_option("--n", cfg.n, "Outer degree");
  add_format(en);
  handlers[en] = cmd_enumerate;

  auto* cv = app.add_subcommand("crossvalidate", "Series against exhaustive map counts");
  cv->add_option("--d", cfg.d, "Girth parameter d")->check(CLI::Range(0, 12));
  cv->add_option("--n", cfg.n, "Outer degree")->required();
  cv->add_option("--max-edges", cfg.max_edges, "Largest edge count");
  cv->add_option("--max-face", cfg.max_face, "Largest inner face degree (0: any)");
  cv->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  add_format(cv);
  handlers[cv] = cmd_crossvalidate;

  auto* tr = app.add_subcommand("trees", "Oriented trees, closure and opening");
  tr->add_option("--d", cfg.d, "Face degree d")->check(CLI::Range(3, 12));
  tr->add_option("--k", cfg.k, "Tree type k (default all)");
  tr->add_option("--max-edges", cfg.max_edges, "Largest edge count");
  tr->add_option("--action", cfg.action, "enumerate, closure or roundtrip");
  add_format(tr);
  handlers[tr] = cmd_trees;

  auto* in = app.add_subcommand("integrable", "Hierarchies, conserved quantities and product forms");
  in->add_option("--d", cfg.d, "Family: 3, 4, 6 or 8")->check(CLI::IsMember({3, 4, 6, 8}));
  in->add_option("--order", cfg.order, "Truncation order")->check(CLI::Range(0, 40));
  in->add_option("--i-max", cfg.i_max, "Largest index (default order+2)")->check(CLI::Range(0, 60));
  in->add_option("--what", cfg.what, "hierarchy, conserved, closed or depth");
  in->add_option("--baseline", cfg.baseline, "quadrangular or triangular (weights instead of d)");
  add_format(in);
  handlers[in] = cmd_integrable;

  auto* va = app.add_subcommand("validate", "Run validation suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  va->add_option("--suite", cfg.suite, "Suite name or all")->check(CLI::IsMember(choices));
  va->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  va->add_option("--out", cfg.out, "Write the JSON summary here");
  handlers[va] = cmd_validate;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) fn(cfg);
  } catch (const AssertionFailure&) {
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
