#include "irrmaps/suites.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/combinatorics.hpp"
#include "irrmaps/integrable.hpp"
#include "irrmaps/maps.hpp"
#include "irrmaps/paths.hpp"
#include "irrmaps/substitution.hpp"
#include "irrmaps/trees.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace irrmaps {

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; }));
}

namespace {

using Clock = std::chrono::steady_clock;

SuiteReport timed(const std::string& name, double budget, const std::function<void(std::vector<CheckResult>&)>& body) {
  SuiteReport rep;
  rep.name = name;
  rep.budget = budget;
  auto start = Clock::now();
  try {
    body(rep.checks);
  } catch (const std::exception& e) {
    rep.checks.push_back({name + " aborted", false, e.what()});
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

void append(std::vector<CheckResult>& out, const std::vector<CheckResult>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

void append_prefixed(std::vector<CheckResult>& out, const std::string& prefix, std::vector<CheckResult> more) {
  for (auto& c : more) c.name = prefix + c.name;
  append(out, more);
}

// Sparse table {exponent, coefficient}; every other coefficient up to `top`
// must vanish.
CheckResult table_check(const std::string& name, const Series& s, const std::string& var, int top,
                        const std::vector<std::pair<int, const char*>>& table) {
  CheckResult c{name, true, {}};
  if (s.order() < top) return {name, false, "series order below the table"};
  std::map<int, Rational> want;
  for (const auto& [e, v] : table) want[e] = Rational(v);
  for (int n = 0; n <= top; ++n) {
    Rational expect = want.count(n) ? want[n] : Rational(0);
    Rational got = s.coeff_of(var, n);
    if (got != expect) {
      c.ok = false;
      c.detail = var + "^" + std::to_string(n) + ": expected " + to_string(expect) + ", got " + to_string(got);
      break;
    }
  }
  return c;
}

std::vector<std::pair<int, const char*>> dense(std::initializer_list<const char*> coeffs) {
  std::vector<std::pair<int, const char*>> out;
  int e = 0;
  for (const char* c : coeffs) out.emplace_back(e++, c);
  return out;
}

CheckResult tally(const std::string& name, long total, long bad, const std::string& first_bad) {
  CheckResult c{name + " (" + std::to_string(total) + " cases)", bad == 0 && total > 0, {}};
  if (total == 0) c.detail = "no cases";
  if (bad > 0) c.detail = std::to_string(bad) + " failures, first: " + first_bad;
  return c;
}

}  // namespace

// ---- 1 ----

SuiteReport paper_tables_suite() {
  return timed("paper-tables", 30, [](std::vector<CheckResult>& out) {
    auto k6 = solve_kernel(WeightSpec::pure(6, 7));
    out.push_back(table_check("r^(6) to z^6", k6.r.truncate(6), "z", 6, dense({"1", "1", "3", "17", "120", "948", "8022"})));
    out.push_back(table_check("f_8^(6) to z^7", boundary_gf(8, k6), "z", 7,
                              dense({"14", "8", "4", "8", "34", "192", "1264", "9168"})));
    out.push_back(table_check("f_10^(6) to z^7", boundary_gf(10, k6), "z", 7,
                              dense({"42", "45", "45", "105", "450", "2547", "16785", "121815"})));

    auto k5 = solve_kernel(WeightSpec::pure(5, 14));
    out.push_back(table_check("r^(5) to z^12", k5.r, "z", 12,
                              {{0, "1"}, {2, "3"}, {4, "73"}, {6, "3015"}, {8, "151842"}, {10, "8493934"}, {12, "507165545"}}));
    out.push_back(table_check("s^(5) to z^13", k5.s, "z", 13,
                              {{1, "1"}, {3, "12"}, {5, "422"}, {7, "19780"}, {9, "1062275"}, {11, "61781482"},
                               {13, "3786534059"}}));
    out.push_back(table_check("f_6^(5) to z^14", boundary_gf(6, k5), "z", 14,
                              {{0, "5"}, {2, "3"}, {4, "18"}, {6, "422"}, {8, "14835"}, {10, "637365"}, {12, "30890741"},
                               {14, "1622800311"}}));

    auto h3 = weak_irreducible_H(solve_kernel(WeightSpec::pure(3, 30))).h;
    out.push_back(table_check("h_3 to z^30", h3, "z", 30,
                              {{1, "1"}, {3, "1"}, {7, "1"}, {9, "3"}, {11, "12"}, {13, "52"}, {15, "241"}, {17, "1173"},
                               {19, "5929"}, {21, "30880"}, {23, "164796"}, {25, "897380"}, {27, "4970296"},
                               {29, "27930828"}}));
    auto h4 = weak_irreducible_H(solve_kernel(WeightSpec::pure(4, 19))).h;
    out.push_back(table_check("h_4 to z^19", h4, "z", 19,
                              dense({"0", "1", "2", "0", "0", "1", "0", "4", "6", "24", "66", "214", "676", "2209", "7296",
                                     "24460", "82926", "284068", "981882", "3421318"})));
    auto h5 = weak_irreducible_H(solve_kernel(WeightSpec::pure(5, 20))).h;
    out.push_back(table_check("h_5 to z^20", h5, "z", 20,
                              {{1, "1"}, {3, "5"}, {5, "46"}, {7, "1350"}, {9, "52360"}, {11, "2382508"}, {13, "119914425"},
                               {15, "6470326059"}, {17, "367369835490"}, {19, "21686295649075"}}));
    auto h6 = weak_irreducible_H(solve_kernel(WeightSpec::pure(6, 14))).h;
    out.push_back(table_check("h_6 to z^14", h6, "z", 14,
                              dense({"0", "1", "3", "2", "5", "42", "266", "1986", "15552", "127738", "1086998", "9517362",
                                     "85291440", "779292490", "7237661226"})));
  });
}

// ---- 2 ----

SuiteReport closed_coefficient_suite() {
  return timed("closed-coefficients", 10, [](std::vector<CheckResult>& out) {
    auto k4 = solve_kernel(WeightSpec::pure(4, 22));
    Series f6 = boundary_gf(6, k4);
    for (int n = 0; n <= 20; ++n) {
      Rational expect = make_rational(6 * catalan(n), n + 2);
      CheckResult c{"[z^" + std::to_string(n + 2) + "] f_6^(4) = 6 Cat(n)/(n+2)", f6.coeff_of("z", n + 2) == expect, {}};
      if (!c.ok) c.detail = "got " + to_string(f6.coeff_of("z", n + 2));
      out.push_back(c);
    }
    auto k3 = solve_kernel(WeightSpec::pure(3, 32));
    Series f4 = boundary_gf(4, k3);
    for (int n = 0; n <= 15; ++n) {
      Rational expect = make_rational(2 * binomial(3 * n, n), Integer((n + 1) * (2 * n + 1)));
      CheckResult c{"[z^" + std::to_string(2 * n + 2) + "] f_4^(3)", f4.coeff_of("z", 2 * n + 2) == expect, {}};
      if (!c.ok) c.detail = "got " + to_string(f4.coeff_of("z", 2 * n + 2));
      out.push_back(c);
    }
    auto k4s = solve_kernel(WeightSpec::pure(4, 15));
    Series x4 = renormalized_from_kernel(k4s);
    for (int p = 3; p <= 6; ++p) {
      Series f = simple_boundary_gf(p, k4s.r, x4);
      for (int k = 0; k <= 15; ++k) {
        // (3p-3)! / ((p-3)! (2p-1)!) * (2k-p-1)! / (k! (k-p+1)!)
        Rational expect = 0;
        if (2 * k - p - 1 >= 0 && k - p + 1 >= 0)
          expect = make_rational(factorial(3 * p - 3) * factorial(2 * k - p - 1),
                                 factorial(p - 3) * factorial(2 * p - 1) * factorial(k) * factorial(k - p + 1));
        CheckResult c{"simple boundary 2p=" + std::to_string(2 * p) + " k=" + std::to_string(k),
                      f.coeff_of("z", k) == expect && simple_boundary_coeff(p, k) == expect, {}};
        if (!c.ok) c.detail = "series " + to_string(f.coeff_of("z", k)) + ", formula " + to_string(expect);
        out.push_back(c);
      }
    }
  });
}

// ---- 3 ----

SuiteReport identity_suite() {
  return timed("identities", 120, [](std::vector<CheckResult>& out) {
    for (int d = 1; d <= 6; ++d) {
      const std::string tag = "pointing d=" + std::to_string(d);
      auto pure = solve_kernel(WeightSpec::pure(d, 8));
      for (int n = 0; n <= d + 4; ++n) {
        auto c = check_pointing(n, pure);
        c.name = tag + " pure " + c.name;
        out.push_back(c);
      }
      for (int j = d + 1; j <= d + 2; ++j) {
        WeightSpec mixed;
        mixed.d = d;
        mixed.order = 8;
        mixed.face_degrees = {j};
        auto ks = solve_kernel(mixed);
        for (int n = 0; n <= d + 4; ++n) {
          auto c = check_pointing(n, ks);
          c.name = tag + " x" + std::to_string(j) + " " + c.name;
          out.push_back(c);
        }
      }
    }
    for (int d = 1; d <= 4; ++d) {
      const std::string tag = "substitution d=" + std::to_string(d) + " ";
      append_prefixed(out, tag, check_substitution(WeightSpec::pure(d, 6), {0, 1, 2, d, d + 2, 8}));
      WeightSpec mixed;
      mixed.d = d;
      mixed.order = 6;
      mixed.face_degrees = {d + 1};
      append_prefixed(out, tag + "mixed ", check_substitution(mixed, {d, d + 1, d + 3}));
    }
    append_prefixed(out, "hypergeometric ", check_hypergeometric(6, 12, 12));

    // ballot matrix and its inverse
    {
      CheckResult c{"ballot matrix inverse size 12", true, {}};
      for (long m = 0; m < 12 && c.ok; ++m)
        for (long l = 0; l < 12; ++l) {
          Integer sum = 0;
          for (long k = 0; k < 12; ++k) sum += ballot(m, k) * ballot_inverse(k, l);
          if (sum != (m == l ? 1 : 0)) {
            c.ok = false;
            c.detail = "entry " + std::to_string(m) + "," + std::to_string(l);
            break;
          }
        }
      out.push_back(c);
    }
    // nonnegative path matrix times its inverse, symbolic in r and s
    {
      auto v = make_vars({"r", "s"});
      Series r = Series::variable(v, 30, "r");
      Series s = Series::variable(v, 30, "s");
      CheckResult c{"P+ Q = identity size 12", true, {}};
      for (int n = 0; n < 12 && c.ok; ++n)
        for (int m = 0; m <= n; ++m) {
          Series sum(v, 30);
          for (int k = m; k <= n; ++k) sum += path_poly(n, k, r, s, true) * q_inverse(k, m, r, s);
          if (sum != Series::constant(v, 30, n == m ? 1 : 0)) {
            c.ok = false;
            c.detail = "entry " + std::to_string(n) + "," + std::to_string(m);
            break;
          }
        }
      out.push_back(c);
    }

    for (int d = 3; d <= 4; ++d) {
      auto ks = solve_kernel(WeightSpec::pure(d, 8));
      const std::string tag = "annular d=" + std::to_string(d) + " ";
      for (int n = 0; n <= d + 3; ++n)
        for (int c = 0; c <= d; ++c)
          append_prefixed(out, tag + "n=" + std::to_string(n) + " d'=" + std::to_string(c) + " ",
                          check_annular(annular_gf(n, c, ks), ks));
      for (auto c : check_weak_irreducible(ks))
        if (c.name.find("R^d") != std::string::npos) {
          c.name = "IH relation d=" + std::to_string(d) + " " + c.name;
          out.push_back(c);
        }
    }
    for (int b = 1; b <= 3; ++b) {
      int d = 2 * b;
      auto ks = solve_kernel(WeightSpec::up_to(d, d + 6, b == 3 ? 4 : 5, true));
      for (int m = b + 1; m <= b + 3; ++m)
        for (int m2 = b + 1; m2 <= b + 3; ++m2)
          append_prefixed(out, "two faces b=" + std::to_string(b) + " m=" + std::to_string(m) + " m'=" + std::to_string(m2) + " ",
                          check_two_face(m, m2, ks));
    }
  });
}

// ---- 4 ----

SuiteReport oracle_suite(int jobs) {
  if (jobs < 1) jobs = 1;
  return timed("oracle", jobs > 1 ? 180 : 600, [jobs](std::vector<CheckResult>& out) {
    for (int e = 0; e <= 7; ++e) {
      std::atomic<long> count{0};
      std::vector<std::thread> pool;
      for (int s = 0; s < jobs; ++s)
        pool.emplace_back([&, s] { enumerate_maps(e, {}, [&](const CombMap&) { ++count; }, s, jobs); });
      for (auto& t : pool) t.join();
      CheckResult c{"rooted maps with " + std::to_string(e) + " edges", Integer(count.load()) == rooted_map_count(e), {}};
      if (!c.ok) c.detail = "generated " + std::to_string(count.load()) + ", formula " + rooted_map_count(e).get_str();
      out.push_back(c);
    }
    for (int d = 2; d <= 4; ++d)
      for (int n = 0; n <= 14; ++n) {
        auto rep = cross_validate(d, n, 7, 0, jobs);
        long bad = 0;
        std::string first;
        for (const auto& r : rep.rows)
          if (!r.ok()) {
            if (bad++ == 0)
              first = r.context + " " + r.monomial + ": series " + to_string(r.expected) + ", maps " +
                      std::to_string(r.computed);
          }
        CheckResult c{"d=" + std::to_string(d) + " n=" + std::to_string(n) + " profiles (" +
                          std::to_string(rep.rows.size()) + " rows)",
                      bad == 0, first};
        out.push_back(c);
        std::map<std::string, long> got;
        for (const auto& r : rep.rows)
          if (r.context.find("unexpected") == std::string::npos) got[r.monomial] = r.computed;
        auto expect_counts = [&](const std::string& name, std::vector<std::pair<std::string, long>> want) {
          CheckResult k{name, true, {}};
          for (const auto& [mono, cnt] : want) {
            long have = got.count(mono) ? got[mono] : 0;
            if (have != cnt) {
              k.ok = false;
              k.detail = mono + ": " + std::to_string(have) + " maps";
            }
          }
          out.push_back(k);
        };
        if (d == 4 && n == 6) expect_counts("f_6^(4) -> 5, 6, 3", {{"1", 5}, {"z", 6}, {"z^2", 3}});
        if (d == 3 && n == 4) expect_counts("f_4^(3) -> 2, 0, 2", {{"1", 2}, {"z", 0}, {"z^2", 2}});
      }
  });
}

// ---- 5 ----

namespace {

std::vector<SlicePackage> harvest_slices(int d, int max_edges) {
  std::vector<SlicePackage> out;
  MapFilter f;
  f.min_girth = d;
  f.max_inner_degree = d;
  for (int e = 1; e <= max_edges; ++e)
    enumerate_maps(e, f, [&](const CombMap& m) {
      auto s = map_stats(m);
      if (s.inner_degrees.empty() || s.inner_degrees.front() != d || !is_d_irreducible(m, d)) return;
      Topology t = analyze(m);
      std::set<int> outer_vertices;
      for (int x : t.faces[t.outer]) outer_vertices.insert(t.vertex_of[x]);
      for (int apex : outer_vertices)
        for (int k = 1; k <= d - 2; ++k) {
          SlicePackage pkg{m, apex, k, 0};
          auto c = certify(pkg);
          if (c.right_length < 0) continue;
          pkg.p = c.right_length;
          if (certify_slice(pkg)) out.push_back(pkg);
        }
    });
  return out;
}

}  // namespace

SuiteReport bijection_suite() {
  return timed("bijection", 120, [](std::vector<CheckResult>& out) {
    for (int d = 3; d <= 5; ++d) {
      const std::string tag = "d=" + std::to_string(d) + " ";
      for (int k = 1; k <= d - 2; ++k) {
        long total = 0, bad = 0;
        std::string first;
        enumerate_trees(d, k, 8, [&](const OrientedTree& t) {
          ++total;
          auto pkg = closure(t);
          auto s = map_stats(pkg.map);
          bool faces = static_cast<int>(s.inner_degrees.size()) == t.leaves() &&
                       std::all_of(s.inner_degrees.begin(), s.inner_degrees.end(), [&](int x) { return x == d; });
          bool good = faces && certify_slice(pkg) && is_d_irreducible(pkg.map, d) && pkg.p == tree_depth(t) &&
                      open_slice(pkg, d) == t;
          if (!good && bad++ == 0) first = tree_to_json(t).dump();
        });
        if (d % 2 == 0 && k % 2 != 0)
          out.push_back({tag + "k=" + std::to_string(k) + " has no trees", total == 0, {}});
        else
          out.push_back(
              tally(tag + "k=" + std::to_string(k) + " closure certified and open(closure(t)) = t", total, bad, first));
      }
      {
        long total = 0, bad = 0;
        std::string first;
        for (const auto& s : harvest_slices(d, 7)) {
          ++total;
          bool good = false;
          try {
            good = same_slice(closure(open_slice(s, d)), s);
          } catch (const std::exception&) {
          }
          if (!good && bad++ == 0) first = map_to_json(s.map).dump();
        }
        out.push_back(tally(tag + "closure(open(s)) = s over maps with <= 7 edges", total, bad, first));
      }
      auto ks = solve_kernel(WeightSpec::pure(d, 8));
      for (int k = 1; k <= d - 2; ++k) {
        CheckResult c{tag + "leaf census k=" + std::to_string(k), true, {}};
        for (int l = 1; l <= 8; ++l) {
          long n = static_cast<long>(trees_with_leaves(d, k, l).size());
          if (Rational(n) != ks.V(k).coeff_of("z", l)) {
            c.ok = false;
            c.detail = "leaves " + std::to_string(l) + ": " + std::to_string(n) + " trees";
            break;
          }
        }
        out.push_back(c);
      }
      auto dk = solve_distance_kernel(WeightSpec::pure(d, 8), 6);
      append_prefixed(out, tag, check_depth_kernel(solve_depth_kernel(d, 8, 6), dk, 7));
    }
    for (int d : {4, 6}) {
      const int b = d / 2;
      auto ks = solve_kernel_bipartite(WeightSpec::pure(d, 7));
      for (int k = 2; k <= d - 2; k += 2) {
        const std::string tag = "bipartite d=" + std::to_string(d) + " k=" + std::to_string(k) + " ";
        CheckResult bij{tag + "conversion is a bijection", true, {}};
        CheckResult census{tag + "converted census equals U_k", true, {}};
        for (int l = 1; l <= 7; ++l) {
          const auto& trees = trees_with_leaves(d, k, l);
          const auto& direct = converted_trees_with_leaves(b, k / 2, l);
          std::vector<OrientedTree> images;
          for (const auto& t : trees) {
            auto c = bipartite_convert(t);
            if (bipartite_unconvert(c) != t || tree_depth(bipartite_unconvert(c)) != tree_depth(t)) bij.ok = false;
            images.push_back(std::move(c));
          }
          for (const auto& c : direct)
            if (std::find(images.begin(), images.end(), c) == images.end()) bij.ok = false;
          if (images.size() != direct.size()) bij.ok = false;
          if (!bij.ok && bij.detail.empty()) bij.detail = "leaves " + std::to_string(l);
          if (Rational(static_cast<long>(direct.size())) != ks.U(k / 2).coeff_of("z", l)) {
            census.ok = false;
            census.detail = "leaves " + std::to_string(l);
          }
        }
        out.push_back(bij);
        out.push_back(census);
      }
    }
  });
}

// ---- 6 ----

SuiteReport integrable_suite() {
  return timed("integrable", 60, [](std::vector<CheckResult>& out) {
    append(out, closed_form_check(4, 20, 6));
    append(out, closed_form_check(3, 20, 6));
    append(out, closed_form_check(Baseline::Quadrangular, 8, 6));
    append(out, closed_form_check(Baseline::Triangular, 6, 4));
    append(out, conserved_quantities(4, 12, 6));
    append(out, conserved_quantities(3, 12, 6));
    append(out, conserved_quantities(Baseline::Quadrangular, 12, 6));
    append(out, conserved_quantities(Baseline::Triangular, 6, 4));
    for (int d : {3, 4, 6, 8}) {
      const int order = d >= 6 ? 10 : 12;
      auto dk = solve_distance_kernel(WeightSpec::pure(d, order), 6);
      append(out, check_hierarchy(hierarchy(d, order, 6), dk));
      append_prefixed(out, "d=" + std::to_string(d) + " ", check_stabilization(dk));
    }
  });
}

// ---- 7 ----

SuiteReport conjecture_suite() {
  return timed("conjecture", 30, [](std::vector<CheckResult>& out) {
    for (int k = 1; k <= 8; ++k)
      out.push_back(agreement_check("conjectured V~_" + std::to_string(k) + " vs elimination", tilde_conjecture(k),
                                    eliminate_tilde(k, false)));
    for (int k = 1; k <= 10; ++k)
      out.push_back(agreement_check("Lagrange U~_" + std::to_string(k) + " vs elimination", tilde_lagrange(k),
                                    eliminate_tilde(k, true)));
    auto v = make_vars({"R"});
    for (int b = 1; b <= 5; ++b) {
      Series R = Series::variable(v, 2 * b + 2, "R");
      Series one = Series::constant(v, 2 * b + 2, 1);
      Series direct(v, 2 * b + 2), lagrange(v, 2 * b + 2);
      for (int l = 0; l <= b; ++l) {
        Integer c = binomial(b + l, 2 * l) * catalan(l);
        if ((b - l) % 2 != 0) c = -c;
        direct += R.pow(b - l) * Rational(c);
      }
      for (int p = 1; p <= b; ++p) lagrange += (one - R).pow(p) * Rational(binomial(b, p) * binomial(b, p - 1));
      lagrange *= Rational(-1, b);
      // z + direct + faces = 0 and lagrange = z + faces
      out.push_back(residual_check("bipartite equations agree as polynomials b=" + std::to_string(b), direct + lagrange));
      for (const auto& spec : {WeightSpec::pure(2 * b, 8), WeightSpec::up_to(2 * b, 2 * b + 4, 5, true)})
        for (auto c : verify_algebraic(solve_kernel_bipartite(spec)))
          if (c.name.rfind("bipartite", 0) == 0) {
            c.name += " b=" + std::to_string(b) + (spec.face_degrees.empty() ? " pure" : " mixed");
            out.push_back(c);
          }
    }
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper-tables", "closed-coefficients", "identities", "oracle",
                                              "bijection",    "integrable",          "conjecture"};
  return names;
}

SuiteReport run_suite(const std::string& name, int jobs) {
  if (name == "paper-tables") return paper_tables_suite();
  if (name == "closed-coefficients") return closed_coefficient_suite();
  if (name == "identities") return identity_suite();
  if (name == "oracle") return oracle_suite(jobs);
  if (name == "bijection") return bijection_suite();
  if (name == "integrable") return integrable_suite();
  if (name == "conjecture") return conjecture_suite();
  throw std::invalid_argument("unknown suite " + name);
}

nlohmann::json suite_summary(const std::vector<SuiteReport>& reports) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& c : r.checks)
      if (!c.ok) failed.push_back({{"name", c.name}, {"detail", c.detail}});
    suites.push_back({{"suite", r.name},
                      {"ok", r.ok()},
                      {"checks", r.checks.size()},
                      {"failed", failed},
                      {"in_time", r.in_time()},
                      {"budget_seconds", r.budget}});
    all = all && r.ok();
  }
  return {{"ok", all}, {"suites", suites}};
}

}  // namespace irrmaps
