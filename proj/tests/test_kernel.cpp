#include "test_util.hpp"

#include "irrmaps/combinatorics.hpp"
#include "irrmaps/kernel.hpp"

using namespace irrmaps;

namespace {

Series zpoly(const VarSetPtr& v, int order, std::initializer_list<const char*> coeffs) {
  Series s(v, order);
  int e = 0;
  for (const char* c : coeffs) {
    Exponents ex(v->size(), 0);
    ex[0] = e++;
    s += Series::monomial(v, order, ex, Rational(c));
  }
  return s;
}

void check_all(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("d=4 pure kernel") {
  auto ks = solve_kernel(WeightSpec::pure(4, 5));
  auto v = ks.r.vars();
  CHECK(ks.V(2) == zpoly(v, 5, {"0", "1", "1", "2", "5", "14"}));
  // r = 1 + zT with T the Catalan series.
  Series expect_r(v, 5);
  for (int n = 0; n <= 5; ++n)
    expect_r += Series::monomial(v, 5, {n}, Rational(n == 0 ? Integer(1) : catalan(n - 1)));
  CHECK(ks.r == expect_r);
  CHECK(ks.s.is_zero());
  CHECK(ks.sweeps <= 5 + 4 + 3);
}

TEST_CASE("d=3 pure kernel") {
  auto ks = solve_kernel(WeightSpec::pure(3, 7));
  auto v = ks.r.vars();
  CHECK(ks.s == zpoly(v, 7, {"0", "1", "0", "1", "0", "3", "0", "12"}));
  CHECK(ks.r == zpoly(v, 7, {"1", "0", "1", "0", "2", "0", "7", "0"}));
}

TEST_CASE("d=6 and d=5 pure kernels") {
  auto k6 = solve_kernel(WeightSpec::pure(6, 6));
  CHECK(k6.r == zpoly(k6.r.vars(), 6, {"1", "1", "3", "17", "120", "948", "8022"}));
  auto k5 = solve_kernel(WeightSpec::pure(5, 7));
  auto v = k5.r.vars();
  CHECK(k5.r == zpoly(v, 7, {"1", "0", "3", "0", "73", "0", "3015", "0"}));
  CHECK(k5.s == zpoly(v, 7, {"0", "1", "0", "12", "0", "422", "0", "19780"}));
}

TEST_CASE("closed equations for small pure kernels") {
  auto k4 = solve_kernel(WeightSpec::pure(4, 10));
  const Series& r = k4.r;
  Series z = Series::variable(r.vars(), 10, "z");
  CHECK((z + r * r - r * Rational(3) + Rational(2)).is_zero());
  auto k6 = solve_kernel(WeightSpec::pure(6, 10));
  const Series& r6 = k6.r;
  CHECK((z - r6.pow(3) + r6.pow(2) * Rational(6) - r6 * Rational(10) + Rational(5)).is_zero());
  auto k5 = solve_kernel(WeightSpec::pure(5, 12));
  const Series& r5 = k5.r;
  const Series& s5 = k5.s;
  Series z12 = Series::variable(r5.vars(), 12, "z");
  Series s2 = s5 * s5;
  Series e1 = r5 * r5 - r5 * s2 * Rational(3) + s2 * s2 - r5 * Rational(3) + s2 * Rational(6) + Rational(2);
  Series e2 = z12 - s5 * (r5 * r5 * Rational(3) - r5 * s2 * Rational(4) + s2 * s2 - r5 * Rational(12) +
                          s2 * Rational(10) + Rational(10));
  CHECK(e1.is_zero());
  CHECK(e2.is_zero());
}

TEST_CASE("verify_algebraic on pure and mixed kernels") {
  for (int d = 1; d <= 6; ++d) {
    check_all(verify_algebraic(solve_kernel(WeightSpec::pure(d, 10))));
    for (int j = d + 1; j <= d + 2; ++j) {
      WeightSpec w;
      w.d = d;
      w.order = 7;
      w.face_degrees = {j};
      check_all(verify_algebraic(solve_kernel(w)));
    }
  }
  check_all(verify_algebraic(solve_kernel_bipartite(WeightSpec::up_to(4, 8, 6, true))));
}

TEST_CASE("bipartite kernel") {
  WeightSpec w = WeightSpec::up_to(2, 4, 3, true);
  auto ks = solve_kernel_bipartite(w);
  Series x4 = Series::variable(ks.r.vars(), 3, "x4");
  Series z = Series::variable(ks.r.vars(), 3, "z");
  Series at_zero = ks.r.drop("z");
  Series expect = Series::constant(ks.r.vars(), 3, 1) + x4 + x4 * x4 * Rational(3) + x4.pow(3) * Rational(12);
  CHECK(at_zero == expect);
  CHECK((ks.r - Rational(1) - x4 * ks.r.pow(3)).drop("z").is_zero());

  auto u4 = solve_kernel_bipartite(WeightSpec::up_to(4, 4, 3, true));
  CHECK(u4.U(1) == zpoly(u4.r.vars(), 3, {"0", "1", "1", "2"}));

  for (int d : {2, 4, 6}) {
    WeightSpec spec = WeightSpec::up_to(d, d + 4, 8, true);
    auto general = solve_kernel(spec);
    auto bip = solve_kernel_bipartite(spec);
    for (int k = -1; k <= d; ++k) CHECK(general.V(k) == bip.V(k));
    CHECK(general.r == bip.r);
    for (int k = 1; k <= d; k += 2) CHECK(general.V(k).is_zero());
  }
  CHECK_THROWS(solve_kernel_bipartite(WeightSpec::pure(3, 4)));
}

TEST_CASE("lagrange coefficients of R at d=0") {
  // R = 1 + sum_j C(2j-1, j) x_{2j} R^j with x2, x4, x6.
  WeightSpec spec = WeightSpec::up_to(0, 6, 5, true);
  auto ks = solve_kernel_bipartite(spec);
  auto general = solve_kernel(spec);
  CHECK(general.r == ks.r);
  for (int n1 = 0; n1 <= 5; ++n1)
    for (int n2 = 0; n1 + n2 <= 5; ++n2)
      for (int n3 = 0; n1 + n2 + n3 <= 5; ++n3) {
        long sj = n1 + 2 * n2 + 3 * n3;
        long sj1 = 1 + n2 + 2 * n3;
        Rational expect(factorial(sj), factorial(sj1));
        expect /= Rational(factorial(n1) * factorial(n2) * factorial(n3));
        Integer w = 1;
        for (int i = 0; i < n2; ++i) w *= binomial(3, 2);
        for (int i = 0; i < n3; ++i) w *= binomial(5, 3);
        expect *= Rational(w);
        expect.canonicalize();
        CHECK(ks.r.coeff({0, n1, n2, n3}) == expect);
      }
}

TEST_CASE("kernel coefficients are nonnegative integers") {
  for (int d = 0; d <= 6; ++d) {
    auto ks = solve_kernel(WeightSpec::up_to(d, d + 2, 6));
    for (int k = -1; k <= d; ++k) CHECK(ks.V(k).is_nonnegative_integral());
    CHECK(ks.r.constant_term() == 1);
    CHECK(ks.s.constant_term() == 0);
  }
}

TEST_CASE("tilde elimination") {
  auto v = tilde_vars();
  Series a = Series::variable(v, 64, "V-1");
  Series b = Series::variable(v, 64, "V0");
  CHECK(eliminate_tilde(1, true) == b);
  CHECK(eliminate_tilde(2, true) == b - b * b);
  CHECK(eliminate_tilde(1, false) == a);
  CHECK(eliminate_tilde(2, false) == b - a * a);
  for (int k = 1; k <= 10; ++k) CHECK(eliminate_tilde(k, true) == tilde_lagrange(k));
  for (int k = 1; k <= 8; ++k) CHECK(eliminate_tilde(k, false) == tilde_conjecture(k));
}

TEST_CASE("kernel json dump") {
  auto ks = solve_kernel(WeightSpec::up_to(3, 5, 4));
  auto j = kernel_to_json(ks);
  CHECK(j["key"] == "d3_M5_N4_gen");
  CHECK(series_from_json(j["R"]) == ks.r);
  CHECK(j["V"].size() == 5);
}
