#include "test_util.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/combinatorics.hpp"
#include "irrmaps/paths.hpp"

#include <sstream>

using namespace irrmaps;

namespace {

Series zpoly(const VarSetPtr& v, int order, std::initializer_list<long> coeffs) {
  Series s(v, order);
  int e = 0;
  for (long c : coeffs) {
    Exponents ex(v->size(), 0);
    ex[0] = e++;
    s += Series::monomial(v, order, ex, c);
  }
  return s;
}

void check_all(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}

void check_one(const CheckResult& c) { check_all({c}); }

}  // namespace

TEST_CASE("irreducible quadrangular dissections of the hexagon") {
  auto ks = solve_kernel(WeightSpec::pure(4, 9));
  Series f6 = boundary_gf(6, ks);
  for (int n = 0; n <= 7; ++n) {
    Rational expect(6 * catalan(n), Integer(n + 2));
    expect.canonicalize();
    CHECK(f6.coeff_of("z", n + 2) == expect);
  }
  CHECK(f6.truncate(4) == zpoly(f6.vars(), 4, {5, 6, 3, 2, 3}));
  CHECK(f6.derivative("z") == (ks.r * Rational(6)).truncate(8));
}

TEST_CASE("closed form for quadrangular dissections of the 2m-gon") {
  auto ks = solve_kernel(WeightSpec::pure(4, 8));
  for (int m = 2; m <= 8; ++m) {
    Series expect = (ks.r.pow(m - 1) * Rational(3, m - 1) - ks.r.pow(m) * Rational(2, m)) *
                    Rational(binomial(2 * m, m - 2));
    CHECK(boundary_gf(2 * m, ks) == expect);
  }
}

TEST_CASE("irreducible triangular dissections of the square") {
  auto ks = solve_kernel(WeightSpec::pure(3, 12));
  Series f4 = boundary_gf(4, ks);
  CHECK(f4.truncate(8) == zpoly(f4.vars(), 8, {2, 0, 2, 0, 1, 0, 2, 0, 6}));
  for (int n = 0; 2 * n + 2 <= 12; ++n) {
    Rational expect(2 * binomial(3 * n, n), Integer((n + 1) * (2 * n + 1)));
    expect.canonicalize();
    CHECK(f4.coeff_of("z", 2 * n + 2) == expect);
  }
  CHECK(f4.derivative("z") == (ks.s * Rational(4)).truncate(11));
  // polynomial form 2 + 2s^2 - 3s^4 with r = 1 + s^2
  CHECK(f4 == Series::constant(f4.vars(), 12, 2) + ks.s.pow(2) * Rational(2) - ks.s.pow(4) * Rational(3));
}

TEST_CASE("hexangular and pentagonal dissections") {
  auto k6 = solve_kernel(WeightSpec::pure(6, 7));
  CHECK(boundary_gf(8, k6) == zpoly(k6.r.vars(), 7, {14, 8, 4, 8, 34, 192, 1264, 9168}));
  CHECK(boundary_gf(10, k6) == zpoly(k6.r.vars(), 7, {42, 45, 45, 105, 450, 2547, 16785, 121815}));
  auto k5 = solve_kernel(WeightSpec::pure(5, 8));
  CHECK(boundary_gf(6, k5) == zpoly(k5.r.vars(), 8, {5, 0, 3, 0, 18, 0, 422, 0, 14835}));
}

TEST_CASE("boundary conditions for small outer degree") {
  for (int d = 0; d <= 6; ++d) {
    check_all(check_boundary_conditions(solve_kernel(WeightSpec::pure(d, 8))));
    check_all(check_boundary_conditions(solve_kernel(WeightSpec::up_to(d, d + 2, 6))));
  }
}

TEST_CASE("bipartite closed form agrees with the general expression") {
  for (int d : {2, 4, 6}) {
    auto ks = solve_kernel(WeightSpec::up_to(d, d + 4, 6, true));
    for (int n = 0; n <= d + 6; n += 2) check_one(check_bipartite_route(n, ks));
    auto b = boundary(d + 1, ks);
    CHECK(b.parity_flag);
    CHECK(b.series.is_zero());
    CHECK(boundary_gf_bipartite(d + 1, ks).is_zero());
  }
  CHECK_THROWS(boundary_gf_bipartite(4, solve_kernel(WeightSpec::pure(3, 4))));
}

TEST_CASE("arbitrary maps at d=0") {
  // Quadrangulations with bivalent faces.
  WeightSpec quad = WeightSpec::up_to(0, 4, 7, true);
  auto kq = solve_kernel(quad);
  const Series& r = kq.r;
  Series x4 = Series::variable(r.vars(), 7, "x4");
  Series x4r3 = x4 * r.pow(3);
  CHECK(boundary_gf(2, kq) == r - x4r3);
  CHECK(boundary_gf(4, kq) == r.pow(2) * Rational(2) - r * x4r3 * Rational(3));
  CHECK(boundary_gf(6, kq) == r.pow(3) * Rational(5) - r.pow(2) * x4r3 * Rational(9));
  Series x2 = Series::variable(r.vars(), 7, "x2");
  CHECK((r - Rational(1) - x2 * r - x4 * r * r * Rational(3)).is_zero());
  for (int m = 0; m <= 6; ++m) CHECK(pointing_gf(2 * m, kq) == r.pow(m) * Rational(binomial(2 * m, m)));

  // Faces of degree 1, 2, 3.
  WeightSpec tri;
  tri.d = 0;
  tri.order = 6;
  tri.face_degrees = {1, 2, 3};
  auto kt = solve_kernel(tri);
  const Series& R = kt.r;
  const Series& S = kt.s;
  Series x3 = Series::variable(R.vars(), 6, "x3");
  Series x3r2 = x3 * R * R;
  CHECK(boundary_gf(1, kt) == S - x3r2);
  CHECK(boundary_gf(2, kt) == S * S + R - S * x3r2 * Rational(2));
  CHECK(boundary_gf(3, kt) == S.pow(3) + R * S * Rational(3) - (S * S * Rational(3) + R * Rational(2)) * x3r2);
  CHECK(boundary_gf(4, kt) == S.pow(4) + R * S * S * Rational(6) + R * R * Rational(2) -
                                  (S.pow(3) * Rational(4) + R * S * Rational(8)) * x3r2);
}

TEST_CASE("pointing formula") {
  for (int d = 1; d <= 6; ++d) {
    auto pure = solve_kernel(WeightSpec::pure(d, 8));
    for (int n = 0; n <= d + 4; ++n) check_one(check_pointing(n, pure));
    WeightSpec mixed;
    mixed.d = d;
    mixed.order = 6;
    mixed.face_degrees = {d + 2};
    auto ks = solve_kernel(mixed);
    for (int n = 0; n <= d + 4; ++n) check_one(check_pointing(n, ks));
  }
  auto k3 = solve_kernel(WeightSpec::pure(3, 9));
  CHECK(pointing_gf(4, k3) == k3.s * Rational(4));
}

TEST_CASE("simple boundary quadrangular dissections") {
  auto ks = solve_kernel(WeightSpec::pure(4, 10));
  Series x4 = ks.V(2) * ks.r.pow(3).inverse();
  for (int p = 3; p <= 6; ++p) {
    Series f = simple_boundary_gf(p, ks.r, x4);
    for (int k = 0; k <= 10; ++k) CHECK(f.coeff_of("z", k) == simple_boundary_coeff(p, k));
  }
  CHECK(simple_boundary_coeff(3, 3) == 2);
  CHECK(simple_boundary_coeff(3, 1) == 0);
  CHECK(simple_boundary_coeff(3, 0) == 0);
  // the three diagonal splits of the hexagon into two quadrangles
  CHECK(simple_boundary_coeff(3, 2) == 3);
  CHECK_THROWS(simple_boundary_coeff(2, 4));
}

TEST_CASE("two marked faces") {
  auto k2 = solve_kernel(WeightSpec::up_to(2, 4, 6, true));
  CHECK(two_face_closed(2, 2, k2) == k2.r.pow(4) * Rational(4));
  check_all(check_two_face(2, 2, k2));
  for (int b = 1; b <= 3; ++b) {
    int d = 2 * b;
    auto ks = solve_kernel(WeightSpec::up_to(d, d + 6, b == 3 ? 4 : 5, true));
    for (int m = b + 1; m <= b + 3; ++m)
      for (int m2 = b + 1; m2 <= b + 3; ++m2) check_all(check_two_face(m, m2, ks));
  }
  CHECK_THROWS(two_face_closed(1, 2, k2));
  CHECK_THROWS(two_face_derivative(2, 3, k2));
}

TEST_CASE("annular maps") {
  for (int d = 1; d <= 5; ++d) {
    auto ks = solve_kernel(WeightSpec::pure(d, 7));
    for (int n = 0; n <= d + 3; ++n)
      for (int c = 0; c <= d; ++c) check_all(check_annular(annular_gf(n, c, ks), ks));
  }
  auto k4 = solve_kernel(WeightSpec::pure(4, 8));
  CHECK(annular_gf(4, 4, k4).quasi_irreducible == k4.r.pow(4));
}

TEST_CASE("ballot identities by direct summation") { check_all(check_hypergeometric(6, 12, 12)); }

TEST_CASE("boundary coefficients are nonnegative integers") {
  for (int d = 0; d <= 5; ++d) {
    auto ks = solve_kernel(WeightSpec::up_to(d, d + 2, 5));
    for (int n = 0; n <= d + 3; ++n) CHECK(boundary_gf(n, ks).is_nonnegative_integral());
  }
}

TEST_CASE("boundary csv rows") {
  auto ks = solve_kernel(WeightSpec::pure(4, 2));
  std::ostringstream out;
  write_boundary_csv(out, {boundary(6, ks)});
  CHECK(out.str() == "n,d,monomial,coefficient\n6,4,1,5\n6,4,z,6\n6,4,z^2,3\n");
}
