#include "test_util.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/substitution.hpp"

using namespace irrmaps;

namespace {

void check_all(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}

Series upoly(const VarSetPtr& v, const std::string& var, int order, std::initializer_list<long> coeffs) {
  Series s(v, order);
  int e = 0;
  for (long c : coeffs) {
    Exponents ex(v->size(), 0);
    ex[v->index(var)] = e++;
    s += Series::monomial(v, order, ex, c);
  }
  return s;
}

}  // namespace

TEST_CASE("substitute several variables") {
  auto v = make_vars({"z", "x4"});
  Series f = Series::variable(v, 4, "z") * Series::variable(v, 4, "x4");
  auto t = make_vars({"z"});
  Series g = Series::variable(t, 4, "z") * Rational(2);
  CHECK(substitute(f, t, {{"x4", g}}) == Series::monomial(t, 4, {2}, 2));
  CHECK_THROWS(substitute(f, t, {}));
}

TEST_CASE("girth-4 maps with outer degree 4") {
  WeightSpec w4 = WeightSpec::pure(4, 4);
  Series g = girth_gf(w4);
  auto v = g.vars();
  CHECK(g == upoly(v, "x4", 4, {0, 1, 2, 6, 22}));
  // same series from the bipartite d=2 kernel at z=0
  auto k2 = solve_kernel_bipartite(WeightSpec::up_to(2, 4, 4, true));
  Series from_two = boundary_gf(4, k2).drop("z") - Rational(2);
  CHECK(from_two.remap(v) == g);
  CHECK(renormalized_weight(w4, g).truncate(3) == upoly(w4.vars(), "z", 3, {0, 1, -2, 2}));
}

TEST_CASE("girth-3 series") {
  Series g = girth_gf(WeightSpec::pure(3, 5));
  Exponents e(g.vars()->size(), 0);
  e[g.vars()->index("x3")] = 1;
  CHECK(g.coeff(e) == 1);
  CHECK(g.constant_term() == 0);
  // even weights only: no map of outer degree 3
  WeightSpec even;
  even.d = 3;
  even.order = 5;
  even.face_degrees = {4};
  Series ge = girth_gf(even);
  CHECK(ge.drop("x3").is_zero());
}

TEST_CASE("substitution identities for pure and mixed weights") {
  for (int d = 1; d <= 4; ++d) {
    check_all(check_substitution(WeightSpec::pure(d, 6), {0, 1, 2, d, d + 2, 8}));
    WeightSpec mixed;
    mixed.d = d;
    mixed.order = 5;
    mixed.face_degrees = {d + 1};
    check_all(check_substitution(mixed, {d, d + 1, d + 3}));
  }
  WeightSpec even4 = WeightSpec::up_to(4, 6, 5, true);
  check_all(check_substitution(even4, {4, 6}));
  WeightSpec even3;
  even3.d = 3;
  even3.order = 5;
  even3.face_degrees = {4};
  check_all(check_substitution(even3, {3, 4}));
}

TEST_CASE("renormalized weight from the kernel") {
  auto k4 = solve_kernel(WeightSpec::pure(4, 6));
  Series x4 = renormalized_from_kernel(k4);
  CHECK(x4 == (k4.r - Rational(1)) * k4.r.pow(3).inverse());
  auto lad = renormalized_ladder(WeightSpec::pure(4, 6));
  CHECK(lad.renormalized == x4);
}

TEST_CASE("weakly irreducible dissections") {
  auto v = make_vars({"z"});
  auto k3 = solve_kernel(WeightSpec::pure(3, 15));
  CHECK(weak_irreducible_H(k3).h == upoly(v, "z", 15, {0, 1, 0, 1, 0, 0, 0, 1, 0, 3, 0, 12, 0, 52, 0, 241}));
  auto k4 = solve_kernel(WeightSpec::pure(4, 12));
  CHECK(weak_irreducible_H(k4).h == upoly(v, "z", 12, {0, 1, 2, 0, 0, 1, 0, 4, 6, 24, 66, 214, 676}));
  auto k5 = solve_kernel(WeightSpec::pure(5, 9));
  CHECK(weak_irreducible_H(k5).h == upoly(v, "z", 9, {0, 1, 0, 5, 0, 46, 0, 1350, 0, 52360}));
  auto k6 = solve_kernel(WeightSpec::pure(6, 8));
  CHECK(weak_irreducible_H(k6).h == upoly(v, "z", 8, {0, 1, 3, 2, 5, 42, 266, 1986, 15552}));
}

TEST_CASE("weak irreducibility relations") {
  for (int d = 1; d <= 6; ++d) check_all(check_weak_irreducible(solve_kernel(WeightSpec::pure(d, 7))));
  for (int d = 2; d <= 4; ++d) check_all(check_weak_irreducible(solve_kernel(WeightSpec::up_to(d, d + 1, 5))));
}
