#include "test_util.hpp"

#include "irrmaps/integrable.hpp"

#include <sstream>

using namespace irrmaps;

namespace {

void require_all(const std::vector<CheckResult>& checks) {
  CHECK(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.ok);
  }
}

Series z_of(int order) { return Series::variable(WeightSpec::pure(4, order).vars(), order, "z"); }

}  // namespace

TEST_CASE("d=4 hierarchy first terms") {
  auto h = hierarchy(4, 10, 6);
  Series z = z_of(10);
  CHECK(h.T(0).is_zero());
  CHECK(h.T(1) == Series::constant(z.vars(), 10, 1));
  CHECK(h.T(2) == z * h.T(3) + Rational(1));
  CHECK(h.r(1) == Series::constant(z.vars(), 10, 1));
  CHECK(h.r(2) == z + Rational(1));
  // T = 1 + z T^2
  CHECK(h.limit.coeff_of("z", 5) == Rational(42));
}

TEST_CASE("distance kernel reproduces the hierarchies") {
  for (int d : {3, 4, 6, 8}) {
    INFO("d=" << d);
    const int order = d >= 6 ? 9 : 12;
    auto dk = solve_distance_kernel(WeightSpec::pure(d, order), 6);
    auto h = hierarchy(d, order, 6);
    require_all(check_hierarchy(h, dk));
  }
}

TEST_CASE("distance kernel rows by hand for d=3") {
  auto dk = solve_distance_kernel(WeightSpec::pure(3, 10), 5);
  Series z = z_of(10);
  CHECK(dk.V(1, 0) == z);
  CHECK(dk.V(-1, 0).is_zero());
  CHECK(dk.V(-1, 1) == z);
  CHECK(dk.V(0, 0).is_zero());
  for (int p = 1; p <= 5; ++p) {
    CHECK(dk.V(1, p) == z + dk.V(1, p - 1) * dk.V(0, p + 1));
    CHECK(dk.V(0, p) == dk.V(1, p - 1) * dk.V(-1, p + 1));
    CHECK(dk.V(-1, p) == dk.V(1, p - 1));
  }
  CHECK(dk.R(0).is_zero());
}

TEST_CASE("stabilization to the homogeneous kernel") {
  for (int d = 3; d <= 6; ++d) {
    INFO("d=" << d);
    require_all(check_stabilization(solve_distance_kernel(WeightSpec::pure(d, 8), 8)));
  }
  // up to d=4 the window covers every degree <= p
  for (int d = 3; d <= 4; ++d) {
    auto dk = solve_distance_kernel(WeightSpec::pure(d, 8), 8);
    for (int k = 0; k <= d - 2; ++k)
      for (int p = 0; p <= 8; ++p) CHECK(dk.V(k, p).truncate(p) == dk.homogeneous.V(k).truncate(p));
  }
  // not beyond: one hexagon already has left boundary 2
  auto hex = solve_distance_kernel(WeightSpec::pure(6, 4), 2);
  CHECK(hex.V(0, 1).coeff_of("z", 1) == 0);
  CHECK(hex.homogeneous.V(0).coeff_of("z", 1) == 1);
  // mixed weights only get the cap check
  auto dk = solve_distance_kernel(WeightSpec::up_to(3, 5, 5), 3);
  for (int k = -1; k <= 3; ++k) CHECK(dk.V(k, dk.cap) == dk.homogeneous.V(k));
}

TEST_CASE("depth recurrence against slices and tree census") {
  for (int d = 3; d <= 5; ++d) {
    INFO("d=" << d);
    auto dk = solve_distance_kernel(WeightSpec::pure(d, 8), 6);
    auto dep = solve_depth_kernel(d, 8, 6);
    require_all(check_depth_kernel(dep, dk, 7));
  }
  auto dep = solve_depth_kernel(6, 8, 4);
  for (int p = 0; p <= 4; ++p) {
    CHECK(dep.V(1, p).is_zero());
    CHECK(dep.V(3, p).is_zero());
  }
}

TEST_CASE("product formulas") {
  require_all(closed_form_check(4, 20, 6));
  require_all(closed_form_check(3, 20, 6));
  require_all(closed_form_check(Baseline::Quadrangular, 8, 5));
  require_all(closed_form_check(Baseline::Triangular, 7, 4));
}

TEST_CASE("y branch and products") {
  Series z = z_of(8);
  Series y = fixed_point_y(z, {1, 0, 1});
  CHECK(y.constant_term() == 0);
  CHECK(y == z * (y * y + Rational(1)));
  CHECK(y_product(y, {0}, {}).is_zero());
  CHECK(y_product(y, {3}, {3}) == Series::constant(z.vars(), 8, 1));
  CHECK_THROWS(fixed_point_y(z + Rational(1), {1}));
  // d=4, i=1: the product collapses to T_1 = 1
  auto h = hierarchy(4, 12, 2);
  Series yy = fixed_point_y(z_of(12) * h.limit, {1, 0, 1});
  CHECK(h.limit * y_product(yy, {1, 6}, {3, 4}) == Series::constant(yy.vars(), 12, 1));
}

TEST_CASE("conserved quantities") {
  require_all(conserved_quantities(4, 12, 6));
  require_all(conserved_quantities(3, 12, 6));
  require_all(conserved_quantities(Baseline::Quadrangular, 8, 6));
  require_all(conserved_quantities(Baseline::Triangular, 6, 4));
}

TEST_CASE("height-dependent boundary formula is i-independent") {
  for (int d = 2; d <= 5; ++d) {
    auto dk = solve_distance_kernel(WeightSpec::pure(d, 8), 5);
    for (int n = 1; n <= d + 3; ++n) require_all(check_general_conserved(dk, n));
  }
  auto dk = solve_distance_kernel(WeightSpec::up_to(3, 5, 5), 4);
  for (int n = 1; n <= 5; ++n) require_all(check_general_conserved(dk, n));
}

TEST_CASE("hierarchy csv") {
  std::ostringstream out;
  write_hierarchy_csv(out, hierarchy(4, 3, 2));
  auto text = out.str();
  CHECK(text.rfind("family,i,n,coefficient\n", 0) == 0);
  CHECK(text.find("4,2,1,1\n") != std::string::npos);
  CHECK_THROWS(hierarchy(5, 4, 2));
}
