#include "irrmaps/boundary.hpp"

#include "irrmaps/combinatorics.hpp"
#include "irrmaps/paths.hpp"

#include <stdexcept>
#include <string>

namespace irrmaps {

namespace {

// V_k for any k >= 1: the kernel value up to d, the face sum beyond.
Series slice_series(int k, const KernelState& ks) {
  if (k <= ks.spec.d) return ks.V(k);
  return face_path_sum(ks.spec, ks.r, ks.s, k + 2, -k - 1);
}

Series face_weight(const KernelState& ks, int degree) {
  const auto& vars = ks.r.vars();
  if (vars->index(face_var(degree)) < 0)
    throw std::invalid_argument("no weight " + face_var(degree) + " in this kernel");
  return Series::variable(vars, ks.r.order(), face_var(degree));
}

std::string tag(const char* what, int n, int d) {
  return std::string(what) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
}

}  // namespace

Series boundary_gf(int n, const KernelState& ks) {
  if (n < 0) throw std::invalid_argument("outer degree must be >= 0");
  Series out = path_poly(n, 0, ks.r, ks.s, true);
  for (int k = 1; k <= n; ++k) {
    Series vk = slice_series(k, ks);
    if (vk.is_zero()) continue;
    out -= path_poly(n, k, ks.r, ks.s, true) * vk;
  }
  return out;
}

Series boundary_gf_bipartite(int n, const KernelState& ks) {
  if (!ks.spec.bipartite) throw std::invalid_argument("kernel is not bipartite");
  const auto& vars = ks.r.vars();
  const int order = ks.r.order();
  if (n < 0 || n % 2 != 0) return Series(vars, order);
  const int m = n / 2;
  const int b = ks.spec.d / 2;
  if (m < b) return Series::constant(vars, order, Rational(catalan(m)));
  Series inner(vars, order);
  for (int l = 0; l < b; ++l) {
    Rational c(Integer(b - l) * binomial(b + l, 2 * l) * catalan(l), Integer(m - l));
    c.canonicalize();
    if ((b - l - 1) % 2 != 0) c = -c;
    inner += ks.r.pow(m - l) * c;
  }
  for (int deg : ks.spec.face_degrees) {
    int j = deg / 2;
    if (j < b + 1) continue;
    Rational c(Integer(b + j) * binomial(2 * j - 1, j + b), Integer(m + j));
    c.canonicalize();
    inner -= face_weight(ks, deg) * ks.r.pow(m + j) * c;
  }
  return inner * Rational(binomial(2 * m, m - b));
}

BoundaryGF boundary(int n, const KernelState& ks) {
  BoundaryGF out{n, ks.spec.d, Series(ks.r.vars(), ks.r.order()), false};
  if (ks.spec.bipartite && n % 2 != 0) {
    out.parity_flag = true;
    return out;
  }
  out.series = boundary_gf(n, ks);
  return out;
}

std::vector<CheckResult> check_boundary_conditions(const KernelState& ks) {
  const int d = ks.spec.d;
  const auto& vars = ks.r.vars();
  const int order = ks.r.order();
  std::vector<CheckResult> out;
  for (int n = 0; n <= d; ++n) {
    Series expect = Series::constant(vars, order, Rational(catalan_half(n)));
    if (n == d && d >= 1) expect += Series::variable(vars, order, "z");
    out.push_back(agreement_check(tag("boundary condition", n, d), boundary_gf(n, ks), expect));
  }
  return out;
}

CheckResult check_bipartite_route(int n, const KernelState& ks) {
  return agreement_check(tag("bipartite closed form", n, ks.spec.d), boundary_gf(n, ks),
                         boundary_gf_bipartite(n, ks));
}

Series pointing_gf(int n, const KernelState& ks) { return path_poly(n, ks.spec.d, ks.r, ks.s, false); }

CheckResult check_pointing(int n, const KernelState& ks) {
  return agreement_check(tag("pointing", n, ks.spec.d), boundary_gf(n, ks).derivative("z"), pointing_gf(n, ks));
}

Series simple_boundary_gf(int p, const Series& r, const Series& x4) {
  if (p < 1) throw std::invalid_argument("simple boundary needs p >= 1");
  Rational front(factorial(3 * p - 3), factorial(p) * factorial(2 * p - 1));
  front.canonicalize();
  Series a = x4.pow(p - 1) * r.pow(3 * p - 2) * Rational(p);
  Series b = x4.pow(p) * r.pow(3 * p) * Rational(2 - 3 * p);
  return (a + b) * front;
}

Rational simple_boundary_coeff(int p, int k) {
  if (p < 3) throw std::invalid_argument("closed coefficient needs p >= 3");
  // 1/(negative)! = 0
  if (k < 0 || k - p + 1 < 0) return Rational(0);
  Rational c(factorial(3 * p - 3) * factorial(2 * k - p - 1),
             factorial(p - 3) * factorial(2 * p - 1) * factorial(k) * factorial(k - p + 1));
  c.canonicalize();
  return c;
}

Series two_face_derivative(int m, int m2, const KernelState& ks) {
  const int b = ks.spec.d / 2;
  if (!ks.spec.bipartite) throw std::invalid_argument("two-face series needs a bipartite kernel");
  if (m <= b || m2 <= b) throw std::invalid_argument("two-face series needs m, m' > d/2");
  std::string x = face_var(2 * m2);
  face_weight(ks, 2 * m2);
  return boundary_gf(2 * m, ks).derivative(x) * Rational(2 * m2);
}

Series two_face_closed(int m, int m2, const KernelState& ks) {
  const int b = ks.spec.d / 2;
  if (!ks.spec.bipartite) throw std::invalid_argument("two-face series needs a bipartite kernel");
  if (m <= b || m2 <= b) throw std::invalid_argument("two-face series needs m, m' > d/2");
  Rational c(Integer(m - b) * Integer(m2 - b) * binomial(2 * m, m - b) * binomial(2 * m2, m2 - b), Integer(m + m2));
  c.canonicalize();
  return ks.r.pow(m + m2) * c;
}

std::vector<CheckResult> check_two_face(int m, int m2, const KernelState& ks) {
  const int d = ks.spec.d;
  std::string name = "two-face m=" + std::to_string(m) + " m'=" + std::to_string(m2) + " d=" + std::to_string(d);
  std::vector<CheckResult> out;
  out.push_back(agreement_check(name, two_face_derivative(m, m2, ks), two_face_closed(m, m2, ks)));
  out.push_back(agreement_check(name + " symmetry", two_face_closed(m, m2, ks), two_face_closed(m2, m, ks)));
  out.push_back(residual_check("K check x" + std::to_string(2 * m2) + " d=" + std::to_string(d),
                               boundary_gf(d, ks).derivative(face_var(2 * m2))));
  return out;
}

AnnularGF annular_gf(int n, int central, const KernelState& ks) {
  if (n < 0 || central < 0) throw std::invalid_argument("annular series needs n, d' >= 0");
  return {n, ks.spec.d, central, path_poly(n, central, ks.r, ks.s, false),
          path_poly(n, -central, ks.r, ks.s, false)};
}

std::vector<CheckResult> check_annular(const AnnularGF& a, const KernelState& ks) {
  std::string name = "annular n=" + std::to_string(a.n) + " d=" + std::to_string(a.d) +
                     " d'=" + std::to_string(a.central);
  std::vector<CheckResult> out;
  out.push_back(agreement_check(name + " quasi", a.quasi_irreducible, a.irreducible * ks.r.pow(a.central)));
  if (a.central == a.d)
    out.push_back(agreement_check(name + " pointing", a.irreducible, boundary_gf(a.n, ks).derivative("z")));
  return out;
}

std::vector<CheckResult> check_hypergeometric(int max_b, int max_m, int max_j) {
  CheckResult first{"ballot identity (A B sum)", true, {}};
  CheckResult second{"ballot identity (A binomial sum)", true, {}};
  auto fail = [](CheckResult& c, int b, int m, int other) {
    if (!c.ok) return;
    c.ok = false;
    c.detail = "b=" + std::to_string(b) + " m=" + std::to_string(m) + " index=" + std::to_string(other);
  };
  for (int b = 1; b <= max_b; ++b)
    for (int m = b; m <= max_m; ++m)
      for (int l = 0; l < b; ++l) {
        Integer lhs = 0;
        for (int k = l; k < b; ++k) lhs += ballot(m, k) * ballot_inverse(k, l);
        Rational rhs(Integer(b - l) * binomial(2 * m, m - b) * binomial(b + l, 2 * l), Integer(m - l));
        rhs.canonicalize();
        if ((b - l - 1) % 2 != 0) rhs = -rhs;
        if (Rational(lhs) != rhs) fail(first, b, m, l);
      }
  for (int b = 0; b <= max_b; ++b)
    for (int m = b; m <= max_m; ++m)
      for (int j = 1; j <= max_j; ++j) {
        Integer lhs = 0;
        for (int k = b; k <= m; ++k) lhs += ballot(m, k) * binomial(2 * j - 1, j + k);
        Rational rhs(Integer(b + j) * binomial(2 * m, m - b) * binomial(2 * j - 1, j + b), Integer(m + j));
        rhs.canonicalize();
        if (Rational(lhs) != rhs) fail(second, b, m, j);
      }
  return {first, second};
}

void write_boundary_csv(std::ostream& out, const std::vector<BoundaryGF>& rows, bool header) {
  if (header) out << "n,d,monomial,coefficient\n";
  for (const auto& row : rows)
    for (const auto& t : row.series.terms())
      out << row.n << ',' << row.d << ',' << monomial_string(*row.series.vars(), row.series.exponents(t)) << ','
          << to_string(t.coeff) << '\n';
}

}  // namespace irrmaps
