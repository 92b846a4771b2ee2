#include "irrmaps/kernel.hpp"

#include "irrmaps/combinatorics.hpp"
#include "irrmaps/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrmaps {

WeightSpec WeightSpec::pure(int d, int order) {
  WeightSpec w;
  w.d = d;
  w.order = order;
  w.bipartite = d % 2 == 0;
  return w;
}

WeightSpec WeightSpec::up_to(int d, int max_degree, int order, bool bipartite) {
  WeightSpec w;
  w.d = d;
  w.order = order;
  w.bipartite = bipartite;
  for (int j = d + 1; j <= max_degree; ++j)
    if (!bipartite || j % 2 == 0) w.face_degrees.push_back(j);
  return w;
}

int WeightSpec::max_degree() const {
  return face_degrees.empty() ? d : *std::max_element(face_degrees.begin(), face_degrees.end());
}

VarSetPtr WeightSpec::vars() const {
  std::vector<std::string> names{"z"};
  for (int j : face_degrees) names.push_back(face_var(j));
  return make_vars(names);
}

void WeightSpec::validate() const {
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  for (std::size_t i = 0; i < face_degrees.size(); ++i) {
    if (face_degrees[i] <= d) throw std::invalid_argument("face degrees must exceed d");
    if (i > 0 && face_degrees[i] <= face_degrees[i - 1])
      throw std::invalid_argument("face degrees must be increasing");
    if (bipartite && face_degrees[i] % 2 != 0)
      throw std::invalid_argument("bipartite weights must have even degree");
  }
  if (bipartite && d % 2 != 0) throw std::invalid_argument("bipartite needs even d");
}

Series face_path_sum(const WeightSpec& spec, const Series& r, const Series& s, int min_degree, int end) {
  Series out(r.vars(), std::min(r.order(), s.order()));
  for (int j : spec.face_degrees) {
    if (j < min_degree) continue;
    Series x = Series::variable(r.vars(), out.order(), face_var(j));
    out += x * path_poly(j - 1, end, r, s, false);
  }
  return out;
}

KernelState solve_kernel(const WeightSpec& spec) {
  spec.validate();
  const int d = spec.d;
  const int n = spec.order;
  auto vars = spec.vars();
  Series zero(vars, n);
  Series z = Series::variable(vars, n, "z");
  KernelState ks{spec, std::vector<Series>(d + 2, zero), Series::constant(vars, n, 1), zero, 0};
  auto at = [&](int k) -> Series& { return ks.v[k + 1]; };
  const int bound = n + d + 2;
  for (int sweep = 1; sweep <= bound + 1; ++sweep) {
    std::vector<Series> old = ks.v;
    at(d - 1) = face_path_sum(spec, ks.r, ks.s, d + 1, -d);
    at(d) = face_path_sum(spec, ks.r, ks.s, d + 2, -d - 1);
    for (int k = d - 2; k >= -1; --k) {
      Series next = at(k + 2);
      if (k == d - 2) next += z;
      for (int m = 1; m <= k + 1; ++m) next += at(m) * at(k - m);
      at(k) = std::move(next);
    }
    ks.r = at(0) + Rational(1);
    ks.s = at(-1);
    ks.sweeps = sweep;
    if (ks.v == old) return ks;
  }
  throw std::runtime_error("slice kernel did not converge");
}

KernelState solve_kernel_bipartite(const WeightSpec& spec) {
  spec.validate();
  if (spec.d % 2 != 0) throw std::invalid_argument("bipartite kernel needs even d");
  const int b = spec.d / 2;
  const int n = spec.order;
  auto vars = spec.vars();
  Series zero(vars, n);
  Series z = Series::variable(vars, n, "z");
  std::vector<Series> u(b + 1, zero);
  Series r = Series::constant(vars, n, 1);
  int sweeps = 0;
  for (int sweep = 1;; ++sweep) {
    if (sweep > n + spec.d + 3) throw std::runtime_error("bipartite kernel did not converge");
    std::vector<Series> old = u;
    Series top = zero;
    for (int deg : spec.face_degrees) {
      int j = deg / 2;
      if (j < b + 1) continue;
      top += Series::variable(vars, n, face_var(deg)) * r.pow(j + b) * Rational(binomial(2 * j - 1, j + b));
    }
    u[b] = top;
    for (int k = b - 1; k >= 0; --k) {
      Series next = u[k + 1];
      if (k == b - 1) next += z;
      for (int m = 1; m <= k; ++m) next += u[m] * u[k - m];
      u[k] = std::move(next);
    }
    r = u[0] + Rational(1);
    sweeps = sweep;
    if (u == old) break;
  }
  KernelState ks{spec, std::vector<Series>(spec.d + 2, zero), r, zero, sweeps};
  for (int k = 0; k <= b; ++k) ks.v[2 * k + 1] = u[k];
  return ks;
}

VarSetPtr tilde_vars() {
  static const VarSetPtr vars = make_vars({"V-1", "V0"});
  return vars;
}

namespace {

constexpr int kTildeOrder = 64;

Series tilde_symbol(const char* name) { return Series::variable(tilde_vars(), kTildeOrder, name); }

// Evaluates a polynomial in the tilde symbols at series values.
Series evaluate_tilde(const Series& poly, const Series& a, const Series& b) {
  Series out(a.vars(), std::min(a.order(), b.order()));
  int top = 0;
  for (const auto& t : poly.terms()) top = std::max(top, t.degree);
  std::vector<Series> ap{Series::constant(a.vars(), out.order(), 1)};
  std::vector<Series> bp{Series::constant(a.vars(), out.order(), 1)};
  for (int i = 1; i <= top; ++i) {
    ap.push_back(ap.back() * a);
    bp.push_back(bp.back() * b);
  }
  for (const auto& t : poly.terms()) {
    Exponents e = poly.exponents(t);
    out += (ap[e[0]] * bp[e[1]]) * t.coeff;
  }
  return out;
}

}  // namespace

CheckResult residual_check(const std::string& name, const Series& residual) {
  CheckResult c{name, residual.is_zero(), {}};
  if (!c.ok) c.detail = "residual " + residual.to_string();
  return c;
}

CheckResult agreement_check(const std::string& name, const Series& a, const Series& b) {
  CheckResult c{name, true, first_difference(a, b)};
  c.ok = c.detail.empty();
  return c;
}

Series eliminate_tilde(int k, bool bipartite) {
  Series zero(tilde_vars(), kTildeOrder);
  if (bipartite) {
    if (k < 0) throw std::invalid_argument("U~_k needs k >= 0");
    std::vector<Series> u{tilde_symbol("V0")};
    for (int i = 0; i < k; ++i) {
      Series next = u[i];
      for (int m = 1; m <= i; ++m) next -= u[m] * u[i - m];
      u.push_back(std::move(next));
    }
    return u[k];
  }
  if (k < -1) throw std::invalid_argument("V~_k needs k >= -1");
  // v[i + 1] = V~_i.
  std::vector<Series> v{tilde_symbol("V-1"), tilde_symbol("V0")};
  for (int i = -1; i + 2 <= k; ++i) {
    Series next = v[i + 1];
    for (int m = 1; m <= i + 1; ++m) next -= v[m + 1] * v[i - m + 1];
    v.push_back(std::move(next));
  }
  return v[k + 1];
}

Series tilde_lagrange(int k) {
  if (k < 1) throw std::invalid_argument("Lagrange form needs k >= 1");
  Series minus_u0 = -tilde_symbol("V0");
  Series out(tilde_vars(), kTildeOrder);
  for (int p = 1; p <= k; ++p) out += minus_u0.pow(p) * Rational(binomial(k, p) * binomial(k, p - 1));
  return out * Rational(-1, k);
}

Series tilde_conjecture(int k) {
  if (k < 1) throw std::invalid_argument("conjectured form needs k >= 1");
  Series na = -tilde_symbol("V-1");
  Series nb = -tilde_symbol("V0");
  Series out(tilde_vars(), kTildeOrder);
  if (k % 2 == 1) {
    int j = (k + 1) / 2;
    for (int m = 0; m <= j - 1; ++m)
      for (int kk = 0; kk + m <= j - 1; ++kk) {
        Rational c(binomial(j + m - 1, kk + 2 * m) * binomial(j + m, kk + 2 * m) * binomial(kk + 2 * m, 2 * m),
                   2 * m + 1);
        c.canonicalize();
        out += na.pow(2 * m + 1) * nb.pow(kk) * c;
      }
  } else {
    int j = k / 2;
    for (int m = 0; m <= j; ++m)
      for (int kk = 0; kk + m <= j; ++kk) {
        if (kk + m < 1) continue;
        Rational shape = m == 0 ? Rational(1, kk) : Rational(binomial(kk + 2 * m - 1, 2 * m - 1), 2 * m);
        shape.canonicalize();
        Rational c = Rational(binomial(j + m - 1, kk + 2 * m - 1) * binomial(j + m, kk + 2 * m - 1)) * shape;
        out += na.pow(2 * m) * nb.pow(kk) * c;
      }
  }
  return -out;
}

std::vector<CheckResult> verify_algebraic(const KernelState& ks) {
  const WeightSpec& spec = ks.spec;
  const int d = spec.d;
  const Series& r = ks.r;
  const Series& s = ks.s;
  auto vars = r.vars();
  const int n = r.order();
  Series z = Series::variable(vars, n, "z");
  std::vector<CheckResult> out;

  auto q_cat_sum = [&](int k) {
    Series acc(vars, n);
    for (int j = 0; 2 * j <= k; ++j) acc += q_inverse(k, 2 * j, r, s) * Rational(catalan(j));
    return acc;
  };
  if (d >= 2)
    out.push_back(residual_check("closed equation k=d-1",
                                 q_cat_sum(d - 1) + face_path_sum(spec, r, s, d + 1, -d)));
  if (d >= 1)
    out.push_back(residual_check("closed equation k=d",
                                 z + q_cat_sum(d) + face_path_sum(spec, r, s, d + 2, -d - 1)));
  for (int k = 1; k <= d - 2; ++k)
    out.push_back(residual_check("slice series V_" + std::to_string(k), ks.V(k) + q_cat_sum(k)));

  Series b_val = r - Rational(1);
  if (d >= 1) {
    Series v_dm1 = face_path_sum(spec, r, s, d + 1, -d);
    Series v_d = face_path_sum(spec, r, s, d + 2, -d - 1);
    out.push_back(residual_check("eliminated recursion k=d-1",
                                 evaluate_tilde(eliminate_tilde(d - 1, false), s, b_val) - v_dm1));
    out.push_back(residual_check("eliminated recursion k=d",
                                 evaluate_tilde(eliminate_tilde(d, false), s, b_val) - z - v_d));
    if (d >= 2)
      out.push_back(residual_check("conjectured elimination k=d-1",
                                   evaluate_tilde(tilde_conjecture(d - 1), s, b_val) - v_dm1));
    out.push_back(residual_check("conjectured elimination k=d",
                                 evaluate_tilde(tilde_conjecture(d), s, b_val) - z - v_d));
  }

  if (spec.bipartite && d >= 2) {
    const int b = d / 2;
    Series faces(vars, n);
    for (int deg : spec.face_degrees) {
      int j = deg / 2;
      if (j >= b + 1)
        faces += Series::variable(vars, n, face_var(deg)) * r.pow(j + b) * Rational(binomial(2 * j - 1, j + b));
    }
    Series lhs = z + faces;
    for (int l = 0; l <= b; ++l) {
      Integer c = binomial(b + l, 2 * l) * catalan(l);
      if ((b - l) % 2 != 0) c = -c;
      lhs += r.pow(b - l) * Rational(c);
    }
    out.push_back(residual_check("bipartite equation", lhs));
    Series one_minus_r = Series::constant(vars, n, 1) - r;
    Series lag(vars, n);
    for (int p = 1; p <= b; ++p) lag += one_minus_r.pow(p) * Rational(binomial(b, p) * binomial(b, p - 1));
    lag *= Rational(-1, b);
    out.push_back(residual_check("bipartite Lagrange equation", lag - z - faces));
  }
  return out;
}

std::string kernel_cache_key(const WeightSpec& spec) {
  std::string key = "d" + std::to_string(spec.d) + "_M" + std::to_string(spec.max_degree()) + "_N" +
                    std::to_string(spec.order) + (spec.bipartite ? "_bip" : "_gen");
  auto standard = WeightSpec::up_to(spec.d, spec.max_degree(), spec.order, spec.bipartite);
  if (standard.face_degrees != spec.face_degrees) {
    key += "_faces";
    for (int j : spec.face_degrees) key += "-" + std::to_string(j);
  }
  return key;
}

nlohmann::json kernel_to_json(const KernelState& ks) {
  nlohmann::json v = nlohmann::json::array();
  for (int k = -1; k <= ks.spec.d; ++k) v.push_back({{"k", k}, {"series", to_json(ks.V(k))}});
  return {{"key", kernel_cache_key(ks.spec)},
          {"d", ks.spec.d},
          {"M", ks.spec.max_degree()},
          {"order", ks.spec.order},
          {"bipartite", ks.spec.bipartite},
          {"face_degrees", ks.spec.face_degrees},
          {"R", to_json(ks.r)},
          {"S", to_json(ks.s)},
          {"V", v}};
}

}  // namespace irrmaps
