#include "irrmaps/integrable.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/trees.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace irrmaps {

namespace {

Series zero_like(const Series& s) { return Series(s.vars(), s.order()); }

int min_degree(const Series& s) {
  int out = INT_MAX;
  for (const auto& t : s.terms()) out = std::min(out, t.degree);
  return out;
}

std::string at_index(const std::string& name, int i) { return name + " i=" + std::to_string(i); }

// x_j Z_{p+k+1;p}(j-1) summed over face degrees j >= k+2.
Series closure_row(const WeightSpec& spec, const VarSetPtr& vars, int k, int p, const HeightWeights& w) {
  Series out(vars, spec.order);
  for (int j : spec.face_degrees) {
    if (j < k + 2) continue;
    Series x = Series::variable(vars, spec.order, face_var(j));
    out += x * z_weighted(j - 1, p + k + 1, p, w, false);
  }
  return out;
}

int weight_height(const WeightSpec& spec, int cap) { return cap + spec.d + std::max(spec.d, spec.max_degree()) + 4; }

}  // namespace

// ---- distance kernel ----

Series DistanceKernel::V(int k, int p) const {
  if (k < -1 || p < -1) throw std::out_of_range("V_{k,p} needs k, p >= -1");
  if (p == -1) return Series(spec.vars(), spec.order);
  if (k > spec.d) return closure_row(spec, spec.vars(), k, p, weights(p + k + spec.max_degree() + 2));
  if (p > cap) return homogeneous.V(k);
  return v[k + 1][p + 1];
}

Series DistanceKernel::R(int m) const {
  if (m < 0) throw std::out_of_range("R_m needs m >= 0");
  if (m == 0) return Series(spec.vars(), spec.order);
  return V(0, m - 1) + Rational(1);
}

Series DistanceKernel::S(int m) const { return V(-1, m); }

HeightWeights DistanceKernel::weights(int max_height) const {
  HeightWeights w;
  for (int m = 0; m <= max_height; ++m) {
    w.down.push_back(R(m));
    w.level.push_back(S(m));
  }
  return w;
}

DistanceKernel solve_distance_kernel(const WeightSpec& spec, int i_max) {
  spec.validate();
  if (i_max < 0) throw std::invalid_argument("i_max must be >= 0");
  const int d = spec.d;
  const int n = spec.order;
  const int face_max = std::max(d, spec.max_degree());
  auto vars = spec.vars();
  Series zero(vars, n);
  Series z = Series::variable(vars, n, "z");

  DistanceKernel dk{spec, i_max, i_max + (n * face_max + 1) / 2 + d + 2, {}, solve_kernel(spec), 0};
  dk.v.assign(d + 2, std::vector<Series>(dk.cap + 2, zero));
  auto at = [&](int k, int p) -> Series& { return dk.v[k + 1][p + 1]; };
  const int limit = 2 * (n + dk.cap) + 10;
  for (int sweep = 1;; ++sweep) {
    if (sweep > limit) throw std::runtime_error("distance kernel did not converge");
    auto old = dk.v;
    HeightWeights w = dk.weights(weight_height(spec, dk.cap));
    for (int k = std::max(d - 1, -1); k <= d; ++k)
      for (int p = 0; p <= dk.cap; ++p) at(k, p) = closure_row(spec, vars, k, p, w);
    for (int p = 0; p <= dk.cap; ++p)
      for (int k = d - 2; k >= -1; --k) {
        Series next = at(k + 2, p - 1);
        if (k == d - 2) next += z;
        if (p > 0)
          for (int m = 1; m <= k + 1; ++m) next += at(m, p - 1) * dk.V(k - m, p + m);
        at(k, p) = std::move(next);
      }
    dk.sweeps = sweep;
    if (dk.v == old) break;
  }
  return dk;
}

std::vector<CheckResult> check_stabilization(const DistanceKernel& dk) {
  std::vector<CheckResult> out;
  const int d = dk.spec.d;
  // n d-gons bound a slice of boundary at most n(d-2)+2, so p' > p needs
  // n > (2p+k)/(d-2)
  if (dk.spec.face_degrees.empty() && d >= 3)
    for (int k = -1; k <= d; ++k)
      for (int p = 0; p <= dk.i_max; ++p) {
        int window = std::min(std::max(0, (2 * p + k) / (d - 2)), dk.spec.order);
        out.push_back(agreement_check("stabilization V_{" + std::to_string(k) + "," + std::to_string(p) + "}",
                                      dk.V(k, p).truncate(window), dk.homogeneous.V(k).truncate(window)));
      }
  for (int k = -1; k <= dk.spec.d; ++k)
    out.push_back(agreement_check("cap agrees with the homogeneous kernel k=" + std::to_string(k), dk.V(k, dk.cap),
                                  dk.homogeneous.V(k)));
  return out;
}

// ---- depth kernel ----

Series DepthKernel::V(int k, int p) const {
  if (k < 1 || k > d - 2 || p < -1) throw std::out_of_range("depth kernel index");
  if (p > cap) return limit[k - 1];
  return v[k - 1][p + 1];
}

DepthKernel solve_depth_kernel(int d, int order, int i_max) {
  if (d < 3) throw std::invalid_argument("depth kernel needs d >= 3");
  auto spec = WeightSpec::pure(d, order);
  auto vars = spec.vars();
  Series zero(vars, order);
  Series z = Series::variable(vars, order, "z");
  auto ks = solve_kernel(spec);

  DepthKernel dep;
  dep.d = d;
  dep.order = order;
  dep.i_max = i_max;
  dep.cap = i_max + order * d + d;
  dep.v.assign(d - 2, std::vector<Series>(dep.cap + 2, zero));
  for (int k = 1; k <= d - 2; ++k) dep.limit.push_back(ks.V(k));

  // subtrees of out-degrees m_1, m_2, ... around the lower vertex
  std::function<Series(int, int)> around = [&](int rest, int height) {
    Series sum = zero;
    for (int m = 1; m <= std::min(rest, d - 2); ++m) {
      Series f = dep.V(m, height);
      if (f.is_zero()) continue;
      sum += m == rest ? f : f * around(rest - m, height + m);
    }
    return sum;
  };
  for (int sweep = 1;; ++sweep) {
    if (sweep > 2 * (order + dep.cap) + 10) throw std::runtime_error("depth kernel did not converge");
    auto old = dep.v;
    for (int p = 0; p <= dep.cap; ++p)
      for (int k = 1; k <= d - 2; ++k) {
        Series next = k == d - 2 ? z : zero;
        if (p > 0) next += around(k + 2, p - 1);
        dep.v[k - 1][p + 1] = std::move(next);
      }
    if (dep.v == old) break;
  }
  return dep;
}

std::vector<CheckResult> check_depth_kernel(const DepthKernel& dep, const DistanceKernel& dk, int max_leaves) {
  std::vector<CheckResult> out;
  for (int k = 1; k <= dep.d - 2; ++k)
    for (int p = 0; p <= dep.i_max; ++p)
      out.push_back(agreement_check("depth recurrence vs slices k=" + std::to_string(k) + " p=" + std::to_string(p),
                                    dep.V(k, p), dk.V(k, p)));
  auto census = depth_census(dep.d, max_leaves);
  const int leaves = std::min(max_leaves, dep.order);
  for (int k = 1; k <= dep.d - 2; ++k)
    for (int p = 0; p <= dep.i_max; ++p) {
      CheckResult c{"depth census k=" + std::to_string(k) + " p=" + std::to_string(p), true, {}};
      Series vkp = dep.V(k, p);
      for (int l = 1; l <= leaves; ++l) {
        long count = 0;
        for (int q = 0; q <= p; ++q) {
          auto it = census.find({k, q});
          if (it != census.end()) count += it->second[l];
        }
        if (Rational(count) != vkp.coeff_of("z", l)) {
          c.ok = false;
          c.detail = "leaves " + std::to_string(l) + ": trees " + std::to_string(count) + ", series " +
                     vkp.coeff_of("z", l).get_str();
          break;
        }
      }
      out.push_back(c);
    }
  return out;
}

// ---- hierarchies ----

namespace {

int initial_zeros(int d) {
  switch (d) {
    case 3:
    case 4:
      return 1;
    case 6:
      return 2;
    case 8:
      return 3;
  }
  throw std::invalid_argument("hierarchy families are d = 3, 4, 6, 8");
}

using TGetter = std::function<Series(int)>;

Series hierarchy_rhs(int d, int p, const TGetter& T, const Series& z) {
  Series one = Series::constant(z.vars(), z.order(), 1);
  switch (d) {
    case 4:
      return one + z * T(p - 1) * T(p + 1);
    case 3:
      return one + z.pow(2) * T(p - 1) * T(p) * T(p + 1);
    case 6:
      return one + z * (T(p - 2) * T(p + 1) + T(p - 1) * T(p + 1) + T(p - 1) * T(p + 2)) -
             z.pow(2) * T(p - 2) * T(p) * T(p + 2);
    case 8: {
      Series quad = T(p - 3) * T(p + 1) + T(p - 2) * T(p + 1) + T(p - 1) * T(p + 1) + T(p - 2) * T(p + 2) +
                    T(p - 1) * T(p + 2) + T(p - 1) * T(p + 3);
      Series cubic = T(p - 2) * T(p) * T(p + 2) + T(p - 3) * T(p - 1) * T(p + 2) + T(p - 3) * T(p) * T(p + 2) +
                     T(p - 3) * T(p) * T(p + 3) + T(p - 2) * T(p) * T(p + 3) + T(p - 2) * T(p + 1) * T(p + 3);
      return one + z * quad - z.pow(2) * cubic + z.pow(3) * T(p - 3) * T(p - 1) * T(p + 1) * T(p + 3);
    }
  }
  throw std::invalid_argument("hierarchy families are d = 3, 4, 6, 8");
}

}  // namespace

int HierarchySequence::reach() const { return initial_zeros(d); }

Series HierarchySequence::T(int i) const {
  if (i < first) throw std::out_of_range("T_i below the initial zeros");
  int idx = i - first;
  if (idx >= static_cast<int>(t.size())) return limit;
  return t[idx];
}

Series HierarchySequence::s(int i) const {
  if (d != 3) throw std::invalid_argument("s_i is the d=3 form");
  return Series::variable(limit.vars(), order, "z") * T(i);
}

Series HierarchySequence::r(int i) const {
  Series z = Series::variable(limit.vars(), order, "z");
  if (d == 3 || d == 4) {
    if (i < 0) throw std::out_of_range("r_i needs i >= 0");
    if (i == 0) return zero_like(limit);
    if (d == 3) return s(i - 1) * s(i) + Rational(1);
    return z * T(i - 1) + Rational(1);
  }
  if (i < 1) throw std::out_of_range("r_p needs p >= 1");
  return z * T(i - reach()) + Rational(1);
}

HierarchySequence hierarchy(int d, int order, int i_max) {
  const int zeros = initial_zeros(d);
  auto vars = WeightSpec::pure(d, order).vars();
  Series z = Series::variable(vars, order, "z");
  Series limit = Series::constant(vars, order, 1);
  for (int it = 0;; ++it) {
    if (it > order + 4) throw std::runtime_error("homogeneous T did not converge");
    Series next = hierarchy_rhs(d, 0, [&](int) { return limit; }, z);
    if (next == limit) break;
    limit = next;
  }
  HierarchySequence h{d, order, i_max, 1 - zeros, {}, limit};
  const int cap = i_max + zeros * (order + 2) + 2;
  h.t.assign(cap - h.first + 1, Series(vars, order));
  for (int i = 1; i <= cap; ++i) h.t[i - h.first] = h.limit;
  for (int sweep = 1;; ++sweep) {
    if (sweep > 2 * (order + cap) + 10) throw std::runtime_error("hierarchy did not converge");
    auto old = h.t;
    for (int p = 1; p <= cap; ++p) h.t[p - h.first] = hierarchy_rhs(d, p, [&](int i) { return h.T(i); }, z);
    if (h.t == old) break;
  }
  return h;
}

HierarchySequence hierarchy(int d, int order) { return hierarchy(d, order, order + 2); }

std::vector<CheckResult> check_hierarchy(const HierarchySequence& h, const DistanceKernel& dk) {
  if (dk.spec.d != h.d || !dk.spec.face_degrees.empty())
    throw std::invalid_argument("hierarchy needs the pure distance kernel of the same d");
  std::vector<CheckResult> out;
  const std::string tag = "d=" + std::to_string(h.d) + " ";
  Series z = Series::variable(h.limit.vars(), h.order, "z");
  for (int i = h.first; i <= 0; ++i)
    out.push_back(residual_check(at_index(tag + "initial zero", i), h.T(i)));
  for (int i = 1; i <= h.i_max; ++i)
    out.push_back(residual_check(at_index(tag + "T recurrence", i),
                                 h.T(i) - hierarchy_rhs(h.d, i, [&](int j) { return h.T(j); }, z)));

  // r-forms
  for (int i = 0; i <= h.i_max; ++i) {
    if (h.d == 4)
      out.push_back(residual_check(at_index(tag + "r-form", i),
                                   z + h.r(i) * h.r(i + 2) - (h.r(i) + h.r(i + 1) + h.r(i + 2)) + Rational(2)));
    if (h.d == 3 && i >= 1)
      out.push_back(residual_check(at_index(tag + "s-form", i), z + h.s(i - 1) * h.s(i) * h.s(i + 1) - h.s(i)));
    if (h.d == 6 && i >= 1) {
      auto r = [&](int j) { return h.r(i + j); };
      Series e = z - r(0) * r(2) * r(4) + r(0) * r(2) + r(0) * r(3) + r(0) * r(4) + r(1) * r(3) + r(1) * r(4) +
                 r(2) * r(4) - (r(0) + r(1) + r(2) + r(3) + r(4)) * Rational(2) + Rational(5);
      out.push_back(residual_check(at_index(tag + "r-form", i), e));
    }
  }

  // distance kernel
  for (int p = 0; p <= h.i_max; ++p) {
    const std::string at_p = " p=" + std::to_string(p);
    out.push_back(agreement_check(tag + "V_{0,p} = r_{p+1} - 1" + at_p, dk.V(0, p), h.r(p + 1) - Rational(1)));
    if (h.d == 4) out.push_back(agreement_check(tag + "V_{2,p} = z T_{p+1}" + at_p, dk.V(2, p), z * h.T(p + 1)));
    if (h.d == 3) {
      out.push_back(agreement_check(tag + "V_{1,p} = s_{p+1}" + at_p, dk.V(1, p), h.s(p + 1)));
      out.push_back(agreement_check(tag + "V_{-1,p} = s_p" + at_p, dk.V(-1, p), h.s(p)));
    }
  }

  // stabilization
  const auto& ks = dk.homogeneous;
  out.push_back(agreement_check(tag + "homogeneous T", h.d == 3 ? z * h.limit : z * h.limit + Rational(1),
                                h.d == 3 ? ks.s : ks.r));
  CheckResult mono{tag + "T_i deviation degree grows with i", true, {}};
  int prev = 0;
  for (int i = 1; i <= h.i_max; ++i) {
    int dev = min_degree(h.T(i) - h.limit);
    if (dev < prev || dev == 0) {
      mono.ok = false;
      mono.detail = "deviation degree " + std::to_string(dev) + " at i=" + std::to_string(i);
      break;
    }
    prev = dev;
  }
  if (mono.ok && h.i_max >= 2 && min_degree(h.T(h.i_max) - h.limit) <= min_degree(h.T(1) - h.limit)) {
    mono.ok = false;
    mono.detail = "no growth over the window";
  }
  out.push_back(mono);
  return out;
}

void write_hierarchy_csv(std::ostream& out, const HierarchySequence& h, bool header) {
  if (header) out << "family,i,n,coefficient\n";
  for (int i = h.first; i <= h.i_max; ++i) {
    Series t = h.T(i);
    for (int n = 0; n <= h.order; ++n) out << h.d << "," << i << "," << n << "," << t.coeff_of("z", n).get_str() << "\n";
  }
}

// ---- closed forms ----

Series fixed_point_y(const Series& c, const std::vector<int>& poly) {
  if (c.constant_term() != 0) throw std::invalid_argument("y needs a coefficient without constant term");
  Series y = zero_like(c);
  for (int it = 0;; ++it) {
    if (it > c.order() + 2) throw std::runtime_error("y did not converge");
    Series p = zero_like(c);
    Series power = Series::constant(c.vars(), c.order(), 1);
    for (int a : poly) {
      p += power * Rational(a);
      power = power * y;
    }
    Series next = c * p;
    if (next == y) return y;
    y = std::move(next);
  }
}

Series y_product(const Series& y, const std::vector<int>& num, const std::vector<int>& den) {
  Series one = Series::constant(y.vars(), y.order(), 1);
  Series out = one;
  for (int a : num) out = out * (one - y.pow(a));
  Series below = one;
  for (int b : den) below = below * (one - y.pow(b));
  return out * below.inverse();
}

WeightSpec baseline_spec(Baseline b, int order) {
  WeightSpec w;
  w.d = 0;
  w.order = order;
  if (b == Baseline::Quadrangular) {
    w.bipartite = true;
    w.face_degrees = {2, 4};
  } else {
    w.face_degrees = {1, 2, 3};
  }
  return w;
}

std::vector<CheckResult> closed_form_check(int d, int order, int i_max) {
  if (d != 3 && d != 4) throw std::invalid_argument("closed forms are printed for d = 3, 4");
  std::vector<CheckResult> out;
  auto h = hierarchy(d, order, i_max);
  Series z = Series::variable(h.limit.vars(), order, "z");
  const std::string tag = "d=" + std::to_string(d) + " ";
  if (d == 4) {
    Series y = fixed_point_y(z * h.limit, {1, 0, 1});
    Series r = z * h.limit + Rational(1);
    // y + 1/y = 1/(r-1) with the same y
    out.push_back(residual_check(tag + "y relation", y - (r - Rational(1)) * (y * y + Rational(1))));
    for (int i = 0; i <= i_max; ++i) {
      out.push_back(agreement_check(at_index(tag + "T_i product form", i), h.T(i),
                                    h.limit * y_product(y, {i, i + 5}, {i + 2, i + 3})));
      out.push_back(
          agreement_check(at_index(tag + "r_i product form", i), h.r(i), r * y_product(y, {i, i + 3}, {i + 1, i + 2})));
    }
  } else {
    Series s = z * h.limit;
    Series r = s * s + Rational(1);
    Series y = fixed_point_y(s * s, {1, 1, 1});
    for (int i = 1; i <= i_max + 1; ++i) {
      out.push_back(agreement_check(at_index(tag + "s_{i-1} product form", i), h.s(i - 1),
                                    s * y_product(y, {i - 1, i + 2}, {i, i + 1})));
      out.push_back(
          agreement_check(at_index(tag + "r_i product form", i), h.r(i), r * y_product(y, {i, i + 2}, {i + 1, i + 1})));
    }
  }
  return out;
}

std::vector<CheckResult> closed_form_check(Baseline b, int order, int i_max) {
  std::vector<CheckResult> out;
  auto spec = baseline_spec(b, order);
  auto vars = spec.vars();
  auto dk = solve_distance_kernel(spec, i_max + 2);
  const Series& R = dk.homogeneous.r;
  const Series& S = dk.homogeneous.s;
  auto x = [&](int j) { return Series::variable(vars, order, face_var(j)); };
  if (b == Baseline::Quadrangular) {
    const std::string tag = "quadrangular ";
    Series y = fixed_point_y(x(4) * R * R, {1, 1, 1});
    for (int i = 0; i <= i_max; ++i)
      out.push_back(agreement_check(at_index(tag + "R_i product form", i), dk.R(i),
                                    R * y_product(y, {i, i + 3}, {i + 1, i + 2})));
    for (int i = 1; i <= i_max; ++i)
      out.push_back(residual_check(at_index(tag + "R_i equation", i),
                                   dk.R(i) - Rational(1) - x(2) * dk.R(i) -
                                       x(4) * dk.R(i) * (dk.R(i - 1) + dk.R(i) + dk.R(i + 1))));
  } else {
    const std::string tag = "triangular ";
    Series y = fixed_point_y(x(3).pow(2) * R.pow(3), {1, 2, 1});
    for (int i = 1; i <= i_max; ++i) {
      out.push_back(
          agreement_check(at_index(tag + "R_i product form", i), dk.R(i), R * y_product(y, {i, i + 2}, {i + 1, i + 1})));
      Series dip = x(3) * R * R * y.pow(i - 1) * y_product(y, {1, 2}, {i, i + 1});
      out.push_back(agreement_check(at_index(tag + "S_{i-1} product form", i), dk.S(i - 1), S - dip));
      out.push_back(residual_check(at_index(tag + "R_i equation", i),
                                   dk.R(i) - Rational(1) - x(2) * dk.R(i) - x(3) * dk.R(i) * (dk.S(i - 1) + dk.S(i))));
      out.push_back(residual_check(at_index(tag + "S_{i-1} equation", i),
                                   dk.S(i - 1) - x(1) - x(2) * dk.S(i - 1) -
                                       x(3) * (dk.S(i - 1).pow(2) + dk.R(i - 1) + dk.R(i))));
    }
  }
  return out;
}

// ---- conserved quantities ----

namespace {

// F_2, F_4 of the quadrangular family; x4 may be a renormalized weight.
std::vector<Series> quadrangular_invariants(const std::function<Series(int)>& R, const Series& x4, int i) {
  Series c = x4 * R(i - 1) * R(i) * R(i + 1);
  return {R(i) - c, R(i) * (R(i) + R(i + 1)) - (R(i) + R(i + 1) + R(i + 2)) * c};
}

// F_1, F_2, F_3 of the triangular family.
std::vector<Series> triangular_invariants(const std::function<Series(int)>& R, const std::function<Series(int)>& S,
                                          const Series& x3, int i) {
  Series c = x3 * R(i) * R(i - 1);
  Series s0 = S(i - 1), s1 = S(i);
  return {s0 - c, s0 * s0 + R(i) - (s0 + s1) * c,
          s0.pow(3) + R(i) * (s0 * Rational(2) + s1) - (s0 * s0 + s0 * s1 + s1 * s1 + R(i) + R(i + 1)) * c};
}

}  // namespace

std::vector<CheckResult> conserved_quantities(int d, int order, int i_max) {
  if (d != 3 && d != 4) throw std::invalid_argument("printed conserved quantities are for d = 3, 4");
  std::vector<CheckResult> out;
  auto dk = solve_distance_kernel(WeightSpec::pure(d, order), i_max + 2);
  const auto& ks = dk.homogeneous;
  auto vars = ks.r.vars();
  Series z = Series::variable(vars, order, "z");
  Series one = Series::constant(vars, order, 1);
  auto R = [&](int i) { return dk.R(i); };
  auto S = [&](int i) { return dk.S(i); };
  const std::string tag = "d=" + std::to_string(d) + " ";
  for (int i = 1; i <= i_max; ++i) {
    if (d == 4) {
      Series x4 = (ks.r - Rational(1)) * ks.r.pow(3).inverse();
      auto f = quadrangular_invariants(R, x4, i);
      out.push_back(agreement_check(at_index(tag + "f_2 = 1", i), f[0], one));
      out.push_back(agreement_check(at_index(tag + "f_4 = 2 + z", i), f[1], z + Rational(2)));
    } else {
      Series x3 = ks.s * ks.r.pow(2).inverse();
      auto f = triangular_invariants(R, S, x3, i);
      out.push_back(residual_check(at_index(tag + "f_1 = 0", i), f[0]));
      out.push_back(agreement_check(at_index(tag + "f_2 = 1", i), f[1], one));
      out.push_back(agreement_check(at_index(tag + "f_3 = z", i), f[2], z));
    }
  }
  return out;
}

std::vector<CheckResult> conserved_quantities(Baseline b, int order, int i_max) {
  std::vector<CheckResult> out;
  auto spec = baseline_spec(b, order);
  auto dk = solve_distance_kernel(spec, i_max + 2);
  auto vars = spec.vars();
  auto R = [&](int i) { return dk.R(i); };
  auto S = [&](int i) { return dk.S(i); };
  for (int i = 1; i <= i_max; ++i) {
    if (b == Baseline::Quadrangular) {
      auto f = quadrangular_invariants(R, Series::variable(vars, order, "x4"), i);
      out.push_back(agreement_check(at_index("quadrangular F_2", i), f[0], boundary_gf(2, dk.homogeneous)));
      out.push_back(agreement_check(at_index("quadrangular F_4", i), f[1], boundary_gf(4, dk.homogeneous)));
    } else {
      auto f = triangular_invariants(R, S, Series::variable(vars, order, "x3"), i);
      for (int n = 1; n <= 3; ++n)
        out.push_back(agreement_check(at_index("triangular F_" + std::to_string(n), i), f[n - 1],
                                      boundary_gf(n, dk.homogeneous)));
    }
  }
  return out;
}

std::vector<CheckResult> check_general_conserved(const DistanceKernel& dk, int n) {
  std::vector<CheckResult> out;
  Series expected = boundary_gf(n, dk.homogeneous);
  const std::string tag = "d=" + std::to_string(dk.spec.d) + " F_" + std::to_string(n) + " from height-dependent paths";
  for (int i = 1; i <= dk.i_max; ++i) {
    HeightWeights w = dk.weights(i + n + 1);
    Series f = z_weighted(n, i - 1, i - 1, w, true);
    for (int k = 1; k <= n; ++k) {
      Series vk = dk.V(k, i - 2);
      if (vk.is_zero()) continue;
      f -= z_weighted(n, i - 1, i - 1 + k, w, true) * vk;
    }
    out.push_back(agreement_check(at_index(tag, i), f, expected));
  }
  return out;
}

}  // namespace irrmaps
