#include "irrmaps/substitution.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/combinatorics.hpp"
#include "irrmaps/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrmaps {

Series substitute(const Series& f, const VarSetPtr& target,
                  const std::vector<std::pair<std::string, Series>>& subs) {
  std::vector<std::string> names = target->names();
  auto add = [&](const VarSet& vs) {
    for (const auto& n : vs.names())
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  };
  add(*f.vars());
  for (const auto& [name, g] : subs) {
    add(*g.vars());
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
  auto work = make_vars(names);
  Series out = f.remap(work);
  for (const auto& [name, g] : subs) out = compose(out, name, g.remap(work));
  return out.remap(target);
}

WeightSpec lower_spec(const WeightSpec& top, int level) {
  if (level < 0 || level > top.d) throw std::invalid_argument("level out of range");
  WeightSpec w;
  w.d = level;
  w.order = top.order;
  for (int j = level + 1; j <= top.d; ++j) w.face_degrees.push_back(j);
  for (int j : top.face_degrees) w.face_degrees.push_back(j);
  return w;
}

Series girth_gf(const WeightSpec& spec) {
  if (spec.d < 1) throw std::invalid_argument("girth series needs d >= 1");
  auto below = solve_kernel(lower_spec(spec, spec.d - 1));
  return boundary_gf(spec.d, below).drop("z") - Rational(catalan_half(spec.d));
}

Series renormalized_weight(const WeightSpec& spec, const Series& girth) {
  const std::string xd = face_var(spec.d);
  Series a = girth.drop(xd);
  Series inverse = revert(girth - a, xd);
  Series z = Series::variable(girth.vars(), girth.order(), "z");
  return compose(inverse, xd, z - a).remap(spec.vars());
}

SubstitutionLadder renormalized_ladder(const WeightSpec& spec) {
  spec.validate();
  const int d = spec.d;
  Series zero(spec.vars(), spec.order);
  SubstitutionLadder out{spec, zero, zero, std::vector<Series>(d, zero)};
  if (d == 0) return out;
  out.girth = girth_gf(spec);
  out.renormalized = renormalized_weight(spec, out.girth);
  out.ladder[d - 1] = out.renormalized;
  for (int j = d - 1; j >= 1; --j) {
    WeightSpec level = lower_spec(spec, j);
    Series xj = renormalized_weight(level, girth_gf(level)).drop("z");
    std::vector<std::pair<std::string, Series>> subs;
    for (int k = j + 1; k <= d; ++k) subs.emplace_back(face_var(k), out.ladder[k - 1]);
    out.ladder[j - 1] = substitute(xj, spec.vars(), subs);
  }
  return out;
}

std::vector<CheckResult> check_substitution(const WeightSpec& spec, const std::vector<int>& degrees) {
  spec.validate();
  const int d = spec.d;
  if (d < 1) throw std::invalid_argument("substitution needs d >= 1");
  std::vector<CheckResult> out;
  auto top = solve_kernel(spec);
  auto below = solve_kernel(lower_spec(spec, d - 1));
  auto base = solve_kernel(lower_spec(spec, 0));
  auto lad = renormalized_ladder(spec);
  const auto& low_vars = below.r.vars();
  const std::string tag = " d=" + std::to_string(d);

  Series z_low = Series::variable(low_vars, spec.order, "z");
  out.push_back(
      agreement_check("G_d(X_d) = z" + tag, compose(lad.girth, face_var(d), lad.renormalized.remap(low_vars)), z_low));
  out.push_back({"G_d constant term" + tag, lad.girth.constant_term() == 0, {}});
  Exponents lin(low_vars->size(), 0);
  lin[low_vars->index(face_var(d))] = 1;
  out.push_back({"G_d linear coefficient" + tag, lad.girth.coeff(lin) == 1, {}});

  bool even_weights = std::all_of(spec.face_degrees.begin(), spec.face_degrees.end(), [](int j) { return j % 2 == 0; });
  if (even_weights) {
    if (d % 2 == 0)
      for (int j = 1; j <= d; j += 2)
        out.push_back(residual_check("odd rung X_" + std::to_string(j) + tag, lad.ladder[j - 1]));
    else
      out.push_back(residual_check("X_d(0) for odd d" + tag, lad.renormalized.drop("z")));
  }

  for (int n : degrees) {
    const std::string name = " n=" + std::to_string(n) + tag;
    Series fd = boundary_gf(n, top);
    Series girth_side = boundary_gf(n, below).drop("z");
    out.push_back(agreement_check("basic identity" + name, girth_side,
                                  substitute(fd, low_vars, {{"z", lad.girth}})));
    out.push_back(agreement_check("reciprocal identity" + name, fd,
                                  substitute(girth_side, spec.vars(), {{face_var(d), lad.renormalized}})));
    std::vector<std::pair<std::string, Series>> subs;
    for (int j = 1; j <= d; ++j) subs.emplace_back(face_var(j), lad.ladder[j - 1]);
    out.push_back(agreement_check("full ladder" + name, fd,
                                  substitute(boundary_gf(n, base).drop("z"), spec.vars(), subs)));
  }
  return out;
}

Series renormalized_from_kernel(const KernelState& ks) {
  const int d = ks.spec.d;
  if (d < 1) throw std::invalid_argument("renormalized weight needs d >= 1");
  Series top = ks.V(d - 2) - face_path_sum(ks.spec, ks.r, ks.s, d + 1, 1 - d);
  return top * ks.r.pow(d - 1).inverse();
}

namespace {

// z^3 / (1 + z) times d/2 for even d, else zero.
Series diagonal_correction(int d, const Series& z) {
  if (d % 2 != 0) return Series(z.vars(), z.order());
  return z.pow(3) * (z + Rational(1)).inverse() * Rational(d / 2);
}

}  // namespace

WeakIrreducibleGF weak_irreducible_H(const KernelState& ks) {
  const int d = ks.spec.d;
  Series x = renormalized_from_kernel(ks);
  Series z = Series::variable(ks.r.vars(), ks.r.order(), "z");
  Series g = girth_gf(ks.spec);
  WeakIrreducibleGF out{d, z * Rational(2) + diagonal_correction(d, z) - x, x, g, Series(g.vars(), g.order())};
  if (d % 2 == 0) out.diagonal = out.girth * out.girth * (out.girth + Rational(1)).inverse();
  return out;
}

std::vector<CheckResult> check_weak_irreducible(const KernelState& ks) {
  const int d = ks.spec.d;
  const std::string tag = " d=" + std::to_string(d);
  auto w = weak_irreducible_H(ks);
  std::vector<CheckResult> out;
  out.push_back(agreement_check("X_d kernel vs reversion" + tag, w.renormalized,
                                renormalized_weight(ks.spec, w.girth)));

  // G - x_d = H(G) - G - d/2 (G^3/(1+G)), the last term for even d only.
  const auto& gv = w.girth.vars();
  Series g = w.girth;
  Series xd = Series::variable(gv, g.order(), face_var(d));
  Series h_of_g = substitute(w.h, gv, {{"z", g}});
  out.push_back(agreement_check("girth relation" + tag, g - xd, h_of_g - g - diagonal_correction(d, g)));

  if (d % 2 == 0) {
    Series rest = g - w.diagonal;
    Series rhs = rest * rest * (Series::constant(gv, g.order(), 1) - rest).inverse();
    out.push_back(agreement_check("diagonal paths" + tag, w.diagonal, rhs));
  }

  Series z = Series::variable(ks.r.vars(), ks.r.order(), "z");
  Series hp = w.h.derivative("z");
  Series one = Series::constant(ks.r.vars(), hp.order(), 1);
  Series denom = one - (hp - Rational(1));
  if (d % 2 == 0) {
    Series zt = z.truncate(hp.order());
    Series frac = (zt * Rational(2) + zt * zt) * (one + zt).pow(2).inverse();
    denom = one - (hp - Rational(1) - zt * Rational(d)) - frac * Rational(d, 2);
  }
  out.push_back(agreement_check("R^d against H'" + tag, ks.r.pow(d) * denom, one));
  return out;
}

}  // namespace irrmaps
