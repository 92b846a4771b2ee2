#pragma once

#include "irrmaps/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace irrmaps {

// Weights for d-irreducible maps: z per inner face of degree d, x_j per inner
// face of degree j for each j in `face_degrees` (all > d).
struct WeightSpec {
  int d = 0;
  std::vector<int> face_degrees;
  bool bipartite = false;
  int order = 0;

  static WeightSpec pure(int d, int order);
  // x_j for d < j <= max_degree (even j only when bipartite).
  static WeightSpec up_to(int d, int max_degree, int order, bool bipartite = false);

  int max_degree() const;
  VarSetPtr vars() const;
  void validate() const;
};

struct KernelState {
  WeightSpec spec;
  // v[k + 1] holds V_k for -1 <= k <= d.
  std::vector<Series> v;
  Series r;  // 1 + V_0
  Series s;  // V_{-1}
  int sweeps = 0;

  const Series& V(int k) const { return v.at(k + 1); }
  // Bipartite view U_k = V_{2k}.
  const Series& U(int k) const { return V(2 * k); }
};

KernelState solve_kernel(const WeightSpec& spec);
KernelState solve_kernel_bipartite(const WeightSpec& spec);

// Sum over active x_j (j >= min_degree) of x_j * P_{end}(j - 1; R, S).
Series face_path_sum(const WeightSpec& spec, const Series& r, const Series& s, int min_degree, int end);

// Polynomials in two symbols a = V~_{-1}, b = V~_0 (bipartite: the single
// symbol b = U~_0), truncated at an order large enough to be exact.
VarSetPtr tilde_vars();
// V~_k for k >= -1 (or U~_k for k >= 0) by the triangular recursion.
Series eliminate_tilde(int k, bool bipartite);
// Closed forms checked against the recursion.
Series tilde_lagrange(int k);
Series tilde_conjecture(int k);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

CheckResult residual_check(const std::string& name, const Series& residual);
// Compares on the common truncation window.
CheckResult agreement_check(const std::string& name, const Series& a, const Series& b);

// Substitutes the solved R, S into each closed algebraic equation.
std::vector<CheckResult> verify_algebraic(const KernelState& kernel);

nlohmann::json kernel_to_json(const KernelState& kernel);
std::string kernel_cache_key(const WeightSpec& spec);

}  // namespace irrmaps
