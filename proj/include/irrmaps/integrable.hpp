#pragma once

#include "irrmaps/kernel.hpp"
#include "irrmaps/paths.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace irrmaps {

// Slice series with the left boundary length bounded by p: V_{k,p} counts
// k-slices of type p'/p'+k+1 with p' <= p. Rows -1 <= k <= d are stored for
// -1 <= p <= cap; beyond cap the homogeneous kernel is used, which is exact
// on the truncation window once cap >= order * max face degree / 2.
struct DistanceKernel {
  WeightSpec spec;
  int i_max = 0;
  int cap = 0;
  // v[k + 1][p + 1]
  std::vector<std::vector<Series>> v;
  KernelState homogeneous;
  int sweeps = 0;

  // Any k >= -1; rows above d come from the face closure.
  Series V(int k, int p) const;
  Series R(int m) const;  // R_0 = 0, R_{m+1} = 1 + V_{0,m}
  Series S(int m) const;  // V_{-1,m}
  // down[m] = R_m, level[m] = S_m for 0 <= m <= max_height.
  HeightWeights weights(int max_height) const;
};

DistanceKernel solve_distance_kernel(const WeightSpec& spec, int i_max);

// Generating functions of d-oriented k-trees of depth at most p, from the
// composition recurrence over subtrees. Pure d-angulations, 1 <= k <= d-2.
struct DepthKernel {
  int d = 3;
  int order = 0;
  int i_max = 0;
  int cap = 0;
  std::vector<std::vector<Series>> v;  // v[k - 1][p + 1]
  std::vector<Series> limit;           // v_k of the homogeneous kernel

  Series V(int k, int p) const;
};

DepthKernel solve_depth_kernel(int d, int order, int i_max);

// T-forms of the integrable hierarchies for d in {3, 4, 6, 8}, in z alone.
struct HierarchySequence {
  int d = 4;
  int order = 0;
  int i_max = 0;
  int first = 0;  // smallest stored index, all initial zeros included
  std::vector<Series> t;
  Series limit;  // homogeneous fixed point

  Series T(int i) const;
  // r_i = 1 + z T_{i - shift} with r_0 = 0 for d = 3, 4 (d=3: 1 + s_{i-1} s_i).
  Series r(int i) const;
  // d = 3 only: s_i = z T_i.
  Series s(int i) const;
  int reach() const;
};

HierarchySequence hierarchy(int d, int order, int i_max);
// Default window: i_max = order + 2.
HierarchySequence hierarchy(int d, int order);

// Recurrence residuals, r-form residuals, identifications with the distance
// kernel and stabilization to the homogeneous solution.
std::vector<CheckResult> check_hierarchy(const HierarchySequence& h, const DistanceKernel& dk);
std::vector<CheckResult> check_depth_kernel(const DepthKernel& dep, const DistanceKernel& dk, int max_leaves);
// V_{k,p} against V_k on total degree <= (2p+k)/(d-2) for pure kernels, and
// the top row against the homogeneous kernel.
std::vector<CheckResult> check_stabilization(const DistanceKernel& dk);

// y is the power-series root with y(0) = 0 of y = c * poly(y).
Series fixed_point_y(const Series& c, const std::vector<int>& poly);
// prod (1 - y^a) / prod (1 - y^b).
Series y_product(const Series& y, const std::vector<int>& num, const std::vector<int>& den);

// Baseline families without irreducibility: general maps with weights
// x2, x4 (quadrangular) or x1, x2, x3 (triangular).
enum class Baseline { Quadrangular, Triangular };
WeightSpec baseline_spec(Baseline b, int order);

// Product formulas against the recurrence output, for d in {3, 4}.
std::vector<CheckResult> closed_form_check(int d, int order, int i_max);
std::vector<CheckResult> closed_form_check(Baseline b, int order, int i_max);

// Printed conserved quantities for d in {3, 4} (pure), i = 1..i_max.
std::vector<CheckResult> conserved_quantities(int d, int order, int i_max);
std::vector<CheckResult> conserved_quantities(Baseline b, int order, int i_max);
// Z+_{i-1,i-1}(n) - sum_k Z+_{i-1,i-1+k}(n) V_{k,i-2} for i = 1..dk.i_max,
// against F_n of the homogeneous kernel.
std::vector<CheckResult> check_general_conserved(const DistanceKernel& dk, int n);

// Rows family,i,n,coefficient.
void write_hierarchy_csv(std::ostream& out, const HierarchySequence& h, bool header = true);

}  // namespace irrmaps
