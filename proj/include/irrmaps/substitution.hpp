#pragma once

#include "irrmaps/kernel.hpp"

#include <string>
#include <utility>
#include <vector>

namespace irrmaps {

// Replaces named variables of f by series. Replacements must not involve any
// replaced variable. Everything is re-expressed over `target`.
Series substitute(const Series& f, const VarSetPtr& target,
                  const std::vector<std::pair<std::string, Series>>& subs);

// Weights one level down: the faces of `top` plus every degree in (level, top.d].
WeightSpec lower_spec(const WeightSpec& top, int level);

// Girth-d maps with outer degree d, weight x_j per inner face of degree
// j >= d. Lives over lower_spec(spec, d-1).vars() and never involves z.
Series girth_gf(const WeightSpec& spec);

struct SubstitutionLadder {
  WeightSpec spec;
  Series girth;         // G_d
  Series renormalized;  // X_d(z; x_{d+1}, ...) over spec.vars()
  // ladder[j - 1] = X_j^(d) over spec.vars(), 1 <= j <= d.
  std::vector<Series> ladder;
};

// X_d: inverse of G_d in x_d, after splitting off the x_d-free part.
Series renormalized_weight(const WeightSpec& spec, const Series& girth);
SubstitutionLadder renormalized_ladder(const WeightSpec& spec);

// Basic identity, its reciprocal and the full ladder down to arbitrary
// maps, for each outer degree in `degrees`. Also checks G_d(X_d) = z and the
// vanishing of odd rungs for even weights.
std::vector<CheckResult> check_substitution(const WeightSpec& spec, const std::vector<int>& degrees);

struct WeakIrreducibleGF {
  int d = 0;
  Series h;             // H_d(z; x_{d+1}, ...)
  Series renormalized;  // X_d read off the kernel
  Series girth;         // G_d
  Series diagonal;      // G_{d,D} (even d), else zero
};

// X_d from V_{d-2}: (V_{d-2} - sum_{j>d} x_j P_{1-d}(j-1; R, S)) / R^{d-1}.
Series renormalized_from_kernel(const KernelState& ks);
WeakIrreducibleGF weak_irreducible_H(const KernelState& ks);
// Kernel X_d vs reversion, the girth relation behind H_d, the diagonal
// equation, and R^d = 1 / (1 - (H' - 1) ...).
std::vector<CheckResult> check_weak_irreducible(const KernelState& ks);

}  // namespace irrmaps
