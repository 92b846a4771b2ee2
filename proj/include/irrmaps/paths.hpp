#pragma once

#include "irrmaps/series.hpp"

#include <vector>

namespace irrmaps {

// Generating polynomial of three-step paths of length n from height 0 to
// height k, with weight r per down step and s per level step. With `nonneg`
// the paths stay at height >= 0 (requires k >= 0).
Series path_poly(int n, int k, const Series& r, const Series& s, bool nonneg);

// Entries of the inverse of the unitriangular matrix (path_poly(n, k, nonneg)).
Series q_inverse(int n, int k, const Series& r, const Series& s);

// Height-dependent weights: down[m] weighs a down step from m to m-1 (m >= 1;
// a down step into height -1 always weighs 0), level[m] a level step at height m.
struct HeightWeights {
  std::vector<Series> down;
  std::vector<Series> level;

  // Constant weights up to height `max_height`.
  static HeightWeights constant(const Series& r, const Series& s, int max_height);
};

// Paths of length n from height p to height p2 (both >= -1). With `nonneg`
// heights stay >= p. Throws when a weight needed by some path is missing.
Series z_weighted(int n, int p, int p2, const HeightWeights& w, bool nonneg);

// Brute-force sum over all 3^n step words (n <= 14).
Series path_oracle(int n, int k, const Series& r, const Series& s, bool nonneg);

}  // namespace irrmaps
