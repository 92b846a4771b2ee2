#pragma once

#include "irrmaps/kernel.hpp"

#include <ostream>
#include <vector>

namespace irrmaps {

// F_n^(d) = P+_0(n; R, S) - sum_{k>=1} P+_k(n; R, S) V_k.
Series boundary_gf(int n, const KernelState& ks);
// Closed form for bipartite kernels, written in R alone (n even).
Series boundary_gf_bipartite(int n, const KernelState& ks);

struct BoundaryGF {
  int n = 0;
  int d = 0;
  Series series;
  // Odd n requested for bipartite weights: the series is zero.
  bool parity_flag = false;
};

BoundaryGF boundary(int n, const KernelState& ks);

// Cat(n/2) for n < d, Cat(d/2) + z at n = d, for every n <= d.
std::vector<CheckResult> check_boundary_conditions(const KernelState& ks);
// General expression against the bipartite closed form.
CheckResult check_bipartite_route(int n, const KernelState& ks);

// P_d(n; R, S), the series of maps with a marked inner face of degree d.
Series pointing_gf(int n, const KernelState& ks);
// dF_n/dz against pointing_gf.
CheckResult check_pointing(int n, const KernelState& ks);

// Simple outer boundary of length 2p, quadrangular family: evaluated at a
// solution r of the d=0 equation and the face weight x4 (or its renormalized
// replacement).
Series simple_boundary_gf(int p, const Series& r, const Series& x4);
// Closed count of simple-boundary irreducible quadrangular dissections of
// the 2p-gon with k inner faces.
Rational simple_boundary_coeff(int p, int k);

// Two marked faces of degrees 2m and 2m2 (bipartite, m, m2 > d/2).
Series two_face_derivative(int m, int m2, const KernelState& ks);
Series two_face_closed(int m, int m2, const KernelState& ks);
std::vector<CheckResult> check_two_face(int m, int m2, const KernelState& ks);

struct AnnularGF {
  int n = 0;
  int d = 0;
  int central = 0;  // d'
  Series irreducible;       // P_{d'}(n; R, S)
  Series quasi_irreducible;  // P_{-d'}(n; R, S)
};

AnnularGF annular_gf(int n, int central, const KernelState& ks);
// quasi = irreducible * R^{d'}; at d' = d the irreducible series is dF_n/dz.
std::vector<CheckResult> check_annular(const AnnularGF& a, const KernelState& ks);

// Direct summation of the two ballot-matrix identities used to close the
// bipartite form, for b <= max_b, m <= max_m, j <= max_j.
std::vector<CheckResult> check_hypergeometric(int max_b, int max_m, int max_j);

// Rows n,d,monomial,coefficient.
void write_boundary_csv(std::ostream& out, const std::vector<BoundaryGF>& rows, bool header = true);

}  // namespace irrmaps
