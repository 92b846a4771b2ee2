#include "irrmaps/combinatorics.hpp"

namespace irrmaps {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) return 0;
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer catalan(long h) {
  if (h < 0) return 0;
  return binomial(2 * h, h) / (h + 1);
}

Integer catalan_half(long n) {
  if (n < 0 || n % 2 != 0) return 0;
  return catalan(n / 2);
}

Integer ballot(long m, long k) {
  if (k < 0 || k > m) return 0;
  return (2 * k + 1) * binomial(2 * m + 1, m - k) / (2 * m + 1);
}

Integer ballot_inverse(long n, long m) {
  Integer b = binomial(n + m, 2 * m);
  return (n + m) % 2 == 0 ? b : Integer(-b);
}

}  // namespace irrmaps
