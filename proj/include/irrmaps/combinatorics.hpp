#pragma once

#include "irrmaps/rational.hpp"

namespace irrmaps {

// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(long n);

// Cat(h) for integer h >= 0, zero for negative h.
Integer catalan(long h);
// Cat(n/2): zero when n is odd or negative.
Integer catalan_half(long n);

// Ballot numbers (2k+1)/(2m+1) C(2m+1, m-k): nonnegative paths of length 2m
// with up/down steps ending at height 2k.
Integer ballot(long m, long k);
// Entries (-1)^(n+m) C(n+m, 2m) of the inverse of the ballot matrix.
Integer ballot_inverse(long n, long m);

}  // namespace irrmaps
