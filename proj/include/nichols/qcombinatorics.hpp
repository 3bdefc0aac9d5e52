#pragma once

#include "nichols/cyclotomic.hpp"

namespace nichols {

/// (m)_a = 1 + a + ... + a^{m-1}, with (0)_a = 0.  Requires m >= 0.
Cyclotomic quantum_integer(long m, const Cyclotomic& a);

/// (m)_a^! = prod_{k=1}^m (k)_a, with (0)_a^! = 1.  Requires m >= 0.
Cyclotomic quantum_factorial(long m, const Cyclotomic& a);

/// Gaussian binomial coefficient, computed by the Pascal recurrence
/// C(m+1,k) = C(m,k) + a^{m+1-k} C(m,k-1) so that it is defined at every
/// root of unity.  Returns 0 when k < 0 or k > m.
Cyclotomic gauss_binom(long m, long k, const Cyclotomic& a);

/// Ordinary integer binomial coefficient (0 outside 0 <= k <= m).
mpz_class binomial(long m, long k);

}  // namespace nichols
