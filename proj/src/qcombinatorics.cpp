#include "nichols/qcombinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace nichols {

Cyclotomic quantum_integer(long m, const Cyclotomic& a) {
  if (m < 0) throw std::invalid_argument("quantum_integer requires m >= 0");
  Cyclotomic sum;
  Cyclotomic power(1);
  for (long i = 0; i < m; ++i) {
    sum += power;
    power *= a;
  }
  return sum;
}

Cyclotomic quantum_factorial(long m, const Cyclotomic& a) {
  if (m < 0) throw std::invalid_argument("quantum_factorial requires m >= 0");
  Cyclotomic prod(1);
  for (long k = 1; k <= m; ++k) prod *= quantum_integer(k, a);
  return prod;
}

Cyclotomic gauss_binom(long m, long k, const Cyclotomic& a) {
  if (k < 0 || k > m || m < 0) return Cyclotomic();
  // Row-by-row Pascal recurrence.
  std::vector<Cyclotomic> row(1, Cyclotomic(1));  // row for m = 0
  for (long r = 1; r <= m; ++r) {
    std::vector<Cyclotomic> next(r + 1, Cyclotomic());
    next[0] = Cyclotomic(1);
    next[r] = Cyclotomic(1);
    for (long j = 1; j < r; ++j) next[j] = row[j] + a.pow(r - j) * row[j - 1];
    row = std::move(next);
  }
  return row[k];
}

mpz_class binomial(long m, long k) {
  if (k < 0 || k > m || m < 0) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return result;
}

}  // namespace nichols
