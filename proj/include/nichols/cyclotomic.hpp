#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace nichols {

using Rational = mpq_class;

/// Euler totient of n (n >= 1).
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, ascending powers, monic.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic
/// polynomial.  Values are immutable after construction; two elements with
/// the same conductor are equal iff their coefficient vectors are equal,
/// and elements with different conductors are compared after embedding
/// into the lcm conductor.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(long value) : conductor_(1), coeffs_(1, Rational(value)) {}
  explicit Cyclotomic(const Rational& value) : conductor_(1), coeffs_(1, value) {}

  static Cyclotomic rational(long num, long den);
  /// zeta_N^k (k may be negative or >= N).
  static Cyclotomic root_of_unity(int conductor, long power);
  /// From an arbitrary polynomial in zeta_N (ascending powers); reduces.
  static Cyclotomic from_polynomial(int conductor, std::vector<Rational> poly);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  /// Re-embed into Q(zeta_M); requires conductor() | M.
  Cyclotomic embedded(int conductor) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// Integer powers; negative exponents invert (throws on zero base).
  Cyclotomic pow(long k) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Expression-grammar compatible rendering ("z" = zeta_conductor).
  std::string str() const;

private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Smallest m >= 1 with a^m = 1 among divisors of lcm(2, conductor), or
/// nullopt when a is not a root of unity.  Throws std::domain_error on zero.
std::optional<int> mult_order(const Cyclotomic& a);

/// True iff a is a primitive m-th root of unity (false for zero).
bool is_primitive_root(const Cyclotomic& a, int m);

}  // namespace nichols
