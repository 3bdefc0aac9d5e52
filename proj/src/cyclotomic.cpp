#include "nichols/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace nichols {

namespace {

// Exact division of integer polynomials, ascending coefficients; the divisor
// must be monic and divide exactly.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> quot(dn - dd + 1, mpz_class(0));
  for (int d = dn; d >= dd; --d) {
    mpz_class c = num[d];
    if (c == 0) continue;
    quot[d - dd] = c;
    for (int j = 0; j <= dd; ++j) num[d - dd + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return quot;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<mpz_class>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by every proper Phi_d, d | n.
  std::vector<mpz_class> poly(n + 1, mpz_class(0));
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_div(std::move(poly), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

namespace {

// Reduce a rational polynomial in zeta_N modulo Phi_N to the power basis.
std::vector<Rational> reduce_mod_phi(int n, std::vector<Rational> poly) {
  // Fold exponents mod n first (zeta^n = 1).
  if (static_cast<int>(poly.size()) > n) {
    std::vector<Rational> folded(n, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) folded[i % n] += poly[i];
    poly = std::move(folded);
  }
  const auto& phi_poly = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi_poly.size()) - 1;
  for (int d = static_cast<int>(poly.size()) - 1; d >= deg; --d) {
    Rational c = poly[d];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) poly[d - deg + j] -= c * Rational(phi_poly[j]);
  }
  poly.resize(deg, Rational(0));
  for (auto& c : poly) c.canonicalize();
  return poly;
}

}  // namespace

Cyclotomic Cyclotomic::rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return Cyclotomic(q);
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long power) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  long k = power % conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> poly(k + 1, Rational(0));
  poly[k] = 1;
  return Cyclotomic(conductor, reduce_mod_phi(conductor, std::move(poly)));
}

Cyclotomic Cyclotomic::from_polynomial(int conductor, std::vector<Rational> poly) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  return Cyclotomic(conductor, reduce_mod_phi(conductor, std::move(poly)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0)
    throw std::invalid_argument("embedding requires a conductor multiple");
  const int step = conductor / conductor_;
  std::vector<Rational> poly(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return Cyclotomic(conductor, reduce_mod_phi(conductor, std::move(poly)));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> coeffs = coeffs_;
  for (auto& c : coeffs) c = -c;
  return Cyclotomic(conductor_, std::move(coeffs));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = static_cast<int>(lcm_long(a.conductor_, b.conductor_));
  Cyclotomic x = a.embedded(n);
  Cyclotomic y = b.embedded(n);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = static_cast<int>(lcm_long(a.conductor_, b.conductor_));
  Cyclotomic x = a.embedded(n);
  Cyclotomic y = b.embedded(n);
  std::vector<Rational> conv(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Cyclotomic::from_polynomial(n, std::move(conv));
}

namespace {

using QPoly = std::vector<Rational>;

int degree_of(const QPoly& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
    if (p[d] != 0) return d;
  return -1;
}

// Remainder-producing division, also returns the quotient.
QPoly poly_divmod(QPoly& rem, const QPoly& den) {
  const int dd = degree_of(den);
  QPoly quot(std::max<int>(1, static_cast<int>(rem.size())), Rational(0));
  for (int d = degree_of(rem); d >= dd; d = degree_of(rem)) {
    Rational c = rem[d] / den[dd];
    quot[d - dd] += c;
    for (int j = 0; j <= dd; ++j) rem[d - dd + j] -= c * den[j];
  }
  return quot;
}

QPoly poly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  QPoly result = a;
  const int dq = degree_of(q);
  const int db = degree_of(b);
  if (dq >= 0 && db >= 0) {
    result.resize(std::max<std::size_t>(result.size(), dq + db + 1), Rational(0));
    for (int i = 0; i <= dq; ++i) {
      if (q[i] == 0) continue;
      for (int j = 0; j <= db; ++j) result[i + j] -= q[i] * b[j];
    }
  }
  return result;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in scalar field");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid in Q[x] against Phi_N, which is irreducible.
  QPoly r0;
  for (const auto& c : cyclotomic_polynomial(conductor_)) r0.push_back(Rational(c));
  QPoly r1 = coeffs_;
  QPoly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of *this
  while (degree_of(r1) > 0) {
    QPoly rem = r0;
    QPoly q = poly_divmod(rem, r1);
    r0 = r1;
    r1 = std::move(rem);
    QPoly s2 = poly_sub_mul(s0, q, s1);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const int d = degree_of(r1);
  if (d != 0) throw std::logic_error("cyclotomic polynomial not coprime to element");
  Rational lead = r1[0];
  for (auto& c : s1) c /= lead;
  return Cyclotomic(conductor_, reduce_mod_phi(conductor_, std::move(s1)));
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int n = static_cast<int>(lcm_long(a.conductor_, b.conductor_));
  return a.embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    std::string body;
    if (i == 0 || abs_c != 1)
      body = abs_c.get_str() + (mono.empty() ? "" : " " + mono);
    else
      body = mono;
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::optional<int> mult_order(const Cyclotomic& a) {
  if (a.is_zero()) throw std::domain_error("multiplicative order of zero");
  const long bound = std::lcm<long>(2, a.conductor());
  for (long m = 1; m <= bound; ++m) {
    if (bound % m != 0) continue;
    if (a.pow(m).is_one()) return static_cast<int>(m);
  }
  return std::nullopt;
}

bool is_primitive_root(const Cyclotomic& a, int m) {
  if (a.is_zero()) return false;
  auto order = mult_order(a);
  return order.has_value() && *order == m;
}

}  // namespace nichols
