#pragma once

#include "nichols/cyclotomic.hpp"

#include <string>
#include <vector>

namespace nichols {

/// Z^n multidegree; deg(x_i) = e_i, dual letters count as -e_i.
using DegreeVector = std::vector<int>;

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b);
DegreeVector operator-(const DegreeVector& d);
int total_degree(const DegreeVector& d);

/// A diagonal braiding: p_ij = zeta_N^{k_ij} for an n x n integer exponent
/// matrix k.  Immutable after construction.
struct BraidingSpec {
  int rank = 0;
  int conductor = 1;
  std::vector<std::vector<int>> exponents;
  int degree_cap = 8;
  std::vector<std::string> labels;

  /// Throws std::invalid_argument when the matrix is not rank x rank or the
  /// sizes are out of range.
  void validate() const;

  int exponent(int i, int j) const { return exponents[i][j]; }
  /// p_ij as a field element (0-based letters).
  Cyclotomic p(int i, int j) const;
  /// p_ij^e without building intermediate products.
  Cyclotomic p_power(int i, int j, long e) const;

  std::string fingerprint() const;
};

/// Exponent of zeta_N in p_{u,v} for degrees u = d, v = e.
long bichar_exponent(const BraidingSpec& spec, const DegreeVector& d, const DegreeVector& e);

/// p_{u,v} = prod_{i,j} p_ij^{d_i e_j}; biadditive in both slots.
Cyclotomic bichar_eval(const BraidingSpec& spec, const DegreeVector& d, const DegreeVector& e);

/// p_{u,v} = p_{v,u} for all u, v (checked on the matrix).
bool is_symmetric(const BraidingSpec& spec);

/// Graph on letters with edges where p_ij p_ji != 1 is connected.
bool is_connected(const BraidingSpec& spec);

/// p_ij p_ji = 1 for all i != j.
bool is_quantum_linear_space(const BraidingSpec& spec);

}  // namespace nichols
