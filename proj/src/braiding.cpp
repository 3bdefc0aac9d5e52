#include "nichols/braiding.hpp"

#include <sstream>
#include <stdexcept>

namespace nichols {

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DegreeVector operator-(const DegreeVector& d) {
  DegreeVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = -d[i];
  return out;
}

int total_degree(const DegreeVector& d) {
  int sum = 0;
  for (int c : d) sum += c;
  return sum;
}

void BraidingSpec::validate() const {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  if (static_cast<int>(exponents.size()) != rank)
    throw std::invalid_argument("exponent matrix must have " + std::to_string(rank) + " rows");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(exponents[i].size()) != rank)
      throw std::invalid_argument("exponent matrix row " + std::to_string(i + 1) + " has " +
                                  std::to_string(exponents[i].size()) + " entries, expected " +
                                  std::to_string(rank));
  }
  if (degree_cap < 0) throw std::invalid_argument("degree cap must be >= 0");
}

Cyclotomic BraidingSpec::p(int i, int j) const {
  return Cyclotomic::root_of_unity(conductor, exponents[i][j]);
}

Cyclotomic BraidingSpec::p_power(int i, int j, long e) const {
  return Cyclotomic::root_of_unity(conductor, static_cast<long>(exponents[i][j]) * e);
}

std::string BraidingSpec::fingerprint() const {
  std::ostringstream os;
  os << "n=" << rank << ";N=" << conductor << ";k=[";
  for (int i = 0; i < rank; ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < rank; ++j) {
      long e = ((exponents[i][j] % conductor) + conductor) % conductor;
      os << (j ? "," : "") << e;
    }
  }
  os << "]";
  return os.str();
}

long bichar_exponent(const BraidingSpec& spec, const DegreeVector& d, const DegreeVector& e) {
  if (static_cast<int>(d.size()) != spec.rank || static_cast<int>(e.size()) != spec.rank)
    throw std::invalid_argument("degree vectors must have length n");
  long sum = 0;
  for (int i = 0; i < spec.rank; ++i) {
    if (d[i] == 0) continue;
    for (int j = 0; j < spec.rank; ++j) {
      if (e[j] == 0) continue;
      sum += static_cast<long>(spec.exponents[i][j]) * d[i] * e[j];
    }
  }
  return sum;
}

Cyclotomic bichar_eval(const BraidingSpec& spec, const DegreeVector& d, const DegreeVector& e) {
  return Cyclotomic::root_of_unity(spec.conductor, bichar_exponent(spec, d, e));
}

bool is_symmetric(const BraidingSpec& spec) {
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < spec.rank; ++j) {
      long diff = spec.exponents[i][j] - spec.exponents[j][i];
      if (((diff % spec.conductor) + spec.conductor) % spec.conductor != 0) return false;
    }
  return true;
}

bool is_connected(const BraidingSpec& spec) {
  std::vector<int> component(spec.rank, -1);
  std::vector<int> stack = {0};
  component[0] = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < spec.rank; ++j) {
      if (j == i || component[j] >= 0) continue;
      long sum = spec.exponents[i][j] + spec.exponents[j][i];
      if (((sum % spec.conductor) + spec.conductor) % spec.conductor != 0) {
        component[j] = 0;
        stack.push_back(j);
      }
    }
  }
  for (int j = 0; j < spec.rank; ++j)
    if (component[j] < 0) return false;
  return true;
}

bool is_quantum_linear_space(const BraidingSpec& spec) {
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < spec.rank; ++j) {
      if (i == j) continue;
      long sum = spec.exponents[i][j] + spec.exponents[j][i];
      if (((sum % spec.conductor) + spec.conductor) % spec.conductor != 0) return false;
    }
  return true;
}

}  // namespace nichols
