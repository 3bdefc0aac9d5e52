#pragma once

#include "nichols/free_algebra.hpp"
#include "nichols/linalg.hpp"
#include "nichols/nichols_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

/// Graded subspace of B(V) closed under one bracket operation, one exact
/// coordinate row space per degree (coordinates over that degree's
/// standard-word basis).
struct GradedSubspace {
  std::string fingerprint;
  BracketKind kind = BracketKind::R;
  int cap = 0;
  std::map<int, RowSpace> slices;  // degrees 1..cap
  bool stabilized = false;

  std::vector<int> dims() const;  // per degree 1..cap
  int total_dim() const;
  int slice_rank(int degree) const;
};

/// Degree-by-degree closure of V under the given bracket inside B(V):
/// slice(1) = V and slice(d) = span of bracket(slice(a), slice(b)), a+b = d.
GradedSubspace generate(NicholsAlgebra& algebra, BracketKind kind, int max_degree);

/// Coordinate membership, checked per homogeneous component.  Elements with
/// a nonzero scalar part are never contained.
bool contains(NicholsAlgebra& algebra, const GradedSubspace& gs, const FreeElement& u);

/// Representative element of a slice's echelon row.
FreeElement slice_element(NicholsAlgebra& algebra, const GradedSubspace& gs, int degree, int row);

struct EqualityReport {
  int cap = 0;
  std::vector<bool> equal_by_degree;       // index 0 = degree 1
  std::optional<int> first_difference;     // degree, when any
  std::optional<std::string> witness;      // element on one side only
};

/// Compares two closures as graded subspaces; evidence only, never a proof.
EqualityReport equality_probe(NicholsAlgebra& algebra, BracketKind kind1, BracketKind kind2,
                              int max_degree);

}  // namespace nichols
