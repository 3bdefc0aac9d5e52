#pragma once

#include "nichols/free_algebra.hpp"
#include "nichols/nichols_algebra.hpp"

#include <utility>
#include <vector>

namespace nichols {

/// A word is Lyndon when it is strictly smaller than every proper rotation.
bool is_lyndon(const Word& w);

/// Unique factorization w = v u into Lyndon words with v shortest; requires
/// w Lyndon of length >= 2.
std::pair<Word, Word> shirshov_decomposition(const Word& w);

/// [x_i] = x_i; [w] = bracket([v], [u]) along the Shirshov decomposition
/// w = v u.  The braided commutator is the default bracketing.
FreeElement superletter(const BraidingSpec& spec, const Word& w,
                        BracketKind kind = BracketKind::Braided);

/// Standard words of total degree m (the degree basis of B(V)).
std::vector<Word> standard_words(NicholsAlgebra& algebra, int m);

/// Standard Lyndon words of every degree 1..max_degree.
std::vector<Word> hard_superletters(NicholsAlgebra& algebra, int max_degree);

struct RootSystemReport {
  std::vector<DegreeVector> positive_roots;  // sorted by total degree, then word order
  int complete_up_to = 0;
  bool saturated = false;  // no roots in the top half of the scanned range
};

RootSystemReport root_system(NicholsAlgebra& algebra, int max_degree);

}  // namespace nichols
