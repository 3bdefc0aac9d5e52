#pragma once

#include "nichols/free_algebra.hpp"
#include "nichols/lie_closure.hpp"
#include "nichols/nichols_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

enum class VerdictStatus { Verified, Refuted, Evidence };

std::string status_tag(VerdictStatus status);

/// Executable verdict for one named claim.  Refuted verdicts always carry a
/// concrete witness.
struct Verdict {
  std::string claim;
  std::string fingerprint;
  VerdictStatus status = VerdictStatus::Evidence;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> details;
  std::optional<std::string> witness;

  void detail(const std::string& key, const std::string& value) { details.emplace_back(key, value); }
};

/// L(V) = L(V)_R iff p_ii^2 = 1, p_ij p_ji = 1 and p_ij^3 = 1 (then both
/// equal V); confirmed in both directions at desk scale.
Verdict check_prop_5_1(NicholsAlgebra& algebra);

/// L(V) = L(V)_L iff L(V) = L-(V) iff p_ii^2 = 1 and p_ij = p_ji = 1.
Verdict check_prop_5_2(NicholsAlgebra& algebra);

/// B(V) = F + L(V)_R iff the cubed permutation-product condition holds on a
/// quantum linear space with p_ii = -1; cross-checked degree by degree.
Verdict check_prop_5_3(NicholsAlgebra& algebra, int m_max);

/// Mirror statement for L(V)_L with the uncubed condition.
Verdict check_prop_5_4(NicholsAlgebra& algebra, int m_max);

/// Nested R-bracket closed form for pairwise quasi-commuting words.
Verdict verify_lemma_3_3(NicholsAlgebra& algebra, const std::vector<Word>& words);

/// Nested L-bracket closed form for pairwise quasi-commuting words.
Verdict verify_lemma_3_8(NicholsAlgebra& algebra, const std::vector<Word>& words);

/// Aggregates over all decreasing tuples of distinct letters.
Verdict check_lemma_3_3(NicholsAlgebra& algebra);
Verdict check_lemma_3_8(NicholsAlgebra& algebra);

enum class QIdentityPart { Lemma65, Lemma66, Lemma67, All };

/// Iterated-bracket expansions, skew-derivation pairing values and
/// vanishing criteria for one (i, j, m) triple; i, j are 0-based.
Verdict verify_q_identities(NicholsAlgebra& algebra, int i, int j, int m,
                            QIdentityPart part = QIdentityPart::All);

/// Aggregate of verify_q_identities over all pairs and m <= cap/2.
Verdict check_q_identities(NicholsAlgebra& algebra, QIdentityPart part);

/// Largest m with the braided ad-power (ad x_i)^m(x_j) nonzero in B(V), or
/// nullopt when no vanishing occurs within the cap.
std::optional<int> adjoint_nilpotency(NicholsAlgebra& algebra, int i, int j);

struct ThresholdScan {
  std::optional<int> threshold;  // smallest m with l_i^m[j] = 0 in B(V)
  int scanned_up_to = 0;
};

/// Linear scan with the Nichols zero oracle; kind must be L or R.
ThresholdScan vanishing_threshold(NicholsAlgebra& algebra, int i, int j, BracketKind kind);

/// Vanishing thresholds of the L/R ad-towers against the stated criteria.
Verdict check_prop_6_10(NicholsAlgebra& algebra);

/// Explicit basis of L(V)_R for rank 2 with p_11 = p_22 = -1.
Verdict check_theorem_4_3(NicholsAlgebra& algebra);

/// Explicit basis of L(V)_L for rank 2 with p_11 = p_22 = -1.
Verdict check_theorem_4_5(NicholsAlgebra& algebra);

/// Joint finiteness evidence for B(V), L(V)_L, L(V)_R up to max_degree.
Verdict finiteness_report(NicholsAlgebra& algebra, int max_degree);

}  // namespace nichols
