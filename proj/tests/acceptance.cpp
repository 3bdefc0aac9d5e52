// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (tolerances are zero).  Exits nonzero when any criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "nichols/checkers.hpp"
#include "nichols/lie_closure.hpp"
#include "nichols/lyndon.hpp"
#include "nichols/nichols_algebra.hpp"
#include "nichols/qcombinatorics.hpp"

using namespace nichols;

namespace {

FreeElement x(int i) { return FreeElement::letter(i); }

Word alternating(int first, int length) {
  Word w;
  for (int s = 0; s < length; ++s)
    w.letters.push_back(static_cast<std::uint8_t>(s % 2 == 0 ? first : 1 - first));
  return w;
}

FreeElement alt_elem(int first, int length) { return FreeElement::from_word(alternating(first, length)); }

std::string detail_of(const Verdict& v, const std::string& key) {
  for (const auto& [k, value] : v.details)
    if (k == key) return value;
  return "";
}

std::vector<Word> all_words(int rank, int length) {
  std::vector<Word> words = {Word()};
  for (int step = 0; step < length; ++step) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (int l = 0; l < rank; ++l) next.push_back(w.concat(Word::letter(l)));
    words = std::move(next);
  }
  return words;
}

std::vector<Cyclotomic> roots_in_q24(int count, unsigned seed) {
  static const int conductors[] = {1, 2, 3, 4, 6, 8, 12, 24};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 7);
  std::vector<Cyclotomic> out;
  while (static_cast<int>(out.size()) < count) {
    int n = conductors[pick(rng)];
    std::uniform_int_distribution<int> power(0, n - 1);
    out.push_back(Cyclotomic::root_of_unity(n, power(rng)));
  }
  return out;
}

// The rank-2 panel with p_11 = p_22 = -1 and ord(p_12 p_21) = m, both
// Theorem 4.3 branches per m.
struct Rank2Case {
  BraidingSpec spec;
  int m;
  std::string branch43;  // "3m-1" or "3m"
  std::string branch45;
  int dim43;
  int dim45;
};

const std::vector<Rank2Case>& rank2_panel() {
  static const std::vector<Rank2Case> panel = {
      {{2, 8, {{4, 2}, {2, 4}}, 8, {}}, 2, "3m-1", "3m-1", 5, 5},
      {{2, 2, {{1, 0}, {1, 1}}, 8, {}}, 2, "3m", "3m", 6, 6},
      {{2, 6, {{3, 0}, {2, 3}}, 8, {}}, 3, "3m-1", "3m-1", 8, 8},
      {{2, 12, {{6, 1}, {3, 6}}, 8, {}}, 3, "3m", "3m", 9, 9},
      {{2, 8, {{4, 1}, {1, 4}}, 8, {}}, 4, "3m-1", "3m-1", 11, 11},
      {{2, 4, {{2, 1}, {0, 2}}, 8, {}}, 4, "3m", "3m", 12, 12},
      {{2, 10, {{5, 2}, {0, 5}}, 10, {}}, 5, "3m-1", "3m-1", 14, 14},
      {{2, 10, {{5, 1}, {1, 5}}, 10, {}}, 5, "3m", "3m", 15, 15},
      {{2, 12, {{6, 1}, {1, 6}}, 12, {}}, 6, "3m-1", "3m-1", 17, 17},
      {{2, 6, {{3, 1}, {0, 3}}, 12, {}}, 6, "3m", "3m", 18, 18},
  };
  return panel;
}

std::vector<NicholsAlgebra>& panel_algebras() {
  // One degree past 2m so that the zero Nichols slice is visible.
  static std::vector<NicholsAlgebra> algebras = [] {
    std::vector<NicholsAlgebra> out;
    for (const auto& entry : rank2_panel()) out.emplace_back(entry.spec, 2 * entry.m + 1);
    return out;
  }();
  return algebras;
}

bool criterion_1(std::string& note) {
  int checked = 0;
  for (std::size_t idx = 0; idx < rank2_panel().size(); ++idx) {
    const Rank2Case& entry = rank2_panel()[idx];
    if (entry.m > 5) continue;
    NicholsAlgebra& algebra = panel_algebras()[idx];
    const int m = entry.m;
    std::vector<int> dims = algebra.dims(2 * m);
    int total = 0;
    for (int d : dims) total += d;
    if (total != 4 * m) return false;
    for (int d = 0; d <= 2 * m; ++d) {
      std::vector<Word> expected;
      if (d == 0) expected = {Word()};
      else if (d == 2 * m) expected = {alternating(1, 2 * m)};
      else if (d % 2 == 1) expected = {alternating(1, d), alternating(0, d)};
      else expected = {alternating(0, d), alternating(1, d)};
      std::vector<Word> got = algebra.degree_basis(d).basis_words;
      auto desc = [](const Word& a, const Word& b) { return word_less(b, a); };
      std::sort(expected.begin(), expected.end(), desc);
      std::sort(got.begin(), got.end(), desc);
      if (expected != got) return false;
    }
    ++checked;
  }
  note = std::to_string(checked) + " braidings, dims 4m and the four shape families match";
  return checked >= 4;
}

bool criterion_2(std::string& note) {
  std::set<std::string> branches;
  for (std::size_t idx = 0; idx < rank2_panel().size(); ++idx) {
    const Rank2Case& entry = rank2_panel()[idx];
    Verdict v = check_theorem_4_3(panel_algebras()[idx]);
    if (v.status != VerdictStatus::Verified) return false;
    if (detail_of(v, "branch") != entry.branch43) return false;
    if (detail_of(v, "total_dim") != std::to_string(entry.dim43)) return false;
    branches.insert(entry.branch43);
  }
  note = std::to_string(rank2_panel().size()) + " specs, both branches, spans match degreewise";
  return branches.size() == 2;
}

bool criterion_3(std::string& note) {
  std::set<std::string> branches;
  for (std::size_t idx = 0; idx < rank2_panel().size(); ++idx) {
    const Rank2Case& entry = rank2_panel()[idx];
    Verdict v = check_theorem_4_5(panel_algebras()[idx]);
    if (v.status != VerdictStatus::Verified) return false;
    if (detail_of(v, "branch") != entry.branch45) return false;
    if (detail_of(v, "total_dim") != std::to_string(entry.dim45)) return false;
    branches.insert(entry.branch45);
  }
  note = std::to_string(rank2_panel().size()) + " specs, both branches, spans match degreewise";
  return branches.size() == 2;
}

bool criterion_4(std::string& note) {
  int identities = 0;
  for (std::size_t idx = 0; idx < rank2_panel().size(); ++idx) {
    NicholsAlgebra& algebra = panel_algebras()[idx];
    const BraidingSpec& spec = algebra.spec();
    const int cap = algebra.cap();
    const Cyclotomic p12 = spec.p(0, 1), p21 = spec.p(1, 0), one(1), minus_two(-2);
    for (BracketKind kind : {BracketKind::R, BracketKind::L}) {
      // 4.2(i)/4.4(i): the alternating right-multiplication towers.
      for (int i = 0; 2 * i + 1 <= cap; ++i) {
        FreeElement t1 = x(0);
        FreeElement t2 = x(1);
        for (int s = 0; s < i; ++s) {
          t1 = bracket(spec, kind, bracket(spec, kind, t1, x(1)), x(0));
          t2 = bracket(spec, kind, bracket(spec, kind, t2, x(0)), x(1));
        }
        Cyclotomic c = minus_two.pow(i) * (p12 * p21).pow(i * (i + 1) / 2);
        FreeElement rhs1 = c * alt_elem(0, 2 * i + 1);
        FreeElement rhs2 = c * alt_elem(1, 2 * i + 1);
        if (!algebra.is_zero(t1 - rhs1)) return false;
        if (!algebra.is_zero(t2 - rhs2)) return false;
        identities += 2;
      }
      // 4.2(iii)/4.4(iii): alternating left-nested towers with 2k-1 brackets.
      FreeElement e = bracket(spec, kind, x(0), x(1));
      for (int k = 1; 2 * k <= cap && 2 * k - 1 <= 9; ++k) {
        if (k > 1)
          e = bracket(spec, kind, bracket(spec, kind, e, x(0)), x(1));
        Cyclotomic front = kind == BracketKind::R ? p12 : p21;
        Cyclotomic back = kind == BracketKind::R ? p21 : p12;
        FreeElement rhs = Cyclotomic(2).pow(k - 1) * (p12 * p21).pow(k * (k - 1) / 2) *
                          (front.pow(k) * alt_elem(0, 2 * k) - back.pow(k) * alt_elem(1, 2 * k));
        if (!algebra.is_zero(e - rhs)) return false;
        ++identities;
      }
      // 4.2(iv)/4.4(iv): pairing values of the even elements.
      for (int i = 1; 2 * i <= cap; ++i) {
        Cyclotomic front = kind == BracketKind::R ? p12 : p21;
        Cyclotomic back = kind == BracketKind::R ? p21 : p12;
        FreeElement delta = front.pow(i) * alt_elem(0, 2 * i) - back.pow(i) * alt_elem(1, 2 * i);
        FreeElement lhs1 = pair_with(spec, {0}, delta);
        FreeElement lhs2 = pair_with(spec, {1}, delta);
        FreeElement rhs1, rhs2;
        if (kind == BracketKind::R) {
          rhs1 = p12.pow(i) * (one + (-(p12.pow(-2) * p21)).pow(i)) * alt_elem(1, 2 * i - 1);
          rhs2 = -p21.pow(i) * (one + (-(p12 * p21.pow(-2))).pow(i)) * alt_elem(0, 2 * i - 1);
        } else {
          rhs1 = Cyclotomic(-1).pow(i) * (one + (-p21).pow(i)) * alt_elem(1, 2 * i - 1);
          rhs2 = -(Cyclotomic(-1).pow(i)) * (one + (-p12).pow(i)) * alt_elem(0, 2 * i - 1);
        }
        if (!algebra.is_zero(lhs1 - rhs1)) return false;
        if (!algebra.is_zero(lhs2 - rhs2)) return false;
        identities += 2;
      }
    }
  }
  note = std::to_string(identities) + " closed forms equal direct evaluation in B(V)";
  return true;
}

bool criterion_5(std::string& note) {
  std::vector<BraidingSpec> panel = {
      {2, 24, {{5, 7}, {11, 13}}, 10, {}},   // generic
      {2, 24, {{0, 7}, {11, 8}}, 10, {}},    // p_11 = 1
      {2, 24, {{12, 8}, {16, 12}}, 10, {}},  // p_12 p_21 = 1 with p_12 in R_3
      {2, 24, {{12, 0}, {0, 12}}, 10, {}},   // p_12 = p_21 = 1
      {2, 24, {{8, 0}, {3, 16}}, 10, {}},    // p_22 of order 3
  };
  std::mt19937 rng(20240809);
  std::uniform_int_distribution<int> entry(0, 23);
  while (panel.size() < 8)
    panel.push_back({2, 24, {{entry(rng), entry(rng)}, {entry(rng), entry(rng)}}, 10, {}});
  int cases = 0;
  for (const auto& spec : panel) {
    NicholsAlgebra algebra(spec, 10);
    for (int i = 0; i < 2; ++i)
      for (int m = 1; m <= 5; ++m) {
        Verdict v = verify_q_identities(algebra, i, 1 - i, m);
        if (v.status != VerdictStatus::Verified) {
          note = "failed: " + v.summary + (v.witness ? " " + *v.witness : "");
          return false;
        }
        ++cases;
      }
  }
  note = std::to_string(cases) + " (spec, i, j, m) cases over the zeta_24 panel";
  return true;
}

bool criterion_6(std::string& note) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> diag(0, 11);
  int specs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    BraidingSpec spec;
    spec.rank = n;
    spec.conductor = 12;
    spec.degree_cap = 4;
    spec.exponents.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) spec.exponents[i][i] = diag(rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int k = diag(rng);
        spec.exponents[i][j] = k;
        spec.exponents[j][i] = (12 - k) % 12;
      }
    NicholsAlgebra algebra(spec);
    Verdict v3 = check_lemma_3_3(algebra);
    Verdict v8 = check_lemma_3_8(algebra);
    if (v3.status == VerdictStatus::Refuted || v8.status == VerdictStatus::Refuted) return false;
    if (v3.status != VerdictStatus::Verified || v8.status != VerdictStatus::Verified) return false;
    ++specs;
  }
  note = std::to_string(specs) + " random quantum linear spaces (n = 2..4, all tuples m <= n)";
  return specs >= 20;
}

bool criterion_7(std::string& note) {
  const std::vector<BraidingSpec> panel = {
      {2, 8, {{4, 2}, {2, 4}}, 6, {}},   {2, 6, {{3, 1}, {1, 3}}, 6, {}},
      {2, 4, {{2, 1}, {0, 2}}, 6, {}},   {2, 10, {{5, 1}, {1, 5}}, 6, {}},
      {2, 12, {{5, 7}, {2, 9}}, 6, {}},  {2, 6, {{0, 2}, {0, 3}}, 6, {}},
      {2, 6, {{3, 2}, {4, 3}}, 6, {}},   {2, 24, {{5, 7}, {11, 13}}, 6, {}},
      {2, 24, {{0, 7}, {11, 8}}, 6, {}}, {2, 4, {{2, 1}, {1, 2}}, 6, {}},
  };
  long words_checked = 0;
  for (const auto& spec : panel) {
    NicholsAlgebra algebra(spec);
    for (int length = 1; length <= 6; ++length)
      for (const Word& w : all_words(2, length)) {
        FreeElement u = FreeElement::from_word(w);
        if (algebra.is_zero(u) != algebra.derivation_zero(u)) return false;
        ++words_checked;
      }
  }
  note = std::to_string(panel.size()) + " specs, " + std::to_string(words_checked) +
         " words, zero disagreements";
  return true;
}

bool criterion_8(std::string& note) {
  struct Case {
    BraidingSpec spec;
    bool condition;
  };
  const std::vector<Case> p51 = {
      {{2, 6, {{3, 2}, {4, 3}}, 6, {}}, true},
      {{1, 2, {{1}}, 6, {}}, true},
      {{2, 6, {{0, 2}, {4, 0}}, 6, {}}, true},
      {{2, 8, {{4, 2}, {2, 4}}, 6, {}}, false},
      {{2, 8, {{4, 1}, {7, 4}}, 6, {}}, false},
  };
  for (const auto& c : p51) {
    NicholsAlgebra algebra(c.spec);
    Verdict v = check_prop_5_1(algebra);
    if (v.status != VerdictStatus::Verified) return false;
    if (detail_of(v, "condition") != (c.condition ? "true" : "false")) return false;
    if (!c.condition) {
      if (!v.witness) return false;
      int degree = std::stoi(detail_of(v, "difference_degree"));
      if (degree > 3) return false;
    }
  }
  const std::vector<Case> p52 = {
      {{2, 2, {{1, 0}, {0, 1}}, 6, {}}, true},
      {{1, 4, {{1}}, 6, {}}, false},  // p_11 = i: p_11^2 != 1
      {{2, 6, {{3, 2}, {4, 3}}, 6, {}}, false},
      {{2, 8, {{4, 2}, {2, 4}}, 6, {}}, false},
  };
  for (const auto& c : p52) {
    NicholsAlgebra algebra(c.spec);
    Verdict v = check_prop_5_2(algebra);
    if (v.status != VerdictStatus::Verified) return false;
    if (detail_of(v, "condition") != (c.condition ? "true" : "false")) return false;
    if (!c.condition) {
      if (!v.witness) return false;
      int degree = std::stoi(detail_of(v, "difference_degree"));
      if (degree > 3) return false;
    }
  }
  note = "both directions on " + std::to_string(p51.size() + p52.size()) +
         " specs; witnesses in degree <= 3";
  return true;
}

bool criterion_9(std::string& note) {
  const std::vector<BraidingSpec> panel = {
      {2, 8, {{4, 1}, {7, 4}}, 4, {}},
      {2, 6, {{3, 2}, {4, 3}}, 4, {}},
      {3, 8, {{4, 1, 3}, {7, 4, 2}, {5, 6, 4}}, 4, {}},
      {3, 24, {{12, 3, 9}, {21, 12, 8}, {15, 16, 12}}, 4, {}},
  };
  std::set<std::string> outcomes3, outcomes4;
  for (const auto& spec : panel) {
    NicholsAlgebra algebra(spec);
    Verdict v3 = check_prop_5_3(algebra, spec.rank);
    Verdict v4 = check_prop_5_4(algebra, spec.rank);
    if (v3.status != VerdictStatus::Verified || v4.status != VerdictStatus::Verified) return false;
    outcomes3.insert(detail_of(v3, "condition"));
    outcomes4.insert(detail_of(v4, "condition"));
  }
  note = "rank 2 and rank 3 quantum linear spaces; condition always matches the direct sum";
  return outcomes3.size() == 2;  // both outcomes exercised for 5.3
}

bool criterion_10(std::string& note) {
  const std::vector<BraidingSpec> panel = {
      {2, 8, {{4, 1}, {7, 4}}, 8, {}},   // (i), thresholds 2/2
      {2, 6, {{2, 1}, {5, 3}}, 8, {}},   // (i), ord(p_11) = 3
      {2, 6, {{3, 2}, {4, 3}}, 8, {}},   // (i), R_3 degeneracy: R threshold 1
      {2, 12, {{6, 5}, {7, 4}}, 8, {}},  // (i), mixed diagonal orders
      {2, 6, {{0, 1}, {5, 3}}, 8, {}},   // (i), ord(p_11) = 1: never vanishes
      {2, 6, {{2, 2}, {0, 3}}, 8, {}},   // (ii), m_12 = 2, bound 5
      {2, 4, {{2, 1}, {1, 2}}, 8, {}},   // (ii), m_12 = 1, bound 3
      {2, 6, {{2, 1}, {1, 3}}, 8, {}},   // (ii), m_12 = 2, bound 5
  };
  int specs = 0;
  for (const auto& spec : panel) {
    NicholsAlgebra algebra(spec);
    Verdict v = check_prop_6_10(algebra);
    if (v.status != VerdictStatus::Verified) {
      note = "failed on " + spec.fingerprint() + ": " + v.summary +
             (v.witness ? " [" + *v.witness + "]" : "");
      return false;
    }
    ++specs;
  }
  note = std::to_string(specs) + " specs across hypotheses (i) and (ii), incl. the R_3 case";
  return specs >= 8;
}

bool criterion_11(std::string& note) {
  for (std::size_t idx = 0; idx < rank2_panel().size(); ++idx) {
    const Rank2Case& entry = rank2_panel()[idx];
    NicholsAlgebra& algebra = panel_algebras()[idx];
    Verdict v = finiteness_report(algebra, algebra.cap());
    if (v.status != VerdictStatus::Verified) return false;
    if (detail_of(v, "outcome") != "joint-stabilization") return false;
    if (detail_of(v, "total_B") != std::to_string(4 * entry.m)) return false;
  }
  const std::vector<BraidingSpec> growing = {
      {2, 6, {{0, 2}, {0, 3}}, 8, {}},
      {2, 4, {{0, 1}, {0, 2}}, 8, {}},
  };
  for (const auto& spec : growing) {
    NicholsAlgebra algebra(spec);
    Verdict v = finiteness_report(algebra, 8);
    if (v.status != VerdictStatus::Evidence) return false;
    if (detail_of(v, "outcome") != "growth-to-cap") return false;
  }
  note = "joint stabilization on the finite panel; joint growth-to-cap on 2 infinite specs";
  return true;
}

bool criterion_12(std::string& note) {
  const std::vector<BraidingSpec> panel = {
      {2, 8, {{4, 2}, {2, 4}}, 6, {}},  {2, 6, {{3, 1}, {1, 3}}, 6, {}},
      {2, 12, {{5, 7}, {2, 9}}, 6, {}}, {2, 24, {{5, 7}, {11, 13}}, 6, {}},
      {2, 6, {{0, 2}, {0, 3}}, 6, {}},
  };
  int bracketings = 0;
  for (const auto& spec : panel) {
    for (int length = 1; length <= 5; ++length)
      for (const Word& l : all_words(2, length)) {
        if (!is_lyndon(l)) continue;
        for (BracketKind kind : {BracketKind::L, BracketKind::R}) {
          FreeElement bracketed = superletter(spec, l, kind);
          if (bracketed.coefficient(l).is_zero()) return false;
          for (const auto& [w, c] : bracketed.terms()) {
            if (w.length() != l.length()) return false;
            if (word_less(w, l)) return false;
          }
          ++bracketings;
        }
      }
  }
  note = std::to_string(bracketings) + " bracketed Lyndon words keep their leading term";
  return true;
}

bool criterion_13(std::string& note) {
  std::vector<Cyclotomic> roots = roots_in_q24(50, 1291);
  for (const Cyclotomic& a : roots) {
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k)
        if (!(gauss_binom(m, k, a) == gauss_binom(m, m - k, a))) return false;
    for (int m = 1; m <= 8; ++m)
      for (int k = 1; k <= m; ++k)
        if (!(a.pow(k - 1) * gauss_binom(m, k, a) + a.pow(m) * gauss_binom(m, k - 1, a) ==
              a.pow(k - 1) * gauss_binom(m + 1, k, a)))
          return false;
    for (int m = 1; m <= 8; ++m) {
      Cyclotomic sum;
      for (int k = 0; k <= m; ++k) {
        Cyclotomic term = Cyclotomic(Rational(binomial(m, k))) * quantum_integer(m - k, a);
        sum += k % 2 == 0 ? term : -term;
      }
      if (!(sum == (a - Cyclotomic(1)).pow(m - 1))) return false;
    }
  }
  std::mt19937 rng(5150);
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    Cyclotomic a = roots[pick(rng)] + roots[pick(rng)];
    Cyclotomic b = roots[pick(rng)] - roots[pick(rng)];
    Cyclotomic c = roots[pick(rng)];
    if (!((a * b) * c == a * (b * c))) return false;
    if (!(a * (b + c) == a * b + a * c)) return false;
    if (!a.is_zero() && !(a * a.inverse()).is_one()) return false;
  }
  note = "Eq.(1), Eq.(2) and the alternating-sum identity over 50 roots; field axioms pass";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* text;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "rank-2 p_ii=-1 panel: dim B(V) = 4m and standard words match the four shapes",
       criterion_1},
      {2, "Theorem 4.3: dim L(V)_R = 3m-1 / 3m per branch and P_1 spans the closure", criterion_2},
      {3, "Theorem 4.5: dim L(V)_L = 3m-1 / 3m per branch and P_2 spans the closure", criterion_3},
      {4, "Lemmas 4.2/4.4 (i)(iii)(iv): closed forms equal direct evaluation", criterion_4},
      {5, "Lemmas 6.5-6.7: every identity holds exactly on the zeta_24 panel",
       criterion_5},
      {6, "Lemmas 3.3/3.8: nested-bracket closed forms on random quantum linear spaces",
       criterion_6},
      {7, "oracle cross-validation: symmetrizer kernel vs skew-derivation test", criterion_7},
      {8, "Propositions 5.1/5.2: both directions with degree <= 3 witnesses", criterion_8},
      {9, "Propositions 5.3/5.4: permutation condition matches the direct sum", criterion_9},
      {10, "Proposition 6.10: vanishing thresholds match the stated criteria", criterion_10},
      {11, "Theorem 6.15: joint stabilization vs joint growth-to-cap", criterion_11},
      {12, "Lemma 6.3: bracketed Lyndon words keep a nonzero leading term", criterion_12},
      {13, "scalar layer: Gaussian-binomial identities and field axioms", criterion_13},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = criterion.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": " << criterion.text;
    if (!note.empty()) std::cout << " -- " << note;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  else std::cout << "all 13 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
