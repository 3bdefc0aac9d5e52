#include "nichols/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon requires a nonempty word");
  for (int k = 1; k < w.length(); ++k) {
    if (!word_less(w, w.rotated(k))) return false;
  }
  return true;
}

std::pair<Word, Word> shirshov_decomposition(const Word& w) {
  if (w.length() < 2 || !is_lyndon(w))
    throw std::invalid_argument("Shirshov decomposition requires a Lyndon word of length >= 2");
  for (int cut = 1; cut < w.length(); ++cut) {
    Word v(std::vector<std::uint8_t>(w.letters.begin(), w.letters.begin() + cut));
    Word u(std::vector<std::uint8_t>(w.letters.begin() + cut, w.letters.end()));
    if (is_lyndon(v) && is_lyndon(u)) return {v, u};
  }
  throw std::logic_error("Lyndon word with no Shirshov decomposition");
}

FreeElement superletter(const BraidingSpec& spec, const Word& w, BracketKind kind) {
  if (w.empty() || !is_lyndon(w))
    throw std::invalid_argument("super-letters are bracketed Lyndon words");
  if (w.length() == 1) return FreeElement::from_word(w);
  auto [v, u] = shirshov_decomposition(w);
  return bracket(spec, kind, superletter(spec, v, kind), superletter(spec, u, kind));
}

std::vector<Word> standard_words(NicholsAlgebra& algebra, int m) {
  return algebra.degree_basis(m).basis_words;
}

std::vector<Word> hard_superletters(NicholsAlgebra& algebra, int max_degree) {
  std::vector<Word> out;
  for (int m = 1; m <= max_degree; ++m) {
    for (const Word& w : standard_words(algebra, m))
      if (is_lyndon(w)) out.push_back(w);
  }
  return out;
}

RootSystemReport root_system(NicholsAlgebra& algebra, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("root systems need max_degree >= 1");
  RootSystemReport report;
  report.complete_up_to = max_degree;
  std::vector<Word> hard = hard_superletters(algebra, max_degree);
  int top_root_degree = 0;
  for (const Word& w : hard) {
    DegreeVector d = w.degree(algebra.spec().rank);
    if (std::find(report.positive_roots.begin(), report.positive_roots.end(), d) ==
        report.positive_roots.end()) {
      report.positive_roots.push_back(d);
      top_root_degree = std::max(top_root_degree, total_degree(d));
    }
  }
  report.saturated = top_root_degree <= max_degree / 2;
  return report;
}

}  // namespace nichols
