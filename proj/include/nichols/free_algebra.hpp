#pragma once

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nichols {

/// A word over the letters x_1..x_n, stored 0-based.  The empty word is 1.
struct Word {
  std::vector<std::uint8_t> letters;

  Word() = default;
  explicit Word(std::vector<std::uint8_t> ls) : letters(std::move(ls)) {}
  static Word letter(int i) { return Word({static_cast<std::uint8_t>(i)}); }

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  Word concat(const Word& other) const;
  Word erased(int position) const;
  Word rotated(int k) const;
  DegreeVector degree(int rank) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// Rendering as spaced letters "x1 x2 x1"; the empty word renders "1".
  std::string str() const;
};

/// The module-wide word order: lexicographic on letter indices with
/// x_1 < x_2 < ... and a proper prefix comparing smaller.
bool word_less(const Word& a, const Word& b);

struct WordDescending {
  bool operator()(const Word& a, const Word& b) const { return word_less(b, a); }
};

/// A finite scalar-weighted sum of words, in canonical sparse form (no zero
/// coefficients stored).  Terms iterate in descending word order.
class FreeElement {
public:
  using TermMap = std::map<Word, Cyclotomic, WordDescending>;

  FreeElement() = default;
  static FreeElement zero() { return FreeElement(); }
  static FreeElement one() { return from_word(Word()); }
  static FreeElement letter(int i) { return from_word(Word::letter(i)); }
  static FreeElement from_word(const Word& w, Cyclotomic coeff = Cyclotomic(1));
  static FreeElement scalar(const Cyclotomic& c) { return from_word(Word(), c); }

  void add_term(const Word& w, const Cyclotomic& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Cyclotomic coefficient(const Word& w) const;

  FreeElement operator-() const;
  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o) { return *this += -o; }
  friend FreeElement operator*(const Cyclotomic& c, const FreeElement& u);

  friend bool operator==(const FreeElement& a, const FreeElement& b);
  friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

  /// Split into Z^n-homogeneous components.
  std::map<DegreeVector, FreeElement> homogeneous_components(int rank) const;
  /// Split by total degree (word length).
  std::map<int, FreeElement> components_by_length() const;
  /// All terms share one word length; -1 when zero.
  bool is_length_homogeneous(int* length = nullptr) const;

  /// Expression-grammar compatible rendering; parses back to an equal value.
  std::string str() const;

private:
  TermMap terms_;
};

enum class BracketKind { L, R, Braided, Minus };
enum class AdSide { Left, Right };

/// Parse/print tags for bracket kinds ("L", "R", "c", "-").
std::string bracket_kind_tag(BracketKind kind);

/// Word concatenation, extended bilinearly.
FreeElement concat_mul(const FreeElement& u, const FreeElement& v);

/// u o_L v = p_{v,u} uv and u o_R v = p_{u,v} uv on homogeneous components.
FreeElement circ_l(const BraidingSpec& spec, const FreeElement& u, const FreeElement& v);
FreeElement circ_r(const BraidingSpec& spec, const FreeElement& u, const FreeElement& v);

/// The four bracket operations on homogeneous components:
///   L: p_{v,u} uv - p_{u,v} vu        R: p_{u,v} uv - p_{v,u} vu
///   Braided: uv - p_{u,v} vu          Minus: uv - vu
FreeElement bracket(const BraidingSpec& spec, BracketKind kind, const FreeElement& u,
                    const FreeElement& v);

/// m-fold iterated bracket: left l_u^m[v] = [u, l_u^{m-1}[v]], right
/// r_u^m[v] = [r_u^{m-1}[v], u]; m = 0 returns v.
FreeElement ad_power(const BraidingSpec& spec, BracketKind kind, AdSide side, const FreeElement& u,
                     const FreeElement& v, int m);

/// Right-nested bracket [u_1, [u_2, ... [u_{m-1}, u_m]...]]; m >= 1.
FreeElement nested_bracket(const BraidingSpec& spec, BracketKind kind,
                           const std::vector<FreeElement>& us);

/// The skew derivation realizing the dual letter y_i:
/// d_i(1) = 0, d_i(x_k w) = delta_ik w + p_ik^{-1} x_k d_i(w).
FreeElement skew_derivation(const BraidingSpec& spec, int i, const FreeElement& u);

/// <y_{a_1}...y_{a_k}, u> — iterated skew derivations, the rightmost
/// y-letter acting first.
FreeElement pair_with(const BraidingSpec& spec, const std::vector<int>& y_word,
                      const FreeElement& u);

}  // namespace nichols
