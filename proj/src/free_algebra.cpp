#include "nichols/free_algebra.hpp"

#include <stdexcept>

namespace nichols {

Word Word::concat(const Word& other) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

Word Word::erased(int position) const {
  Word out = *this;
  out.letters.erase(out.letters.begin() + position);
  return out;
}

Word Word::rotated(int k) const {
  const int n = length();
  Word out;
  out.letters.reserve(n);
  for (int i = 0; i < n; ++i) out.letters.push_back(letters[(i + k) % n]);
  return out;
}

DegreeVector Word::degree(int rank) const {
  DegreeVector d(rank, 0);
  for (auto l : letters) d[l] += 1;
  return d;
}

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += " ";
    out += "x" + std::to_string(letters[i] + 1);
  }
  return out;
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                      b.letters.end());
}

FreeElement FreeElement::from_word(const Word& w, Cyclotomic coeff) {
  FreeElement e;
  e.add_term(w, coeff);
  return e;
}

void FreeElement::add_term(const Word& w, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic FreeElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

FreeElement FreeElement::operator-() const {
  FreeElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  FreeElement out = a;
  out += b;
  return out;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) { return a + (-b); }

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement operator*(const Cyclotomic& c, const FreeElement& u) {
  FreeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, uc] : u.terms_) out.add_term(w, c * uc);
  return out;
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin();
  auto jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::map<DegreeVector, FreeElement> FreeElement::homogeneous_components(int rank) const {
  std::map<DegreeVector, FreeElement> out;
  for (const auto& [w, c] : terms_) out[w.degree(rank)].add_term(w, c);
  return out;
}

std::map<int, FreeElement> FreeElement::components_by_length() const {
  std::map<int, FreeElement> out;
  for (const auto& [w, c] : terms_) out[w.length()].add_term(w, c);
  return out;
}

bool FreeElement::is_length_homogeneous(int* length) const {
  if (terms_.empty()) {
    if (length) *length = -1;
    return true;
  }
  int len = terms_.begin()->first.length();
  for (const auto& [w, c] : terms_)
    if (w.length() != len) return false;
  if (length) *length = len;
  return true;
}

std::string FreeElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      negative = q < 0;
      Rational abs_q = negative ? Rational(-q) : q;
      if (abs_q != 1 || w.empty()) coeff = abs_q.get_str();
    } else {
      // Single positive z-power term prints bare, everything else in parens.
      std::string s = c.str();
      if (s.find(' ') != std::string::npos || s[0] == '-') coeff = "(" + s + ")";
      else coeff = s;
    }
    std::string body = coeff;
    if (!w.empty()) {
      if (!body.empty()) body += " ";
      body += w.str();
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string bracket_kind_tag(BracketKind kind) {
  switch (kind) {
    case BracketKind::L: return "L";
    case BracketKind::R: return "R";
    case BracketKind::Braided: return "c";
    case BracketKind::Minus: return "-";
  }
  return "?";
}

FreeElement concat_mul(const FreeElement& u, const FreeElement& v) {
  FreeElement out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) out.add_term(wu.concat(wv), cu * cv);
  return out;
}

namespace {

// Twisted product: scalar twist(deg u, deg v) * uv, per word pair.
template <typename Twist>
FreeElement twisted_mul(const BraidingSpec& spec, const FreeElement& u, const FreeElement& v,
                        Twist&& twist) {
  FreeElement out;
  for (const auto& [wu, cu] : u.terms()) {
    DegreeVector du = wu.degree(spec.rank);
    for (const auto& [wv, cv] : v.terms()) {
      DegreeVector dv = wv.degree(spec.rank);
      out.add_term(wu.concat(wv), twist(du, dv) * cu * cv);
    }
  }
  return out;
}

}  // namespace

FreeElement circ_l(const BraidingSpec& spec, const FreeElement& u, const FreeElement& v) {
  return twisted_mul(spec, u, v,
                     [&](const DegreeVector& du, const DegreeVector& dv) {
                       return bichar_eval(spec, dv, du);
                     });
}

FreeElement circ_r(const BraidingSpec& spec, const FreeElement& u, const FreeElement& v) {
  return twisted_mul(spec, u, v,
                     [&](const DegreeVector& du, const DegreeVector& dv) {
                       return bichar_eval(spec, du, dv);
                     });
}

FreeElement bracket(const BraidingSpec& spec, BracketKind kind, const FreeElement& u,
                    const FreeElement& v) {
  switch (kind) {
    case BracketKind::L:
      return circ_l(spec, u, v) - circ_l(spec, v, u);
    case BracketKind::R:
      return circ_r(spec, u, v) - circ_r(spec, v, u);
    case BracketKind::Braided:
      return concat_mul(u, v) - twisted_mul(spec, v, u,
                                            [&](const DegreeVector& dv, const DegreeVector& du) {
                                              return bichar_eval(spec, du, dv);
                                            });
    case BracketKind::Minus:
      return concat_mul(u, v) - concat_mul(v, u);
  }
  throw std::logic_error("unknown bracket kind");
}

FreeElement ad_power(const BraidingSpec& spec, BracketKind kind, AdSide side, const FreeElement& u,
                     const FreeElement& v, int m) {
  if (m < 0) throw std::invalid_argument("ad_power requires m >= 0");
  FreeElement acc = v;
  for (int step = 0; step < m; ++step)
    acc = side == AdSide::Left ? bracket(spec, kind, u, acc) : bracket(spec, kind, acc, u);
  return acc;
}

FreeElement nested_bracket(const BraidingSpec& spec, BracketKind kind,
                           const std::vector<FreeElement>& us) {
  if (us.empty()) throw std::invalid_argument("nested_bracket requires m >= 1");
  FreeElement acc = us.back();
  for (int i = static_cast<int>(us.size()) - 2; i >= 0; --i) acc = bracket(spec, kind, us[i], acc);
  return acc;
}

FreeElement skew_derivation(const BraidingSpec& spec, int i, const FreeElement& u) {
  if (i < 0 || i >= spec.rank) throw std::invalid_argument("letter index out of range");
  FreeElement out;
  for (const auto& [w, c] : u.terms()) {
    long twist_exp = 0;  // exponent of zeta in prod_{s<t} p_{i,a_s}^{-1}
    for (int t = 0; t < w.length(); ++t) {
      int a = w.letters[t];
      if (a == i) out.add_term(w.erased(t), Cyclotomic::root_of_unity(spec.conductor, twist_exp) * c);
      twist_exp -= spec.exponent(i, a);
    }
  }
  return out;
}

FreeElement pair_with(const BraidingSpec& spec, const std::vector<int>& y_word,
                      const FreeElement& u) {
  FreeElement acc = u;
  for (auto it = y_word.rbegin(); it != y_word.rend(); ++it)
    acc = skew_derivation(spec, *it, acc);
  return acc;
}

}  // namespace nichols
