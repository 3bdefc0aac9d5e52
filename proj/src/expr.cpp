#include "nichols/expr.hpp"

#include <cctype>

namespace nichols {

namespace {

class Parser {
public:
  Parser(const std::string& src, const BraidingSpec& spec) : src_(src), spec_(spec) {}

  FreeElement run() {
    FreeElement e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected ") + what, pos_);
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = pos_ < src_.size() && src_[pos_] == '-';
    if (negative) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected an integer", start);
    return std::stol(src_.substr(start, pos_ - start));
  }

  FreeElement parse_expr() {
    FreeElement acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += parse_term();
      } else if (c == '-') {
        ++pos_;
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    char c = peek();
    return c == 'x' || c == 'z' || c == '(' || c == '[' || c == '<' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  FreeElement parse_term() {
    bool negative = false;
    while (consume('-')) negative = !negative;
    FreeElement acc = parse_factor();
    while (starts_factor()) acc = concat_mul(acc, parse_factor());
    return negative ? -acc : acc;
  }

  FreeElement parse_factor() {
    FreeElement base = parse_primary();
    if (peek() == '^') {
      ++pos_;
      long e = parse_int();
      if (e < 0) throw ParseError("element powers must be nonnegative", pos_);
      FreeElement acc = FreeElement::one();
      for (long s = 0; s < e; ++s) acc = concat_mul(acc, base);
      return acc;
    }
    return base;
  }

  int parse_letter_index(char prefix) {
    ++pos_;  // past the prefix letter
    std::size_t at = pos_;
    long index = parse_int();
    if (index < 1 || index > spec_.rank)
      throw ParseError(std::string(1, prefix) + std::to_string(index) + " is out of range (n = " +
                           std::to_string(spec_.rank) + ")",
                       at);
    return static_cast<int>(index - 1);
  }

  FreeElement parse_primary() {
    char c = peek();
    if (c == 'x') return FreeElement::letter(parse_letter_index('x'));
    if (c == 'z') {
      ++pos_;
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int();
      }
      return FreeElement::scalar(Cyclotomic::root_of_unity(spec_.conductor, e));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_int();
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        long den = parse_int();
        if (den == 0) throw ParseError("zero denominator", at);
        return FreeElement::scalar(Cyclotomic::rational(num, den));
      }
      return FreeElement::scalar(Cyclotomic(num));
    }
    if (c == '(') {
      ++pos_;
      FreeElement inner = parse_expr();
      expect(')', "')'");
      return inner;
    }
    if (c == '[') {
      ++pos_;
      FreeElement lhs = parse_expr();
      expect(',', "','");
      FreeElement rhs = parse_expr();
      expect(']', "']'");
      expect('_', "'_' with a bracket kind");
      char kind_char = peek();
      ++pos_;
      BracketKind kind;
      switch (kind_char) {
        case 'L': kind = BracketKind::L; break;
        case 'R': kind = BracketKind::R; break;
        case 'c': kind = BracketKind::Braided; break;
        case '-': kind = BracketKind::Minus; break;
        default: throw ParseError("bracket kind must be one of L, R, c, -", pos_ - 1);
      }
      return bracket(spec_, kind, lhs, rhs);
    }
    if (c == '<') {
      ++pos_;
      std::vector<int> yword;
      while (peek() == 'y') {
        int index = parse_letter_index('y');
        long e = 1;
        if (peek() == '^') {
          ++pos_;
          e = parse_int();
          if (e < 0) throw ParseError("y powers must be nonnegative", pos_);
        }
        for (long s = 0; s < e; ++s) yword.push_back(index);
      }
      if (yword.empty()) throw ParseError("pairing needs at least one y letter", pos_);
      expect(',', "','");
      FreeElement arg = parse_expr();
      expect('>', "'>'");
      return pair_with(spec_, yword, arg);
    }
    throw ParseError("expected a letter, scalar, parenthesis, bracket or pairing", pos_);
  }

  const std::string& src_;
  const BraidingSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeElement parse_element(const std::string& source, const BraidingSpec& spec) {
  return Parser(source, spec).run();
}

}  // namespace nichols
