#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nichols/checkers.hpp"
#include "nichols/linalg.hpp"
#include "nichols/nichols_algebra.hpp"

#include <random>

using namespace nichols;

namespace {

const BraidingSpec kM2{2, 8, {{4, 2}, {2, 4}}, 8, {}};
const BraidingSpec kM3{2, 6, {{3, 1}, {1, 3}}, 8, {}};

FreeElement x(int i) { return FreeElement::letter(i); }

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.letters.push_back(static_cast<std::uint8_t>(l));
  return w;
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

}  // namespace

TEST_CASE("braiding on tensor slots") {
  NicholsAlgebra algebra(kM2);
  FreeElement x12 = FreeElement::from_word(make_word({0, 1}));
  CHECK(algebra.apply_braiding(2, 1, x12, false) ==
        kM2.p(0, 1) * FreeElement::from_word(make_word({1, 0})));
  CHECK(algebra.apply_braiding(2, 1, x12, true) ==
        kM2.p(1, 0).inverse() * FreeElement::from_word(make_word({1, 0})));
  CHECK(algebra.apply_braiding(2, 1, algebra.apply_braiding(2, 1, x12, false), true) == x12);
  FreeElement w3 = FreeElement::from_word(make_word({0, 1, 0}));
  CHECK(algebra.apply_braiding(3, 2, w3, false) ==
        kM2.p(1, 0) * FreeElement::from_word(make_word({0, 0, 1})));
}

TEST_CASE("symmetrizer in degree 2") {
  NicholsAlgebra algebra(kM2);
  SymmetrizerMatrix s2 = algebra.build_symmetrizer(2);
  CHECK(s2.degree == 2);
  CHECK(s2.columns.size() == 4);
  // S_2(x_i x_i) = (1 + q_ii^{-1}) x_i x_i, zero at q_ii = -1.
  CHECK(s2.columns.at(make_word({0, 0})).is_zero());
  CHECK(s2.columns.at(make_word({0, 1})) ==
        FreeElement::from_word(make_word({0, 1})) +
            kM2.p(1, 0).inverse() * FreeElement::from_word(make_word({1, 0})));
  BraidingSpec generic{2, 12, {{5, 7}, {2, 9}}, 8, {}};
  NicholsAlgebra g(generic);
  CHECK(g.build_symmetrizer(2).columns.at(make_word({1, 1})) ==
        (Cyclotomic(1) + generic.p(1, 1).inverse()) * FreeElement::from_word(make_word({1, 1})));
  CHECK(g.build_symmetrizer(1).columns.at(make_word({0})) == x(0));
}

TEST_CASE("symmetrizer ranks equal the degree dimensions") {
  BraidingSpec generic{2, 12, {{5, 7}, {2, 9}}, 4, {}};
  NicholsAlgebra algebra(generic);
  for (int m = 1; m <= 4; ++m) {
    SymmetrizerMatrix sm = algebra.build_symmetrizer(m);
    RowSpace space(static_cast<int>(sm.columns.size()));
    std::map<Word, int, WordDescending> index;
    int next = 0;
    for (const auto& [w, image] : sm.columns) index.emplace(w, next++);
    for (const auto& [w, image] : sm.columns) {
      std::vector<Cyclotomic> row(sm.columns.size(), Cyclotomic());
      for (const auto& [iw, ic] : image.terms()) row[index.at(iw)] = ic;
      space.insert(std::move(row));
    }
    CHECK(space.rank() == algebra.degree_basis(m).dimension());
  }
}

TEST_CASE("nichols dimensions") {
  NicholsAlgebra m2(kM2);
  CHECK(m2.dims(8) == std::vector<int>{1, 2, 2, 2, 1, 0, 0, 0, 0});
  BraidingSpec one{1, 2, {{1}}, 8, {}};
  NicholsAlgebra n1(one);
  CHECK(n1.dims(3) == std::vector<int>{1, 1, 0, 0});
  NicholsAlgebra m3(kM3);
  std::vector<int> dims = m3.dims(8);
  int total = 0;
  for (int d : dims) total += d;
  CHECK(total == 12);  // 4m with m = 3
}

TEST_CASE("degree bases select the greatest independent words") {
  NicholsAlgebra algebra(kM2);
  CHECK(algebra.degree_basis(0).basis_words == std::vector<Word>{Word()});
  CHECK(algebra.degree_basis(2).basis_words ==
        std::vector<Word>{make_word({1, 0}), make_word({0, 1})});
  CHECK(algebra.degree_basis(4).basis_words == std::vector<Word>{make_word({1, 0, 1, 0})});
}

TEST_CASE("coordinates and the kernel oracle") {
  NicholsAlgebra algebra(kM2);
  CHECK(algebra.is_zero(concat_mul(x(0), x(0))));
  CHECK_FALSE(algebra.is_zero(x(0)));
  // Unit coordinates of a basis word with respect to itself.
  std::vector<Cyclotomic> coords =
      algebra.coordinates(FreeElement::from_word(make_word({1, 0})), 2);
  CHECK(coords[0].is_one());
  CHECK(coords[1].is_zero());
  // The top even element of Theorem 4.3 degenerates exactly on the
  // exclusion branch: here (-p12^-2 p21)^2 = -1, so it is zero in B(V).
  FreeElement top = kM2.p(0, 1).pow(2) * FreeElement::from_word(make_word({0, 1, 0, 1})) -
                    kM2.p(1, 0).pow(2) * FreeElement::from_word(make_word({1, 0, 1, 0}));
  CHECK(algebra.is_zero(top));
  CHECK(algebra.derivation_zero(top));
  // On the "otherwise" branch the same shape survives.
  BraidingSpec other{2, 2, {{1, 0}, {1, 1}}, 8, {}};
  NicholsAlgebra o(other);
  FreeElement top_o = other.p(0, 1).pow(2) * FreeElement::from_word(make_word({0, 1, 0, 1})) -
                      other.p(1, 0).pow(2) * FreeElement::from_word(make_word({1, 0, 1, 0}));
  CHECK_FALSE(o.is_zero(top_o));
  // Normal forms re-expand over standard words.
  FreeElement nf = algebra.normal_form(FreeElement::from_word(make_word({0, 1, 0, 1})));
  CHECK(nf.term_count() == 1);
  CHECK(algebra.is_zero(nf - FreeElement::from_word(make_word({0, 1, 0, 1}))));
}

TEST_CASE("derivation oracle base cases") {
  NicholsAlgebra algebra(kM2);
  CHECK(algebra.derivation_zero(concat_mul(x(0), x(0))));
  CHECK_FALSE(algebra.derivation_zero(x(0)));
  CHECK_FALSE(algebra.derivation_zero(FreeElement::scalar(Cyclotomic(2))));
  CHECK(algebra.derivation_zero(FreeElement()));
  // l_i^m[j]_L stays alive for all m when p_ii = 1 and p_ij != 1.
  BraidingSpec flat{2, 6, {{0, 2}, {0, 3}}, 7, {}};
  NicholsAlgebra f(flat);
  for (int m = 1; m <= 5; ++m)
    CHECK_FALSE(f.derivation_zero(
        ad_power(flat, BracketKind::L, AdSide::Left, x(0), x(1), m)));
}

TEST_CASE("the two zero oracles agree word by word") {
  const std::vector<BraidingSpec> panel = {
      kM2,
      kM3,
      {2, 12, {{5, 7}, {2, 9}}, 6, {}},
      {2, 6, {{0, 2}, {0, 3}}, 6, {}},
      {2, 6, {{3, 2}, {4, 3}}, 6, {}},
  };
  for (const auto& spec : panel) {
    NicholsAlgebra algebra(spec, 5);
    for (int length = 1; length <= 5; ++length)
      for (const Word& w : all_words(2, length)) {
        FreeElement u = FreeElement::from_word(w);
        CHECK(algebra.is_zero(u) == algebra.derivation_zero(u));
      }
  }
}

TEST_CASE("kernel elements generate a two-sided ideal") {
  std::mt19937 rng(8675309);
  std::uniform_int_distribution<int> letter(0, 1);
  for (const BraidingSpec& spec : {kM2, BraidingSpec{2, 12, {{5, 7}, {2, 9}}, 8, {}}}) {
    NicholsAlgebra algebra(spec, 6);
    for (int trial = 0; trial < 20; ++trial) {
      int a = 2 + trial % 2, b = 1 + (trial / 2) % 3;
      Word w, v;
      for (int s = 0; s < a; ++s) w.letters.push_back(letter(rng));
      for (int s = 0; s < b; ++s) v.letters.push_back(letter(rng));
      // w - normal_form(w) always lies in ker S_a.
      FreeElement u = FreeElement::from_word(w) - algebra.normal_form(FreeElement::from_word(w));
      if (u.is_zero()) continue;
      REQUIRE(algebra.is_zero(u));
      FreeElement ev = FreeElement::from_word(v);
      CHECK(algebra.is_zero(concat_mul(u, ev)));
      CHECK(algebra.is_zero(concat_mul(ev, u)));
    }
  }
}

TEST_CASE("sandwich monomials are independent") {
  // q11 = zeta_3, q12 q21 = zeta_3: m_12 = ord(q11) - 1 = 2.
  BraidingSpec spec{2, 6, {{2, 2}, {0, 3}}, 8, {}};
  NicholsAlgebra algebra(spec);
  auto mij = adjoint_nilpotency(algebra, 0, 1);
  REQUIRE(mij.has_value());
  CHECK(*mij == 2);
  int ord = *mult_order(spec.p(0, 0));
  // x_1^s x_2 x_1^t with 0 <= s <= m_12, 0 <= t <= ord - 1 (here i < j).
  int expected = (*mij + 1) * ord;
  int count = 0;
  std::map<int, RowSpace> spaces;
  for (int s = 0; s <= *mij; ++s)
    for (int t = 0; t < ord; ++t) {
      Word w;
      for (int k = 0; k < s; ++k) w.letters.push_back(0);
      w.letters.push_back(1);
      for (int k = 0; k < t; ++k) w.letters.push_back(0);
      int degree = s + t + 1;
      auto found = spaces.find(degree);
      if (found == spaces.end())
        found = spaces.emplace(degree, RowSpace(algebra.degree_basis(degree).dimension())).first;
      CHECK(found->second.insert(algebra.coordinates(FreeElement::from_word(w), degree)));
      ++count;
    }
  CHECK(count == expected);

  // Mirrored family for i > j: x_2^s x_1 x_2^t with t bounded by m_21.
  BraidingSpec mirror{2, 6, {{3, 0}, {2, 2}}, 8, {}};
  NicholsAlgebra malg(mirror);
  auto m21 = adjoint_nilpotency(malg, 1, 0);
  REQUIRE(m21.has_value());
  CHECK(*m21 == 2);
  int ord2 = *mult_order(mirror.p(1, 1));
  std::map<int, RowSpace> mirror_spaces;
  for (int s = 0; s < ord2; ++s)
    for (int t = 0; t <= *m21; ++t) {
      Word w;
      for (int k = 0; k < s; ++k) w.letters.push_back(1);
      w.letters.push_back(0);
      for (int k = 0; k < t; ++k) w.letters.push_back(1);
      int degree = s + t + 1;
      auto found = mirror_spaces.find(degree);
      if (found == mirror_spaces.end())
        found = mirror_spaces.emplace(degree, RowSpace(malg.degree_basis(degree).dimension()))
                    .first;
      CHECK(found->second.insert(malg.coordinates(FreeElement::from_word(w), degree)));
    }
}

TEST_CASE("every monomial reduces to a single standard word in the rank-2 -1 case") {
  for (const BraidingSpec& spec : {kM2, kM3}) {
    NicholsAlgebra algebra(spec, 6);
    for (int length = 1; length <= 6; ++length)
      for (const Word& w : all_words(2, length)) {
        std::vector<Cyclotomic> coords = algebra.coordinates(FreeElement::from_word(w), length);
        int nonzero = 0;
        for (const auto& c : coords)
          if (!c.is_zero()) ++nonzero;
        CHECK(nonzero <= 1);
      }
  }
}

TEST_CASE("cap guard") {
  NicholsAlgebra algebra(kM2, 3);
  CHECK_THROWS_AS(algebra.degree_basis(4), CapExceeded);
  CHECK_THROWS_AS(algebra.dims(9), CapExceeded);
  CHECK_NOTHROW(algebra.dims(3));
  CHECK_THROWS_AS(algebra.degree_basis(-1), std::invalid_argument);
  CHECK_THROWS_AS(algebra.dims(-2), std::invalid_argument);
}
