#include "nichols/nichols_algebra.hpp"

#include <algorithm>

namespace nichols {

NicholsAlgebra::NicholsAlgebra(BraidingSpec spec, int degree_cap)
    : spec_(std::move(spec)), cap_(degree_cap >= 0 ? degree_cap : spec_.degree_cap) {
  spec_.validate();
}

std::string NicholsAlgebra::fingerprint() const {
  return spec_.fingerprint() + ";cap=" + std::to_string(cap_);
}

void NicholsAlgebra::check_cap(int degree) const {
  if (degree > cap_) throw CapExceeded(degree, cap_);
}

FreeElement NicholsAlgebra::apply_braiding(int m, int j, const FreeElement& u, bool inverse) const {
  if (j < 1 || j >= m) throw std::invalid_argument("braiding slot out of range");
  FreeElement out;
  for (const auto& [w, c] : u.terms()) {
    if (w.length() != m) throw std::invalid_argument("element is not of tensor degree m");
    Word swapped = w;
    std::swap(swapped.letters[j - 1], swapped.letters[j]);
    int a = w.letters[j - 1], b = w.letters[j];
    // C(x_a (x) x_b) = q_ab x_b (x) x_a ; C^{-1}(x_a (x) x_b) = q_ba^{-1} x_b (x) x_a.
    long e = inverse ? -spec_.exponent(b, a) : spec_.exponent(a, b);
    out.add_term(swapped, Cyclotomic::root_of_unity(spec_.conductor, e) * c);
  }
  return out;
}

// S_m = (id (x) S_{m-1}) . S_{1,m-1}, where S_{1,j} moves each of the first
// j+1 letters to the front with the inverse-braiding twist.
FreeElement NicholsAlgebra::sym_apply(const FreeElement& component) const {
  int len = 0;
  if (!component.is_length_homogeneous(&len))
    throw std::invalid_argument("symmetrizer input must be length-homogeneous");
  if (len <= 1) return component;

  // Shuffle step S_{1,len-1}: term t moves letter t+1 to the front with
  // coefficient prod_{s<=t} q_{a_{t+1}, a_s}^{-1}.
  FreeElement shuffled;
  for (const auto& [w, c] : component.terms()) {
    for (int t = 0; t < len; ++t) {
      int mover = w.letters[t];
      long exp = 0;
      for (int s = 0; s < t; ++s) exp -= spec_.exponent(mover, w.letters[s]);
      Word moved;
      moved.letters.reserve(len);
      moved.letters.push_back(static_cast<std::uint8_t>(mover));
      for (int s = 0; s < len; ++s)
        if (s != t) moved.letters.push_back(w.letters[s]);
      shuffled.add_term(moved, Cyclotomic::root_of_unity(spec_.conductor, exp) * c);
    }
  }

  // Recurse on the suffixes grouped by first letter.
  FreeElement out;
  std::map<int, FreeElement> by_first;
  for (const auto& [w, c] : shuffled.terms()) {
    Word suffix(std::vector<std::uint8_t>(w.letters.begin() + 1, w.letters.end()));
    by_first[w.letters[0]].add_term(suffix, c);
  }
  for (const auto& [first, suffix_part] : by_first) {
    FreeElement sym_suffix = sym_apply(suffix_part);
    for (const auto& [w, c] : sym_suffix.terms()) {
      Word full;
      full.letters.reserve(len);
      full.letters.push_back(static_cast<std::uint8_t>(first));
      full.letters.insert(full.letters.end(), w.letters.begin(), w.letters.end());
      out.add_term(full, c);
    }
  }
  return out;
}

FreeElement NicholsAlgebra::symmetrizer_image(const FreeElement& u) const {
  FreeElement out;
  for (const auto& [len, component] : u.components_by_length()) {
    check_cap(len);
    out += sym_apply(component);
  }
  return out;
}

SymmetrizerMatrix NicholsAlgebra::build_symmetrizer(int m) {
  if (m < 1) throw std::invalid_argument("symmetrizer degree must be >= 1");
  check_cap(m);
  SymmetrizerMatrix s;
  s.degree = m;
  // Enumerate all degree-m words.
  std::vector<Word> words;
  words.push_back(Word());
  for (int step = 0; step < m; ++step) {
    std::vector<Word> next;
    next.reserve(words.size() * spec_.rank);
    for (const auto& w : words)
      for (int l = 0; l < spec_.rank; ++l) next.push_back(w.concat(Word::letter(l)));
    words = std::move(next);
  }
  for (const auto& w : words) s.columns.emplace(w, sym_apply(FreeElement::from_word(w)));
  return s;
}

std::map<DegreeVector, NicholsAlgebra::Block>& NicholsAlgebra::blocks_for(int m) {
  if (m < 1) throw std::invalid_argument("tensor degree must be >= 1");
  auto it = blocks_.find(m);
  if (it != blocks_.end()) return it->second;
  check_cap(m);

  // All degree-m words, grouped by multidegree, each group descending.
  std::map<DegreeVector, std::vector<Word>> groups;
  std::vector<Word> words = {Word()};
  for (int step = 0; step < m; ++step) {
    std::vector<Word> next;
    next.reserve(words.size() * spec_.rank);
    for (const auto& w : words)
      for (int l = 0; l < spec_.rank; ++l) next.push_back(w.concat(Word::letter(l)));
    words = std::move(next);
  }
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return word_less(b, a); });
  for (const auto& w : words) groups[w.degree(spec_.rank)].push_back(w);

  std::map<DegreeVector, Block>& blocks = blocks_[m];
  for (auto& [deg, group_words] : groups) {
    const int size = static_cast<int>(group_words.size());
    Block block(std::move(group_words), size);
    for (int i = 0; i < static_cast<int>(block.words.size()); ++i)
      block.column.emplace(block.words[i], i);
    for (const Word& w : block.words) {
      FreeElement image = sym_apply(FreeElement::from_word(w));
      std::vector<Cyclotomic> row(block.words.size(), Cyclotomic());
      for (const auto& [iw, ic] : image.terms()) row[block.column.at(iw)] = ic;
      if (block.space.insert(std::move(row))) block.standard_words.push_back(w);
    }
    blocks.emplace(deg, std::move(block));
  }
  return blocks;
}

NicholsAlgebra::Block& NicholsAlgebra::block_of(int m, const DegreeVector& d) {
  return blocks_for(m).at(d);
}

const DegreeBasis& NicholsAlgebra::degree_basis(int m) {
  if (m < 0) throw std::invalid_argument("degree must be >= 0");
  auto it = bases_.find(m);
  if (it != bases_.end()) return it->second;
  check_cap(m);
  DegreeBasis basis;
  basis.degree = m;
  if (m == 0) {
    basis.basis_words.push_back(Word());
  } else {
    for (auto& [deg, block] : blocks_for(m))
      for (const auto& w : block.standard_words) basis.basis_words.push_back(w);
    std::sort(basis.basis_words.begin(), basis.basis_words.end(),
              [](const Word& a, const Word& b) { return word_less(b, a); });
  }
  for (int i = 0; i < static_cast<int>(basis.basis_words.size()); ++i)
    basis.index.emplace(basis.basis_words[i], i);
  return bases_.emplace(m, std::move(basis)).first->second;
}

std::vector<int> NicholsAlgebra::dims(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("degree must be >= 0");
  check_cap(max_degree);
  std::vector<int> out;
  out.reserve(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) {
    if (m >= 1 && !out.empty() && out.back() == 0) {
      out.push_back(0);  // B is generated in degree 1, so zero slices persist
      continue;
    }
    out.push_back(degree_basis(m).dimension());
  }
  return out;
}

std::vector<Cyclotomic> NicholsAlgebra::block_coordinates(Block& block, const Word& w) const {
  auto cached = block.coord_cache.find(w);
  if (cached != block.coord_cache.end()) return cached->second;
  FreeElement image = sym_apply(FreeElement::from_word(w));
  std::vector<Cyclotomic> row(block.words.size(), Cyclotomic());
  for (const auto& [iw, ic] : image.terms()) row[block.column.at(iw)] = ic;
  auto coords = block.space.solve(std::move(row));
  if (!coords) throw std::logic_error("symmetrizer image escaped the standard span");
  block.coord_cache.emplace(w, *coords);
  return *coords;
}

std::vector<Cyclotomic> NicholsAlgebra::coordinates(const FreeElement& u, int m) {
  check_cap(m);
  const DegreeBasis& basis = degree_basis(m);
  std::vector<Cyclotomic> out(basis.dimension(), Cyclotomic());
  if (u.is_zero()) return out;
  int len = 0;
  if (!u.is_length_homogeneous(&len) || len != m)
    throw std::invalid_argument("element is not homogeneous of total degree m");
  if (m == 0) {
    out[0] = u.coefficient(Word());
    return out;
  }
  for (const auto& [deg, component] : u.homogeneous_components(spec_.rank)) {
    Block& block = block_of(m, deg);
    for (const auto& [w, c] : component.terms()) {
      std::vector<Cyclotomic> wc = block_coordinates(block, w);
      for (std::size_t i = 0; i < wc.size(); ++i) {
        if (wc[i].is_zero()) continue;
        out[basis.index.at(block.standard_words[i])] += c * wc[i];
      }
    }
  }
  return out;
}

FreeElement NicholsAlgebra::normal_form(const FreeElement& u) {
  FreeElement out;
  for (const auto& [len, component] : u.components_by_length()) {
    const DegreeBasis& basis = degree_basis(len);
    std::vector<Cyclotomic> coords = coordinates(component, len);
    for (int i = 0; i < basis.dimension(); ++i) out.add_term(basis.basis_words[i], coords[i]);
  }
  return out;
}

bool NicholsAlgebra::is_zero(const FreeElement& u) const {
  for (const auto& [len, component] : u.components_by_length()) {
    check_cap(len);
    if (!sym_apply(component).is_zero()) return false;
  }
  return true;
}

namespace {

std::string memo_key(const FreeElement& u) {
  std::string key;
  for (const auto& [w, c] : u.terms()) {
    for (auto l : w.letters) key += static_cast<char>('a' + l);
    key += '=';
    // Rational values can carry an incidental conductor; normalize them.
    // Other values need the conductor tagged: equal strings at different
    // conductors denote different numbers.
    if (c.is_rational()) {
      key += c.rational_value().get_str();
    } else {
      key += c.str();
      key += '@';
      key += std::to_string(c.conductor());
    }
    key += ';';
  }
  return key;
}

}  // namespace

bool NicholsAlgebra::derivation_zero(const FreeElement& u) {
  for (const auto& [len, component] : u.components_by_length()) {
    check_cap(len);
    if (len <= 1) {
      if (!component.is_zero()) return false;
      continue;
    }
    std::string key = memo_key(component);
    auto it = derivation_memo_.find(key);
    bool zero;
    if (it != derivation_memo_.end()) {
      zero = it->second;
    } else {
      zero = true;
      for (int i = 0; i < spec_.rank && zero; ++i)
        zero = derivation_zero(skew_derivation(spec_, i, component));
      derivation_memo_.emplace(std::move(key), zero);
    }
    if (!zero) return false;
  }
  return true;
}

}  // namespace nichols
