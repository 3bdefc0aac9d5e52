#pragma once

#include "nichols/braiding.hpp"
#include "nichols/free_algebra.hpp"
#include "nichols/linalg.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

/// Thrown when a computation would exceed the configured degree cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(int degree, int cap)
      : std::runtime_error("degree " + std::to_string(degree) +
                           " exceeds the configured cap " + std::to_string(cap)),
        degree(degree), cap(cap) {}
  int degree;
  int cap;
};

/// The quantum symmetrizer S_m in the word basis, stored columnwise.
struct SymmetrizerMatrix {
  int degree = 0;
  std::map<Word, FreeElement, WordDescending> columns;
};

/// Standard-word basis of the degree-m slice of B(V), words descending.
struct DegreeBasis {
  int degree = 0;
  std::vector<Word> basis_words;
  std::map<Word, int, WordDescending> index;

  int dimension() const { return static_cast<int>(basis_words.size()); }
};

/// The Nichols algebra B(V) = T(V) / ker-of-symmetrizers for a diagonal
/// braiding: per-degree bases, coordinates, and two independent
/// zero-in-B(V) oracles.  Caches are internal; the visible results are
/// deterministic functions of (spec, cap).
class NicholsAlgebra {
public:
  explicit NicholsAlgebra(BraidingSpec spec, int degree_cap = -1);

  const BraidingSpec& spec() const { return spec_; }
  int cap() const { return cap_; }
  std::string fingerprint() const;

  /// S_m applied per word length; words longer than the cap throw.
  FreeElement symmetrizer_image(const FreeElement& u) const;

  /// C (or C^{-1}) acting on tensor slots (j, j+1) of degree-m words,
  /// 1-based j with 1 <= j < m.
  FreeElement apply_braiding(int m, int j, const FreeElement& u, bool inverse) const;

  SymmetrizerMatrix build_symmetrizer(int m);

  const DegreeBasis& degree_basis(int m);

  /// [dim B_0, ..., dim B_D].
  std::vector<int> dims(int max_degree);

  /// Coordinates of a total-degree-m element over degree_basis(m).
  std::vector<Cyclotomic> coordinates(const FreeElement& u, int m);

  /// Image re-expressed over standard words (per total-degree component).
  FreeElement normal_form(const FreeElement& u);

  /// Symmetrizer-kernel oracle: true iff every component lies in ker S_m.
  bool is_zero(const FreeElement& u) const;

  /// Independent oracle: all iterated skew derivations vanish.
  bool derivation_zero(const FreeElement& u);

private:
  struct Block {
    std::vector<Word> words;  // descending
    std::map<Word, int, WordDescending> column;
    RowSpace space;
    std::vector<Word> standard_words;                          // descending
    std::map<Word, std::vector<Cyclotomic>, WordDescending> coord_cache;  // over standard_words
    Block(std::vector<Word> ws, int columns) : words(std::move(ws)), space(columns) {}
  };

  void check_cap(int degree) const;
  FreeElement sym_apply(const FreeElement& component) const;  // all words same length
  std::map<DegreeVector, Block>& blocks_for(int m);
  Block& block_of(int m, const DegreeVector& d);
  std::vector<Cyclotomic> block_coordinates(Block& block, const Word& w) const;

  BraidingSpec spec_;
  int cap_;
  std::map<int, std::map<DegreeVector, Block>> blocks_;
  std::map<int, DegreeBasis> bases_;
  std::map<std::string, bool> derivation_memo_;
};

}  // namespace nichols
