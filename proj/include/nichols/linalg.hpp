#pragma once

#include "nichols/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace nichols {

/// Incremental exact row space over the scalar field, kept in reduced row
/// echelon form (a canonical basis of the span, independent of insertion
/// order).  Tracks the expression of each echelon row over the inserted
/// pivot rows so members can be re-expressed over the original vectors.
class RowSpace {
public:
  explicit RowSpace(int columns) : cols_(columns) {}

  int columns() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Cyclotomic>>& echelon_rows() const { return rows_; }

  /// Inserts a row; returns true when the rank grew (the row is then counted
  /// as a pivot row for solve()).
  bool insert(std::vector<Cyclotomic> row);

  bool contains(std::vector<Cyclotomic> row) const;

  /// Coordinates of `row` over the inserted pivot rows, or nullopt when the
  /// row is outside the span.
  std::optional<std::vector<Cyclotomic>> solve(std::vector<Cyclotomic> row) const;

  /// Same span test: RREF is canonical, so spans are equal iff rows match.
  bool same_span(const RowSpace& other) const;

private:
  // Reduces row in place; accumulates the multipliers of each echelon row
  // used when `used` is non-null.  Returns the first nonzero column or -1.
  int reduce(std::vector<Cyclotomic>& row, std::vector<Cyclotomic>* used) const;

  int cols_;
  std::vector<std::vector<Cyclotomic>> rows_;       // RREF, pivots ascending
  std::vector<int> pivot_cols_;
  std::vector<std::vector<Cyclotomic>> transform_;  // rows_[i] over inserted pivot rows
};

}  // namespace nichols
