#include "nichols/linalg.hpp"

#include <stdexcept>

namespace nichols {

int RowSpace::reduce(std::vector<Cyclotomic>& row, std::vector<Cyclotomic>* used) const {
  if (used) used->assign(rows_.size(), Cyclotomic());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = row[pivot_cols_[i]];
    if (c.is_zero()) continue;
    Cyclotomic factor = c;  // pivots are normalized to 1
    if (used) (*used)[i] = factor;
    for (int j = 0; j < cols_; ++j) {
      if (!rows_[i][j].is_zero()) row[j] -= factor * rows_[i][j];
    }
  }
  for (int j = 0; j < cols_; ++j)
    if (!row[j].is_zero()) return j;
  return -1;
}

bool RowSpace::insert(std::vector<Cyclotomic> row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row size mismatch");
  std::vector<Cyclotomic> used;
  int pivot = reduce(row, &used);
  if (pivot < 0) return false;

  // Normalize the pivot to 1.
  Cyclotomic inv = row[pivot].inverse();
  for (auto& c : row) c = inv * c;

  std::vector<Cyclotomic> trans(transform_.empty() ? 0 : transform_[0].size(), Cyclotomic());
  trans.push_back(inv);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (used[i].is_zero()) continue;
    Cyclotomic f = inv * used[i];
    for (std::size_t j = 0; j < transform_[i].size(); ++j) trans[j] -= f * transform_[i][j];
  }
  for (auto& t : transform_) t.push_back(Cyclotomic());

  // Back-substitute into existing rows to keep the RREF canonical.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = rows_[i][pivot];
    if (c.is_zero()) continue;
    Cyclotomic f = c;
    for (int j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) rows_[i][j] -= f * row[j];
    for (std::size_t j = 0; j < trans.size(); ++j)
      if (!trans[j].is_zero()) transform_[i][j] -= f * trans[j];
  }

  // Insert keeping pivot columns ascending.
  std::size_t pos = 0;
  while (pos < pivot_cols_.size() && pivot_cols_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivot_cols_.insert(pivot_cols_.begin() + pos, pivot);
  transform_.insert(transform_.begin() + pos, std::move(trans));
  return true;
}

bool RowSpace::contains(std::vector<Cyclotomic> row) const {
  return reduce(row, nullptr) < 0;
}

std::optional<std::vector<Cyclotomic>> RowSpace::solve(std::vector<Cyclotomic> row) const {
  std::vector<Cyclotomic> used;
  if (reduce(row, &used) >= 0) return std::nullopt;
  std::vector<Cyclotomic> coords(rank(), Cyclotomic());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (used[i].is_zero()) continue;
    for (int j = 0; j < rank(); ++j) coords[j] += used[i] * transform_[i][j];
  }
  return coords;
}

bool RowSpace::same_span(const RowSpace& other) const {
  if (cols_ != other.cols_ || rank() != other.rank()) return false;
  if (pivot_cols_ != other.pivot_cols_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (int j = 0; j < cols_; ++j)
      if (rows_[i][j] != other.rows_[i][j]) return false;
  return true;
}

}  // namespace nichols
