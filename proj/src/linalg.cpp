#include "gkm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

RowReducer::RowReducer(std::size_t columns) : columns_(columns), pivotRow_(columns), dense_(columns) {}

void RowReducer::loadDense(const SparseVector& row, std::size_t& first) const {
  first = columns_;
  for (const auto& [c, v] : row) {
    if (c >= columns_) throw std::out_of_range("sparse row column out of range");
    dense_[c] += v;
    if (c < first) first = c;
  }
}

SparseVector RowReducer::harvestDense(std::size_t first) const {
  SparseVector out;
  for (std::size_t c = first; c < columns_; ++c) {
    if (!dense_[c].isZero()) {
      out.emplace_back(c, dense_[c]);
      dense_[c] = Rational();
    }
  }
  return out;
}

bool RowReducer::addRow(const SparseVector& row) {
  std::size_t first = 0;
  loadDense(row, first);
  // Pivot rows only carry entries right of their pivot, so one left-to-right
  // sweep clears every existing pivot column.
  for (std::size_t c = first; c < columns_; ++c) {
    if (dense_[c].isZero() || !pivotRow_[c]) continue;
    const Rational factor = dense_[c];
    for (const auto& [j, v] : rows_[*pivotRow_[c]]) dense_[j].subMul(factor, v);
  }
  SparseVector reduced = harvestDense(first);
  if (reduced.empty()) return false;
  const Rational lead = reduced.front().second;
  for (auto& [c, v] : reduced) v /= lead;
  const std::size_t pivot = reduced.front().first;
  pivotRow_[pivot] = rows_.size();
  pivots_.push_back(pivot);
  rows_.push_back(std::move(reduced));
  return true;
}

std::vector<SparseVector> RowReducer::reducedEchelon() const {
  // Row i is already zero at the pivots of rows 0..i-1; clearing the pivots of
  // later rows, latest first, yields the RREF.
  std::vector<SparseVector> reduced(rows_.size());
  for (std::size_t i = rows_.size(); i-- > 0;) {
    std::size_t first = 0;
    loadDense(rows_[i], first);
    for (std::size_t c = first + 1; c < columns_; ++c) {
      if (dense_[c].isZero() || !pivotRow_[c] || *pivotRow_[c] <= i) continue;
      const Rational factor = dense_[c];
      for (const auto& [j, v] : reduced[*pivotRow_[c]]) dense_[j].subMul(factor, v);
    }
    reduced[i] = harvestDense(first);
  }
  std::vector<SparseVector> ordered;
  ordered.reserve(reduced.size());
  for (std::size_t c = 0; c < columns_; ++c) {
    if (pivotRow_[c]) ordered.push_back(std::move(reduced[*pivotRow_[c]]));
  }
  return ordered;
}

std::vector<SparseVector> RowReducer::kernelBasis() const {
  const auto rref = reducedEchelon();
  // column -> list of (pivot column, entry) over rows where that column is nonzero
  std::vector<std::vector<std::pair<std::size_t, Rational>>> byColumn(columns_);
  for (const auto& row : rref) {
    const std::size_t pivot = row.front().first;
    for (std::size_t i = 1; i < row.size(); ++i) byColumn[row[i].first].emplace_back(pivot, row[i].second);
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < columns_; ++f) {
    if (pivotRow_[f]) continue;
    SparseVector v;
    for (const auto& [pivot, entry] : byColumn[f]) v.emplace_back(pivot, -entry);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSolution solveAffine(const std::vector<SparseVector>& rows, const std::vector<Rational>& rhs,
                           std::size_t columns) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs count mismatch");
  RowReducer reducer(columns + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector augmented = rows[i];
    if (!rhs[i].isZero()) augmented.emplace_back(columns, rhs[i]);
    reducer.addRow(augmented);
  }
  AffineSolution out;
  if (reducer.isPivot(columns)) return out;
  out.feasible = true;
  out.freeCount = columns - reducer.rank();
  out.values.assign(columns, Rational());
  for (const auto& row : reducer.reducedEchelon()) {
    if (row.back().first == columns) out.values[row.front().first] = row.back().second;
  }
  return out;
}

std::vector<SparseVector> rowReduce(const std::vector<SparseVector>& rows, std::size_t columns) {
  RowReducer reducer(columns);
  for (const auto& r : rows) reducer.addRow(r);
  return reducer.reducedEchelon();
}

}  // namespace gkm
