#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// (column, value) pairs sorted by column, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental exact Gaussian elimination over Q.
///
/// Every accepted row is reduced against all earlier pivots and scaled so its
/// leading entry is 1. The reduced row echelon form and a kernel basis are
/// produced on demand.
class RowReducer {
 public:
  explicit RowReducer(std::size_t columns);

  /// Returns true when the row was independent of the rows added so far.
  bool addRow(const SparseVector& row);

  [[nodiscard]] std::size_t columns() const { return columns_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t nullity() const { return columns_ - rows_.size(); }
  [[nodiscard]] bool isPivot(std::size_t column) const { return pivotRow_[column].has_value(); }

  /// Rows of the RREF, ordered by pivot column.
  [[nodiscard]] std::vector<SparseVector> reducedEchelon() const;

  /// One kernel vector per free column (ascending), with 1 at that column and 0 at
  /// every other free column.
  [[nodiscard]] std::vector<SparseVector> kernelBasis() const;

 private:
  void loadDense(const SparseVector& row, std::size_t& first) const;
  SparseVector harvestDense(std::size_t first) const;

  std::size_t columns_;
  std::vector<std::optional<std::size_t>> pivotRow_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
  mutable std::vector<Rational> dense_;
};

/// Solution of A x = b with free variables set to zero.
struct AffineSolution {
  bool feasible = false;
  std::vector<Rational> values;  // size = columns when feasible
  std::size_t freeCount = 0;     // dimension of the solution space
};

/// Solves A x = b exactly. `rows` are the rows of A over `columns` unknowns.
AffineSolution solveAffine(const std::vector<SparseVector>& rows, const std::vector<Rational>& rhs,
                           std::size_t columns);

/// Reduced row echelon form of a list of vectors (rank-many rows).
std::vector<SparseVector> rowReduce(const std::vector<SparseVector>& rows, std::size_t columns);

}  // namespace gkm
