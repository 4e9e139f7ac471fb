#ifndef PROLAB_SPARSE_HPP
#define PROLAB_SPARSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "prolab/matrix.hpp"

namespace prolab {

/// Coordinate-list sparse matrix over Q. Rows hold (col, value) entries
/// sorted by column; zeros are never stored.
class SparseMatQ {
 public:
  using Entry = std::pair<Index, Rational>;
  using Row = std::vector<Entry>;

  SparseMatQ(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows) {}

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const Row& row(Index r) const { return data_[static_cast<size_t>(r)]; }

  /// Accumulate v into (r, c).
  void add(Index r, Index c, const Rational& v);
  /// Set a whole row from unsorted (col, value) pairs; duplicate columns
  /// are summed, zeros dropped.
  void set_row(Index r, Row entries);

  std::size_t nnz() const;
  MatQ to_dense() const;
  static SparseMatQ from_dense(const MatQ& m);

 private:
  Index rows_, cols_;
  std::vector<Row> data_;
};

struct SparseElimination {
  Index rank = 0;
  /// Canonical (RREF) kernel basis; empty (0 x cols) when trivial.
  MatQ kernel;
};

/// Exact sparse Gaussian elimination with Markowitz-style pivoting
/// (min column degree, then sparsest row, then smallest indices; fully
/// deterministic). Computes rank and, when requested, the kernel.
SparseElimination sparse_eliminate(const SparseMatQ& m, bool want_kernel);

/// Exact kernel of a linear system, dense or sparse elimination by density.
/// Very overdetermined systems are solved on a deterministic stride sample
/// of the rows and the candidate kernel is then verified against every
/// remaining row (violating rows are folded in and the solve repeats), so
/// the result is always the exact kernel.
MatQ sparse_system_kernel(const SparseMatQ& m);

}  // namespace prolab

#endif  // PROLAB_SPARSE_HPP
