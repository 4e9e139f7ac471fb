#ifndef PROLAB_MATRIX_HPP
#define PROLAB_MATRIX_HPP

#include <Eigen/Core>

#include <vector>

#include "prolab/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<prolab::Rational> {
  using Real = prolab::Rational;
  using NonInteger = prolab::Rational;
  using Literal = prolab::Rational;
  using Nested = prolab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32
  };
  static inline Real epsilon() { return prolab::Rational(0); }
  static inline Real dummy_precision() { return prolab::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace prolab {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVecQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// In-place reduced row echelon form. Pivot choice: leftmost nonzero
/// column, then smallest row index. Returns the pivot columns in order.
std::vector<Index> rref_in_place(MatQ& m);

Index rank(const MatQ& m);

/// Kernel {v : m v = 0} as a matrix whose rows form a canonical (RREF)
/// basis. rank(m) + rows(kernel) == cols(m).
MatQ kernel(const MatQ& m);

/// Canonical basis (RREF, zero rows dropped) of the row space.
MatQ row_space(const MatQ& m);

/// Kernel basis of an RREF matrix with known pivot columns. Rows are the
/// standard free-column vectors, then canonicalized.
MatQ kernel_from_rref(const MatQ& rref, const std::vector<Index>& pivots);

bool is_zero(const MatQ& m);

MatQ identity_q(Index n);

/// Solve m x = rhs exactly; returns empty (0-size) vector when inconsistent.
VecQ solve(const MatQ& m, const VecQ& rhs);

/// Inverse of a square invertible matrix; throws on singular input.
MatQ inverse(const MatQ& m);

}  // namespace prolab

#endif  // PROLAB_MATRIX_HPP
