#include "prolab/matrix.hpp"

#include <stdexcept>

namespace prolab {

std::vector<Index> rref_in_place(MatQ& m) {
  const Index nr = m.rows(), nc = m.cols();
  std::vector<Index> pivots;
  // Forward pass: leftmost nonzero column, smallest row index; eliminate
  // below only (keeps intermediate entries small), then back-substitute.
  Index row = 0;
  for (Index col = 0; col < nc && row < nr; ++col) {
    Index piv = -1;
    for (Index r = row; r < nr; ++r) {
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Rational inv = m(row, col).inverse();
    m(row, col) = Rational(1);
    std::vector<Index> support;  // nonzero columns right of the pivot
    for (Index c = col + 1; c < nc; ++c) {
      if (m(row, c).is_zero()) continue;
      m(row, c) *= inv;
      support.push_back(c);
    }
    for (Index r = row + 1; r < nr; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      m(r, col) = Rational(0);
      for (Index c : support) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  for (Index i = static_cast<Index>(pivots.size()) - 1; i >= 0; --i) {
    const Index col = pivots[static_cast<size_t>(i)];
    std::vector<Index> support;
    for (Index c = col + 1; c < nc; ++c)
      if (!m(i, c).is_zero()) support.push_back(c);
    for (Index r = 0; r < i; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      m(r, col) = Rational(0);
      for (Index c : support) m(r, c) -= f * m(i, c);
    }
  }
  return pivots;
}

Index rank(const MatQ& m) {
  MatQ w = m;
  return static_cast<Index>(rref_in_place(w).size());
}

MatQ kernel_from_rref(const MatQ& rref, const std::vector<Index>& pivots) {
  const Index nc = rref.cols();
  const Index r = static_cast<Index>(pivots.size());
  std::vector<bool> is_pivot(static_cast<size_t>(nc), false);
  for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  MatQ out(nc - r, nc);
  out.setZero();
  Index k = 0;
  for (Index f = 0; f < nc; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    out(k, f) = Rational(1);
    for (Index i = 0; i < r; ++i) out(k, pivots[static_cast<size_t>(i)]) = -rref(i, f);
    ++k;
  }
  rref_in_place(out);  // canonical representation
  return out;
}

MatQ kernel(const MatQ& m) {
  MatQ w = m;
  const auto pivots = rref_in_place(w);
  return kernel_from_rref(w, pivots);
}

MatQ row_space(const MatQ& m) {
  MatQ w = m;
  const auto pivots = rref_in_place(w);
  return w.topRows(static_cast<Index>(pivots.size()));
}

bool is_zero(const MatQ& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

MatQ identity_q(Index n) {
  MatQ m(n, n);
  m.setZero();
  for (Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

VecQ solve(const MatQ& m, const VecQ& rhs) {
  MatQ aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return VecQ();  // inconsistent
  VecQ x(m.cols());
  x.setZero();
  for (size_t i = 0; i < pivots.size(); ++i)
    x(pivots[i]) = aug(static_cast<Index>(i), m.cols());
  return x;
}

MatQ inverse(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const Index n = m.rows();
  MatQ aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_q(n);
  const auto pivots = rref_in_place(aug);
  // Invertible exactly when every pivot sits in the left block.
  if (static_cast<Index>(pivots.size()) != n || pivots.back() >= n)
    throw std::domain_error("inverse: singular matrix");
  return aug.rightCols(n);
}

}  // namespace prolab
