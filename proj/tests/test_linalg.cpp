#include <doctest.h>

#include <vector>

#include "prolab/rng.hpp"
#include "prolab/sparse.hpp"
#include "prolab/subspace.hpp"

using namespace prolab;

namespace {

MatQ random_matrix(Rng& rng, Index rows, Index cols, long bound = 9) {
  MatQ m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.small_int(bound);
  return m;
}

// Rank by brute-force minor expansion: the largest k with a nonzero k x k
// minor. Independent of the elimination code.
Rational minor_det(const MatQ& m, const std::vector<Index>& rows,
                   const std::vector<Index>& cols) {
  const size_t k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  Rational det(0);
  std::vector<Index> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < k; ++c) {
    std::vector<Index> sub_cols;
    for (size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    const Rational cofactor = minor_det(m, sub_rows, sub_cols);
    if (cofactor.is_zero() || m(rows[0], cols[c]).is_zero()) continue;
    const Rational term = m(rows[0], cols[c]) * cofactor;
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

bool has_nonzero_minor(const MatQ& m, Index k) {
  std::vector<Index> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
  std::vector<bool> row_mask(static_cast<size_t>(m.rows()), false);
  std::vector<bool> col_mask(static_cast<size_t>(m.cols()), false);
  std::fill(row_mask.begin(), row_mask.begin() + k, true);
  bool found = false;
  do {
    Index ri = 0;
    for (Index r = 0; r < m.rows(); ++r)
      if (row_mask[static_cast<size_t>(r)]) rows[static_cast<size_t>(ri++)] = r;
    std::fill(col_mask.begin(), col_mask.end(), false);
    std::fill(col_mask.begin(), col_mask.begin() + k, true);
    do {
      Index ci = 0;
      for (Index c = 0; c < m.cols(); ++c)
        if (col_mask[static_cast<size_t>(c)]) cols[static_cast<size_t>(ci++)] = c;
      if (!minor_det(m, rows, cols).is_zero()) found = true;
    } while (!found && std::prev_permutation(col_mask.begin(), col_mask.end()));
  } while (!found && std::prev_permutation(row_mask.begin(), row_mask.end()));
  return found;
}

Index rank_by_minors(const MatQ& m) {
  for (Index k = std::min(m.rows(), m.cols()); k >= 1; --k)
    if (has_nonzero_minor(m, k)) return k;
  return 0;
}

}  // namespace

TEST_CASE("kernel basics") {
  CHECK(kernel(identity_q(3)).rows() == 0);  // identity: zero kernel

  MatQ row(1, 3);
  row(0, 0) = Rational(1);
  row(0, 1) = Rational(1);
  row(0, 2) = Rational(1);
  CHECK(kernel(row).rows() == 2);  // one independent constraint
}

TEST_CASE("kernel dimension against minor-expansion rank") {
  Rng rng(42);
  const MatQ m = random_matrix(rng, 4, 7, 4);
  const Index r = rank_by_minors(m);
  CHECK(rank(m) == r);
  CHECK(kernel(m).rows() == 7 - r);
  // Kernel rows actually annihilate.
  const MatQ k = kernel(m);
  for (Index i = 0; i < k.rows(); ++i) {
    VecQ prod = m * k.row(i).transpose();
    for (Index j = 0; j < prod.size(); ++j) CHECK(prod(j).is_zero());
  }
}

TEST_CASE("rank-nullity across random shapes") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Index rows = 1 + static_cast<Index>(rng.below(8));
    const Index cols = 1 + static_cast<Index>(rng.below(8));
    const MatQ m = random_matrix(rng, rows, cols, 3);
    CHECK(rank(m) + kernel(m).rows() == cols);
  }
}

TEST_CASE("subspace arithmetic basics") {
  MatQ e1(1, 3), e2(1, 3);
  e1.setZero();
  e2.setZero();
  e1(0, 0) = Rational(1);
  e2(0, 1) = Rational(1);
  const Subspace a = Subspace::span(3, e1);
  const Subspace b = Subspace::span(3, e2);
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.sum(a) == a);        // idempotence
  CHECK(a.intersect(a) == a);
  CHECK_THROWS(a.sum(Subspace::zero(4)));
}

TEST_CASE("modular law on seeded random subspaces of Q^6") {
  Rng rng(99);
  const Subspace a = Subspace::span(6, random_matrix(rng, 3, 6, 5));
  const Subspace b = Subspace::span(6, random_matrix(rng, 4, 6, 5));
  const Subspace sum = a.sum(b);
  const Subspace meet = a.intersect(b);
  CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
  // Oracle: dim(A + B) by Gaussian elimination on the stacked bases.
  MatQ stacked(a.dim() + b.dim(), 6);
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  CHECK(sum.dim() == rank(stacked));
  CHECK(sum.contains(a));
  CHECK(sum.contains(b));
  CHECK(a.contains(meet));
  CHECK(b.contains(meet));
}

TEST_CASE("annihilator is an involution") {
  Rng rng(17);
  for (int t = 0; t < 8; ++t) {
    const Subspace a = Subspace::span(5, random_matrix(rng, 2 + t % 3, 5, 4));
    CHECK(a.annihilator().annihilator() == a);
    CHECK(a.dim() + a.annihilator().dim() == 5);
  }
}

TEST_CASE("canonical representation is spanning-set independent") {
  Rng rng(31);
  const MatQ basis = random_matrix(rng, 3, 7, 4);
  // Mix rows by a few invertible operations.
  MatQ mixed(5, 7);
  mixed.row(0) = basis.row(0) + basis.row(1);
  mixed.row(1) = basis.row(1) * Rational(-7, 3);
  mixed.row(2) = basis.row(2) + basis.row(0) * Rational(5);
  mixed.row(3) = basis.row(0) + basis.row(1) + basis.row(2);
  mixed.row(4) = basis.row(2);
  const Subspace s1 = Subspace::span(7, basis);
  const Subspace s2 = Subspace::span(7, mixed);
  REQUIRE(s1.dim() == s2.dim());
  CHECK(s1 == s2);  // bit-identical RREF
}

TEST_CASE("contains and coordinates") {
  Rng rng(8);
  const MatQ basis = random_matrix(rng, 3, 6, 4);
  const Subspace s = Subspace::span(6, basis);
  VecQ v = basis.row(0).transpose() * Rational(2) - basis.row(2).transpose();
  CHECK(s.contains(v));
  const VecQ coords = s.coordinates(v);
  VecQ back = s.basis().transpose() * coords;
  for (Index i = 0; i < 6; ++i) CHECK(back(i) == v(i));
  VecQ off = v;
  off(5) += Rational(1, 7);
  if (!s.contains(off)) CHECK_THROWS(s.coordinates(off));
}

TEST_CASE("quotient projector") {
  // Full space: zero rows.
  CHECK(quotient_projector(Subspace::full(9)).rows() == 0);
  // Zero space: the identity.
  const MatQ p0 = quotient_projector(Subspace::zero(4));
  CHECK(p0.rows() == 4);
  CHECK(is_zero(p0 - identity_q(4)));
  // Round trip: ker(projector(S)) = S.
  Rng rng(12);
  const Subspace s = Subspace::span(9, random_matrix(rng, 3, 9, 4));
  const MatQ proj = quotient_projector(s);
  CHECK(proj.rows() == 9 - s.dim());
  CHECK(Subspace::from_rref(9, kernel(proj)) == s);
}

TEST_CASE("sparse and dense elimination agree") {
  Rng rng(77);
  for (const auto& [rows, cols, fill_percent] :
       std::vector<std::tuple<Index, Index, int>>{
           {40, 60, 12}, {80, 50, 8}, {150, 120, 5}, {300, 300, 3}, {500, 500, 1}}) {
    SparseMatQ sm(rows, cols);
    MatQ dm(rows, cols);
    dm.setZero();
    for (Index r = 0; r < rows; ++r) {
      SparseMatQ::Row entries;
      for (Index c = 0; c < cols; ++c) {
        if (rng.below(100) < static_cast<std::uint64_t>(fill_percent)) {
          const Rational v = rng.small_nonzero(5);
          entries.push_back({c, v});
          dm(r, c) = v;
        }
      }
      sm.set_row(r, std::move(entries));
    }
    const SparseElimination se = sparse_eliminate(sm, /*want_kernel=*/true);
    const MatQ dk = kernel(dm);
    CHECK(se.rank == rank(dm));
    REQUIRE(se.kernel.rows() == dk.rows());
    for (Index i = 0; i < dk.rows(); ++i)
      for (Index j = 0; j < dk.cols(); ++j) CHECK(se.kernel(i, j) == dk(i, j));
  }
}

TEST_CASE("dense and coordinate-list representations agree under conversion") {
  Rng rng(87);
  SparseMatQ sm(12, 9);
  for (Index r = 0; r < 12; ++r) {
    SparseMatQ::Row entries;
    for (Index c = 0; c < 9; ++c)
      if (rng.below(3) == 0) entries.push_back({c, rng.small_nonzero(6)});
    sm.set_row(r, std::move(entries));
  }
  const MatQ dense = sm.to_dense();
  const SparseMatQ back = SparseMatQ::from_dense(dense);
  CHECK(back.nnz() == sm.nnz());
  CHECK(is_zero(back.to_dense() - dense));
  // Duplicate coordinates accumulate; exact cancellation drops the entry.
  SparseMatQ acc(1, 2);
  acc.add(0, 1, Rational(1, 3));
  acc.add(0, 1, Rational(2, 3));
  acc.add(0, 0, Rational(5));
  acc.add(0, 0, Rational(-5));
  CHECK(acc.nnz() == 1);
  CHECK(acc.to_dense()(0, 1) == Rational(1));
}

TEST_CASE("sampled kernel of very overdetermined systems is exact") {
  Rng rng(55);
  // 900 rows over 40 columns with an 8-dimensional kernel by construction.
  const MatQ gen = random_matrix(rng, 32, 40, 3);
  SparseMatQ sys(900, 40);
  for (Index r = 0; r < 900; ++r) {
    SparseMatQ::Row entries;
    RowVecQ combo(40);
    combo.setZero();
    for (int k = 0; k < 3; ++k)
      combo += gen.row(static_cast<Index>(rng.below(32))) * rng.small_int(3);
    for (Index c = 0; c < 40; ++c)
      if (!combo(c).is_zero()) entries.push_back({c, combo(c)});
    sys.set_row(r, std::move(entries));
  }
  const MatQ sampled = sparse_system_kernel(sys);
  const MatQ dense = kernel(sys.to_dense());
  REQUIRE(sampled.rows() == dense.rows());
  for (Index i = 0; i < dense.rows(); ++i)
    for (Index j = 0; j < dense.cols(); ++j) CHECK(sampled(i, j) == dense(i, j));
}

TEST_CASE("solve and inverse") {
  Rng rng(3);
  for (int t = 0; t < 6; ++t) {
    MatQ m = random_matrix(rng, 4, 4, 4);
    for (Index i = 0; i < 4; ++i) m(i, i) += Rational(7);
    const MatQ mi = inverse(m);
    CHECK(is_zero(m * mi - identity_q(4)));
    VecQ rhs = random_matrix(rng, 4, 1, 5);
    const VecQ x = solve(m, rhs);
    REQUIRE(x.size() == 4);
    VecQ back = m * x;
    for (Index i = 0; i < 4; ++i) CHECK(back(i) == rhs(i));
  }
  // Inconsistent system: empty solution.
  MatQ m(2, 1);
  m(0, 0) = Rational(1);
  m(1, 0) = Rational(1);
  VecQ rhs(2);
  rhs(0) = Rational(1);
  rhs(1) = Rational(2);
  CHECK(solve(m, rhs).size() == 0);
  CHECK_THROWS(inverse(MatQ(MatQ::Zero(2, 2))));
}
