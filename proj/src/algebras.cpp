#include "prolab/algebras.hpp"

#include <stdexcept>

#include "prolab/multiindex.hpp"

namespace prolab {

VecQ vec_endo(const MatQ& x) {
  const Index n = x.rows();
  VecQ v(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) v(i * n + j) = x(i, j);
  return v;
}

MatQ unvec_endo(const VecQ& v, int n) {
  MatQ x(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) x(i, j) = v(i * n + j);
  return x;
}

Subspace gl_algebra(int n) { return Subspace::full(static_cast<Index>(n) * n); }

Subspace sl_algebra(int n) {
  MatQ trace_row(1, static_cast<Index>(n) * n);
  trace_row.setZero();
  for (int i = 0; i < n; ++i) trace_row(0, i * n + i) = Rational(1);
  return Subspace::from_rref(static_cast<Index>(n) * n, kernel(trace_row));
}

MatQ split_symmetric_form(int n) {
  MatQ j(n, n);
  j.setZero();
  for (int i = 0; i < n; ++i) {
    const int other = n - 1 - i;
    if (i == other)
      j(i, i) = Rational(1);
    else
      j(i, other) = Rational(1, 2);
  }
  return j;
}

MatQ split_skew_form(int n) {
  if (n % 2 != 0) throw std::invalid_argument("split_skew_form: n must be even");
  MatQ j(n, n);
  j.setZero();
  for (int i = 0; i < n / 2; ++i) {
    j(i, n - 1 - i) = Rational(1);
    j(n - 1 - i, i) = Rational(-1);
  }
  return j;
}

namespace {

// {X : X^T J + s J X = 0} with s = +1; works for symmetric or skew J.
Subspace form_algebra(const MatQ& j) {
  const Index n = j.rows();
  MatQ rows(n * n, n * n);
  rows.setZero();
  Index r = 0;
  // (X^T J + J X)_{ab} = sum_c X_ca J_cb + J_ac X_cb
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b, ++r)
      for (Index c = 0; c < n; ++c) {
        if (!j(c, b).is_zero()) rows(r, c * n + a) += j(c, b);
        if (!j(a, c).is_zero()) rows(r, c * n + b) += j(a, c);
      }
  return Subspace::from_rref(n * n, kernel(rows));
}

}  // namespace

Subspace so_algebra(int n) { return form_algebra(split_symmetric_form(n)); }

Subspace co_algebra(int n) {
  Subspace so = so_algebra(n);
  MatQ id_row(1, static_cast<Index>(n) * n);
  id_row.setZero();
  for (int i = 0; i < n; ++i) id_row(0, i * n + i) = Rational(1);
  return so.sum(Subspace::span(static_cast<Index>(n) * n, id_row));
}

Subspace sp_algebra(int n) { return form_algebra(split_skew_form(n)); }

Subspace segre_action_algebra(int a, int b) {
  const Index dim = static_cast<Index>(a) * b;
  MatQ rows(static_cast<Index>(a) * a + static_cast<Index>(b) * b, dim * dim);
  rows.setZero();
  Index r = 0;
  // E_st in gl(A): (i,j) -> (s,j) when i == t.
  for (int s = 0; s < a; ++s)
    for (int t = 0; t < a; ++t, ++r)
      for (int j = 0; j < b; ++j) rows(r, (s * b + j) * dim + (t * b + j)) = Rational(1);
  // E_st in gl(B): (i,j) -> (i,s) when j == t.
  for (int s = 0; s < b; ++s)
    for (int t = 0; t < b; ++t, ++r)
      for (int i = 0; i < a; ++i) rows(r, (i * b + s) * dim + (i * b + t)) = Rational(1);
  return Subspace::span(dim * dim, rows);
}

namespace {

// Strictly increasing pair (i < j) indexing for Lambda^2, colex.
Index alt_rank(int i, int j) { return static_cast<Index>(binomial(j, 2)) + i; }

}  // namespace

Subspace plucker_action_algebra(int m) {
  const Index dim = static_cast<Index>(binomial(m, 2));
  MatQ rows(static_cast<Index>(m) * m, dim * dim);
  rows.setZero();
  Index r = 0;
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t, ++r) {
      // E_st (e_i ^ e_j) = [t==i] e_s ^ e_j + [t==j] e_i ^ e_s
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const Index src = alt_rank(i, j);
          auto put = [&](int p, int q, int sign) {
            if (p == q) return;
            const Index dst = p < q ? alt_rank(p, q) : alt_rank(q, p);
            const int s2 = p < q ? sign : -sign;
            rows(r, dst * dim + src) += Rational(s2);
          };
          if (t == i) put(s, j, 1);
          if (t == j) put(i, s, 1);
        }
    }
  return Subspace::span(dim * dim, rows);
}

Subspace veronese_action_algebra(int w) {
  const Index dim = static_cast<Index>(sym_dim(w, 2));
  MatQ rows(static_cast<Index>(w) * w, dim * dim);
  rows.setZero();
  Index r = 0;
  // X acts on symmetric matrices by S -> X S + S X^T; here X = E_st.
  // Coordinates x_{ij} = S_ij for i <= j; the basis element at (i, j) is
  // E_ij + E_ji off the diagonal and E_ii on it.
  for (int s = 0; s < w; ++s)
    for (int t = 0; t < w; ++t, ++r) {
      for (int i = 0; i < w; ++i)
        for (int j = i; j < w; ++j) {
          const Index src = multiindex_rank({i, j});
          // E_st applied to the basis matrix contributes E_s? + E_?s blocks.
          auto put = [&](int q) {  // target pair (s, q)
            const Index dst = multiindex_rank({s < q ? s : q, s < q ? q : s});
            rows(r, dst * dim + src) += Rational(s == q ? 2 : 1);
          };
          if (i == j) {
            if (t == i) put(i);
          } else {
            if (t == i) put(j);
            if (t == j) put(i);
          }
        }
    }
  return Subspace::span(dim * dim, rows);
}

Subspace named_algebra(const std::string& name) {
  const auto open = name.find('(');
  const auto close = name.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("named_algebra: expected e.g. gl(3)");
  const std::string kind = name.substr(0, open);
  const int n = std::stoi(name.substr(open + 1, close - open - 1));
  if (n < 1) throw std::invalid_argument("named_algebra: n must be >= 1");
  if (kind == "gl") return gl_algebra(n);
  if (kind == "sl") return sl_algebra(n);
  if (kind == "so") return so_algebra(n);
  if (kind == "co") return co_algebra(n);
  if (kind == "sp") return sp_algebra(n);
  throw std::invalid_argument("named_algebra: unknown family '" + kind + "'");
}

}  // namespace prolab
