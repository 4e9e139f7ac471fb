#include "prolab/sym_multimap.hpp"

#include <stdexcept>

namespace prolab {

SymMultiMap::SymMultiMap(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || degree < 1)
    throw std::invalid_argument("SymMultiMap: need n >= 1, degree >= 1");
  coeffs_ = MatQ(static_cast<Index>(sym_dim(n, degree)), n);
  coeffs_.setZero();
}

SymMultiMap SymMultiMap::contract(const VecQ& v) const {
  if (v.size() != n_) throw std::invalid_argument("contract: dimension mismatch");
  if (degree_ == 1) throw std::invalid_argument("contract: degree-1 map");
  SymMultiMap out(n_, degree_ - 1);
  const std::uint64_t out_rows = sym_dim(n_, degree_ - 1);
  for (Index r = 0; r < static_cast<Index>(out_rows); ++r) {
    const MultiIndex mu = multiindex_unrank(r, n_, degree_ - 1);
    for (int j = 0; j < n_; ++j) {
      if (v(j).is_zero()) continue;
      const Index src = multiindex_rank_with(mu, j);
      for (Index i = 0; i < n_; ++i) {
        if (!coeffs_(src, i).is_zero()) out.coeffs_(r, i) += v(j) * coeffs_(src, i);
      }
    }
  }
  return out;
}

VecQ SymMultiMap::evaluate(const std::vector<VecQ>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw std::invalid_argument("evaluate: wrong number of arguments");
  if (degree_ == 1) {
    const VecQ& v = vectors[0];
    if (v.size() != n_) throw std::invalid_argument("evaluate: dimension mismatch");
    VecQ out(n_);
    out.setZero();
    for (int j = 0; j < n_; ++j) {
      if (v(j).is_zero()) continue;
      for (Index i = 0; i < n_; ++i) out(i) += v(j) * coeffs_(j, i);
    }
    return out;
  }
  SymMultiMap reduced = contract(vectors[0]);
  std::vector<VecQ> rest(vectors.begin() + 1, vectors.end());
  return reduced.evaluate(rest);
}

MatQ SymMultiMap::slice(const MultiIndex& mu) const {
  if (static_cast<int>(mu.size()) != degree_ - 1)
    throw std::invalid_argument("slice: multiindex length must be degree-1");
  MatQ e(n_, n_);
  for (int j = 0; j < n_; ++j) {
    const Index src = multiindex_rank_with(mu, j);
    for (Index i = 0; i < n_; ++i) e(i, j) = coeffs_(src, i);
  }
  return e;
}

VecQ SymMultiMap::to_flat() const {
  VecQ flat(coeffs_.rows() * n_);
  for (Index r = 0; r < coeffs_.rows(); ++r)
    for (Index i = 0; i < n_; ++i) flat(r * n_ + i) = coeffs_(r, i);
  return flat;
}

SymMultiMap SymMultiMap::from_flat(int n, int degree, const VecQ& flat) {
  SymMultiMap a(n, degree);
  if (flat.size() != a.coeffs_.rows() * n)
    throw std::invalid_argument("from_flat: size mismatch");
  for (Index r = 0; r < a.coeffs_.rows(); ++r)
    for (Index i = 0; i < n; ++i) a.coeffs_(r, i) = flat(r * n + i);
  return a;
}

Index sym_multimap_flat_size(int n, int degree) {
  return static_cast<Index>(sym_dim(n, degree)) * n;
}

namespace {

// Fill all coefficients with sorted prefix `prefix` (already contracted into
// `partial`), choosing the remaining indices >= min_j.
void transform_rec(const SymMultiMap& partial, const std::vector<VecQ>& u,
                   MultiIndex& prefix, int min_j, const MatQ& p, SymMultiMap& out) {
  const int n = partial.n();
  if (partial.degree() == 1) {
    for (int j = min_j; j < n; ++j) {
      VecQ w = partial.evaluate({u[static_cast<size_t>(j)]});
      VecQ pw(n);
      pw.setZero();
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
          if (!p(r, c).is_zero() && !w(c).is_zero()) pw(r) += p(r, c) * w(c);
      prefix.push_back(j);
      const Index rank = multiindex_rank(prefix);
      prefix.pop_back();
      for (Index i = 0; i < n; ++i) out.coeff(rank, i) = pw(i);
    }
    return;
  }
  for (int j = min_j; j < n; ++j) {
    SymMultiMap next = partial.contract(u[static_cast<size_t>(j)]);
    prefix.push_back(j);
    transform_rec(next, u, prefix, j, p, out);
    prefix.pop_back();
  }
}

}  // namespace

SymMultiMap transform(const SymMultiMap& a, const MatQ& p, const MatQ& p_inv) {
  const int n = a.n();
  if (p.rows() != n || p.cols() != n || p_inv.rows() != n || p_inv.cols() != n)
    throw std::invalid_argument("transform: shape mismatch");
  std::vector<VecQ> u;
  u.reserve(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) u.push_back(p_inv.col(j));
  SymMultiMap out(n, a.degree());
  MultiIndex prefix;
  transform_rec(a, u, prefix, 0, p, out);
  return out;
}

}  // namespace prolab
