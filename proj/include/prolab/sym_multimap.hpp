#ifndef PROLAB_SYM_MULTIMAP_HPP
#define PROLAB_SYM_MULTIMAP_HPP

#include <vector>

#include "prolab/multiindex.hpp"

namespace prolab {

/// A symmetric multilinear map A: Sym^degree(V) -> V on V = Q^n, stored by
/// basis values: coeff(mu, i) is the i-th coordinate of A(e_mu1, ..., e_mud).
/// Storing values (not polynomial coefficients) keeps multinomial factors out
/// of every formula.
class SymMultiMap {
 public:
  SymMultiMap(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  Index coeff_rows() const { return coeffs_.rows(); }

  const Rational& coeff(Index mu_rank, Index i) const { return coeffs_(mu_rank, i); }
  Rational& coeff(Index mu_rank, Index i) { return coeffs_(mu_rank, i); }
  const MatQ& coeffs() const { return coeffs_; }

  /// Contraction A(v, ., ..., .): a symmetric map of one degree lower.
  SymMultiMap contract(const VecQ& v) const;

  /// Full evaluation; vectors.size() must equal degree.
  VecQ evaluate(const std::vector<VecQ>& vectors) const;

  /// The endomorphism A_{e_mu}: V -> V for a length (degree-1) multiindex.
  MatQ slice(const MultiIndex& mu) const;

  /// Flat coefficient vector, index = mu_rank * n + i.
  VecQ to_flat() const;
  static SymMultiMap from_flat(int n, int degree, const VecQ& flat);

  bool is_zero() const { return prolab::is_zero(coeffs_); }

 private:
  int n_, degree_;
  MatQ coeffs_;  // sym_dim(n, degree) x n
};

/// Flat length of the coefficient space for given shape.
Index sym_multimap_flat_size(int n, int degree);

/// Conjugated map (P.A)(v1, ..., vd) = P A(P^{-1} v1, ..., P^{-1} vd).
SymMultiMap transform(const SymMultiMap& a, const MatQ& p, const MatQ& p_inv);

}  // namespace prolab

#endif  // PROLAB_SYM_MULTIMAP_HPP
