#ifndef PROLAB_QUADRATIC_FORM_HPP
#define PROLAB_QUADRATIC_FORM_HPP

#include <vector>

#include "prolab/multiindex.hpp"
#include "prolab/subspace.hpp"

namespace prolab {

/// Quadratic form q(v) = v^T Q v with Q symmetric.
class QuadraticForm {
 public:
  explicit QuadraticForm(MatQ q);

  Index n() const { return q_.rows(); }
  const MatQ& matrix() const { return q_; }

  Rational eval(const VecQ& v) const;
  /// Polarization B_q(u, v) = u^T Q v.
  Rational polar(const VecQ& u, const VecQ& v) const;
  /// Gradient row B_q(alpha, .) as a covector.
  RowVecQ polar_row(const VecQ& alpha) const;

  /// Coordinates in Sym^2 V*: entry (i, j), i <= j, at the rank of the
  /// length-2 multiindex (i, j). Off-diagonal matrix entries stored once.
  VecQ sym_coords() const;
  static QuadraticForm from_sym_coords(Index n, const VecQ& coords);

 private:
  MatQ q_;
};

/// The degree-2 part of a cone's ideal: a canonical subspace of Sym^2 V*
/// together with the forms regenerated from its RREF basis.
class QuadraticIdeal {
 public:
  QuadraticIdeal() = default;
  QuadraticIdeal(Index n, const std::vector<QuadraticForm>& generators);

  Index n() const { return n_; }
  Index dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }
  const std::vector<QuadraticForm>& forms() const { return forms_; }

  /// Restriction to the subspace spanned by the rows of `basis`
  /// (forms pulled back along the inclusion).
  QuadraticIdeal restrict_to(const MatQ& basis) const;

  friend bool operator==(const QuadraticIdeal& a, const QuadraticIdeal& b) {
    return a.n_ == b.n_ && a.space_ == b.space_;
  }

 private:
  Index n_ = 0;
  Subspace space_;                    // in Sym^2 V* coordinates
  std::vector<QuadraticForm> forms_;  // canonical generators
};

}  // namespace prolab

#endif  // PROLAB_QUADRATIC_FORM_HPP
