#ifndef PROLAB_SUBSPACE_HPP
#define PROLAB_SUBSPACE_HPP

#include <vector>

#include "prolab/matrix.hpp"

namespace prolab {

/// A linear subspace of Q^ambient, stored as a row-reduced (RREF) basis.
/// The representation is canonical: two equal subspaces compare bit-equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Index ambient) { return Subspace(ambient, MatQ(0, ambient)); }
  static Subspace full(Index ambient) { return Subspace(ambient, identity_q(ambient)); }
  /// Span of the rows of `spanning` (need not be independent).
  static Subspace span(Index ambient, const MatQ& spanning);
  /// Adopt a matrix already known to be in RREF with independent rows.
  static Subspace from_rref(Index ambient, MatQ rref_basis);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatQ& basis() const { return basis_; }

  bool contains(const VecQ& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {f in (Q^ambient)* : f(v) = 0 for all v in this}, in dual coordinates.
  Subspace annihilator() const;

  /// Coordinates of v in this basis; throws when v is outside the subspace.
  VecQ coordinates(const VecQ& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.basis_.rows() != b.basis_.rows()) return false;
    for (Index i = 0; i < a.basis_.rows(); ++i)
      for (Index j = 0; j < a.basis_.cols(); ++j)
        if (a.basis_(i, j) != b.basis_(i, j)) return false;
    return true;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Index ambient, MatQ basis) : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_ = 0;
  MatQ basis_;  // dim x ambient, RREF
};

/// Matrix whose kernel is exactly `s`; rows = ambient - dim(s).
/// Rows are the canonical annihilator basis.
MatQ quotient_projector(const Subspace& s);

}  // namespace prolab

#endif  // PROLAB_SUBSPACE_HPP
