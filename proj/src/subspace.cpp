#include "prolab/subspace.hpp"

#include <stdexcept>

namespace prolab {

Subspace Subspace::span(Index ambient, const MatQ& spanning) {
  if (spanning.cols() != ambient)
    throw std::invalid_argument("Subspace::span: column count != ambient dim");
  return Subspace(ambient, row_space(spanning));
}

Subspace Subspace::from_rref(Index ambient, MatQ rref_basis) {
  return Subspace(ambient, std::move(rref_basis));
}

bool Subspace::contains(const VecQ& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  // Reduce v against the RREF basis; zero remainder <=> membership.
  VecQ w = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    Index lead = -1;
    for (Index j = 0; j < ambient_; ++j) {
      if (!basis_(i, j).is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    if (w(lead).is_zero()) continue;
    const Rational f = w(lead);  // pivot entry is 1
    for (Index j = lead; j < ambient_; ++j) w(j) -= f * basis_(i, j);
  }
  for (Index j = 0; j < ambient_; ++j)
    if (!w(j).is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("contains: ambient mismatch");
  for (Index i = 0; i < other.basis_.rows(); ++i) {
    VecQ r = other.basis_.row(i).transpose();
    if (!contains(r)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("sum: ambient mismatch");
  MatQ stacked(basis_.rows() + other.basis_.rows(), ambient_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.bottomRows(other.basis_.rows()) = other.basis_;
  return span(ambient_, stacked);
}

Subspace Subspace::annihilator() const {
  if (basis_.rows() == 0) return full(ambient_);
  return Subspace(ambient_, kernel(basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("intersect: ambient mismatch");
  return annihilator().sum(other.annihilator()).annihilator();
}

VecQ Subspace::coordinates(const VecQ& v) const {
  MatQ sys = basis_.transpose();
  VecQ x = solve(sys, v);
  if (x.size() == 0) throw std::domain_error("coordinates: vector not in subspace");
  return x;
}

MatQ quotient_projector(const Subspace& s) { return s.annihilator().basis(); }

}  // namespace prolab
