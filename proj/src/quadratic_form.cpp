#include "prolab/quadratic_form.hpp"

#include <stdexcept>

namespace prolab {

QuadraticForm::QuadraticForm(MatQ q) : q_(std::move(q)) {
  if (q_.rows() != q_.cols())
    throw std::invalid_argument("QuadraticForm: matrix not square");
  for (Index i = 0; i < q_.rows(); ++i)
    for (Index j = i + 1; j < q_.cols(); ++j)
      if (q_(i, j) != q_(j, i))
        throw std::invalid_argument("QuadraticForm: matrix not symmetric");
}

Rational QuadraticForm::eval(const VecQ& v) const { return polar(v, v); }

Rational QuadraticForm::polar(const VecQ& u, const VecQ& v) const {
  if (u.size() != n() || v.size() != n())
    throw std::invalid_argument("QuadraticForm: dimension mismatch");
  Rational acc(0);
  for (Index i = 0; i < n(); ++i) {
    if (u(i).is_zero()) continue;
    Rational row(0);
    for (Index j = 0; j < n(); ++j)
      if (!q_(i, j).is_zero() && !v(j).is_zero()) row += q_(i, j) * v(j);
    acc += u(i) * row;
  }
  return acc;
}

RowVecQ QuadraticForm::polar_row(const VecQ& alpha) const {
  if (alpha.size() != n())
    throw std::invalid_argument("QuadraticForm: dimension mismatch");
  RowVecQ row(n());
  row.setZero();
  for (Index j = 0; j < n(); ++j)
    for (Index i = 0; i < n(); ++i)
      if (!alpha(i).is_zero() && !q_(i, j).is_zero()) row(j) += alpha(i) * q_(i, j);
  return row;
}

VecQ QuadraticForm::sym_coords() const {
  const Index m = static_cast<Index>(sym_dim(static_cast<int>(n()), 2));
  VecQ out(m);
  out.setZero();
  for (Index i = 0; i < n(); ++i)
    for (Index j = i; j < n(); ++j)
      out(multiindex_rank({static_cast<int>(i), static_cast<int>(j)})) = q_(i, j);
  return out;
}

QuadraticForm QuadraticForm::from_sym_coords(Index n, const VecQ& coords) {
  MatQ q(n, n);
  q.setZero();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const Rational& v = coords(multiindex_rank({static_cast<int>(i), static_cast<int>(j)}));
      q(i, j) = v;
      q(j, i) = v;
    }
  return QuadraticForm(q);
}

QuadraticIdeal::QuadraticIdeal(Index n, const std::vector<QuadraticForm>& generators)
    : n_(n) {
  const Index m = static_cast<Index>(sym_dim(static_cast<int>(n), 2));
  MatQ rows(static_cast<Index>(generators.size()), m);
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].n() != n)
      throw std::invalid_argument("QuadraticIdeal: generator dimension mismatch");
    rows.row(static_cast<Index>(g)) = generators[g].sym_coords().transpose();
  }
  space_ = Subspace::span(m, rows);
  forms_.reserve(static_cast<size_t>(space_.dim()));
  for (Index r = 0; r < space_.dim(); ++r)
    forms_.push_back(QuadraticForm::from_sym_coords(n, space_.basis().row(r).transpose()));
}

QuadraticIdeal QuadraticIdeal::restrict_to(const MatQ& basis) const {
  if (basis.cols() != n_)
    throw std::invalid_argument("restrict_to: ambient mismatch");
  std::vector<QuadraticForm> restricted;
  restricted.reserve(forms_.size());
  for (const auto& f : forms_) {
    MatQ q = basis * f.matrix() * basis.transpose();
    restricted.emplace_back(std::move(q));
  }
  return QuadraticIdeal(basis.rows(), restricted);
}

}  // namespace prolab
