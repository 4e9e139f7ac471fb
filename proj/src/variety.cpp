#include "prolab/variety.hpp"

#include <set>
#include <stdexcept>

#include "prolab/rng.hpp"

namespace prolab {

MatQ sample_points(const VarietyPresentation& v, Index count, std::uint64_t seed,
                   bool check_spanning) {
  if (!v.sampler) throw std::runtime_error(v.name + ": no sampler available");
  MatQ pts(count, v.ambient);
  std::set<std::string> seen;
  Index got = 0;
  std::uint64_t index = 0;
  const std::uint64_t limit = static_cast<std::uint64_t>(count) * 64 + 256;
  while (got < count && index < limit) {
    VecQ p = v.sampler(seed, index++);
    if (p.size() != v.ambient)
      throw std::runtime_error(v.name + ": sampler returned wrong dimension");
    bool zero = true;
    std::string key;
    for (Index i = 0; i < p.size(); ++i) {
      if (!p(i).is_zero()) zero = false;
      key += p(i).str();
      key += ',';
    }
    if (zero || !seen.insert(key).second) continue;
    for (const auto& q : v.quadrics.forms()) {
      if (!q.eval(p).is_zero())
        throw std::runtime_error(v.name + ": sampled point off the cone (index " +
                                 std::to_string(index - 1) + ")");
    }
    pts.row(got++) = p.transpose();
  }
  if (got < count)
    throw std::runtime_error(v.name + ": sampler exhausted after " +
                             std::to_string(index) + " draws (" +
                             std::to_string(got) + "/" + std::to_string(count) + ")");
  if (check_spanning && count >= v.ambient) {
    if (rank(pts) != v.ambient)
      throw std::runtime_error(v.name + ": sampled points do not span the ambient space");
  }
  return pts;
}

QuadraticIdeal quadrics_from_samples(const Sampler& sampler, Index n, Index count,
                                     std::uint64_t seed) {
  if (!sampler) throw std::runtime_error("quadrics_from_samples: no sampler");
  const Index cols = static_cast<Index>(sym_dim(static_cast<int>(n), 2));
  MatQ eval(count, cols);
  eval.setZero();
  std::set<std::string> seen;
  Index got = 0;
  std::uint64_t index = 0;
  const std::uint64_t limit = static_cast<std::uint64_t>(count) * 64 + 256;
  while (got < count && index < limit) {
    VecQ p = sampler(seed, index++);
    bool zero = true;
    std::string key;
    for (Index i = 0; i < p.size(); ++i) {
      if (!p(i).is_zero()) zero = false;
      key += p(i).str();
      key += ',';
    }
    if (zero || !seen.insert(key).second) continue;
    // Column (i, j), i <= j holds the value of the symmetric-matrix
    // coordinate: p_i^2 on the diagonal, 2 p_i p_j off it.
    for (Index i = 0; i < n; ++i) {
      if (p(i).is_zero()) continue;
      eval(got, multiindex_rank({static_cast<int>(i), static_cast<int>(i)})) =
          p(i) * p(i);
      for (Index j = i + 1; j < n; ++j) {
        if (p(j).is_zero()) continue;
        eval(got, multiindex_rank({static_cast<int>(i), static_cast<int>(j)})) =
            Rational(2) * p(i) * p(j);
      }
    }
    ++got;
  }
  if (got < count)
    throw std::runtime_error("quadrics_from_samples: sampler exhausted");
  MatQ ker = kernel(eval);
  std::vector<QuadraticForm> forms;
  forms.reserve(static_cast<size_t>(ker.rows()));
  for (Index r = 0; r < ker.rows(); ++r)
    forms.push_back(QuadraticForm::from_sym_coords(n, ker.row(r).transpose()));
  return QuadraticIdeal(n, forms);
}

RowVecQ random_covector_through(const VecQ& base, Index n, std::uint64_t seed) {
  Rng rng(hash_combine(seed, 0xc0feec0feeull));
  for (int attempt = 0; attempt < 64; ++attempt) {
    RowVecQ l(n);
    for (Index i = 0; i < n; ++i) l(i) = rng.small_int(7);
    // Correct the value at one coordinate where base is nonzero.
    Rational val(0);
    for (Index i = 0; i < n; ++i) val += l(i) * base(i);
    Index anchor = -1;
    for (Index i = 0; i < n; ++i)
      if (!base(i).is_zero()) {
        anchor = i;
        break;
      }
    if (anchor < 0) throw std::invalid_argument("random_covector_through: zero base point");
    l(anchor) -= val / base(anchor);
    bool nonzero = false;
    for (Index i = 0; i < n; ++i)
      if (!l(i).is_zero()) nonzero = true;
    if (nonzero) return l;
  }
  throw std::runtime_error("random_covector_through: failed to draw a covector");
}

SectionCoords section_coords(const RowVecQ& lambda) {
  MatQ row(1, lambda.cols());
  row.row(0) = lambda;
  SectionCoords sc;
  sc.basis = kernel(row);
  for (Index r = 0; r < sc.basis.rows(); ++r) {
    for (Index c = 0; c < sc.basis.cols(); ++c) {
      if (!sc.basis(r, c).is_zero()) {
        sc.pivots.push_back(c);
        break;
      }
    }
  }
  return sc;
}

VecQ SectionCoords::to_section(const VecQ& ambient_point) const {
  // RREF pivots: the coordinate in the basis is the value at the pivot column.
  VecQ y(basis.rows());
  for (Index r = 0; r < basis.rows(); ++r) y(r) = ambient_point(pivots[static_cast<size_t>(r)]);
  // Consistency: the reconstruction must reproduce the point exactly.
  VecQ back = to_parent(y);
  for (Index i = 0; i < ambient_point.size(); ++i)
    if (back(i) != ambient_point(i))
      throw std::domain_error("SectionCoords: point not on the hyperplane");
  return y;
}

VecQ SectionCoords::to_parent(const VecQ& section_point) const {
  VecQ p(basis.cols());
  p.setZero();
  for (Index r = 0; r < basis.rows(); ++r) {
    if (section_point(r).is_zero()) continue;
    for (Index c = 0; c < basis.cols(); ++c)
      if (!basis(r, c).is_zero()) p(c) += section_point(r) * basis(r, c);
  }
  return p;
}

VarietyPresentation hyperplane_section(const VarietyPresentation& parent,
                                       const RowVecQ& lambda, std::string name) {
  if (lambda.cols() != parent.ambient)
    throw std::invalid_argument("hyperplane_section: covector dimension mismatch");
  bool lambda_zero = true;
  for (Index i = 0; i < lambda.cols(); ++i)
    if (!lambda(i).is_zero()) lambda_zero = false;
  if (lambda_zero) throw std::invalid_argument("hyperplane_section: lambda = 0");
  {
    Rational at_base(0);
    for (Index i = 0; i < parent.ambient; ++i) at_base += lambda(i) * parent.base_point(i);
    if (!at_base.is_zero())
      throw std::invalid_argument("hyperplane_section: lambda(base_point) != 0");
  }
  if (!parent.section_sampler)
    throw std::runtime_error(parent.name + ": no section sampler for this family");

  // Guard against a covector vanishing on the whole cone.
  {
    MatQ probe = sample_points(parent, std::min<Index>(parent.ambient + 4, 40), 17,
                               /*check_spanning=*/false);
    bool nonzero_somewhere = false;
    for (Index r = 0; r < probe.rows() && !nonzero_somewhere; ++r) {
      Rational val(0);
      for (Index c = 0; c < parent.ambient; ++c) val += lambda(c) * probe(r, c);
      if (!val.is_zero()) nonzero_somewhere = true;
    }
    if (!nonzero_somewhere)
      throw std::invalid_argument("hyperplane_section: lambda vanishes on the cone");
  }

  SectionCoords sc = section_coords(lambda);
  VarietyPresentation out;
  out.name = std::move(name);
  out.ambient = sc.basis.rows();
  out.quadrics = parent.quadrics.restrict_to(sc.basis);
  out.base_point = sc.to_section(parent.base_point);

  Sampler parent_space = parent.section_sampler(lambda);
  out.sampler = [parent_space, sc](std::uint64_t seed, std::uint64_t index) {
    return sc.to_section(parent_space(seed, index));
  };
  if (parent.section_line_sampler) {
    LinePairSampler parent_lines = parent.section_line_sampler(lambda);
    out.line_sampler = [parent_lines, sc](std::uint64_t seed, std::uint64_t index)
        -> std::optional<std::pair<VecQ, VecQ>> {
      auto pair = parent_lines(seed, index);
      if (!pair) return std::nullopt;
      return std::make_pair(sc.to_section(pair->first), sc.to_section(pair->second));
    };
  }
  return out;
}

}  // namespace prolab
