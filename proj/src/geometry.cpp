#include "prolab/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "prolab/rng.hpp"

namespace prolab {

Subspace cone_aut(const QuadraticIdeal& ideal) {
  const Index n = ideal.n();
  const Index r = ideal.dim();
  if (r == 0) {
    if (n > 12)
      throw std::invalid_argument("cone_aut: empty ideal on a large ambient space");
    return Subspace::full(n * n);
  }
  // Unknowns: X (n^2 entries) plus multipliers mu_{f,j} expressing
  // X^T Q_f + Q_f X = sum_j mu_{f,j} Q_j. The multipliers are determined by
  // X, so projecting the kernel to the X block is injective.
  const Index unknowns = n * n + r * r;
  const Index sym = static_cast<Index>(sym_dim(static_cast<int>(n), 2));
  SparseMatQ sys(r * sym, unknowns);
  Index row = 0;
  for (Index f = 0; f < r; ++f) {
    const MatQ& q = ideal.forms()[static_cast<size_t>(f)].matrix();
    for (Index a = 0; a < n; ++a) {
      for (Index b = a; b < n; ++b, ++row) {
        SparseMatQ::Row entries;
        // (X^T Q + Q X)_{ab} = sum_i X_ia Q_ib + Q_ai X_ib
        for (Index i = 0; i < n; ++i) {
          if (!q(i, b).is_zero()) entries.push_back({i * n + a, q(i, b)});
          if (!q(a, i).is_zero()) entries.push_back({i * n + b, q(a, i)});
        }
        for (Index j = 0; j < r; ++j) {
          const Rational& c = ideal.forms()[static_cast<size_t>(j)].matrix()(a, b);
          if (!c.is_zero()) entries.push_back({n * n + f * r + j, -c});
        }
        sys.set_row(row, std::move(entries));
      }
    }
  }
  const MatQ ker = sparse_system_kernel(sys);
  MatQ x_part(ker.rows(), n * n);
  for (Index i = 0; i < ker.rows(); ++i)
    for (Index j = 0; j < n * n; ++j) x_part(i, j) = ker(i, j);
  return Subspace::span(n * n, x_part);
}

Subspace tangent_space(const QuadraticIdeal& ideal, const VecQ& alpha) {
  const Index n = ideal.n();
  if (alpha.size() != n) throw std::invalid_argument("tangent_space: dimension mismatch");
  for (const auto& q : ideal.forms())
    if (!q.eval(alpha).is_zero())
      throw std::domain_error("tangent_space: point is off the cone");
  MatQ rows(ideal.dim(), n);
  for (Index f = 0; f < ideal.dim(); ++f)
    rows.row(f) = ideal.forms()[static_cast<size_t>(f)].polar_row(alpha);
  return Subspace::from_rref(n, kernel(rows));
}

SecantReport terracini_secant_dim(const VarietyPresentation& v, int trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("terracini_secant_dim: trials >= 1");
  SecantReport rep;
  std::uint64_t index = 0;
  for (int t = 0; t < trials; ++t) {
    // Draw an independent pair; a repeated or proportional draw says nothing
    // about the secant, so it is skipped (deterministically).
    VecQ a, b;
    for (int attempt = 0; attempt < 64; ++attempt) {
      a = v.sampler(seed, index++);
      b = v.sampler(seed, index++);
      MatQ pair(2, v.ambient);
      pair.row(0) = a.transpose();
      pair.row(1) = b.transpose();
      if (rank(pair) == 2) break;
    }
    const Subspace ta = tangent_space(v.quadrics, a);
    const Subspace tb = tangent_space(v.quadrics, b);
    rep.trial_dims.push_back(ta.sum(tb).dim() - 1);
  }
  rep.dim = *std::max_element(rep.trial_dims.begin(), rep.trial_dims.end());
  rep.certified =
      std::count(rep.trial_dims.begin(), rep.trial_dims.end(), rep.dim) >= 2;
  return rep;
}

VmrtReport vmrt_dimension(const VarietyPresentation& v, int draws, std::uint64_t seed) {
  VmrtReport rep;
  if (!v.line_sampler) return rep;  // no known line family
  for (int d = 0; d < draws; ++d) {
    auto pair = v.line_sampler(seed, static_cast<std::uint64_t>(d));
    if (!pair) continue;
    const VecQ& alpha = pair->first;
    const VecQ& beta = pair->second;
    // C = S^ cap T_alpha(S^) is the union of lines through [alpha]; its
    // tangent space at beta is cut by B_q(beta, .) and B_q(alpha, .).
    MatQ rows(2 * v.quadrics.dim(), v.ambient);
    for (Index f = 0; f < v.quadrics.dim(); ++f) {
      rows.row(2 * f) = v.quadrics.forms()[static_cast<size_t>(f)].polar_row(beta);
      rows.row(2 * f + 1) = v.quadrics.forms()[static_cast<size_t>(f)].polar_row(alpha);
    }
    const Index tangent_dim = v.ambient - rank(rows);
    rep.has_lines = true;
    rep.dim = std::max(rep.dim, tangent_dim - 2);
    ++rep.draws_used;
  }
  return rep;
}

KilledProlongation kill_prolongation(const std::vector<SymMultiMap>& g1,
                                     const Subspace& l) {
  KilledProlongation out;
  if (g1.empty()) return out;
  const int n = g1[0].n();
  if (g1[0].degree() != 2)
    throw std::invalid_argument("kill_prolongation: expects a first prolongation");
  if (l.ambient_dim() != n)
    throw std::invalid_argument("kill_prolongation: L lives in the wrong space");
  const Index d = static_cast<Index>(g1.size());
  // Constraints sum_t x_t B_t(l, e_j) = 0 for every basis l of L and j.
  MatQ sys(l.dim() * n * n, d);
  sys.setZero();
  for (Index li = 0; li < l.dim(); ++li) {
    const VecQ lv = l.basis().row(li).transpose();
    for (Index t = 0; t < d; ++t) {
      const SymMultiMap contracted = g1[static_cast<size_t>(t)].contract(lv);
      for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
          sys((li * n + j) * n + i, t) = contracted.coeff(j, i);
    }
  }
  const MatQ ker = kernel(sys);
  out.dim = ker.rows();
  for (Index r = 0; r < ker.rows(); ++r) {
    VecQ flat(sym_multimap_flat_size(n, 2));
    flat.setZero();
    for (Index t = 0; t < d; ++t) {
      if (ker(r, t).is_zero()) continue;
      flat += g1[static_cast<size_t>(t)].to_flat() * ker(r, t);
    }
    out.basis.push_back(SymMultiMap::from_flat(n, 2, flat));
  }
  return out;
}

Subspace stabilizer(const Subspace& g, const Subspace& l) {
  const Index n = l.ambient_dim();
  const MatQ proj = quotient_projector(l);
  const Index d = g.dim();
  MatQ sys(l.dim() * proj.rows(), d);
  sys.setZero();
  for (Index li = 0; li < l.dim(); ++li) {
    const VecQ lv = l.basis().row(li).transpose();
    for (Index t = 0; t < d; ++t) {
      // X_t l, then project modulo L.
      VecQ xl(n);
      xl.setZero();
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          const Rational& c = g.basis()(t, i * n + j);
          if (!c.is_zero() && !lv(j).is_zero()) xl(i) += c * lv(j);
        }
      for (Index pr = 0; pr < proj.rows(); ++pr) {
        Rational acc(0);
        for (Index i = 0; i < n; ++i)
          if (!proj(pr, i).is_zero() && !xl(i).is_zero()) acc += proj(pr, i) * xl(i);
        sys(li * proj.rows() + pr, t) = acc;
      }
    }
  }
  const MatQ ker = kernel(sys);
  MatQ rows(ker.rows(), g.ambient_dim());
  rows.setZero();
  for (Index r = 0; r < ker.rows(); ++r)
    for (Index t = 0; t < d; ++t) {
      if (ker(r, t).is_zero()) continue;
      for (Index c = 0; c < g.ambient_dim(); ++c)
        if (!g.basis()(t, c).is_zero()) rows(r, c) += ker(r, t) * g.basis()(t, c);
    }
  return Subspace::span(g.ambient_dim(), rows);
}

Subspace killer(const Subspace& g, const Subspace& l) {
  const Index n = l.ambient_dim();
  const Index d = g.dim();
  MatQ sys(l.dim() * n, d);
  sys.setZero();
  for (Index li = 0; li < l.dim(); ++li) {
    const VecQ lv = l.basis().row(li).transpose();
    for (Index t = 0; t < d; ++t) {
      for (Index i = 0; i < n; ++i) {
        Rational acc(0);
        for (Index j = 0; j < n; ++j) {
          const Rational& c = g.basis()(t, i * n + j);
          if (!c.is_zero() && !lv(j).is_zero()) acc += c * lv(j);
        }
        sys(li * n + i, t) = acc;
      }
    }
  }
  const MatQ ker = kernel(sys);
  MatQ rows(ker.rows(), g.ambient_dim());
  rows.setZero();
  for (Index r = 0; r < ker.rows(); ++r)
    for (Index t = 0; t < d; ++t) {
      if (ker(r, t).is_zero()) continue;
      for (Index c = 0; c < g.ambient_dim(); ++c)
        if (!g.basis()(t, c).is_zero()) rows(r, c) += ker(r, t) * g.basis()(t, c);
    }
  return Subspace::span(g.ambient_dim(), rows);
}

LambdaReport lambda_of(const SymMultiMap& a, const MatQ& samples,
                       const QuadraticIdeal* ideal, int tangent_checks,
                       std::uint64_t seed) {
  LambdaReport rep;
  const int n = a.n();
  if (a.degree() != 2) throw std::invalid_argument("lambda_of: expects degree 2");
  if (samples.cols() != n) throw std::invalid_argument("lambda_of: sample dimension");

  // A(alpha, alpha) = c_alpha * alpha on every sample, exactly.
  MatQ sys(samples.rows(), n + 1);  // lambda plus one rhs column per sample
  std::vector<Rational> cs(static_cast<size_t>(samples.rows()));
  for (Index s = 0; s < samples.rows(); ++s) {
    const VecQ alpha = samples.row(s).transpose();
    const VecQ w = a.evaluate({alpha, alpha});
    Index anchor = -1;
    for (Index i = 0; i < n; ++i)
      if (!alpha(i).is_zero()) {
        anchor = i;
        break;
      }
    if (anchor < 0) continue;
    const Rational c = w(anchor) / alpha(anchor);
    for (Index i = 0; i < n; ++i) {
      if (w(i) != c * alpha(i)) {
        rep.diagnostic = "A(a, a) not proportional to a at sample " + std::to_string(s);
        return rep;
      }
    }
    cs[static_cast<size_t>(s)] = c;
  }
  // Solve lambda(alpha_s) = c_s.
  MatQ lhs(samples.rows(), n);
  VecQ rhs(samples.rows());
  for (Index s = 0; s < samples.rows(); ++s) {
    lhs.row(s) = samples.row(s);
    rhs(s) = cs[static_cast<size_t>(s)];
  }
  VecQ lambda = solve(lhs, rhs);
  if (lambda.size() == 0) {
    rep.diagnostic = "no covector matches the eigenvalues (embedding not linearly normal?)";
    return rep;
  }
  rep.lambda = lambda;

  if (ideal) {
    Rng rng(hash_combine(seed, 0x1a3bda));
    for (int t = 0; t < tangent_checks; ++t) {
      const Index s = static_cast<Index>(rng.below(static_cast<std::uint64_t>(samples.rows())));
      const VecQ alpha = samples.row(s).transpose();
      const Subspace tan = tangent_space(*ideal, alpha);
      VecQ ap(n);
      ap.setZero();
      for (Index r = 0; r < tan.dim(); ++r) {
        const Rational c = rng.small_int(5);
        if (c.is_zero()) continue;
        for (Index i = 0; i < n; ++i)
          if (!tan.basis()(r, i).is_zero()) ap(i) += c * tan.basis()(r, i);
      }
      // lambda(a) a' + lambda(a') a = 2 A(a, a')
      Rational la(0), lap(0);
      for (Index i = 0; i < n; ++i) {
        if (!lambda(i).is_zero()) {
          la += lambda(i) * alpha(i);
          lap += lambda(i) * ap(i);
        }
      }
      const VecQ lhs_vec = ap * la + alpha * lap;
      const VecQ rhs_vec = a.evaluate({alpha, ap}) * Rational(2);
      for (Index i = 0; i < n; ++i) {
        if (lhs_vec(i) != rhs_vec(i)) {
          rep.diagnostic = "tangent identity failed at check " + std::to_string(t);
          return rep;
        }
      }
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace prolab
