#include "prolab/prolongation.hpp"

#include <cmath>
#include <stdexcept>

#include "prolab/modp.hpp"

namespace prolab {

namespace {

int side_of_end_space(Index ambient) {
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(ambient))));
  if (static_cast<Index>(n) * n != ambient)
    throw std::invalid_argument("prolong: ambient dim is not a square (need End(V))");
  return n;
}

std::vector<SymMultiMap> maps_from_kernel(const MatQ& kernel_rows, int n, int degree) {
  std::vector<SymMultiMap> out;
  out.reserve(static_cast<size_t>(kernel_rows.rows()));
  for (Index r = 0; r < kernel_rows.rows(); ++r)
    out.push_back(SymMultiMap::from_flat(n, degree, kernel_rows.row(r).transpose()));
  return out;
}

// g-basis as degree-1 maps (coeff(j, i) = X_ij), the base of the contraction
// ladder.
std::vector<SymMultiMap> degree1_basis(const Subspace& g, int n) {
  std::vector<SymMultiMap> out;
  out.reserve(static_cast<size_t>(g.dim()));
  for (Index t = 0; t < g.dim(); ++t) {
    SymMultiMap a(n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.coeff(j, i) = g.basis()(t, i * n + j);
    out.push_back(std::move(a));
  }
  return out;
}

// Symmetry constraints for A in Hom(V, span(prev)) with prev of degree k:
// A(e_a)(e_b, rho) = A(e_b)(e_a, rho) for a < b and every length (k-1)
// multiindex rho. Unknown layout: x[a*d_prev + t].
SparseMatQ contraction_constraints(const std::vector<SymMultiMap>& prev, int n) {
  const int deg_prev = prev.empty() ? 1 : prev[0].degree();
  const Index d_prev = static_cast<Index>(prev.size());
  const Index rho_count = static_cast<Index>(sym_dim(n, deg_prev - 1));
  const Index rows = static_cast<Index>(binomial(n, 2)) * rho_count * n;
  SparseMatQ sys(rows, static_cast<Index>(n) * d_prev);
  Index row = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (Index rr = 0; rr < rho_count; ++rr) {
        const MultiIndex rho = multiindex_unrank(rr, n, deg_prev - 1);
        const Index rank_b = multiindex_rank_with(rho, b);
        const Index rank_a = multiindex_rank_with(rho, a);
        for (Index i = 0; i < n; ++i) {
          SparseMatQ::Row entries;
          for (Index t = 0; t < d_prev; ++t) {
            const Rational& va = prev[static_cast<size_t>(t)].coeff(rank_b, i);
            if (!va.is_zero()) entries.push_back({a * d_prev + t, va});
            const Rational& vb = prev[static_cast<size_t>(t)].coeff(rank_a, i);
            if (!vb.is_zero()) entries.push_back({b * d_prev + t, -vb});
          }
          sys.set_row(row++, std::move(entries));
        }
      }
    }
  }
  return sys;
}

// Rebuild degree (k+1) maps from contraction-form kernel vectors.
std::vector<SymMultiMap> maps_from_contraction(const MatQ& kernel_rows,
                                               const std::vector<SymMultiMap>& prev,
                                               int n) {
  const int deg_prev = prev.empty() ? 1 : prev[0].degree();
  const int deg_out = deg_prev + 1;
  const Index d_prev = static_cast<Index>(prev.size());
  std::vector<SymMultiMap> out;
  out.reserve(static_cast<size_t>(kernel_rows.rows()));
  const Index nu_count = static_cast<Index>(sym_dim(n, deg_out));
  for (Index r = 0; r < kernel_rows.rows(); ++r) {
    SymMultiMap a(n, deg_out);
    for (Index nu_rank = 0; nu_rank < nu_count; ++nu_rank) {
      MultiIndex nu = multiindex_unrank(nu_rank, n, deg_out);
      const int lead = nu.front();
      const MultiIndex rest(nu.begin() + 1, nu.end());
      const Index rest_rank = multiindex_rank(rest);
      for (Index i = 0; i < n; ++i) {
        Rational acc(0);
        for (Index t = 0; t < d_prev; ++t) {
          const Rational& x = kernel_rows(r, lead * d_prev + t);
          if (x.is_zero()) continue;
          const Rational& c = prev[static_cast<size_t>(t)].coeff(rest_rank, i);
          if (!c.is_zero()) acc += x * c;
        }
        a.coeff(nu_rank, i) = acc;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

// Canonicalize a list of maps: RREF of the flat coefficient rows.
std::vector<SymMultiMap> canonicalize(const std::vector<SymMultiMap>& maps, int n,
                                      int degree) {
  const Index flat = sym_multimap_flat_size(n, degree);
  MatQ rows(static_cast<Index>(maps.size()), flat);
  for (size_t m = 0; m < maps.size(); ++m)
    rows.row(static_cast<Index>(m)) = maps[m].to_flat().transpose();
  MatQ reduced = row_space(rows);
  return maps_from_kernel(reduced, n, degree);
}

struct FpBasis {
  Index d = 0;       // number of basis maps
  Index rows = 0;    // sym_dim(n, degree)
  int degree = 1;
  std::vector<std::uint64_t> c;  // [t][mu_rank * n + i]
  std::uint64_t at(Index t, Index mu_rank, Index i, int n) const {
    return c[static_cast<size_t>(t * rows * n + mu_rank * n + i)];
  }
};

FpBasis fp_degree1_basis(const Subspace& g, int n, std::uint64_t p) {
  FpBasis b;
  b.d = g.dim();
  b.rows = n;
  b.degree = 1;
  b.c.assign(static_cast<size_t>(b.d * n * n), 0);
  for (Index t = 0; t < b.d; ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational& v = g.basis()(t, i * n + j);
        if (!v.is_zero())
          b.c[static_cast<size_t>(t * n * n + j * n + i)] = v.mod_p(p);
      }
  return b;
}

// One contraction step mod p: returns the basis of the next prolongation.
FpBasis fp_contraction_step(const FpBasis& prev, int n, const FpContext& F,
                            std::pair<Index, Index>* shape) {
  const Index d_prev = prev.d;
  const Index rho_count = static_cast<Index>(sym_dim(n, prev.degree - 1));
  const Index rows = static_cast<Index>(binomial(n, 2)) * rho_count * n;
  const Index cols = static_cast<Index>(n) * d_prev;
  if (shape) *shape = {rows, cols};
  FpMat sys(rows, cols);
  Index row = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (Index rr = 0; rr < rho_count; ++rr) {
        const MultiIndex rho = multiindex_unrank(rr, n, prev.degree - 1);
        const Index rank_b = multiindex_rank_with(rho, b);
        const Index rank_a = multiindex_rank_with(rho, a);
        for (Index i = 0; i < n; ++i) {
          for (Index t = 0; t < d_prev; ++t) {
            const std::uint64_t va = prev.at(t, rank_b, i, n);
            if (va) sys.at(row, a * d_prev + t) = F.add(sys.at(row, a * d_prev + t), va);
            const std::uint64_t vb = prev.at(t, rank_a, i, n);
            if (vb)
              sys.at(row, b * d_prev + t) =
                  F.sub(sys.at(row, b * d_prev + t), vb);
          }
          ++row;
        }
      }
    }
  }
  FpMat ker = fp_kernel(std::move(sys), F);

  const int deg_out = prev.degree + 1;
  FpBasis out;
  out.d = ker.rows;
  out.rows = static_cast<Index>(sym_dim(n, deg_out));
  out.degree = deg_out;
  out.c.assign(static_cast<size_t>(out.d * out.rows * n), 0);
  for (Index r = 0; r < ker.rows; ++r) {
    for (Index nu_rank = 0; nu_rank < out.rows; ++nu_rank) {
      MultiIndex nu = multiindex_unrank(nu_rank, n, deg_out);
      const int lead = nu.front();
      const MultiIndex rest(nu.begin() + 1, nu.end());
      const Index rest_rank = multiindex_rank(rest);
      for (Index i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (Index t = 0; t < d_prev; ++t) {
          const std::uint64_t x = ker.at(r, lead * d_prev + t);
          if (!x) continue;
          const std::uint64_t c = prev.at(t, rest_rank, i, n);
          if (c) acc = F.add(acc, F.mul(x, c));
        }
        out.c[static_cast<size_t>(r * out.rows * n + nu_rank * n + i)] = acc;
      }
    }
  }
  return out;
}

MatQ exact_kernel_of(const SparseMatQ& sys) { return sparse_system_kernel(sys); }

}  // namespace

SparseMatQ prolongation_constraints(const Subspace& g, int k) {
  const int n = side_of_end_space(g.ambient_dim());
  const MatQ proj = quotient_projector(g);
  const Index mu_count = static_cast<Index>(sym_dim(n, k));
  const Index unknowns = static_cast<Index>(sym_dim(n, k + 1)) * n;
  SparseMatQ sys(mu_count * proj.rows(), unknowns);
  for (Index m = 0; m < mu_count; ++m) {
    const MultiIndex mu = multiindex_unrank(m, n, k);
    // Precompute the column block for each argument index j.
    std::vector<Index> nu_rank(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      nu_rank[static_cast<size_t>(j)] = multiindex_rank_with(mu, j);
    for (Index q = 0; q < proj.rows(); ++q) {
      SparseMatQ::Row entries;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Rational& c = proj(q, i * n + j);
          if (!c.is_zero())
            entries.push_back({nu_rank[static_cast<size_t>(j)] * n + i, c});
        }
      sys.set_row(m * proj.rows() + q, std::move(entries));
    }
  }
  return sys;
}

ProlongationResult prolong_direct(const Subspace& g, int k, const ProlongOptions& opts) {
  const int n = side_of_end_space(g.ambient_dim());
  if (k < 1) throw std::invalid_argument("prolong: need k >= 1");
  const Index unknowns = static_cast<Index>(sym_dim(n, k + 1)) * n;
  if (unknowns > opts.max_unknowns)
    throw std::domain_error("prolong: unknown count exceeds cap");

  ProlongationResult res;
  res.k = k;
  res.n = n;
  res.field = opts.field;
  res.seed = opts.seed;

  SparseMatQ sys = prolongation_constraints(g, k);
  res.constraint_shape = {sys.rows(), sys.cols()};

  if (opts.field == Field::modp) {
    res.prime = opts.prime ? opts.prime : random_prime_62(opts.seed);
    Index rank;
    const std::size_t entries = static_cast<std::size_t>(sys.rows()) *
                                static_cast<std::size_t>(sys.cols());
    if (entries > 100000 && sys.nnz() * 10 < entries) {
      rank = sparse_rank_mod_p(sys, res.prime);
    } else {
      FpMat m(sys.rows(), sys.cols());
      for (Index r = 0; r < sys.rows(); ++r)
        for (const auto& [c, v] : sys.row(r)) m.at(r, c) = v.mod_p(res.prime);
      rank = fp_rank(std::move(m), FpContext{res.prime});
    }
    res.dim = unknowns - rank;
    return res;
  }

  MatQ ker = exact_kernel_of(sys);
  res.dim = ker.rows();
  res.basis = maps_from_kernel(ker, n, k + 1);
  return res;
}

ProlongationResult prolong(const Subspace& g, int k, const ProlongOptions& opts) {
  const int n = side_of_end_space(g.ambient_dim());
  if (k < 1) throw std::invalid_argument("prolong: need k >= 1");
  const Index unknowns = static_cast<Index>(sym_dim(n, k + 1)) * n;
  if (unknowns > opts.max_unknowns)
    throw std::domain_error("prolong: unknown count exceeds cap");

  Route route = opts.route;
  if (route == Route::automatic) {
    if (k == 1 && unknowns <= opts.route_threshold)
      route = Route::direct;
    else
      route = Route::contracted;
  }
  if (route == Route::direct && k == 1) return prolong_direct(g, 1, opts);
  if (route == Route::direct) return prolong_direct(g, k, opts);

  ProlongationResult res;
  res.k = k;
  res.n = n;
  res.field = opts.field;
  res.seed = opts.seed;

  if (opts.field == Field::modp) {
    const std::uint64_t p = opts.prime ? opts.prime : random_prime_62(opts.seed);
    res.prime = p;
    const FpContext F{p};
    FpBasis basis = fp_degree1_basis(g, n, p);
    for (int step = 1; step <= k; ++step) {
      basis = fp_contraction_step(basis, n, F, &res.constraint_shape);
      if (basis.d == 0 && step < k) {
        // Zero prolongation propagates upward.
        res.dim = 0;
        return res;
      }
    }
    res.dim = basis.d;
    return res;
  }

  std::vector<SymMultiMap> prev = degree1_basis(g, n);
  for (int step = 1; step <= k; ++step) {
    if (prev.empty()) {
      res.dim = 0;
      res.constraint_shape = {0, 0};
      return res;
    }
    SparseMatQ sys = contraction_constraints(prev, n);
    res.constraint_shape = {sys.rows(), sys.cols()};
    MatQ ker = exact_kernel_of(sys);
    prev = canonicalize(maps_from_contraction(ker, prev, n), n,
                        prev[0].degree() + 1);
  }
  res.dim = static_cast<Index>(prev.size());
  res.basis = std::move(prev);
  return res;
}

std::optional<int> vanishing_order(const Subspace& g, int k_max,
                                   const ProlongOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("vanishing_order: need k_max >= 1");
  for (int k = 1; k < k_max; ++k) {
    if (prolong(g, k, opts).dim == 0) return k;
  }
  return std::nullopt;
}

Subspace conjugate(const Subspace& g, const MatQ& p) {
  const int n = side_of_end_space(g.ambient_dim());
  const MatQ p_inv = inverse(p);
  MatQ rows(g.dim(), g.ambient_dim());
  for (Index t = 0; t < g.dim(); ++t) {
    MatQ x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = g.basis()(t, i * n + j);
    MatQ y = p * x * p_inv;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows(t, i * n + j) = y(i, j);
  }
  return Subspace::span(g.ambient_dim(), rows);
}

Subspace span_of_maps(const std::vector<SymMultiMap>& maps, int n, int degree) {
  const Index flat = sym_multimap_flat_size(n, degree);
  MatQ rows(static_cast<Index>(maps.size()), flat);
  for (size_t m = 0; m < maps.size(); ++m)
    rows.row(static_cast<Index>(m)) = maps[m].to_flat().transpose();
  return Subspace::span(flat, rows);
}

}  // namespace prolab
