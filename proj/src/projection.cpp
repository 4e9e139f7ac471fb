#include "prolab/projection.hpp"

#include <stdexcept>

#include "prolab/rng.hpp"
#include "prolab/variety_zoo.hpp"

namespace prolab {

namespace {

Index sym_pair(int i, int j) {
  return multiindex_rank({i < j ? i : j, i < j ? j : i});
}

// phi as a matrix according to the type's coordinate model.
MatQ type1_matrix(const VecQ& phi, int a, int b) {  // a x b, map A->B is the transpose
  MatQ m(a, b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) m(i, j) = phi(i * b + j);
  return m;
}

MatQ type2_sharp(const VecQ& phi, int n) {  // skew n x n
  MatQ m(n, n);
  m.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = phi(alt_pair_rank(i, j));
      m(j, i) = -phi(alt_pair_rank(i, j));
    }
  return m;
}

MatQ type3_sharp(const VecQ& phi, int n) {  // symmetric n x n
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = phi(sym_pair(i, j));
  return m;
}

// U-coordinates of the Symp model: [0, km) the W (x) Q block (i*m + j),
// then Sym^2 W.
MatQ symp_wide(const VecQ& l2, int k, int m) {  // k x (k+m): [S | M]
  MatQ wide(k, k + m);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) wide(i, j) = l2(k * m + sym_pair(i, j));
    for (int j = 0; j < m; ++j) wide(i, k + j) = l2(i * m + j);
  }
  return wide;
}

// Lift of an element of U into Sym^2(W + Q) coordinates (Sym^2 Q block zero).
VecQ symp_lift(const VecQ& l2, int k, int m) {
  const int nn = k + m;
  VecQ out(static_cast<Index>(sym_dim(nn, 2)));
  out.setZero();
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) out(sym_pair(i, j)) = l2(k * m + sym_pair(i, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) out(sym_pair(i, k + j)) = l2(i * m + j);
  return out;
}

Subspace column_span(const std::vector<MatQ>& mats, Index ambient) {
  Index total = 0;
  for (const auto& m : mats) total += m.cols();
  MatQ rows(total, ambient);
  rows.setZero();
  Index r = 0;
  for (const auto& m : mats)
    for (Index c = 0; c < m.cols(); ++c, ++r)
      for (Index i = 0; i < m.rows(); ++i) rows(r, i) = m(i, c);
  return Subspace::span(ambient, rows);
}

bool product_zero(const MatQ& x, const MatQ& y) {
  const MatQ p = x * y;
  return is_zero(p);
}

}  // namespace

ProjContext make_projection_context(ProjType t, const ProjParams& p) {
  ProjContext ctx;
  ctx.type = t;
  ctx.params = p;
  VarietyPresentation v;
  switch (t) {
    case ProjType::I:
      v = segre(p.a, p.b);
      break;
    case ProjType::II:
      v = plucker_gr2(p.n);
      break;
    case ProjType::III:
      v = veronese(p.n - 1);
      break;
    case ProjType::Symp:
      v = veronese(p.k + p.m - 1);
      break;
  }
  ctx.ambient = (t == ProjType::Symp)
                    ? static_cast<Index>(p.k) * p.m + static_cast<Index>(sym_dim(p.k, 2))
                    : v.ambient;
  const Subspace g = cone_aut(v.quadrics);
  ProlongationResult g1 = prolong(g, 1);
  ctx.g1 = std::move(g1.basis);
  return ctx;
}

Subspace random_projection_center(ProjType t, const ProjParams& p, Index dim,
                                  std::uint64_t seed) {
  Rng rng(hash_combine(seed, 0x9026c7e2ull));
  Index ambient = 0;
  switch (t) {
    case ProjType::I:
      ambient = static_cast<Index>(p.a) * p.b;
      break;
    case ProjType::II:
      ambient = static_cast<Index>(binomial(p.n, 2));
      break;
    case ProjType::III:
      ambient = static_cast<Index>(sym_dim(p.n, 2));
      break;
    case ProjType::Symp:
      ambient = static_cast<Index>(p.k) * p.m + static_cast<Index>(sym_dim(p.k, 2));
      break;
  }
  MatQ rows(dim, ambient);
  rows.setZero();
  for (Index r = 0; r < dim; ++r) {
    const bool structured = rng.below(2) == 0;
    VecQ v(ambient);
    v.setZero();
    if (structured) {
      switch (t) {
        case ProjType::I: {
          VecQ u(p.a), w(p.b);
          for (int i = 0; i < p.a; ++i) u(i) = rng.small_int(5);
          for (int j = 0; j < p.b; ++j) w(j) = rng.small_int(5);
          for (int i = 0; i < p.a; ++i)
            for (int j = 0; j < p.b; ++j) v(i * p.b + j) = u(i) * w(j);
          break;
        }
        case ProjType::II: {
          VecQ u(p.n), w(p.n);
          for (int i = 0; i < p.n; ++i) {
            u(i) = rng.small_int(5);
            w(i) = rng.small_int(5);
          }
          for (int i = 0; i < p.n; ++i)
            for (int j = i + 1; j < p.n; ++j)
              v(alt_pair_rank(i, j)) = u(i) * w(j) - u(j) * w(i);
          break;
        }
        case ProjType::III: {
          VecQ u(p.n);
          for (int i = 0; i < p.n; ++i) u(i) = rng.small_int(5);
          for (int i = 0; i < p.n; ++i)
            for (int j = i; j < p.n; ++j) v(sym_pair(i, j)) = u(i) * u(j);
          break;
        }
        case ProjType::Symp: {
          VecQ w(p.k), q(p.m);
          for (int i = 0; i < p.k; ++i) w(i) = rng.small_int(5);
          for (int j = 0; j < p.m; ++j) q(j) = rng.small_int(5);
          const Rational lam = rng.small_int(5);
          for (int i = 0; i < p.k; ++i) {
            for (int j = 0; j < p.m; ++j) v(i * p.m + j) = w(i) * q(j);
            for (int j = i; j < p.k; ++j)
              v(p.k * p.m + sym_pair(i, j)) = lam * w(i) * w(j);
          }
          break;
        }
      }
    } else {
      for (Index i = 0; i < ambient; ++i) v(i) = rng.small_int(5);
    }
    rows.row(r) = v.transpose();
  }
  return Subspace::span(ambient, rows);
}

ProjectionCheck verify_with_context(const ProjContext& ctx, const Subspace& l) {
  const ProjParams& p = ctx.params;
  ProjectionCheck out;

  // Engine side.
  if (ctx.type == ProjType::Symp) {
    const int nn = p.k + p.m;
    const Index sym_amb = static_cast<Index>(sym_dim(nn, 2));
    // L3 = lift(L2) + Sym^2 Q.
    MatQ rows(l.dim() + static_cast<Index>(sym_dim(p.m, 2)), sym_amb);
    rows.setZero();
    for (Index r = 0; r < l.dim(); ++r)
      rows.row(r) = symp_lift(l.basis().row(r).transpose(), p.k, p.m).transpose();
    Index rr = l.dim();
    for (int i = 0; i < p.m; ++i)
      for (int j = i; j < p.m; ++j, ++rr) rows(rr, sym_pair(p.k + i, p.k + j)) = Rational(1);
    const Subspace l3 = Subspace::span(sym_amb, rows);
    out.engine_dim = kill_prolongation(ctx.g1, l3).dim;
  } else {
    out.engine_dim = kill_prolongation(ctx.g1, l).dim;
  }

  // Model and closed form.
  switch (ctx.type) {
    case ProjType::I: {
      const int a = p.a, b = p.b;
      std::vector<MatQ> maps;  // A -> B (b x a)
      for (Index r = 0; r < l.dim(); ++r)
        maps.push_back(type1_matrix(l.basis().row(r).transpose(), a, b).transpose());
      // Im(L) in B and Ker(L) in A.
      const Subspace im = column_span(maps, b);
      MatQ stacked(static_cast<Index>(maps.size()) * b, a);
      for (size_t i = 0; i < maps.size(); ++i) stacked.middleRows(static_cast<Index>(i) * b, b) = maps[i];
      const Subspace ker_l = Subspace::from_rref(a, kernel(stacked));
      out.formula_dim = (b - im.dim()) * ker_l.dim();
      // Model: G (a x b meaning B -> A) with G F = 0 and F G = 0 per phi.
      MatQ sys(static_cast<Index>(maps.size()) * (a * a + b * b), static_cast<Index>(a) * b);
      sys.setZero();
      Index row = 0;
      for (const MatQ& f : maps) {
        // (G F)_{ij} = sum_t G_{it} F_{tj}; unknown G_{it} at index i*b + t.
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < a; ++j, ++row)
            for (int t = 0; t < b; ++t) sys(row, i * b + t) = f(t, j);
        // (F G)_{ij} = sum_t F_{it} G_{tj}; unknown G_{tj} at t*b... t is an
        // A index here: G_{tj} at index t*b + j.
        for (int i = 0; i < b; ++i)
          for (int j = 0; j < b; ++j, ++row)
            for (int t = 0; t < a; ++t) sys(row, t * b + j) = f(i, t);
      }
      const MatQ model = kernel(sys);
      out.model_dim = model.rows();
      // Containments: psi phi = 0, phi psi = 0, Im L in Ker psi,
      // Im psi in Ker L.
      bool ok = true;
      for (Index r = 0; r < model.rows() && ok; ++r) {
        MatQ g(a, b);
        for (int i = 0; i < a; ++i)
          for (int t = 0; t < b; ++t) g(i, t) = model(r, i * b + t);
        for (const MatQ& f : maps)
          if (!product_zero(g, f) || !product_zero(f, g)) ok = false;
        for (Index c = 0; c < im.dim() && ok; ++c) {
          VecQ gv = g * im.basis().row(c).transpose();
          for (Index i = 0; i < a; ++i)
            if (!gv(i).is_zero()) ok = false;
        }
        for (Index c = 0; c < b && ok; ++c) {
          VecQ col = g.col(c);
          if (!ker_l.contains(col)) ok = false;
        }
      }
      out.containments_ok = ok;
      break;
    }
    case ProjType::II:
    case ProjType::III: {
      const int n = p.n;
      const bool skew = ctx.type == ProjType::II;
      std::vector<MatQ> sharps;
      for (Index r = 0; r < l.dim(); ++r)
        sharps.push_back(skew ? type2_sharp(l.basis().row(r).transpose(), n)
                              : type3_sharp(l.basis().row(r).transpose(), n));
      const Subspace im = column_span(sharps, n);
      out.formula_dim = skew ? static_cast<Index>(binomial(n - static_cast<int>(im.dim()), 2))
                             : static_cast<Index>(binomial(n - static_cast<int>(im.dim()) + 1, 2));
      // Model: psi-sharp of the same symmetry with psi phi = 0 for all phi.
      const Index unknowns = skew ? static_cast<Index>(binomial(n, 2))
                                  : static_cast<Index>(sym_dim(n, 2));
      MatQ sys(static_cast<Index>(sharps.size()) * n * n, unknowns);
      sys.setZero();
      Index row = 0;
      for (const MatQ& f : sharps) {
        // (Psi F)_{ij} = sum_t Psi_{it} F_{tj}
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j, ++row)
            for (int t = 0; t < n; ++t) {
              if (f(t, j).is_zero()) continue;
              if (skew) {
                if (i == t) continue;
                const Index u = alt_pair_rank(std::min(i, t), std::max(i, t));
                sys(row, u) += (i < t ? f(t, j) : -f(t, j));
              } else {
                sys(row, sym_pair(i, t)) += f(t, j);
              }
            }
      }
      const MatQ model = kernel(sys);
      out.model_dim = model.rows();
      bool ok = true;
      for (Index r = 0; r < model.rows() && ok; ++r) {
        const MatQ psi = skew ? type2_sharp(model.row(r).transpose(), n)
                              : type3_sharp(model.row(r).transpose(), n);
        for (const MatQ& f : sharps)
          if (!product_zero(psi, f)) ok = false;
        for (Index c = 0; c < im.dim() && ok; ++c) {
          VecQ pv = psi * im.basis().row(c).transpose();
          for (Index i = 0; i < n; ++i)
            if (!pv(i).is_zero()) ok = false;
        }
      }
      out.containments_ok = ok;
      break;
    }
    case ProjType::Symp: {
      const int k = p.k, m = p.m;
      std::vector<MatQ> wides;
      for (Index r = 0; r < l.dim(); ++r)
        wides.push_back(symp_wide(l.basis().row(r).transpose(), k, m));
      const Subspace im_w = column_span(wides, k);
      out.formula_dim =
          static_cast<Index>(binomial(k - static_cast<int>(im_w.dim()) + 1, 2));
      // Model: symmetric psi on W with psi Im_W = 0.
      const Index unknowns = static_cast<Index>(sym_dim(k, 2));
      MatQ sys(im_w.dim() * k, unknowns);
      sys.setZero();
      for (Index c = 0; c < im_w.dim(); ++c) {
        const VecQ v = im_w.basis().row(c).transpose();
        for (int i = 0; i < k; ++i)
          for (int t = 0; t < k; ++t) {
            if (v(t).is_zero()) continue;
            sys(c * k + i, sym_pair(i, t)) += v(t);
          }
      }
      const MatQ model = kernel(sys);
      out.model_dim = model.rows();
      bool ok = true;
      for (Index r = 0; r < model.rows() && ok; ++r) {
        const MatQ psi = type3_sharp(model.row(r).transpose(), k);
        for (const MatQ& w : wides)
          if (!product_zero(psi, w)) ok = false;
      }
      out.containments_ok = ok;
      break;
    }
  }
  return out;
}

ProjectionCheck verify_projection_formula(ProjType t, const ProjParams& p,
                                          const Subspace& l) {
  return verify_with_context(make_projection_context(t, p), l);
}

bool max_rank_point(ProjType t, const ProjParams& p, const VecQ& v) {
  switch (t) {
    case ProjType::I:
      return rank(type1_matrix(v, p.a, p.b)) == std::min(p.a, p.b);
    case ProjType::II:
      // Skew forms have even rank.
      return rank(type2_sharp(v, p.n)) == p.n - p.n % 2;
    case ProjType::III:
      return rank(type3_sharp(v, p.n)) == p.n;
    case ProjType::Symp:
      return rank(symp_wide(v, p.k, p.m)) == p.k;
  }
  return false;
}

}  // namespace prolab
