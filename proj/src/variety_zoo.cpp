#include "prolab/variety_zoo.hpp"

#include <stdexcept>

#include "prolab/algebras.hpp"
#include "prolab/octonion.hpp"
#include "prolab/rng.hpp"

namespace prolab {

Index alt_pair_rank(int i, int j) {
  if (!(0 <= i && i < j)) throw std::invalid_argument("alt_pair_rank: need 0 <= i < j");
  return static_cast<Index>(binomial(j, 2)) + i;
}

QuadraticForm polarize(const std::function<Rational(const VecQ&)>& f, Index n) {
  MatQ q(n, n);
  q.setZero();
  std::vector<Rational> diag(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    VecQ e(n);
    e.setZero();
    e(i) = Rational(1);
    diag[static_cast<size_t>(i)] = f(e);
    q(i, i) = diag[static_cast<size_t>(i)];
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      VecQ e(n);
      e.setZero();
      e(i) = Rational(1);
      e(j) = Rational(1);
      const Rational b =
          (f(e) - diag[static_cast<size_t>(i)] - diag[static_cast<size_t>(j)]) / Rational(2);
      q(i, j) = b;
      q(j, i) = b;
    }
  return QuadraticForm(q);
}

namespace {

VecQ random_vec(Rng& rng, Index d, long bound = 9) {
  VecQ v(d);
  for (Index i = 0; i < d; ++i) v(i) = rng.small_int(bound);
  return v;
}

VecQ random_nonzero_vec(Rng& rng, Index d, long bound = 9) {
  for (;;) {
    VecQ v = random_vec(rng, d, bound);
    for (Index i = 0; i < d; ++i)
      if (!v(i).is_zero()) return v;
  }
}

bool independent_pair(const VecQ& a, const VecQ& b) {
  MatQ m(2, a.size());
  m.row(0) = a.transpose();
  m.row(1) = b.transpose();
  return rank(m) == 2;
}

VecQ random_kernel_vector(Rng& rng, const MatQ& rows) {
  const MatQ k = kernel(rows);
  if (k.rows() == 0) return VecQ();
  for (int attempt = 0; attempt < 32; ++attempt) {
    VecQ combo(k.cols());
    combo.setZero();
    bool nz = false;
    for (Index r = 0; r < k.rows(); ++r) {
      const Rational c = rng.small_int(5);
      if (c.is_zero()) continue;
      nz = true;
      for (Index j = 0; j < k.cols(); ++j)
        if (!k(r, j).is_zero()) combo(j) += c * k(r, j);
    }
    if (nz) {
      for (Index j = 0; j < combo.size(); ++j)
        if (!combo(j).is_zero()) return combo;
    }
  }
  return VecQ();
}

Rational apply_covector(const RowVecQ& l, const VecQ& v) {
  Rational acc(0);
  for (Index i = 0; i < v.size(); ++i)
    if (!l(i).is_zero() && !v(i).is_zero()) acc += l(i) * v(i);
  return acc;
}

// ---------------------------------------------------------------------------
// Veronese

Index sym_pair_rank(int i, int j) {
  return multiindex_rank({i < j ? i : j, i < j ? j : i});
}

VecQ veronese_point(const VecQ& u) {
  const int w = static_cast<int>(u.size());
  VecQ x(static_cast<Index>(sym_dim(w, 2)));
  x.setZero();
  for (int i = 0; i < w; ++i) {
    if (u(i).is_zero()) continue;
    for (int j = i; j < w; ++j)
      if (!u(j).is_zero()) x(sym_pair_rank(i, j)) = u(i) * u(j);
  }
  return x;
}

QuadraticIdeal veronese_ideal(int w) {
  const Index n = static_cast<Index>(sym_dim(w, 2));
  std::vector<QuadraticForm> forms;
  for (int i = 0; i < w; ++i)
    for (int k = i + 1; k < w; ++k)
      for (int j = 0; j < w; ++j)
        for (int l = j + 1; l < w; ++l) {
          auto f = [&](const VecQ& x) {
            return x(sym_pair_rank(i, j)) * x(sym_pair_rank(k, l)) -
                   x(sym_pair_rank(i, l)) * x(sym_pair_rank(k, j));
          };
          forms.push_back(polarize(f, n));
        }
  return QuadraticIdeal(n, forms);
}

// ---------------------------------------------------------------------------
// Segre

VecQ segre_point(const VecQ& u, const VecQ& v) {
  const Index a = u.size(), b = v.size();
  VecQ x(a * b);
  x.setZero();
  for (Index i = 0; i < a; ++i) {
    if (u(i).is_zero()) continue;
    for (Index j = 0; j < b; ++j)
      if (!v(j).is_zero()) x(i * b + j) = u(i) * v(j);
  }
  return x;
}

QuadraticIdeal segre_ideal(int a, int b) {
  const Index n = static_cast<Index>(a) * b;
  std::vector<QuadraticForm> forms;
  for (int i = 0; i < a; ++i)
    for (int k = i + 1; k < a; ++k)
      for (int j = 0; j < b; ++j)
        for (int l = j + 1; l < b; ++l) {
          auto f = [&, i, k, j, l](const VecQ& x) {
            return x(i * b + j) * x(k * b + l) - x(i * b + l) * x(k * b + j);
          };
          forms.push_back(polarize(f, n));
        }
  return QuadraticIdeal(n, forms);
}

// H from a covector on A (x) B.
MatQ segre_covector_matrix(const RowVecQ& l, int a, int b) {
  MatQ h(a, b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) h(i, j) = l(i * b + j);
  return h;
}

// ---------------------------------------------------------------------------
// Pluecker Gr(2, m)

VecQ plucker_point(const VecQ& u, const VecQ& v) {
  const int m = static_cast<int>(u.size());
  VecQ x(static_cast<Index>(binomial(m, 2)));
  x.setZero();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) x(alt_pair_rank(i, j)) = u(i) * v(j) - u(j) * v(i);
  return x;
}

QuadraticIdeal plucker_ideal(int m) {
  const Index n = static_cast<Index>(binomial(m, 2));
  std::vector<QuadraticForm> forms;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          auto f = [&, a, b, c, d](const VecQ& x) {
            return x(alt_pair_rank(a, b)) * x(alt_pair_rank(c, d)) -
                   x(alt_pair_rank(a, c)) * x(alt_pair_rank(b, d)) +
                   x(alt_pair_rank(a, d)) * x(alt_pair_rank(b, c));
          };
          forms.push_back(polarize(f, n));
        }
  return QuadraticIdeal(n, forms);
}

MatQ plucker_covector_skew(const RowVecQ& l, int m) {
  MatQ omega(m, m);
  omega.setZero();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      omega(i, j) = l(alt_pair_rank(i, j));
      omega(j, i) = -l(alt_pair_rank(i, j));
    }
  return omega;
}

// ---------------------------------------------------------------------------
// Spinor S_5

VecQ spinor_pi(const VecQ& w) {  // w in Lambda^2 Q^5 (10 coords)
  VecQ pi(5);
  pi.setZero();
  for (int i = 0; i < 5; ++i) {
    int t[4], idx = 0;
    for (int a = 0; a < 5; ++a)
      if (a != i) t[idx++] = a;
    pi(i) = w(alt_pair_rank(t[0], t[1])) * w(alt_pair_rank(t[2], t[3])) -
            w(alt_pair_rank(t[0], t[2])) * w(alt_pair_rank(t[1], t[3])) +
            w(alt_pair_rank(t[0], t[3])) * w(alt_pair_rank(t[1], t[2]));
  }
  return pi;
}

VecQ spinor_point(const Rational& s, const VecQ& w, const VecQ& pi) {
  VecQ x(16);
  x.setZero();
  x(0) = s;
  for (Index i = 0; i < 10; ++i) x(1 + i) = w(i);
  for (Index i = 0; i < 5; ++i) x(11 + i) = pi(i);
  return x;
}

VecQ spinor_orbit_point(const VecQ& w) { return spinor_point(Rational(1), w, spinor_pi(w)); }

// B_pi(w, phi) = pi(w + phi) - pi(w) - pi(phi).
VecQ spinor_pi_polar(const VecQ& w, const VecQ& phi) {
  VecQ sum = w + phi;
  VecQ a = spinor_pi(sum), b = spinor_pi(w), c = spinor_pi(phi);
  VecQ out(5);
  for (Index i = 0; i < 5; ++i) out(i) = a(i) - b(i) - c(i);
  return out;
}

// ---------------------------------------------------------------------------
// Cayley plane

SplitOctonion random_octonion(Rng& rng, long bound = 4) {
  SplitOctonion o;
  for (int i = 0; i < 8; ++i) o[i] = rng.small_int(bound);
  return o;
}

SplitOctonion random_isotropic_octonion(Rng& rng) {
  // N((a, v; w, b)) = ab - v.w; choose everything but b, then solve.
  for (;;) {
    const Rational a = rng.small_nonzero(4);
    SplitOctonion o;
    o[0] = a;
    for (int i = 1; i < 7; ++i) o[i] = rng.small_int(4);
    const Rational vw = o[1] * o[4] + o[2] * o[5] + o[3] * o[6];
    o[7] = vw / a;
    if (!o.is_zero()) return o;
  }
}

QuadraticIdeal cayley_ideal() {
  static const QuadraticIdeal ideal = [] {
    std::vector<QuadraticForm> forms;
    for (int k = 0; k < 27; ++k) {
      auto f = [k](const VecQ& v) {
        return jordan_adjoint(Jordan27::from_vec(v)).to_vec()(k);
      };
      forms.push_back(polarize(f, 27));
    }
    return QuadraticIdeal(27, forms);
  }();
  return ideal;
}

// ---------------------------------------------------------------------------
// Symplectic VMRT Z = {(w (x) q, lam w^2)}

VecQ symp_point(const VecQ& w, const VecQ& q, const Rational& lam) {
  const Index k = w.size(), m = q.size();
  VecQ x(k * m + static_cast<Index>(sym_dim(static_cast<int>(k), 2)));
  x.setZero();
  for (Index i = 0; i < k; ++i) {
    if (w(i).is_zero()) continue;
    for (Index j = 0; j < m; ++j)
      if (!q(j).is_zero()) x(i * m + j) = w(i) * q(j);
  }
  for (Index i = 0; i < k; ++i) {
    if (w(i).is_zero()) continue;
    for (Index j = i; j < k; ++j)
      if (!w(j).is_zero())
        x(k * m + sym_pair_rank(static_cast<int>(i), static_cast<int>(j))) =
            lam * w(i) * w(j);
  }
  return x;
}

QuadraticIdeal symp_ideal(int k, int m) {
  const Index n = static_cast<Index>(k) * m + static_cast<Index>(sym_dim(k, 2));
  // 2x2 minors of the k x (m+k) matrix [M | S].
  auto entry = [k, m](const VecQ& x, int i, int c) -> Rational {
    if (c < m) return x(i * m + c);
    return x(static_cast<Index>(k) * m + sym_pair_rank(i, c - m));
  };
  std::vector<QuadraticForm> forms;
  for (int i = 0; i < k; ++i)
    for (int i2 = i + 1; i2 < k; ++i2)
      for (int c = 0; c < m + k; ++c)
        for (int c2 = c + 1; c2 < m + k; ++c2) {
          auto f = [&, i, i2, c, c2](const VecQ& x) {
            return entry(x, i, c) * entry(x, i2, c2) - entry(x, i, c2) * entry(x, i2, c);
          };
          forms.push_back(polarize(f, n));
        }
  return QuadraticIdeal(n, forms);
}

}  // namespace

// ---------------------------------------------------------------------------

VarietyPresentation veronese(int n) {
  if (n < 1) throw std::invalid_argument("veronese: need n >= 1");
  const int w = n + 1;
  const Index dim = static_cast<Index>(sym_dim(w, 2));
  VarietyPresentation v;
  v.name = "veronese(" + std::to_string(n) + ")";
  v.ambient = dim;
  v.quadrics = veronese_ideal(w);
  v.sampler = [w](std::uint64_t seed, std::uint64_t index) {
    Rng rng(hash_combine(seed, hash_combine(0x7e50, index)));
    return veronese_point(random_nonzero_vec(rng, w));
  };
  {
    VecQ e(w);
    e.setZero();
    e(0) = Rational(1);
    v.base_point = veronese_point(e);
  }
  v.expected.dim_s = n;
  v.expected.dim_sec = std::min<Index>(2 * n, dim - 1);
  v.expected.dim_aut = static_cast<Index>(w) * w;
  v.expected.dim_g1 = dim;
  // The second Veronese carries no lines; the line sampler reports none.
  v.line_sampler = [](std::uint64_t, std::uint64_t) -> std::optional<std::pair<VecQ, VecQ>> {
    return std::nullopt;
  };
  v.section_sampler = [w](const RowVecQ& lambda) -> Sampler {
    return [w, lambda](std::uint64_t seed, std::uint64_t index) -> VecQ {
      // Stereographic solve of lambda(u^2) = 0 through u0 = e_0.
      VecQ e0(w);
      e0.setZero();
      e0(0) = Rational(1);
      auto g = [&](const VecQ& u) { return apply_covector(lambda, veronese_point(u)); };
      for (std::uint64_t att = 0;; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x7e51 + att, index)));
        VecQ u = random_nonzero_vec(rng, w);
        const Rational gu = g(u);
        VecQ upe = u + e0;
        const Rational cross = g(upe) - gu - g(e0);  // 2 B_g(u, e0)
        if (cross.is_zero()) continue;
        const Rational t = -gu / cross;
        VecQ pt = u + e0 * t;
        bool nz = false;
        for (Index i = 0; i < w; ++i)
          if (!pt(i).is_zero()) nz = true;
        if (!nz) continue;
        return veronese_point(pt);
      }
    };
  };
  return v;
}

VarietyPresentation segre(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("segre: need a, b >= 1");
  const Index dim = static_cast<Index>(a) * b;
  VarietyPresentation v;
  v.name = "segre(" + std::to_string(a) + "," + std::to_string(b) + ")";
  v.ambient = dim;
  v.quadrics = segre_ideal(a, b);
  v.sampler = [a, b](std::uint64_t seed, std::uint64_t index) {
    Rng rng(hash_combine(seed, hash_combine(0x5e97e, index)));
    return segre_point(random_nonzero_vec(rng, a), random_nonzero_vec(rng, b));
  };
  {
    VecQ ea(a), eb(b);
    ea.setZero();
    eb.setZero();
    ea(0) = Rational(1);
    eb(0) = Rational(1);
    v.base_point = segre_point(ea, eb);
  }
  v.expected.dim_s = a + b - 2;
  v.expected.dim_sec = std::min<Index>(2 * a + 2 * b - 5, dim - 1);
  v.expected.dim_aut = static_cast<Index>(a) * a + static_cast<Index>(b) * b - 1;
  v.expected.dim_g1 = dim;
  v.line_sampler = [a, b](std::uint64_t seed, std::uint64_t index)
      -> std::optional<std::pair<VecQ, VecQ>> {
    for (std::uint64_t att = 0; att < 32; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x11e + att, index)));
      VecQ u = random_nonzero_vec(rng, a), w = random_nonzero_vec(rng, b);
      VecQ alpha = segre_point(u, w);
      VecQ beta = (index % 2 == 0 && a >= 2) ? segre_point(random_nonzero_vec(rng, a), w)
                                             : segre_point(u, random_nonzero_vec(rng, b));
      if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
    }
    return std::nullopt;
  };
  v.section_sampler = [a, b](const RowVecQ& lambda) -> Sampler {
    const MatQ h = segre_covector_matrix(lambda, a, b);
    return [a, b, h](std::uint64_t seed, std::uint64_t index) -> VecQ {
      for (std::uint64_t att = 0;; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x5e98e + att, index)));
        VecQ u = random_nonzero_vec(rng, a);
        MatQ row = u.transpose() * h;  // 1 x b
        VecQ w = random_kernel_vector(rng, row);
        if (w.size() == 0) continue;
        VecQ pt = segre_point(u, w);
        for (Index i = 0; i < pt.size(); ++i)
          if (!pt(i).is_zero()) return pt;
      }
    };
  };
  v.section_line_sampler = [a, b](const RowVecQ& lambda) -> LinePairSampler {
    const MatQ h = segre_covector_matrix(lambda, a, b);
    return [a, b, h](std::uint64_t seed, std::uint64_t index)
        -> std::optional<std::pair<VecQ, VecQ>> {
      for (std::uint64_t att = 0; att < 64; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x11f + att, index)));
        VecQ u = random_nonzero_vec(rng, a);
        VecQ w = random_kernel_vector(rng, u.transpose() * h);
        if (w.size() == 0) continue;
        VecQ alpha = segre_point(u, w);
        VecQ beta;
        if (index % 2 == 0 && a >= 2) {
          // u' (x) w with lambda(u' (x) w) = 0: u' in ker((H w)^T).
          MatQ col = (h * w).transpose();  // 1 x a
          VecQ u2 = random_kernel_vector(rng, col);
          if (u2.size() == 0) continue;
          beta = segre_point(u2, w);
        } else {
          VecQ w2 = random_kernel_vector(rng, u.transpose() * h);
          if (w2.size() == 0) continue;
          beta = segre_point(u, w2);
        }
        bool bz = true;
        for (Index i = 0; i < beta.size(); ++i)
          if (!beta(i).is_zero()) bz = false;
        if (bz) continue;
        if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
      }
      return std::nullopt;
    };
  };
  return v;
}

VarietyPresentation plucker_gr2(int m) {
  if (m < 4) throw std::invalid_argument("plucker_gr2: need m >= 4");
  const Index dim = static_cast<Index>(binomial(m, 2));
  VarietyPresentation v;
  v.name = "plucker_gr2(" + std::to_string(m) + ")";
  v.ambient = dim;
  v.quadrics = plucker_ideal(m);
  v.sampler = [m](std::uint64_t seed, std::uint64_t index) {
    Rng rng(hash_combine(seed, hash_combine(0x9c4, index)));
    return plucker_point(random_nonzero_vec(rng, m), random_nonzero_vec(rng, m));
  };
  {
    VecQ u(m), w(m);
    u.setZero();
    w.setZero();
    u(0) = Rational(1);
    w(1) = Rational(1);
    v.base_point = plucker_point(u, w);
  }
  v.expected.dim_s = 2 * (m - 2);
  v.expected.dim_sec = std::min<Index>(4 * m - 11, dim - 1);
  v.expected.dim_aut = static_cast<Index>(m) * m;
  v.expected.dim_g1 = dim;
  v.line_sampler = [m](std::uint64_t seed, std::uint64_t index)
      -> std::optional<std::pair<VecQ, VecQ>> {
    for (std::uint64_t att = 0; att < 32; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x91e + att, index)));
      VecQ u = random_nonzero_vec(rng, m), w = random_nonzero_vec(rng, m);
      VecQ alpha = plucker_point(u, w);
      // beta = p ^ q with p in span(u, w): the 2-plane span(alpha, beta)
      // stays inside the cone.
      VecQ p = u * rng.small_nonzero(5) + w * rng.small_int(5);
      VecQ q = random_nonzero_vec(rng, m);
      VecQ beta = plucker_point(p, q);
      bool bz = true;
      for (Index i = 0; i < beta.size(); ++i)
        if (!beta(i).is_zero()) bz = false;
      if (bz) continue;
      if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
    }
    return std::nullopt;
  };
  v.section_sampler = [m](const RowVecQ& lambda) -> Sampler {
    const MatQ omega = plucker_covector_skew(lambda, m);
    return [m, omega](std::uint64_t seed, std::uint64_t index) -> VecQ {
      for (std::uint64_t att = 0;; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x9c5 + att, index)));
        VecQ u = random_nonzero_vec(rng, m);
        VecQ w = random_kernel_vector(rng, u.transpose() * omega);
        if (w.size() == 0) continue;
        VecQ pt = plucker_point(u, w);
        for (Index i = 0; i < pt.size(); ++i)
          if (!pt(i).is_zero()) return pt;
      }
    };
  };
  v.section_line_sampler = [m](const RowVecQ& lambda) -> LinePairSampler {
    const MatQ omega = plucker_covector_skew(lambda, m);
    return [m, omega](std::uint64_t seed, std::uint64_t index)
        -> std::optional<std::pair<VecQ, VecQ>> {
      for (std::uint64_t att = 0; att < 64; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x91f + att, index)));
        VecQ u = random_nonzero_vec(rng, m);
        VecQ w = random_kernel_vector(rng, u.transpose() * omega);
        if (w.size() == 0) continue;
        VecQ alpha = plucker_point(u, w);
        bool az = true;
        for (Index i = 0; i < alpha.size(); ++i)
          if (!alpha(i).is_zero()) az = false;
        if (az) continue;
        VecQ p = u * rng.small_nonzero(5) + w * rng.small_int(5);
        VecQ q = random_kernel_vector(rng, p.transpose() * omega);
        if (q.size() == 0) continue;
        VecQ beta = plucker_point(p, q);
        bool bz = true;
        for (Index i = 0; i < beta.size(); ++i)
          if (!beta(i).is_zero()) bz = false;
        if (bz) continue;
        if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
      }
      return std::nullopt;
    };
  };
  return v;
}

VarietyPresentation quadric(int n) {
  if (n < 3) throw std::invalid_argument("quadric: need n >= 3");
  VarietyPresentation v;
  v.name = "quadric(" + std::to_string(n) + ")";
  v.ambient = n;
  v.quadrics = QuadraticIdeal(n, {QuadraticForm(split_symmetric_form(n))});
  const QuadraticForm q = v.quadrics.forms()[0];
  v.sampler = [n, q](std::uint64_t seed, std::uint64_t index) -> VecQ {
    VecQ e0(n);
    e0.setZero();
    e0(0) = Rational(1);
    for (std::uint64_t att = 0;; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x0ad + att, index)));
      VecQ u = random_nonzero_vec(rng, n);
      const Rational cross = q.polar(u, e0) * Rational(2);
      if (cross.is_zero()) continue;
      const Rational t = -q.eval(u) / cross;
      VecQ pt = u + e0 * t;
      for (Index i = 0; i < n; ++i)
        if (!pt(i).is_zero()) return pt;
    }
  };
  {
    VecQ e0(n);
    e0.setZero();
    e0(0) = Rational(1);
    v.base_point = e0;
  }
  v.expected.dim_s = n - 2;
  v.expected.dim_sec = n - 1;
  v.expected.dim_aut = static_cast<Index>(n) * (n - 1) / 2 + 1;
  v.expected.dim_g1 = n;
  v.line_sampler = [n, q](std::uint64_t seed, std::uint64_t index)
      -> std::optional<std::pair<VecQ, VecQ>> {
    if (n < 4) return std::nullopt;  // a conic carries no lines
    VecQ e0(n), e1(n);
    e0.setZero();
    e1.setZero();
    e0(0) = Rational(1);
    e1(1) = Rational(1);
    for (std::uint64_t att = 0; att < 64; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x0ae + att, index)));
      // Isotropic direction inside T_{e0} = {x_{n-1} = 0}, stereographic
      // from the isotropic e1.
      VecQ u = random_vec(rng, n);
      u(n - 1) = Rational(0);
      const Rational cross = q.polar(u, e1) * Rational(2);
      if (cross.is_zero()) continue;
      const Rational t = -q.eval(u) / cross;
      VecQ beta = u + e1 * t;
      bool bz = true;
      for (Index i = 0; i < n; ++i)
        if (!beta(i).is_zero()) bz = false;
      if (bz) continue;
      if (independent_pair(e0, beta)) return std::make_pair(e0, beta);
    }
    return std::nullopt;
  };
  v.section_sampler = [n, q](const RowVecQ& lambda) -> Sampler {
    MatQ lrow(1, n);
    lrow.row(0) = lambda;
    const MatQ kerl = kernel(lrow);
    return [n, q, kerl](std::uint64_t seed, std::uint64_t index) -> VecQ {
      VecQ e0(n);
      e0.setZero();
      e0(0) = Rational(1);
      for (std::uint64_t att = 0;; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x0af + att, index)));
        VecQ coeffs = random_nonzero_vec(rng, kerl.rows(), 5);
        VecQ u = kerl.transpose() * coeffs;
        const Rational cross = q.polar(u, e0) * Rational(2);
        if (cross.is_zero()) continue;
        const Rational t = -q.eval(u) / cross;
        VecQ pt = u + e0 * t;
        for (Index i = 0; i < n; ++i)
          if (!pt(i).is_zero()) return pt;
      }
    };
  };
  return v;
}

VarietyPresentation spinor_s5() {
  VarietyPresentation v;
  v.name = "spinor_s5";
  v.ambient = 16;
  auto raw = [](std::uint64_t seed, std::uint64_t index) -> VecQ {
    Rng rng(hash_combine(seed, hash_combine(0x55, index)));
    VecQ w = random_vec(rng, 10, 3);
    const Rational c = rng.small_nonzero(3);
    return spinor_orbit_point(w) * c;
  };
  v.sampler = raw;
  static const QuadraticIdeal ideal = quadrics_from_samples(raw, 16, 156, 11);
  v.quadrics = ideal;
  {
    VecQ w(10);
    w.setZero();
    v.base_point = spinor_orbit_point(w);  // (1, 0, 0)
  }
  v.expected.dim_s = 10;
  v.expected.dim_sec = 15;
  v.expected.dim_aut = 46;
  v.expected.dim_g1 = 16;
  v.line_sampler = [](std::uint64_t seed, std::uint64_t index)
      -> std::optional<std::pair<VecQ, VecQ>> {
    for (std::uint64_t att = 0; att < 32; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x56 + att, index)));
      VecQ w0 = random_vec(rng, 10, 5);
      VecQ u = random_nonzero_vec(rng, 5), z = random_nonzero_vec(rng, 5);
      VecQ phi(10);
      phi.setZero();
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          phi(alt_pair_rank(i, j)) = u(i) * z(j) - u(j) * z(i);
      bool pz = true;
      for (Index i = 0; i < 10; ++i)
        if (!phi(i).is_zero()) pz = false;
      if (pz) continue;
      VecQ alpha = spinor_orbit_point(w0);
      VecQ beta = spinor_orbit_point(w0 + phi);
      if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
    }
    return std::nullopt;
  };
  v.section_sampler = [](const RowVecQ& lambda) -> Sampler {
    return [lambda](std::uint64_t seed, std::uint64_t index) -> VecQ {
      auto f = [&](const VecQ& w) { return apply_covector(lambda, spinor_orbit_point(w)); };
      for (std::uint64_t att = 0;; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x57 + att, index)));
        const Rational c = rng.small_nonzero(5);
        if (index % 2 == 0) {
          // f(t w) = t a + t^2 b with a, b from the chart decomposition.
          VecQ w = random_vec(rng, 10, 5);
          const Rational fw = f(w);
          const Rational f2w = f(w * Rational(2));
          // f(tw) = a t + b t^2: a = 2 f(w) - f(2w)/2, b = (f(2w) - 2 f(w)) / 2.
          const Rational b = (f2w - Rational(2) * fw) / Rational(2);
          const Rational a = fw - b;
          if (b.is_zero() || a.is_zero()) continue;
          const Rational t = -a / b;
          return spinor_orbit_point(w * t) * c;
        }
        // Decomposable direction annihilated by the linear part: the whole
        // line {x(t u^z)} lies in the section.
        VecQ u = random_nonzero_vec(rng, 5);
        MatQ row(1, 5);
        row.setZero();
        for (int j = 0; j < 5; ++j) {
          VecQ phi(10);
          phi.setZero();
          for (int i = 0; i < 5; ++i) {
            if (i == j) continue;
            const int lo = std::min(i, j), hi = std::max(i, j);
            phi(alt_pair_rank(lo, hi)) = (lo == i ? u(i) : -u(i));
          }
          // phi = u ^ e_j; linear part of f on it:
          row(0, j) = apply_covector(lambda, spinor_point(Rational(0), phi, VecQ::Zero(5)));
        }
        VecQ z = random_kernel_vector(rng, row);
        if (z.size() == 0) continue;
        VecQ phi(10);
        phi.setZero();
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j)
            phi(alt_pair_rank(i, j)) = u(i) * z(j) - u(j) * z(i);
        bool pz = true;
        for (Index i = 0; i < 10; ++i)
          if (!phi(i).is_zero()) pz = false;
        if (pz) continue;
        const Rational t = rng.small_nonzero(5);
        VecQ pt = spinor_orbit_point(phi * t) * c;
        if (apply_covector(lambda, pt).is_zero()) return pt;
      }
    };
  };
  v.section_line_sampler = [](const RowVecQ& lambda) -> LinePairSampler {
    return [lambda](std::uint64_t seed, std::uint64_t index)
        -> std::optional<std::pair<VecQ, VecQ>> {
      auto f = [&](const VecQ& w) { return apply_covector(lambda, spinor_orbit_point(w)); };
      for (std::uint64_t att = 0; att < 64; ++att) {
        Rng rng(hash_combine(seed, hash_combine(0x58 + att, index)));
        // Point on the section, generic chart.
        VecQ w = random_vec(rng, 10, 5);
        const Rational fw = f(w);
        const Rational f2w = f(w * Rational(2));
        const Rational b = (f2w - Rational(2) * fw) / Rational(2);
        const Rational a = fw - b;
        if (b.is_zero()) continue;
        const Rational t = -a / b;
        VecQ w0 = w * t;
        VecQ alpha = spinor_orbit_point(w0);
        // Direction u ^ z with the affine-linear section condition on z.
        VecQ u = random_nonzero_vec(rng, 5);
        MatQ row(1, 5);
        row.setZero();
        for (int j = 0; j < 5; ++j) {
          VecQ phij(10);
          phij.setZero();
          for (int i = 0; i < 5; ++i) {
            if (i == j) continue;
            const int lo = std::min(i, j), hi = std::max(i, j);
            phij(alt_pair_rank(lo, hi)) = (lo == i ? u(i) : -u(i));
          }
          const Rational lin =
              apply_covector(lambda, spinor_point(Rational(0), phij, spinor_pi_polar(w0, phij)));
          row(0, j) = lin;
        }
        VecQ z = random_kernel_vector(rng, row);
        if (z.size() == 0) continue;
        VecQ phi(10);
        phi.setZero();
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j)
            phi(alt_pair_rank(i, j)) = u(i) * z(j) - u(j) * z(i);
        bool pz = true;
        for (Index i = 0; i < 10; ++i)
          if (!phi(i).is_zero()) pz = false;
        if (pz) continue;
        VecQ beta = spinor_orbit_point(w0 + phi);
        if (!apply_covector(lambda, beta).is_zero()) continue;
        if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
      }
      return std::nullopt;
    };
  };
  return v;
}

VarietyPresentation cayley_op2() {
  VarietyPresentation v;
  v.name = "cayley_op2";
  v.ambient = 27;
  v.quadrics = cayley_ideal();
  v.sampler = [](std::uint64_t seed, std::uint64_t index) -> VecQ {
    Rng rng(hash_combine(seed, hash_combine(0x0b2, index)));
    const Rational t = rng.small_nonzero(4);
    const SplitOctonion x = random_octonion(rng), y = random_octonion(rng);
    const Rational c = rng.small_nonzero(4);
    return jordan_rank_one(t, x, y).to_vec() * c;
  };
  {
    v.base_point = jordan_rank_one(Rational(1), SplitOctonion(), SplitOctonion()).to_vec();
  }
  v.expected.dim_s = 16;
  v.expected.dim_sec = 25;
  v.expected.dim_aut = 79;
  v.expected.dim_g1 = 27;
  v.line_sampler = [](std::uint64_t seed, std::uint64_t index)
      -> std::optional<std::pair<VecQ, VecQ>> {
    for (std::uint64_t att = 0; att < 64; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x0b3 + att, index)));
      const Rational t = rng.small_nonzero(4);
      const SplitOctonion x = random_octonion(rng), y = random_octonion(rng);
      const Jordan27 alpha = jordan_rank_one(t, x, y);
      // Direction from a null pair: N(x') = N(y') = 0, x' conj(y') = 0.
      const SplitOctonion xp = random_isotropic_octonion(rng);
      const MatQ lm = xp.left_mult_matrix();
      VecQ zc = random_kernel_vector(rng, lm);
      if (zc.size() == 0) continue;
      std::array<Rational, 8> za;
      for (int i = 0; i < 8; ++i) za[static_cast<size_t>(i)] = zc(i);
      const SplitOctonion z = SplitOctonion::from_coords(za);
      const SplitOctonion yp = z.conj();
      if (!yp.norm().is_zero() || !(xp * yp.conj()).is_zero()) continue;
      // Cross term M_ij = v_i conj(v'_j) + v'_i conj(v_j) for v = (t, x, y),
      // v' = (0, x', y').
      Jordan27 m;
      m.xi1 = Rational(0);
      m.xi2 = (x + xp).norm() - x.norm() - xp.norm();
      m.xi3 = (y + yp).norm() - y.norm() - yp.norm();
      m.c3 = SplitOctonion::scalar(t) * xp.conj();
      m.c2 = SplitOctonion::scalar(t) * yp;
      m.c1 = x * yp.conj() + xp * y.conj();
      const VecQ av = alpha.to_vec();
      const VecQ bv = av + m.to_vec();
      const Jordan27 beta = Jordan27::from_vec(bv);
      // The segment must stay inside the rank-1 cone.
      bool rank1 = true;
      const VecQ adj = jordan_adjoint(beta).to_vec();
      for (Index i = 0; i < 27; ++i)
        if (!adj(i).is_zero()) rank1 = false;
      if (!rank1) continue;
      if (independent_pair(av, bv)) return std::make_pair(av, bv);
    }
    return std::nullopt;
  };
  return v;
}

VarietyPresentation symp_vmrt(int k, int m) {
  if (k < 2 || m < 1) throw std::invalid_argument("symp_vmrt: need k >= 2, m >= 1");
  const Index dim = static_cast<Index>(k) * m + static_cast<Index>(sym_dim(k, 2));
  VarietyPresentation v;
  v.name = "symp_vmrt(" + std::to_string(k) + "," + std::to_string(m) + ")";
  v.ambient = dim;
  v.quadrics = symp_ideal(k, m);
  v.sampler = [k, m](std::uint64_t seed, std::uint64_t index) {
    Rng rng(hash_combine(seed, hash_combine(0x57a9, index)));
    return symp_point(random_nonzero_vec(rng, k), random_vec(rng, m), rng.small_int(5));
  };
  {
    VecQ w(k), q(m);
    w.setZero();
    q.setZero();
    w(0) = Rational(1);
    q(0) = Rational(1);
    v.base_point = symp_point(w, q, Rational(1));
  }
  v.expected.dim_s = k + m - 1;
  v.expected.dim_sec = std::min<Index>(2 * m + 2 * k - 2, dim - 1);
  v.expected.dim_aut = static_cast<Index>(m) * m + static_cast<Index>(k) * m +
                       static_cast<Index>(k) * k;
  v.expected.dim_g1 = static_cast<Index>(sym_dim(k, 2));
  v.line_sampler = [k, m](std::uint64_t seed, std::uint64_t index)
      -> std::optional<std::pair<VecQ, VecQ>> {
    for (std::uint64_t att = 0; att < 32; ++att) {
      Rng rng(hash_combine(seed, hash_combine(0x57aa + att, index)));
      VecQ w = random_nonzero_vec(rng, k);
      VecQ alpha = symp_point(w, random_vec(rng, m), rng.small_int(5));
      VecQ beta = symp_point(w, random_vec(rng, m), rng.small_int(5));
      bool az = true, bz = true;
      for (Index i = 0; i < alpha.size(); ++i) {
        if (!alpha(i).is_zero()) az = false;
        if (!beta(i).is_zero()) bz = false;
      }
      if (az || bz) continue;
      if (independent_pair(alpha, beta)) return std::make_pair(alpha, beta);
    }
    return std::nullopt;
  };
  return v;
}

VarietyPresentation s5_hyperplane() {
  const VarietyPresentation parent = spinor_s5();
  const RowVecQ lambda = random_covector_through(parent.base_point, 16, 40501);
  VarietyPresentation v = hyperplane_section(parent, lambda, "s5_hyperplane");
  v.expected.dim_s = 9;
  v.expected.dim_aut = 31;
  v.expected.dim_g1 = 7;
  return v;
}

VarietyPresentation gr25_hyperplane() {
  const VarietyPresentation parent = plucker_gr2(5);
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(hash_combine(0x6a25, attempt));
    RowVecQ lambda(10);
    for (Index i = 0; i < 10; ++i) lambda(i) = rng.small_int(7);
    lambda(alt_pair_rank(0, 1)) = Rational(0);  // through e0 ^ e1
    const MatQ omega = plucker_covector_skew(lambda, 5);
    if (rank(omega) != 4) continue;  // need a maximal-rank 2-form
    VarietyPresentation v = hyperplane_section(parent, lambda, "gr25_hyperplane");
    v.expected.dim_s = 5;
    v.expected.dim_aut = 16;
    v.expected.dim_g1 = 5;
    return v;
  }
  throw std::runtime_error("gr25_hyperplane: no maximal-rank covector found");
}

VarietyPresentation segre_hyperplane(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("segre_hyperplane: need a, b >= 2");
  const VarietyPresentation parent = segre(a, b);
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(hash_combine(0x5e9ff, attempt));
    RowVecQ lambda(parent.ambient);
    for (Index i = 0; i < parent.ambient; ++i) lambda(i) = rng.small_int(7);
    lambda(0) = Rational(0);  // through e0 (x) e0
    const MatQ h = segre_covector_matrix(lambda, a, b);
    if (rank(h) != std::min(a, b)) continue;
    VarietyPresentation v = hyperplane_section(
        parent, lambda,
        "segre_hyperplane(" + std::to_string(a) + "," + std::to_string(b) + ")");
    v.expected.dim_s = a + b - 3;
    v.expected.dim_g1 = 0;
    return v;
  }
  throw std::runtime_error("segre_hyperplane: no full-rank covector found");
}

VarietyPresentation build_variety(const std::string& id) {
  const auto open = id.find('(');
  if (open == std::string::npos) {
    if (id == "spinor_s5") return spinor_s5();
    if (id == "cayley_op2") return cayley_op2();
    if (id == "s5_hyperplane") return s5_hyperplane();
    if (id == "gr25_hyperplane") return gr25_hyperplane();
    throw std::invalid_argument("unknown variety '" + id + "'");
  }
  const auto close = id.find(')');
  if (close == std::string::npos || close < open)
    throw std::invalid_argument("malformed variety id '" + id + "'");
  const std::string family = id.substr(0, open);
  const std::string args = id.substr(open + 1, close - open - 1);
  std::vector<int> params;
  size_t pos = 0;
  while (pos < args.size()) {
    size_t next = args.find(',', pos);
    if (next == std::string::npos) next = args.size();
    params.push_back(std::stoi(args.substr(pos, next - pos)));
    pos = next + 1;
  }
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("variety '" + family + "' takes " +
                                  std::to_string(n) + " parameter(s)");
  };
  if (family == "veronese") {
    need(1);
    return veronese(params[0]);
  }
  if (family == "segre") {
    need(2);
    return segre(params[0], params[1]);
  }
  if (family == "plucker_gr2") {
    need(1);
    return plucker_gr2(params[0]);
  }
  if (family == "quadric") {
    need(1);
    return quadric(params[0]);
  }
  if (family == "symp_vmrt") {
    need(2);
    return symp_vmrt(params[0], params[1]);
  }
  if (family == "segre_hyperplane") {
    need(2);
    return segre_hyperplane(params[0], params[1]);
  }
  throw std::invalid_argument("unknown variety family '" + family + "'");
}

std::vector<std::string> zoo_ids() {
  return {"quadric(3)",           "quadric(4)",        "quadric(5)",
          "quadric(6)",           "quadric(7)",        "veronese(1)",
          "veronese(2)",          "veronese(3)",       "segre(2,2)",
          "segre(2,3)",           "segre(3,3)",        "plucker_gr2(5)",
          "plucker_gr2(6)",       "spinor_s5",         "cayley_op2",
          "symp_vmrt(2,2)",       "symp_vmrt(3,2)",    "symp_vmrt(2,3)",
          "s5_hyperplane",        "gr25_hyperplane",   "segre_hyperplane(3,3)"};
}

}  // namespace prolab
