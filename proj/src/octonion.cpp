#include "prolab/octonion.hpp"

namespace prolab {

namespace {

using V3 = std::array<Rational, 3>;

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const V3& a, const V3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

SplitOctonion SplitOctonion::operator+(const SplitOctonion& o) const {
  SplitOctonion r;
  for (int i = 0; i < 8; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] + o[i];
  return r;
}

SplitOctonion SplitOctonion::operator-(const SplitOctonion& o) const {
  SplitOctonion r;
  for (int i = 0; i < 8; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] - o[i];
  return r;
}

SplitOctonion SplitOctonion::scaled(const Rational& c) const {
  SplitOctonion r;
  for (int i = 0; i < 8; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * c;
  return r;
}

SplitOctonion SplitOctonion::operator*(const SplitOctonion& o) const {
  const Rational &a1 = c_[0], &b1 = c_[7];
  const Rational &a2 = o.c_[0], &b2 = o.c_[7];
  const V3 v1{c_[1], c_[2], c_[3]}, w1{c_[4], c_[5], c_[6]};
  const V3 v2{o.c_[1], o.c_[2], o.c_[3]}, w2{o.c_[4], o.c_[5], o.c_[6]};

  SplitOctonion r;
  r.c_[0] = a1 * a2 + dot(v1, w2);
  const V3 wx = cross(w1, w2);
  const V3 vx = cross(v1, v2);
  for (int i = 0; i < 3; ++i) {
    r.c_[static_cast<size_t>(1 + i)] =
        a1 * v2[static_cast<size_t>(i)] + b2 * v1[static_cast<size_t>(i)] - wx[static_cast<size_t>(i)];
    r.c_[static_cast<size_t>(4 + i)] =
        a2 * w1[static_cast<size_t>(i)] + b1 * w2[static_cast<size_t>(i)] + vx[static_cast<size_t>(i)];
  }
  r.c_[7] = b1 * b2 + dot(w1, v2);
  return r;
}

SplitOctonion SplitOctonion::conj() const {
  SplitOctonion r;
  r.c_[0] = c_[7];
  r.c_[7] = c_[0];
  for (int i = 1; i < 7; ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
  return r;
}

Rational SplitOctonion::norm() const {
  const V3 v{c_[1], c_[2], c_[3]}, w{c_[4], c_[5], c_[6]};
  return c_[0] * c_[7] - dot(v, w);
}

bool SplitOctonion::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

MatQ SplitOctonion::left_mult_matrix() const {
  MatQ m(8, 8);
  m.setZero();
  for (int j = 0; j < 8; ++j) {
    SplitOctonion e;
    e[j] = Rational(1);
    const SplitOctonion p = (*this) * e;
    for (int i = 0; i < 8; ++i) m(i, j) = p[i];
  }
  return m;
}

VecQ Jordan27::to_vec() const {
  VecQ v(27);
  v(0) = xi1;
  v(1) = xi2;
  v(2) = xi3;
  for (int i = 0; i < 8; ++i) {
    v(3 + i) = c1[i];
    v(11 + i) = c2[i];
    v(19 + i) = c3[i];
  }
  return v;
}

Jordan27 Jordan27::from_vec(const VecQ& v) {
  Jordan27 x;
  x.xi1 = v(0);
  x.xi2 = v(1);
  x.xi3 = v(2);
  for (int i = 0; i < 8; ++i) {
    x.c1[i] = v(3 + i);
    x.c2[i] = v(11 + i);
    x.c3[i] = v(19 + i);
  }
  return x;
}

Jordan27 jordan_adjoint(const Jordan27& x) {
  // Matrix square of the Hermitian matrix; every entry is a sum of binary
  // octonion products, so no associativity issues arise.
  const Rational n1 = x.c1.norm(), n2 = x.c2.norm(), n3 = x.c3.norm();
  Jordan27 sq;
  sq.xi1 = x.xi1 * x.xi1 + n3 + n2;
  sq.xi2 = n3 + x.xi2 * x.xi2 + n1;
  sq.xi3 = n2 + n1 + x.xi3 * x.xi3;
  // (X^2)_12 = xi1 c3 + c3 xi2 + conj(c2) conj(c1)
  sq.c3 = x.c3.scaled(x.xi1 + x.xi2) + x.c2.conj() * x.c1.conj();
  // (X^2)_23 = conj(c3) conj(c2) + xi2 c1 + c1 xi3
  sq.c1 = x.c1.scaled(x.xi2 + x.xi3) + x.c3.conj() * x.c2.conj();
  // (X^2)_31 = c2 xi1 + conj(c1) conj(c3) + xi3 c2
  sq.c2 = x.c2.scaled(x.xi3 + x.xi1) + x.c1.conj() * x.c3.conj();

  const Rational tr = x.trace();
  const Rational tr_sq = sq.xi1 + sq.xi2 + sq.xi3;
  const Rational sigma = (tr * tr - tr_sq) / Rational(2);

  Jordan27 adj;
  adj.xi1 = sq.xi1 - tr * x.xi1 + sigma;
  adj.xi2 = sq.xi2 - tr * x.xi2 + sigma;
  adj.xi3 = sq.xi3 - tr * x.xi3 + sigma;
  adj.c1 = sq.c1 - x.c1.scaled(tr);
  adj.c2 = sq.c2 - x.c2.scaled(tr);
  adj.c3 = sq.c3 - x.c3.scaled(tr);
  return adj;
}

Jordan27 jordan_rank_one(const Rational& t, const SplitOctonion& x,
                         const SplitOctonion& y) {
  const SplitOctonion ts = SplitOctonion::scalar(t);
  Jordan27 out;
  out.xi1 = t * t;
  out.xi2 = x.norm();
  out.xi3 = y.norm();
  out.c3 = ts * x.conj();  // X_12 = v1 conj(v2)
  out.c1 = x * y.conj();   // X_23 = v2 conj(v3)
  // X_13 = v1 conj(v3) = conj(c2), so c2 = conj(t conj(y)) = t y.
  out.c2 = ts * y;
  return out;
}

}  // namespace prolab
