#ifndef PROLAB_OCTONION_HPP
#define PROLAB_OCTONION_HPP

#include <array>

#include "prolab/matrix.hpp"

namespace prolab {

/// Split octonions as Zorn vector matrices (a, v; w, b) with a, b scalars
/// and v, w in Q^3:
///   (a,v;w,b)(a',v';w',b') =
///     (aa' + v.w', av' + b'v - w x w'; a'w + bw' + v x v', bb' + w.v')
/// Norm N = ab - v.w is multiplicative; the algebra is alternative but not
/// associative. Basis order: a, v1, v2, v3, w1, w2, w3, b.
class SplitOctonion {
 public:
  SplitOctonion() {
    for (auto& c : c_) c = Rational(0);
  }
  static SplitOctonion scalar(const Rational& a) {
    SplitOctonion o;
    o.c_[0] = a;
    o.c_[7] = a;
    return o;
  }
  static SplitOctonion from_coords(const std::array<Rational, 8>& c) {
    SplitOctonion o;
    o.c_ = c;
    return o;
  }

  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  SplitOctonion operator+(const SplitOctonion& o) const;
  SplitOctonion operator-(const SplitOctonion& o) const;
  SplitOctonion operator*(const SplitOctonion& o) const;
  SplitOctonion scaled(const Rational& c) const;

  SplitOctonion conj() const;  // (b, -v; -w, a)
  Rational norm() const;       // ab - v.w
  Rational trace() const { return c_[0] + c_[7]; }

  bool is_zero() const;
  bool operator==(const SplitOctonion& o) const { return c_ == o.c_; }

  /// Left multiplication x -> (*this) * x as an 8x8 matrix.
  MatQ left_mult_matrix() const;

 private:
  std::array<Rational, 8> c_;  // (a, v1..v3, w1..w3, b)
};

/// 3x3 Hermitian matrix over the split octonions:
///   [ xi1   c3    conj(c2) ]
///   [ conj(c3)  xi2   c1   ]
///   [ c2    conj(c1)  xi3  ]
/// The 27 coordinates are (xi1, xi2, xi3, c1, c2, c3).
struct Jordan27 {
  Rational xi1, xi2, xi3;
  SplitOctonion c1, c2, c3;

  /// Flat coordinates: [0..2] diagonal, [3..10] c1, [11..18] c2, [19..26] c3.
  VecQ to_vec() const;
  static Jordan27 from_vec(const VecQ& v);

  Rational trace() const { return xi1 + xi2 + xi3; }
};

/// Adjoint X^# = X^2 - tr(X) X + sigma(X) I with sigma = (tr(X)^2 - tr(X^2))/2.
/// X has rank <= 1 exactly when X^# = 0.
Jordan27 jordan_adjoint(const Jordan27& x);

/// Rank-1 element from a column vector (t, x, y) with t a scalar:
/// entries X_ij = v_i conj(v_j). Always satisfies jordan_adjoint == 0.
Jordan27 jordan_rank_one(const Rational& t, const SplitOctonion& x,
                         const SplitOctonion& y);

}  // namespace prolab

#endif  // PROLAB_OCTONION_HPP
