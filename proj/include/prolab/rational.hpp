#ifndef PROLAB_RATIONAL_HPP
#define PROLAB_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace prolab {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
/// Arithmetic never rounds; division by zero throws.
class Rational {
 public:
  Rational() noexcept { mpq_init(v_); }
  Rational(long n) {  // NOLINT(google-explicit-constructor): scalar literal
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(int n) : Rational(static_cast<long>(n)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const std::string& text);  // "a", "a/b", "-a/b"

  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) >= 0;
  }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }

  Rational inverse() const;
  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }

  /// Value mod a prime p as an element of F_p; throws if p divides the
  /// denominator.
  std::uint64_t mod_p(std::uint64_t p) const;

  std::string str() const;      // "a" or "a/b"
  std::string num_str() const;  // numerator as decimal string
  std::string den_str() const;  // denominator as decimal string

  /// Numerator/denominator if they fit a long; throws otherwise.
  long num_long() const;
  long den_long() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_t v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace prolab

#endif  // PROLAB_RATIONAL_HPP
