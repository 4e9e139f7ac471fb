#include "prolab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace prolab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_init(v_);
  mpq_set_si(v_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(v_, v_, d);
  mpq_clear(d);
}

Rational::Rational(const std::string& text) {
  mpq_init(v_);
  if (mpq_set_str(v_, text.c_str(), 10) != 0) {
    mpq_clear(v_);
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(v_)) == 0) {
    mpq_clear(v_);
    throw std::domain_error("Rational: zero denominator in '" + text + "'");
  }
  mpq_canonicalize(v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t Rational::mod_p(std::uint64_t p) const {
  mpz_t t;
  mpz_init(t);
  mpz_mod_ui(t, mpq_denref(v_), p);
  std::uint64_t den = mpz_get_ui(t);
  if (den == 0) {
    mpz_clear(t);
    throw std::domain_error("Rational: denominator divisible by p");
  }
  mpz_mod_ui(t, mpq_numref(v_), p);
  std::uint64_t num = mpz_get_ui(t);
  mpz_clear(t);
  // den has an inverse since p is prime and den != 0 mod p.
  return mulmod_u64(num, powmod_u64(den, p - 2, p), p);
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, v_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::num_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_numref(v_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::den_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_denref(v_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

long Rational::num_long() const {
  if (!mpz_fits_slong_p(mpq_numref(v_)))
    throw std::overflow_error("Rational: numerator exceeds long");
  return mpz_get_si(mpq_numref(v_));
}

long Rational::den_long() const {
  if (!mpz_fits_slong_p(mpq_denref(v_)))
    throw std::overflow_error("Rational: denominator exceeds long");
  return mpz_get_si(mpq_denref(v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace prolab
