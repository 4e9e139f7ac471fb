#include <doctest.h>

#include <sstream>

#include "prolab/rational.hpp"
#include "prolab/rng.hpp"

using prolab::Rational;
using prolab::Rng;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den_str() == "2");  // denominator stays positive
  CHECK(Rational(2, -4).num_str() == "-1");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1).is_one());
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(5, 3).is_integer());
}

TEST_CASE("rational parsing") {
  CHECK(Rational("3/4") == Rational(3, 4));
  CHECK(Rational("-7") == Rational(-7));
  CHECK(Rational("-6/8") == Rational(-3, 4));
  CHECK_THROWS(Rational("1/0"));
  CHECK_THROWS(Rational("abc"));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.inverse() == Rational(3));
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(a / Rational(0));
  // A sum that floats get wrong.
  Rational tenth(1, 10), acc(0);
  for (int i = 0; i < 10; ++i) acc += tenth;
  CHECK(acc == Rational(1));
}

TEST_CASE("rational field identities on seeded randoms") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Rational a(rng.range(-50, 50), rng.range(1, 30));
    const Rational b(rng.range(-50, 50), rng.range(1, 30));
    const Rational c(rng.range(-50, 50), rng.range(1, 30));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  CHECK(Rational(5, 4) > Rational(1));
  CHECK(prolab::abs(Rational(-3, 7)) == Rational(3, 7));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("reduction mod p") {
  const std::uint64_t p = 1000003;
  CHECK(Rational(10).mod_p(p) == 10);
  CHECK(Rational(-1).mod_p(p) == p - 1);
  // 2/3 mod 7 = 2 * 3^{-1} = 2 * 5 = 10 = 3.
  CHECK(Rational(2, 3).mod_p(7) == 3);
  CHECK_THROWS(Rational(1, 7).mod_p(7));
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Rational a(rng.range(-40, 40), rng.range(1, 40));
    const Rational b(rng.range(-40, 40), rng.range(1, 40));
    const std::uint64_t pa = a.mod_p(p), pb = b.mod_p(p);
    CHECK((a * b).mod_p(p) ==
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(pa) * pb) % p));
    CHECK((a + b).mod_p(p) == (pa + pb) % p);
  }
}

TEST_CASE("rational printing") {
  std::ostringstream os;
  os << Rational(-3, 4) << " " << Rational(5);
  CHECK(os.str() == "-3/4 5");
}
