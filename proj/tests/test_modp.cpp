#include <doctest.h>

#include "prolab/modp.hpp"
#include "prolab/rng.hpp"

using namespace prolab;

TEST_CASE("primality testing") {
  CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne prime
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000003));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));        // Carmichael
  CHECK(!is_prime_u64(1ull << 62));
  CHECK(!is_prime_u64((1ull << 61) + 1));
}

TEST_CASE("seeded 62-bit primes") {
  const std::uint64_t p0 = random_prime_62(0);
  const std::uint64_t p1 = random_prime_62(0, 1);
  CHECK(p0 != p1);
  CHECK(is_prime_u64(p0));
  CHECK(is_prime_u64(p1));
  CHECK(p0 >= (1ull << 61));
  CHECK(p0 < (1ull << 62));
  CHECK(random_prime_62(0) == p0);  // deterministic
  CHECK(random_prime_62(1) != p0);
}

TEST_CASE("Fp arithmetic") {
  const FpContext f{1000003};
  CHECK(f.add(1000000, 5) == 2);
  CHECK(f.sub(3, 5) == 1000001);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.neg(0) == 0);
  CHECK(f.pow(2, 20) == (1ull << 20) % f.p);
}

TEST_CASE("rank mod p on the spec witnesses") {
  const std::uint64_t mersenne = (1ull << 61) - 1;
  CHECK(rank_mod_p(identity_q(5), mersenne) == 5);

  // A matrix whose single entry is p: rank 0 mod p, rank 1 exactly.
  const std::uint64_t p = 1000003;
  MatQ m(1, 1);
  m(0, 0) = Rational(static_cast<long>(p));
  CHECK(rank(m) == 1);
  CHECK(rank_mod_p(m, p) == 0);
  CHECK(rank_mod_p(m, p) <= rank(m));
}

TEST_CASE("rank mod two independent primes equals exact rank") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const Index rows = 3 + static_cast<Index>(rng.below(10));
    const Index cols = 3 + static_cast<Index>(rng.below(10));
    MatQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        m(i, j) = Rational(rng.range(-9, 9), rng.range(1, 5));
    const Index exact = rank(m);
    CHECK(rank_mod_p(m, random_prime_62(0)) == exact);
    CHECK(rank_mod_p(m, random_prime_62(0, 1)) == exact);
  }
}

TEST_CASE("rank_mod_p rejects denominators divisible by p") {
  MatQ m(1, 1);
  m(0, 0) = Rational(1, 7);
  CHECK_THROWS(rank_mod_p(m, 7));
  CHECK_THROWS(rank_mod_p(m, 6));  // not prime
}

TEST_CASE("fp kernel dimensions and membership") {
  Rng rng(33);
  const std::uint64_t p = random_prime_62(5);
  const FpContext f{p};
  MatQ m(6, 9);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 9; ++j) m(i, j) = rng.small_int(5);
  FpMat fm = reduce_mod_p(m, p);
  const FpMat ker = fp_kernel(fm, f);
  CHECK(ker.rows == 9 - fp_rank(reduce_mod_p(m, p), f));
  CHECK(ker.rows == kernel(m).rows());  // good prime
  // Every kernel row annihilates the matrix mod p.
  const FpMat fm2 = reduce_mod_p(m, p);
  for (Index r = 0; r < ker.rows; ++r)
    for (Index i = 0; i < 6; ++i) {
      std::uint64_t acc = 0;
      for (Index j = 0; j < 9; ++j) acc = f.add(acc, f.mul(fm2.at(i, j), ker.at(r, j)));
      CHECK(acc == 0);
    }
}

TEST_CASE("two-prime agreement on a 200 x 150 instance") {
  Rng rng(77);
  MatQ m(200, 150);
  m.setZero();
  // Rank 90 by construction: 90 random rows, the rest combinations.
  MatQ gen(90, 150);
  for (Index i = 0; i < 90; ++i)
    for (Index j = 0; j < 150; ++j) gen(i, j) = rng.small_int(3);
  for (Index r = 0; r < 200; ++r) {
    if (r < 90) {
      m.row(r) = gen.row(r);
    } else {
      m.row(r) = gen.row(static_cast<Index>(rng.below(90))) +
                 gen.row(static_cast<Index>(rng.below(90))) * rng.small_int(2);
    }
  }
  const Index r1 = rank_mod_p(m, random_prime_62(101, 0));
  const Index r2 = rank_mod_p(m, random_prime_62(101, 1));
  CHECK(r1 == r2);
  CHECK(r1 == rank(m));
}

TEST_CASE("sparse rank mod p matches dense") {
  Rng rng(44);
  SparseMatQ sm(60, 45);
  MatQ dm(60, 45);
  dm.setZero();
  for (Index r = 0; r < 60; ++r) {
    SparseMatQ::Row entries;
    for (Index c = 0; c < 45; ++c)
      if (rng.below(10) == 0) {
        const Rational v = rng.small_nonzero(7);
        entries.push_back({c, v});
        dm(r, c) = v;
      }
    sm.set_row(r, std::move(entries));
  }
  const std::uint64_t p = random_prime_62(2);
  CHECK(sparse_rank_mod_p(sm, p) == fp_rank(reduce_mod_p(dm, p), FpContext{p}));
  CHECK(sparse_rank_mod_p(sm, p) == rank(dm));
}
