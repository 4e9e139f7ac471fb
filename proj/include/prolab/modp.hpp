#ifndef PROLAB_MODP_HPP
#define PROLAB_MODP_HPP

#include <cstdint>
#include <vector>

#include "prolab/matrix.hpp"
#include "prolab/sparse.hpp"

namespace prolab {

/// Arithmetic in F_p for a 62-bit prime p.
struct FpContext {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
};

bool is_prime_u64(std::uint64_t n);

/// Deterministic seeded 62-bit prime (the i-th prime drawn from the seed).
std::uint64_t random_prime_62(std::uint64_t seed, int index = 0);

/// Dense matrix over F_p, row-major.
struct FpMat {
  Index rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  FpMat() = default;
  FpMat(Index r, Index c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}
  std::uint64_t& at(Index r, Index c) { return a[static_cast<size_t>(r * cols + c)]; }
  std::uint64_t at(Index r, Index c) const { return a[static_cast<size_t>(r * cols + c)]; }
};

/// Reduce an exact matrix mod p. Throws if p divides any denominator.
FpMat reduce_mod_p(const MatQ& m, std::uint64_t p);

Index fp_rank(FpMat m, const FpContext& F);

/// RREF in place (same pivot rule as the exact path); returns pivot columns.
std::vector<Index> fp_rref_in_place(FpMat& m, const FpContext& F);

/// Kernel basis mod p (rows = nullity), canonicalized by RREF.
FpMat fp_kernel(FpMat m, const FpContext& F);

/// Rank of a sparse exact matrix reduced mod p, via sparse elimination.
Index sparse_rank_mod_p(const SparseMatQ& m, std::uint64_t p);

/// rank_mod_p on an exact dense matrix: <= exact rank, with equality away
/// from finitely many bad primes.
Index rank_mod_p(const MatQ& m, std::uint64_t p);

}  // namespace prolab

#endif  // PROLAB_MODP_HPP
