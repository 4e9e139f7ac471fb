#ifndef PROLAB_MULTIINDEX_HPP
#define PROLAB_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

#include "prolab/matrix.hpp"

namespace prolab {

/// Sorted (nondecreasing) tuple of k variable indices in [0, n): a degree-k
/// monomial. Ranked colexicographically.
using MultiIndex = std::vector<int>;

/// C(n, k) as a 64-bit count; throws on overflow.
std::uint64_t binomial(int n, int k);

/// dim Sym^k(Q^n) = C(n+k-1, k).
std::uint64_t sym_dim(int n, int k);

/// Colex rank of a sorted tuple; bijection with [0, sym_dim(n, k)).
Index multiindex_rank(const MultiIndex& mu);

/// Inverse of multiindex_rank; throws when r is out of range.
MultiIndex multiindex_unrank(Index r, int n, int k);

/// Rank of mu with one extra index j merged in (avoids re-sorting).
Index multiindex_rank_with(const MultiIndex& mu, int extra);

}  // namespace prolab

#endif  // PROLAB_MULTIINDEX_HPP
