#include "prolab/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace prolab {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > UINT64_MAX / num) throw std::overflow_error("binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t sym_dim(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("sym_dim: need n >= 1, k >= 0");
  return binomial(n + k - 1, k);
}

Index multiindex_rank(const MultiIndex& mu) {
  // Colex: rank = sum_i C(mu_i + i - 1, i) over 1-based positions of the
  // sorted tuple.
  std::uint64_t r = 0;
  for (size_t i = 0; i < mu.size(); ++i)
    r += binomial(mu[i] + static_cast<int>(i), static_cast<int>(i) + 1);
  return static_cast<Index>(r);
}

MultiIndex multiindex_unrank(Index r, int n, int k) {
  if (r < 0 || static_cast<std::uint64_t>(r) >= sym_dim(n, k))
    throw std::out_of_range("multiindex_unrank: rank out of range");
  MultiIndex mu(static_cast<size_t>(k));
  std::uint64_t rem = static_cast<std::uint64_t>(r);
  int hi = n - 1;
  for (int pos = k; pos >= 1; --pos) {
    int m = hi;
    while (binomial(m + pos - 1, pos) > rem) --m;
    mu[static_cast<size_t>(pos - 1)] = m;
    rem -= binomial(m + pos - 1, pos);
    hi = m;
  }
  return mu;
}

Index multiindex_rank_with(const MultiIndex& mu, int extra) {
  MultiIndex nu(mu.size() + 1);
  size_t i = 0;
  while (i < mu.size() && mu[i] <= extra) {
    nu[i] = mu[i];
    ++i;
  }
  nu[i] = extra;
  for (; i < mu.size(); ++i) nu[i + 1] = mu[i];
  return multiindex_rank(nu);
}

}  // namespace prolab
