#include "prolab/modp.hpp"

#include <algorithm>
#include <stdexcept>

#include "prolab/rng.hpp"

namespace prolab {

std::uint64_t FpContext::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::uint64_t seed, int index) {
  Rng rng(hash_combine(seed, 0x9d2c5680u + static_cast<std::uint64_t>(index)));
  for (;;) {
    std::uint64_t c = (rng.next() | (1ull << 61) | 1ull) & ((1ull << 62) - 1);
    if (is_prime_u64(c)) return c;
  }
}

FpMat reduce_mod_p(const MatQ& m, std::uint64_t p) {
  FpMat out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.at(r, c) = m(r, c).mod_p(p);
  return out;
}

std::vector<Index> fp_rref_in_place(FpMat& m, const FpContext& F) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols && row < m.rows; ++col) {
    Index piv = -1;
    for (Index r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (Index c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    const std::uint64_t inv = F.inv(m.at(row, col));
    for (Index c = col; c < m.cols; ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
    for (Index r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const std::uint64_t f = m.at(r, col);
      if (f == 0) continue;
      for (Index c = col; c < m.cols; ++c)
        m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Index fp_rank(FpMat m, const FpContext& F) {
  // Forward elimination only; cheaper than full RREF.
  Index rank = 0;
  for (Index col = 0; col < m.cols && rank < m.rows; ++col) {
    Index piv = -1;
    for (Index r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (Index c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    const std::uint64_t inv = F.inv(m.at(rank, col));
    for (Index r = rank + 1; r < m.rows; ++r) {
      const std::uint64_t f = m.at(r, col);
      if (f == 0) continue;
      const std::uint64_t fi = F.mul(f, inv);
      for (Index c = col; c < m.cols; ++c)
        m.at(r, c) = F.sub(m.at(r, c), F.mul(fi, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

FpMat fp_kernel(FpMat m, const FpContext& F) {
  const Index nc = m.cols;
  const auto pivots = fp_rref_in_place(m, F);
  std::vector<bool> is_pivot(static_cast<size_t>(nc), false);
  for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  FpMat ker(nc - static_cast<Index>(pivots.size()), nc);
  Index k = 0;
  for (Index f = 0; f < nc; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    ker.at(k, f) = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      ker.at(k, pivots[i]) = F.neg(m.at(static_cast<Index>(i), f));
    ++k;
  }
  fp_rref_in_place(ker, F);
  return ker;
}

Index sparse_rank_mod_p(const SparseMatQ& m, std::uint64_t p) {
  const FpContext F{p};
  using Entry = std::pair<Index, std::uint64_t>;
  using Row = std::vector<Entry>;
  std::vector<Row> rows(static_cast<size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) {
    Row row;
    row.reserve(m.row(r).size());
    for (const auto& [c, v] : m.row(r)) {
      const std::uint64_t fv = v.mod_p(p);
      if (fv) row.push_back({c, fv});
    }
    rows[static_cast<size_t>(r)] = std::move(row);
  }
  // pivot row per column, in reduced order of insertion.
  std::vector<Row> pivot_row(static_cast<size_t>(m.cols()));
  std::vector<bool> has_pivot(static_cast<size_t>(m.cols()), false);
  Index rank = 0;
  for (auto& row : rows) {
    Row cur = std::move(row);
    while (!cur.empty()) {
      const Index lead = cur.front().first;
      if (!has_pivot[static_cast<size_t>(lead)]) {
        const std::uint64_t inv = F.inv(cur.front().second);
        for (auto& e : cur) e.second = F.mul(e.second, inv);
        pivot_row[static_cast<size_t>(lead)] = std::move(cur);
        has_pivot[static_cast<size_t>(lead)] = true;
        ++rank;
        break;
      }
      const Row& pr = pivot_row[static_cast<size_t>(lead)];
      const std::uint64_t f = cur.front().second;
      Row next;
      next.reserve(cur.size() + pr.size());
      size_t i = 1, j = 1;  // both start at `lead`, which cancels
      while (i < cur.size() || j < pr.size()) {
        if (j == pr.size() || (i < cur.size() && cur[i].first < pr[j].first)) {
          next.push_back(cur[i++]);
        } else if (i == cur.size() || pr[j].first < cur[i].first) {
          next.push_back({pr[j].first, F.neg(F.mul(f, pr[j].second))});
          ++j;
        } else {
          const std::uint64_t v = F.sub(cur[i].second, F.mul(f, pr[j].second));
          if (v) next.push_back({cur[i].first, v});
          ++i;
          ++j;
        }
      }
      cur = std::move(next);
    }
  }
  return rank;
}

Index rank_mod_p(const MatQ& m, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("rank_mod_p: p not prime");
  const std::size_t entries = static_cast<std::size_t>(m.rows()) *
                              static_cast<std::size_t>(m.cols());
  std::size_t nz = 0;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) ++nz;
  // Sparse threshold per the density rule used by the exact path.
  if (entries > 100000 && nz * 10 < entries)
    return sparse_rank_mod_p(SparseMatQ::from_dense(m), p);
  return fp_rank(reduce_mod_p(m, p), FpContext{p});
}

}  // namespace prolab
