#include "prolab/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace prolab {

void SparseMatQ::add(Index r, Index c, const Rational& v) {
  if (v.is_zero()) return;
  Row& row = data_[static_cast<size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, Index col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

void SparseMatQ::set_row(Index r, Row entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Row merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Entry& e) { return e.second.is_zero(); }),
               merged.end());
  data_[static_cast<size_t>(r)] = std::move(merged);
}

std::size_t SparseMatQ::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

MatQ SparseMatQ::to_dense() const {
  MatQ m(rows_, cols_);
  m.setZero();
  for (Index r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(r)]) m(r, c) = v;
  return m;
}

SparseMatQ SparseMatQ::from_dense(const MatQ& m) {
  SparseMatQ s(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    SparseMatQ::Row row;
    for (Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) row.push_back({c, m(r, c)});
    s.data_[static_cast<size_t>(r)] = std::move(row);
  }
  return s;
}

namespace {

using Row = SparseMatQ::Row;

// row_s -= factor * row_pivot, merged by column.
Row axpy(const Row& s, const Rational& factor, const Row& pivot) {
  Row out;
  out.reserve(s.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < s.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < s.size() && s[i].first < pivot[j].first)) {
      out.push_back(s[i++]);
    } else if (i == s.size() || pivot[j].first < s[i].first) {
      out.push_back({pivot[j].first, -(factor * pivot[j].second)});
      ++j;
    } else {
      Rational v = s[i].second - factor * pivot[j].second;
      if (!v.is_zero()) out.push_back({s[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

namespace {

// Coordinate-list elimination for large sparse systems (< 10% density,
// > 1e5 entries), dense RREF otherwise.
MatQ kernel_by_density(const SparseMatQ& m) {
  const std::size_t entries =
      static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols());
  if (entries > 100000 && m.nnz() * 10 < entries)
    return sparse_eliminate(m, /*want_kernel=*/true).kernel;
  return kernel(m.to_dense());
}

}  // namespace

MatQ sparse_system_kernel(const SparseMatQ& m) {
  const Index nr = m.rows(), nc = m.cols();
  if (nr <= 3 * nc + 64) return kernel_by_density(m);

  // Stride sample covering the whole row range.
  std::vector<Index> batch;
  const Index target = 2 * nc + 64;
  const Index stride = std::max<Index>(1, nr / target);
  for (Index r = 0; r < nr; r += stride) batch.push_back(r);

  for (int round = 0; round < 64; ++round) {
    SparseMatQ sub(static_cast<Index>(batch.size()), nc);
    for (size_t i = 0; i < batch.size(); ++i) sub.set_row(static_cast<Index>(i), m.row(batch[i]));
    MatQ ker = kernel_by_density(sub);
    if (ker.rows() == 0) return ker;
    // Verify every row annihilates the candidate kernel.
    std::vector<Index> violators;
    for (Index r = 0; r < nr; ++r) {
      const auto& row = m.row(r);
      if (row.empty()) continue;
      bool bad = false;
      for (Index k = 0; k < ker.rows() && !bad; ++k) {
        Rational acc(0);
        for (const auto& [c, v] : row)
          if (!ker(k, c).is_zero()) acc += v * ker(k, c);
        if (!acc.is_zero()) bad = true;
      }
      if (bad) {
        violators.push_back(r);
        if (violators.size() >= static_cast<size_t>(nc)) break;
      }
    }
    if (violators.empty()) return ker;
    batch.insert(batch.end(), violators.begin(), violators.end());
    std::sort(batch.begin(), batch.end());
    batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
  }
  // Give up on sampling; solve the full system.
  return kernel_by_density(m);
}

SparseElimination sparse_eliminate(const SparseMatQ& m, bool want_kernel) {
  const Index nr = m.rows(), nc = m.cols();
  std::vector<Row> rows(static_cast<size_t>(nr));
  for (Index r = 0; r < nr; ++r) rows[static_cast<size_t>(r)] = m.row(r);

  std::vector<bool> active(static_cast<size_t>(nr), true);
  std::vector<Index> col_count(static_cast<size_t>(nc), 0);
  // col -> candidate rows (lazily cleaned).
  std::vector<std::vector<Index>> col_rows(static_cast<size_t>(nc));
  for (Index r = 0; r < nr; ++r) {
    for (const auto& [c, v] : rows[static_cast<size_t>(r)]) {
      ++col_count[static_cast<size_t>(c)];
      col_rows[static_cast<size_t>(c)].push_back(r);
    }
  }

  auto row_has_col = [&](Index r, Index c) -> const Rational* {
    const Row& row = rows[static_cast<size_t>(r)];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const SparseMatQ::Entry& e, Index col) { return e.first < col; });
    if (it != row.end() && it->first == c) return &it->second;
    return nullptr;
  };

  struct Pivot {
    Index row, col;
    Row entries;  // snapshot at elimination time
  };
  std::vector<Pivot> pivots;

  for (;;) {
    // Min column degree, then sparsest row in that column, then smallest
    // column/row index.
    Index best_col = -1;
    for (Index c = 0; c < nc; ++c) {
      if (col_count[static_cast<size_t>(c)] == 0) continue;
      if (best_col < 0 ||
          col_count[static_cast<size_t>(c)] < col_count[static_cast<size_t>(best_col)])
        best_col = c;
    }
    if (best_col < 0) break;

    Index best_row = -1;
    size_t best_len = 0;
    auto& cands = col_rows[static_cast<size_t>(best_col)];
    std::vector<Index> alive;
    alive.reserve(cands.size());
    for (Index r : cands) {
      if (!active[static_cast<size_t>(r)] || !row_has_col(r, best_col)) continue;
      alive.push_back(r);
      const size_t len = rows[static_cast<size_t>(r)].size();
      if (best_row < 0 || len < best_len || (len == best_len && r < best_row)) {
        best_row = r;
        best_len = len;
      }
    }
    cands = alive;
    // col_count tracks active rows exactly, so a positive count guarantees
    // a live candidate.
    if (best_row < 0)
      throw std::logic_error("sparse_eliminate: column count out of sync");

    const Rational pivot_val = *row_has_col(best_row, best_col);
    active[static_cast<size_t>(best_row)] = false;
    for (const auto& [c, v] : rows[static_cast<size_t>(best_row)])
      --col_count[static_cast<size_t>(c)];

    for (Index r : cands) {
      if (r == best_row || !active[static_cast<size_t>(r)]) continue;
      const Rational* entry = row_has_col(r, best_col);
      if (!entry) continue;
      const Rational factor = *entry / pivot_val;
      for (const auto& [c, v] : rows[static_cast<size_t>(r)])
        --col_count[static_cast<size_t>(c)];
      rows[static_cast<size_t>(r)] =
          axpy(rows[static_cast<size_t>(r)], factor, rows[static_cast<size_t>(best_row)]);
      for (const auto& [c, v] : rows[static_cast<size_t>(r)]) {
        ++col_count[static_cast<size_t>(c)];
        if (c != best_col) col_rows[static_cast<size_t>(c)].push_back(r);
      }
    }
    pivots.push_back({best_row, best_col, rows[static_cast<size_t>(best_row)]});
  }

  SparseElimination out;
  out.rank = static_cast<Index>(pivots.size());
  if (!want_kernel) return out;

  std::vector<bool> is_pivot_col(static_cast<size_t>(nc), false);
  for (const auto& p : pivots) is_pivot_col[static_cast<size_t>(p.col)] = true;

  const Index kdim = nc - out.rank;
  MatQ ker(kdim, nc);
  ker.setZero();
  Index k = 0;
  for (Index f = 0; f < nc; ++f) {
    if (is_pivot_col[static_cast<size_t>(f)]) continue;
    ker(k, f) = Rational(1);
    // Back-substitute pivots in reverse elimination order: each pivot row
    // only involves its own pivot column, later pivot columns, and free
    // columns, all already determined.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational acc(0);
      const Rational* diag = nullptr;
      for (const auto& [c, v] : it->entries) {
        if (c == it->col) {
          diag = &v;
          continue;
        }
        if (!ker(k, c).is_zero()) acc += v * ker(k, c);
      }
      if (!diag) throw std::logic_error("sparse_eliminate: lost pivot entry");
      ker(k, it->col) = -(acc / *diag);
    }
    ++k;
  }
  rref_in_place(ker);
  out.kernel = std::move(ker);
  return out;
}

}  // namespace prolab
