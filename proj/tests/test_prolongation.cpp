#include <doctest.h>

#include "prolab/algebras.hpp"
#include "prolab/modp.hpp"
#include "prolab/prolongation.hpp"
#include "prolab/rng.hpp"

using namespace prolab;

namespace {

// Brute-force oracle: impose membership of A_{v_1..v_k} on EVERY ordered
// basis tuple (not just sorted ones) and solve densely. Exercises the
// claim that sorted tuples suffice, and is independent of the sparse path.
MatQ brute_force_prolongation(const Subspace& g, int k) {
  const int n = static_cast<int>(std::lround(std::sqrt(double(g.ambient_dim()))));
  const MatQ proj = quotient_projector(g);
  const Index unknowns = static_cast<Index>(sym_dim(n, k + 1)) * n;
  std::vector<MultiIndex> tuples;
  MultiIndex cur(static_cast<size_t>(k), 0);
  for (;;) {
    tuples.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == n - 1) {
      cur[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<size_t>(pos)];
  }
  MatQ sys(static_cast<Index>(tuples.size()) * proj.rows(), unknowns);
  sys.setZero();
  Index row = 0;
  for (const auto& tuple : tuples) {
    MultiIndex sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    for (Index q = 0; q < proj.rows(); ++q, ++row) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Rational& c = proj(q, i * n + j);
          if (c.is_zero()) continue;
          sys(row, multiindex_rank_with(sorted, j) * n + i) += c;
        }
    }
  }
  return kernel(sys);
}

Subspace basis_span(const ProlongationResult& r) {
  return span_of_maps(r.basis, r.n, r.k + 1);
}

}  // namespace

TEST_CASE("gl has full prolongations") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const ProlongationResult r = prolong(gl_algebra(n), k);
      CHECK(r.dim == static_cast<Index>(sym_dim(n, k + 1)) * n);
    }
  }
  // Degenerate guard: the unknown cap.
  ProlongOptions tight;
  tight.max_unknowns = 5;
  CHECK_THROWS(prolong(gl_algebra(3), 1, tight));
}

TEST_CASE("classical algebra dimensions") {
  CHECK(gl_algebra(3).dim() == 9);
  CHECK(sl_algebra(3).dim() == 8);
  CHECK(so_algebra(3).dim() == 3);
  CHECK(so_algebra(4).dim() == 6);
  CHECK(co_algebra(3).dim() == 4);
  CHECK(co_algebra(5).dim() == 11);
  CHECK(sp_algebra(4).dim() == 10);
  CHECK(named_algebra("co(4)").dim() == 7);
  CHECK_THROWS(named_algebra("xx(3)"));
  CHECK_THROWS(named_algebra("gl"));
  // so and sp really annihilate their forms.
  const MatQ j = split_symmetric_form(4);
  const Subspace so4 = so_algebra(4);
  for (Index t = 0; t < so4.dim(); ++t) {
    const MatQ x = unvec_endo(so4.basis().row(t).transpose(), 4);
    CHECK(is_zero(x.transpose() * j + j * x));
  }
}

TEST_CASE("prolongations of the small algebras") {
  CHECK(prolong(so_algebra(3), 1).dim == 0);
  CHECK(prolong(co_algebra(3), 1).dim == 3);
  CHECK(prolong(co_algebra(4), 1).dim == 4);
  CHECK(prolong(co_algebra(3), 2).dim == 0);
  CHECK(prolong(sl_algebra(2), 1).dim == 4);  // sl2 = sp2 is of infinite type
  // The Segre symmetry algebra built independently of any ideal machinery.
  const Subspace segre22 = segre_action_algebra(2, 2);
  CHECK(segre22.dim() == 7);
  CHECK(prolong(segre22, 1).dim == 4);
  CHECK(prolong(segre22, 2).dim == 0);
}

TEST_CASE("direct, contracted, and brute-force routes agree") {
  const std::vector<Subspace> algebras = {so_algebra(3), co_algebra(3), co_algebra(4),
                                          sl_algebra(2), sp_algebra(4)};
  for (const auto& g : algebras) {
    for (int k = 1; k <= 2; ++k) {
      ProlongOptions direct_opts, contracted_opts;
      direct_opts.route = Route::direct;
      contracted_opts.route = Route::contracted;
      const ProlongationResult direct = prolong_direct(g, k, direct_opts);
      const ProlongationResult contracted = prolong(g, k, contracted_opts);
      const MatQ oracle = brute_force_prolongation(g, k);
      CHECK(direct.dim == contracted.dim);
      CHECK(direct.dim == oracle.rows());
      if (direct.dim > 0) {
        CHECK(basis_span(direct) == basis_span(contracted));
        // The oracle kernel is canonical over the same flat coordinates.
        const int n = direct.n;
        CHECK(Subspace::from_rref(sym_multimap_flat_size(n, k + 1), oracle) ==
              basis_span(direct));
      }
    }
  }
}

TEST_CASE("every slice of a prolongation basis element lies in the algebra") {
  for (int n : {3, 4}) {
    const Subspace g = co_algebra(n);
    const ProlongationResult r = prolong(g, 1);
    REQUIRE(r.dim == n);
    for (const auto& a : r.basis) {
      for (int j = 0; j < n; ++j) {
        const MatQ s = a.slice({j});
        CHECK(g.contains(vec_endo(s)));
      }
    }
  }
  const Subspace g = co_algebra(4);
  const ProlongationResult r2 = prolong(gl_algebra(2), 2);
  for (const auto& a : r2.basis) {
    for (Index m = 0; m < static_cast<Index>(sym_dim(2, 2)); ++m) {
      const MatQ s = a.slice(multiindex_unrank(m, 2, 2));
      CHECK(gl_algebra(2).contains(vec_endo(s)));
    }
  }
}

TEST_CASE("equivariance under conjugation") {
  Rng rng(19);
  const Subspace g = co_algebra(3);
  const ProlongationResult base = prolong(g, 1);
  for (int t = 0; t < 5; ++t) {
    MatQ p(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) p(i, j) = rng.small_int(3);
    for (Index i = 0; i < 3; ++i) p(i, i) += Rational(5);
    const MatQ p_inv = inverse(p);
    const Subspace conj_g = conjugate(g, p);
    CHECK(conj_g.dim() == g.dim());
    const ProlongationResult moved = prolong(conj_g, 1);
    CHECK(moved.dim == base.dim);
    std::vector<SymMultiMap> transformed;
    for (const auto& a : base.basis) transformed.push_back(transform(a, p, p_inv));
    CHECK(span_of_maps(transformed, 3, 2) == basis_span(moved));
  }
}

TEST_CASE("equivariance at degree two") {
  Rng rng(91);
  const Subspace g = sl_algebra(2);  // infinite type: nonzero at every k
  const ProlongationResult base = prolong(g, 2);
  CHECK(base.dim == 5);  // Sym^4 of the plane
  MatQ p(2, 2);
  p(0, 0) = Rational(2);
  p(0, 1) = Rational(1);
  p(1, 0) = Rational(3);
  p(1, 1) = Rational(2);
  const MatQ p_inv = inverse(p);
  const ProlongationResult moved = prolong(conjugate(g, p), 2);
  CHECK(moved.dim == base.dim);
  std::vector<SymMultiMap> transformed;
  for (const auto& a : base.basis) transformed.push_back(transform(a, p, p_inv));
  CHECK(span_of_maps(transformed, 2, 3) == span_of_maps(moved.basis, 2, 3));
}

TEST_CASE("monotone vanishing") {
  // so(4)^(1) = 0 forces so(4)^(2) = 0.
  CHECK(prolong(so_algebra(4), 1).dim == 0);
  CHECK(prolong(so_algebra(4), 2).dim == 0);
}

TEST_CASE("vanishing order") {
  CHECK(vanishing_order(so_algebra(3), 4) == 1);
  for (int n = 3; n <= 5; ++n) CHECK(vanishing_order(co_algebra(n), 4) == 2);
  CHECK(vanishing_order(gl_algebra(2), 3) == std::nullopt);  // ">= 3"
  CHECK_THROWS(vanishing_order(gl_algebra(2), 0));
}

TEST_CASE("mod-p dimensions match exact ones") {
  const std::vector<Subspace> algebras = {co_algebra(3), co_algebra(4), so_algebra(4),
                                          sl_algebra(2)};
  for (const auto& g : algebras) {
    for (int k = 1; k <= 2; ++k) {
      const Index exact = prolong(g, k).dim;
      for (int which = 0; which < 2; ++which) {
        ProlongOptions opts;
        opts.field = Field::modp;
        opts.prime = random_prime_62(3, which);
        CHECK(prolong(g, k, opts).dim == exact);
        ProlongOptions direct = opts;
        direct.route = Route::direct;
        CHECK(prolong(g, k, direct).dim == exact);
      }
    }
  }
}

TEST_CASE("mod-p mode returns no basis") {
  ProlongOptions opts;
  opts.field = Field::modp;
  opts.seed = 9;
  const ProlongationResult r = prolong(co_algebra(3), 1, opts);
  CHECK(r.dim == 3);
  CHECK(r.basis.empty());
  CHECK(r.prime != 0);
  CHECK(is_prime_u64(r.prime));
}

TEST_CASE("constraint assembly shape") {
  // k = 1 direct: one projector block per variable.
  const Subspace g = co_algebra(3);
  const SparseMatQ sys = prolongation_constraints(g, 1);
  CHECK(sys.rows() == 3 * (9 - g.dim()));
  CHECK(sys.cols() == static_cast<Index>(sym_dim(3, 2)) * 3);
}

TEST_CASE("quotient projector of so(3) has six rows") {
  const Subspace so3 = so_algebra(3);
  const MatQ proj = quotient_projector(so3);
  CHECK(proj.rows() == 6);
  CHECK(Subspace::from_rref(9, kernel(proj)) == so3);
}
