#include <doctest.h>

#include "prolab/projection.hpp"
#include "prolab/rng.hpp"
#include "prolab/variety_zoo.hpp"

using namespace prolab;

TEST_CASE("type I at a rank-one center") {
  // a = b = 3, L = span{E_11}: Hom(B/Im L, Ker L) has dimension 2 * 2 = 4.
  ProjParams p;
  MatQ row(1, 9);
  row.setZero();
  row(0, 0) = Rational(1);
  const ProjectionCheck chk =
      verify_projection_formula(ProjType::I, p, Subspace::span(9, row));
  CHECK(chk.engine_dim == 4);
  CHECK(chk.model_dim == 4);
  CHECK(chk.formula_dim == 4);
  CHECK(chk.containments_ok);
  CHECK(chk.ok());
}

TEST_CASE("type III at a rank-one center") {
  // n = 4, L = span{e_1^2}: Sym^2 (W / Im L)* has dimension 6.
  ProjParams p;
  p.n = 4;
  MatQ row(1, 10);
  row.setZero();
  row(0, multiindex_rank({0, 0})) = Rational(1);
  const ProjectionCheck chk =
      verify_projection_formula(ProjType::III, p, Subspace::span(10, row));
  CHECK(chk.engine_dim == 6);
  CHECK(chk.ok());
}

TEST_CASE("type II at a decomposable center") {
  ProjParams p;
  p.n = 6;
  MatQ row(1, 15);
  row.setZero();
  row(0, alt_pair_rank(0, 1)) = Rational(1);
  const ProjectionCheck chk =
      verify_projection_formula(ProjType::II, p, Subspace::span(15, row));
  CHECK(chk.engine_dim == 6);  // Lambda^2 of a 4-dimensional quotient
  CHECK(chk.ok());
}

TEST_CASE("type Symp at a generic rank-one center") {
  // k = 3, m = 2, L2 = span{w (x) q}: Im_W is a line, so Sym^2 of the
  // 2-dimensional quotient has dimension 3.
  ProjParams p;
  p.k = 3;
  p.m = 2;
  MatQ row(1, 12);
  row.setZero();
  const int w[3] = {1, 2, -1}, q[2] = {1, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) row(0, i * 2 + j) = Rational(w[i] * q[j]);
  const ProjectionCheck chk =
      verify_projection_formula(ProjType::Symp, p, Subspace::span(12, row));
  CHECK(chk.engine_dim == 3);
  CHECK(chk.ok());
}

TEST_CASE("random centers agree across engine, model and formula") {
  for (ProjType t : {ProjType::I, ProjType::II, ProjType::III, ProjType::Symp}) {
    ProjParams p;
    if (t == ProjType::III) p.n = 4;
    const ProjContext ctx = make_projection_context(t, p);
    for (int s = 0; s < 10; ++s) {
      const Subspace l =
          random_projection_center(t, p, 2 + s % 3, 500 + static_cast<std::uint64_t>(s));
      const ProjectionCheck chk = verify_with_context(ctx, l);
      CHECK(chk.engine_dim == chk.model_dim);
      CHECK(chk.model_dim == chk.formula_dim);
      CHECK(chk.containments_ok);
    }
  }
}

TEST_CASE("full-image centers kill the projected prolongation") {
  // A center containing a general (full-rank) element forces Im(L) = W.
  Rng rng(63);
  {
    ProjParams p;  // type I, a = b = 3
    MatQ row(1, 9);
    for (Index i = 0; i < 9; ++i) row(0, i) = rng.small_int(7);
    const ProjectionCheck chk =
        verify_projection_formula(ProjType::I, p, Subspace::span(9, row));
    CHECK(chk.formula_dim == 0);
    CHECK(chk.engine_dim == 0);
  }
  {
    ProjParams p;
    p.n = 6;
    MatQ row(1, 15);
    for (Index i = 0; i < 15; ++i) row(0, i) = rng.small_int(7);
    const ProjectionCheck chk =
        verify_projection_formula(ProjType::II, p, Subspace::span(15, row));
    CHECK(chk.engine_dim == 0);
    CHECK(chk.ok());
  }
}

TEST_CASE("projection context reuses the engine prolongation") {
  ProjParams p;
  const ProjContext ctx = make_projection_context(ProjType::I, p);
  CHECK(ctx.g1.size() == 9);   // dim V for the Segre of two planes
  CHECK(ctx.ambient == 9);
}
