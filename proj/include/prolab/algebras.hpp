#ifndef PROLAB_ALGEBRAS_HPP
#define PROLAB_ALGEBRAS_HPP

#include <string>

#include "prolab/subspace.hpp"

namespace prolab {

// Classical matrix Lie algebras as subspaces of End(Q^n) in row-major vec
// coordinates. Orthogonal/symplectic forms are split so every algebra has a
// plentiful rational structure.

Subspace gl_algebra(int n);
Subspace sl_algebra(int n);
/// so of the split symmetric form (antidiagonal pairing).
Subspace so_algebra(int n);
/// co = so + scalars.
Subspace co_algebra(int n);
/// sp of the split skew form; n must be even.
Subspace sp_algebra(int n);

/// The split symmetric form used by so/co, as a matrix.
MatQ split_symmetric_form(int n);
/// The split skew form used by sp.
MatQ split_skew_form(int n);

/// Image of gl(A) + gl(B) acting on A (x) B (coords (i,j) -> i*b + j).
Subspace segre_action_algebra(int a, int b);
/// Image of gl(W) acting on Lambda^2 W (pair coords, colex).
Subspace plucker_action_algebra(int m);
/// Image of gl(W) acting on Sym^2 W (matrix-entry coords).
Subspace veronese_action_algebra(int w);

/// vec/unvec helpers for End(Q^n), row-major.
VecQ vec_endo(const MatQ& x);
MatQ unvec_endo(const VecQ& v, int n);

/// Parse "gl(3)", "sl(4)", "so(5)", "co(6)", "sp(4)"; throws on unknown.
Subspace named_algebra(const std::string& name);

}  // namespace prolab

#endif  // PROLAB_ALGEBRAS_HPP
