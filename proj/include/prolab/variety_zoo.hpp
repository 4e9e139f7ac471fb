#ifndef PROLAB_VARIETY_ZOO_HPP
#define PROLAB_VARIETY_ZOO_HPP

#include <string>
#include <vector>

#include "prolab/variety.hpp"

namespace prolab {

// Homogeneous cones used throughout the dimension suite. Every builder
// returns a presentation whose sampler, base point and quadrics are exact.

/// v_2(P^n), ambient Sym^2(Q^{n+1}) in symmetric-matrix coordinates.
VarietyPresentation veronese(int n);
/// P^{a-1} x P^{b-1} in Q^a (x) Q^b, coordinates (i, j) -> i*b + j.
VarietyPresentation segre(int a, int b);
/// Gr(2, m) in Lambda^2 Q^m, strictly-increasing pair coordinates.
VarietyPresentation plucker_gr2(int m);
/// Q^{n-2} in P^{n-1}: the split quadric hypersurface on Q^n.
VarietyPresentation quadric(int n);
/// The 10-dimensional spinor variety S_5 in P^15 via x = (1, w, w^w/2).
VarietyPresentation spinor_s5();
/// The Cayley plane OP^2 in P^26: rank-1 locus X^# = 0 in the 27-dimensional
/// exceptional Jordan algebra over the split octonions.
VarietyPresentation cayley_op2();
/// Z = {(w (x) q, lam w^2)} in (W (x) Q) + Sym^2 W, dim W = k, dim Q = m.
VarietyPresentation symp_vmrt(int k, int m);
/// General hyperplane section of S_5 through the base point.
VarietyPresentation s5_hyperplane();
/// General hyperplane section of Gr(2,5): the odd symplectic Grassmannian.
VarietyPresentation gr25_hyperplane();
/// Nonsingular hyperplane section of the Segre.
VarietyPresentation segre_hyperplane(int a, int b);

/// Parse "veronese(2)", "spinor_s5", "segre_hyperplane(3,3)", ...
VarietyPresentation build_variety(const std::string& id);

/// Canonical registry instances (the ids the battery and CLI list).
std::vector<std::string> zoo_ids();

/// Pair coordinates for Lambda^2: colex rank of i < j.
Index alt_pair_rank(int i, int j);

/// Quadratic form extracted from a homogeneous degree-2 coordinate function
/// by polarization.
QuadraticForm polarize(const std::function<Rational(const VecQ&)>& f, Index n);

}  // namespace prolab

#endif  // PROLAB_VARIETY_ZOO_HPP
