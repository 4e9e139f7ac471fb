#ifndef PROLAB_PROLONGATION_HPP
#define PROLAB_PROLONGATION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prolab/sparse.hpp"
#include "prolab/subspace.hpp"
#include "prolab/sym_multimap.hpp"

namespace prolab {

enum class Field { exact, modp };
enum class Route { automatic, direct, contracted };

struct ProlongOptions {
  Field field = Field::exact;
  std::uint64_t prime = 0;  // 0: derived from seed
  std::uint64_t seed = 0;
  Route route = Route::automatic;
  Index max_unknowns = 200000;      // hard overflow guard
  Index route_threshold = 5000;     // direct route above this goes contracted
};

/// One computed prolongation g^(k).
struct ProlongationResult {
  int k = 0;
  int n = 0;
  Index dim = 0;
  Field field = Field::exact;
  std::uint64_t prime = 0;  // 0 in exact mode
  std::uint64_t seed = 0;
  std::pair<Index, Index> constraint_shape{0, 0};  // (rows, cols) solved
  std::vector<SymMultiMap> basis;                  // exact mode only; canonical
};

/// g^(k) for g a subspace of End(V) in row-major vec coordinates
/// (vec(X)[i*n+j] = X_ij). Exact mode returns a canonical basis; mod-p mode
/// returns the dimension only.
///
/// Membership of a multilinear map in Hom(Sym^k V, g) is imposed on basis
/// tuples only: by multilinearity, A_{v_1..v_k} is a linear combination of
/// the slices A_{e_mu}, so slice membership for every basis multiindex is
/// equivalent to membership for all argument tuples.
ProlongationResult prolong(const Subspace& g, int k, const ProlongOptions& opts = {});

/// The defining construction at any k: unknowns are the SymMultiMap
/// coefficients, one quotient_projector row block per basis multiindex. Used
/// as the k = 1 production path and as a cross-check route for k >= 2.
///
/// For k >= 2 the default path instead iterates the contraction form: a map
/// A lies in g^(k) iff every first-slot contraction A_v lies in g^(k-1) and A
/// is symmetric, so g^(k) = { A in Hom(V, g^(k-1)) | A(e_a)(e_b, rho) =
/// A(e_b)(e_a, rho) }, a far smaller system over a basis of g^(k-1). Both
/// routes return identical canonical bases.
ProlongationResult prolong_direct(const Subspace& g, int k,
                                  const ProlongOptions& opts = {});

/// Assembled direct constraint system (for inspection and differential tests).
SparseMatQ prolongation_constraints(const Subspace& g, int k);

/// Smallest k in [1, k_max) with g^(k) = 0; nullopt means "every checked
/// prolongation was nonzero" (reported as ">= k_max"). Stops at the first
/// zero since g^(k) = 0 forces g^(k+1) = 0.
std::optional<int> vanishing_order(const Subspace& g, int k_max,
                                   const ProlongOptions& opts = {});

/// Conjugated algebra P g P^{-1} as a subspace of End(V).
Subspace conjugate(const Subspace& g, const MatQ& p);

/// Span of a list of equal-shape symmetric maps, as a canonical subspace of
/// the flat coefficient space.
Subspace span_of_maps(const std::vector<SymMultiMap>& maps, int n, int degree);

}  // namespace prolab

#endif  // PROLAB_PROLONGATION_HPP
