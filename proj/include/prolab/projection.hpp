#ifndef PROLAB_PROJECTION_HPP
#define PROLAB_PROJECTION_HPP

#include <cstdint>
#include <string>

#include "prolab/geometry.hpp"

namespace prolab {

/// The four families with closed-form projected prolongations:
///   I    rank-one maps in Hom(A, B)          -> Hom(B/Im(L), Ker(L))
///   II   rank-two forms in Lambda^2 W        -> Lambda^2 (W/Im(L))*
///   III  rank-one forms in Sym^2 W           -> Sym^2 (W/Im(L))*
///   Symp Z in (W (x) Q) + Sym^2 W            -> Sym^2 (W/Im_W(L2))*
enum class ProjType { I, II, III, Symp };

struct ProjParams {
  int a = 3, b = 3;  // type I
  int n = 6;         // types II (dim W) and III (dim W)
  int k = 3, m = 2;  // type Symp
};

struct ProjectionCheck {
  Index engine_dim = -1;   // kill_prolongation inside the computed g^(1)
  Index model_dim = -1;    // commutant model solved from the closed condition
  Index formula_dim = -1;  // binomial closed form from Im(L)/Ker(L)
  bool containments_ok = false;  // L inside L(psi) for every model psi
  std::string note;
  bool ok() const {
    return engine_dim == model_dim && model_dim == formula_dim && containments_ok;
  }
};

/// Seeded random subspace L of the type's ambient space, spanned by `dim`
/// low-rank points of the cone mixed with general vectors (so both the
/// degenerate and the generic branches of the formulas get exercised).
Subspace random_projection_center(ProjType t, const ProjParams& p, Index dim,
                                  std::uint64_t seed);

/// Evaluates the engine side (kill_prolongation of the computed first
/// prolongation), the model side, and the closed form, for an arbitrary L.
ProjectionCheck verify_projection_formula(ProjType t, const ProjParams& p,
                                          const Subspace& l);

/// Convenience: the engine first prolongation for a type (cached per call).
struct ProjContext {
  ProjType type;
  ProjParams params;
  std::vector<SymMultiMap> g1;
  Index ambient = 0;
};
ProjContext make_projection_context(ProjType t, const ProjParams& p);

/// Same as verify_projection_formula but reusing a prepared context.
ProjectionCheck verify_with_context(const ProjContext& ctx, const Subspace& l);

/// True when v is a maximal-rank point of the type's matrix model: the
/// "general point" hypothesis of the projection-vanishing statement.
bool max_rank_point(ProjType t, const ProjParams& p, const VecQ& v);

}  // namespace prolab

#endif  // PROLAB_PROJECTION_HPP
