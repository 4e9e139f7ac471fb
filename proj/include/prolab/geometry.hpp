#ifndef PROLAB_GEOMETRY_HPP
#define PROLAB_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "prolab/prolongation.hpp"
#include "prolab/variety.hpp"

namespace prolab {

/// Infinitesimal automorphisms of the cone cut out by the ideal: endomorphisms
/// X with X^T Q + Q X inside span(I2) for every generator Q. For quadratically
/// generated ideals this is aut of the cone.
Subspace cone_aut(const QuadraticIdeal& ideal);

/// Degree-2 Zariski tangent space {v : B_q(alpha, v) = 0 for all q}; contains
/// alpha. Throws when alpha is off the cone.
Subspace tangent_space(const QuadraticIdeal& ideal, const VecQ& alpha);

struct SecantReport {
  Index dim = -1;  // max over trials of dim(T_a + T_b) - 1
  bool certified = false;  // two independent trials attained the max
  std::vector<Index> trial_dims;
};

/// Terracini sampling of dim Sec(S).
SecantReport terracini_secant_dim(const VarietyPresentation& v, int trials,
                                  std::uint64_t seed);

struct VmrtReport {
  bool has_lines = false;
  Index dim = -1;  // projective dimension of the VMRT at a general point
  int draws_used = 0;
};

/// Dimension of the variety of lines through a sampled point, computed as the
/// tangent dimension of (cone cap tangent hyperplane section) at a second
/// point of a sampled line, minus 2. has_lines = false when the family
/// carries no lines (reported instead of a dimension).
VmrtReport vmrt_dimension(const VarietyPresentation& v, int draws, std::uint64_t seed);

struct KilledProlongation {
  Index dim = 0;
  std::vector<SymMultiMap> basis;
};

/// {A in g1 : A(l, .) = 0 for all l in L}: the prolongation of the projected
/// cone under the biregular-projection correspondence.
KilledProlongation kill_prolongation(const std::vector<SymMultiMap>& g1,
                                     const Subspace& l);

/// {X in g : X(L) inside L} and {X in g : X(L) = 0}.
Subspace stabilizer(const Subspace& g, const Subspace& l);
Subspace killer(const Subspace& g, const Subspace& l);

struct LambdaReport {
  bool ok = false;
  VecQ lambda;             // covector with A(a, a) = lambda(a) a on samples
  std::string diagnostic;  // set when ok is false
};

/// For A in a first prolongation: verifies A(a, a) is proportional to a on
/// every sample, solves for the covector, and (when an ideal is supplied)
/// checks lambda(a) a' + lambda(a') a = 2 A(a, a') at sampled tangent pairs
/// with exactly zero residual.
LambdaReport lambda_of(const SymMultiMap& a, const MatQ& samples,
                       const QuadraticIdeal* ideal = nullptr, int tangent_checks = 20,
                       std::uint64_t seed = 0);

}  // namespace prolab

#endif  // PROLAB_GEOMETRY_HPP
