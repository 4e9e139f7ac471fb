#ifndef PROLAB_VARIETY_HPP
#define PROLAB_VARIETY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prolab/quadratic_form.hpp"

namespace prolab {

/// Deterministic point generator: pure function of (seed, index), every
/// value an exact rational point of the affine cone.
using Sampler = std::function<VecQ(std::uint64_t seed, std::uint64_t index)>;

/// Generator of pairs (alpha, beta) spanning a 2-plane inside the cone
/// (a projective line on the variety through [alpha]). nullopt when the
/// family carries no lines.
using LinePairSampler =
    std::function<std::optional<std::pair<VecQ, VecQ>>(std::uint64_t seed,
                                                       std::uint64_t index)>;

/// Builds a sampler for the slice by ker(lambda); points are produced in
/// the parent's coordinates and must satisfy lambda exactly.
using SectionSamplerFactory = std::function<Sampler(const RowVecQ& lambda)>;
using SectionLineFactory = std::function<LinePairSampler(const RowVecQ& lambda)>;

struct VarietyExpected {
  std::optional<Index> dim_s;    // projective dimension of S
  std::optional<Index> dim_sec;  // projective dimension of Sec(S)
  std::optional<Index> dim_aut;  // dim aut of the cone
  std::optional<Index> dim_g1;   // dim of the first prolongation
};

/// A named projective cone: ambient space, degree-2 ideal, exact point
/// sampler, one base point, and expected dimensions where the classical
/// value is known.
struct VarietyPresentation {
  std::string name;
  Index ambient = 0;
  QuadraticIdeal quadrics;
  Sampler sampler;
  VecQ base_point;
  VarietyExpected expected;

  /// Nonzero when the sampler cycles a fixed point list (user-supplied
  /// varieties); callers cap their draw counts accordingly.
  Index fixed_sample_count = 0;

  LinePairSampler line_sampler;  // null or nullopt-returning when no lines
  SectionSamplerFactory section_sampler;
  SectionLineFactory section_line_sampler;
};

/// `count` sampled points as rows, deduplicated, each verified to satisfy
/// every quadric exactly. When count >= ambient the rows must span the
/// ambient space (non-degeneracy); violations throw with diagnostics.
MatQ sample_points(const VarietyPresentation& v, Index count, std::uint64_t seed,
                   bool check_spanning = true);

/// Degree-2 forms vanishing on `count` samples: kernel of the evaluation
/// map Sym^2 V* -> functions on samples.
QuadraticIdeal quadrics_from_samples(const Sampler& sampler, Index n, Index count,
                                     std::uint64_t seed);

/// Slice by the hyperplane ker(lambda) through the base point: new ambient
/// is ker(lambda) in the coordinates of its RREF basis, quadrics restrict,
/// and the sampler comes from the parent's section machinery.
VarietyPresentation hyperplane_section(const VarietyPresentation& parent,
                                       const RowVecQ& lambda, std::string name);

/// Random covector vanishing on the base point (seeded, small integers).
RowVecQ random_covector_through(const VecQ& base, Index n, std::uint64_t seed);

/// Push a point of ker(lambda) into section coordinates and back.
struct SectionCoords {
  MatQ basis;                 // (n-1) x n RREF basis of ker(lambda)
  std::vector<Index> pivots;  // pivot columns
  VecQ to_section(const VecQ& ambient_point) const;
  VecQ to_parent(const VecQ& section_point) const;
};
SectionCoords section_coords(const RowVecQ& lambda);

}  // namespace prolab

#endif  // PROLAB_VARIETY_HPP
