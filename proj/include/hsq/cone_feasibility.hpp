#pragma once

#include "hsq/lattice.hpp"
#include "hsq/linear_program.hpp"
#include "hsq/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hsq {

/// coeffs . x + constant
struct AffineForm {
  RationalVector coeffs;
  Rational constant;

  Rational operator()(const RationalVector& x) const;
};

/// apex(x) >= |(first(x), second(x))|
struct ConeConstraint {
  AffineForm apex;
  AffineForm first;
  AffineForm second;

  bool contains(const RationalVector& x) const;
  /// apex = |(first, second)| exactly (apex >= 0 and apex^2 = first^2 + second^2).
  bool on_boundary(const RationalVector& x) const;
};

struct SocSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> linear;
  std::vector<ConeConstraint> cones;

  bool satisfied_by(const RationalVector& x) const;
};

enum class Feasibility { Feasible, Infeasible, Unknown };

std::string to_string(Feasibility f);

struct FeasibilityVerdict {
  Feasibility status = Feasibility::Unknown;
  RationalVector witness;                 // Feasible: exact rational point
  std::optional<FarkasCertificate> farkas; // Infeasible via an LP relaxation
  Rational exclusion_margin;               // Infeasible via a cone-combination bound
  std::string method;
  std::size_t resolution = 0;              // directions tried (boundary sweeps)
};

struct SocOptions {
  /// Inner polygon sizes tried in order; each polygon's vertices lie on the unit circle.
  std::vector<std::size_t> inner_polygons{4, 8, 16};
  bool outer_relaxation = true;
  bool numeric_fallback = true;
  double tolerance = 1e-9;
  std::size_t max_iterations = 20000;
};

/// Exact rational LP over linear constraints only.
FeasibilityVerdict rational_lp_feasible(const LinearProgram& lp);

/// Feasible verdicts carry an exactly verified rational witness; Infeasible verdicts
/// come from an exact polyhedral outer relaxation; everything else is Unknown.
FeasibilityVerdict soc_feasible(const SocSystem& sys, const SocOptions& options = {});

/// Unit vectors on the circle with rational coordinates: the four axis directions
/// followed by a nested sequence of Pythagorean points, count in total.
std::vector<std::pair<Rational, Rational>> sweep_directions(std::size_t count);

struct BoundaryOptions {
  std::size_t resolution = 720;
  SocOptions soc{{8}, false, false};
};

/// Decides whether the feasible set meets the wall of cone `cone_index`.
FeasibilityVerdict boundary_meet(const SocSystem& sys, std::size_t cone_index, const BoundaryOptions& options = {});

/// Whether the forms apex_j = |first_j, second_j| can be made to hold simultaneously for
/// all indices in `walls` at a common feasible point, by sweeping direction tuples.
FeasibilityVerdict joint_boundary_meet(const SocSystem& sys, const std::vector<std::size_t>& walls,
                                       const BoundaryOptions& options = {});

/// True iff {s : <s, u_k> >= 0 for all k} = {0}; columns of u are the u_k.
bool positively_spanning(const IntegerMatrix& u);

}  // namespace hsq
