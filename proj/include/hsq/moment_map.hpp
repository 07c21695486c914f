#pragma once

#include "hsq/matrix.hpp"
#include "hsq/quadratic_surd.hpp"
#include "hsq/rational.hpp"
#include "hsq/split_quaternion.hpp"
#include "hsq/toric_config.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace hsq {

/// (mu_I, mu_c) as vectors of n ⊂ R^d and n ⊗ C ⊂ C^d.
struct MomentValue {
  RationalVector mu_i;
  ComplexVector mu_c;
  bool is_zero() const;
};

MomentValue moment_map(const ToricConfig& cfg, const ComplexPair& zw);

/// The torus invariants s_k = (|z_k|^2 + |w_k|^2)/2 and p_k = conj(z_k) w_k.
struct TorusInvariants {
  RationalVector half_norm_sum;
  ComplexVector zbar_w;
};

TorusInvariants torus_invariants(const ComplexPair& zw);

/// Solves <a,u_k> = s_k + lambda1_k and <b,u_k> = i p_k + lambda_c_k; empty when inconsistent.
std::optional<ConePoint> level_witness(const ToricConfig& cfg, const TorusInvariants& inv);
std::optional<ConePoint> level_witness(const ToricConfig& cfg, const ComplexPair& zw);

/// One coordinate of a fiber orbit. |z_k|^2 and |w_k|^2 are exact quadratic surds.
struct FiberCoordinate {
  QuadraticSurd z_mod2;
  QuadraticSurd w_mod2;
  ComplexRational zbar_w;
  int sign = 0;  // the choice of root for |z_k|^2: +1 or -1, 0 on the wall
};

/// A T^n-orbit in mu^{-1}(0) over a point of K.
struct FiberOrbit {
  std::vector<FiberCoordinate> coords;

  TorusInvariants invariants() const;
  /// The canonical representative (z_k real >= 0, else w_k real >= 0) when all moduli are rational squares.
  std::optional<ComplexPair> rational_representative() const;
  /// Canonical representative in floating point, as (Re z, Im z, Re w, Im w) per slot.
  std::vector<std::array<double, 4>> approximate_representative() const;
};

/// The 2^{d-|L|} orbits over (a,b); throws std::invalid_argument when (a,b) is not in K.
std::vector<FiberOrbit> fiber_enumerate(const ToricConfig& cfg, const ConePoint& p);

enum class InducedStatus { Ok, DegenerateAtPoint, NotOnLevelSet };

const char* to_string(InducedStatus s);

struct StructureRelations {
  bool i_squared = false;   // I^2 = -1
  bool s_squared = false;   // S^2 = 1
  bool t_squared = false;   // T^2 = 1
  bool is_t = false;        // IS = T
  bool si_minus_t = false;  // SI = -T
  bool g_i = false;         // g(IX, IY) = g(X, Y)
  bool g_s = false;         // g(SX, SY) = -g(X, Y)
  bool g_t = false;         // g(TX, TY) = -g(X, Y)
  bool all() const { return i_squared && s_squared && t_squared && is_t && si_minus_t && g_i && g_s && g_t; }
};

StructureRelations check_relations(const RationalMatrix& i, const RationalMatrix& s, const RationalMatrix& t,
                                   const RationalMatrix& gram);

/// The structure induced on the horizontal space H = (G + IG + SG + TG)^perp at a point of mu^{-1}(0),
/// where G is the tangent space of the N-orbit. Matrices are written in the basis given by the columns of basis.
struct InducedStructure {
  InducedStatus status = InducedStatus::NotOnLevelSet;
  std::size_t orbit_dimension = 0;
  std::size_t moment_rank = 0;  // rank of d(mu) at the point
  RationalMatrix basis;         // 4d x dim H
  RationalMatrix gram, omega_i, omega_s, omega_t;
  RationalMatrix i_endo, s_endo, t_endo;  // recovered from the forms, A = gram^{-1} omega^T
  bool restriction_matches = false;       // recovered endomorphisms agree with the ambient ones on H
  StructureRelations relations;

  std::size_t dimension() const { return basis.cols(); }
};

InducedStructure induced_structure(const ToricConfig& cfg, const ComplexPair& zw);

}  // namespace hsq
