#pragma once

#include "hsq/split_quaternion.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsq {

class NoConsistentAssignment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational points with ||xi||^2 = 1 in B^{n+1}, from lines through (1, 0, ..., 0).
std::vector<BVector> pseudo_sphere_points(std::size_t n, std::size_t count, std::uint64_t seed);

/// Rational points with ||xi||^2 > 0 in B^{n+1}.
std::vector<BVector> positive_norm_points(std::size_t n, std::size_t count, std::uint64_t seed);

/// xi^a(xi) = xi q_a for imaginary unit split quaternions q_1, q_2, q_3.
struct SasakiAssignment {
  std::array<SplitQuaternion, 3> q;
  /// [xi^1,xi^2] = -kappa xi^3, [xi^2,xi^3] = kappa xi^1, [xi^3,xi^1] = -kappa xi^2.
  Rational kappa;
};

std::string to_string(const SasakiAssignment& a);

struct SasakiReport {
  std::size_t n = 0;
  std::vector<SasakiAssignment> valid;  // every signed permutation of (i, s, t) passing the algebraic checks
  SasakiAssignment chosen;
  std::size_t points_checked = 0;
  bool tangent = true;        // <xi, xi q_a> = 0
  bool lengths = true;        // squared lengths 1, -1, -1
  bool orthogonal = true;     // pairwise g-orthogonal
  bool brackets = true;       // commutator relations with the common scale kappa
  bool killing = true;        // R^T G + G R = 0 for each field
  bool phi_relations = true;  // Phi_1 xi^2 = xi^3 = -Phi_2 xi^1 and the cyclic analogues
  bool all() const { return tangent && lengths && orthogonal && brackets && killing && phi_relations; }
};

/// Searches signed permutations of (i, s, t) and verifies the chosen one at every point.
/// Throws NoConsistentAssignment when the search fails, std::invalid_argument when a point is off the sphere.
SasakiReport sasaki_check(std::size_t n, const std::vector<BVector>& points);

/// Phi(Y) = tangential part of Y q at xi on the pseudo-sphere.
BVector phi(const BVector& xi, const SplitQuaternion& q, const BVector& y);

struct ConeCompareReport {
  std::size_t points_checked = 0;
  SasakiAssignment assignment;         // the valid assignment matching the flat (I, S, T), if any
  bool euler_field_agrees = false;     // psi = r d/dr: exact agreement at every point
  bool unit_radial_agrees_at_r1 = false;
  double unit_radial_max_mismatch = 0; // psi = d/dr, over points with r != 1
  std::size_t unit_radial_points = 0;
};

/// Compares I = Phi_1 - g(xi^1, .) psi + (1/r) dr (x) xi^1 (and S, T) with the flat endomorphisms.
ConeCompareReport cone_compare(std::size_t n, const std::vector<BVector>& points);

}  // namespace hsq
