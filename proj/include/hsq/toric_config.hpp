#pragma once

#include "hsq/cone_feasibility.hpp"
#include "hsq/lattice.hpp"
#include "hsq/matrix.hpp"
#include "hsq/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsq {

/// Raised when a configuration violates one of its invariants; what() names it.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subtorus N of T^d, given by the integral columns u_1..u_d of an n x d matrix
/// (N is the kernel of exp . beta . exp^{-1} with beta(e_k) = u_k), together with the
/// level shifts lambda^(1), lambda^(2), lambda^(3).
struct ToricConfig {
  std::size_t d = 0;
  std::size_t n = 0;
  IntegerMatrix u;  // n x d
  RationalVector lambda1;
  RationalVector lambda2;
  RationalVector lambda3;

  /// Throws ConfigError unless shapes agree, d >= n >= 1 and the u_k span R^n.
  void validate() const;

  IntegerVector column(std::size_t k) const { return u.column(k); }
  ComplexRational lambda_c(std::size_t k) const { return {lambda2[k], lambda3[k]}; }
};

/// d = n + 1, u_k = e_k (k <= n), u_{n+1} = e_1 + ... + e_n, lambda^(1) = (0,...,0,-lambda).
ToricConfig example_family(std::size_t n, const Rational& lambda);

/// Lie algebra data of N as a subspace of R^d.
struct TorusData {
  std::vector<RationalVector> kernel_basis;   // rational basis of ker beta
  std::vector<IntegerVector> lattice_basis;   // Z-basis of ker beta ∩ Z^d
  RationalMatrix projector;                   // Euclidean orthogonal projection onto ker beta
  std::vector<RationalVector> alpha;          // alpha_k = projector e_k
  RationalVector c1, c2, c3;                  // c_j = sum_k lambda^(j)_k alpha_k

  std::size_t dimension() const { return kernel_basis.size(); }
};

TorusData build_torus_data(const ToricConfig& cfg);

/// A point (a, b) of R^n x C^n.
struct ConePoint {
  RationalVector a;
  ComplexVector b;
  friend bool operator==(const ConePoint&, const ConePoint&) = default;
};

/// a_k = <a, u_k> - lambda^(1)_k and b_k = <b, u_k> - lambda^(c)_k for every k.
struct ConeValues {
  RationalVector a;
  ComplexVector b;
};

ConeValues cone_values(const ToricConfig& cfg, const ConePoint& p);

/// Index sets at a point: J = {k : a_k = 0 = b_k}, L = {k : a_k = |b_k|} (0-based).
struct Incidence {
  bool in_k = false;
  std::vector<std::size_t> j;
  std::vector<std::size_t> l;
};

Incidence incidence(const ToricConfig& cfg, const ConePoint& p);

/// The system K = ∩ K_k in the variables (a, Re b, Im b) in R^{3n}.
SocSystem cone_system(const ToricConfig& cfg);

RationalVector to_variables(const ConePoint& p);
ConePoint from_variables(const RationalVector& x, std::size_t n);

/// Adds a_k = 0 and b_k = 0 for each k in indices (the vertex set V_k).
void add_vertex_equalities(SocSystem& sys, const ToricConfig& cfg, const std::vector<std::size_t>& indices);

}  // namespace hsq
