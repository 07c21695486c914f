#pragma once

#include "hsq/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hsq {

enum class Relation { GreaterEqual, LessEqual, Equal };

/// coeffs . x  (relation)  rhs
struct LinearConstraint {
  RationalVector coeffs;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

/// Variables are free unless flagged nonnegative. With an objective the program is
/// a maximization; without one only feasibility is decided.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;  // empty means all free
  std::optional<RationalVector> objective;

  void add(RationalVector coeffs, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
  }
};

/// Multipliers y (one per constraint; y >= 0 on >=, y <= 0 on <=, free on =) with
/// sum y_i a_i = 0 and sum y_i b_i > 0: a proof that no x satisfies the system.
struct FarkasCertificate {
  RationalVector multipliers;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;          // feasible point (Optimal / Unbounded)
  Rational objective_value;      // Optimal only
  RationalVector ray;            // Unbounded: improving recession direction
  std::optional<FarkasCertificate> certificate;  // Infeasible
};

/// Exact two-phase simplex with Bland's rule. Infeasible results carry a verified
/// Farkas certificate.
LpResult solve_lp(const LinearProgram& lp);

bool satisfies(const LinearProgram& lp, const RationalVector& x);
bool verify_certificate(const LinearProgram& lp, const FarkasCertificate& cert);

}  // namespace hsq
