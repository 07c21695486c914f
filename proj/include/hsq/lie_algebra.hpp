#pragma once

#include "hsq/matrix.hpp"
#include "hsq/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hsq {

/// Real Lie algebra with basis e_1..e_m and [e_i, e_j] = sum_k c_ij^k e_k (indices 0-based).
class LieAlgebraData {
 public:
  LieAlgebraData() = default;
  explicit LieAlgebraData(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dimension() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  /// Sets c_ij^k and c_ji^k = -c_ij^k.
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// Sets [e_i, e_j] = value (and [e_j, e_i] = -value).
  void set_bracket(std::size_t i, std::size_t j, const RationalVector& value);
  /// Raw write without antisymmetrisation, for testing malformed data.
  void set_raw(std::size_t i, std::size_t j, std::size_t k, const Rational& value) { c_[(i * dim_ + j) * dim_ + k] = value; }

  RationalVector bracket(std::size_t i, std::size_t j) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  bool is_antisymmetric() const;
  bool is_abelian() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Antisymmetric p-form on R^m, stored by strictly increasing index tuples.
/// Wedge products use the determinant convention, (E^1 ^ E^2)(e_1, e_2) = 1.
class AlternatingForm {
 public:
  AlternatingForm() = default;
  AlternatingForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  static AlternatingForm basis(std::size_t dim, std::size_t i);
  /// Coefficient matrix M with M(i,j) = alpha(e_i, e_j) -> 2-form.
  static AlternatingForm from_matrix(const RationalMatrix& m);

  std::size_t dimension() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<std::vector<std::size_t>, Rational>& terms() const { return terms_; }

  /// Adds value * E^{i_1} ^ ... ^ E^{i_p}; indices in any order.
  void add_term(std::vector<std::size_t> indices, const Rational& value);
  Rational evaluate_basis(std::vector<std::size_t> indices) const;
  Rational evaluate(const std::vector<RationalVector>& vectors) const;
  RationalMatrix to_matrix() const;  // degree 2 only
  bool is_zero() const { return terms_.empty(); }

  friend AlternatingForm operator+(const AlternatingForm& a, const AlternatingForm& b);
  friend AlternatingForm operator-(const AlternatingForm& a, const AlternatingForm& b);
  friend AlternatingForm operator*(const Rational& s, const AlternatingForm& a);
  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<std::vector<std::size_t>, Rational> terms_;
};

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b);

/// "E1^E4 - E2^E5" with 1-based labels; "0" for the zero form.
std::string to_string(const AlternatingForm& f, const std::string& label = "E");

struct JacobiViolation {
  std::size_t i, j, k;
  RationalVector residue;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

std::vector<JacobiViolation> jacobi_check(const LieAlgebraData& l);

/// Smallest s with g^{s+1} = 0 in the lower central series; empty when not nilpotent.
std::optional<std::size_t> nilpotency_step(const LieAlgebraData& l);

/// Chevalley-Eilenberg differential of a left-invariant form:
/// d phi(X_0..X_p) = sum_{a<b} (-1)^{a+b} phi([X_a, X_b], X_0, .. X_a^, .. X_b^, .., X_p).
AlternatingForm ce_differential(const LieAlgebraData& l, const AlternatingForm& phi);

struct NamedForm {
  std::string name;
  AlternatingForm form;
};

struct ClosednessEntry {
  std::string name;
  AlternatingForm form;
  AlternatingForm residue;
  bool closed() const { return residue.is_zero(); }
};

std::vector<ClosednessEntry> closedness_report(const LieAlgebraData& l, const std::vector<NamedForm>& forms);

enum class EndoStatus { Ok, DegenerateMetric };

struct EndoResult {
  EndoStatus status = EndoStatus::DegenerateMetric;
  RationalMatrix endo;      // in the given subspace basis
  RationalMatrix square;
  bool squares_to_minus_one = false;
  bool squares_to_one = false;
  bool identity_holds = false;    // omega(X,Y) = g(AX,Y) on the subspace
  bool preserves_metric = false;  // g(AX,AY) = g(X,Y)
  bool reverses_metric = false;   // g(AX,AY) = -g(X,Y)
};

/// Solves omega(X,Y) = g(AX,Y) for A on span(basis). g is a symmetric coefficient matrix.
EndoResult endo_from_pair(const RationalMatrix& g, const AlternatingForm& omega, const std::vector<RationalVector>& basis);

/// Symmetric coefficient matrix of E^i v E^j = E^i (x) E^j + E^j (x) E^i (i != j).
RationalMatrix symmetric_product(std::size_t dim, std::size_t i, std::size_t j);

/// The five-dimensional algebra with [E1,E2] = E3, [E3,E1] = E4, [E3,E2] = E5.
LieAlgebraData five_dim_example();

/// Metric and forms printed for the four-dimensional symmetric example, plus sign-flipped variants.
struct FourDimExampleForms {
  RationalMatrix g;
  std::vector<NamedForm> printed;   // omega_I, omega_S, omega_T as printed
  std::vector<NamedForm> variants;  // the same with the sign of the second term flipped
};

FourDimExampleForms four_dim_example_forms();

/// Three-dimensional Heisenberg algebra [e1, e2] = e3.
LieAlgebraData heisenberg_algebra();

}  // namespace hsq
