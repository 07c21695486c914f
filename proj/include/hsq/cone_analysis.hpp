#pragma once

#include "hsq/cone_feasibility.hpp"
#include "hsq/toric_config.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsq {

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct AnalysisOptions {
  std::size_t sweep_resolution = 720;  // directions per wall in boundary sweeps
  std::size_t joint_resolution = 64;   // shared directions when several walls must meet
  std::size_t samples = 16;            // random points of K for the pointwise degeneracy test
  std::size_t stratum_cap = 0;         // largest |J| enumerated; 0 means n + 1
  std::size_t max_d = 12;              // stratum enumeration is skipped above this d
  std::size_t max_wall_subsets = 256;  // (n+1)-subsets of walls tried for a common point
  std::uint64_t seed = 1;
};

struct ConnectednessVerdict {
  Verdict status = Verdict::Unknown;
  std::vector<FeasibilityVerdict> walls;  // W_k ∩ K for each k
  std::optional<std::size_t> missing_wall;
};

ConnectednessVerdict connectedness_test(const ToricConfig& cfg, const AnalysisOptions& options = {});

/// True iff the polyhedra {s : <s,u_k> >= lambda_k} are bounded for every lambda.
bool compactness_test(const ToricConfig& cfg);

/// A stratum ∩_{k in J} V_k ∩ K that is not known to be empty.
struct Stratum {
  std::vector<std::size_t> j;
  FeasibilityVerdict feasibility;  // Feasible (with a point) or Unknown
  bool lattice_basis = false;      // (u_k)_{k in J} extends to a Z-basis
};

/// Strata with 1 <= |J| <= cap, skipping supersets of empty strata.
std::vector<Stratum> enumerate_strata(const ToricConfig& cfg, const AnalysisOptions& options = {});

struct FreenessVerdict {
  Verdict status = Verdict::Unknown;  // Yes means (F) holds on every nonempty stratum
  std::vector<Stratum> strata;
  std::optional<std::vector<std::size_t>> violating;
  std::string note;
};

FreenessVerdict freeness_test(const ToricConfig& cfg, const AnalysisOptions& options = {});

struct DegeneracyWitness {
  enum class Kind { Walls, ZetaS };
  Kind kind = Kind::Walls;
  ConePoint point;
  std::vector<std::size_t> walls;  // Walls: at least n+1 walls through point
  RationalVector zeta;             // ZetaS: 4 zeta_k^2 (a_k^2 - |b_k|^2) = <s, u_k> for all k
  RationalVector s;
};

/// Exact check of a witness against the configuration.
bool verify_degeneracy_witness(const ToricConfig& cfg, const DegeneracyWitness& w);

struct DegeneracyVerdict {
  enum class Status { Degenerate, NondegenerateAtSampled, Unknown };
  Status status = Status::Unknown;
  std::optional<DegeneracyWitness> witness;
  std::size_t points_tested = 0;
  std::size_t wall_subsets_tested = 0;
  std::size_t wall_subsets_skipped = 0;
  std::string method;
};

const char* to_string(DegeneracyVerdict::Status s);

DegeneracyVerdict degeneracy_test(const ToricConfig& cfg, const AnalysisOptions& options = {},
                                  const std::vector<Stratum>* strata = nullptr);

/// The (zeta, s) search at one point of K; exact when dim n = 1, sampled otherwise.
std::optional<DegeneracyWitness> pointwise_degeneracy(const ToricConfig& cfg, const ConePoint& p,
                                                      std::uint64_t seed, std::size_t zeta_samples);

struct SmoothnessVerdict {
  enum class Status { NecessaryConditionHolds, Fails };
  Status status = Status::NecessaryConditionHolds;
  Incidence incidence;
  std::size_t domain_dimension = 0;  // real dimension of n_{L,J} ⊗ (R x C)
  std::size_t rank = 0;
  bool too_many_walls = false;       // |L| > 3n
};

const char* to_string(SmoothnessVerdict::Status s);

/// Injectivity of Lambda_(a,b); throws std::invalid_argument when (a,b) is not in K.
SmoothnessVerdict smoothness_test(const ToricConfig& cfg, const ConePoint& p);

struct CIntVerdict {
  Verdict status = Verdict::Unknown;  // Yes: point found; No: proven empty
  std::optional<ConePoint> point;
  Rational outer_margin;              // optimum of the margin LP over the outer relaxation
  std::string method;
};

CIntVerdict cint_probe(const ToricConfig& cfg);

/// Every subset of {0..d-1} of the given size, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t d, std::size_t size);

}  // namespace hsq
