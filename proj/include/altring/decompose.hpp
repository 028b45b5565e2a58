#pragma once

// Splitting a Lie multiplicative map as phi = psi + tau, with psi an
// isomorphism (branch dagger) or the negative of an anti-isomorphism (branch
// double dagger) and tau central-valued, plus the certificates for the
// result.

#include <optional>
#include <string_view>
#include <vector>

#include "altring/lie_checks.hpp"

namespace altring {

enum class Branch { Dagger, DoubleDagger };

std::string_view to_string(Branch b);
// "dagger" or "ddagger"; nullopt otherwise.
std::optional<Branch> parse_branch(std::string_view text);

struct DecompositionResult {
  Branch branch;
  PeirceFrame<PrimeField> source_frame;
  PeirceFrame<PrimeField> target_frame;  // built on f1 = phi(e1)
  Matrix<PrimeField> psi;                // target dim x source dim, from basis images
  std::vector<FpVec> psi_table;          // psi per source index
  std::vector<FpVec> tau;                // tau per source index
  std::vector<CheckReport> certificates;
  Json preflight;

  Json to_json() const;
};

struct DecomposeOptions {
  std::optional<Branch> branch;  // required when both branches hold
  ScanConfig scan;
};

/// Computes psi and tau without certifying them. Throws NotIdempotentImage,
/// HypothesisFailed (detail names the condition and its witness),
/// BranchUndetermined, AmbiguousCentralSplit.
DecompositionResult split_map(const MapTable& m, FpSpan e1, const DecomposeOptions& opts = {});

/// Certificates for a split: recomposition, tau central, psi additive and
/// bijective, the (anti)multiplicativity of psi overall and per Peirce case,
/// the triple product identity, tau on commutators, tau additivity
/// (informational).
std::vector<CheckReport> verify_decomposition(const MapTable& m, const DecompositionResult& d,
                                              const ScanConfig& cfg = {});

/// split_map followed by verify_decomposition; throws CertificationFailed
/// (detail carries the failing certificate and the full list) when a
/// required certificate fails.
DecompositionResult decompose(const MapTable& m, FpSpan e1, const DecomposeOptions& opts = {});

}  // namespace altring
