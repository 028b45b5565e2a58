#pragma once

// Enumeration of F_p^n in canonical order and budgeted scans.
//
// Canonical order: element c has index sum_i c_i p^i with c_i in {0..p-1},
// so coordinate 0 is the least significant digit. Witnesses reported by any
// scan are the first failure in this order (or in the seeded sample order).

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altring/errors.hpp"
#include "altring/field.hpp"
#include "altring/linalg.hpp"
#include "altring/report.hpp"

namespace altring {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct ScanConfig {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

// Throws BudgetExceeded when `needed` evaluations exceed `budget`.
void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what);

/// F_p^n with index <-> coordinates conversion.
class ElementSpace {
 public:
  using Scalar = PrimeField::Element;

  ElementSpace(PrimeField field, std::size_t dim);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t size() const { return size_; }

  Vec<PrimeField> at(std::uint64_t index) const;
  std::uint64_t index_of(std::span<const Scalar> v) const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::uint64_t size_;
};

// Number of elements of a dim-dimensional space over f, or nullopt when it
// does not fit in 62 bits.
std::optional<std::uint64_t> space_size(const PrimeField& f, std::size_t dim);

/// All elements of s in canonical order of the ambient space.
std::vector<Vec<PrimeField>> enumerate_subspace(const Subspace<PrimeField>& s,
                                                std::uint64_t budget);

/// Projective representatives: nonzero elements whose highest nonzero
/// coordinate equals one. Each line through the origin appears once, as its
/// canonical-first point.
bool is_projective_representative(std::span<const PrimeField::Element> v);

struct PairScan {
  bool exhaustive = true;
  std::uint64_t total = 0;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;

  Json quantifier_space() const;
};

/// Runs `holds(i, j)` over all pairs in [0, rows) x [0, cols) when the grid
/// fits the budget, in row-major order; otherwise over `budget` pairs drawn
/// from a mt19937_64 seeded with cfg.seed. Stops at the first failing pair.
template <class Pred>
PairScan scan_grid(std::uint64_t rows, std::uint64_t cols, const ScanConfig& cfg, Pred&& holds) {
  PairScan scan;
  scan.total = rows * cols;
  scan.seed = cfg.seed;
  if (scan.total <= cfg.budget) {
    for (std::uint64_t i = 0; i < rows; ++i) {
      for (std::uint64_t j = 0; j < cols; ++j) {
        ++scan.checked;
        if (!holds(i, j)) {
          scan.witness = {i, j};
          return scan;
        }
      }
    }
    return scan;
  }
  scan.exhaustive = false;
  std::mt19937_64 rng(cfg.seed);
  for (std::uint64_t s = 0; s < cfg.budget; ++s) {
    std::uint64_t i = rng() % rows;
    std::uint64_t j = rng() % cols;
    ++scan.checked;
    if (!holds(i, j)) {
      scan.witness = {i, j};
      return scan;
    }
  }
  return scan;
}

/// All ordered pairs of [0, n).
template <class Pred>
PairScan scan_pairs(std::uint64_t n, const ScanConfig& cfg, Pred&& holds) {
  return scan_grid(n, n, cfg, std::forward<Pred>(holds));
}

}  // namespace altring
