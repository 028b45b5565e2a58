#pragma once

// Maps between finite rings over the same F_p, stored as total tables.
//
// A Lie multiplicative map is not assumed additive, so every map is kept as
// one image per source element (indexed in canonical enumeration order).
// Structured maps x -> Lx + f(x) c keep their linear description alongside
// the table.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altring/ring.hpp"
#include "altring/scan.hpp"

namespace altring {

using FpRing = Ring<PrimeField>;
using FpVec = Vec<PrimeField>;
using FpSpan = std::span<const PrimeField::Element>;

struct StructuredPart {
  Matrix<PrimeField> linear;  // target dim x source dim
  FpVec functional;           // f, a linear functional on the source
  FpVec central;              // c, a central element of the target
};

class MapTable {
 public:
  /// Throws RingMismatch when the rings live over different fields and
  /// DimensionMismatch when the table is not total or an image has the wrong
  /// length. BudgetExceeded when the source has more than `budget` elements.
  static MapTable dense(FpRing source, FpRing target, std::vector<FpVec> images,
                        std::uint64_t budget = kDefaultBudget);

  /// x -> L x + f(x) c. OffsetNotCentral when f is nonzero and either c is
  /// not central or f does not vanish on the commutator span of the source.
  static MapTable structured(FpRing source, FpRing target, Matrix<PrimeField> linear,
                             FpVec functional, FpVec central,
                             std::uint64_t budget = kDefaultBudget);

  const FpRing& source() const { return d_->source; }
  const FpRing& target() const { return d_->target; }
  const ElementSpace& source_space() const { return d_->source_space; }
  const ElementSpace& target_space() const { return d_->target_space; }
  const PrimeField& field() const { return d_->source.field(); }

  std::uint64_t size() const { return d_->images.size(); }
  const FpVec& image(std::uint64_t index) const { return d_->images[index]; }
  const FpVec& operator()(FpSpan x) const { return image(d_->source_space.index_of(x)); }
  const std::vector<FpVec>& images() const { return d_->images; }

  const std::optional<StructuredPart>& structured_part() const { return d_->structured; }

  /// Dense copy with one table entry replaced.
  MapTable with_entry(std::uint64_t index, FpVec value) const;

 private:
  struct Data {
    Data(FpRing s, FpRing t)
        : source(std::move(s)),
          target(std::move(t)),
          source_space(source.field(), source.dim()),
          target_space(target.field(), target.dim()) {}
    FpRing source;
    FpRing target;
    ElementSpace source_space;
    ElementSpace target_space;
    std::vector<FpVec> images;
    std::optional<StructuredPart> structured;
  };

  explicit MapTable(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// ---- builders ----------------------------------------------------------------

MapTable identity_map(const FpRing& r, std::uint64_t budget = kDefaultBudget);

/// `m` is target dim x source dim.
MapTable linear_map(const FpRing& source, const FpRing& target, const Matrix<PrimeField>& m,
                    std::uint64_t budget = kDefaultBudget);

/// x -> -x^T + tr(x) 1 on a full matrix ring whose basis is E11, E12, ...
/// Throws NotAssociative or NotMatrixRing.
MapTable neg_transpose_plus_trace(const FpRing& r, std::uint64_t budget = kDefaultBudget);

/// Matrix of x -> -x^T on a full matrix ring (no trace term).
Matrix<PrimeField> neg_transpose_matrix(const FpRing& r);

/// Trace functional on a full matrix ring.
FpVec trace_functional(const FpRing& r);

/// x -> u x u^{-1} on an associative ring. Throws NotAssociative or
/// NotInvertible.
MapTable conjugation_map(const FpRing& r, FpSpan u, std::uint64_t budget = kDefaultBudget);

/// Matrix of x -> u x u^{-1}; same errors as conjugation_map.
Matrix<PrimeField> conjugation_matrix(const FpRing& r, FpSpan u);

/// Two-sided inverse of u in an associative ring, if it exists.
std::optional<FpVec> inverse(const FpRing& r, FpSpan u);

/// Maps applied left to right: compose({f, g}) = g o f. Adjacent maps must
/// agree on the intermediate ring (RingMismatch otherwise).
MapTable compose(const std::vector<MapTable>& maps, std::uint64_t budget = kDefaultBudget);

}  // namespace altring
