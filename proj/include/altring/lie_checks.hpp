#pragma once

// Verifiers for the entry properties of a map and for the shape of its
// action on Peirce components.
//
// Pair-quantified checks are exhaustive up to cfg.budget pairs and switch to
// seeded sampling above it (see scan_pairs); the report records which.

#include <vector>

#include "altring/lie_map.hpp"
#include "altring/report.hpp"
#include "altring/structure.hpp"

namespace altring {

/// phi([x, y]) = [phi(x), phi(y)].
CheckReport verify_lie_multiplicative(const MapTable& m, const ScanConfig& cfg = {});

/// The table is a bijection onto the target. Witness: two colliding source
/// elements, or the dimensions when the sizes differ.
CheckReport verify_bijective(const MapTable& m);

/// e - l f idempotent iff phi(e) - l phi(f) idempotent, over all pairs (e, f)
/// and all l in F_p. Throws NotBijective first when the table is not a
/// bijection, UnsupportedDomain when p < 5.
CheckReport verify_preserves_idempotents(const MapTable& m, const ScanConfig& cfg = {});

/// Consequences expected of a surjective Lie multiplicative map preserving
/// idempotents: "injective", "zero_fixed", "homogeneous" (phi(l x) = l phi(x)
/// for every l in F_p).
std::vector<CheckReport> check_bijection_consequences(const MapTable& m);

/// phi(a + b) - phi(a) - phi(b) is central in the target.
CheckReport check_almost_additivity(const MapTable& m, const ScanConfig& cfg = {});

/// phi(e1), with NotIdempotentImage when it is not a nontrivial idempotent.
FpVec image_idempotent(const MapTable& m, FpSpan e1);

/// Off-diagonal images phi(R_ij) = R'_ij, the shape of diagonal images
/// (R'_ii + Z or R'_jj + Z) and conditions 2 and 3 on the target frame
/// built from f1 = phi(e1).
std::vector<CheckReport> check_peirce_image(const MapTable& m, FpSpan e1,
                                            std::uint64_t budget = kDefaultBudget);

struct BranchReport {
  bool dagger = false;         // f_i phi(R_jj) f_i in Z f_i for (i, j) = (1, 2), (2, 1)
  bool double_dagger = false;  // f_i phi(R_ii) f_i in Z f_i for i = 1, 2
  std::vector<CheckReport> parts;

  Json to_json() const;
};

BranchReport detect_branch(const MapTable& m, FpSpan e1, std::uint64_t budget = kDefaultBudget);

}  // namespace altring
