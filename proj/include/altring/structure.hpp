#pragma once

// Structural analysis of a ring: commutative centre, nucleus, idempotents,
// Peirce frames and the checks that quantify over Peirce components.
//
// Linear conditions are decided by exact kernel computations; conditions
// that are not linear in the quantified variable are decided by budgeted
// enumeration over F_p and refused over Q.

#include <array>
#include <cstdint>
#include <vector>

#include "altring/report.hpp"
#include "altring/ring.hpp"
#include "altring/scan.hpp"

namespace altring {

/// { z : [z, x] = 0 for all x } (commutation only, no associator condition).
template <ScalarField F>
Subspace<F> center(const Ring<F>& r);

/// { n : (x,y,n) = (x,n,y) = (n,x,y) = 0 for all x, y }.
template <ScalarField F>
Subspace<F> nucleus(const Ring<F>& r);

/// Linear span of all commutators [x, y].
template <ScalarField F>
Subspace<F> commutator_span(const Ring<F>& r);

template <ScalarField F>
bool is_idempotent(const Ring<F>& r, std::span<const typename F::Element> e) {
  return r.mul(e, e) == Vec<F>(e.begin(), e.end());
}

enum class IdempotentKind { Zero, Trivial, Nontrivial };

std::string_view to_string(IdempotentKind kind);

template <ScalarField F>
struct Idempotent {
  Vec<F> coords;
  IdempotentKind kind;
};

/// Every idempotent of a ring over F_p, in canonical order. Zero and the
/// unit are included and tagged. BudgetExceeded when p^dim > budget.
std::vector<Idempotent<PrimeField>> idempotents(const Ring<PrimeField>& r, std::uint64_t budget);

/// Over Q there is no enumeration; always throws UnsupportedDomain.
std::vector<Idempotent<Rationals>> idempotents(const Ring<Rationals>& r, std::uint64_t budget);

/// Zero, the unit, and the candidates that square to themselves (in that
/// order, duplicates removed).
template <ScalarField F>
std::vector<Idempotent<F>> idempotents(const Ring<F>& r, const std::vector<Vec<F>>& candidates);

/// Peirce decomposition relative to e1 and e2 = 1 - e1, with projections
/// a -> e_i (a e_j) and their images R_ij.
template <ScalarField F>
class PeirceFrame {
 public:
  /// Throws NotIdempotent, TrivialIdempotent (e1 = 0 or e1 = 1) or
  /// NotPeirceDecomposable (components do not form a direct sum).
  static PeirceFrame build(const Ring<F>& r, Vec<F> e1);

  const Ring<F>& ring() const { return ring_; }
  const Vec<F>& e1() const { return e1_; }
  const Vec<F>& e2() const { return e2_; }
  const Vec<F>& e(int i) const { return i == 1 ? e1_ : e2_; }

  // i, j in {1, 2}
  const Matrix<F>& projector(int i, int j) const { return projectors_[slot(i, j)]; }
  const Subspace<F>& component(int i, int j) const { return components_[slot(i, j)]; }

  Vec<F> project(int i, int j, std::span<const typename F::Element> a) const {
    return mat_vec(ring_.field(), projector(i, j), a);
  }
  // (a11, a12, a21, a22)
  std::array<Vec<F>, 4> project(std::span<const typename F::Element> a) const {
    return {project(1, 1, a), project(1, 2, a), project(2, 1, a), project(2, 2, a)};
  }

  std::array<std::size_t, 4> dims() const {
    return {components_[0].dim(), components_[1].dim(), components_[2].dim(),
            components_[3].dim()};
  }

  static constexpr std::size_t slot(int i, int j) {
    return static_cast<std::size_t>(2 * (i - 1) + (j - 1));
  }

 private:
  PeirceFrame(Ring<F> r, Vec<F> e1, Vec<F> e2, std::array<Matrix<F>, 4> proj,
              std::array<Subspace<F>, 4> comps)
      : ring_(std::move(r)),
        e1_(std::move(e1)),
        e2_(std::move(e2)),
        projectors_(std::move(proj)),
        components_(std::move(comps)) {}

  Ring<F> ring_;
  Vec<F> e1_, e2_;
  std::array<Matrix<F>, 4> projectors_;
  std::array<Subspace<F>, 4> components_;
};

/// a = a11 + a12 + a21 + a22. RingMismatch when a is from another ring.
template <ScalarField F>
std::array<Element<F>, 4> peirce_project(const PeirceFrame<F>& frame, const Element<F>& a);

/// Projector identities, the compatibility identity e_i a . e_j = e_i . a e_j,
/// and the multiplicative relations between Peirce components.
template <ScalarField F>
std::vector<CheckReport> verify_peirce_relations(const PeirceFrame<F>& frame,
                                                 std::uint64_t budget = kDefaultBudget);

/// Hypotheses on a Peirce frame:
///   condition_1: x_ij R_ji = 0 implies x_ij = 0 (i != j)
///   condition_2: x_11 R_12 = 0 or R_21 x_11 = 0 implies x_11 = 0
///   condition_3: R_12 x_22 = 0 or x_22 R_21 = 0 implies x_22 = 0
///   condition_4: every nonzero central z has z R = R
template <ScalarField F>
std::vector<CheckReport> check_main_hypotheses(const PeirceFrame<F>& frame,
                                               std::uint64_t budget = kDefaultBudget);

/// Only conditions 2 and 3, on an arbitrary frame (used for the transported
/// conditions on the target of a map).
template <ScalarField F>
std::vector<CheckReport> check_corner_conditions(const PeirceFrame<F>& frame,
                                                 std::uint64_t budget = kDefaultBudget);

/// If [a11 + a22, R_12] = 0 (resp. R_21) then a11 + a22 is central; plus the
/// implication "conditions 1-3 pass => both pass" as its own report.
template <ScalarField F>
std::vector<CheckReport> check_spade_club(const PeirceFrame<F>& frame,
                                          std::uint64_t budget = kDefaultBudget);

/// Centre of an off-diagonal cell, Z(R_ij) = { a in R_ij : [a, R_ij] = 0 },
/// and its containment in R_ij + Z(R). Details carry dim Z(R_ij) and
/// dim (Z(R_ij) ∩ Z(R)).
template <ScalarField F>
std::vector<CheckReport> check_z_of_peirce_cell(const PeirceFrame<F>& frame);

struct PrimenessReport {
  bool prime = true;            // element criterion: a R . b = 0 => a = 0 or b = 0
  bool ideal_prime = true;      // nonzero two-sided ideals have nonzero product
  bool criterion_equiv = true;  // the two answers agree
  Json witness = nullptr;        // element route
  Json ideal_witness = nullptr;  // ideal route
  Json quantifier_space = Json::object();

  Json to_json() const;
};

/// Decides primeness twice: through the element criterion (one kernel
/// computation per projective point a) and through the principal two-sided
/// ideals (a pair of nonzero ideals with zero product exists iff a pair of
/// principal ones does). Over F_p only; BudgetExceeded when the number of
/// projective points exceeds the budget.
PrimenessReport check_primeness(const Ring<PrimeField>& r, std::uint64_t budget = kDefaultBudget);

/// Smallest subspace containing a that is closed under left and right
/// multiplication by the ring.
template <ScalarField F>
Subspace<F> ideal_generated(const Ring<F>& r, std::span<const typename F::Element> a);

/// { x in U : x v = 0 for all v in V } when x_on_left, else { x in U : v x = 0 }.
template <ScalarField F>
Subspace<F> annihilator_in(const Ring<F>& r, const Subspace<F>& u, const Subspace<F>& v,
                           bool x_on_left);

/// A deterministic nonzero element of a nonzero subspace: the first one in
/// canonical order over F_p when affordable, else the first basis vector.
template <ScalarField F>
Vec<F> first_nonzero(const Subspace<F>& s, std::uint64_t budget);

/// { z f : z in Z(R) } for a fixed f.
template <ScalarField F>
Subspace<F> central_multiples(const Ring<F>& r, const Subspace<F>& centre,
                              std::span<const typename F::Element> f);

}  // namespace altring
