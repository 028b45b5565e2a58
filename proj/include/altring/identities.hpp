#pragma once

// Identity checkers for rings given by structure constants. Each identity
// is multilinear after polarization, so it suffices to test basis vectors
// and sums of two basis vectors; the diagonal forms (x,x,y) are evaluated
// on b_i + b_j directly, which keeps the check valid in characteristic 2.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "altring/ring.hpp"

namespace altring {

template <ScalarField F>
struct IdentityCheck {
  bool holds = true;
  std::string law;                              // which law failed, empty when it holds
  std::optional<std::array<Vec<F>, 3>> witness;  // arguments of the nonzero associator
};

namespace detail {

// Candidate values for a "repeated" argument: every b_i and every b_i + b_j.
template <ScalarField F>
std::vector<Vec<F>> polarization_points(const Ring<F>& r) {
  std::vector<Vec<F>> pts;
  const auto& f = r.field();
  for (std::size_t i = 0; i < r.dim(); ++i) pts.push_back(r.basis_vec(i));
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = i + 1; j < r.dim(); ++j) {
      auto v = r.basis_vec(i);
      v[j] = f.one();
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

}  // namespace detail

/// (x,x,y) = 0 and (y,x,x) = 0 for all x, y.
template <ScalarField F>
IdentityCheck<F> is_alternative(const Ring<F>& r) {
  const auto& f = r.field();
  const auto pts = detail::polarization_points(r);
  for (const auto& x : pts) {
    for (std::size_t k = 0; k < r.dim(); ++k) {
      auto y = r.basis_vec(k);
      if (!is_zero_vec(f, std::span<const typename F::Element>(r.associator(x, x, y)))) {
        return {false, "left alternative (x,x,y)=0", std::array<Vec<F>, 3>{x, x, y}};
      }
      if (!is_zero_vec(f, std::span<const typename F::Element>(r.associator(y, x, x)))) {
        return {false, "right alternative (y,x,x)=0", std::array<Vec<F>, 3>{y, x, x}};
      }
    }
  }
  return {};
}

/// (x,y,x) = 0 for all x, y.
template <ScalarField F>
IdentityCheck<F> is_flexible(const Ring<F>& r) {
  const auto& f = r.field();
  const auto pts = detail::polarization_points(r);
  for (const auto& x : pts) {
    for (std::size_t k = 0; k < r.dim(); ++k) {
      auto y = r.basis_vec(k);
      if (!is_zero_vec(f, std::span<const typename F::Element>(r.associator(x, y, x)))) {
        return {false, "flexible (x,y,x)=0", std::array<Vec<F>, 3>{x, y, x}};
      }
    }
  }
  return {};
}

template <ScalarField F>
IdentityCheck<F> is_associative(const Ring<F>& r) {
  const auto& f = r.field();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      for (std::size_t k = 0; k < r.dim(); ++k) {
        auto x = r.basis_vec(i), y = r.basis_vec(j), z = r.basis_vec(k);
        if (!is_zero_vec(f, std::span<const typename F::Element>(r.associator(x, y, z)))) {
          return {false, "associative (x,y,z)=0", std::array<Vec<F>, 3>{x, y, z}};
        }
      }
    }
  }
  return {};
}

/// k x = 0 implies x = 0. Over a prime field this is p not dividing k.
template <ScalarField F>
bool is_k_torsion_free(const Ring<F>& r, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("torsion order must be positive");
  const auto c = r.field().characteristic();
  return c == 0 || k % c != 0;
}

}  // namespace altring
