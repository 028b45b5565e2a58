#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "altring/errors.hpp"

namespace altring {

/// Exact scalar domain. Arithmetic goes through the domain object, so a
/// field element carries no reference to its field (fflas/LinBox style).
template <class F>
concept ScalarField = requires(const F& f, const typename F::Element& a,
                               std::int64_t n, std::string_view s) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.parse(s) } -> std::same_as<typename F::Element>;
  { f.characteristic() } -> std::same_as<std::int64_t>;
  { f.order() } -> std::same_as<std::optional<std::uint64_t>>;
};

bool is_prime(std::int64_t n);

/// Z/pZ with canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::int64_t;

  static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

  explicit PrimeField(std::int64_t p);

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const {
    Element s = a - b;
    return s < 0 ? s + p_ : s;
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }

  std::string to_string(Element a) const { return std::to_string(a); }
  // Accepts "k", "-k" and "a/b" with b invertible mod p.
  Element parse(std::string_view text) const;

  std::int64_t characteristic() const { return p_; }
  std::int64_t modulus() const { return p_; }
  std::optional<std::uint64_t> order() const {
    return static_cast<std::uint64_t>(p_);
  }
  std::string name() const { return "F" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::int64_t p_;
};

/// The rationals, backed by GMP.
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const {
    return Element(static_cast<long>(v));
  }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const {
    return mul(a, inv(b));
  }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;

  std::int64_t characteristic() const { return 0; }
  std::optional<std::uint64_t> order() const { return std::nullopt; }
  std::string name() const { return "Q"; }

  bool operator==(const Rationals&) const = default;
};

static_assert(ScalarField<PrimeField>);
static_assert(ScalarField<Rationals>);

template <ScalarField F>
using Vec = std::vector<typename F::Element>;

template <ScalarField F>
typename F::Element power(const F& f, typename F::Element base,
                          std::uint64_t exponent) {
  auto result = f.one();
  while (exponent > 0) {
    if (exponent & 1U) result = f.mul(result, base);
    base = f.mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

}  // namespace altring
