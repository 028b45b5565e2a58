#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altring/errors.hpp"
#include "altring/field.hpp"
#include "altring/linalg.hpp"

namespace altring {

using RingId = std::uint64_t;

// Fresh process-unique identifier.
RingId next_ring_id();

template <ScalarField F>
struct Element {
  RingId ring = 0;
  Vec<F> coords;

  bool operator==(const Element&) const = default;
};

/// A finite-dimensional unital algebra over F given by structure constants:
/// b_i * b_j = sum_k c[i][j][k] b_k. No associativity is assumed.
/// Copies share the immutable table and the ring id.
template <ScalarField F>
class Ring {
 public:
  using Scalar = typename F::Element;

  /// `constants` is the flattened n*n*n table indexed (i*n + j)*n + k.
  /// Throws InvalidRing when the shape is wrong or `unit` is not a
  /// two-sided identity on every basis element.
  static Ring create(std::string name, F field, std::vector<std::string> basis_names,
                     std::vector<Scalar> constants, Vec<F> unit, std::string note = {}) {
    const std::size_t n = basis_names.size();
    if (n == 0) throw AlgebraError(ErrorKind::InvalidRing, "ring '" + name + "' has dimension 0");
    if (constants.size() != n * n * n) {
      throw AlgebraError(ErrorKind::InvalidRing,
                         "structure constants of '" + name + "' must have shape " +
                             std::to_string(n) + "x" + std::to_string(n) + "x" + std::to_string(n));
    }
    if (unit.size() != n) {
      throw AlgebraError(ErrorKind::InvalidRing, "unit of '" + name + "' has wrong length");
    }
    auto data = std::make_shared<Data>(std::move(field));
    data->id = next_ring_id();
    data->name = std::move(name);
    data->dim = n;
    data->basis_names = std::move(basis_names);
    data->constants = std::move(constants);
    data->unit = std::move(unit);
    data->note = std::move(note);
    data->sparse.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto& c = data->constants[(i * n + j) * n + k];
          if (!data->field.is_zero(c)) data->sparse[i * n + j].push_back({k, c});
        }
      }
    }
    Ring ring(std::move(data));
    ring.verify_unit();
    return ring;
  }

  RingId id() const { return d_->id; }
  const std::string& name() const { return d_->name; }
  const F& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const std::vector<std::string>& basis_names() const { return d_->basis_names; }
  const std::string& note() const { return d_->note; }
  const Vec<F>& unit() const { return d_->unit; }
  const std::vector<Scalar>& constants() const { return d_->constants; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return d_->constants[(i * d_->dim + j) * d_->dim + k];
  }

  // ---- coordinate-level arithmetic (no ring-id checks) ----

  Vec<F> mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
    const F& f = field();
    const std::size_t n = dim();
    Vec<F> out(n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (f.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (f.is_zero(b[j])) continue;
        const auto& terms = d_->sparse[i * n + j];
        if (terms.empty()) continue;
        auto ab = f.mul(a[i], b[j]);
        for (const auto& [k, c] : terms) out[k] = f.add(out[k], f.mul(ab, c));
      }
    }
    return out;
  }

  Vec<F> commutator(std::span<const Scalar> a, std::span<const Scalar> b) const {
    auto ab = mul(a, b);
    auto ba = mul(b, a);
    return vec_sub(field(), std::span<const Scalar>(ab), std::span<const Scalar>(ba));
  }

  // (xy)z - x(yz)
  Vec<F> associator(std::span<const Scalar> x, std::span<const Scalar> y,
                    std::span<const Scalar> z) const {
    auto xy = mul(x, y);
    auto yz = mul(y, z);
    auto left = mul(xy, z);
    auto right = mul(x, yz);
    return vec_sub(field(), std::span<const Scalar>(left), std::span<const Scalar>(right));
  }

  Vec<F> basis_vec(std::size_t i) const { return unit_vec(field(), dim(), i); }
  Vec<F> zero_vec() const { return altring::zero_vec(field(), dim()); }

  // Matrix of x -> a x (left) or x -> x a (right) in the standard basis.
  Matrix<F> left_mul_matrix(std::span<const Scalar> a) const {
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      auto col = mul(a, basis_vec(k));
      m.set_column(k, col);
    }
    return m;
  }
  Matrix<F> right_mul_matrix(std::span<const Scalar> a) const {
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      auto col = mul(basis_vec(k), a);
      m.set_column(k, col);
    }
    return m;
  }

  // ---- Element API ----

  Element<F> element(Vec<F> coords) const {
    if (coords.size() != dim()) {
      throw AlgebraError(ErrorKind::DimensionMismatch,
                         "element of '" + name() + "' needs " + std::to_string(dim()) +
                             " coordinates, got " + std::to_string(coords.size()));
    }
    return {id(), std::move(coords)};
  }
  Element<F> zero() const { return {id(), zero_vec()}; }
  Element<F> one() const { return {id(), unit()}; }
  Element<F> basis(std::size_t i) const { return {id(), basis_vec(i)}; }

  Element<F> add(const Element<F>& a, const Element<F>& b) const {
    check(a, b);
    return {id(), vec_add(field(), cspan(a), cspan(b))};
  }
  Element<F> sub(const Element<F>& a, const Element<F>& b) const {
    check(a, b);
    return {id(), vec_sub(field(), cspan(a), cspan(b))};
  }
  Element<F> neg(const Element<F>& a) const {
    check(a);
    return {id(), vec_neg(field(), cspan(a))};
  }
  Element<F> scale(const Scalar& s, const Element<F>& a) const {
    check(a);
    return {id(), vec_scale(field(), s, cspan(a))};
  }
  Element<F> mul(const Element<F>& a, const Element<F>& b) const {
    check(a, b);
    return {id(), mul(cspan(a), cspan(b))};
  }
  Element<F> commutator(const Element<F>& a, const Element<F>& b) const {
    check(a, b);
    return {id(), commutator(cspan(a), cspan(b))};
  }
  Element<F> associator(const Element<F>& x, const Element<F>& y, const Element<F>& z) const {
    check(x, y);
    check(z);
    return {id(), associator(cspan(x), cspan(y), cspan(z))};
  }
  bool is_zero(const Element<F>& a) const {
    check(a);
    return is_zero_vec(field(), cspan(a));
  }

  void check(const Element<F>& a) const {
    if (a.ring != id()) {
      throw AlgebraError(ErrorKind::RingMismatch, "element does not belong to ring '" + name() + "'");
    }
    if (a.coords.size() != dim()) {
      throw AlgebraError(ErrorKind::DimensionMismatch, "element has wrong coordinate count");
    }
  }
  void check(const Element<F>& a, const Element<F>& b) const {
    check(a);
    check(b);
  }

  bool operator==(const Ring& other) const { return id() == other.id(); }

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };
  struct Data {
    explicit Data(F f) : field(std::move(f)) {}
    RingId id = 0;
    std::string name;
    F field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Scalar> constants;
    Vec<F> unit;
    std::string note;
    std::vector<std::vector<Term>> sparse;
  };

  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static std::span<const Scalar> cspan(const Element<F>& a) { return a.coords; }

  void verify_unit() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      auto b = basis_vec(i);
      if (mul(unit(), b) != b) {
        throw AlgebraError(ErrorKind::InvalidRing, "unit axiom violated in '" + name() +
                                                       "': unit * " + basis_names()[i] +
                                                       " != " + basis_names()[i]);
      }
      if (mul(b, unit()) != b) {
        throw AlgebraError(ErrorKind::InvalidRing, "unit axiom violated in '" + name() + "': " +
                                                       basis_names()[i] + " * unit != " +
                                                       basis_names()[i]);
      }
    }
  }

  std::shared_ptr<const Data> d_;
};

}  // namespace altring
