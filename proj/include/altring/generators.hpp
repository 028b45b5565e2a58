#pragma once

// Example rings: the 2x2 matrix ring, 2x2 upper triangular matrices, the
// Zorn vector-matrix algebra (split octonions), and direct sums.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "altring/identities.hpp"
#include "altring/ring.hpp"

namespace altring {

namespace detail {

template <ScalarField F>
std::string field_suffix(const F& f) {
  return f.characteristic() == 0 ? "q" : "f" + std::to_string(f.characteristic());
}

}  // namespace detail

/// Full matrix ring M_2(F) on the matrix units E11, E12, E21, E22.
template <ScalarField F>
Ring<F> make_m2(const F& f) {
  const std::size_t n = 4;
  std::vector<typename F::Element> c(n * n * n, f.zero());
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)  // E_ij E_jl = E_il
        c[(idx(i, j) * n + idx(j, l)) * n + idx(i, l)] = f.one();
  Vec<F> unit{f.one(), f.zero(), f.zero(), f.one()};
  return Ring<F>::create("m2_" + detail::field_suffix(f), f, {"E11", "E12", "E21", "E22"},
                         std::move(c), std::move(unit), "2x2 matrices over " + f.name());
}

/// Upper triangular 2x2 matrices on E11, E12, E22.
template <ScalarField F>
Ring<F> make_triangular2(const F& f) {
  const std::size_t n = 3;
  std::vector<typename F::Element> c(n * n * n, f.zero());
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * n + j) * n + k] = f.one(); };
  set(0, 0, 0);  // E11 E11 = E11
  set(0, 1, 1);  // E11 E12 = E12
  set(1, 2, 1);  // E12 E22 = E12
  set(2, 2, 2);  // E22 E22 = E22
  Vec<F> unit{f.one(), f.zero(), f.one()};
  return Ring<F>::create("triangular2_" + detail::field_suffix(f), f, {"E11", "E12", "E22"},
                         std::move(c), std::move(unit),
                         "2x2 upper triangular matrices over " + f.name());
}

inline constexpr const char* kZornConvention =
    "Zorn vector-matrix algebra on (a, v1..v3, w1..w3, b) representing [[a, v], [w, b]]; "
    "product [[a,v],[w,b]][[a',v'],[w',b']] = "
    "[[aa' + v.w', a v' + b' v - w x w'], [a' w + b w' + v x v', bb' + w.v']]";

/// Zorn's vector-matrix algebra: scalar diagonal, 3-vector off-diagonal
/// entries, product via dot and cross products. Eight-dimensional,
/// alternative, not associative. The sign placement is validated with
/// is_alternative before the ring is returned.
template <ScalarField F>
Ring<F> make_zorn(const F& f) {
  using S = typename F::Element;
  const std::size_t n = 8;
  struct Z {
    S a;
    std::array<S, 3> v, w;
    S b;
  };
  auto unpack = [&](std::size_t k) {
    Z z{f.zero(), {f.zero(), f.zero(), f.zero()}, {f.zero(), f.zero(), f.zero()}, f.zero()};
    if (k == 0) z.a = f.one();
    else if (k <= 3) z.v[k - 1] = f.one();
    else if (k <= 6) z.w[k - 4] = f.one();
    else z.b = f.one();
    return z;
  };
  auto dot = [&](const std::array<S, 3>& x, const std::array<S, 3>& y) {
    S s = f.zero();
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
  };
  auto cross = [&](const std::array<S, 3>& x, const std::array<S, 3>& y) {
    return std::array<S, 3>{f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])),
                            f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
                            f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]))};
  };
  std::vector<S> c(n * n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Z x = unpack(i), y = unpack(j);
      auto ww = cross(x.w, y.w);
      auto vv = cross(x.v, y.v);
      Vec<F> out(n, f.zero());
      out[0] = f.add(f.mul(x.a, y.a), dot(x.v, y.w));
      for (int k = 0; k < 3; ++k) {
        out[1 + k] = f.sub(f.add(f.mul(x.a, y.v[k]), f.mul(y.b, x.v[k])), ww[k]);
        out[4 + k] = f.add(f.add(f.mul(y.a, x.w[k]), f.mul(x.b, y.w[k])), vv[k]);
      }
      out[7] = f.add(f.mul(x.b, y.b), dot(x.w, y.v));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = out[k];
    }
  }
  Vec<F> unit(n, f.zero());
  unit[0] = f.one();
  unit[7] = f.one();
  auto ring = Ring<F>::create("zorn_" + detail::field_suffix(f), f,
                              {"a", "v1", "v2", "v3", "w1", "w2", "w3", "b"}, std::move(c),
                              std::move(unit), kZornConvention);
  if (!is_alternative(ring).holds) {
    throw std::logic_error("Zorn sign convention fails the alternative laws");
  }
  return ring;
}

/// Distinguished idempotent of the Zorn algebra: [[1, 0], [0, 0]].
template <ScalarField F>
Vec<F> zorn_corner_idempotent(const F& f) {
  Vec<F> e(8, f.zero());
  e[0] = f.one();
  return e;
}

/// A (+) B with basis "1:x" for x in A followed by "2:y" for y in B.
template <ScalarField F>
Ring<F> make_direct_sum(const Ring<F>& a, const Ring<F>& b) {
  if (!(a.field() == b.field())) {
    throw AlgebraError(ErrorKind::RingMismatch, "direct sum needs a common scalar domain");
  }
  const auto& f = a.field();
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<typename F::Element> c(n * n * n, f.zero());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a.constant(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        c[((na + i) * n + na + j) * n + na + k] = b.constant(i, j, k);
  std::vector<std::string> names;
  for (const auto& x : a.basis_names()) names.push_back("1:" + x);
  for (const auto& y : b.basis_names()) names.push_back("2:" + y);
  Vec<F> unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Ring<F>::create(a.name() + "_plus_" + b.name(), f, std::move(names), std::move(c),
                         std::move(unit), "direct sum of " + a.name() + " and " + b.name());
}

}  // namespace altring
