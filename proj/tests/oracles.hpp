#pragma once

// Independent reference arithmetic used by the tests: plain 2x2 matrices
// mod p, and a few hand-built rings that the library does not generate.

#include <array>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "altring/ring.hpp"

namespace oracle {

// [[a, b], [c, d]] with entries in 0..p-1; coordinates (E11, E12, E21, E22).
struct Mat2 {
  std::int64_t a, b, c, d;
  bool operator==(const Mat2&) const = default;
};

inline std::int64_t md(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline Mat2 mul(const Mat2& x, const Mat2& y, std::int64_t p) {
  return {md(x.a * y.a + x.b * y.c, p), md(x.a * y.b + x.b * y.d, p),
          md(x.c * y.a + x.d * y.c, p), md(x.c * y.b + x.d * y.d, p)};
}

inline Mat2 from(const std::vector<std::int64_t>& v) { return {v[0], v[1], v[2], v[3]}; }
inline std::vector<std::int64_t> coords(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

// -x^T + tr(x) 1
inline Mat2 neg_transpose_plus_trace(const Mat2& x, std::int64_t p) {
  const auto t = x.a + x.d;
  return {md(-x.a + t, p), md(-x.c, p), md(-x.b, p), md(-x.d + t, p)};
}

inline Mat2 neg_transpose(const Mat2& x, std::int64_t p) {
  return {md(-x.a, p), md(-x.c, p), md(-x.b, p), md(-x.d, p)};
}

// All 2x2 matrices over F_p in the library's canonical order (E11 least
// significant).
inline std::vector<Mat2> all_matrices(std::int64_t p) {
  std::vector<Mat2> out;
  for (std::int64_t d = 0; d < p; ++d)
    for (std::int64_t c = 0; c < p; ++c)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t a = 0; a < p; ++a) out.push_back({a, b, c, d});
  return out;
}

// 2 + q(q + 1): zero, identity, and one rank-one idempotent per ordered pair
// of complementary lines (image, kernel) in F_q^2.
inline std::int64_t m2_idempotent_count(std::int64_t q) { return 2 + q * (q + 1); }

}  // namespace oracle

namespace fixtures {

using altring::PrimeField;
using altring::Ring;

// Kind of the AlgebraError thrown by fn; records a failure when none is.
template <class Fn>
altring::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const altring::AlgebraError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an AlgebraError";
  return altring::ErrorKind::ParseError;
}

// M2(F_p) with E12 * E12 = E21 instead of 0. The unit survives, the ring is
// not alternative: (E12, E12, E11) = E21.
inline Ring<PrimeField> perturbed_m2(const PrimeField& f) {
  const std::size_t n = 4;
  std::vector<PrimeField::Element> c(n * n * n, 0);
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) c[(idx(i, j) * n + idx(j, l)) * n + idx(i, l)] = 1;
  c[(1 * n + 1) * n + 2] = 1;
  return Ring<PrimeField>::create("perturbed_m2", f, {"E11", "E12", "E21", "E22"}, std::move(c),
                                  {1, 0, 0, 1});
}

// F_p x F_p x F_p x F_p with orthogonal idempotent basis.
inline Ring<PrimeField> split_commutative4(const PrimeField& f) {
  const std::size_t n = 4;
  std::vector<PrimeField::Element> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = 1;
  return Ring<PrimeField>::create("f4_split", f, {"u1", "u2", "u3", "u4"}, std::move(c),
                                  {1, 1, 1, 1});
}

// Unital 2-dim algebra on {1, b} with b^2 = s 1 + t b.
inline Ring<PrimeField> two_dim(const PrimeField& f, std::int64_t s, std::int64_t t) {
  std::vector<PrimeField::Element> c(8, 0);
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = 1;
  c[(1 * 2 + 1) * 2 + 0] = f.from_int(s);
  c[(1 * 2 + 1) * 2 + 1] = f.from_int(t);
  return Ring<PrimeField>::create("two_dim", f, {"1", "b"}, std::move(c), {1, 0});
}

}  // namespace fixtures
