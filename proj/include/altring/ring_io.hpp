#pragma once

// Ring files:
//   { "name": str, "domain": "Q" | {"Fp": p}, "dim": n, "basis": [names],
//     "unit": [coords], "mul": n x n x n nested array of scalars [, "note": str] }
// Scalars are strings ("3", "-1/2"); bare JSON integers are also accepted.

#include <filesystem>
#include <variant>

#include "altring/report.hpp"
#include "altring/ring.hpp"

namespace altring {

using AnyRing = std::variant<Ring<Rationals>, Ring<PrimeField>>;

AnyRing ring_from_json(const Json& j);
AnyRing load_ring(const std::filesystem::path& path);

Json ring_to_json(const Ring<Rationals>& r);
Json ring_to_json(const Ring<PrimeField>& r);
Json ring_to_json(const AnyRing& r);

// Parses a scalar given as a JSON string or integer.
template <ScalarField F>
typename F::Element scalar_from_json(const F& f, const Json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  throw AlgebraError(ErrorKind::ParseError, "scalar must be a string or integer, got " + j.dump());
}

template <ScalarField F>
Vec<F> coords_from_json(const F& f, const Json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    throw AlgebraError(ErrorKind::ParseError, "expected a coordinate array of length " +
                                                  std::to_string(expected) + ", got " + j.dump());
  }
  Vec<F> v;
  v.reserve(expected);
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

/// Comma-separated coordinates, e.g. "1,0,0,0" or "1/2,0,0,1/2".
template <ScalarField F>
Vec<F> parse_coords(const F& f, const std::string& text, std::size_t expected) {
  Vec<F> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    // trim blanks
    auto b = piece.find_first_not_of(" \t");
    auto e = piece.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw AlgebraError(ErrorKind::ParseError, "empty coordinate in '" + text + "'");
    }
    v.push_back(f.parse(piece.substr(b, e - b + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != expected) {
    throw AlgebraError(ErrorKind::ParseError, "'" + text + "' has " + std::to_string(v.size()) +
                                                  " coordinates, ring dimension is " +
                                                  std::to_string(expected));
  }
  return v;
}

}  // namespace altring
