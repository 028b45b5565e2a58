#pragma once

// Map files:
//   { "source": ring name, "target": ring name, "repr": R [, "overrides": [...]] }
// where R is one of
//   "table"       with a top-level "table": one coordinate array per source
//                 element, in canonical enumeration order;
//   "structured"  with top-level "linear" (rows), "functional", "central";
//   a builder object {"kind": ...}:
//     identity | neg_transpose_plus_trace | linear {matrix} |
//     conjugation {element} | structured {linear, functional, central} |
//     dense_table {file} | compose {maps: [R, ...]}  (applied left to right)
// "overrides" is a list of {"index": k, "value": coords} replacing single
// table entries after the map is built.

#include <filesystem>

#include "altring/lie_map.hpp"
#include "altring/report.hpp"

namespace altring {

/// Relative "file" paths in builder objects resolve against base_dir.
/// Throws ParseError on malformed input and RingMismatch when the named
/// rings differ from the supplied ones.
MapTable map_from_json(const Json& j, const FpRing& source, const FpRing& target,
                       const std::filesystem::path& base_dir = {},
                       std::uint64_t budget = kDefaultBudget);

MapTable load_map(const std::filesystem::path& path, const FpRing& source, const FpRing& target,
                  std::uint64_t budget = kDefaultBudget);

/// Dense form: {"source", "target", "repr": "table", "table"}.
Json map_to_json(const MapTable& m);

}  // namespace altring
