#include "altring/map_io.hpp"

#include <fstream>

#include "altring/identities.hpp"
#include "altring/ring_io.hpp"

namespace altring {

namespace {

Matrix<PrimeField> matrix_from_json(const PrimeField& f, const Json& j, std::size_t rows,
                                    std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw AlgebraError(ErrorKind::ParseError,
                       "matrix must have " + std::to_string(rows) + " rows of length " +
                           std::to_string(cols));
  }
  Matrix<PrimeField> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = coords_from_json(f, j[r], cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw AlgebraError(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

MapTable table_from_json(const Json& table, const FpRing& s, const FpRing& t,
                         std::uint64_t budget) {
  if (!table.is_array()) throw AlgebraError(ErrorKind::ParseError, "\"table\" must be an array");
  std::vector<FpVec> images;
  images.reserve(table.size());
  for (const auto& entry : table) images.push_back(coords_from_json(t.field(), entry, t.dim()));
  return MapTable::dense(s, t, std::move(images), budget);
}

MapTable structured_from_json(const Json& j, const FpRing& s, const FpRing& t,
                              std::uint64_t budget) {
  const auto& f = s.field();
  auto linear = matrix_from_json(f, j.at("linear"), t.dim(), s.dim());
  auto functional = coords_from_json(f, j.at("functional"), s.dim());
  auto central = coords_from_json(f, j.at("central"), t.dim());
  return MapTable::structured(s, t, std::move(linear), std::move(functional), std::move(central),
                              budget);
}

MapTable build(const Json& spec, const FpRing& s, const FpRing& t,
               const std::filesystem::path& base_dir, std::uint64_t budget) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw AlgebraError(ErrorKind::ParseError, "builder must be an object with a \"kind\"");
  }
  const auto kind = spec.at("kind").get<std::string>();
  const auto& f = s.field();
  auto same_ring = [&](const std::string& what) {
    if (s.dim() != t.dim() || s.constants() != t.constants()) {
      throw AlgebraError(ErrorKind::RingMismatch, what + " needs source and target to be the same ring");
    }
  };
  if (kind == "identity") {
    same_ring("identity");
    return linear_map(s, t, Matrix<PrimeField>::identity(f, s.dim()), budget);
  }
  if (kind == "linear") {
    return linear_map(s, t, matrix_from_json(f, spec.at("matrix"), t.dim(), s.dim()), budget);
  }
  if (kind == "neg_transpose_plus_trace") {
    same_ring("neg_transpose_plus_trace");
    if (!is_associative(s).holds) {
      throw AlgebraError(ErrorKind::NotAssociative, "neg_transpose_plus_trace needs an associative ring");
    }
    return MapTable::structured(s, t, neg_transpose_matrix(s), trace_functional(s), t.unit(),
                                budget);
  }
  if (kind == "conjugation") {
    same_ring("conjugation");
    auto u = coords_from_json(f, spec.at("element"), s.dim());
    return linear_map(s, t, conjugation_matrix(s, u), budget);
  }
  if (kind == "structured") return structured_from_json(spec, s, t, budget);
  if (kind == "dense_table") {
    auto path = std::filesystem::path(spec.at("file").get<std::string>());
    if (path.is_relative()) path = base_dir / path;
    auto j = read_json(path);
    return table_from_json(j.is_object() ? j.at("table") : j, s, t, budget);
  }
  if (kind == "compose") {
    const auto& list = spec.at("maps");
    if (!list.is_array() || list.empty()) {
      throw AlgebraError(ErrorKind::ParseError, "compose needs a nonempty \"maps\" list");
    }
    std::vector<MapTable> maps;
    for (std::size_t k = 0; k < list.size(); ++k) {
      maps.push_back(build(list[k], k == 0 ? s : t, t, base_dir, budget));
    }
    return compose(maps, budget);
  }
  throw AlgebraError(ErrorKind::ParseError, "unknown map builder \"" + kind + "\"");
}

}  // namespace

MapTable map_from_json(const Json& j, const FpRing& source, const FpRing& target,
                       const std::filesystem::path& base_dir, std::uint64_t budget) {
  try {
    for (auto [key, ring] : {std::pair{"source", &source}, std::pair{"target", &target}}) {
      if (j.contains(key) && j.at(key).get<std::string>() != ring->name()) {
        throw AlgebraError(ErrorKind::RingMismatch, std::string("map ") + key + " is '" +
                                                        j.at(key).get<std::string>() +
                                                        "', supplied ring is '" + ring->name() + "'");
      }
    }
    const auto& repr = j.at("repr");
    MapTable m = [&] {
      if (repr.is_string()) {
        const auto r = repr.get<std::string>();
        if (r == "table") return table_from_json(j.at("table"), source, target, budget);
        if (r == "structured") return structured_from_json(j, source, target, budget);
        throw AlgebraError(ErrorKind::ParseError, "repr must be \"table\", \"structured\" or a builder");
      }
      return build(repr, source, target, base_dir, budget);
    }();
    if (j.contains("overrides")) {
      for (const auto& o : j.at("overrides")) {
        auto index = o.at("index").get<std::uint64_t>();
        if (index >= m.size()) {
          throw AlgebraError(ErrorKind::ParseError, "override index " + std::to_string(index) +
                                                        " is out of range");
        }
        m = m.with_entry(index, coords_from_json(target.field(), o.at("value"), target.dim()));
      }
    }
    return m;
  } catch (const Json::exception& e) {
    throw AlgebraError(ErrorKind::ParseError, std::string("malformed map file: ") + e.what());
  }
}

MapTable load_map(const std::filesystem::path& path, const FpRing& source, const FpRing& target,
                  std::uint64_t budget) {
  return map_from_json(read_json(path), source, target, path.parent_path(), budget);
}

Json map_to_json(const MapTable& m) {
  Json j;
  j["source"] = m.source().name();
  j["target"] = m.target().name();
  j["repr"] = "table";
  Json table = Json::array();
  for (const auto& v : m.images()) table.push_back(coords_json(m.field(), v));
  j["table"] = std::move(table);
  return j;
}

}  // namespace altring
