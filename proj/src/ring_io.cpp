#include "altring/ring_io.hpp"

#include <atomic>
#include <fstream>

namespace altring {

RingId next_ring_id() {
  static std::atomic<RingId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

namespace {

template <ScalarField F>
Ring<F> ring_from_json_in(const F& f, const Json& j) {
  const auto name = j.at("name").get<std::string>();
  const auto n = j.at("dim").get<std::size_t>();
  auto basis = j.at("basis").get<std::vector<std::string>>();
  if (basis.size() != n) {
    throw AlgebraError(ErrorKind::ParseError, "ring '" + name + "': basis has " +
                                                  std::to_string(basis.size()) + " names, dim is " +
                                                  std::to_string(n));
  }
  const auto& mul = j.at("mul");
  if (!mul.is_array() || mul.size() != n) {
    throw AlgebraError(ErrorKind::ParseError, "ring '" + name + "': mul must be " +
                                                  std::to_string(n) + "x" + std::to_string(n) +
                                                  "x" + std::to_string(n));
  }
  std::vector<typename F::Element> constants;
  constants.reserve(n * n * n);
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != n) {
      throw AlgebraError(ErrorKind::ParseError, "ring '" + name + "': mul has a malformed row");
    }
    for (const auto& cell : row) {
      auto v = coords_from_json(f, cell, n);
      constants.insert(constants.end(), v.begin(), v.end());
    }
  }
  auto unit = coords_from_json(f, j.at("unit"), n);
  std::string note = j.contains("note") ? j.at("note").get<std::string>() : std::string{};
  try {
    return Ring<F>::create(name, f, std::move(basis), std::move(constants), std::move(unit),
                           std::move(note));
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::InvalidRing) throw AlgebraError(ErrorKind::ParseError, e.what());
    throw;
  }
}

template <ScalarField F>
Json ring_to_json_in(const Ring<F>& r, Json domain) {
  const auto& f = r.field();
  const std::size_t n = r.dim();
  Json j;
  j["name"] = r.name();
  j["domain"] = std::move(domain);
  j["dim"] = n;
  j["basis"] = r.basis_names();
  if (!r.note().empty()) j["note"] = r.note();
  j["unit"] = coords_json(f, r.unit());
  Json mul = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      Json cell = Json::array();
      for (std::size_t m = 0; m < n; ++m) cell.push_back(f.to_string(r.constant(i, k, m)));
      row.push_back(std::move(cell));
    }
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

}  // namespace

AnyRing ring_from_json(const Json& j) {
  try {
    const auto& domain = j.at("domain");
    if (domain.is_string() && domain.get<std::string>() == "Q") {
      return ring_from_json_in(Rationals{}, j);
    }
    if (domain.is_object() && domain.contains("Fp")) {
      const auto p = domain.at("Fp").get<std::int64_t>();
      try {
        return ring_from_json_in(PrimeField(p), j);
      } catch (const AlgebraError& e) {
        if (e.kind() == ErrorKind::InvalidField) throw AlgebraError(ErrorKind::ParseError, e.what());
        throw;
      }
    }
    throw AlgebraError(ErrorKind::ParseError, "domain must be \"Q\" or {\"Fp\": p}");
  } catch (const Json::exception& e) {
    throw AlgebraError(ErrorKind::ParseError, std::string("malformed ring file: ") + e.what());
  }
}

AnyRing load_ring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError(ErrorKind::ParseError, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw AlgebraError(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return ring_from_json(j);
}

Json ring_to_json(const Ring<Rationals>& r) { return ring_to_json_in(r, "Q"); }

Json ring_to_json(const Ring<PrimeField>& r) {
  return ring_to_json_in(r, Json{{"Fp", r.field().modulus()}});
}

Json ring_to_json(const AnyRing& r) {
  return std::visit([](const auto& ring) { return ring_to_json(ring); }, r);
}

}  // namespace altring
