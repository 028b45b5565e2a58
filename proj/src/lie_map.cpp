#include "altring/lie_map.hpp"

#include <string_view>

#include "altring/identities.hpp"
#include "altring/structure.hpp"

namespace altring {

namespace {

void require_same_field(const FpRing& a, const FpRing& b) {
  if (a.field().modulus() != b.field().modulus()) {
    throw AlgebraError(ErrorKind::RingMismatch, "maps need source and target over the same field; '" +
                                                    a.name() + "' is over " + a.field().name() +
                                                    ", '" + b.name() + "' over " +
                                                    b.field().name());
  }
}

void require_associative(const FpRing& r, const std::string& what) {
  auto check = is_associative(r);
  if (!check.holds) {
    throw AlgebraError(ErrorKind::NotAssociative, what + " needs an associative ring; '" +
                                                      r.name() + "' is not");
  }
}

// Matrix size k when the basis is E11, E12, ..., Ekk in row-major order.
std::size_t matrix_size(const FpRing& r) {
  std::size_t k = 0;
  while (k * k < r.dim()) ++k;
  bool ok = k * k == r.dim() && k < 10;
  for (std::size_t i = 0; ok && i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto expected = "E" + std::to_string(i + 1) + std::to_string(j + 1);
      if (r.basis_names()[i * k + j] != expected) ok = false;
    }
  }
  if (!ok) {
    throw AlgebraError(ErrorKind::NotMatrixRing,
                       "'" + r.name() + "' does not have a matrix unit basis E11, E12, ...");
  }
  return k;
}

}  // namespace

MapTable MapTable::dense(FpRing source, FpRing target, std::vector<FpVec> images,
                         std::uint64_t budget) {
  require_same_field(source, target);
  auto data = std::make_shared<Data>(std::move(source), std::move(target));
  require_budget(data->source_space.size(), budget, "map table on '" + data->source.name() + "'");
  if (images.size() != data->source_space.size()) {
    throw AlgebraError(ErrorKind::DimensionMismatch,
                       "map table has " + std::to_string(images.size()) + " entries, source has " +
                           std::to_string(data->source_space.size()) + " elements");
  }
  const auto p = data->target.field().modulus();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].size() != data->target.dim()) {
      throw AlgebraError(ErrorKind::DimensionMismatch,
                         "map table entry " + std::to_string(i) + " has the wrong length");
    }
    for (auto x : images[i]) {
      if (x < 0 || x >= p) {
        throw AlgebraError(ErrorKind::DimensionMismatch,
                           "map table entry " + std::to_string(i) + " is not reduced mod p");
      }
    }
  }
  data->images = std::move(images);
  return MapTable(std::move(data));
}

MapTable MapTable::structured(FpRing source, FpRing target, Matrix<PrimeField> linear,
                              FpVec functional, FpVec central, std::uint64_t budget) {
  require_same_field(source, target);
  const PrimeField f = source.field();
  if (linear.rows() != target.dim() || linear.cols() != source.dim()) {
    throw AlgebraError(ErrorKind::DimensionMismatch,
                       "linear part must be " + std::to_string(target.dim()) + "x" +
                           std::to_string(source.dim()));
  }
  if (functional.size() != source.dim() || central.size() != target.dim()) {
    throw AlgebraError(ErrorKind::DimensionMismatch, "functional or central offset has wrong length");
  }
  auto dot = [&](FpSpan a, FpSpan b) {
    PrimeField::Element s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
  };
  if (!is_zero_vec(f, FpSpan(functional)) && !is_zero_vec(f, FpSpan(central))) {
    if (!center(target).contains(FpSpan(central))) {
      throw AlgebraError(ErrorKind::OffsetNotCentral, "offset element is not central in '" +
                                                          target.name() + "'",
                         Json{{"central", coords_json(f, central)}});
    }
    const auto commutators = commutator_span(source);
    for (const auto& c : commutators.basis()) {
      if (dot(functional, c) != 0) {
        throw AlgebraError(ErrorKind::OffsetNotCentral,
                           "offset functional does not vanish on commutators",
                           Json{{"commutator", coords_json(f, c)}});
      }
    }
  }

  auto data = std::make_shared<Data>(std::move(source), std::move(target));
  require_budget(data->source_space.size(), budget, "map table on '" + data->source.name() + "'");
  data->images.reserve(data->source_space.size());
  for (std::uint64_t i = 0; i < data->source_space.size(); ++i) {
    auto x = data->source_space.at(i);
    auto y = mat_vec(f, linear, FpSpan(x));
    vec_axpy(f, dot(functional, x), FpSpan(central), std::span<PrimeField::Element>(y));
    data->images.push_back(std::move(y));
  }
  data->structured = StructuredPart{std::move(linear), std::move(functional), std::move(central)};
  return MapTable(std::move(data));
}

MapTable MapTable::with_entry(std::uint64_t index, FpVec value) const {
  auto images = d_->images;
  images.at(index) = std::move(value);
  return dense(d_->source, d_->target, std::move(images), ~std::uint64_t{0});
}

MapTable identity_map(const FpRing& r, std::uint64_t budget) {
  return linear_map(r, r, Matrix<PrimeField>::identity(r.field(), r.dim()), budget);
}

MapTable linear_map(const FpRing& source, const FpRing& target, const Matrix<PrimeField>& m,
                    std::uint64_t budget) {
  const auto& f = source.field();
  return MapTable::structured(source, target, m, zero_vec(f, source.dim()),
                              zero_vec(f, target.dim()), budget);
}

Matrix<PrimeField> neg_transpose_matrix(const FpRing& r) {
  const auto& f = r.field();
  const std::size_t k = matrix_size(r);
  Matrix<PrimeField> m(f, r.dim(), r.dim());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(j * k + i, i * k + j) = f.neg(f.one());
  return m;
}

FpVec trace_functional(const FpRing& r) {
  const auto& f = r.field();
  const std::size_t k = matrix_size(r);
  FpVec t = zero_vec(f, r.dim());
  for (std::size_t i = 0; i < k; ++i) t[i * k + i] = f.one();
  return t;
}

MapTable neg_transpose_plus_trace(const FpRing& r, std::uint64_t budget) {
  require_associative(r, "neg_transpose_plus_trace");
  return MapTable::structured(r, r, neg_transpose_matrix(r), trace_functional(r), r.unit(),
                              budget);
}

std::optional<FpVec> inverse(const FpRing& r, FpSpan u) {
  const auto& f = r.field();
  auto solved = solve(f, r.left_mul_matrix(u), FpSpan(r.unit()));
  if (!solved.solution) return std::nullopt;
  const auto& v = *solved.solution;
  if (r.mul(v, u) != r.unit()) return std::nullopt;
  return v;
}

Matrix<PrimeField> conjugation_matrix(const FpRing& r, FpSpan u) {
  require_associative(r, "conjugation");
  if (u.size() != r.dim()) {
    throw AlgebraError(ErrorKind::DimensionMismatch, "conjugating element has wrong length");
  }
  auto v = inverse(r, u);
  if (!v) {
    throw AlgebraError(ErrorKind::NotInvertible, "element is not invertible in '" + r.name() + "'",
                       Json{{"u", coords_json(r.field(), u)}});
  }
  Matrix<PrimeField> m(r.field(), r.dim(), r.dim());
  for (std::size_t k = 0; k < r.dim(); ++k) {
    auto col = r.mul(r.mul(u, r.basis_vec(k)), *v);
    m.set_column(k, col);
  }
  return m;
}

MapTable conjugation_map(const FpRing& r, FpSpan u, std::uint64_t budget) {
  return linear_map(r, r, conjugation_matrix(r, u), budget);
}

MapTable compose(const std::vector<MapTable>& maps, std::uint64_t budget) {
  if (maps.empty()) throw AlgebraError(ErrorKind::DimensionMismatch, "compose needs at least one map");
  for (std::size_t k = 1; k < maps.size(); ++k) {
    if (!(maps[k].source() == maps[k - 1].target())) {
      throw AlgebraError(ErrorKind::RingMismatch,
                         "compose: map " + std::to_string(k) + " does not start where map " +
                             std::to_string(k - 1) + " ends");
    }
  }
  const auto& first = maps.front();
  std::vector<FpVec> images;
  images.reserve(first.size());
  for (std::uint64_t i = 0; i < first.size(); ++i) {
    FpVec y = first.image(i);
    for (std::size_t k = 1; k < maps.size(); ++k) y = maps[k](FpSpan(y));
    images.push_back(std::move(y));
  }
  return MapTable::dense(first.source(), maps.back().target(), std::move(images), budget);
}

}  // namespace altring
