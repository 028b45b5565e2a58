#include "altring/scan.hpp"

#include <algorithm>

namespace altring {

void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what) {
  if (needed > budget) {
    throw AlgebraError(ErrorKind::BudgetExceeded,
                       what + " needs " + std::to_string(needed) +
                           " evaluations, budget is " + std::to_string(budget),
                       Json{{"needed", needed}, {"budget", budget}});
  }
}

std::optional<std::uint64_t> space_size(const PrimeField& f, std::size_t dim) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  const auto p = static_cast<std::uint64_t>(f.modulus());
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (size > kLimit / p) return std::nullopt;
    size *= p;
  }
  return size;
}

ElementSpace::ElementSpace(PrimeField field, std::size_t dim)
    : field_(field), dim_(dim), size_(0) {
  auto s = space_size(field_, dim_);
  if (!s) {
    throw AlgebraError(ErrorKind::BudgetExceeded,
                       field_.name() + "^" + std::to_string(dim) + " is too large to enumerate");
  }
  size_ = *s;
}

Vec<PrimeField> ElementSpace::at(std::uint64_t index) const {
  const auto p = static_cast<std::uint64_t>(field_.modulus());
  Vec<PrimeField> v(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = static_cast<Scalar>(index % p);
    index /= p;
  }
  return v;
}

std::uint64_t ElementSpace::index_of(std::span<const Scalar> v) const {
  const auto p = static_cast<std::uint64_t>(field_.modulus());
  std::uint64_t index = 0;
  for (std::size_t i = dim_; i-- > 0;) index = index * p + static_cast<std::uint64_t>(v[i]);
  return index;
}

std::vector<Vec<PrimeField>> enumerate_subspace(const Subspace<PrimeField>& s,
                                                std::uint64_t budget) {
  const auto& f = s.field();
  auto count = space_size(f, s.dim());
  if (!count) require_budget(~std::uint64_t{0}, budget, "subspace enumeration");
  require_budget(*count, budget, "subspace enumeration");
  ElementSpace coeffs(f, s.dim());
  ElementSpace ambient(f, s.ambient_dim());
  std::vector<std::pair<std::uint64_t, Vec<PrimeField>>> keyed;
  keyed.reserve(*count);
  for (std::uint64_t c = 0; c < *count; ++c) {
    auto v = s.combine(coeffs.at(c));
    auto key = ambient.index_of(v);
    keyed.emplace_back(key, std::move(v));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec<PrimeField>> out;
  out.reserve(keyed.size());
  for (auto& [key, v] : keyed) out.push_back(std::move(v));
  return out;
}

bool is_projective_representative(std::span<const PrimeField::Element> v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] != 0) return v[i] == 1;
  }
  return false;
}

Json PairScan::quantifier_space() const {
  Json q;
  q["mode"] = exhaustive ? "exhaustive" : "sampled";
  q["pairs_total"] = total;
  q["pairs_checked"] = checked;
  if (!exhaustive) {
    q["seed"] = seed;
    q["coverage"] = static_cast<double>(checked) / static_cast<double>(total);
  }
  return q;
}

}  // namespace altring
