#include "altring/lie_checks.hpp"

#include <algorithm>

namespace altring {

namespace {

using Scalar = PrimeField::Element;

std::string cell(int i, int j) { return "R" + std::to_string(i) + std::to_string(j); }

Json pair_witness(const MapTable& m, std::uint64_t i, std::uint64_t j, const char* a = "x",
                  const char* b = "y") {
  const auto& f = m.field();
  return Json{{a, coords_json(f, m.source_space().at(i))},
              {b, coords_json(f, m.source_space().at(j))}};
}

// is_idem[k] for every element of the space underlying r.
std::vector<char> idempotent_flags(const FpRing& r, const ElementSpace& space) {
  std::vector<char> flags(space.size(), 0);
  for (std::uint64_t k = 0; k < space.size(); ++k) {
    auto e = space.at(k);
    flags[k] = r.mul(e, e) == e ? 1 : 0;
  }
  return flags;
}

// a - l b, reduced.
FpVec minus_scaled(const PrimeField& f, const FpVec& a, Scalar l, const FpVec& b) {
  FpVec out = a;
  vec_axpy(f, f.neg(l), FpSpan(b), std::span<Scalar>(out));
  return out;
}

}  // namespace

CheckReport verify_lie_multiplicative(const MapTable& m, const ScanConfig& cfg) {
  const auto& src = m.source();
  const auto& tgt = m.target();
  const auto& space = m.source_space();
  CheckReport rep{"lie_multiplicative"};
  auto scan = scan_pairs(m.size(), cfg, [&](std::uint64_t i, std::uint64_t j) {
    auto x = space.at(i), y = space.at(j);
    auto lhs = m(src.commutator(x, y));
    return lhs == tgt.commutator(m.image(i), m.image(j));
  });
  if (scan.witness) {
    auto [i, j] = *scan.witness;
    auto x = space.at(i), y = space.at(j);
    rep.pass = false;
    rep.witness = pair_witness(m, i, j);
    rep.witness["phi_of_bracket"] = coords_json(m.field(), m(src.commutator(x, y)));
    rep.witness["bracket_of_images"] =
        coords_json(m.field(), tgt.commutator(m.image(i), m.image(j)));
  }
  rep.quantifier_space = scan.quantifier_space();
  return rep;
}

CheckReport verify_bijective(const MapTable& m) {
  CheckReport rep{"bijective"};
  const auto& ts = m.target_space();
  rep.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", m.size()}};
  if (ts.size() != m.size()) {
    rep.pass = false;
    rep.witness = Json{{"source_elements", m.size()}, {"target_elements", ts.size()}};
    return rep;
  }
  std::vector<std::uint64_t> preimage(ts.size(), ~std::uint64_t{0});
  for (std::uint64_t i = 0; i < m.size(); ++i) {
    auto k = ts.index_of(m.image(i));
    if (preimage[k] != ~std::uint64_t{0}) {
      rep.pass = false;
      rep.witness = pair_witness(m, preimage[k], i);
      rep.witness["image"] = coords_json(m.field(), m.image(i));
      return rep;
    }
    preimage[k] = i;
  }
  return rep;
}

CheckReport verify_preserves_idempotents(const MapTable& m, const ScanConfig& cfg) {
  const auto& f = m.field();
  if (f.modulus() < 5) {
    throw AlgebraError(ErrorKind::UnsupportedDomain,
                       "idempotent preservation is checked over F_p with p >= 5");
  }
  auto bij = verify_bijective(m);
  if (!bij.pass) {
    throw AlgebraError(ErrorKind::NotBijective,
                       "idempotent preservation needs a bijective map", bij.witness);
  }
  const auto& ss = m.source_space();
  const auto& ts = m.target_space();
  const auto src_idem = idempotent_flags(m.source(), ss);
  const auto tgt_idem = idempotent_flags(m.target(), ts);

  CheckReport rep{"preserves_idempotents"};
  Scalar bad_lambda = 0;
  auto scan = scan_pairs(m.size(), cfg, [&](std::uint64_t i, std::uint64_t j) {
    auto e = ss.at(i), g = ss.at(j);
    for (Scalar l = 0; l < f.modulus(); ++l) {
      bool lhs = src_idem[ss.index_of(minus_scaled(f, e, l, g))];
      bool rhs = tgt_idem[ts.index_of(minus_scaled(f, m.image(i), l, m.image(j)))];
      if (lhs != rhs) {
        bad_lambda = l;
        return false;
      }
    }
    return true;
  });
  if (scan.witness) {
    auto [i, j] = *scan.witness;
    auto e = ss.at(i), g = ss.at(j);
    auto s = minus_scaled(f, e, bad_lambda, g);
    auto t = minus_scaled(f, m.image(i), bad_lambda, m.image(j));
    rep.pass = false;
    rep.witness = pair_witness(m, i, j, "e", "f");
    rep.witness["lambda"] = f.to_string(bad_lambda);
    rep.witness["source_element"] = coords_json(f, s);
    rep.witness["source_idempotent"] = static_cast<bool>(src_idem[ss.index_of(s)]);
    rep.witness["target_element"] = coords_json(f, t);
    rep.witness["target_idempotent"] = static_cast<bool>(tgt_idem[ts.index_of(t)]);
  }
  rep.quantifier_space = scan.quantifier_space();
  rep.quantifier_space["lambdas_per_pair"] = f.modulus();
  return rep;
}

std::vector<CheckReport> check_bijection_consequences(const MapTable& m) {
  const auto& f = m.field();
  const auto& ss = m.source_space();
  std::vector<CheckReport> out;

  CheckReport inj{"injective"};
  {
    auto bij = verify_bijective(m);
    if (!bij.pass && bij.witness.contains("x")) {
      inj.pass = false;
      inj.witness = bij.witness;
    }
    inj.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", m.size()}};
  }
  out.push_back(std::move(inj));

  CheckReport zero{"zero_fixed"};
  const auto& z = m.image(0);
  if (!is_zero_vec(f, FpSpan(z))) {
    zero.pass = false;
    zero.witness = Json{{"phi_of_zero", coords_json(f, z)}};
  }
  zero.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", 1}};
  out.push_back(std::move(zero));

  CheckReport hom{"homogeneous"};
  for (std::uint64_t i = 0; i < m.size() && hom.pass; ++i) {
    auto x = ss.at(i);
    for (Scalar l = 0; l < f.modulus(); ++l) {
      auto lhs = m(vec_scale(f, l, FpSpan(x)));
      auto rhs = vec_scale(f, l, FpSpan(m.image(i)));
      if (lhs != rhs) {
        hom.pass = false;
        hom.witness = Json{{"x", coords_json(f, x)},
                           {"lambda", f.to_string(l)},
                           {"phi_of_scaled", coords_json(f, lhs)},
                           {"scaled_image", coords_json(f, rhs)}};
        break;
      }
    }
  }
  hom.quantifier_space =
      Json{{"mode", "exhaustive"}, {"elements", m.size()}, {"lambdas", f.modulus()}};
  out.push_back(std::move(hom));
  return out;
}

CheckReport check_almost_additivity(const MapTable& m, const ScanConfig& cfg) {
  const auto& f = m.field();
  const auto& ss = m.source_space();
  const auto z = center(m.target());
  auto defect = [&](std::uint64_t i, std::uint64_t j) {
    auto sum = vec_add(f, FpSpan(ss.at(i)), FpSpan(ss.at(j)));
    auto d = vec_sub(f, FpSpan(m(sum)), FpSpan(m.image(i)));
    return vec_sub(f, FpSpan(d), FpSpan(m.image(j)));
  };
  std::uint64_t nonzero = 0;
  auto scan = scan_pairs(m.size(), cfg, [&](std::uint64_t i, std::uint64_t j) {
    auto d = defect(i, j);
    if (!is_zero_vec(f, FpSpan(d))) ++nonzero;
    return z.contains(FpSpan(d));
  });
  CheckReport rep{"almost_additive"};
  if (scan.witness) {
    auto [i, j] = *scan.witness;
    rep.pass = false;
    rep.witness = pair_witness(m, i, j, "a", "b");
    rep.witness["defect"] = coords_json(f, defect(i, j));
  }
  rep.quantifier_space = scan.quantifier_space();
  rep.details = Json{{"nonzero_defects", nonzero}};
  return rep;
}

FpVec image_idempotent(const MapTable& m, FpSpan e1) {
  const auto& f = m.field();
  if (e1.size() != m.source().dim()) {
    throw AlgebraError(ErrorKind::DimensionMismatch, "idempotent has wrong coordinate count");
  }
  const auto& t = m.target();
  FpVec f1 = m(e1);
  if (t.mul(f1, f1) != f1 || is_zero_vec(f, FpSpan(f1)) || f1 == t.unit()) {
    throw AlgebraError(ErrorKind::NotIdempotentImage,
                       "phi(e1) is not a nontrivial idempotent of '" + t.name() + "'",
                       Json{{"e1", coords_json(f, e1)}, {"phi_e1", coords_json(f, f1)}});
  }
  return f1;
}

std::vector<CheckReport> check_peirce_image(const MapTable& m, FpSpan e1, std::uint64_t budget) {
  const auto& f = m.field();
  auto f1 = image_idempotent(m, e1);
  auto src = PeirceFrame<PrimeField>::build(m.source(), FpVec(e1.begin(), e1.end()));
  auto tgt = PeirceFrame<PrimeField>::build(m.target(), f1);
  const auto z = center(m.target());
  std::vector<CheckReport> out;

  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    CheckReport rep{"offdiag_image_" + cell(i, j)};
    const auto& s = src.component(i, j);
    const auto& t = tgt.component(i, j);
    auto elems = enumerate_subspace(s, budget);
    for (const auto& x : elems) {
      auto y = m(x);
      if (!t.contains(FpSpan(y))) {
        rep.pass = false;
        rep.witness = Json{{"x", coords_json(f, x)}, {"phi_x", coords_json(f, y)}};
        break;
      }
    }
    if (rep.pass && s.dim() != t.dim()) {
      rep.pass = false;
      rep.witness = Json{{"source_dim", s.dim()}, {"target_dim", t.dim()}};
    }
    rep.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", elems.size()}};
    out.push_back(std::move(rep));
  }

  // Diagonal images: same corner plus centre, or opposite corner plus centre.
  CheckReport shape{"diagonal_image_shape"};
  std::array<bool, 2> same{true, true}, opposite{true, true};
  Json first_same_failure = nullptr, first_opposite_failure = nullptr;
  std::uint64_t counted = 0;
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    auto same_space = subspace_sum(tgt.component(i, i), z);
    auto opp_space = subspace_sum(tgt.component(j, j), z);
    for (const auto& x : enumerate_subspace(src.component(i, i), budget)) {
      ++counted;
      auto y = m(x);
      if (same[i - 1] && !same_space.contains(FpSpan(y))) {
        same[i - 1] = false;
        if (first_same_failure.is_null())
          first_same_failure = Json{{"x", coords_json(f, x)}, {"phi_x", coords_json(f, y)}};
      }
      if (opposite[i - 1] && !opp_space.contains(FpSpan(y))) {
        opposite[i - 1] = false;
        if (first_opposite_failure.is_null())
          first_opposite_failure = Json{{"x", coords_json(f, x)}, {"phi_x", coords_json(f, y)}};
      }
    }
  }
  const bool same_shape = same[0] && same[1];
  const bool opposite_shape = opposite[0] && opposite[1];
  shape.pass = same_shape || opposite_shape;
  if (!shape.pass) {
    shape.witness = Json{{"same_corner", first_same_failure}, {"opposite_corner", first_opposite_failure}};
  }
  shape.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", counted}};
  shape.details = Json{{"same_corner_plus_centre", same_shape},
                       {"opposite_corner_plus_centre", opposite_shape}};
  out.push_back(std::move(shape));

  for (auto& rep : check_corner_conditions(tgt, budget)) {
    rep.condition = "target_" + rep.condition;
    out.push_back(std::move(rep));
  }
  return out;
}

Json BranchReport::to_json() const {
  Json j;
  j["dagger"] = dagger;
  j["double_dagger"] = double_dagger;
  j["parts"] = altring::to_json(parts);
  return j;
}

BranchReport detect_branch(const MapTable& m, FpSpan e1, std::uint64_t budget) {
  const auto& f = m.field();
  auto f1 = image_idempotent(m, e1);
  auto src = PeirceFrame<PrimeField>::build(m.source(), FpVec(e1.begin(), e1.end()));
  auto tgt = PeirceFrame<PrimeField>::build(m.target(), f1);
  const auto z = center(m.target());

  BranchReport report;
  // corner i of phi(R_kk) inside Z f_i
  auto part = [&](const std::string& name, int i, int k) {
    CheckReport rep{name};
    auto zf = central_multiples(m.target(), z, FpSpan(tgt.e(i)));
    auto elems = enumerate_subspace(src.component(k, k), budget);
    for (const auto& x : elems) {
      auto corner = tgt.project(i, i, FpSpan(m(x)));
      if (!zf.contains(FpSpan(corner))) {
        rep.pass = false;
        rep.witness = Json{{"x", coords_json(f, x)}, {"corner", coords_json(f, corner)}};
        break;
      }
    }
    rep.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", elems.size()}};
    rep.details = Json{{"corner", "f" + std::to_string(i)}, {"source_cell", cell(k, k)}};
    return rep;
  };
  report.parts.push_back(part("dagger_f1_R22", 1, 2));
  report.parts.push_back(part("dagger_f2_R11", 2, 1));
  report.parts.push_back(part("double_dagger_f1_R11", 1, 1));
  report.parts.push_back(part("double_dagger_f2_R22", 2, 2));
  report.dagger = report.parts[0].pass && report.parts[1].pass;
  report.double_dagger = report.parts[2].pass && report.parts[3].pass;
  return report;
}

}  // namespace altring
