#include "altring/decompose.hpp"

#include <map>

namespace altring {

namespace {

using Scalar = PrimeField::Element;
using Frame = PeirceFrame<PrimeField>;

std::string cell(int i, int j) { return "R" + std::to_string(i) + std::to_string(j); }

Json matrix_json(const PrimeField& f, const Matrix<PrimeField>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(coords_json(f, FpSpan(m.row(r))));
  return rows;
}

// Solves corner = z f over z in the centre; the preflight has made the
// solution unique whenever it exists.
FpVec central_part(const FpRing& t, const Subspace<PrimeField>& z, FpSpan fv, FpSpan corner) {
  const auto& f = t.field();
  std::vector<FpVec> cols;
  for (const auto& b : z.basis()) cols.push_back(t.mul(b, fv));
  if (cols.empty()) {
    if (!is_zero_vec(f, corner)) {
      throw AlgebraError(ErrorKind::AmbiguousCentralSplit, "corner is not a central multiple",
                         Json{{"corner", coords_json(f, corner)}});
    }
    return zero_vec(f, t.dim());
  }
  auto a = Matrix<PrimeField>::from_columns(f, t.dim(), cols);
  auto solved = solve(f, a, corner);
  if (!solved.solution || solved.kernel_dim != 0) {
    throw AlgebraError(ErrorKind::AmbiguousCentralSplit,
                       solved.solution ? "central split is not unique" : "corner is not a central multiple",
                       Json{{"corner", coords_json(f, corner)}, {"kernel_dim", solved.kernel_dim}});
  }
  return z.combine(*solved.solution);
}

}  // namespace

std::string_view to_string(Branch b) {
  return b == Branch::Dagger ? "dagger" : "ddagger";
}

std::optional<Branch> parse_branch(std::string_view text) {
  if (text == "dagger") return Branch::Dagger;
  if (text == "ddagger") return Branch::DoubleDagger;
  return std::nullopt;
}

Json DecompositionResult::to_json() const {
  const auto& f = source_frame.ring().field();
  Json j;
  j["branch"] = std::string(altring::to_string(branch));
  j["e1"] = coords_json(f, source_frame.e1());
  j["f1"] = coords_json(f, target_frame.e1());
  j["source_peirce_dims"] = source_frame.dims();
  j["target_peirce_dims"] = target_frame.dims();
  j["preflight"] = preflight;
  j["psi"] = matrix_json(f, psi);
  Json t = Json::array();
  for (const auto& v : tau) t.push_back(coords_json(f, v));
  j["tau"] = std::move(t);
  j["certificates"] = altring::to_json(certificates);
  return j;
}

DecompositionResult split_map(const MapTable& m, FpSpan e1, const DecomposeOptions& opts) {
  const auto& f = m.field();
  const auto& src = m.source();
  const auto& tgt = m.target();
  const auto budget = opts.scan.budget;

  auto f1 = image_idempotent(m, e1);
  auto sframe = Frame::build(src, FpVec(e1.begin(), e1.end()));
  auto tframe = Frame::build(tgt, f1);

  for (const auto& rep : check_main_hypotheses(sframe, budget)) {
    if (!rep.pass) {
      throw AlgebraError(ErrorKind::HypothesisFailed, rep.condition + " fails on '" + src.name() + "'",
                         Json{{"condition", rep.condition}, {"witness", rep.witness}});
    }
  }

  auto branches = detect_branch(m, e1, budget);
  Branch branch;
  if (opts.branch) {
    const bool holds = *opts.branch == Branch::Dagger ? branches.dagger : branches.double_dagger;
    if (!holds) {
      throw AlgebraError(ErrorKind::BranchUndetermined,
                         "requested branch " + std::string(to_string(*opts.branch)) + " does not hold",
                         branches.to_json());
    }
    branch = *opts.branch;
  } else if (branches.dagger && branches.double_dagger) {
    throw AlgebraError(ErrorKind::BranchUndetermined,
                       "both branches hold; choose one with --branch dagger|ddagger",
                       branches.to_json());
  } else if (branches.dagger) {
    branch = Branch::Dagger;
  } else if (branches.double_dagger) {
    branch = Branch::DoubleDagger;
  } else {
    throw AlgebraError(ErrorKind::BranchUndetermined, "neither branch holds", branches.to_json());
  }

  const auto z = center(tgt);
  Json preflight = Json::array();
  for (int i = 1; i <= 2; ++i) {
    auto meet = subspace_intersection(tframe.component(i, i), z);
    auto zf = central_multiples(tgt, z, FpSpan(tframe.e(i)));
    preflight.push_back(Json{{"corner", "f" + std::to_string(i)},
                             {"corner_meet_centre_dim", meet.dim()},
                             {"centre_dim", z.dim()},
                             {"central_multiples_dim", zf.dim()}});
    if (!meet.is_zero() || zf.dim() != z.dim()) {
      throw AlgebraError(ErrorKind::AmbiguousCentralSplit,
                         "target corner " + cell(i, i) + " meets the centre or Z f" +
                             std::to_string(i) + " collapses",
                         preflight.back());
    }
  }

  const auto& ss = m.source_space();
  std::vector<FpVec> diag_cache(m.size());
  std::vector<char> cached(m.size(), 0);
  auto psi_diag = [&](int i, const FpVec& x) -> const FpVec& {
    auto k = ss.index_of(x);
    if (!cached[k]) {
      const int j = 3 - i;
      const auto& y = m.image(k);
      // which corner carries the central part, and which carries psi
      const int zc = branch == Branch::Dagger ? j : i;
      const int pc = branch == Branch::Dagger ? i : j;
      auto zv = central_part(tgt, z, FpSpan(tframe.e(zc)), FpSpan(tframe.project(zc, zc, FpSpan(y))));
      auto v = tframe.project(pc, pc, FpSpan(y));
      v = vec_sub(f, FpSpan(v), FpSpan(tgt.mul(zv, tframe.e(pc))));
      diag_cache[k] = std::move(v);
      cached[k] = 1;
    }
    return diag_cache[k];
  };

  std::vector<FpVec> psi_table;
  std::vector<FpVec> tau;
  psi_table.reserve(m.size());
  tau.reserve(m.size());
  for (std::uint64_t k = 0; k < m.size(); ++k) {
    auto x = ss.at(k);
    auto parts = sframe.project(FpSpan(x));
    FpVec v = vec_add(f, FpSpan(psi_diag(1, parts[0])), FpSpan(psi_diag(2, parts[3])));
    v = vec_add(f, FpSpan(v), FpSpan(m(parts[1])));
    v = vec_add(f, FpSpan(v), FpSpan(m(parts[2])));
    tau.push_back(vec_sub(f, FpSpan(m.image(k)), FpSpan(v)));
    psi_table.push_back(std::move(v));
  }

  Matrix<PrimeField> psi(f, tgt.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    psi.set_column(c, psi_table[ss.index_of(src.basis_vec(c))]);
  }

  return DecompositionResult{branch,     std::move(sframe), std::move(tframe), std::move(psi),
                             std::move(psi_table), std::move(tau), {}, std::move(preflight)};
}

std::vector<CheckReport> verify_decomposition(const MapTable& m, const DecompositionResult& d,
                                              const ScanConfig& cfg) {
  const auto& f = m.field();
  const auto& src = m.source();
  const auto& tgt = m.target();
  const auto& ss = m.source_space();
  const bool hom = d.branch == Branch::Dagger;
  auto psi = [&](const FpVec& v) -> const FpVec& { return d.psi_table[ss.index_of(v)]; };
  // psi(ab) against psi(a)psi(b) or -psi(b)psi(a)
  auto expected_product = [&](const FpVec& a, const FpVec& b) {
    if (hom) return tgt.mul(psi(a), psi(b));
    return vec_neg(f, FpSpan(tgt.mul(psi(b), psi(a))));
  };
  auto product_witness = [&](const FpVec& a, const FpVec& b) {
    return Json{{"a", coords_json(f, a)},
                {"b", coords_json(f, b)},
                {"psi_of_product", coords_json(f, psi(src.mul(a, b)))},
                {"expected", coords_json(f, expected_product(a, b))}};
  };
  std::vector<CheckReport> out;

  {
    CheckReport rep{"recomposition"};
    for (std::uint64_t k = 0; k < m.size(); ++k) {
      if (vec_add(f, FpSpan(d.psi_table[k]), FpSpan(d.tau[k])) != m.image(k)) {
        rep.pass = false;
        rep.witness = Json{{"x", coords_json(f, ss.at(k))}};
        break;
      }
    }
    rep.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", m.size()}};
    out.push_back(std::move(rep));
  }

  const auto z = center(tgt);
  {
    CheckReport rep{"tau_central"};
    std::uint64_t nonzero = 0;
    for (std::uint64_t k = 0; k < m.size(); ++k) {
      if (!is_zero_vec(f, FpSpan(d.tau[k]))) ++nonzero;
      if (rep.pass && !z.contains(FpSpan(d.tau[k]))) {
        rep.pass = false;
        rep.witness = Json{{"x", coords_json(f, ss.at(k))}, {"tau_x", coords_json(f, d.tau[k])}};
      }
    }
    rep.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", m.size()}};
    rep.details = Json{{"nonzero_values", nonzero}};
    out.push_back(std::move(rep));
  }

  auto pair_report = [&](const std::string& name, auto&& holds, auto&& witness) {
    CheckReport rep{name};
    auto scan = scan_pairs(m.size(), cfg, holds);
    if (scan.witness) {
      rep.pass = false;
      rep.witness = witness(ss.at(scan.witness->first), ss.at(scan.witness->second));
    }
    rep.quantifier_space = scan.quantifier_space();
    return rep;
  };

  out.push_back(pair_report(
      "psi_additive",
      [&](std::uint64_t i, std::uint64_t j) {
        auto s = vec_add(f, FpSpan(ss.at(i)), FpSpan(ss.at(j)));
        return psi(s) == vec_add(f, FpSpan(d.psi_table[i]), FpSpan(d.psi_table[j]));
      },
      [&](const FpVec& a, const FpVec& b) {
        return Json{{"a", coords_json(f, a)}, {"b", coords_json(f, b)}};
      }));

  {
    CheckReport rep{"psi_matrix_consistent"};
    for (std::uint64_t k = 0; k < m.size(); ++k) {
      auto x = ss.at(k);
      if (mat_vec(f, d.psi, FpSpan(x)) != d.psi_table[k]) {
        rep.pass = false;
        rep.witness = Json{{"x", coords_json(f, x)}};
        break;
      }
    }
    rep.quantifier_space = Json{{"mode", "exhaustive"}, {"elements", m.size()}};
    out.push_back(std::move(rep));
  }

  {
    CheckReport rep{"psi_bijective"};
    auto rk = rank(f, d.psi);
    rep.pass = src.dim() == tgt.dim() && rk == src.dim();
    if (!rep.pass) rep.witness = Json{{"rank", rk}, {"source_dim", src.dim()}, {"target_dim", tgt.dim()}};
    rep.quantifier_space = Json{{"method", "rank"}};
    out.push_back(std::move(rep));
  }

  out.push_back(pair_report(
      hom ? "homomorphism" : "neg_antihomomorphism",
      [&](std::uint64_t i, std::uint64_t j) {
        auto a = ss.at(i), b = ss.at(j);
        return psi(src.mul(a, b)) == expected_product(a, b);
      },
      product_witness));

  // Peirce cases, each over both index assignments (i, j) = (1, 2), (2, 1).
  struct Case {
    const char* id;
    const char* cells;
    int a[2];  // cell of a relative to (i, j): 0 -> i, 1 -> j
    int b[2];
  };
  const Case cases[] = {{"I", "a_ii b_ij", {0, 0}, {0, 1}},
                        {"II", "a_ij b_jj", {0, 1}, {1, 1}},
                        {"III", "a_ii b_ii", {0, 0}, {0, 0}},
                        {"IV", "a_ij b_ij", {0, 1}, {0, 1}},
                        {"V", "a_ij b_ji", {0, 1}, {1, 0}}};
  const auto& frame = d.source_frame;
  std::map<std::pair<int, int>, std::vector<FpVec>> cell_elems;
  auto elems = [&](int r, int c) -> const std::vector<FpVec>& {
    auto key = std::pair{r, c};
    auto it = cell_elems.find(key);
    if (it == cell_elems.end()) {
      it = cell_elems.emplace(key, enumerate_subspace(frame.component(r, c), cfg.budget)).first;
    }
    return it->second;
  };
  for (const auto& cs : cases) {
    CheckReport rep{std::string(hom ? "hom_case_" : "antihom_case_") + cs.id};
    Json spaces = Json::array();
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
      const int idx[2] = {i, j};
      const auto& as = elems(idx[cs.a[0]], idx[cs.a[1]]);
      const auto& bs = elems(idx[cs.b[0]], idx[cs.b[1]]);
      auto scan = scan_grid(as.size(), bs.size(), cfg, [&](std::uint64_t p, std::uint64_t q) {
        return psi(src.mul(as[p], bs[q])) == expected_product(as[p], bs[q]);
      });
      if (scan.witness && rep.pass) {
        rep.pass = false;
        rep.witness = product_witness(as[scan.witness->first], bs[scan.witness->second]);
        rep.witness["i"] = i;
        rep.witness["j"] = j;
      }
      auto q = scan.quantifier_space();
      q["i"] = i;
      q["j"] = j;
      spaces.push_back(std::move(q));
    }
    rep.quantifier_space = Json{{"assignments", spaces}};
    rep.details = Json{{"cells", cs.cells}};
    out.push_back(std::move(rep));
  }

  {
    CheckReport rep{"triple_product"};
    Json spaces = Json::array();
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
      const auto& as = elems(i, j);
      const auto& bs = elems(j, i);
      auto scan = scan_grid(as.size(), bs.size(), cfg, [&](std::uint64_t p, std::uint64_t q) {
        const auto& a = as[p];
        const auto& b = bs[q];
        auto lhs = psi(src.mul(src.mul(a, b), a));
        auto rhs = tgt.mul(tgt.mul(psi(a), psi(b)), psi(a));
        return lhs == rhs;
      });
      if (scan.witness && rep.pass) {
        rep.pass = false;
        rep.witness = Json{{"a", coords_json(f, as[scan.witness->first])},
                           {"b", coords_json(f, bs[scan.witness->second])},
                           {"i", i},
                           {"j", j}};
      }
      auto q = scan.quantifier_space();
      q["i"] = i;
      q["j"] = j;
      spaces.push_back(std::move(q));
    }
    rep.quantifier_space = Json{{"assignments", spaces}};
    rep.details = Json{{"identity", "psi(a_ij b_ji a_ij) = psi(a_ij) psi(b_ji) psi(a_ij)"}};
    out.push_back(std::move(rep));
  }

  out.push_back(pair_report(
      "tau_kills_commutators",
      [&](std::uint64_t i, std::uint64_t j) {
        auto c = src.commutator(ss.at(i), ss.at(j));
        return is_zero_vec(f, FpSpan(d.tau[ss.index_of(c)]));
      },
      [&](const FpVec& a, const FpVec& b) {
        auto c = src.commutator(a, b);
        return Json{{"a", coords_json(f, a)},
                    {"b", coords_json(f, b)},
                    {"tau_of_commutator", coords_json(f, d.tau[ss.index_of(c)])}};
      }));

  {
    auto rep = pair_report(
        "tau_additive",
        [&](std::uint64_t i, std::uint64_t j) {
          auto s = vec_add(f, FpSpan(ss.at(i)), FpSpan(ss.at(j)));
          return d.tau[ss.index_of(s)] == vec_add(f, FpSpan(d.tau[i]), FpSpan(d.tau[j]));
        },
        [&](const FpVec& a, const FpVec& b) {
          return Json{{"a", coords_json(f, a)}, {"b", coords_json(f, b)}};
        });
    rep.required = false;
    out.push_back(std::move(rep));
  }
  return out;
}

DecompositionResult decompose(const MapTable& m, FpSpan e1, const DecomposeOptions& opts) {
  auto d = split_map(m, e1, opts);
  d.certificates = verify_decomposition(m, d, opts.scan);
  for (const auto& rep : d.certificates) {
    if (rep.required && !rep.pass) {
      throw AlgebraError(ErrorKind::CertificationFailed, "certificate " + rep.condition + " fails",
                         Json{{"certificate", rep.condition},
                              {"witness", rep.witness},
                              {"certificates", to_json(d.certificates)}});
    }
  }
  return d;
}

}  // namespace altring
