#include "altring/pipeline.hpp"

#include <sstream>

#include "altring/identities.hpp"

namespace altring {

namespace {

template <ScalarField F>
CheckReport identity_report(const std::string& name, const IdentityCheck<F>& check,
                            const F& f) {
  CheckReport rep{name};
  rep.pass = check.holds;
  if (check.witness) {
    Json w = Json::array();
    for (const auto& v : *check.witness) w.push_back(coords_json(f, v));
    rep.witness = Json{{"law", check.law}, {"elements", w}};
  }
  rep.quantifier_space = Json{{"method", "polarized_basis"}};
  return rep;
}

CheckReport flag_report(const std::string& name, bool pass) {
  CheckReport rep{name};
  rep.pass = pass;
  rep.quantifier_space = Json{{"method", "characteristic"}};
  return rep;
}

std::vector<CheckReport> ring_hypotheses(const FpRing& s, const FpRing& t) {
  const auto& f = s.field();
  return {identity_report("source_alternative", is_alternative(s), f),
          identity_report("target_alternative", is_alternative(t), f),
          flag_report("source_2_torsion_free", is_k_torsion_free(s, 2)),
          flag_report("source_3_torsion_free", is_k_torsion_free(s, 3)),
          flag_report("target_2_torsion_free", is_k_torsion_free(t, 2))};
}

CheckReport error_report(const std::string& name, const AlgebraError& e) {
  CheckReport rep{name};
  rep.pass = false;
  rep.witness = Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (!e.detail().is_null()) rep.witness["detail"] = e.detail();
  return rep;
}

template <ScalarField F>
Json basis_json(const F& f, const Subspace<F>& s) {
  Json b = Json::array();
  for (const auto& v : s.basis()) b.push_back(coords_json(f, v));
  return b;
}

Json skipped(const AlgebraError& e) {
  return Json{{"status", "skipped"},
              {"reason", std::string(to_string(e.kind()))},
              {"message", e.what()}};
}

template <ScalarField F>
PeirceFrame<F> build_frame(const Ring<F>& r, Vec<F> e1) {
  return PeirceFrame<F>::build(r, std::move(e1));
}

Json domain_json(const Ring<Rationals>&) { return "Q"; }
Json domain_json(const Ring<PrimeField>& r) { return Json{{"Fp", r.field().modulus()}}; }

}  // namespace

std::vector<CheckReport> TheoremReport::failed() const {
  std::vector<CheckReport> out;
  for (const auto& s : stages)
    for (const auto& r : s.reports)
      if (r.required && !r.pass) out.push_back(r);
  return out;
}

Json TheoremReport::to_json() const {
  Json j;
  j["config"] = config;
  j["pass"] = pass();
  j["exit_code"] = exit_code();
  j["halted_at"] = halted_at.empty() ? Json(nullptr) : Json(halted_at);
  if (!usage_error.empty()) j["usage_error"] = usage_error;
  Json stages_json = Json::array();
  for (const auto& s : stages) {
    stages_json.push_back(
        Json{{"stage", s.name}, {"pass", s.pass()}, {"reports", altring::to_json(s.reports)}});
  }
  j["stages"] = std::move(stages_json);
  j["decomposition"] = decomposition ? decomposition->to_json() : Json(nullptr);
  return j;
}

TheoremReport verify_theorem(const MapTable& m, FpSpan e1, const TheoremOptions& opts) {
  const auto& f = m.field();
  const auto& cfg = opts.scan;
  TheoremReport report;
  report.config = Json{{"source", m.source().name()},
                       {"target", m.target().name()},
                       {"e1", coords_json(f, e1)},
                       {"budget", cfg.budget},
                       {"seed", cfg.seed},
                       {"branch", opts.branch ? Json(std::string(to_string(*opts.branch)))
                                              : Json(nullptr)}};

  // Returns false (and records the halt) when the stage fails.
  auto run = [&](const std::string& name, std::vector<CheckReport> reports) {
    report.stages.push_back(Stage{name, std::move(reports)});
    if (!report.stages.back().pass()) {
      report.halted_at = name;
      return false;
    }
    return true;
  };

  if (!run("ring_hypotheses", ring_hypotheses(m.source(), m.target()))) return report;
  if (!run("lie_multiplicative", {verify_lie_multiplicative(m, cfg)})) return report;
  if (!run("bijective", {verify_bijective(m)})) return report;
  if (!run("preserves_idempotents", {verify_preserves_idempotents(m, cfg)})) return report;
  if (!run("consequences", check_bijection_consequences(m))) return report;
  if (!run("almost_additive", {check_almost_additivity(m, cfg)})) return report;

  auto sframe = PeirceFrame<PrimeField>::build(m.source(), FpVec(e1.begin(), e1.end()));
  {
    auto reports = check_main_hypotheses(sframe, cfg.budget);
    for (auto rep : check_spade_club(sframe, cfg.budget)) {
      if (rep.condition != "conditions_1_to_3_imply_diagonal_centrality") rep.required = false;
      reports.push_back(std::move(rep));
    }
    if (!run("hypotheses", std::move(reports))) return report;
  }

  try {
    if (!run("peirce_image", check_peirce_image(m, e1, cfg.budget))) return report;
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::NotIdempotentImage) throw;
    run("peirce_image", {error_report("image_idempotent", e)});
    return report;
  }

  auto branches = detect_branch(m, e1, cfg.budget);
  {
    auto reports = branches.parts;
    for (auto& rep : reports) rep.required = false;
    CheckReport chosen{"branch_determined"};
    chosen.quantifier_space = Json{{"method", "branch_detection"}};
    chosen.details = Json{{"dagger", branches.dagger}, {"double_dagger", branches.double_dagger}};
    if (opts.branch) {
      chosen.pass = *opts.branch == Branch::Dagger ? branches.dagger : branches.double_dagger;
      chosen.details["requested"] = std::string(to_string(*opts.branch));
    } else {
      chosen.pass = branches.dagger != branches.double_dagger;
      if (branches.dagger && branches.double_dagger) {
        report.usage_error = "both branches hold; choose one with --branch dagger|ddagger";
      }
    }
    if (!chosen.pass) chosen.witness = Json{{"dagger", branches.dagger}, {"double_dagger", branches.double_dagger}};
    reports.push_back(std::move(chosen));
    if (!run("branch", std::move(reports))) return report;
  }

  DecomposeOptions dopts{opts.branch, cfg};
  try {
    auto d = split_map(m, e1, dopts);
    d.certificates = verify_decomposition(m, d, cfg);
    const bool ok = run("decomposition", d.certificates);
    report.decomposition = std::move(d);
    (void)ok;
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::AmbiguousCentralSplit) throw;
    run("decomposition", {error_report("central_split", e)});
  }
  return report;
}

// ---- command reports -----------------------------------------------------------

Json analyze_ring(const AnyRing& any, const ScanConfig& cfg) {
  return std::visit(
      [&](const auto& r) {
        const auto& f = r.field();
        Json j;
        bool partial = false;
        j["ring"] = r.name();
        j["domain"] = domain_json(r);
        j["dim"] = r.dim();
        j["unit"] = "ok";
        Json ids = Json::array();
        ids.push_back(to_json(identity_report("alternative", is_alternative(r), f)));
        ids.push_back(to_json(identity_report("flexible", is_flexible(r), f)));
        ids.push_back(to_json(identity_report("associative", is_associative(r), f)));
        j["identities"] = std::move(ids);
        j["torsion_free"] = Json{{"2", is_k_torsion_free(r, 2)}, {"3", is_k_torsion_free(r, 3)}};
        auto z = center(r);
        auto n = nucleus(r);
        j["centre"] = Json{{"dim", z.dim()}, {"basis", basis_json(f, z)}};
        j["nucleus"] = Json{{"dim", n.dim()}, {"basis", basis_json(f, n)}};
        try {
          auto all = idempotents(r, cfg.budget);
          std::size_t nontrivial = 0;
          for (const auto& e : all) nontrivial += e.kind == IdempotentKind::Nontrivial;
          j["idempotents"] = Json{{"status", "complete"}, {"total", all.size()}, {"nontrivial", nontrivial}};
        } catch (const AlgebraError& e) {
          if (e.kind() != ErrorKind::UnsupportedDomain && e.kind() != ErrorKind::BudgetExceeded) throw;
          j["idempotents"] = skipped(e);
          partial = true;
        }
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Ring<PrimeField>>) {
          try {
            auto p = check_primeness(r, cfg.budget);
            j["primeness"] = p.to_json();
            j["primeness"]["status"] = "complete";
          } catch (const AlgebraError& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            j["primeness"] = skipped(e);
            partial = true;
          }
        } else {
          j["primeness"] = Json{{"status", "skipped"},
                                {"reason", "UnsupportedDomain"},
                                {"message", "primeness is decided over F_p only"}};
          partial = true;
        }
        j["partial"] = partial;
        return j;
      },
      any);
}

Json idempotents_report(const AnyRing& any, const ScanConfig& cfg) {
  return std::visit(
      [&](const auto& r) {
        const auto& f = r.field();
        Json list = Json::array();
        for (const auto& e : idempotents(r, cfg.budget)) {
          list.push_back(Json{{"coords", coords_json(f, e.coords)}, {"kind", std::string(to_string(e.kind))}});
        }
        return Json{{"ring", r.name()}, {"count", list.size()}, {"idempotents", list}};
      },
      any);
}

Json peirce_report(const AnyRing& any, const std::string& idempotent, const ScanConfig& cfg) {
  return std::visit(
      [&](const auto& r) {
        const auto& f = r.field();
        auto e1 = parse_coords(f, idempotent, r.dim());
        auto frame = build_frame(r, std::move(e1));
        Json comps;
        for (auto [i, j] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
          comps["R" + std::to_string(i) + std::to_string(j)] = basis_json(f, frame.component(i, j));
        }
        auto relations = verify_peirce_relations(frame, cfg.budget);
        return Json{{"ring", r.name()},
                    {"e1", coords_json(f, frame.e1())},
                    {"e2", coords_json(f, frame.e2())},
                    {"dims", frame.dims()},
                    {"components", comps},
                    {"pass", all_pass(relations)},
                    {"relations", to_json(relations)}};
      },
      any);
}

Json conditions_report(const AnyRing& any, const std::string& idempotent, const ScanConfig& cfg) {
  return std::visit(
      [&](const auto& r) {
        const auto& f = r.field();
        auto e1 = parse_coords(f, idempotent, r.dim());
        auto frame = build_frame(r, std::move(e1));
        Json j{{"ring", r.name()}, {"e1", coords_json(f, frame.e1())}};
        try {
          j["conditions"] = to_json(check_main_hypotheses(frame, cfg.budget));
        } catch (const AlgebraError& e) {
          if (e.kind() != ErrorKind::UnsupportedDomain && e.kind() != ErrorKind::BudgetExceeded) throw;
          auto partial = check_corner_conditions(frame, cfg.budget);
          j["conditions"] = to_json(partial);
          j["condition_4"] = skipped(e);
        }
        j["diagonal_centrality"] = to_json(check_spade_club(frame, cfg.budget));
        j["cell_centres"] = to_json(check_z_of_peirce_cell(frame));
        return j;
      },
      any);
}

namespace {

// Scalars and arrays nesting only scalars print on one line.
bool is_plain(const Json& v) {
  if (v.is_primitive()) return true;
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (!is_plain(x)) return false;
  return true;
}

void render(std::ostringstream& out, const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("condition") && j.contains("pass")) {
    out << (j["pass"].get<bool>() ? "PASS " : "FAIL ") << path << j["condition"].get<std::string>();
    if (j.contains("required") && !j["required"].get<bool>()) out << " (informational)";
    if (!j["witness"].is_null()) out << "  witness=" << j["witness"].dump();
    out << '\n';
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_plain(v)) {
        out << path << k << ": " << v.dump() << '\n';
      } else {
        render(out, v, path + k + ".");
      }
    }
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& v = j[i];
      std::string label = v.is_object() && v.contains("stage") ? v["stage"].get<std::string>() + "."
                                                                : std::to_string(i) + ".";
      if (v.is_object() && v.contains("stage")) {
        render(out, v["reports"], path + label);
      } else {
        render(out, v, path + label);
      }
    }
    return;
  }
  out << path << ": " << j.dump() << '\n';
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  Json trimmed = report;
  // Full tables are only useful as JSON.
  if (trimmed.contains("decomposition") && trimmed["decomposition"].is_object()) {
    trimmed["decomposition"].erase("tau");
  }
  render(out, trimmed, "");
  return out.str();
}

}  // namespace altring
