// altring: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (the report
// carries a witness), 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altring/generators.hpp"
#include "altring/map_io.hpp"
#include "altring/pipeline.hpp"

using namespace altring;

namespace {

struct Options {
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;

  ScanConfig scan() const {
    ScanConfig cfg;
    cfg.seed = seed;
    if (budget) {
      cfg.budget = *budget;
    } else if (const char* env = std::getenv("ALTRING_BUDGET")) {
      try {
        cfg.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw AlgebraError(ErrorKind::ParseError, std::string("ALTRING_BUDGET is not a number: ") + env);
      }
    }
    return cfg;
  }
};

void emit(const Options& opt, const Json& report, bool text_allowed = true) {
  std::string body = opt.format == "text" && text_allowed ? render_text(report) : report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw AlgebraError(ErrorKind::ParseError, "cannot write " + opt.out);
  file << body;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HypothesisFailed:
    case ErrorKind::BranchUndetermined:
    case ErrorKind::AmbiguousCentralSplit:
    case ErrorKind::CertificationFailed:
    case ErrorKind::NotIdempotentImage:
    case ErrorKind::NotBijective:
      return 1;
    default:
      return 2;
  }
}

AnyRing generate(const std::string& kind, const std::string& field,
                 const std::vector<std::string>& operands);

AnyRing make_named(const std::string& kind, const std::string& field) {
  auto build = [&](const auto& f) -> AnyRing {
    if (kind == "m2") return make_m2(f);
    if (kind == "zorn") return make_zorn(f);
    if (kind == "triangular2") return make_triangular2(f);
    throw AlgebraError(ErrorKind::ParseError, "unknown ring kind '" + kind + "'");
  };
  if (field == "Q") return build(Rationals{});
  std::int64_t p = 0;
  try {
    p = std::stoll(field);
  } catch (const std::exception&) {
    throw AlgebraError(ErrorKind::InvalidField, "--field must be a prime or Q, got '" + field + "'");
  }
  PrimeField f(p);
  if (p < 5) std::cerr << "warning: p = " << p << " < 5; torsion hypotheses fail over this field\n";
  return build(f);
}

AnyRing operand(const std::string& name, const std::string& field) {
  if (name == "m2" || name == "zorn" || name == "triangular2") return make_named(name, field);
  return load_ring(name);
}

AnyRing generate(const std::string& kind, const std::string& field,
                 const std::vector<std::string>& operands) {
  if (kind != "direct_sum") {
    if (!operands.empty()) throw AlgebraError(ErrorKind::ParseError, kind + " takes no operands");
    return make_named(kind, field);
  }
  if (operands.size() != 2) {
    throw AlgebraError(ErrorKind::ParseError, "direct_sum takes two operands (kinds or ring files)");
  }
  auto a = operand(operands[0], field);
  auto b = operand(operands[1], field);
  return std::visit(
      [](const auto& x, const auto& y) -> AnyRing {
        if constexpr (std::is_same_v<decltype(x), decltype(y)>) {
          if (x.field() != y.field()) {
            throw AlgebraError(ErrorKind::RingMismatch, "direct_sum operands are over different fields");
          }
          return make_direct_sum(x, y);
        } else {
          throw AlgebraError(ErrorKind::RingMismatch, "direct_sum operands are over different fields");
        }
      },
      a, b);
}

FpRing fp_ring(const std::string& path) {
  auto r = load_ring(path);
  if (auto* fp = std::get_if<Ring<PrimeField>>(&r)) return *fp;
  throw AlgebraError(ErrorKind::UnsupportedDomain,
                     "'" + path + "' is over Q; maps and decomposition need a ring over F_p");
}

struct MapInputs {
  std::string source, target, map, idempotent, branch;
};

std::optional<Branch> branch_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto b = parse_branch(text);
  if (!b) throw AlgebraError(ErrorKind::ParseError, "--branch must be dagger or ddagger");
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternative rings: structure, Peirce decompositions and Lie multiplicative maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--budget", opt.budget, "evaluation budget (default 1000000, env ALTRING_BUDGET)");
  app.add_option("--seed", opt.seed, "seed for sampled pair scans");
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "write the report here instead of stdout");

  std::string kind, field = "5";
  std::vector<std::string> operands;
  auto* gen = app.add_subcommand("gen", "emit a ring file: m2, zorn, triangular2, direct_sum A B");
  gen->add_option("kind", kind)->required()->check(
      CLI::IsMember({"m2", "zorn", "triangular2", "direct_sum"}));
  gen->add_option("operands", operands, "direct_sum operands: kinds or ring files");
  gen->add_option("--field", field, "prime p or Q (default 5)");

  std::string ring_path, idempotent;
  auto* analyze = app.add_subcommand("analyze", "identities, centre, nucleus, idempotents, primeness");
  analyze->add_option("ring", ring_path)->required();
  auto* idem = app.add_subcommand("idempotents", "list all idempotents");
  idem->add_option("ring", ring_path)->required();
  auto* peirce = app.add_subcommand("peirce", "Peirce decomposition and its relations");
  peirce->add_option("ring", ring_path)->required();
  peirce->add_option("--idempotent", idempotent, "coordinates, comma separated")->required();
  auto* conds = app.add_subcommand("check-conditions", "conditions 1-4 on a Peirce frame");
  conds->add_option("ring", ring_path)->required();
  conds->add_option("--idempotent", idempotent, "coordinates, comma separated")->required();

  MapInputs mi;
  auto add_map_options = [&](CLI::App* sub) {
    sub->add_option("--source", mi.source)->required();
    sub->add_option("--target", mi.target)->required();
    sub->add_option("--map", mi.map)->required();
    sub->add_option("--idempotent", mi.idempotent, "coordinates, comma separated")->required();
    sub->add_option("--branch", mi.branch, "dagger or ddagger");
  };
  auto* dec = app.add_subcommand("decompose", "split a map as psi + tau");
  add_map_options(dec);
  auto* thm = app.add_subcommand("verify-theorem", "full verification pipeline");
  add_map_options(thm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto cfg = opt.scan();
    if (gen->parsed()) {
      emit(opt, ring_to_json(generate(kind, field, operands)), false);
      return 0;
    }
    if (analyze->parsed()) {
      emit(opt, analyze_ring(load_ring(ring_path), cfg));
      return 0;
    }
    if (idem->parsed()) {
      emit(opt, idempotents_report(load_ring(ring_path), cfg));
      return 0;
    }
    if (peirce->parsed()) {
      auto report = peirce_report(load_ring(ring_path), idempotent, cfg);
      emit(opt, report);
      return report["pass"].get<bool>() ? 0 : 1;
    }
    if (conds->parsed()) {
      auto report = conditions_report(load_ring(ring_path), idempotent, cfg);
      emit(opt, report);
      return 0;
    }
    auto source = fp_ring(mi.source);
    auto target = mi.target == mi.source ? source : fp_ring(mi.target);
    auto m = load_map(mi.map, source, target, cfg.budget);
    auto e1 = parse_coords(source.field(), mi.idempotent, source.dim());
    if (dec->parsed()) {
      auto d = decompose(m, e1, DecomposeOptions{branch_option(mi.branch), cfg});
      emit(opt, d.to_json());
      return 0;
    }
    auto report = verify_theorem(m, e1, TheoremOptions{branch_option(mi.branch), cfg});
    emit(opt, report.to_json());
    if (!report.usage_error.empty()) std::cerr << "error: " << report.usage_error << '\n';
    return report.exit_code();
  } catch (const AlgebraError& e) {
    Json err{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"detail", e.detail()}};
    std::cerr << "error: " << e.what() << '\n';
    if (!e.detail().is_null()) std::cerr << e.detail().dump() << '\n';
    if (!opt.out.empty()) {
      std::ofstream(opt.out, std::ios::binary) << err.dump(2) << '\n';
    }
    return exit_code_for(e.kind());
  }
}
