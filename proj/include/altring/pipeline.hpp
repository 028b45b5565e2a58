#pragma once

// End-to-end verification of a map against the decomposition theorem, and
// the JSON reports behind the CLI commands.
//
// verify_theorem runs its stages in order and stops at the first stage with
// a failing required report; the bundle then holds every report produced up
// to that point.

#include <optional>
#include <string>
#include <vector>

#include "altring/decompose.hpp"
#include "altring/ring_io.hpp"

namespace altring {

struct Stage {
  std::string name;
  std::vector<CheckReport> reports;
  bool pass() const { return all_pass(reports); }
};

struct TheoremOptions {
  std::optional<Branch> branch;
  ScanConfig scan;
};

struct TheoremReport {
  std::vector<Stage> stages;
  std::optional<DecompositionResult> decomposition;
  std::string halted_at;      // empty when every stage passed
  std::string usage_error;    // set when a caller choice is missing
  Json config;

  bool pass() const { return halted_at.empty() && usage_error.empty(); }
  // 0 all certificates pass, 1 a certificate failed, 2 caller choice missing
  int exit_code() const { return !usage_error.empty() ? 2 : pass() ? 0 : 1; }
  std::vector<CheckReport> failed() const;
  Json to_json() const;
};

TheoremReport verify_theorem(const MapTable& m, FpSpan e1, const TheoremOptions& opts = {});

// ---- command reports ---------------------------------------------------------

/// Identities, torsion, centre, nucleus, idempotent census and primeness.
/// Parts that cannot be computed (over Q or over budget) are reported with
/// "status": "skipped" and the reason; "partial" is true when any was.
Json analyze_ring(const AnyRing& r, const ScanConfig& cfg = {});

Json idempotents_report(const AnyRing& r, const ScanConfig& cfg = {});

/// Frame dimensions, component bases and the Peirce relation checks.
Json peirce_report(const AnyRing& r, const std::string& idempotent, const ScanConfig& cfg = {});

/// Conditions 1-4, the diagonal centrality checks and cell centres.
Json conditions_report(const AnyRing& r, const std::string& idempotent,
                       const ScanConfig& cfg = {});

/// Human-readable rendering of any of the reports above: one line per check.
std::string render_text(const Json& report);

}  // namespace altring
