#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "families.hpp"
#include "hessian.hpp"
#include "lefschetz.hpp"

namespace llab {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
  VanishingMode mode = VanishingMode::Probabilistic;
  std::uint64_t seed = 0;
  std::optional<unsigned> max_k;
  unsigned trials = 8;
};

struct AnalysisReport {
  Poly f{VarsPtr{}};
  HilbertVector hilbert;
  bool unimodal = true;
  ConeTest cone;
  bool depends_on_all_vars = true;
  std::vector<VanishingVerdict> hess_profile;
  LefschetzReport slp;
  LefschetzReport wlp;
  std::uint64_t seed = 0;
  VanishingMode mode = VanishingMode::Probabilistic;
  /// Per-stage wall time; excluded from determinism comparisons.
  std::vector<std::pair<std::string, double>> timing_ms;
};

AnalysisReport analyze(const Poly& f, const AnalysisOptions& opts);

/// True when either Lefschetz verdict is undetermined.
bool has_undetermined(const AnalysisReport& r);

Json to_json(const Rational& q);
Json to_json(const VanishingVerdict& v);
Json to_json(const LefschetzReport& r, const VariableSet& vars);
Json to_json(const FailureCertificate& c);
Json to_json(const AnalysisReport& r, bool with_timing = true);
Json to_json(const FamilySpec& s);
Json to_json(const FamilyInstance& inst);
Json to_json(const ManifestCheck& c);

FamilySpec family_spec_from_json(const Json& j);
AnalysisOptions analysis_options_from_json(const Json& j);

/// Multi-line human-readable summary.
std::string summary(const AnalysisReport& r);

struct SuiteOptions {
  std::string suite = "paper";
  std::uint64_t seed = 0;
  VanishingMode mode = VanishingMode::Probabilistic;
};

struct SuiteEntry {
  std::string key;
  std::string description;
  bool passed = false;
  std::vector<ManifestCheck> checks;
  std::string error;
  double ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteEntry> entries;
  bool all_passed() const;
};

struct SuiteFixture {
  std::string key;
  std::string description;
  std::function<FamilyInstance()> make;
};

/// Fixtures of the named suite in table order; unknown names are InvalidArgument.
std::vector<SuiteFixture> suite_fixtures(const std::string& suite);

/// Regenerates every fixture of the named suite and replays its manifest.
/// Unknown suite names are InvalidArgument.
SuiteReport run_suite(const SuiteOptions& opts);
Json to_json(const SuiteReport& r);
std::string suite_table(const SuiteReport& r);

}  // namespace llab
