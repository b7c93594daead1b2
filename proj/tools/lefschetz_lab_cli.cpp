// Command-line front end. Talks to the engine only through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz_lab/lefschetz_lab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFixtureFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndetermined = 3;

using Json = nlohmann::ordered_json;

struct CString {
  char* p = nullptr;
  ~CString() { llab_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct PolyHandle {
  llab_poly* p = nullptr;
  ~PolyHandle() { llab_poly_free(p); }
};

// Thrown to unwind with a specific exit code after printing a message.
struct Exit {
  int code;
};

[[noreturn]] void die(const std::string& msg, int code = kExitUsage) {
  std::cerr << "lefschetz-lab: " << msg << "\n";
  throw Exit{code};
}

void check(llab_status s) {
  if (s != LLAB_OK) die(std::string(llab_status_name(s)) + ": " + llab_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::uint64_t default_seed() {
  const char* env = std::getenv("LEFSCHETZ_LAB_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    die(std::string("LEFSCHETZ_LAB_SEED is not an unsigned integer: ") + env);
  }
}

struct AnalyzeArgs {
  std::string poly, in, vars, mode = "prob", json;
  std::optional<int> split;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> max_k;
  bool strict = false;
};

int run_analyze(const AnalyzeArgs& a) {
  std::string text = a.poly;
  std::string vars = a.vars;
  int split = a.split.value_or(-1);
  if (!a.in.empty()) {
    const std::string content = read_file(a.in);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
      // Instance files written by `generate --out`.
      Json inst;
      try {
        inst = Json::parse(content);
      } catch (const Json::exception& e) {
        die(a.in + ": " + e.what());
      }
      if (!inst.contains("polynomial")) die(a.in + ": no \"polynomial\" field");
      text = inst["polynomial"].get<std::string>();
      if (vars.empty() && inst.contains("variables")) {
        std::string csv;
        for (const auto& v : inst["variables"]) csv += (csv.empty() ? "" : ",") + v.get<std::string>();
        vars = csv;
      }
      if (!a.split && inst.contains("split")) split = inst["split"].get<int>();
    } else {
      text = content;
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
  }
  if (text.empty()) die("analyze needs --poly or --in");
  if (a.mode != "exact" && a.mode != "prob") die("--mode must be exact or prob");

  PolyHandle p;
  check(llab_poly_parse(text.c_str(), vars.empty() ? nullptr : vars.c_str(), split, &p.p));

  Json opts{{"mode", a.mode}, {"seed", a.seed.value_or(default_seed())}};
  if (a.max_k) opts["max_k"] = *a.max_k;
  CString report, summary;
  check(llab_analyze(p.p, opts.dump().c_str(), &report.p, &summary.p));
  std::cout << summary.str();
  if (!a.json.empty()) write_file(a.json, report.str());

  const Json r = Json::parse(report.str());
  const bool undetermined =
      r["slp"]["verdict"] == "undetermined" || r["wlp"]["verdict"] == "undetermined";
  return a.strict && undetermined ? kExitUndetermined : kExitOk;
}

struct GenerateArgs {
  std::string family, variant, case_id, out;
  std::optional<int> n, m, d, k, e, r;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> overrides;
};

int run_generate(const GenerateArgs& a) {
  Json spec{{"family", a.family}};
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) spec[key] = *v;
  };
  put("n", a.n);
  put("m", a.m);
  put("d", a.d);
  put("k", a.k);
  put("e", a.e);
  put("r", a.r);
  if (!a.variant.empty()) spec["variant"] = a.variant;
  if (!a.case_id.empty()) spec["case"] = a.case_id;
  spec["seed"] = a.seed.value_or(default_seed());
  if (!a.overrides.empty()) {
    Json ov = Json::object();
    for (const auto& o : a.overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos || eq == 0) die("--override expects name=polynomial, got " + o);
      ov[o.substr(0, eq)] = o.substr(eq + 1);
    }
    spec["overrides"] = std::move(ov);
  }
  CString inst;
  check(llab_generate(spec.dump().c_str(), &inst.p));
  const Json j = Json::parse(inst.str());
  std::cout << j["polynomial"].get<std::string>() << "\n" << j.dump(2) << "\n";
  if (!a.out.empty()) write_file(a.out, inst.str());
  return kExitOk;
}

struct ReproduceArgs {
  std::string suite = "paper", json, mode = "prob";
  std::optional<std::uint64_t> seed;
};

int run_reproduce(const ReproduceArgs& a) {
  if (a.mode != "exact" && a.mode != "prob") die("--mode must be exact or prob");
  Json opts{{"suite", a.suite}, {"seed", a.seed.value_or(default_seed())}, {"mode", a.mode}};
  CString report, table;
  int all_passed = 0;
  check(llab_reproduce(opts.dump().c_str(), &report.p, &table.p, &all_passed));
  std::cout << table.str();
  if (!a.json.empty()) write_file(a.json, report.str());
  if (all_passed) return kExitOk;
  std::cerr << "failing fixtures:";
  const Json parsed = Json::parse(report.str());
  for (const auto& f : parsed["fixtures"])
    if (!f["passed"].get<bool>()) std::cerr << " " << f["key"].get<std::string>();
  std::cerr << "\n";
  return kExitFixtureFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert vectors, higher Hessians and Lefschetz properties of Artinian "
               "Gorenstein algebras"};
  app.set_version_flag("--version", std::string(llab_version()));
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Analyze a homogeneous form");
  auto* poly_opt = analyze->add_option("--poly", an.poly, "Polynomial text");
  analyze->add_option("--in", an.in, "File with polynomial text or a generated instance")
      ->excludes(poly_opt);
  analyze->add_option("--vars", an.vars, "Comma-separated variable names");
  analyze->add_option("--split", an.split, "First k names form the x-block")->check(CLI::NonNegativeNumber);
  analyze->add_option("--mode", an.mode, "exact or prob")->check(CLI::IsMember({"exact", "prob"}));
  analyze->add_option("--seed", an.seed, "Random seed (default LEFSCHETZ_LAB_SEED or 0)");
  analyze->add_option("--json", an.json, "Write the JSON report here");
  analyze->add_option("--max-k", an.max_k, "Largest Hessian order to test");
  analyze->add_flag("--strict", an.strict, "Exit 3 when a verdict is undetermined");

  GenerateArgs ge;
  auto* generate = app.add_subcommand("generate", "Generate a family instance with its manifest");
  generate->add_option("--family", ge.family, "Family kind")->required();
  generate->add_option("--n", ge.n);
  generate->add_option("--m", ge.m);
  generate->add_option("--d", ge.d);
  generate->add_option("--k", ge.k);
  generate->add_option("--e", ge.e);
  generate->add_option("--r", ge.r);
  generate->add_option("--case", ge.case_id, "i, ii or iii");
  generate->add_option("--variant", ge.variant, "lemma_m2, maximal or minimal");
  generate->add_option("--seed", ge.seed);
  generate->add_option("--override", ge.overrides, "name=polynomial for a tail term");
  generate->add_option("--out", ge.out, "Write the instance JSON here");

  ReproduceArgs re;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate and check the fixture suite");
  reproduce->add_option("--suite", re.suite, "Suite name");
  reproduce->add_option("--json", re.json, "Write the JSON report here");
  reproduce->add_option("--seed", re.seed);
  reproduce->add_option("--mode", re.mode, "exact or prob")->check(CLI::IsMember({"exact", "prob"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(an);
    if (*generate) return run_generate(ge);
    if (*reproduce) return run_reproduce(re);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "lefschetz-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
