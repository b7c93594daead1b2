#include "report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "error.hpp"

namespace llab {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json ops_json(const std::vector<DiffOp>& ops) {
  Json a = Json::array();
  for (const auto& op : ops) a.push_back(op.to_string());
  return a;
}

Json level_json(const LevelCheck& c) {
  return Json{{"map", Json::array({c.from, c.to})}, {"rank", c.rank}, {"required", c.required}};
}

Json hilbert_json(const HilbertVector& hv) {
  Json a = Json::array();
  for (auto h : hv.dims) a.push_back(h);
  return a;
}

std::string csv(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s;
}

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

std::optional<int> opt_int(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<int>();
}

VanishingMode parse_mode(const std::string& s) {
  if (s == "exact") return VanishingMode::Exact;
  if (s == "prob" || s == "probabilistic") return VanishingMode::Probabilistic;
  fail(ErrorKind::InvalidArgument, "mode must be exact or prob");
}

}  // namespace

AnalysisReport analyze(const Poly& f, const AnalysisOptions& opts) {
  require(!f.is_zero(), "cannot analyze the zero polynomial");
  require(f.is_homogeneous(), "f must be homogeneous");
  AnalysisReport rep;
  rep.f = f;
  rep.seed = opts.seed;
  rep.mode = opts.mode;
  const unsigned d = f.degree();

  auto t0 = Clock::now();
  const GorensteinAlgebra a(f);
  rep.hilbert = a.hilbert();
  rep.unimodal = is_unimodal(rep.hilbert);
  rep.cone = is_cone(f);
  rep.depends_on_all_vars = !rep.cone.is_cone;
  rep.timing_ms.emplace_back("algebra", elapsed_ms(t0));

  t0 = Clock::now();
  VanishingOptions v;
  v.mode = opts.mode;
  v.seed = derive_seed(opts.seed, 0x51, 0);
  rep.hess_profile = hess_profile(f, v, opts.max_k);
  rep.timing_ms.emplace_back("hess_profile", elapsed_ms(t0));

  GenericOptions g;
  g.vanishing = v;
  g.seed = opts.seed;
  g.trials = opts.trials;

  t0 = Clock::now();
  const bool truncated = rep.hess_profile.size() < d / 2 + 1;
  bool vanishing_seen = false;
  for (const auto& p : rep.hess_profile) vanishing_seen = vanishing_seen || p.vanishes;
  if (truncated && !vanishing_seen) {
    rep.slp.property = LefschetzProperty::SLP;
    rep.slp.hilbert = rep.hilbert;
    rep.slp.unimodal = rep.unimodal;
    rep.slp.notes.push_back("Hessian profile truncated by max-k before any vanishing level");
  } else {
    std::vector<VanishingVerdict> full = rep.hess_profile;
    // A truncated profile with a vanishing level is padded with the
    // nonvanishing placeholders slp_generic never reaches.
    for (unsigned k = static_cast<unsigned>(full.size()); k <= d / 2; ++k) {
      VanishingVerdict pad;
      pad.k = k;
      full.push_back(pad);
    }
    rep.slp = slp_generic(a, g, full);
  }
  rep.timing_ms.emplace_back("slp", elapsed_ms(t0));

  t0 = Clock::now();
  rep.wlp = wlp_generic(a, g);
  rep.timing_ms.emplace_back("wlp", elapsed_ms(t0));
  return rep;
}

bool has_undetermined(const AnalysisReport& r) {
  return r.slp.verdict == Verdict::Undetermined || r.wlp.verdict == Verdict::Undetermined;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const VanishingVerdict& v) {
  Json j;
  j["k"] = v.k;
  j["matrix_size"] = v.matrix_size;
  j["vanishes"] = v.vanishes;
  j["mode"] = to_string(v.mode);
  if (v.witness_point) {
    Json p = Json::array();
    for (const auto& c : *v.witness_point) p.push_back(to_string(c));
    j["witness_point"] = std::move(p);
  }
  if (v.det_value) j["det_value"] = to_string(*v.det_value);
  put(j, "transcript_hash", v.transcript_hash);
  put(j, "error_bound", v.error_bound);
  put(j, "note", v.note);
  return j;
}

Json to_json(const FailureCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  if (c.hessian) j["hessian"] = to_json(*c.hessian);
  if (c.key) {
    j["k"] = c.key->k;
    j["ops"] = ops_json(c.key->ops);
    j["s"] = c.key->s;
    j["bound"] = to_string(c.key->bound);
    j["pivot_columns"] = c.key->pivot_columns;
  }
  if (c.obstruction) {
    j["k"] = c.obstruction->k;
    j["ops"] = ops_json(c.obstruction->ops);
    j["s"] = c.obstruction->s;
    j["bound"] = to_string(c.obstruction->bound);
    j["monomial_ops"] = c.obstruction->monomial;
  }
  put(j, "drop_level", c.drop_level);
  return j;
}

Json to_json(const LefschetzReport& r, const VariableSet& vars) {
  Json j;
  j["property"] = to_string(r.property);
  j["verdict"] = to_string(r.verdict);
  if (r.failing_map) {
    j["level"] = r.failing_map->from;
    j["map"] = Json::array({r.failing_map->from, r.failing_map->to});
    j["rank"] = r.failing_map->rank;
    j["required"] = r.failing_map->required;
  }
  if (r.witness) {
    Json c = Json::array();
    for (const auto& x : r.witness->coeffs) c.push_back(to_string(x));
    j["witness_coeffs"] = std::move(c);
    j["witness"] = r.witness->to_string(vars);
    Json levels = Json::array();
    for (const auto& l : r.witness_levels) levels.push_back(level_json(l));
    j["witness_levels"] = std::move(levels);
  }
  if (!r.certificates.empty()) {
    j["certificate"] = to_json(r.certificates.front());
    Json all = Json::array();
    for (const auto& c : r.certificates) all.push_back(to_json(c));
    j["certificates"] = std::move(all);
  }
  j["hilbert"] = hilbert_json(r.hilbert);
  j["unimodal"] = r.unimodal;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const AnalysisReport& r, bool with_timing) {
  Json j;
  const VariableSet& vars = r.f.vars();
  Json input;
  input["polynomial"] = r.f.to_string();
  input["variables"] = vars.names();
  if (vars.has_split()) input["split"] = vars.x_count();
  j["input"] = std::move(input);
  j["degree"] = r.f.degree();
  j["hilbert"] = hilbert_json(r.hilbert);
  j["unimodal"] = r.unimodal;
  Json cone;
  cone["is_cone"] = r.cone.is_cone;
  if (r.cone.is_cone) {
    Json dep = Json::array();
    for (const auto& c : r.cone.dependency) dep.push_back(to_string(c));
    cone["dependency"] = std::move(dep);
  }
  j["cone"] = std::move(cone);
  j["depends_on_all_vars"] = r.depends_on_all_vars;
  Json prof = Json::array();
  for (const auto& v : r.hess_profile) prof.push_back(to_json(v));
  j["hess_profile"] = std::move(prof);
  j["slp"] = to_json(r.slp, vars);
  j["wlp"] = to_json(r.wlp, vars);
  Json certs = Json::array();
  for (const auto* rep : {&r.slp, &r.wlp})
    for (const auto& c : rep->certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  j["seed"] = r.seed;
  j["mode"] = to_string(r.mode);
  j["tool_version"] = LEFSCHETZ_LAB_VERSION;
  if (with_timing) {
    Json t;
    for (const auto& [stage, ms] : r.timing_ms) t[stage] = ms;
    j["timing_ms"] = std::move(t);
  }
  return j;
}

Json to_json(const FamilySpec& s) {
  Json j;
  j["family"] = to_string(s.kind);
  put(j, "n", s.n);
  put(j, "m", s.m);
  put(j, "d", s.d);
  put(j, "k", s.k);
  put(j, "e", s.e);
  put(j, "r", s.r);
  if (!s.variant.empty()) j["variant"] = s.variant;
  if (!s.case_id.empty()) j["case"] = s.case_id;
  j["seed"] = s.seed;
  if (!s.overrides.empty()) j["overrides"] = s.overrides;
  return j;
}

Json to_json(const FamilyInstance& inst) {
  Json j;
  j["family"] = to_string(inst.spec.kind);
  j["spec"] = to_json(inst.spec);
  j["polynomial"] = inst.f.to_string();
  j["variables"] = inst.f.vars().names();
  if (inst.f.vars().has_split()) j["split"] = inst.f.vars().x_count();
  j["degree"] = inst.f.degree();

  const Manifest& m = inst.manifest;
  Json man;
  if (!m.hess.empty()) {
    Json h = Json::array();
    for (const auto& c : m.hess) h.push_back(Json{{"k", c.k}, {"vanishes", c.vanishes}});
    man["hess"] = std::move(h);
  }
  if (m.hilbert) man["hilbert"] = hilbert_json(*m.hilbert);
  if (!m.hilbert_entries.empty()) {
    Json e;
    for (const auto& [k, h] : m.hilbert_entries) e[std::to_string(k)] = h;
    man["hilbert_entries"] = std::move(e);
  }
  put(man, "codimension", m.codimension);
  put(man, "unimodal", m.unimodal);
  put(man, "cone", m.cone);
  put(man, "slp_fails_at", m.slp_fails_at);
  put(man, "wlp_fails_at", m.wlp_fails_at);
  if (m.wlp_witness) man["wlp_witness"] = m.wlp_witness->to_string(inst.f.vars());
  if (!m.key_levels.empty()) man["key_levels"] = m.key_levels;
  put(man, "key_s", m.key_s);
  put(man, "obstruction_level", m.obstruction_level);
  put(man, "obstruction_s", m.obstruction_s);
  j["manifest"] = std::move(man);
  if (!inst.notes.empty()) j["notes"] = inst.notes;
  return j;
}

Json to_json(const ManifestCheck& c) {
  return Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

FamilySpec family_spec_from_json(const Json& j) {
  require(j.is_object(), "family spec must be a JSON object");
  require(j.contains("family"), "family spec needs a \"family\" field");
  FamilySpec s;
  s.kind = parse_family_kind(j["family"].get<std::string>());
  s.n = opt_int(j, "n");
  s.m = opt_int(j, "m");
  s.d = opt_int(j, "d");
  s.k = opt_int(j, "k");
  s.e = opt_int(j, "e");
  s.r = opt_int(j, "r");
  if (j.contains("variant")) s.variant = j["variant"].get<std::string>();
  if (j.contains("case")) s.case_id = j["case"].get<std::string>();
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("overrides"))
    for (const auto& [name, text] : j["overrides"].items()) s.overrides[name] = text.get<std::string>();
  return s;
}

AnalysisOptions analysis_options_from_json(const Json& j) {
  AnalysisOptions o;
  if (j.is_null()) return o;
  require(j.is_object(), "options must be a JSON object");
  if (j.contains("mode")) o.mode = parse_mode(j["mode"].get<std::string>());
  if (j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("max_k") && !j["max_k"].is_null()) o.max_k = j["max_k"].get<unsigned>();
  if (j.contains("trials")) o.trials = j["trials"].get<unsigned>();
  return o;
}

std::string summary(const AnalysisReport& r) {
  std::ostringstream os;
  const VariableSet& vars = r.f.vars();
  os << "f = " << r.f.to_string() << "\n";
  os << "variables: " << csv(vars.names());
  if (vars.has_split()) os << " (x-block " << vars.x_count() << ", u-block " << vars.u_count() << ")";
  os << "\n";
  os << "Hilbert vector: " << r.hilbert.to_string() << (r.unimodal ? " unimodal" : " not unimodal")
     << "\n";
  os << "cone: " << (r.cone.is_cone ? "yes" : "no") << "\n";
  if (!r.depends_on_all_vars) os << "warning: (Ann f)_1 is nonzero\n";
  for (const auto& v : r.hess_profile) {
    os << "hess^" << v.k << " (" << v.matrix_size << "x" << v.matrix_size << "): "
       << (v.vanishes ? "= 0" : "!= 0") << " [" << to_string(v.mode);
    if (v.error_bound && v.vanishes) os << ", error <= " << *v.error_bound;
    os << "]\n";
  }
  for (const auto* rep : {&r.slp, &r.wlp}) {
    os << to_string(rep->property) << ": " << to_string(rep->verdict);
    if (rep->verdict == Verdict::Fails && rep->failing_map) {
      os << " at A_" << rep->failing_map->from << " -> A_" << rep->failing_map->to << " (rank "
         << rep->failing_map->rank << " < " << rep->failing_map->required << ")";
    }
    if (rep->witness) os << " with L = " << rep->witness->to_string(vars);
    for (const auto& c : rep->certificates) os << "\n  certificate: " << to_string(c.kind);
    for (const auto& n : rep->notes) os << "\n  note: " << n;
    os << "\n";
  }
  return os.str();
}

bool SuiteReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

std::vector<SuiteFixture> suite_fixtures(const std::string& suite) {
  if (suite != "paper") fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  std::vector<SuiteFixture> fixtures;
  fixtures.push_back({"ikeda", "hess != 0, hess^2 = 0 in four variables", [] { return gen_ikeda(); }});
  fixtures.push_back({"perazzo", "x*u^2 + y*u*v + z*v^2", [] { return gen_perazzo(2, 2, 3); }});
  fixtures.push_back({"perazzo/m2-n3-d4", "quartic in six variables", [] { return gen_perazzo(2, 3, 4); }});
  for (int d = 5; d <= 9; ++d)
    for (int k = 2; 2 * k < d; ++k) {
      fixtures.push_back({"exceptional/n3-d" + std::to_string(d) + "-k" + std::to_string(k),
                          "hess^r = 0 exactly for 2 <= r <= k", [d, k] { return gen_exceptional(3, d, k); }});
    }
  for (int k = 2; k <= 3; ++k)
    fixtures.push_back({"exceptional/n4-d8-k" + std::to_string(k), "hess^r = 0 exactly for 2 <= r <= k",
                        [k] { return gen_exceptional(4, 8, k); }});
  for (int k = 1; k <= 2; ++k)
    for (int e = 2; e <= 4; ++e) {
      if (e <= k) continue;
      fixtures.push_back({"gnp/lemma_m2-k" + std::to_string(k) + "-e" + std::to_string(e),
                          "two u-variables, three x-variables",
                          [k, e] { return gen_gnp(2, 2, k, e, "lemma_m2"); }});
    }
  for (int m = 2; m <= 3; ++m)
    for (int e = 2; e <= 3; ++e)
      fixtures.push_back({"gnp/maximal-m" + std::to_string(m) + "-e" + std::to_string(e),
                          "codimension m + C(m-1+e, e)",
                          [m, e] { return gen_gnp(m, std::nullopt, 1, e, "maximal"); }});
  fixtures.push_back({"gnp/minimal-m3-k2-e3", "x-block monomial basis", [] {
                        return gen_gnp(3, std::nullopt, 2, 3, "minimal");
                      }});
  fixtures.push_back({"permutti/m2-n2-e3-d6", "Q^2 term present", [] { return gen_permutti(2, 2, 3, 6); }});
  fixtures.push_back({"gn/m2-n3-r1-e4-d5", "two Q forms", [] { return gen_gn(2, 3, 1, 4, 5); }});
  for (auto [n, d] : {std::pair{4, 5}, std::pair{6, 5}, std::pair{5, 7}})
    fixtures.push_back({"wlpodd/N" + std::to_string(n) + "-d" + std::to_string(d),
                        "odd socle degree, unimodal, WLP fails", [n, d] { return gen_wlpodd(n, d); }});
  for (auto [n, d] : {std::pair{5, 4}, std::pair{4, 6}, std::pair{3, 8}})
    fixtures.push_back({"thmwlp/N" + std::to_string(n) + "-d" + std::to_string(d),
                        "even socle degree, unimodal, WLP fails", [n, d] { return gen_thmwlp(n, d); }});
  for (std::string c : {"i", "ii", "iii"})
    fixtures.push_back({"prop44/" + c, "codimension 5, socle degree 4, hess = 0, WLP holds",
                        [c] { return gen_prop44(c); }});
  return fixtures;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  const auto fixtures = suite_fixtures(opts.suite);
  SuiteReport rep;
  rep.suite = opts.suite;
  for (const auto& fx : fixtures) {
    SuiteEntry e;
    e.key = fx.key;
    e.description = fx.description;
    const auto t0 = Clock::now();
    try {
      const FamilyInstance inst = fx.make();
      ManifestOptions mo;
      mo.vanishing.mode = opts.mode;
      mo.seed = opts.seed;
      e.checks = verify_manifest(inst, mo);
      e.passed = true;
      for (const auto& c : e.checks) e.passed = e.passed && c.passed;
    } catch (const std::exception& ex) {
      e.error = ex.what();
      e.passed = false;
    }
    e.ms = elapsed_ms(t0);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["all_passed"] = r.all_passed();
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["key"] = e.key;
    x["description"] = e.description;
    x["passed"] = e.passed;
    Json checks = Json::array();
    for (const auto& c : e.checks) checks.push_back(to_json(c));
    x["checks"] = std::move(checks);
    if (!e.error.empty()) x["error"] = e.error;
    x["ms"] = e.ms;
    entries.push_back(std::move(x));
  }
  j["fixtures"] = std::move(entries);
  return j;
}

std::string suite_table(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& e : r.entries) width = std::max(width, e.key.size());
  for (const auto& e : r.entries) {
    os << (e.passed ? "PASS " : "FAIL ") << e.key << std::string(width + 2 - e.key.size(), ' ');
    std::size_t ok = 0;
    for (const auto& c : e.checks) ok += c.passed;
    os << ok << "/" << e.checks.size() << " checks";
    if (!e.error.empty()) os << "  error: " << e.error;
    os << "\n";
    for (const auto& c : e.checks)
      if (!c.passed) os << "     failed: " << c.name << " (" << c.detail << ")\n";
  }
  return os.str();
}

}  // namespace llab
