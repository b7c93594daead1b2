#include "lefschetz_lab/lefschetz_lab.h"

#include <cctype>
#include <cstdlib>
#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "report.hpp"

struct llab_poly {
  llab::Poly f;
};

namespace {

thread_local std::string g_last_error;

llab_status status_of(llab::ErrorKind k) {
  switch (k) {
    case llab::ErrorKind::Parse: return LLAB_PARSE;
    case llab::ErrorKind::InvalidArgument: return LLAB_INVALID_ARGUMENT;
    case llab::ErrorKind::Infeasible: return LLAB_INFEASIBLE;
    case llab::ErrorKind::Excluded: return LLAB_EXCLUDED;
    case llab::ErrorKind::Degenerate: return LLAB_DEGENERATE;
    case llab::ErrorKind::Internal: return LLAB_INTERNAL;
  }
  return LLAB_INTERNAL;
}

// Every entry point funnels through here so no exception crosses the boundary.
template <typename F>
llab_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return LLAB_OK;
  } catch (const llab::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("invalid JSON: ") + e.what();
    return LLAB_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LLAB_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LLAB_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    llab::require(a != std::string::npos, "empty variable name in list");
    names.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return names;
}

std::vector<std::string> identifiers_in(const std::string& text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string id = text.substr(i, j - i);
      if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
      i = j;
    } else {
      ++i;
    }
  }
  return names;
}

llab::Json parse_json_or_empty(const char* text) {
  if (!text || !*text) return llab::Json::object();
  return llab::Json::parse(text);
}

void require_out(const void* p, const char* what) {
  llab::require(p != nullptr, std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* llab_version(void) { return LEFSCHETZ_LAB_VERSION; }

const char* llab_last_error(void) { return g_last_error.c_str(); }

const char* llab_status_name(llab_status s) {
  switch (s) {
    case LLAB_OK: return "ok";
    case LLAB_PARSE: return "parse";
    case LLAB_INVALID_ARGUMENT: return "invalid_argument";
    case LLAB_INFEASIBLE: return "infeasible";
    case LLAB_EXCLUDED: return "excluded";
    case LLAB_DEGENERATE: return "degenerate";
    case LLAB_INTERNAL: return "internal";
  }
  return "unknown";
}

void llab_string_free(char* s) { std::free(s); }

llab_status llab_poly_parse(const char* text, const char* vars_csv, int split, llab_poly** out) {
  return guarded([&] {
    require_out(text, "text");
    require_out(out, "out");
    std::vector<std::string> names = vars_csv ? split_csv(vars_csv) : identifiers_in(text);
    llab::require(!names.empty(), "no variables");
    std::optional<std::size_t> x_block;
    if (split >= 0) {
      llab::require(static_cast<std::size_t>(split) <= names.size(), "split exceeds variable count");
      x_block = static_cast<std::size_t>(split);
    }
    auto vars = llab::VariableSet::make(std::move(names), x_block);
    llab::Poly f = llab::parse_poly(text, vars);
    *out = new llab_poly{std::move(f)};
  });
}

void llab_poly_free(llab_poly* p) { delete p; }

llab_status llab_poly_to_string(const llab_poly* p, char** out) {
  return guarded([&] {
    require_out(p, "poly");
    require_out(out, "out");
    *out = dup(p->f.to_string());
  });
}

llab_status llab_poly_degree(const llab_poly* p, unsigned* out) {
  return guarded([&] {
    require_out(p, "poly");
    require_out(out, "out");
    llab::require(!p->f.is_zero(), "the zero polynomial has no degree");
    *out = p->f.degree();
  });
}

llab_status llab_hilbert(const llab_poly* p, uint64_t* out, unsigned capacity, unsigned* len) {
  return guarded([&] {
    require_out(p, "poly");
    require_out(len, "len");
    const llab::HilbertVector hv = llab::hilbert_vector(p->f);
    llab::require(hv.dims.size() <= capacity || !out, "output buffer too small");
    *len = static_cast<unsigned>(hv.dims.size());
    if (out)
      for (std::size_t i = 0; i < hv.dims.size(); ++i) out[i] = hv.dims[i];
  });
}

llab_status llab_hessian_vanishes(const llab_poly* p, unsigned k, llab_mode mode, uint64_t seed,
                                  int* vanishes) {
  return guarded([&] {
    require_out(p, "poly");
    require_out(vanishes, "vanishes");
    llab::VanishingOptions o;
    o.mode = mode == LLAB_MODE_EXACT ? llab::VanishingMode::Exact : llab::VanishingMode::Probabilistic;
    o.seed = seed;
    *vanishes = llab::hessian_vanishes(p->f, k, o).vanishes ? 1 : 0;
  });
}

llab_status llab_analyze(const llab_poly* p, const char* options_json, char** report_json,
                         char** summary) {
  return guarded([&] {
    require_out(p, "poly");
    const auto opts = llab::analysis_options_from_json(parse_json_or_empty(options_json));
    const llab::AnalysisReport rep = llab::analyze(p->f, opts);
    std::string js = llab::to_json(rep).dump(2);
    std::string text = llab::summary(rep);
    if (report_json) *report_json = dup(js);
    if (summary) *summary = dup(text);
  });
}

llab_status llab_generate(const char* spec_json, char** instance_json) {
  return guarded([&] {
    require_out(spec_json, "spec_json");
    require_out(instance_json, "instance_json");
    const auto spec = llab::family_spec_from_json(llab::Json::parse(spec_json));
    *instance_json = dup(llab::to_json(llab::generate(spec)).dump(2));
  });
}

llab_status llab_generate_poly(const char* spec_json, llab_poly** out) {
  return guarded([&] {
    require_out(spec_json, "spec_json");
    require_out(out, "out");
    const auto spec = llab::family_spec_from_json(llab::Json::parse(spec_json));
    *out = new llab_poly{llab::generate(spec).f};
  });
}

llab_status llab_reproduce(const char* options_json, char** report_json, char** table,
                           int* all_passed) {
  return guarded([&] {
    const llab::Json j = parse_json_or_empty(options_json);
    llab::SuiteOptions o;
    if (j.contains("suite")) o.suite = j["suite"].get<std::string>();
    if (j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("mode")) o.mode = llab::analysis_options_from_json(llab::Json{{"mode", j["mode"]}}).mode;
    const llab::SuiteReport rep = llab::run_suite(o);
    std::string js = llab::to_json(rep).dump(2);
    std::string tab = llab::suite_table(rep);
    if (all_passed) *all_passed = rep.all_passed() ? 1 : 0;
    if (report_json) *report_json = dup(js);
    if (table) *table = dup(tab);
  });
}

}  // extern "C"
