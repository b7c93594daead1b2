#include "families.hpp"

#include <algorithm>

#include "error.hpp"

namespace llab {
namespace {

using Overrides = std::map<std::string, std::string>;

std::vector<std::string> x_names(std::size_t count, bool letters) {
  if (letters && count == 3) return {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> u_names(std::size_t m) {
  if (m == 2) return {"u", "v"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

VarsPtr make_vars(std::vector<std::string> xs, const std::vector<std::string>& us) {
  const std::size_t split = xs.size();
  xs.insert(xs.end(), us.begin(), us.end());
  return VariableSet::make(std::move(xs), split);
}

/// Product of var^exp over the listed factors.
Poly term(const VarsPtr& vars, std::initializer_list<std::pair<std::size_t, unsigned>> factors,
          const Rational& c = 1) {
  std::vector<unsigned> e(vars->size(), 0);
  for (auto [i, p] : factors) e.at(i) += p;
  return Poly::monomial(vars, Monomial(std::move(e)), c);
}

/// Monomial of the block starting at `offset` with the given block exponents.
Poly block_monomial(const VarsPtr& vars, std::size_t offset, const Monomial& m) {
  std::vector<unsigned> e(vars->size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) e.at(offset + i) = m[i];
  return Poly::monomial(vars, Monomial(std::move(e)));
}

Poly power_sum(const VarsPtr& vars, std::size_t from, std::size_t to, unsigned d) {
  Poly p(vars);
  for (std::size_t i = from; i < to; ++i) p += term(vars, {{i, d}});
  return p;
}

std::optional<Poly> override_poly(const Overrides& ov, const std::string& name, const VarsPtr& vars) {
  auto it = ov.find(name);
  if (it == ov.end()) return std::nullopt;
  return parse_poly(it->second, vars);
}

void check_override_names(const Overrides& ov, std::initializer_list<std::string> allowed) {
  for (const auto& [name, text] : ov) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      fail(ErrorKind::InvalidArgument, "unknown override '" + name + "' for this family");
  }
}

void check_form(const Poly& p, unsigned degree, bool u_only, const std::string& what) {
  if (p.is_zero()) return;
  require(p.is_homogeneous() && p.degree() == degree,
          what + " must be homogeneous of degree " + std::to_string(degree));
  if (u_only) require(p.in_u_subring(), what + " must involve only the u-block variables");
}

void require_nondegenerate(const Poly& f, const std::string& family) {
  if (f.is_zero()) fail(ErrorKind::Degenerate, family + ": instance is the zero polynomial");
  if (is_cone(f).is_cone)
    fail(ErrorKind::Degenerate,
         family + ": instance is a cone (first partial derivatives are linearly dependent)");
}

VanishingOptions check_options() {
  VanishingOptions o;
  o.seed = 0x5eed;
  return o;
}

std::vector<HessClaim> nonvanishing_upto(unsigned top) {
  std::vector<HessClaim> out;
  for (unsigned k = 0; k <= top; ++k) out.push_back({k, false});
  return out;
}

int need(const std::optional<int>& v, const char* name) {
  if (!v) fail(ErrorKind::InvalidArgument, std::string("missing parameter --") + name);
  return *v;
}

}  // namespace

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Ikeda: return "ikeda";
    case FamilyKind::Exceptional: return "exceptional";
    case FamilyKind::Gnp: return "gnp";
    case FamilyKind::Perazzo: return "perazzo";
    case FamilyKind::Permutti: return "permutti";
    case FamilyKind::Gn: return "gn";
    case FamilyKind::WlpOdd: return "wlpodd";
    case FamilyKind::ThmWlp: return "thmwlp";
    case FamilyKind::Prop44: return "prop44";
  }
  return "";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (auto k : {FamilyKind::Ikeda, FamilyKind::Exceptional, FamilyKind::Gnp, FamilyKind::Perazzo,
                 FamilyKind::Permutti, FamilyKind::Gn, FamilyKind::WlpOdd, FamilyKind::ThmWlp,
                 FamilyKind::Prop44})
    if (name == to_string(k)) return k;
  fail(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

FamilyInstance gen_ikeda() {
  auto vars = VariableSet::make({"x0", "x1", "u1", "u2"}, 2);
  FamilyInstance inst{FamilySpec{FamilyKind::Ikeda},
                      parse_poly("x0*u1^3*u2 + x1*u1*u2^3 + x0^3*x1^2", vars), {}, {}};
  Manifest& m = inst.manifest;
  m.hess = {{0, false}, {1, false}, {2, true}};
  m.hilbert = HilbertVector{{1, 4, 10, 10, 4, 1}};
  m.codimension = 4;
  m.cone = false;
  m.slp_fails_at = 2;
  m.key_levels = {2};
  m.key_s = 4;
  return inst;
}

FamilyInstance gen_exceptional(int n, int d, int k, const Overrides& ov) {
  require(n >= 3, "exceptional: n must be at least 3");
  require(d >= 5, "exceptional: d must be at least 5");
  require(k >= 2 && 2 * k < d, "exceptional: need 2 <= k < d/2");
  check_override_names(ov, {"h", "p"});
  std::vector<std::string> xs;
  for (int i = 2; i <= n; ++i) xs.push_back("x" + std::to_string(i));
  auto vars = make_vars(xs, {"u", "v"});
  const std::size_t x2 = 0, x3 = 1, u = vars->size() - 2, v = vars->size() - 1;
  const unsigned ud = static_cast<unsigned>(d), uk = static_cast<unsigned>(k);

  const Poly g = term(vars, {{x2, 1}, {u, uk - 1}, {v, ud - uk}}) +
                 term(vars, {{x3, 1}, {u, ud - 2}, {v, 1}});
  const std::optional<Poly> h_override = override_poly(ov, "h", vars);
  const Poly p = override_poly(ov, "p", vars).value_or(power_sum(vars, 2, xs.size(), ud));
  if (h_override) check_form(*h_override, ud, false, "h");
  check_form(p, ud, false, "p");

  FamilyInstance inst;
  inst.spec = FamilySpec{FamilyKind::Exceptional, n, std::nullopt, d, k};
  inst.spec.overrides = ov;
  const int attempts = h_override ? 1 : 4;
  std::string last_reason;
  for (int a = 0; a < attempts; ++a) {
    Poly h = h_override ? *h_override
                        : term(vars, {{x2, ud}}) + term(vars, {{x3, ud}}) +
                              term(vars, {{x2, ud - 1}, {x3, 1}}, a);
    Poly f = g + h + p;
    if (is_cone(f).is_cone) {
      last_reason = "instance is a cone";
      continue;
    }
    const VanishingOptions vo = check_options();
    if (hessian_vanishes(f, 1, vo).vanishes) {
      last_reason = "hess_f vanishes";
      continue;
    }
    if (2 * (uk + 1) <= ud && hessian_vanishes(f, uk + 1, vo).vanishes) {
      last_reason = "hess^" + std::to_string(k + 1) + " vanishes";
      continue;
    }
    if (a > 0) inst.notes.push_back("h perturbed by " + std::to_string(a) + "*x2^(d-1)*x3");
    inst.f = std::move(f);
    Manifest& m = inst.manifest;
    m.hess = nonvanishing_upto(1);
    for (unsigned r = 2; r <= uk; ++r) m.hess.push_back({r, true});
    if (2 * (uk + 1) <= ud) m.hess.push_back({uk + 1, false});
    m.codimension = static_cast<std::size_t>(n + 1);
    m.cone = false;
    m.slp_fails_at = 2;
    for (unsigned r = 2; r <= uk; ++r) m.key_levels.push_back(r);
    return inst;
  }
  fail(ErrorKind::Degenerate, "exceptional: retries exhausted (" + last_reason + ")");
}

FamilyInstance gen_gnp(int m, std::optional<int> n, int k, int e, const std::string& variant,
                       const Overrides& ov) {
  require(m >= 2, "gnp: m must be at least 2");
  require(k >= 1 && e > k, "gnp: need 1 <= k < e");
  require(ov.empty(), "gnp: overrides are not supported");
  const unsigned uk = static_cast<unsigned>(k), ue = static_cast<unsigned>(e);
  FamilyInstance inst;
  inst.spec = FamilySpec{FamilyKind::Gnp, n, m, std::nullopt, k, e};
  inst.spec.variant = variant;
  Manifest& man = inst.manifest;
  man.hess = {{uk, true}};
  man.key_levels = {uk};
  man.cone = false;

  if (variant == "lemma_m2") {
    if (m != 2) fail(ErrorKind::Infeasible, "gnp lemma_m2: requires m = 2");
    if (n && *n != 2) fail(ErrorKind::Infeasible, "gnp lemma_m2: requires n = 2 (three x-variables)");
    auto vars = make_vars({"x", "y", "z"}, {"u", "v"});
    Poly f(vars);
    for (unsigned j = 0; j <= uk; ++j) f += term(vars, {{0, uk - j}, {1, j}, {3, ue - j}, {4, j}});
    f += term(vars, {{2, uk}, {3, ue - uk - 1}, {4, uk + 1}});
    inst.f = std::move(f);
    inst.spec.n = 2;
    man.codimension = 5;
    man.key_s = uk + 2;
  } else if (variant == "maximal") {
    const auto gs = mono_basis(static_cast<std::size_t>(m), ue);
    const std::size_t s = gs.size();
    if (n && static_cast<std::size_t>(*n) + 1 != s)
      fail(ErrorKind::Infeasible, "gnp maximal: n + 1 must equal C(m-1+e, e) = " + std::to_string(s));
    auto vars = make_vars(x_names(s, true), u_names(static_cast<std::size_t>(m)));
    Poly f(vars);
    for (std::size_t j = 0; j < s; ++j) f += term(vars, {{j, uk}}) * block_monomial(vars, s, gs[j]);
    inst.f = std::move(f);
    inst.spec.n = static_cast<int>(s) - 1;
    man.codimension = static_cast<std::size_t>(m) + s;
    man.key_s = s;
  } else if (variant == "minimal") {
    const int nn = n.value_or(m);
    require(nn >= 1, "gnp minimal: n must be positive");
    if (nn + 1 < m) fail(ErrorKind::Infeasible, "gnp minimal: need n + 1 >= m");
    const auto fs = mono_basis(static_cast<std::size_t>(nn + 1), uk);
    const std::size_t s = fs.size();
    const Integer bound = binomial(static_cast<unsigned>(m - 1 + k), uk);
    if (Integer(static_cast<unsigned long>(s)) <= bound)
      fail(ErrorKind::Infeasible, "gnp minimal: s = " + std::to_string(s) +
                                      " does not exceed C(m-1+k, k) = " + to_string(bound));
    // g's: pure powers first so every u-variable occurs, then the rest in lex order.
    std::vector<Monomial> gs;
    for (int i = 0; i < m; ++i) {
      std::vector<unsigned> ex(static_cast<std::size_t>(m), 0);
      ex[static_cast<std::size_t>(i)] = ue;
      gs.emplace_back(std::move(ex));
    }
    for (auto& g : mono_basis(static_cast<std::size_t>(m), ue))
      if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(std::move(g));
    if (gs.size() < s)
      fail(ErrorKind::Infeasible, "gnp minimal: C(n+k, k) = " + std::to_string(s) +
                                      " exceeds dim K[u]_e = " + std::to_string(gs.size()));
    auto vars = make_vars(x_names(s == 0 ? 0 : static_cast<std::size_t>(nn + 1), true),
                          u_names(static_cast<std::size_t>(m)));
    Poly f(vars);
    for (std::size_t j = 0; j < s; ++j)
      f += block_monomial(vars, 0, fs[j]) *
           block_monomial(vars, static_cast<std::size_t>(nn + 1), gs[j]);
    inst.f = std::move(f);
    inst.spec.n = nn;
    man.codimension = static_cast<std::size_t>(m + nn + 1);
    man.key_s = s;
  } else {
    fail(ErrorKind::InvalidArgument, "gnp: variant must be lemma_m2, maximal or minimal");
  }
  if (!depends_on_all_vars(inst.f))
    fail(ErrorKind::Degenerate, "gnp: (Ann f)_1 is nonzero for this instance");
  return inst;
}

FamilyInstance gen_perazzo(int m, int n, int d, const Overrides& ov) {
  require(m >= 2 && n >= 2, "perazzo: need m >= 2 and n >= 2");
  require(d >= 3, "perazzo: d must be at least 3");
  if (n + 1 <= m)
    fail(ErrorKind::Infeasible, "perazzo: need n + 1 > m so that the g_i are algebraically dependent");
  const auto mons = mono_basis(static_cast<std::size_t>(m), static_cast<unsigned>(d - 1));
  if (mons.size() < static_cast<std::size_t>(n + 1))
    fail(ErrorKind::Infeasible, "perazzo: only " + std::to_string(mons.size()) +
                                    " monomials of degree d-1 in the u-block, need n + 1");
  const std::size_t nx = static_cast<std::size_t>(n + 1);
  auto vars = make_vars(x_names(nx, true), u_names(static_cast<std::size_t>(m)));
  Poly f(vars);
  for (std::size_t i = 0; i < nx; ++i) {
    const std::string name = "g" + std::to_string(i);
    Poly g = override_poly(ov, name, vars).value_or(block_monomial(vars, nx, mons[i]));
    check_form(g, static_cast<unsigned>(d - 1), true, name);
    f += Poly::variable(vars, i) * g;
  }
  Poly h = override_poly(ov, "h", vars).value_or(Poly(vars));
  check_form(h, static_cast<unsigned>(d), true, "h");
  for (const auto& [name, text] : ov)
    if (name != "h" && !(name.size() > 1 && name[0] == 'g'))
      fail(ErrorKind::InvalidArgument, "unknown override '" + name + "' for this family");
  f += h;
  require_nondegenerate(f, "perazzo");
  FamilyInstance inst{FamilySpec{FamilyKind::Perazzo, n, m, d}, std::move(f), {}, {}};
  inst.spec.overrides = ov;
  Manifest& man = inst.manifest;
  man.hess = {{0, false}, {1, true}};
  man.cone = false;
  man.codimension = static_cast<std::size_t>(m + n + 1);
  man.slp_fails_at = 1;
  return inst;
}

FamilyInstance gen_permutti(int m, int n, int e, int d, const Overrides& ov) {
  require(m >= 2 && n >= 1, "permutti: need m >= 2 and n >= 1");
  require(e >= 2, "permutti: e must be at least 2");
  const int mu = d / e;
  if (mu < 1) fail(ErrorKind::Infeasible, "permutti: floor(d/e) must be at least 1");
  if (n + 1 <= m)
    fail(ErrorKind::Infeasible, "permutti: need n + 1 > m so that the g_i are algebraically dependent");
  const auto mons = mono_basis(static_cast<std::size_t>(m), static_cast<unsigned>(e - 1));
  if (mons.size() < static_cast<std::size_t>(n + 1))
    fail(ErrorKind::Infeasible,
         "permutti: only " + std::to_string(mons.size()) + " monomials of degree e-1 = " +
             std::to_string(e - 1) + " in the u-block, need n + 1 = " + std::to_string(n + 1) +
             " linearly independent g_i");
  const std::size_t nx = static_cast<std::size_t>(n + 1);
  auto vars = make_vars(x_names(nx, true), u_names(static_cast<std::size_t>(m)));
  for (const auto& [name, text] : ov) {
    bool ok = name.size() > 1 && name[0] == 'P';
    if (ok) {
      const int j = std::stoi(name.substr(1));
      ok = j >= 0 && j <= mu;
    }
    if (!ok) fail(ErrorKind::InvalidArgument, "unknown override '" + name + "' for this family");
  }
  Poly q(vars);
  for (std::size_t i = 0; i < nx; ++i) q += Poly::variable(vars, i) * block_monomial(vars, nx, mons[i]);
  const std::size_t u1 = nx, um = vars->size() - 1;
  Poly f(vars);
  Poly qj = Poly::constant(vars, 1);
  for (int j = 0; j <= mu; ++j) {
    const unsigned deg = static_cast<unsigned>(d - j * e);
    Poly pj = j == 0 ? term(vars, {{u1, deg}}) : term(vars, {{um, deg}});
    if (auto o = override_poly(ov, "P" + std::to_string(j), vars)) pj = *o;
    check_form(pj, deg, true, "P" + std::to_string(j));
    f += qj * pj;
    qj = qj * q;
  }
  require_nondegenerate(f, "permutti");
  FamilyInstance inst{FamilySpec{FamilyKind::Permutti, n, m, d, std::nullopt, e}, std::move(f), {}, {}};
  inst.spec.overrides = ov;
  Manifest& man = inst.manifest;
  man.hess = {{0, false}, {1, true}};
  man.cone = false;
  man.codimension = static_cast<std::size_t>(m + n + 1);
  man.slp_fails_at = 1;
  return inst;
}

FamilyInstance gen_gn(int m, int n, int r, int e, int d, const Overrides& ov) {
  require(m >= 2 && n >= 1 && r >= 0, "gn: need m >= 2, n >= 1, r >= 0");
  const int s = n - r;
  require(s >= 1, "gn: need s = n - r >= 1");
  require(e >= 2 && d > e, "gn: need e >= 2 and d > e");
  check_override_names(ov, {"P0"});
  const int mu = d / e;
  const std::size_t nx = static_cast<std::size_t>(n + 1);
  const std::size_t nphi_vars = static_cast<std::size_t>(r + 1);

  // Phi: monomials of degree t in y_0..y_r; Psi: r+1 monomials of degree
  // delta in u with delta * t = e - 1. The smallest t giving at least n + 1
  // distinct Phi is used.
  std::optional<unsigned> t_pick;
  for (unsigned t = 1; t <= static_cast<unsigned>(e - 1); ++t) {
    if ((e - 1) % t) continue;
    const unsigned delta = (e - 1) / t;
    if (mono_basis(nphi_vars, t).size() < nx) continue;
    if (mono_basis(static_cast<std::size_t>(m), delta).size() < nphi_vars) continue;
    t_pick = t;
    break;
  }
  if (!t_pick)
    fail(ErrorKind::Degenerate,
         "gn: canonical instantiation has linearly dependent g_{i,l} (too few monomials "
         "Phi(Psi) of degree e-1)");
  const unsigned t = *t_pick, delta = (e - 1) / t;
  const auto phi = mono_basis(nphi_vars, t);
  const auto psi = mono_basis(static_cast<std::size_t>(m), delta);

  auto vars = make_vars(x_names(nx, true), u_names(static_cast<std::size_t>(m)));
  auto g_of = [&](std::size_t i, std::size_t offset) {
    const Monomial& ph = phi[(i + offset) % phi.size()];
    std::vector<unsigned> ex(static_cast<std::size_t>(m), 0);
    for (std::size_t k = 0; k < nphi_vars; ++k)
      for (std::size_t c = 0; c < ex.size(); ++c) ex[c] += ph[k] * psi[k][c];
    return block_monomial(vars, nx, Monomial(std::move(ex)));
  };
  std::optional<Poly> p0 = override_poly(ov, "P0", vars);
  if (p0) check_form(*p0, static_cast<unsigned>(d), true, "P0");

  std::string last_reason = "no candidate";
  for (std::size_t step = 1; step <= std::max<std::size_t>(1, phi.size() - 1); ++step) {
    std::vector<Poly> qs;
    for (int l = 0; l < s; ++l) {
      Poly ql(vars);
      for (std::size_t i = 0; i < nx; ++i)
        ql += Poly::variable(vars, i) * g_of(i, static_cast<std::size_t>(l) * step);
      qs.push_back(std::move(ql));
    }
    for (std::size_t shift = 0; shift < 4; ++shift) {
      Poly f = p0.value_or(term(vars, {{nx, static_cast<unsigned>(d)}}));
      for (int j = 1; j <= mu; ++j) {
        const auto zs = mono_basis(static_cast<std::size_t>(s), static_cast<unsigned>(j));
        const auto ws = mono_basis(static_cast<std::size_t>(m), static_cast<unsigned>(d - j * e));
        for (std::size_t a = 0; a < zs.size(); ++a) {
          Poly zq = Poly::constant(vars, 1);
          for (std::size_t l = 0; l < zs[a].size(); ++l) zq = zq * qs[l].pow(zs[a][l]);
          f += zq * block_monomial(vars, nx, ws[(a + shift) % ws.size()]);
        }
      }
      if (is_cone(f).is_cone) {
        last_reason = "instance is a cone";
        continue;
      }
      if (!hessian_vanishes(f, 1, check_options()).vanishes) {
        last_reason = "hess_f does not vanish";
        continue;
      }
      FamilyInstance inst{FamilySpec{FamilyKind::Gn, n, m, d, std::nullopt, e, r}, std::move(f), {}, {}};
      inst.spec.overrides = ov;
      inst.notes.push_back("Phi degree t = " + std::to_string(t) + ", Psi degree = " +
                           std::to_string(delta) + ", offset step " + std::to_string(step) +
                           ", shift " + std::to_string(shift));
      Manifest& man = inst.manifest;
      man.hess = {{0, false}, {1, true}};
      man.cone = false;
      man.codimension = static_cast<std::size_t>(m + n + 1);
      man.slp_fails_at = 1;
      return inst;
    }
  }
  fail(ErrorKind::Degenerate, "gn: canonical instantiations exhausted (" + last_reason + ")");
}

FamilyInstance gen_wlpodd(int big_n, int d) {
  require(d >= 3 && d % 2 == 1, "wlpodd: d must be odd and at least 3");
  if (big_n == 3 && d == 3)
    fail(ErrorKind::Excluded,
         "wlpodd: (N,d) = (3,3) is excluded: in four variables a form with nonzero Hessian "
         "and socle degree at most 4 gives the strong Lefschetz property, and Gordan-Noether "
         "rules out vanishing Hessians there");
  if (big_n < 4)
    fail(ErrorKind::Infeasible, "wlpodd: the construction needs N = 2m or 2m+1 with m >= 2, so N >= 4");
  const unsigned q = static_cast<unsigned>(d - 1) / 2;
  const bool odd = big_n % 2 == 1;
  const std::size_t m = static_cast<std::size_t>(odd ? (big_n - 1) / 2 : big_n / 2);
  const std::size_t nx = odd ? m + 2 : m + 1;
  std::vector<std::string> xs = x_names(nx, false), us;
  for (std::size_t i = 1; i <= m; ++i) us.push_back("u" + std::to_string(i));
  auto vars = make_vars(xs, us);
  const std::size_t u1 = nx, um = nx + m - 1;

  const auto ms = mono_basis(m, q);  // M_1 = u_1^q, ..., M_nu = u_m^q
  const std::size_t count = odd ? ms.size() - 1 : ms.size();
  Poly f = term(vars, {{0, q}, {u1, q + 1}});
  if (odd) f += term(vars, {{m + 1, q}, {um, q + 1}});
  for (std::size_t i = 0; i < count; ++i)
    f += block_monomial(vars, 1, ms[i]) * block_monomial(vars, nx, ms[i]) * Poly::variable(vars, um);

  FamilyInstance inst{FamilySpec{FamilyKind::WlpOdd, big_n, std::nullopt, d}, std::move(f), {}, {}};
  Manifest& man = inst.manifest;
  for (unsigned k = 1; k <= q; ++k) {
    const Integer c = binomial(static_cast<unsigned>(big_n - 1) + k, static_cast<unsigned>(big_n - 1));
    man.hilbert_entries[k] = (odd ? 2 * k : k) + c.get_ui();
  }
  man.codimension = static_cast<std::size_t>(big_n + 1);
  man.unimodal = true;
  man.hess = {{q, true}};
  man.wlp_fails_at = q;
  return inst;
}

FamilyInstance gen_thmwlp(int big_n, int d, const Overrides& ov) {
  require(d >= 4 && d % 2 == 0, "thmwlp: d must be even and at least 4 (odd degrees: use wlpodd)");
  require(big_n >= 3, "thmwlp: N must be at least 3");
  if (big_n == 3 && d == 4)
    fail(ErrorKind::Excluded,
         "thmwlp: (N,d) = (3,4) is excluded: in four variables every form with (Ann f)_1 = 0 has "
         "nonzero Hessian, and for socle degree at most 4 that gives the strong Lefschetz property");
  if (big_n == 4 && d == 4)
    fail(ErrorKind::Excluded,
         "thmwlp: (N,d) = (4,4) is excluded: every Gorenstein algebra of codimension 5 and socle "
         "degree 4 has the weak Lefschetz property");
  if (big_n == 3 && d == 6)
    fail(ErrorKind::Excluded,
         "thmwlp: (N,d) = (3,6) is excluded: Gorenstein algebras of codimension 4 and socle "
         "degree 6 are known to have the weak Lefschetz property");
  if (d == 4 && big_n < 5) fail(ErrorKind::Infeasible, "thmwlp: d = 4 needs N >= 5");
  if (d == 6 && big_n < 4) fail(ErrorKind::Infeasible, "thmwlp: d = 6 needs N >= 4");
  check_override_names(ov, {"g", "h"});

  std::vector<std::string> xs;
  for (int i = 2; i <= big_n; ++i) xs.push_back("x" + std::to_string(i));
  auto vars = make_vars(xs, {"u", "v"});
  const std::size_t u = vars->size() - 2, v = vars->size() - 1;
  const unsigned ud = static_cast<unsigned>(d), q = ud / 2;

  Poly lead(vars);
  std::size_t first_spare = 0;
  FamilyInstance inst;
  Manifest& man = inst.manifest;
  if (d == 4) {
    lead = term(vars, {{0, 1}, {u, 3}}) + term(vars, {{1, 1}, {u, 2}, {v, 1}}) +
           term(vars, {{2, 1}, {u, 1}, {v, 2}}) + term(vars, {{3, 1}, {v, 3}});
    first_spare = 4;
    man.obstruction_level = 1;
    man.obstruction_s = 4;
    const std::size_t t = static_cast<std::size_t>(big_n - 5);
    man.hilbert = HilbertVector{{1, 6 + t, 6 + t, 6 + t, 1}};
  } else if (d == 6) {
    lead = term(vars, {{0, 1}, {u, 2}, {v, 3}}) + term(vars, {{1, 1}, {u, 4}, {v, 1}}) +
           term(vars, {{2, 1}, {u, 1}, {v, 4}});
    first_spare = 3;
    man.obstruction_level = 2;
    man.obstruction_s = 5;
    const std::size_t t = static_cast<std::size_t>(big_n - 4);
    man.hilbert = HilbertVector{{1, 5 + t, 8 + t, 8 + t, 8 + t, 5 + t, 1}};
  } else {
    lead = term(vars, {{0, 1}, {u, q - 2}, {v, q + 1}}) + term(vars, {{1, 1}, {u, 2 * q - 3}, {v, 2}});
    first_spare = 2;
    man.obstruction_level = q - 1;
    man.obstruction_s = q + 2;
  }
  Poly g = override_poly(ov, "g", vars).value_or(term(vars, {{u, ud}}) + term(vars, {{v, ud}}));
  check_form(g, ud, true, "g");
  Poly h = override_poly(ov, "h", vars).value_or(power_sum(vars, first_spare, xs.size(), ud));
  check_form(h, ud, false, "h");
  inst.f = lead + g + h;
  inst.spec = FamilySpec{FamilyKind::ThmWlp, big_n, std::nullopt, d};
  inst.spec.overrides = ov;
  if (!depends_on_all_vars(inst.f))
    fail(ErrorKind::Degenerate, "thmwlp: (Ann f)_1 is nonzero for this instance");
  man.unimodal = true;
  man.codimension = static_cast<std::size_t>(big_n + 1);
  man.wlp_fails_at = *man.obstruction_level;
  return inst;
}

FamilyInstance gen_prop44(const std::string& case_id, const Overrides& ov) {
  check_override_names(ov, {"h"});
  auto vars = VariableSet::make({"x0", "x1", "x2", "u", "v"}, 3);
  Poly h = override_poly(ov, "h", vars).value_or(parse_poly("u^4 + v^4", vars));
  if (!h.is_zero() && !(h.is_homogeneous() && h.degree() == 4 && h.in_u_subring()))
    fail(ErrorKind::InvalidArgument, "prop44: invalid h, must be a quartic form in u, v");
  std::string body, witness;
  if (case_id == "i") {
    body = "x0*u^3 + x1*u*v^2 + x2*u^2*v";
    witness = "U + V";
  } else if (case_id == "ii") {
    body = "x0*u^2*v + x1*u^3 + x2*v^3";
    witness = "U + V";
  } else if (case_id == "iii") {
    body = "x0*u^2*v - x0*v^3 + x1*u^3 - x1*u*v^2 + x2*v^3";
    witness = "V";
  } else {
    fail(ErrorKind::InvalidArgument, "prop44: case must be i, ii or iii");
  }
  FamilyInstance inst;
  inst.spec.kind = FamilyKind::Prop44;
  inst.spec.case_id = case_id;
  inst.spec.overrides = ov;
  inst.f = parse_poly(body, vars) + h;
  require_nondegenerate(inst.f, "prop44");
  Manifest& man = inst.manifest;
  man.hess = {{0, false}, {1, true}};
  man.codimension = 5;
  man.cone = false;
  man.slp_fails_at = 1;
  man.wlp_witness = parse_linear_form(witness, vars);
  return inst;
}

FamilyInstance generate(const FamilySpec& spec) {
  FamilyInstance inst = [&] {
    switch (spec.kind) {
      case FamilyKind::Ikeda: return gen_ikeda();
      case FamilyKind::Exceptional:
        return gen_exceptional(need(spec.n, "n"), need(spec.d, "d"), need(spec.k, "k"), spec.overrides);
      case FamilyKind::Gnp:
        return gen_gnp(need(spec.m, "m"), spec.n, need(spec.k, "k"), need(spec.e, "e"),
                       spec.variant.empty() ? "lemma_m2" : spec.variant, spec.overrides);
      case FamilyKind::Perazzo:
        return gen_perazzo(need(spec.m, "m"), need(spec.n, "n"), need(spec.d, "d"), spec.overrides);
      case FamilyKind::Permutti:
        return gen_permutti(need(spec.m, "m"), need(spec.n, "n"), need(spec.e, "e"), need(spec.d, "d"),
                            spec.overrides);
      case FamilyKind::Gn:
        return gen_gn(need(spec.m, "m"), need(spec.n, "n"), need(spec.r, "r"), need(spec.e, "e"),
                      need(spec.d, "d"), spec.overrides);
      case FamilyKind::WlpOdd: return gen_wlpodd(need(spec.n, "n"), need(spec.d, "d"));
      case FamilyKind::ThmWlp: return gen_thmwlp(need(spec.n, "n"), need(spec.d, "d"), spec.overrides);
      case FamilyKind::Prop44:
        return gen_prop44(spec.case_id.empty() ? "i" : spec.case_id, spec.overrides);
    }
    fail(ErrorKind::InvalidArgument, "unknown family");
  }();
  inst.spec.seed = spec.seed;
  return inst;
}

std::vector<ManifestCheck> verify_manifest(const FamilyInstance& inst, const ManifestOptions& opts) {
  const Poly& f = inst.f;
  const Manifest& man = inst.manifest;
  const GorensteinAlgebra a(f);
  const HilbertVector hv = a.hilbert();
  std::vector<ManifestCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  for (const auto& c : man.hess) {
    VanishingOptions v = opts.vanishing;
    v.seed = derive_seed(opts.seed, 0x4d, c.k);
    const VanishingVerdict verdict = hessian_vanishes(f, c.k, v);
    add("hess^" + std::to_string(c.k) + (c.vanishes ? " = 0" : " != 0"),
        verdict.vanishes == c.vanishes,
        std::string(verdict.vanishes ? "vanishes" : "nonzero") + " (" + to_string(verdict.mode) + ")");
  }
  if (man.hilbert) add("hilbert " + man.hilbert->to_string(), hv == *man.hilbert, "computed " + hv.to_string());
  for (const auto& [k, h] : man.hilbert_entries) {
    const std::size_t got = k < hv.dims.size() ? hv.dims[k] : 0;
    add("h_" + std::to_string(k) + " = " + std::to_string(h), got == h, "computed " + std::to_string(got));
  }
  if (man.codimension) {
    const std::size_t got = hv.dims.size() > 1 ? hv.dims[1] : 0;
    add("dim A_1 = " + std::to_string(*man.codimension), got == *man.codimension,
        "computed " + std::to_string(got));
  }
  if (man.unimodal) {
    const bool got = is_unimodal(hv);
    add(std::string(*man.unimodal ? "unimodal" : "not unimodal"), got == *man.unimodal, hv.to_string());
  }
  if (man.cone) {
    const bool got = is_cone(f).is_cone;
    add(std::string(*man.cone ? "cone" : "not a cone"), got == *man.cone, got ? "cone" : "not a cone");
  }
  if (man.slp_fails_at) {
    VanishingOptions v = opts.vanishing;
    v.seed = derive_seed(opts.seed, 0x4e, 0);
    const auto profile = hess_profile(f, v, *man.slp_fails_at);
    std::optional<unsigned> first;
    for (const auto& p : profile)
      if (p.vanishes) {
        first = p.k;
        break;
      }
    add("SLP fails at k = " + std::to_string(*man.slp_fails_at), first == man.slp_fails_at,
        first ? "first vanishing k = " + std::to_string(*first) : "no vanishing Hessian");
  }
  for (unsigned k : man.key_levels) {
    const auto cert = key_criterion(f, k);
    const bool ok = cert && verify_key_certificate(f, *cert) &&
                    (!man.key_s || cert->s >= *man.key_s);
    add("key certificate at k = " + std::to_string(k), ok,
        cert ? "s = " + std::to_string(cert->s) + " > " + to_string(cert->bound) : "none");
  }
  if (man.obstruction_level) {
    const auto cert = wlp_obstruction(f, *man.obstruction_level);
    const bool ok = cert && verify_obstruction_certificate(f, *cert) &&
                    (!man.obstruction_s || cert->s >= *man.obstruction_s);
    add("WLP obstruction at k = " + std::to_string(*man.obstruction_level), ok,
        cert ? "s = " + std::to_string(cert->s) + " > " + to_string(cert->bound) : "none");
  }
  if (man.wlp_fails_at) {
    const unsigned i = *man.wlp_fails_at;
    const std::uint64_t bound = linear_form_bound(a.socle_degree());
    unsigned failing = 0;
    for (unsigned t = 0; t < opts.random_forms; ++t) {
      const LinearForm l = random_linear_form(f.vars().size(), bound, derive_seed(opts.seed, 0x4f, t));
      if (a.mult_rank(l, i, 1) < std::min(a.dim(i), a.dim(i + 1))) ++failing;
    }
    add("L: A_" + std::to_string(i) + " -> A_" + std::to_string(i + 1) + " not of maximal rank for " +
            std::to_string(opts.random_forms) + " random L",
        failing == opts.random_forms, std::to_string(failing) + " failing");
    GenericOptions g;
    g.vanishing = opts.vanishing;
    g.seed = opts.seed;
    const LefschetzReport rep = wlp_generic(a, g);
    add("WLP verdict fails", rep.verdict == Verdict::Fails, to_string(rep.verdict));
  }
  if (man.wlp_witness) {
    const ElementCheck c = wlp_check_element(a, *man.wlp_witness);
    add("WLP holds for L = " + man.wlp_witness->to_string(f.vars()), c.holds,
        c.holds ? "all maps of maximal rank" : "some map not of maximal rank");
  }
  return out;
}

}  // namespace llab
