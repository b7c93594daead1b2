#include "lefschetz.hpp"

#include <algorithm>
#include <random>

#include "error.hpp"

namespace llab {
namespace {

bool all_partials_in_u(const Poly& p) {
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    if (!partial(p, i).in_u_subring()) return false;
  return true;
}

Poly x_part(const Poly& p) {
  std::vector<Poly::Term> kept;
  for (const auto& t : p.terms()) {
    bool has_x = false;
    for (std::size_t i = 0; i < p.vars().x_count(); ++i) has_x = has_x || t.first[i] > 0;
    if (has_x) kept.push_back(t);
  }
  return Poly::from_terms(p.vars_ptr(), std::move(kept));
}

void check_split(const Poly& f) {
  require(!f.is_zero() && f.is_homogeneous(), "f must be a nonzero form");
  require(f.vars().has_split(), "a variable split (x-block | u-block) is required");
}

LevelCheck sample_level(const GorensteinAlgebra& a, const LinearForm& l, unsigned from,
                        unsigned k) {
  LevelCheck c;
  c.from = from;
  c.to = from + k;
  c.rank = a.mult_rank(l, from, k);
  c.required = std::min(a.dim(from), a.dim(from + k));
  return c;
}

}  // namespace

DiffOp LinearForm::op(const VarsPtr& vars) const {
  require(coeffs.size() == vars->size(), "linear form length does not match the variable count");
  require(!is_zero(), "linear form must be nonzero");
  Poly p(vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p += Poly::variable(vars, i) * coeffs[i];
  return DiffOp(std::move(p));
}

std::string LinearForm::to_string(const VariableSet& vars) const {
  if (is_zero()) return "0";
  return op(std::make_shared<const VariableSet>(vars)).to_string();
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

LinearForm random_linear_form(std::size_t nvars, std::uint64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto b = static_cast<long long>(bound);
  std::uniform_int_distribution<long long> dist(-b, b);
  LinearForm l;
  l.coeffs.resize(nvars);
  do {
    for (auto& c : l.coeffs) c = Rational(static_cast<long>(dist(rng)));
  } while (l.is_zero());
  return l;
}

LinearForm parse_linear_form(std::string_view text, const VarsPtr& vars) {
  const DiffOp op = parse_diffop(text, vars);
  require(!op.is_zero() && op.degree() == 1, "linear form must be a nonzero degree-1 operator");
  LinearForm l;
  l.coeffs.resize(vars->size());
  for (const auto& [m, c] : op.poly().terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1) l.coeffs[i] = c;
  return l;
}

std::uint64_t linear_form_bound(unsigned d) { return 64ull * (d + 1); }

unsigned middle_level(unsigned d) {
  require(d >= 1, "socle degree must be positive");
  return d % 2 == 1 ? (d - 1) / 2 : d / 2 - 1;
}

GorensteinAlgebra::GorensteinAlgebra(Poly f) : f_(std::move(f)) {
  require(!f_.is_zero(), "f must be nonzero");
  require(f_.is_homogeneous(), "f must be homogeneous");
  d_ = f_.degree();
  for (unsigned i = 0; i <= d_; ++i) {
    bases_.push_back(ak_basis(f_, i));
    coords_.emplace_back(bases_.back().derived);
  }
  for (unsigned k = 0; 2 * k <= d_; ++k) {
    HessianMatrix h;
    h.k = k;
    h.basis = bases_[k];
    const std::size_t n = h.basis.size();
    h.entries.assign(n * n, Poly(f_.vars_ptr()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Poly e = diff_apply(h.basis.ops[i], h.basis.derived[j]);
        h.entries[j * n + i] = e;
        h.entries[i * n + j] = std::move(e);
      }
    hessians_.push_back(std::move(h));
  }
}

HilbertVector GorensteinAlgebra::hilbert() const {
  HilbertVector hv;
  for (const auto& b : bases_) hv.dims.push_back(b.size());
  return hv;
}

RationalMatrix GorensteinAlgebra::mult_map(const LinearForm& l, unsigned i, unsigned k) const {
  require(i + k <= d_, "level out of range: i + k must be at most deg(f)");
  const DiffOp lk(l.op(f_.vars_ptr()).poly().pow(k));
  const AkBasis& src = bases_[i];
  RationalMatrix m(dim(i + k), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto col = coords_[i + k].coordinates(diff_apply(lk, src.derived[j]));
    for (std::size_t r = 0; r < col.size(); ++r) m(r, j) = col[r];
  }
  return m;
}

std::size_t GorensteinAlgebra::mult_rank(const LinearForm& l, unsigned i, unsigned k) const {
  require(i + k <= d_, "level out of range: i + k must be at most deg(f)");
  const DiffOp lk(l.op(f_.vars_ptr()).poly().pow(k));
  std::vector<Poly> images;
  for (const auto& p : bases_[i].derived) images.push_back(diff_apply(lk, p));
  return poly_rank(images);
}

std::size_t GorensteinAlgebra::hessian_rank_at(const LinearForm& l, unsigned k) const {
  require(2 * k <= d_, "k out of range");
  require(l.coeffs.size() == f_.vars().size(), "point length does not match the variable count");
  return rank(hessians_.at(k).evaluate(l.coeffs));
}

RationalMatrix mult_map(const Poly& f, const LinearForm& l, unsigned i, unsigned k) {
  require(!l.is_zero(), "linear form must be nonzero");
  require(!f.is_zero() && i + k <= f.degree(), "level out of range: i + k must be at most deg(f)");
  const AkBasis src = ak_basis(f, i);
  const SpanCoordinates dst(ak_basis(f, i + k).derived);
  const DiffOp lk(l.op(f.vars_ptr()).poly().pow(k));
  RationalMatrix m(dst.dimension(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto col = dst.coordinates(diff_apply(lk, src.derived[j]));
    for (std::size_t r = 0; r < col.size(); ++r) m(r, j) = col[r];
  }
  return m;
}

ElementCheck slp_check_element(const GorensteinAlgebra& a, const LinearForm& l) {
  const unsigned d = a.socle_degree();
  ElementCheck out;
  out.holds = true;
  for (unsigned k = 0; 2 * k <= d; ++k) {
    const std::size_t hrank = a.hessian_rank_at(l, k);
    LevelCheck c = sample_level(a, l, k, d - 2 * k);
    if (hrank != c.rank) {
      fail(ErrorKind::Internal, "Hessian rank " + std::to_string(hrank) +
                                    " disagrees with multiplication rank " +
                                    std::to_string(c.rank) + " at k = " + std::to_string(k));
    }
    out.holds = out.holds && c.ok();
    out.levels.push_back(c);
  }
  return out;
}

ElementCheck wlp_check_element(const GorensteinAlgebra& a, const LinearForm& l) {
  ElementCheck out;
  out.holds = true;
  for (unsigned i = 0; i < a.socle_degree(); ++i) {
    LevelCheck c = sample_level(a, l, i, 1);
    out.holds = out.holds && c.ok();
    out.levels.push_back(c);
  }
  return out;
}

std::optional<KeyCertificate> key_criterion(const Poly& f, unsigned k) {
  check_split(f);
  require(k >= 1 && 2 * k <= f.degree(), "k out of range: need 1 <= k <= floor(d/2)");
  std::vector<DiffOp> ops;
  std::vector<Poly> derived;
  for (auto& m : mono_basis(f.vars().size(), k)) {
    DiffOp op = DiffOp::monomial(f.vars_ptr(), std::move(m));
    if (op.in_u_subring()) continue;
    Poly p = diff_apply(op, f);
    if (p.is_zero() || !p.in_u_subring()) continue;
    ops.push_back(std::move(op));
    derived.push_back(std::move(p));
  }
  const auto pivots = independent_subset(derived);
  KeyCertificate cert;
  cert.k = k;
  cert.s = pivots.size();
  cert.bound = binomial(static_cast<unsigned>(f.vars().u_count() + k - 1), k);
  if (Integer(static_cast<unsigned long>(cert.s)) <= cert.bound) return std::nullopt;
  for (std::size_t i : pivots) cert.ops.push_back(ops[i]);
  cert.pivot_columns = pivots;
  return cert;
}

bool verify_key_certificate(const Poly& f, const KeyCertificate& cert) {
  if (!f.vars().has_split() || cert.ops.size() != cert.s) return false;
  std::vector<Poly> derived;
  for (const auto& op : cert.ops) {
    if (!op.vars().same_names(f.vars()) || op.is_zero() || op.degree() != cert.k) return false;
    if (op.poly().term_count() != 1 || op.in_u_subring()) return false;
    Poly p = diff_apply(op, f);
    if (!p.in_u_subring()) return false;
    derived.push_back(std::move(p));
  }
  const Integer bound = binomial(static_cast<unsigned>(f.vars().u_count() + cert.k - 1), cert.k);
  return poly_rank(derived) == cert.s && bound == cert.bound &&
         Integer(static_cast<unsigned long>(cert.s)) > bound;
}

std::optional<ObstructionCertificate> wlp_obstruction(const Poly& f, unsigned k) {
  check_split(f);
  const unsigned deg = f.degree();
  if (deg <= 2 * k) return std::nullopt;
  const unsigned dprime = deg - k;
  ObstructionCertificate cert;
  cert.k = k;
  cert.bound = binomial(static_cast<unsigned>(f.vars().u_count() + dprime - 2), dprime - 1);

  std::vector<DiffOp> ops;
  std::vector<Poly> derived;
  for (auto& m : mono_basis(f.vars().size(), k)) {
    DiffOp op = DiffOp::monomial(f.vars_ptr(), std::move(m));
    Poly p = diff_apply(op, f);
    if (p.is_zero() || !all_partials_in_u(p)) continue;
    ops.push_back(std::move(op));
    derived.push_back(std::move(p));
  }
  const auto pivots = independent_subset(derived);
  if (Integer(static_cast<unsigned long>(pivots.size())) > cert.bound) {
    for (std::size_t i : pivots) cert.ops.push_back(ops[i]);
    cert.s = pivots.size();
    return cert;
  }

  // General operators: alpha = sum c_j b_j over a basis of A_k, with the
  // x-involving part of every first derivative of alpha(f) equal to zero.
  const AkBasis basis = ak_basis(f, k);
  std::vector<RationalMatrix> blocks;
  std::size_t total_rows = 0;
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    std::vector<Poly> parts;
    for (const auto& p : basis.derived) parts.push_back(x_part(partial(p, i)));
    blocks.push_back(support_matrix(parts));
    total_rows += blocks.back().rows();
  }
  RationalMatrix stacked(total_rows, basis.size());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) stacked(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  const auto kernel = kernel_basis(stacked);
  if (Integer(static_cast<unsigned long>(kernel.size())) <= cert.bound) return std::nullopt;
  cert.monomial = false;
  for (const auto& v : kernel) {
    Poly op(f.vars_ptr());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) op += basis.ops[j].poly() * v[j];
    cert.ops.emplace_back(std::move(op));
  }
  cert.s = kernel.size();
  return cert;
}

bool verify_obstruction_certificate(const Poly& f, const ObstructionCertificate& cert) {
  if (!f.vars().has_split() || cert.ops.size() != cert.s) return false;
  const unsigned deg = f.degree();
  if (deg <= 2 * cert.k) return false;
  std::vector<Poly> derived;
  for (const auto& op : cert.ops) {
    if (!op.vars().same_names(f.vars()) || op.is_zero() || op.degree() != cert.k) return false;
    if (!op.poly().is_homogeneous()) return false;
    Poly p = diff_apply(op, f);
    if (!all_partials_in_u(p)) return false;
    derived.push_back(std::move(p));
  }
  const unsigned dprime = deg - cert.k;
  const Integer bound = binomial(static_cast<unsigned>(f.vars().u_count() + dprime - 2), dprime - 1);
  return poly_rank(derived) == cert.s && bound == cert.bound &&
         Integer(static_cast<unsigned long>(cert.s)) > bound;
}

const char* to_string(LefschetzProperty p) { return p == LefschetzProperty::SLP ? "SLP" : "WLP"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* to_string(FailureCertificate::Kind k) {
  switch (k) {
    case FailureCertificate::Kind::HessianVanishing: return "hessian_vanishing";
    case FailureCertificate::Kind::KeyCriterion: return "key_criterion";
    case FailureCertificate::Kind::WlpObstruction: return "wlp_obstruction";
    case FailureCertificate::Kind::NonUnimodal: return "non_unimodal";
  }
  return "";
}

LefschetzReport slp_generic(const GorensteinAlgebra& a, const GenericOptions& opts) {
  VanishingOptions v = opts.vanishing;
  v.seed = derive_seed(opts.seed, 0x51, 0);
  return slp_generic(a, opts, hess_profile(a.form(), v));
}

LefschetzReport slp_generic(const GorensteinAlgebra& a, const GenericOptions& opts,
                            const std::vector<VanishingVerdict>& profile) {
  const Poly& f = a.form();
  const unsigned d = a.socle_degree();
  LefschetzReport rep;
  rep.property = LefschetzProperty::SLP;
  rep.hilbert = a.hilbert();
  rep.unimodal = is_unimodal(rep.hilbert);
  if (!depends_on_all_vars(f)) rep.notes.push_back("degenerate input: (Ann f)_1 is nonzero");
  require(profile.size() == d / 2 + 1, "profile must cover k = 0..floor(d/2)");

  const std::uint64_t bound = linear_form_bound(d);
  for (const auto& verdict : profile) {
    if (!verdict.vanishes) continue;
    const unsigned k = verdict.k;
    rep.verdict = Verdict::Fails;
    const LinearForm sample = random_linear_form(f.vars().size(), bound, derive_seed(opts.seed, 0x5a, 0));
    rep.failing_map = sample_level(a, sample, k, d - 2 * k);
    FailureCertificate c{FailureCertificate::Kind::HessianVanishing};
    c.hessian = verdict;
    rep.certificates.push_back(std::move(c));
    if (f.vars().has_split() && k >= 1) {
      if (auto key = key_criterion(f, k)) {
        FailureCertificate kc{FailureCertificate::Kind::KeyCriterion};
        kc.key = std::move(key);
        rep.certificates.push_back(std::move(kc));
      }
    }
    if (verdict.mode == VanishingMode::Probabilistic)
      rep.notes.push_back("vanishing of hess^" + std::to_string(k) + " is probabilistic");
    return rep;
  }

  std::vector<LinearForm> candidates;
  for (const auto& verdict : profile) {
    if (!verdict.witness_point) continue;
    LinearForm l{*verdict.witness_point};
    if (!l.is_zero()) candidates.push_back(std::move(l));
  }
  for (unsigned t = 0; t < opts.trials; ++t)
    candidates.push_back(random_linear_form(f.vars().size(), bound, derive_seed(opts.seed, 0x5b, t)));
  for (const auto& l : candidates) {
    ElementCheck check = slp_check_element(a, l);
    if (!check.holds) continue;
    rep.verdict = Verdict::Holds;
    rep.witness = l;
    rep.witness_levels = std::move(check.levels);
    return rep;
  }
  rep.notes.push_back("no strong Lefschetz element found within the trial budget");
  return rep;
}

LefschetzReport wlp_generic(const GorensteinAlgebra& a, const GenericOptions& opts) {
  const Poly& f = a.form();
  const unsigned d = a.socle_degree();
  LefschetzReport rep;
  rep.property = LefschetzProperty::WLP;
  rep.hilbert = a.hilbert();
  rep.unimodal = is_unimodal(rep.hilbert);
  if (!depends_on_all_vars(f)) rep.notes.push_back("degenerate input: (Ann f)_1 is nonzero");

  const std::uint64_t bound = linear_form_bound(d);
  std::optional<ElementCheck> sample;
  for (unsigned t = 0; t < std::max(1u, opts.trials); ++t) {
    const LinearForm l = random_linear_form(f.vars().size(), bound, derive_seed(opts.seed, 0x3c, t));
    ElementCheck check = wlp_check_element(a, l);
    if (check.holds) {
      rep.verdict = Verdict::Holds;
      rep.witness = l;
      rep.witness_levels = std::move(check.levels);
      return rep;
    }
    if (!sample) sample = std::move(check);
  }
  auto sample_at = [&](unsigned i) { return sample->levels.at(i); };

  const auto& h = rep.hilbert.dims;
  if (!rep.unimodal) {
    for (unsigned i = 0; 2 * (i + 1) <= d; ++i) {
      if (h[i] <= h[i + 1]) continue;
      FailureCertificate c{FailureCertificate::Kind::NonUnimodal};
      c.drop_level = i;
      rep.certificates.push_back(std::move(c));
      break;
    }
  }
  if (d % 2 == 1) {
    const unsigned q = (d - 1) / 2;
    VanishingOptions v = opts.vanishing;
    v.seed = derive_seed(opts.seed, 0x3d, q);
    VanishingVerdict verdict = hessian_vanishes(f, q, v);
    if (verdict.vanishes) {
      FailureCertificate c{FailureCertificate::Kind::HessianVanishing};
      c.hessian = std::move(verdict);
      rep.certificates.push_back(std::move(c));
      if (!rep.failing_map) rep.failing_map = sample_at(q);
    }
  }
  if (f.vars().has_split()) {
    for (unsigned k = 0; 2 * k < d; ++k) {
      if (h[k] > h[k + 1]) continue;
      auto cert = wlp_obstruction(f, k);
      if (!cert) continue;
      FailureCertificate c{FailureCertificate::Kind::WlpObstruction};
      c.obstruction = std::move(cert);
      rep.certificates.push_back(std::move(c));
      if (!rep.failing_map) rep.failing_map = sample_at(k);
      break;
    }
  }
  if (rep.certificates.empty()) {
    rep.notes.push_back("no WLP witness within the trial budget and no structural certificate");
    return rep;
  }
  rep.verdict = Verdict::Fails;
  if (!rep.failing_map) {
    for (const auto& c : sample->levels)
      if (!c.ok()) {
        rep.failing_map = c;
        break;
      }
  }
  return rep;
}

}  // namespace llab
