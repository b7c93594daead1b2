#include "hessian.hpp"

#include <cmath>
#include <random>

#include "error.hpp"
#include "poly_matrix.hpp"

namespace llab {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RationalMatrix evaluate_entries(std::span<const Poly> entries, std::size_t n,
                                std::span<const Rational> point) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = eval_poly(entries[i * n + j], point);
  return m;
}

std::vector<Rational> random_point(std::size_t nvars, std::uint64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, bound);
  std::vector<Rational> p(nvars);
  for (auto& c : p) c = Rational(Integer(std::to_string(dist(rng))));
  return p;
}

void check_hessian_level(const Poly& f, unsigned k) {
  require(!f.is_zero(), "f must be nonzero");
  require(f.is_homogeneous(), "f must be homogeneous");
  require(k <= f.degree() / 2, "k out of range: the Hessian order must be at most floor(d/2) = " +
                                   std::to_string(f.degree() / 2));
}

VanishingVerdict exact_verdict(std::span<const Poly> entries, std::size_t n, std::size_t nvars,
                               std::uint64_t bound, const VanishingOptions& opts) {
  EliminationBudget budget;
  budget.max_entry_terms = opts.max_entry_terms;
  const SymbolicElimination elim = eliminate_symbolic(entries, n, budget);
  VanishingVerdict v;
  v.matrix_size = n;
  v.mode = VanishingMode::Exact;
  if (elim.singular) {
    v.vanishes = true;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(elim.transcript_hash));
    v.transcript_hash = buf;
    return v;
  }
  // Nonzero determinant: any point off its zero set is a witness.
  for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
    auto point = random_point(nvars, bound, derive_seed(opts.seed, 0xe1, attempt));
    std::vector<Integer> ipoint;
    for (const auto& c : point) ipoint.push_back(c.get_num());
    if (elim.determinant_multiple->evaluate(ipoint, nvars) == 0) continue;
    const Rational det = determinant(evaluate_entries(entries, n, point));
    if (det == 0) fail(ErrorKind::Internal, "symbolic determinant disagrees with evaluation");
    v.witness_point = std::move(point);
    v.det_value = det;
    return v;
  }
  fail(ErrorKind::Internal, "no nonvanishing witness found for a nonzero determinant");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix(splitmix(seed ^ splitmix(stream)) + index);
}

const char* to_string(VanishingMode m) {
  return m == VanishingMode::Exact ? "exact" : "probabilistic";
}

RationalMatrix HessianMatrix::evaluate(std::span<const Rational> point) const {
  return evaluate_entries(entries, size(), point);
}

HessianMatrix hessian_matrix(const Poly& f, unsigned k, const AkBasis* basis) {
  check_hessian_level(f, k);
  HessianMatrix h;
  h.k = k;
  if (basis) {
    require(basis->k == k, "basis degree does not match k");
    require(basis->ops.size() == basis->derived.size(), "malformed basis");
    for (std::size_t i = 0; i < basis->size(); ++i) {
      require(diff_apply(basis->ops[i], f) == basis->derived[i],
              "basis operator " + std::to_string(i) + " does not match its derivative");
    }
    std::vector<Poly> all;
    for (auto& m : mono_basis(f.vars().size(), k))
      all.push_back(diff_apply(DiffOp::monomial(f.vars_ptr(), std::move(m)), f));
    require(poly_rank(basis->derived) == basis->size() && basis->size() == poly_rank(all),
            "basis is not a basis of A_k");
    h.basis = *basis;
  } else {
    h.basis = ak_basis(f, k);
  }
  const std::size_t n = h.basis.size();
  h.entries.assign(n * n, Poly(f.vars_ptr()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Poly e = diff_apply(h.basis.ops[i], h.basis.derived[j]);
      h.entries[j * n + i] = e;
      h.entries[i * n + j] = std::move(e);
    }
  return h;
}

VanishingVerdict matrix_det_vanishes(std::span<const Poly> entries, std::size_t n,
                                     unsigned entry_degree, const VanishingOptions& opts) {
  require(entries.size() == n * n, "entry count does not match matrix size");
  require(n > 0, "empty matrix");
  const std::size_t nvars = entries[0].vars().size();
  const std::uint64_t det_degree = static_cast<std::uint64_t>(n) * entry_degree;
  const std::uint64_t bound = std::max<std::uint64_t>(64 * det_degree, 64);

  auto run_exact = [&](VanishingVerdict fallback) -> VanishingVerdict {
    try {
      return exact_verdict(entries, n, nvars, bound, opts);
    } catch (const BudgetExceeded& e) {
      fallback.note = std::string("symbolic elimination abandoned: ") + e.what();
      return fallback;
    }
  };

  VanishingVerdict v;
  v.matrix_size = n;
  v.mode = VanishingMode::Probabilistic;
  if (opts.mode == VanishingMode::Exact) {
    // Without a completed elimination the answer degrades to the evaluation test.
    VanishingOptions prob = opts;
    prob.mode = VanishingMode::Probabilistic;
    prob.exact_cutoff = 0;
    prob.force_exact = false;
    try {
      return exact_verdict(entries, n, nvars, bound, opts);
    } catch (const BudgetExceeded& e) {
      VanishingVerdict p = matrix_det_vanishes(entries, n, entry_degree, prob);
      p.note = std::string("symbolic elimination abandoned: ") + e.what();
      return p;
    }
  }

  const unsigned trials = entry_degree == 0 ? 1 : std::max(1u, opts.trials);
  for (unsigned t = 0; t < trials; ++t) {
    auto point = random_point(nvars, bound, derive_seed(opts.seed, 0x7a, t));
    Rational det = determinant(evaluate_entries(entries, n, point));
    if (det != 0) {
      v.vanishes = false;
      v.witness_point = std::move(point);
      v.det_value = std::move(det);
      return v;
    }
  }
  v.vanishes = true;
  if (entry_degree == 0) {
    v.error_bound = 0.0;
    return v;
  }
  v.error_bound = std::pow(static_cast<double>(det_degree) / static_cast<double>(bound), trials);
  if (n <= opts.exact_cutoff || opts.force_exact) return run_exact(v);
  return v;
}

VanishingVerdict hessian_vanishes(const Poly& f, const AkBasis& basis,
                                  const VanishingOptions& opts) {
  const HessianMatrix h = hessian_matrix(f, basis.k, &basis);
  VanishingVerdict v =
      matrix_det_vanishes(h.entries, h.size(), f.degree() - 2 * basis.k, opts);
  v.k = basis.k;
  return v;
}

VanishingVerdict hessian_vanishes(const Poly& f, unsigned k, const VanishingOptions& opts) {
  const HessianMatrix h = hessian_matrix(f, k);
  VanishingVerdict v = matrix_det_vanishes(h.entries, h.size(), f.degree() - 2 * k, opts);
  v.k = k;
  return v;
}

std::vector<VanishingVerdict> hess_profile(const Poly& f, const VanishingOptions& opts,
                                           std::optional<unsigned> max_k) {
  require(!f.is_zero(), "f must be nonzero");
  unsigned top = f.degree() / 2;
  if (max_k) top = std::min(top, *max_k);
  std::vector<VanishingVerdict> out;
  for (unsigned k = 0; k <= top; ++k) {
    VanishingOptions o = opts;
    o.seed = derive_seed(opts.seed, 0x9f, k);
    out.push_back(hessian_vanishes(f, k, o));
  }
  return out;
}

ConeTest is_cone(const Poly& f) {
  require(!f.is_zero(), "f must be nonzero");
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < f.vars().size(); ++i) partials.push_back(partial(f, i));
  const auto kernel = kernel_basis(support_matrix(partials));
  ConeTest t;
  if (kernel.empty()) return t;
  t.is_cone = true;
  t.dependency = kernel.front();
  for (const auto& c : t.dependency) {
    if (c == 0) continue;
    const Rational lead = c;
    for (auto& x : t.dependency) x /= lead;
    break;
  }
  return t;
}

VanishingVerdict second_partials_det_vanishes(const Poly& f, const VanishingOptions& opts) {
  require(!f.is_zero(), "f must be nonzero");
  require(f.is_homogeneous() && f.degree() >= 2, "f must be homogeneous of degree >= 2");
  const std::size_t n = f.vars().size();
  std::vector<Poly> first;
  for (std::size_t i = 0; i < n; ++i) first.push_back(partial(f, i));
  std::vector<Poly> entries(n * n, Poly(f.vars_ptr()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Poly e = partial(first[i], j);
      entries[j * n + i] = e;
      entries[i * n + j] = std::move(e);
    }
  VanishingVerdict v = matrix_det_vanishes(entries, n, f.degree() - 2, opts);
  v.k = 1;
  return v;
}

}  // namespace llab
