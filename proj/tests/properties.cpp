#include "properties.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "apolar.hpp"
#include "families.hpp"
#include "hessian.hpp"
#include "lefschetz.hpp"
#include "support.hpp"

namespace llab::test {
namespace {

using Rng = std::mt19937_64;

int small_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Nonzero form of degree d supported on the given variable indices.
Poly random_form(const VarsPtr& vars, const std::vector<std::size_t>& support, unsigned d,
                 std::size_t terms, Rng& rng) {
  const auto basis = mono_basis(support.size(), d);
  for (;;) {
    Poly f(vars);
    for (std::size_t t = 0; t < terms; ++t) {
      const Monomial& local = basis[static_cast<std::size_t>(small_int(rng, 0, int(basis.size()) - 1))];
      std::vector<unsigned> ex(vars->size(), 0);
      for (std::size_t i = 0; i < support.size(); ++i) ex[support[i]] = local[i];
      int c = small_int(rng, -5, 5);
      if (c == 0) c = 1;
      f += Poly::monomial(vars, Monomial(std::move(ex)), c);
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

VarsPtr plain_vars(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? letters[i] : "x" + std::to_string(i));
  return VariableSet::make(std::move(names));
}

Poly random_plain_form(Rng& rng, std::size_t max_vars, unsigned min_d, unsigned max_d) {
  const std::size_t n = static_cast<std::size_t>(small_int(rng, 2, int(max_vars)));
  const unsigned d = static_cast<unsigned>(small_int(rng, int(min_d), int(max_d)));
  const auto vars = plain_vars(n);
  return random_form(vars, all_indices(n), d, static_cast<std::size_t>(small_int(rng, 2, 6)), rng);
}

RationalMatrix random_invertible(std::size_t n, Rng& rng) {
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_int(rng, -2, 2);
    if (determinant(m) != 0) return m;
  }
}

// Fixed structured forms mixed into the invariance suites so vanishing flags
// of both values occur.
std::vector<Poly> structured_forms() {
  return {perazzo(), ikeda(), gen_exceptional(3, 5, 2).f, gen_gnp(2, 2, 2, 3, "lemma_m2").f,
          gen_thmwlp(5, 4).f, gen_prop44("i").f, poly("x^4 + y^4 + z^4", "x,y,z")};
}

VanishingOptions options(std::uint64_t seed) {
  VanishingOptions o;
  o.seed = seed;
  return o;
}

PropertyResult run(const std::string& name, std::size_t count, std::uint64_t seed,
                   const std::function<std::string(std::size_t, Rng&)>& one) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyResult r;
  r.name = name;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::string why;
    try {
      why = one(i, rng);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++r.instances;
    if (!why.empty()) {
      if (r.failures++ == 0) r.first_failure = why;
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

PropertyResult hilbert_symmetry(std::uint64_t seed, std::size_t count) {
  return run("hilbert symmetry", count, seed, [](std::size_t, Rng& rng) -> std::string {
    const Poly f = random_plain_form(rng, 4, 2, 6);
    const auto h = hilbert_vector(f).dims;
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != h[h.size() - 1 - i]) return "asymmetric " + hilbert_vector(f).to_string() + " for " + f.to_string();
    return {};
  });
}

PropertyResult euler_identity(std::uint64_t seed, std::size_t count) {
  return run("euler identity", count, seed, [](std::size_t, Rng& rng) -> std::string {
    const Poly f = random_plain_form(rng, 5, 1, 7);
    Poly lhs(f.vars_ptr());
    for (std::size_t i = 0; i < f.vars().size(); ++i) lhs += Poly::variable(f.vars_ptr(), i) * partial(f, i);
    if (lhs != f * Rational(f.degree())) return "sum x_i f_i != d f for " + f.to_string();
    return {};
  });
}

PropertyResult watanabe_rank_consistency(std::uint64_t seed, std::size_t count) {
  const auto fixed = structured_forms();
  return run("watanabe rank consistency", count, seed,
             [&fixed, seed](std::size_t i, Rng& rng) -> std::string {
               const Poly f = i % 3 == 0 ? fixed[(i / 3) % fixed.size()] : random_plain_form(rng, 4, 2, 6);
               const GorensteinAlgebra a(f);
               const unsigned d = f.degree();
               const LinearForm l = random_linear_form(f.vars().size(), 5, derive_seed(seed, 0x77, i));
               for (unsigned k = 0; 2 * k <= d; ++k) {
                 const std::size_t h = a.hessian_rank_at(l, k);
                 const std::size_t m = a.mult_rank(l, k, d - 2 * k);
                 if (h != m)
                   return "k=" + std::to_string(k) + " hessian rank " + std::to_string(h) + " vs map rank " +
                          std::to_string(m) + " for " + f.to_string();
               }
               return {};
             });
}

PropertyResult variable_change_invariance(std::uint64_t seed, std::size_t count) {
  const auto fixed = structured_forms();
  return run("variable change invariance", count, seed,
             [&fixed, seed](std::size_t i, Rng& rng) -> std::string {
               const Poly f = i % 2 == 0 ? fixed[(i / 2) % fixed.size()] : random_plain_form(rng, 4, 2, 5);
               const Poly g = linear_change(f, random_invertible(f.vars().size(), rng));
               const auto o = options(derive_seed(seed, 0x78, i));
               const auto a = vanishing_flags(hess_profile(f, o));
               const auto b = vanishing_flags(hess_profile(g, o));
               if (a != b) return "flags changed under substitution for " + f.to_string();
               return {};
             });
}

PropertyResult basis_change_invariance(std::uint64_t seed, std::size_t count) {
  const auto fixed = structured_forms();
  return run("basis change invariance", count, seed,
             [&fixed, seed](std::size_t i, Rng& rng) -> std::string {
               const Poly f = i % 2 == 0 ? fixed[(i / 2) % fixed.size()] : random_plain_form(rng, 4, 2, 6);
               const unsigned d = f.degree();
               const unsigned k = static_cast<unsigned>(small_int(rng, 1, int(d / 2)));
               const AkBasis base = ak_basis(f, k);
               // A random combination of the basis ops, placed first.
               Poly combo(f.vars_ptr());
               for (const auto& op : base.ops) combo += op.poly() * Rational(small_int(rng, -3, 3));
               std::vector<DiffOp> prefix;
               if (!diff_apply(DiffOp(combo), f).is_zero()) prefix.push_back(DiffOp(combo));
               const AkBasis other = ak_basis(f, k, prefix);
               const auto o = options(derive_seed(seed, 0x79, i));
               if (hessian_vanishes(f, base, o).vanishes != hessian_vanishes(f, other, o).vanishes)
                 return "flag changed with basis at k=" + std::to_string(k) + " for " + f.to_string();
               return {};
             });
}

PropertyResult gordan_noether_desk_check(std::uint64_t seed, std::size_t count) {
  return run("gordan-noether desk check", count, seed,
             [seed](std::size_t i, Rng& rng) -> std::string {
               Poly f = random_plain_form(rng, 4, 2, 5);
               while (is_cone(f).is_cone) f = random_plain_form(rng, 4, 2, 5);
               if (hessian_vanishes(f, 1, options(derive_seed(seed, 0x7a, i))).vanishes)
                 return "vanishing Hessian for non-cone " + f.to_string();
               return {};
             });
}

PropertyResult separated_variables_additivity(std::uint64_t seed, std::size_t count) {
  return run("separated variables additivity", count, seed, [](std::size_t, Rng& rng) -> std::string {
    const std::size_t a = static_cast<std::size_t>(small_int(rng, 1, 3));
    const std::size_t b = static_cast<std::size_t>(small_int(rng, 1, 3));
    const unsigned d = static_cast<unsigned>(small_int(rng, 2, 5));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < b; ++i) names.push_back("y" + std::to_string(i));
    const auto vars = VariableSet::make(names);
    std::vector<std::size_t> sa, sb;
    for (std::size_t i = 0; i < a; ++i) sa.push_back(i);
    for (std::size_t i = 0; i < b; ++i) sb.push_back(a + i);
    const Poly g = random_form(vars, sa, d, 3, rng);
    const Poly h = random_form(vars, sb, d, 3, rng);
    const auto hg = hilbert_vector(g).dims, hh = hilbert_vector(h).dims, hf = hilbert_vector(g + h).dims;
    for (unsigned i = 1; i < d; ++i)
      if (hf[i] != hg[i] + hh[i])
        return "h_" + std::to_string(i) + " not additive for " + (g + h).to_string();
    if (hf.front() != 1 || hf.back() != 1) return "ends are not 1 for " + (g + h).to_string();
    return {};
  });
}

std::vector<PropertyResult> all_properties(std::uint64_t seed) {
  return {hilbert_symmetry(seed),
          euler_identity(seed + 1),
          watanabe_rank_consistency(seed + 2),
          variable_change_invariance(seed + 3),
          basis_change_invariance(seed + 4),
          gordan_noether_desk_check(seed + 5),
          separated_variables_additivity(seed + 6)};
}

}  // namespace llab::test
