#include "poly_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "error.hpp"

namespace llab {
namespace {

using Packed = PackedPoly::Packed;

unsigned byte_at(Packed m, std::size_t i) {
  return static_cast<unsigned>((m >> (8 * (15 - i))) & 0xffu);
}

bool packed_divides(Packed small, Packed big) {
  for (std::size_t i = 0; i < 16; ++i)
    if (byte_at(small, i) > byte_at(big, i)) return false;
  return true;
}

void fnv(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
}

}  // namespace

PackedPoly PackedPoly::constant(const Integer& c) {
  PackedPoly p;
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

PackedPoly PackedPoly::from_poly(const Poly& p, const Rational& scale) {
  if (p.vars().size() > kMaxVars) {
    throw BudgetExceeded("symbolic elimination supports at most 16 variables");
  }
  PackedPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > kMaxDegree) throw BudgetExceeded("degree exceeds packed range");
    Packed w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w |= static_cast<Packed>(m[i]) << (8 * (15 - i));
    const Rational v = c * scale;
    if (v.get_den() != 1) fail(ErrorKind::Internal, "row scaling left a fractional entry");
    out.terms_.push_back({w, v.get_num()});
    out.degree_ = m.degree();
  }
  return out;
}

PackedPoly operator*(const PackedPoly& a, const PackedPoly& b) {
  PackedPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.degree_ + b.degree_ > PackedPoly::kMaxDegree) {
    throw BudgetExceeded("degree exceeds packed range");
  }
  std::vector<PackedPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prods.push_back({ta.mono + tb.mono, ta.coeff * tb.coeff});
  std::sort(prods.begin(), prods.end(),
            [](const PackedPoly::Term& x, const PackedPoly::Term& y) { return x.mono > y.mono; });
  for (auto& t : prods) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  out.degree_ = out.terms_.empty() ? 0 : a.degree_ + b.degree_;
  return out;
}

PackedPoly operator-(const PackedPoly& a, const PackedPoly& b) {
  PackedPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].mono > b.terms_[j].mono)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].mono > a.terms_[i].mono) {
      out.terms_.push_back({b.terms_[j].mono, -b.terms_[j].coeff});
      ++j;
    } else {
      Integer c = a.terms_[i].coeff - b.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.degree_ = out.terms_.empty() ? 0 : std::max(a.degree_, b.degree_);
  return out;
}

PackedPoly divexact(const PackedPoly& a, const PackedPoly& b) {
  if (b.is_zero()) fail(ErrorKind::Internal, "division by the zero polynomial");
  PackedPoly q;
  if (a.is_zero()) return q;
  const auto& lead = b.terms_.front();
  auto quotient_term = [&](const PackedPoly::Term& t) {
    if (!packed_divides(lead.mono, t.mono) ||
        !mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      fail(ErrorKind::Internal, "inexact polynomial division during elimination");
    }
    PackedPoly::Term r{t.mono - lead.mono, 0};
    mpz_divexact(r.coeff.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    return r;
  };
  q.degree_ = a.degree_ - b.degree_;
  if (b.terms_.size() == 1) {
    for (const auto& t : a.terms_) q.terms_.push_back(quotient_term(t));
    return q;
  }
  std::map<Packed, Integer, std::greater<>> rem;
  for (const auto& t : a.terms_) rem.emplace(t.mono, t.coeff);
  Integer tmp;
  while (!rem.empty()) {
    auto top = rem.begin();
    PackedPoly::Term qt = quotient_term({top->first, top->second});
    rem.erase(top);
    for (std::size_t k = 1; k < b.terms_.size(); ++k) {
      const Packed m = b.terms_[k].mono + qt.mono;
      mpz_mul(tmp.get_mpz_t(), qt.coeff.get_mpz_t(), b.terms_[k].coeff.get_mpz_t());
      auto [it, inserted] = rem.try_emplace(m, 0);
      it->second -= tmp;
      if (it->second == 0) rem.erase(it);
    }
    q.terms_.push_back(std::move(qt));
  }
  return q;
}

Integer PackedPoly::evaluate(std::span<const Integer> point, std::size_t nvars) const {
  Integer sum = 0, v, pw;
  for (const auto& t : terms_) {
    v = t.coeff;
    for (std::size_t i = 0; i < nvars; ++i) {
      const unsigned e = byte_at(t.mono, i);
      if (!e) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

Poly PackedPoly::to_poly(const VarsPtr& vars) const {
  PolyBuilder b(vars);
  for (const auto& t : terms_) {
    std::vector<unsigned> e(vars->size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = byte_at(t.mono, i);
    b.add(Monomial(std::move(e)), Rational(t.coeff));
  }
  return std::move(b).build();
}

SymbolicElimination eliminate_symbolic(std::span<const Poly> entries, std::size_t n,
                                       const EliminationBudget& budget) {
  require(entries.size() == n * n, "entry count does not match matrix size");
  SymbolicElimination res;
  res.size = n;
  std::uint64_t h = 1469598103934665603ull;
  fnv(h, n);

  std::vector<std::vector<PackedPoly>> a(n, std::vector<PackedPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : entries[i * n + j].terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = PackedPoly::from_poly(entries[i * n + j], Rational(l));
  }

  PackedPoly prev = PackedPoly::constant(1);
  bool prev_is_one = true;
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pi = n, pj = n, best = 0;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const std::size_t c = a[i][j].term_count();
        if (c && (pi == n || c < best)) {
          pi = i;
          pj = j;
          best = c;
        }
      }
    if (pi == n) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
    fnv(h, pi);
    fnv(h, pj);
    fnv(h, best);

    const PackedPoly& piv = a[t][t];
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        PackedPoly num = piv * a[i][j];
        if (!a[i][t].is_zero() && !a[t][j].is_zero()) num = num - a[i][t] * a[t][j];
        a[i][j] = prev_is_one ? std::move(num) : divexact(num, prev);
        if (a[i][j].term_count() > budget.max_entry_terms) {
          throw BudgetExceeded("entry grew beyond " + std::to_string(budget.max_entry_terms) +
                               " terms");
        }
      }
      a[i][t] = PackedPoly();
    }
    prev = a[t][t];
    prev_is_one = false;
  }
  res.rank = t;
  res.singular = t < n;
  fnv(h, res.rank);
  res.transcript_hash = h;
  if (!res.singular) res.determinant_multiple = n ? prev : PackedPoly::constant(1);
  return res;
}

}  // namespace llab
