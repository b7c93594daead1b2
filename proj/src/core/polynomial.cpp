#include "polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "error.hpp"

namespace llab {

// ---------------------------------------------------------------- variables

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

std::string dualize(const std::string& s) {
  std::string d = s;
  d[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(d[0])));
  return d;
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names,
                         std::optional<std::size_t> x_block_size)
    : names_(std::move(names)), x_block_(x_block_size) {
  require(!names_.empty(), "variable set must be non-empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    require(valid_identifier(n), "invalid variable name '" + n + "'");
    require(seen.insert(n).second, "duplicate variable name '" + n + "'");
  }
  std::set<std::string> dual_seen;
  for (const auto& n : names_) {
    duals_.push_back(dualize(n));
    require(dual_seen.insert(duals_.back()).second,
            "variable names collide after capitalization: '" + n + "'");
  }
  if (x_block_) {
    require(*x_block_ >= 1 && *x_block_ < names_.size(),
            "split must leave both blocks non-empty");
  }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> VariableSet::dual_index_of(std::string_view name) const {
  for (std::size_t i = 0; i < duals_.size(); ++i)
    if (duals_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableSet::x_count() const {
  require(has_split(), "no x|u split declared for this variable set");
  return *x_block_;
}

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += other.exps_[i];
  m.degree_ += other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= divisor.exps_[i];
  m.degree_ -= divisor.degree_;
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- builder

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c != 0) pending_.emplace_back(m, c);
}

Poly PolyBuilder::build() && {
  std::sort(pending_.begin(), pending_.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; });
  Poly p(vars_);
  for (auto& t : pending_) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

// ---------------------------------------------------------------- polys

Poly Poly::constant(VarsPtr vars, const Rational& c) {
  Poly p(vars);
  if (c != 0) p.terms_.emplace_back(Monomial(p.vars_->size()), c);
  return p;
}

Poly Poly::variable(VarsPtr vars, std::size_t i) {
  require(i < vars->size(), "variable index out of range");
  std::vector<unsigned> e(vars->size(), 0);
  e[i] = 1;
  return monomial(std::move(vars), Monomial(std::move(e)));
}

Poly Poly::monomial(VarsPtr vars, Monomial m, const Rational& c) {
  require(m.size() == vars->size(), "monomial length does not match variable count");
  Poly p(std::move(vars));
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Poly Poly::from_terms(VarsPtr vars, std::vector<Term> terms) {
  PolyBuilder b(vars);
  for (auto& t : terms) {
    require(t.first.size() == vars->size(), "monomial length does not match variable count");
    b.add(t.first, t.second);
  }
  return std::move(b).build();
}

unsigned Poly::degree() const {
  require(!is_zero(), "the zero polynomial has no degree");
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (is_zero()) return true;
  const unsigned d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.first.degree() == d; });
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

bool Poly::in_u_subring() const {
  const std::size_t nx = vars_->x_count();
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nx; ++i)
      if (t.first[i] != 0) return false;
  return true;
}

Poly Poly::with_vars(VarsPtr vars) const {
  require(vars->same_names(*vars_), "variable names differ");
  Poly p = *this;
  p.vars_ = std::move(vars);
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (&a.vars() != &b.vars() && !a.vars().same_names(b.vars())) {
    fail(ErrorKind::InvalidArgument, "variable-set mismatch");
  }
}

// Merge two descending term lists: a + sign * b.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a,
                              const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational c = a[i].second;
      if (sign > 0) c += b[j].second; else c -= b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_same(*this, o);
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(*this, o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  PolyBuilder builder(a.vars_);
  for (auto& [m, c] : acc) builder.add(m, c);
  return std::move(builder).build();
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.vars().same_names(b.vars()) && a.terms_ == b.terms_;
}

namespace {

std::string format_terms(const std::vector<Poly::Term>& terms,
                         const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string body;
    if (mag != 1 || m.degree() == 0) body = to_string(mag);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += names[i];
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    out += body;
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const { return format_terms(terms_, vars_->names()); }

std::string DiffOp::to_string() const {
  std::vector<std::string> duals;
  for (std::size_t i = 0; i < p_.vars().size(); ++i) duals.push_back(p_.vars().dual_name(i));
  return format_terms(p_.terms(), duals);
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarsPtr& vars, bool dual)
      : s_(text), vars_(vars), dual_(dual) {}

  Poly parse() {
    PolyBuilder builder(vars_);
    skip();
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    parse_term(builder, sign);
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      const char ch = s_[pos_];
      if (ch == '+' || ch == '-') {
        ++pos_;
        parse_term(builder, ch == '+' ? 1 : -1);
      } else {
        throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
      }
    }
    return std::move(builder).build();
  }

 private:
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an unsigned integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  void parse_term(PolyBuilder& builder, int sign) {
    Rational coeff = sign;
    Monomial mono(vars_->size());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coeff *= Rational(num, den);
      coeff.canonicalize();
      if (peek() != '*') {
        builder.add(mono, coeff);
        return;
      }
      ++pos_;
    }
    for (;;) {
      parse_factor(mono);
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    builder.add(mono, coeff);
  }

  void parse_factor(Monomial& mono) {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError(pos_, "expected a variable name");
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    const auto idx = dual_ ? vars_->dual_index_of(name) : vars_->index_of(name);
    if (!idx) throw ParseError(start, "undeclared variable '" + std::string(name) + "'");
    unsigned e = 1;
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 6) throw ParseError(at, "exponent too large");
      e = static_cast<unsigned>(std::stoul(d));
    }
    std::vector<unsigned> ex(vars_->size(), 0);
    ex[*idx] = e;
    mono = mono * Monomial(std::move(ex));
  }

  std::string_view s_;
  const VarsPtr& vars_;
  bool dual_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, VarsPtr vars, ParseOptions opts) {
  Poly p = Parser(text, vars, false).parse();
  if (!opts.allow_inhomogeneous && !p.is_homogeneous()) {
    fail(ErrorKind::Parse, "polynomial is not homogeneous");
  }
  return p;
}

DiffOp parse_diffop(std::string_view text, VarsPtr vars) {
  return DiffOp(Parser(text, vars, true).parse());
}

// ---------------------------------------------------------------- calculus

Poly diff_apply(const DiffOp& alpha, const Poly& f) {
  const Poly& a = alpha.poly();
  check_same(a, f);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mf, cf] : f.terms()) {
      if (!ma.divides(mf)) continue;
      Integer scalar = 1;
      for (std::size_t i = 0; i < ma.size(); ++i)
        if (ma[i]) scalar *= falling_factorial(mf[i], ma[i]);
      acc[mf / ma] += ca * cf * scalar;
    }
  }
  PolyBuilder b(f.vars_ptr());
  for (auto& [m, c] : acc) b.add(m, c);
  return std::move(b).build();
}

Poly partial(const Poly& f, std::size_t var) {
  return diff_apply(DiffOp::variable(f.vars_ptr(), var), f);
}

std::vector<Monomial> mono_basis(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  if (nvars == 0) return out;
  // Descending lex: first variable takes the largest exponent first.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

Rational eval_poly(const Poly& f, std::span<const Rational> point) {
  require(point.size() == f.vars().size(), "evaluation point length mismatch");
  std::vector<std::vector<Rational>> powers(point.size());
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
      v *= pw[m[i]];
    }
    sum += v;
  }
  return sum;
}

Poly linear_change(const Poly& f, const RationalMatrix& m) {
  const std::size_t n = f.vars().size();
  require(m.rows() == n && m.cols() == n, "substitution matrix dimension mismatch");
  require(rank(m) == n, "substitution matrix is singular");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) {
    Poly li(f.vars_ptr());
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) li += Poly::variable(f.vars_ptr(), j) * m(i, j);
    images.push_back(std::move(li));
  }
  std::vector<std::vector<Poly>> powers(n);
  Poly out(f.vars_ptr());
  for (const auto& [mono, c] : f.terms()) {
    Poly term = Poly::constant(f.vars_ptr(), c);
    for (std::size_t i = 0; i < n; ++i) {
      if (!mono[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(f.vars_ptr(), 1));
      while (pw.size() <= mono[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[mono[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace llab
