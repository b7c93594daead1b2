#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace llab {

/// Ordered variable names, optionally partitioned into an x-block followed by
/// a u-block. The dual variable of `x0` prints as `X0`.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names,
                       std::optional<std::size_t> x_block_size = std::nullopt);

  static std::shared_ptr<const VariableSet> make(
      std::vector<std::string> names,
      std::optional<std::size_t> x_block_size = std::nullopt) {
    return std::make_shared<const VariableSet>(std::move(names), x_block_size);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::string& dual_name(std::size_t i) const { return duals_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> dual_index_of(std::string_view name) const;

  bool has_split() const { return x_block_.has_value(); }
  /// Number of x-block variables; requires a split.
  std::size_t x_count() const;
  std::size_t u_count() const { return size() - x_count(); }
  bool in_u_block(std::size_t i) const { return has_split() && i >= *x_block_; }

  /// Same names in the same order; the split is metadata and is not compared.
  bool same_names(const VariableSet& other) const { return names_ == other.names_; }
  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_ && a.x_block_ == b.x_block_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> duals_;
  std::optional<std::size_t> x_block_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

/// Exponent vector indexed by a VariableSet.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps);

  std::size_t size() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  /// Lexicographic on exponents: larger leading exponent compares greater.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial over Q. Terms are kept in descending lex order with no
/// zero coefficients; the zero polynomial has an empty term list and no degree.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarsPtr vars, const Rational& c);
  static Poly variable(VarsPtr vars, std::size_t i);
  static Poly monomial(VarsPtr vars, Monomial m, const Rational& c = 1);
  static Poly from_terms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& vars_ptr() const { return vars_; }
  const VariableSet& vars() const { return *vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; throws InvalidArgument on the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  /// True when every term only involves u-block variables (requires a split).
  bool in_u_subring() const;
  /// Same polynomial viewed over a different VariableSet with identical names.
  Poly with_vars(VarsPtr vars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(unsigned e) const;

  /// Compares names and terms; split metadata is ignored.
  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text in the polynomial grammar, e.g. "x*u^2 + y*u*v - 1/2*z*v^2".
  std::string to_string() const;

 private:
  friend class PolyBuilder;
  VarsPtr vars_;
  std::vector<Term> terms_;
};

/// Element of the dual ring Q = K[X_0..X_N] acting by differentiation.
class DiffOp {
 public:
  explicit DiffOp(Poly p) : p_(std::move(p)) {}
  static DiffOp monomial(VarsPtr vars, Monomial m) {
    return DiffOp(Poly::monomial(std::move(vars), std::move(m)));
  }
  static DiffOp variable(VarsPtr vars, std::size_t i) {
    return DiffOp(Poly::variable(std::move(vars), i));
  }

  const Poly& poly() const { return p_; }
  const VariableSet& vars() const { return p_.vars(); }
  unsigned degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }
  /// True if no term involves an x-block variable.
  bool in_u_subring() const { return p_.in_u_subring(); }

  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) { return DiffOp(a.p_ * b.p_); }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.p_ == b.p_; }

  /// Printed with dual names, e.g. "X0*U2".
  std::string to_string() const;

 private:
  Poly p_;
};

/// Accumulates terms and emits a canonical Poly.
class PolyBuilder {
 public:
  explicit PolyBuilder(VarsPtr vars) : vars_(std::move(vars)) {}
  void add(const Monomial& m, const Rational& c);
  Poly build() &&;

 private:
  VarsPtr vars_;
  std::vector<Poly::Term> pending_;
};

struct ParseOptions {
  bool allow_inhomogeneous = false;
};

/// Parses the grammar
///   poly := ['-'] term (('+'|'-') term)* ; term := coeff ('*' factor)* | factor ('*' factor)*
///   factor := ident ('^' uint)? ; coeff := int | int '/' uint
Poly parse_poly(std::string_view text, VarsPtr vars, ParseOptions opts = {});
/// Same grammar over the dual names (X0, U1, ...).
DiffOp parse_diffop(std::string_view text, VarsPtr vars);

/// alpha(f): X_i acts as d/dx_i, products compose. Plain partial derivatives,
/// so X^a(x^b) = b!/(b-a)! x^(b-a).
Poly diff_apply(const DiffOp& alpha, const Poly& f);
Poly partial(const Poly& f, std::size_t var);

/// All degree-k monomials in `nvars` variables, descending lex order.
std::vector<Monomial> mono_basis(std::size_t nvars, unsigned k);

Rational eval_poly(const Poly& f, std::span<const Rational> point);

/// f(M x): substitutes x_i -> sum_j M(i,j) x_j. M must be invertible.
Poly linear_change(const Poly& f, const RationalMatrix& m);

}  // namespace llab
