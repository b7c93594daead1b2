#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace llab {

/// Matrix of Q_k -> R_{d-k}, alpha -> alpha(f). Rows follow
/// mono_basis(n, d-k), columns the monomial operators of mono_basis(n, k).
struct Catalecticant {
  unsigned k = 0;
  std::vector<Monomial> row_monomials;
  std::vector<DiffOp> column_ops;
  RationalMatrix matrix;
};

Catalecticant catalecticant(const Poly& f, unsigned k);

/// Basis of Ann(f)_k (kernel of the catalecticant).
std::vector<DiffOp> ann_basis(const Poly& f, unsigned k);

/// Ordered basis of A_k = Q_k / Ann(f)_k, realized by the derivative space:
/// derived[i] = ops[i](f), and the derived polynomials are independent.
struct AkBasis {
  unsigned k = 0;
  std::vector<DiffOp> ops;
  std::vector<Poly> derived;
  std::size_t prefix_length = 0;

  std::size_t size() const { return ops.size(); }
};

/// Greedy column pivoting over `preferred_prefix` followed by all degree-k
/// monomial operators in lex order. A dependent prefix is an error that names
/// the offending index.
AkBasis ak_basis(const Poly& f, unsigned k, std::span<const DiffOp> preferred_prefix = {});

struct HilbertVector {
  std::vector<std::size_t> dims;

  std::size_t socle_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::string to_string() const;
  friend bool operator==(const HilbertVector&, const HilbertVector&) = default;
};

HilbertVector hilbert_vector(const Poly& f);
bool is_unimodal(const HilbertVector& hv);
bool depends_on_all_vars(const Poly& f);

/// Rank of a family of polynomials over Q.
std::size_t poly_rank(std::span<const Poly> polys);

/// Indices of the greedy (left-to-right) maximal independent subfamily.
std::vector<std::size_t> independent_subset(std::span<const Poly> polys);

/// Coefficient matrix over the union of supports: one row per monomial that
/// occurs, one column per polynomial.
RationalMatrix support_matrix(std::span<const Poly> polys, std::vector<Monomial>* rows = nullptr);

/// Coordinates with respect to a linearly independent family of polynomials.
class SpanCoordinates {
 public:
  explicit SpanCoordinates(std::vector<Poly> basis);

  std::size_t dimension() const { return basis_.size(); }
  /// Throws InvalidArgument if `p` is outside the span.
  std::vector<Rational> coordinates(const Poly& p) const;

 private:
  std::vector<Poly> basis_;
  std::vector<Monomial> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_index_;
  RationalMatrix matrix_;
  std::vector<std::size_t> pivot_rows_;
  RationalMatrix pivot_inverse_;
};

}  // namespace llab
