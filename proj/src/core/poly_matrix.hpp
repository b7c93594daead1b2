#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace llab {

/// Integer polynomial with exponents packed 8 bits per variable into a
/// 128-bit word (variable 0 in the top byte), so integer comparison of the
/// packed words is lex order. Supports at most 16 variables and total
/// degree 255.
class PackedPoly {
 public:
  using Packed = unsigned __int128;
  struct Term {
    Packed mono;
    Integer coeff;
  };

  static constexpr std::size_t kMaxVars = 16;
  static constexpr unsigned kMaxDegree = 255;

  PackedPoly() = default;
  static PackedPoly constant(const Integer& c);
  /// `p` scaled by `scale` must have integer coefficients.
  static PackedPoly from_poly(const Poly& p, const Rational& scale);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }

  friend PackedPoly operator*(const PackedPoly& a, const PackedPoly& b);
  friend PackedPoly operator-(const PackedPoly& a, const PackedPoly& b);
  /// Exact quotient; throws Internal if `b` does not divide `a`.
  friend PackedPoly divexact(const PackedPoly& a, const PackedPoly& b);

  Integer evaluate(std::span<const Integer> point, std::size_t nvars) const;
  Poly to_poly(const VarsPtr& vars) const;

 private:
  std::vector<Term> terms_;  // descending, nonzero
  unsigned degree_ = 0;
};

/// Work limit for symbolic elimination; exceeding it raises BudgetExceeded.
struct EliminationBudget {
  std::size_t max_entry_terms = 60000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SymbolicElimination {
  std::size_t size = 0;
  std::size_t rank = 0;
  bool singular = false;
  /// FNV-1a digest of the pivot sequence (positions and sizes) and the rank.
  std::uint64_t transcript_hash = 0;
  /// Nonzero multiple of the determinant when nonsingular.
  std::optional<PackedPoly> determinant_multiple;
};

/// Fraction-free (Bareiss) elimination of a square matrix of homogeneous
/// polynomials over the rational function field. Rows are first scaled to
/// integer coefficients; full pivoting prefers the sparsest pivot.
SymbolicElimination eliminate_symbolic(std::span<const Poly> entries, std::size_t n,
                                       const EliminationBudget& budget = {});

}  // namespace llab
