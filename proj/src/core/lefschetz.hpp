#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar.hpp"
#include "hessian.hpp"
#include "polynomial.hpp"

namespace llab {

/// L = a_0 X_0 + ... + a_N X_N in A_1.
struct LinearForm {
  std::vector<Rational> coeffs;

  DiffOp op(const VarsPtr& vars) const;
  std::string to_string(const VariableSet& vars) const;
  bool is_zero() const;
};

/// Random L with integer coefficients in [-bound, bound], never zero.
LinearForm random_linear_form(std::size_t nvars, std::uint64_t bound, std::uint64_t seed);
/// Parses "U+V", "2*X0 - U1" and the like over the dual names.
LinearForm parse_linear_form(std::string_view text, const VarsPtr& vars);

/// A = Q/Ann(f) in the derivative-space model: A_i is spanned by the
/// independent derivatives ops(f) of ak_basis(f, i). All levels 0..d are
/// built on construction.
class GorensteinAlgebra {
 public:
  explicit GorensteinAlgebra(Poly f);

  const Poly& form() const { return f_; }
  unsigned socle_degree() const { return d_; }
  const AkBasis& basis(unsigned i) const { return bases_.at(i); }
  std::size_t dim(unsigned i) const { return bases_.at(i).size(); }
  HilbertVector hilbert() const;

  /// Matrix of L^k : A_i -> A_{i+k}; column j holds the coordinates of
  /// L^k(derived_i[j]) in the basis of level i+k.
  RationalMatrix mult_map(const LinearForm& l, unsigned i, unsigned k) const;
  std::size_t mult_rank(const LinearForm& l, unsigned i, unsigned k) const;

  /// Rank of Hess^k_f evaluated at the coefficients of L.
  std::size_t hessian_rank_at(const LinearForm& l, unsigned k) const;
  const HessianMatrix& hessian(unsigned k) const { return hessians_.at(k); }

 private:
  Poly f_;
  unsigned d_;
  std::vector<AkBasis> bases_;
  std::vector<SpanCoordinates> coords_;
  std::vector<HessianMatrix> hessians_;
};

RationalMatrix mult_map(const Poly& f, const LinearForm& l, unsigned i, unsigned k);

struct LevelCheck {
  unsigned from = 0;
  unsigned to = 0;
  std::size_t rank = 0;
  std::size_t required = 0;
  bool ok() const { return rank == required; }
};

struct ElementCheck {
  bool holds = false;
  std::vector<LevelCheck> levels;
};

/// SLP for a given L via hess^k(L) != 0 for k = 0..floor(d/2), each checked
/// against the rank of L^{d-2k}: A_k -> A_{d-k}. Disagreement throws Internal.
ElementCheck slp_check_element(const GorensteinAlgebra& a, const LinearForm& l);
/// WLP for a given L: every L: A_i -> A_{i+1} has maximal rank.
ElementCheck wlp_check_element(const GorensteinAlgebra& a, const LinearForm& l);

/// Monomial operators outside K[U] that send f into K[U], independent modulo
/// Ann(f), more numerous than dim K[U]_k.
struct KeyCertificate {
  unsigned k = 0;
  std::vector<DiffOp> ops;
  std::vector<std::size_t> pivot_columns;
  std::size_t s = 0;
  Integer bound;
};

std::optional<KeyCertificate> key_criterion(const Poly& f, unsigned k);
/// Re-checks every property of the certificate from scratch.
bool verify_key_certificate(const Poly& f, const KeyCertificate& cert);

/// Operators alpha of degree k, independent modulo Ann(f), with every first
/// derivative of alpha(f) in K[U]. More than dim K[U]_{deg f - k - 1} of them
/// force L: A_k -> A_{k+1} to have a kernel for every L.
struct ObstructionCertificate {
  unsigned k = 0;
  std::vector<DiffOp> ops;
  std::size_t s = 0;
  Integer bound;
  bool monomial = true;
};

std::optional<ObstructionCertificate> wlp_obstruction(const Poly& f, unsigned k);
bool verify_obstruction_certificate(const Poly& f, const ObstructionCertificate& cert);

enum class LefschetzProperty { SLP, WLP };
enum class Verdict { Holds, Fails, Undetermined };

const char* to_string(LefschetzProperty p);
const char* to_string(Verdict v);

struct FailureCertificate {
  enum class Kind { HessianVanishing, KeyCriterion, WlpObstruction, NonUnimodal };
  Kind kind;
  std::optional<VanishingVerdict> hessian;
  std::optional<KeyCertificate> key;
  std::optional<ObstructionCertificate> obstruction;
  /// For NonUnimodal: the first i < d/2 with h_i > h_{i+1}.
  std::optional<unsigned> drop_level;
};

const char* to_string(FailureCertificate::Kind k);

struct LefschetzReport {
  LefschetzProperty property = LefschetzProperty::SLP;
  Verdict verdict = Verdict::Undetermined;
  /// Failing map A_from -> A_to with the rank a sample L achieves.
  std::optional<LevelCheck> failing_map;
  std::optional<LinearForm> witness;
  std::vector<LevelCheck> witness_levels;
  std::vector<FailureCertificate> certificates;
  HilbertVector hilbert;
  bool unimodal = true;
  std::vector<std::string> notes;
};

struct GenericOptions {
  VanishingOptions vanishing;
  unsigned trials = 8;
  std::uint64_t seed = 0;
};

LefschetzReport slp_generic(const GorensteinAlgebra& a, const GenericOptions& opts);
/// Uses the given profile instead of recomputing it.
LefschetzReport slp_generic(const GorensteinAlgebra& a, const GenericOptions& opts,
                            const std::vector<VanishingVerdict>& profile);
LefschetzReport wlp_generic(const GorensteinAlgebra& a, const GenericOptions& opts);

/// Level i of the map A_i -> A_{i+1} that WLP forces injective or surjective
/// in the middle: q for d = 2q+1, q-1 for d = 2q.
unsigned middle_level(unsigned d);

/// Random bound for generic linear forms, 64(d+1).
std::uint64_t linear_form_bound(unsigned d);

}  // namespace llab
