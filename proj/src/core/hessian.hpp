#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar.hpp"
#include "polynomial.hpp"

namespace llab {

/// Hess^k_f = (ops[i] ops[j] (f))_{i,j} over an ordered basis of A_k.
struct HessianMatrix {
  unsigned k = 0;
  AkBasis basis;
  std::vector<Poly> entries;  // row-major, size() x size()

  std::size_t size() const { return basis.size(); }
  const Poly& at(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
  /// Entries evaluated at a point.
  RationalMatrix evaluate(std::span<const Rational> point) const;
};

HessianMatrix hessian_matrix(const Poly& f, unsigned k, const AkBasis* basis = nullptr);

enum class VanishingMode { Exact, Probabilistic };

const char* to_string(VanishingMode m);

struct VanishingOptions {
  VanishingMode mode = VanishingMode::Probabilistic;
  std::uint64_t seed = 0;
  unsigned trials = 5;
  /// Largest matrix the probabilistic mode escalates to symbolic elimination.
  std::size_t exact_cutoff = 12;
  /// Symbolic elimination even above the cutoff (exact mode always does).
  bool force_exact = false;
  std::size_t max_entry_terms = 60000;
};

struct VanishingVerdict {
  unsigned k = 0;
  std::size_t matrix_size = 0;
  bool vanishes = false;
  VanishingMode mode = VanishingMode::Probabilistic;
  /// Present on every nonvanishing verdict.
  std::optional<std::vector<Rational>> witness_point;
  std::optional<Rational> det_value;
  /// Present on exact vanishing verdicts.
  std::optional<std::string> transcript_hash;
  /// Present on probabilistic vanishing verdicts.
  std::optional<double> error_bound;
  /// Set when symbolic elimination was requested but exceeded its budget.
  std::optional<std::string> note;
};

/// Vanishing test for det of a square polynomial matrix with homogeneous
/// entries of degree `entry_degree`.
VanishingVerdict matrix_det_vanishes(std::span<const Poly> entries, std::size_t n,
                                     unsigned entry_degree, const VanishingOptions& opts);

VanishingVerdict hessian_vanishes(const Poly& f, unsigned k, const VanishingOptions& opts);
/// Same, for a caller-chosen basis of A_k.
VanishingVerdict hessian_vanishes(const Poly& f, const AkBasis& basis,
                                  const VanishingOptions& opts);

/// Verdicts for k = 0..floor(d/2).
std::vector<VanishingVerdict> hess_profile(const Poly& f, const VanishingOptions& opts,
                                           std::optional<unsigned> max_k = std::nullopt);

struct ConeTest {
  bool is_cone = false;
  /// Coefficients c with sum_i c_i f_{X_i} = 0 when is_cone.
  std::vector<Rational> dependency;
};

ConeTest is_cone(const Poly& f);

/// Classical Hessian: the full matrix of second partials in the standard basis.
VanishingVerdict second_partials_det_vanishes(const Poly& f, const VanishingOptions& opts);

/// Per-trial seeds derived deterministically from the user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace llab
