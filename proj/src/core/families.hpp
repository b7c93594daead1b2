#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar.hpp"
#include "hessian.hpp"
#include "lefschetz.hpp"
#include "polynomial.hpp"

namespace llab {

enum class FamilyKind { Ikeda, Exceptional, Gnp, Perazzo, Permutti, Gn, WlpOdd, ThmWlp, Prop44 };

const char* to_string(FamilyKind k);
FamilyKind parse_family_kind(std::string_view name);

/// Parameters are optional because each kind reads only its own subset.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Ikeda;
  std::optional<int> n, m, d, k, e, r;
  std::string variant;  // gnp: lemma_m2 | maximal | minimal
  std::string case_id;  // prop44: i | ii | iii
  std::uint64_t seed = 0;
  /// Tail polynomials by name (g, h, p, P0, P1, ...) in the polynomial grammar.
  std::map<std::string, std::string> overrides;
};

struct HessClaim {
  unsigned k = 0;
  bool vanishes = false;
};

/// Properties the construction guarantees; unset fields make no claim.
struct Manifest {
  std::vector<HessClaim> hess;
  std::optional<HilbertVector> hilbert;
  /// Individual entries h_k when only a formula is known.
  std::map<unsigned, std::size_t> hilbert_entries;
  std::optional<std::size_t> codimension;
  std::optional<bool> unimodal;
  std::optional<bool> cone;
  /// Smallest k with hess^k = 0.
  std::optional<unsigned> slp_fails_at;
  std::optional<bool> slp_holds;
  /// Level i of the non-injective map A_i -> A_{i+1}.
  std::optional<unsigned> wlp_fails_at;
  std::optional<LinearForm> wlp_witness;
  /// Levels with a key-criterion certificate.
  std::vector<unsigned> key_levels;
  std::optional<std::size_t> key_s;
  std::optional<unsigned> obstruction_level;
  std::optional<std::size_t> obstruction_s;
};

struct FamilyInstance {
  FamilySpec spec;
  Poly f{VarsPtr{}};  // set by every generator
  Manifest manifest;
  std::vector<std::string> notes;
};

FamilyInstance gen_ikeda();
FamilyInstance gen_exceptional(int n, int d, int k,
                               const std::map<std::string, std::string>& overrides = {});
FamilyInstance gen_gnp(int m, std::optional<int> n, int k, int e, const std::string& variant,
                       const std::map<std::string, std::string>& overrides = {});
FamilyInstance gen_perazzo(int m, int n, int d,
                           const std::map<std::string, std::string>& overrides = {});
FamilyInstance gen_permutti(int m, int n, int e, int d,
                            const std::map<std::string, std::string>& overrides = {});
FamilyInstance gen_gn(int m, int n, int r, int e, int d,
                      const std::map<std::string, std::string>& overrides = {});
FamilyInstance gen_wlpodd(int big_n, int d);
FamilyInstance gen_thmwlp(int big_n, int d,
                          const std::map<std::string, std::string>& overrides = {});
FamilyInstance gen_prop44(const std::string& case_id,
                          const std::map<std::string, std::string>& overrides = {});

/// Dispatches on spec.kind; missing required parameters are InvalidArgument.
FamilyInstance generate(const FamilySpec& spec);

struct ManifestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ManifestOptions {
  VanishingOptions vanishing;
  std::uint64_t seed = 0;
  /// Random linear forms that must all fail at the claimed WLP level.
  unsigned random_forms = 20;
};

/// Replays every manifest claim through apolar, hessian and lefschetz.
std::vector<ManifestCheck> verify_manifest(const FamilyInstance& inst, const ManifestOptions& opts);

}  // namespace llab
