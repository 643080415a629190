#pragma once

#include <cstdint>
#include <optional>

#include "csn/configuration.hpp"
#include "csn/lp.hpp"

namespace csn {

enum class DominanceMethod { DualSignEnum, DualFaceScan };

/// Witness that an index set I is dominant: a direction u and full sign
/// pattern σ with σ_l⟨v̄_l,u⟩ ≥ 0 for all l, Σ_l σ_l⟨v̄_l,u⟩ = 1 and
/// Σ_{i∈I} σ_i⟨v̄_i,u⟩ ≥ 1/2. σ is normalized so its first entry is +1.
struct DominanceCertificate {
  std::vector<int> subset;        // 0-based, increasing
  std::vector<int> sign_pattern;  // length m, entries ±1
  Vec witness;                    // u, length n
};

struct DominanceResult {
  bool dominant;
  std::optional<DominanceCertificate> certificate;
};

/// Exact check of every certificate invariant.
bool certificate_valid(const CsConfiguration& t, const DominanceCertificate& c);

/// Decides dominance of I.
///
/// DualSignEnum solves one feasibility LP per sign pattern (2^{m−1}
/// patterns). DualFaceScan solves one support LP per sign choice on I
/// (2^{|I|−1} patterns): I is dominant iff some signed version of it
/// fails the dual face test, and the support LP optimum — the dual of
/// the gauge LP — is ≥ 1 exactly there, with its optimizer as witness.
DominanceResult is_dominant(const CsConfiguration& t, const std::vector<int>& subset,
                            DominanceMethod method = DominanceMethod::DualFaceScan);

/// Decision-only dominance of the singleton {i}; no certificate built.
bool singleton_is_dominant(const CsConfiguration& t, int i);

/// First dominant subset of the given size in lexicographic order.
std::optional<DominanceCertificate> find_dominant_of_size(
    const CsConfiguration& t, int size,
    DominanceMethod method = DominanceMethod::DualFaceScan);

/// Smallest dominant-subset size; nullopt for dim-0 transforms (no
/// nonzero direction exists).
std::optional<int> min_dominant_size(const CsConfiguration& t,
                                     DominanceMethod method = DominanceMethod::DualFaceScan);

enum class CertifyMethod { DualSignEnum, DualFaceScan, PrimalOracle };

struct NeighborlinessReport {
  int k_max;
  std::optional<int> min_dominant;
  std::optional<DominanceCertificate> witness;
  CertifyMethod method;
  bool exact;              // false when the size search was capped at max_k
  bool duplicate_warning;  // some vᵢ = ±vⱼ: signed vectors not all distinct
};

/// Exact neighborliness via the dominant-subset criterion:
/// k_max = min_dominant − 1, or m when no dominant subset exists.
/// `max_k` caps the searched subset size; a capped run that finds no
/// dominant subset reports k_max = max_k with exact = false.
NeighborlinessReport max_neighborliness(const CsConfiguration& t,
                                        DominanceMethod method = DominanceMethod::DualFaceScan,
                                        int max_k = -1);

/// Sum of the s largest absolute coordinates.
Rat s_max_norm(const Vec& x, int s);

/// sup_{x ∈ L∖0} |||x|||_s / ‖x‖₁ for the subspace L spanned by the
/// columns-as-image of the configuration matrix; exact, via one LP per
/// (s-subset, sign pattern). Guarded at m ≤ 22.
Rat subspace_ratio(const CsConfiguration& t, int s);
Rat subspace_ratio_basis(const Matrix& basis_rows, int s);

struct DistortionOutcome {
  bool exact;
  Rat squared;     // exact mode only: (sup ‖x‖₂/‖x‖₁)²
  double value;    // sqrt of the above, or the sampled lower bound
  int samples;     // 0 in exact mode
};

/// sup_{x ∈ L∖0} ‖x‖₂/‖x‖₁. Exact for m ≤ 14 by enumerating the extreme
/// points of the l1-section of L (each has n−1 independent vanishing
/// coordinates); otherwise a seeded sampled lower bound.
DistortionOutcome euclidean_l1_distortion(const CsConfiguration& t,
                                          uint64_t seed = 1, int samples = 4096);
DistortionOutcome euclidean_l1_distortion_basis(const Matrix& basis_rows,
                                                uint64_t seed = 1, int samples = 4096);

}  // namespace csn
