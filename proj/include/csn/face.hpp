#pragma once

#include <optional>

#include "csn/configuration.hpp"
#include "csn/lp.hpp"

namespace csn {

/// Supporting hyperplane ⟨a,·⟩ = b that exposes a face: equality on the
/// chosen signed vectors, strict inequality on every other one.
struct FaceCertificate {
  Vec normal;
  Rat offset;
};

/// Decides whether {δᵢvᵢ : i ∈ I} is the vertex set of a face of
/// conv{±v₁,…,±vₘ}, by feasibility of the supporting-hyperplane LP with
/// the strict part written as a gap of 1 (certificates are scale free).
std::optional<FaceCertificate> is_face_primal(const CsConfiguration& c,
                                              const SignedSubset& s);

/// True when some direction is maximized over all 2m signed vectors at
/// δᵢvᵢ and minimized at δⱼvⱼ with max > min.
bool antipodal_pair(const CsConfiguration& c, int i, int sign_i, int j, int sign_j);

struct AntipodalityResult {
  bool antipodal;
  // Failing signed-vertex pair when not antipodal.
  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> witness;
};

/// Checks every unordered pair of signed vertices.
AntipodalityResult is_antipodal_polytope(const CsConfiguration& c);

struct PrimalNeighborliness {
  int k_max;
  // Size of the first failing subset (= k_max + 1) or nullopt when every
  // subset up to size m is a face.
  std::optional<int> first_failure;
  std::optional<SignedSubset> failing_subset;
};

/// Exhaustive primal oracle: largest k such that every signed subset of
/// size k is a face. Intended for small m.
PrimalNeighborliness max_neighborliness_primal(const CsConfiguration& c);

}  // namespace csn
