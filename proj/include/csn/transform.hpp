#pragma once

#include <optional>

#include "csn/configuration.hpp"
#include "csn/lp.hpp"

namespace csn {

/// Position of a point relative to the zonotope Σ_l [−g_l, g_l]:
/// outside its span, or classified by the exact gauge value (gauge < 1
/// is the relative interior, = 1 the boundary, > 1 outside).
struct GaugeResult {
  enum class Kind { NotInSpan, InRelInterior, OnBoundary, Outside };
  Kind kind;
  Rat gauge;  // meaningful except for NotInSpan

  bool in_rel_interior() const { return kind == Kind::InRelInterior; }
};

/// Exact gauge of p against the zonotope of the generators: minimize t
/// subject to p = Σ c_l g_l, −t ≤ c_l ≤ t. The 2^g sign-sum vertices are
/// never materialized.
GaugeResult zonotope_gauge(const std::vector<Vec>& generators, const Vec& p);

/// Rows of the canonical nullspace basis of the primal matrix; dim is
/// m − d (possibly 0). Defined up to linear isomorphism in general; the
/// canonical basis makes it a function.
CsConfiguration cs_transform(const CsConfiguration& primal);

/// Recovers a primal configuration from a transform; the composition
/// cs_transform ∘ inverse_transform is the identity after
/// canonicalization.
CsConfiguration inverse_transform(const CsConfiguration& transform);

struct VertexTransformResult {
  bool valid;
  std::optional<int> witness;  // first index whose vertex condition fails
};

/// Checks v̄ᵢ ∈ int conv{Σ_{l≠i} ±v̄_l} for every i: the exact criterion
/// for the transform to come from a vertex set. The interior is
/// nonempty only when the remaining generators span, so that is checked
/// first.
VertexTransformResult is_valid_vertex_transform(const CsConfiguration& t);

/// Dual-side face test: {δᵢvᵢ : i ∈ I} is a face of the primal polytope
/// iff Σ_{i∈I} δᵢ v̄ᵢ lies in the relative interior of the zonotope of
/// the remaining generators.
bool is_face_dual(const CsConfiguration& t, const SignedSubset& s);

}  // namespace csn
