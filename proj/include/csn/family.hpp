#pragma once

#include <cstdint>
#include <vector>

#include "csn/configuration.hpp"

namespace csn {

using BigInt = mpz_class;

BigInt binomial(int m, int k);

/// Family of s-subsets of [m] with pairwise intersections of size ≤ s/2.
struct SetFamily {
  int m = 0;
  int s = 0;
  std::vector<std::vector<int>> members;  // 0-based, each increasing

  /// Re-verifies the pairwise intersection bound.
  bool intersection_bound_holds() const;
};

enum class FamilyOrder { Lex, SeededShuffle };

/// Greedy scan over all s-subsets in the given order, keeping each
/// subset that meets every accepted one in at most s/2 points. The
/// output is inclusion-maximal because the scan is complete.
SetFamily greedy_family(int m, int s, FamilyOrder order = FamilyOrder::Lex,
                        uint64_t seed = 0);

/// Exact size of the forbidden collection of one member:
/// Σ_{k=1}^{⌈s/2⌉} C(s, ⌊s/2⌋+k) · C(m−s, ⌈s/2⌉−k).
BigInt forbidden_count(int m, int s);

enum class BoundVerdict { RuledOut, Inconclusive };

/// Counting-based nonexistence test: when C(m,s) > 3^d · (1 +
/// forbidden_count(m,s)), no 2s-neighborly cs d-polytope with 2m
/// vertices exists. Exact integer comparison.
BoundVerdict nonexistence_bound(int d, int m, int s);

struct PackingReport {
  bool pass = true;
  int pairs_checked = 0;
  int translates_checked = 0;
  std::vector<std::pair<int, int>> overlapping_pairs;  // indices into the family
  std::vector<int> escaped_translates;                 // members not inside 3P
};

/// For P = conv{±vᵢ} and translates P_A = P + (2/s)Σ_{i∈A} vᵢ over the
/// family: verifies pairwise interior-disjointness (separating
/// hyperplane LPs; touching allowed) and P_A ⊆ 3P (membership LPs).
/// Requires the configuration to be certified 2s-neighborly, else
/// throws PreconditionError.
PackingReport translate_packing_check(const CsConfiguration& c, int s,
                                      const SetFamily& fam);

}  // namespace csn
