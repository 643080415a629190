#include "csn/face.hpp"

namespace csn {

namespace {

// Variables (a₁..a_d, b).
Vec hyperplane_row(const Vec& v, int sign, int d) {
  Vec row(d + 1);
  for (int k = 0; k < d; ++k) row[k] = Rat(sign) * v[k];
  row[d] = Rat(-1);
  return row;
}

}  // namespace

std::optional<FaceCertificate> is_face_primal(const CsConfiguration& c,
                                              const SignedSubset& s) {
  s.check_within(c.count());
  int d = c.dim();
  int m = c.count();

  LpProblem lp(d + 1);
  for (int k = 0; k < s.size(); ++k)
    lp.add_eq(hyperplane_row(c.vector(s.index(k)), s.sign(k), d), Rat(0));
  for (int j = 0; j < m; ++j) {
    for (int sg : {1, -1}) {
      int k = -1;
      for (int t = 0; t < s.size(); ++t)
        if (s.index(t) == j && s.sign(t) == sg) k = t;
      if (k >= 0) continue;  // member of the subset: equality row above
      lp.add_le(hyperplane_row(c.vector(j), sg, d), Rat(-1));
    }
  }

  LpOutcome out = lp_solve(lp);
  if (!out.feasible()) return std::nullopt;
  Vec a(out.witness.begin(), out.witness.begin() + d);
  return FaceCertificate{std::move(a), out.witness[d]};
}

bool antipodal_pair(const CsConfiguration& c, int i, int sign_i, int j, int sign_j) {
  if (i == j && sign_i == sign_j)
    throw PreconditionError("antipodal_pair needs two distinct signed vertices");
  int d = c.dim();
  int m = c.count();
  Vec top = scale(c.vector(i), Rat(sign_i));
  Vec bot = scale(c.vector(j), Rat(sign_j));

  // ⟨a, top⟩ ≥ ⟨a, w⟩ and ⟨a, bot⟩ ≤ ⟨a, w⟩ for every signed vector w,
  // with gap ⟨a, top − bot⟩ ≥ 1 standing in for "distinct hyperplanes".
  LpProblem lp(d);
  for (int l = 0; l < m; ++l) {
    for (int sg : {1, -1}) {
      Vec w = scale(c.vector(l), Rat(sg));
      lp.add_ge(sub(top, w), Rat(0));
      lp.add_le(sub(bot, w), Rat(0));
    }
  }
  lp.add_ge(sub(top, bot), Rat(1));
  return lp_solve(lp).feasible();
}

AntipodalityResult is_antipodal_polytope(const CsConfiguration& c) {
  int m = c.count();
  // Antipode pairs first, then mixed pairs from the highest index down.
  for (int i = m - 1; i >= 0; --i) {
    if (!antipodal_pair(c, i, 1, i, -1))
      return {false, {{{i, 1}, {i, -1}}}};
  }
  for (int i = m - 1; i >= 1; --i) {
    for (int j = i - 1; j >= 0; --j) {
      for (auto [si, sj] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
        if (!antipodal_pair(c, i, si, j, sj))
          return {false, {{{i, si}, {j, sj}}}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

// Visits size-k index subsets in lexicographic order; f returns false to stop.
template <typename F>
bool for_each_subset(int m, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return true;
  for (;;) {
    if (!f(idx)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

PrimalNeighborliness max_neighborliness_primal(const CsConfiguration& c) {
  int m = c.count();
  for (int k = 1; k <= m; ++k) {
    std::optional<SignedSubset> failing;
    for_each_subset(m, k, [&](const std::vector<int>& idx) {
      // Global sign symmetry: a face iff its negation is, so pin sign 0.
      int patterns = 1 << (k - 1);
      for (int mask = 0; mask < patterns; ++mask) {
        std::vector<int> signs(k, 1);
        for (int t = 1; t < k; ++t)
          if (mask & (1 << (t - 1))) signs[t] = -1;
        SignedSubset s(idx, signs);
        if (!is_face_primal(c, s)) {
          failing = std::move(s);
          return false;
        }
      }
      return true;
    });
    if (failing) return {k - 1, k, std::move(failing)};
  }
  return {m, std::nullopt, std::nullopt};
}

}  // namespace csn
