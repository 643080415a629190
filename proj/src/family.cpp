#include "csn/family.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "csn/dominance.hpp"
#include "csn/face.hpp"
#include "csn/lp.hpp"
#include "csn/transform.hpp"

namespace csn {

BigInt binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  return r;
}

bool SetFamily::intersection_bound_holds() const {
  std::vector<uint64_t> masks;
  masks.reserve(members.size());
  for (const auto& a : members) {
    uint64_t mk = 0;
    for (int i : a) mk |= uint64_t(1) << i;
    masks.push_back(mk);
  }
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = i + 1; j < masks.size(); ++j)
      if (2 * __builtin_popcountll(masks[i] & masks[j]) > s) return false;
  return true;
}

namespace {

void check_family_params(int m, int s) {
  if (s < 1 || 2 * s > m || m > 63)
    throw ParseError("family parameters need 1 <= s <= m/2 and m <= 63");
}

std::vector<uint64_t> all_subsets_lex(int m, int s) {
  std::vector<uint64_t> out;
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    uint64_t mk = 0;
    for (int i : idx) mk |= uint64_t(1) << i;
    out.push_back(mk);
    int pos = s - 1;
    while (pos >= 0 && idx[pos] == m - s + pos) --pos;
    if (pos < 0) return out;
    ++idx[pos];
    for (int q = pos + 1; q < s; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// Fisher–Yates with an explicit modulo draw; std::shuffle leaves the
// permutation unspecified across library versions.
void deterministic_shuffle(std::vector<uint64_t>& v, uint64_t seed) {
  std::mt19937_64 eng(seed);
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = size_t(eng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

SetFamily greedy_family(int m, int s, FamilyOrder order, uint64_t seed) {
  check_family_params(m, s);
  std::vector<uint64_t> candidates = all_subsets_lex(m, s);
  if (order == FamilyOrder::SeededShuffle) deterministic_shuffle(candidates, seed);

  std::vector<uint64_t> accepted;
  for (uint64_t cand : candidates) {
    bool ok = true;
    for (uint64_t a : accepted) {
      if (2 * __builtin_popcountll(cand & a) > s) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back(cand);
  }

  SetFamily fam;
  fam.m = m;
  fam.s = s;
  for (uint64_t mk : accepted) {
    std::vector<int> mem;
    for (int i = 0; i < m; ++i)
      if (mk & (uint64_t(1) << i)) mem.push_back(i);
    fam.members.push_back(std::move(mem));
  }
  return fam;
}

BigInt forbidden_count(int m, int s) {
  check_family_params(m, s);
  int half_down = s / 2;
  int half_up = (s + 1) / 2;
  BigInt total = 0;
  for (int k = 1; k <= half_up; ++k)
    total += binomial(s, half_down + k) * binomial(m - s, half_up - k);
  return total;
}

BoundVerdict nonexistence_bound(int d, int m, int s) {
  check_family_params(m, s);
  if (d < 1) throw ParseError("dimension must be positive");
  BigInt pow3;
  mpz_ui_pow_ui(pow3.get_mpz_t(), 3, d);
  BigInt lhs = binomial(m, s);
  BigInt rhs = pow3 * (1 + forbidden_count(m, s));
  return lhs > rhs ? BoundVerdict::RuledOut : BoundVerdict::Inconclusive;
}

namespace {

std::vector<Vec> signed_vertices(const CsConfiguration& c) {
  std::vector<Vec> verts;
  verts.reserve(2 * c.count());
  for (int i = 0; i < c.count(); ++i) {
    verts.push_back(c.vector(i));
    verts.push_back(scale(c.vector(i), Rat(-1)));
  }
  return verts;
}

Vec translate_offset(const CsConfiguration& c, int s, const std::vector<int>& a) {
  Vec t(c.dim());
  for (int i : a) t = add(t, c.vector(i));
  return scale(t, Rat(2, s));
}

// Interiors of conv(pa) and conv(pb) are disjoint iff some hyperplane
// ⟨a,·⟩ = b has one hull on each side (touching allowed), with a ≠ 0
// pinned by sign-pattern enumeration of Σ|a_i| = 1.
bool interiors_disjoint(const std::vector<Vec>& pa, const std::vector<Vec>& pb, int d) {
  for (uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<int> sigma(d, 1);
    for (int j = 1; j < d; ++j)
      if (mask & (1u << (j - 1))) sigma[j] = -1;
    for (int orient : {0, 1}) {
      LpProblem lp(d + 1);  // (a, b)
      Vec norm(d + 1);
      for (int j = 0; j < d; ++j) {
        Vec sgn_row(d + 1);
        sgn_row[j] = Rat(sigma[j]);
        lp.add_ge(std::move(sgn_row), Rat(0));
        norm[j] = Rat(sigma[j]);
      }
      lp.add_eq(std::move(norm), Rat(1));
      const std::vector<Vec>& below = orient == 0 ? pa : pb;
      const std::vector<Vec>& above = orient == 0 ? pb : pa;
      for (const Vec& x : below) {
        Vec row(d + 1);
        for (int j = 0; j < d; ++j) row[j] = x[j];
        row[d] = Rat(-1);
        lp.add_le(std::move(row), Rat(0));
      }
      for (const Vec& y : above) {
        Vec row(d + 1);
        for (int j = 0; j < d; ++j) row[j] = y[j];
        row[d] = Rat(-1);
        lp.add_ge(std::move(row), Rat(0));
      }
      if (lp_solve(lp).feasible()) return true;
    }
  }
  return false;
}

// w ∈ conv(points) as an exact feasibility LP over the barycentric weights.
bool in_hull(const std::vector<Vec>& points, const Vec& w, int d) {
  int npts = int(points.size());
  LpProblem lp(npts);
  for (int j = 0; j < d; ++j) {
    Vec row(npts);
    for (int i = 0; i < npts; ++i) row[i] = points[i][j];
    lp.add_eq(std::move(row), w[j]);
  }
  lp.add_eq(Vec(npts, Rat(1)), Rat(1));
  for (int i = 0; i < npts; ++i) lp.mark_nonneg(i);
  return lp_solve(lp).feasible();
}

}  // namespace

PackingReport translate_packing_check(const CsConfiguration& c, int s,
                                      const SetFamily& fam) {
  if (c.role() != Role::Primal)
    throw PreconditionError("packing check needs a primal configuration");
  if (fam.m != c.count() || fam.s != s)
    throw PreconditionError("family does not match the configuration");
  for (const auto& mem : fam.members) {
    if (int(mem.size()) != s) throw PreconditionError("family member of wrong size");
    for (int i : mem)
      if (i < 0 || i >= c.count()) throw PreconditionError("family index out of range");
  }

  // 2s-neighborliness gate, certified through the transform.
  NeighborlinessReport rep = max_neighborliness(cs_transform(c));
  if (rep.k_max < 2 * s)
    throw PreconditionError("configuration is only " + std::to_string(rep.k_max) +
                            "-neighborly; packing needs " + std::to_string(2 * s));

  int d = c.dim();
  std::vector<Vec> base = signed_vertices(c);
  std::vector<Vec> tripled;
  for (const Vec& v : base) tripled.push_back(scale(v, Rat(3)));

  std::vector<std::vector<Vec>> translated(fam.members.size());
  std::vector<Vec> offsets(fam.members.size());
  for (size_t a = 0; a < fam.members.size(); ++a) {
    offsets[a] = translate_offset(c, s, fam.members[a]);
    for (const Vec& v : base) translated[a].push_back(add(v, offsets[a]));
  }

  PackingReport report;
  for (size_t a = 0; a < fam.members.size(); ++a) {
    for (size_t b = a + 1; b < fam.members.size(); ++b) {
      ++report.pairs_checked;
      if (!interiors_disjoint(translated[a], translated[b], d)) {
        report.pass = false;
        report.overlapping_pairs.emplace_back(int(a), int(b));
      }
    }
  }
  for (size_t a = 0; a < fam.members.size(); ++a) {
    ++report.translates_checked;
    for (const Vec& w : translated[a]) {
      if (!in_hull(tripled, w, d)) {
        report.pass = false;
        report.escaped_translates.push_back(int(a));
        break;
      }
    }
  }
  return report;
}

}  // namespace csn
