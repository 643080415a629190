#include "csn/dominance.hpp"

#include <algorithm>
#include <random>

#include "csn/transform.hpp"

namespace csn {

namespace {

template <typename F>
bool for_each_subset(int m, int k, F&& f) {
  if (k > m) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(idx)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

Vec signed_sum(const CsConfiguration& t, const std::vector<int>& subset,
               const std::vector<int>& delta) {
  Vec p(t.dim());
  for (size_t k = 0; k < subset.size(); ++k)
    p = add(p, scale(t.vector(subset[k]), Rat(delta[k])));
  return p;
}

// Builds the certificate from an unnormalized witness direction.
DominanceCertificate finish_certificate(const CsConfiguration& t,
                                        const std::vector<int>& subset, Vec u) {
  int m = t.count();
  std::vector<int> sigma(m, 1);
  Rat total;
  std::vector<Rat> inner(m);
  for (int l = 0; l < m; ++l) {
    inner[l] = dot(t.vector(l), u);
    if (inner[l].sign() < 0) sigma[l] = -1;
    total += inner[l].abs();
  }
  if (total.is_zero()) throw DomainError("dominance witness is orthogonal to all vectors");
  u = scale(u, Rat(1) / total);
  if (sigma[0] < 0) {
    for (int& s : sigma) s = -s;
    u = scale(u, Rat(-1));
  }
  return DominanceCertificate{subset, std::move(sigma), std::move(u)};
}

// Support LP: max ⟨p,u⟩ over Σ_{l∉I} |⟨v̄_l,u⟩| ≤ 1 (the dual of the
// gauge LP of the complement zonotope). Value ≥ 1 or unboundedness is
// exactly the failure of the dual face test for this sign choice.
struct SupportOutcome {
  bool dominant;
  Vec u;  // populated when dominant
};

SupportOutcome support_probe(const CsConfiguration& t, const std::vector<int>& subset,
                             const Vec& p) {
  int m = t.count();
  int n = t.dim();
  std::vector<int> outside;
  for (int l = 0; l < m; ++l)
    if (!std::binary_search(subset.begin(), subset.end(), l)) outside.push_back(l);
  int g = int(outside.size());

  // Jointly scaling the generators and p keeps the optimum and the
  // threshold at 1 unchanged while the tableau starts on integers.
  Rat lcm = integerizing_scale(t.vectors());
  Vec point = scale(p, lcm);

  LpProblem lp(n + g);
  for (int k = 0; k < g; ++k) {
    Vec up(n + g), dn(n + g);
    Vec v = scale(t.vector(outside[k]), lcm);
    for (int j = 0; j < n; ++j) {
      up[j] = v[j];
      dn[j] = -v[j];
    }
    up[n + k] = Rat(-1);
    dn[n + k] = Rat(-1);
    lp.add_le(std::move(up), Rat(0));
    lp.add_le(std::move(dn), Rat(0));
  }
  if (g > 0) {
    Vec cap(n + g);
    for (int k = 0; k < g; ++k) cap[n + k] = Rat(1);
    lp.add_le(std::move(cap), Rat(1));
  }
  for (int k = 0; k < g; ++k) lp.mark_nonneg(n + k);
  Vec obj(n + g);
  for (int j = 0; j < n; ++j) obj[j] = point[j];
  lp.set_objective(std::move(obj), LpSense::Max);

  LpOutcome out = lp_solve(lp);
  if (out.status == LpOutcome::Status::Unbounded) {
    // p is outside the span of the remaining generators; any kernel
    // direction not orthogonal to p certifies dominance outright.
    std::vector<Vec> rows;
    for (int l : outside) rows.push_back(t.vector(l));
    Matrix ker = kernel_columns(Matrix::from_rows(rows, n));
    for (int c = 0; c < ker.cols(); ++c) {
      Vec u = ker.col(c);
      Rat ip = dot(p, u);
      if (ip.is_zero()) continue;
      if (ip.sign() < 0) u = scale(u, Rat(-1));
      return {true, std::move(u)};
    }
    throw DomainError("unbounded support LP without a separating kernel direction");
  }
  if (out.status != LpOutcome::Status::Optimal)
    throw DomainError("support LP did not reach an optimum");
  if (out.value >= Rat(1)) {
    Vec u(out.witness.begin(), out.witness.begin() + n);
    return {true, std::move(u)};
  }
  return {false, {}};
}

}  // namespace

bool singleton_is_dominant(const CsConfiguration& t, int i) {
  if (t.dim() == 0) return false;
  std::vector<int> subset{i};
  return support_probe(t, subset, t.vector(i)).dominant;
}

bool certificate_valid(const CsConfiguration& t, const DominanceCertificate& c) {
  int m = t.count();
  if (int(c.sign_pattern.size()) != m || int(c.witness.size()) != t.dim()) return false;
  if (c.sign_pattern[0] != 1) return false;
  Rat total, on_subset;
  for (int l = 0; l < m; ++l) {
    Rat term = Rat(c.sign_pattern[l]) * dot(t.vector(l), c.witness);
    if (term.sign() < 0) return false;
    total += term;
  }
  if (total != Rat(1)) return false;
  for (int i : c.subset)
    on_subset += Rat(c.sign_pattern[i]) * dot(t.vector(i), c.witness);
  return on_subset >= Rat(1, 2);
}

DominanceResult is_dominant(const CsConfiguration& t, const std::vector<int>& subset,
                            DominanceMethod method) {
  if (subset.empty()) throw PreconditionError("empty subset");
  for (size_t k = 0; k + 1 < subset.size(); ++k)
    if (subset[k] >= subset[k + 1]) throw PreconditionError("subset must be increasing");
  if (subset.front() < 0 || subset.back() >= t.count())
    throw PreconditionError("subset index out of range");

  int m = t.count();
  int n = t.dim();
  if (n == 0) return {false, std::nullopt};

  if (method == DominanceMethod::DualSignEnum) {
    if (m > 30) throw GuardError("sign enumeration needs m <= 30");
    Rat lcm = integerizing_scale(t.vectors());
    std::vector<Vec> scaled;
    scaled.reserve(m);
    for (int l = 0; l < m; ++l) scaled.push_back(scale(t.vector(l), lcm));
    for (uint64_t mask = 0; mask < (uint64_t(1) << (m - 1)); ++mask) {
      std::vector<int> sigma(m, 1);
      for (int l = 1; l < m; ++l)
        if (mask & (uint64_t(1) << (l - 1))) sigma[l] = -1;
      LpProblem lp(n);
      Vec norm_row(n), subset_row(n);
      for (int l = 0; l < m; ++l) {
        Vec row = scale(scaled[l], Rat(sigma[l]));
        norm_row = add(norm_row, row);
        lp.add_ge(row, Rat(0));
      }
      for (int i : subset)
        subset_row = add(subset_row, scale(scaled[i], Rat(sigma[i])));
      lp.add_eq(norm_row, Rat(1));
      lp.add_ge(subset_row, Rat(1, 2));
      LpOutcome out = lp_solve(lp);
      if (out.feasible()) {
        // Undo the scaling so the normalization holds on the raw vectors.
        Vec u = scale(out.witness, lcm);
        return {true, DominanceCertificate{subset, std::move(sigma), std::move(u)}};
      }
    }
    return {false, std::nullopt};
  }

  int k = int(subset.size());
  std::vector<int> delta(k, 1);
  for (uint64_t mask = 0; mask < (uint64_t(1) << (k - 1)); ++mask) {
    for (int i = 1; i < k; ++i) delta[i] = (mask & (uint64_t(1) << (i - 1))) ? -1 : 1;
    Vec p = signed_sum(t, subset, delta);
    SupportOutcome probe = support_probe(t, subset, p);
    if (probe.dominant) {
      DominanceCertificate cert = finish_certificate(t, subset, std::move(probe.u));
      if (!certificate_valid(t, cert))
        throw DomainError("reconstructed dominance certificate failed verification");
      return {true, std::move(cert)};
    }
  }
  return {false, std::nullopt};
}

std::optional<DominanceCertificate> find_dominant_of_size(const CsConfiguration& t,
                                                          int size, DominanceMethod method) {
  std::optional<DominanceCertificate> found;
  for_each_subset(t.count(), size, [&](const std::vector<int>& idx) {
    DominanceResult r = is_dominant(t, idx, method);
    if (r.dominant) {
      found = std::move(r.certificate);
      return false;
    }
    return true;
  });
  return found;
}

std::optional<int> min_dominant_size(const CsConfiguration& t, DominanceMethod method) {
  if (t.dim() == 0) return std::nullopt;
  for (int k = 1; k <= t.count(); ++k)
    if (find_dominant_of_size(t, k, method)) return k;
  return std::nullopt;  // unreachable for spanning configurations with n ≥ 1
}

NeighborlinessReport max_neighborliness(const CsConfiguration& t, DominanceMethod method,
                                        int max_k) {
  NeighborlinessReport rep;
  rep.method = (method == DominanceMethod::DualSignEnum) ? CertifyMethod::DualSignEnum
                                                         : CertifyMethod::DualFaceScan;
  rep.duplicate_warning = t.has_duplicates();
  rep.exact = true;

  int m = t.count();
  if (t.dim() == 0) {
    rep.k_max = m;
    return rep;
  }
  int cap = (max_k < 0 || max_k >= m) ? m : max_k;
  for (int k = 1; k <= cap; ++k) {
    auto cert = find_dominant_of_size(t, k, method);
    if (cert) {
      rep.min_dominant = k;
      rep.witness = std::move(cert);
      rep.k_max = k - 1;
      return rep;
    }
  }
  rep.k_max = cap;
  rep.exact = (cap == m);
  return rep;
}

Rat s_max_norm(const Vec& x, int s) {
  if (s < 1 || s > int(x.size()))
    throw ParseError("s must be between 1 and the vector length");
  Vec mags(x.size());
  for (size_t i = 0; i < x.size(); ++i) mags[i] = x[i].abs();
  std::sort(mags.begin(), mags.end(), [](const Rat& a, const Rat& b) { return b < a; });
  Rat sum;
  for (int i = 0; i < s; ++i) sum += mags[i];
  return sum;
}

Rat subspace_ratio_basis(const Matrix& basis_rows, int s) {
  int m = basis_rows.rows();
  int n = basis_rows.cols();
  if (m > 22) throw GuardError("subspace_ratio is guarded at m <= 22");
  if (s < 1 || s > m) throw ParseError("s must be between 1 and m");
  if (n < 1) throw PreconditionError("subspace must have dimension >= 1");

  // Row scaling only reparameterizes u; every ratio LP value is unchanged.
  Matrix rows_scaled = basis_rows;
  {
    Rat lcm = integerizing_scale(basis_rows.row_list());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) rows_scaled.at(i, j) *= lcm;
  }

  Rat best;
  std::vector<int> sigma(s, 1);
  for_each_subset(m, s, [&](const std::vector<int>& S) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << (s - 1)); ++mask) {
      for (int i = 1; i < s; ++i) sigma[i] = (mask & (uint64_t(1) << (i - 1))) ? -1 : 1;
      // max Σ_{i∈S} σ_i x_i over x ∈ L with ‖x‖₁ ≤ 1, via w ≥ |x|.
      LpProblem lp(n + m);
      for (int l = 0; l < m; ++l) {
        Vec up(n + m), dn(n + m);
        for (int j = 0; j < n; ++j) {
          up[j] = rows_scaled.at(l, j);
          dn[j] = -rows_scaled.at(l, j);
        }
        up[n + l] = Rat(-1);
        dn[n + l] = Rat(-1);
        lp.add_le(std::move(up), Rat(0));
        lp.add_le(std::move(dn), Rat(0));
      }
      Vec cap(n + m);
      for (int l = 0; l < m; ++l) cap[n + l] = Rat(1);
      lp.add_le(std::move(cap), Rat(1));
      for (int l = 0; l < m; ++l) lp.mark_nonneg(n + l);
      Vec obj(n + m);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) obj[j] += Rat(sigma[i]) * rows_scaled.at(S[i], j);
      lp.set_objective(std::move(obj), LpSense::Max);
      LpOutcome out = lp_solve(lp);
      if (out.status != LpOutcome::Status::Optimal)
        throw DomainError("ratio LP did not reach an optimum");
      if (out.value > best) best = out.value;
    }
    return true;
  });
  return best;
}

Rat subspace_ratio(const CsConfiguration& t, int s) {
  return subspace_ratio_basis(t.as_matrix(), s);
}

DistortionOutcome euclidean_l1_distortion_basis(const Matrix& basis_rows, uint64_t seed,
                                                int samples) {
  int m = basis_rows.rows();
  int n = basis_rows.cols();
  if (n < 1) throw PreconditionError("subspace must have dimension >= 1");

  if (m <= 14) {
    // Every extreme point of {x ∈ L : ‖x‖₁ ≤ 1} has n−1 independent
    // vanishing coordinates; enumerate those index sets.
    Rat best;
    for_each_subset(m, n - 1, [&](const std::vector<int>& A) {
      std::vector<Vec> rows;
      rows.reserve(A.size());
      for (int l : A) rows.push_back(basis_rows.row(l));
      Matrix ker = kernel_columns(Matrix::from_rows(rows, n));
      if (ker.cols() != 1) return true;
      Vec x = basis_rows.apply(ker.col(0));
      Rat l1 = l1_norm(x);
      if (l1.is_zero()) return true;
      Rat ratio2 = l2_norm_squared(x) / (l1 * l1);
      if (ratio2 > best) best = ratio2;
      return true;
    });
    DistortionOutcome out;
    out.exact = true;
    out.squared = best;
    out.value = std::sqrt(best.to_double());
    out.samples = 0;
    return out;
  }

  std::mt19937_64 eng(seed);
  auto unit = [&]() {
    // Fixed mapping keeps the stream reproducible for a given seed.
    return (double)(eng() >> 11) * 0x1.0p-53;
  };
  std::vector<std::vector<double>> b(m, std::vector<double>(n));
  for (int l = 0; l < m; ++l)
    for (int j = 0; j < n; ++j) b[l][j] = basis_rows.at(l, j).to_double();

  double best = 0.0;
  for (int it = 0; it < samples; ++it) {
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) {
      double a = unit(), c = unit();
      if (a < 1e-300) a = 1e-300;
      u[j] = std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * M_PI * c);
    }
    double l1 = 0.0, l2sq = 0.0;
    for (int l = 0; l < m; ++l) {
      double x = 0.0;
      for (int j = 0; j < n; ++j) x += b[l][j] * u[j];
      l1 += std::fabs(x);
      l2sq += x * x;
    }
    if (l1 <= 0.0) continue;
    double r = std::sqrt(l2sq) / l1;
    if (r > best) best = r;
  }
  DistortionOutcome out;
  out.exact = false;
  out.value = best;
  out.samples = samples;
  return out;
}

DistortionOutcome euclidean_l1_distortion(const CsConfiguration& t, uint64_t seed,
                                          int samples) {
  return euclidean_l1_distortion_basis(t.as_matrix(), seed, samples);
}

}  // namespace csn
