#include "csn/sampling.hpp"

#include <cmath>

#include "csn/family.hpp"

namespace csn {

double GaussianStream::uniform01() {
  return (double)(eng_() >> 11) * 0x1.0p-53;
}

double GaussianStream::gaussian() {
  if (cached_) {
    double v = *cached_;
    cached_.reset();
    return v;
  }
  double a = uniform01(), b = uniform01();
  if (a < 1e-300) a = 1e-300;
  double r = std::sqrt(-2.0 * std::log(a));
  cached_ = r * std::sin(2.0 * M_PI * b);
  return r * std::cos(2.0 * M_PI * b);
}

Rat rationalize(double x, unsigned precision_bits) {
  if (precision_bits > 62) throw ParseError("precision above 62 bits is unsupported");
  double scaled = std::nearbyint(std::ldexp(x, int(precision_bits)));
  if (!std::isfinite(scaled) || std::fabs(scaled) > 9.0e18)
    throw DomainError("value out of rationalization range");
  return Rat(static_cast<long long>(scaled), 1LL << precision_bits);
}

CsConfiguration sample_gaussian_configuration(int m, int n, uint64_t seed,
                                              unsigned precision_bits) {
  if (n < 1 || m <= n) throw ParseError("need 1 <= n < m");
  GaussianStream g(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> rows(m, Vec(n));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = rationalize(g.gaussian(), precision_bits);
    bool zero_row = false;
    for (const Vec& r : rows)
      if (is_zero(r)) zero_row = true;
    if (zero_row || rank(Matrix::from_rows(rows, n)) < n) continue;
    return CsConfiguration(Role::Transform, n, std::move(rows));
  }
  throw DomainError("sampler failed to draw a spanning configuration");
}

namespace {

// Exactly-unit rational vector near the float direction t (‖t‖₂ ≈ 1):
// rationalize the inverse stereographic parameters, then map back
// through the rational-sphere parametrization, which is exact.
Vec snap_to_unit_sphere(const std::vector<double>& t, unsigned precision_bits) {
  int k = int(t.size());
  if (k == 1) return {Rat(t[0] >= 0 ? 1 : -1)};
  double last = t[k - 1];
  bool flip = last > 0.5;  // keep the projection pole well away
  if (flip) last = -last;
  std::vector<Rat> a(k - 1);
  for (int i = 0; i < k - 1; ++i)
    a[i] = rationalize((flip ? -t[i] : t[i]) / (1.0 - last), precision_bits);
  Rat norm2;
  for (const Rat& ai : a) norm2 += ai * ai;
  Rat denom = norm2 + Rat(1);
  Vec u(k);
  for (int i = 0; i < k - 1; ++i) u[i] = Rat(2) * a[i] / denom;
  u[k - 1] = (norm2 - Rat(1)) / denom;
  if (flip)
    for (Rat& x : u) x = -x;
  return u;
}

}  // namespace

Matrix random_orthogonal(int d, uint64_t seed) {
  if (d < 1) throw ParseError("dimension must be positive");
  GaussianStream g(seed);
  Matrix u = Matrix::identity(d);

  for (int j = 0; j + 1 < d; ++j) {
    int k = d - j;
    std::vector<double> dir(k);
    double norm = 0.0;
    for (int i = 0; i < k; ++i) {
      dir[i] = g.gaussian();
      norm += dir[i] * dir[i];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      dir.assign(k, 0.0);
      dir[0] = 1.0;
      norm = 1.0;
    }
    for (double& x : dir) x /= norm;
    Vec w = snap_to_unit_sphere(dir, 24);

    // Apply H = I − 2wwᵀ on the trailing k×k block, from the right.
    for (int r = 0; r < d; ++r) {
      Rat proj;
      for (int c = 0; c < k; ++c) proj += u.at(r, j + c) * w[c];
      if (proj.is_zero()) continue;
      Rat two_proj = Rat(2) * proj;
      for (int c = 0; c < k; ++c) u.at(r, j + c) -= two_proj * w[c];
    }
  }

  // Random diagonal of signs.
  for (int c = 0; c < d; ++c) {
    if (g.uniform01() < 0.5) continue;
    for (int r = 0; r < d; ++r) u.at(r, c) = -u.at(r, c);
  }
  return u;
}

CsConfiguration kashin_configuration(int d, uint64_t seed) {
  if (d < 1) throw ParseError("dimension must be positive");
  Matrix u = random_orthogonal(d, seed);
  std::vector<Vec> rows;
  rows.reserve(2 * d);
  for (int i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = Rat(1);
    rows.push_back(std::move(e));
  }
  for (int i = 0; i < d; ++i) rows.push_back(u.col(i));
  return CsConfiguration(Role::Transform, d, std::move(rows));
}

VolumeRatioResult volume_ratio(int d) {
  if (d < 1) throw ParseError("dimension must be positive");
  // log R = (1/d)·(d log 2 + (d/2) log d + log Γ(d/2+1) − log d! − (d/2) log π)
  double logr = d * std::log(2.0) + 0.5 * d * std::log((double)d) +
                std::lgamma(0.5 * d + 1.0) - std::lgamma((double)d + 1.0) -
                0.5 * d * std::log(M_PI);
  VolumeRatioResult out;
  out.value = std::exp(logr / d);
  out.bound = std::sqrt(2.0 * M_E / M_PI);
  if (d % 2 == 0) {
    // R^d · π^{d/2} = 2^d · d^{d/2} · (d/2)! / d!  is exactly rational.
    BigInt num, dpow, half_fact, dfact;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, d);
    mpz_ui_pow_ui(dpow.get_mpz_t(), d, d / 2);
    mpz_fac_ui(half_fact.get_mpz_t(), d / 2);
    mpz_fac_ui(dfact.get_mpz_t(), d);
    mpq_class q(num * dpow * half_fact);
    q /= mpq_class(dfact);
    out.pi_free_power = Rat(q);
  }
  return out;
}

DistortionReport gg_margin(const CsConfiguration& t, int d) {
  int m = t.count();
  int n = t.dim();
  if (d != m - n) throw PreconditionError("codimension must equal m - n");
  if (d < 1) throw PreconditionError("codimension must be positive");
  DistortionOutcome dist = euclidean_l1_distortion(t);
  double rate = std::sqrt((1.0 + std::log((double)m / d)) / d);
  DistortionReport rep;
  rep.value = dist.value;
  rep.exact = dist.exact;
  rep.samples = dist.samples;
  rep.implied_constant = dist.value / rate;
  return rep;
}

DistortionReport kashin_margin(const Matrix& u, int samples, uint64_t seed) {
  int d = u.rows();
  if (d < 1 || u.cols() != d) throw PreconditionError("U must be square");
  double r = volume_ratio(d).value;
  double scale = std::sqrt((double)d) / (4.0 * r * r);

  std::vector<std::vector<double>> uf(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) uf[i][j] = u.at(i, j).to_double();

  GaussianStream g(seed);
  double worst = 0.0;
  for (int it = 0; it < samples; ++it) {
    std::vector<double> x(d);
    double norm = 0.0;
    for (int i = 0; i < d; ++i) {
      x[i] = g.gaussian();
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    double l1 = 0.0, l1_rot = 0.0;
    for (int i = 0; i < d; ++i) {
      l1 += std::fabs(x[i] / norm);
      double coord = 0.0;
      for (int j = 0; j < d; ++j) coord += uf[j][i] * x[j];  // (Uᵀx)_i
      l1_rot += std::fabs(coord / norm);
    }
    double ratio = scale / (l1_rot + l1);
    if (ratio > worst) worst = ratio;
  }
  DistortionReport rep;
  rep.value = worst;
  rep.exact = false;
  rep.samples = samples;
  rep.implied_constant = worst;
  return rep;
}

}  // namespace csn
