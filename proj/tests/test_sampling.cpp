#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csn/dominance.hpp"
#include "csn/face.hpp"
#include "csn/sampling.hpp"
#include "csn/transform.hpp"

using namespace csn;

TEST_CASE("rationalize rounds to the dyadic grid") {
  CHECK(rationalize(0.5, 4) == Rat(1, 2));
  CHECK(rationalize(-1.0, 32) == Rat(-1));
  CHECK(rationalize(0.3, 2) == Rat(1, 4));
  CHECK_THROWS_AS(rationalize(1.0, 63), ParseError);
}

TEST_CASE("gaussian configurations are seeded and well formed") {
  CsConfiguration a = sample_gaussian_configuration(6, 3, 1);
  CHECK(a.count() == 6);
  CHECK(a.dim() == 3);
  CHECK(rank(a.as_matrix()) == 3);

  CsConfiguration b = sample_gaussian_configuration(6, 3, 1);
  for (int i = 0; i < 6; ++i) CHECK(a.vector(i) == b.vector(i));

  CsConfiguration c = sample_gaussian_configuration(6, 3, 2);
  bool differs = false;
  for (int i = 0; i < 6; ++i)
    if (a.vector(i) != c.vector(i)) differs = true;
  CHECK(differs);

  CHECK_THROWS_AS(sample_gaussian_configuration(3, 3, 1), ParseError);
}

TEST_CASE("sampled transforms certify end to end") {
  CsConfiguration t = sample_gaussian_configuration(6, 3, 77, 8);
  NeighborlinessReport rep = max_neighborliness(t);
  CHECK(rep.k_max >= 0);
  CHECK(rep.k_max <= 6);
  // Cross-check against the primal oracle through the inverse transform.
  CsConfiguration primal = inverse_transform(t);
  CHECK(max_neighborliness_primal(primal).k_max == rep.k_max);
}

TEST_CASE("random orthogonal matrices are exactly orthogonal") {
  for (int d : {1, 2, 3, 5}) {
    Matrix u = random_orthogonal(d, 31337 + d);
    Matrix gram = u.transposed() * u;
    CHECK(gram == Matrix::identity(d));
    CHECK(determinant(u).abs() == Rat(1));
  }
  Matrix u1 = random_orthogonal(1, 9);
  CHECK(u1.at(0, 0).abs() == Rat(1));

  // Seeded determinism.
  CHECK(random_orthogonal(4, 5) == random_orthogonal(4, 5));
}

TEST_CASE("kashin configurations") {
  CsConfiguration k1 = kashin_configuration(1, 3);
  CHECK(k1.count() == 2);
  CHECK(!is_valid_vertex_transform(k1).valid);

  for (int d : {2, 3, 4}) {
    CsConfiguration k = kashin_configuration(d, 11 * d);
    CHECK(k.count() == 2 * d);
    CHECK(k.dim() == d);
    CHECK(rank(k.as_matrix()) == d);
  }
}

TEST_CASE("volume ratio values and bound") {
  VolumeRatioResult r1 = volume_ratio(1);
  CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!r1.pi_free_power.has_value());

  VolumeRatioResult r2 = volume_ratio(2);
  CHECK(r2.value == doctest::Approx(std::sqrt(4.0 / M_PI)).epsilon(1e-12));
  REQUIRE(r2.pi_free_power.has_value());
  CHECK(*r2.pi_free_power == Rat(4));

  double prev = 0.0;
  for (int d = 1; d <= 1000; ++d) {
    VolumeRatioResult r = volume_ratio(d);
    CHECK(r.value <= r.bound + 1e-12);
    CHECK(r.value >= prev - 1e-9);  // observed monotone growth
    prev = r.value;
  }
}

TEST_CASE("even-dimension rational parts match the float path") {
  for (int d : {2, 4, 6, 10, 16}) {
    VolumeRatioResult r = volume_ratio(d);
    REQUIRE(r.pi_free_power.has_value());
    double reconstructed =
        std::pow(r.pi_free_power->to_double() / std::pow(M_PI, d / 2.0), 1.0 / d);
    CHECK(r.value == doctest::Approx(reconstructed).epsilon(1e-10));
  }
}

TEST_CASE("gg margin on the hexagon line") {
  CsConfiguration t(Role::Transform, 1, {{Rat(1)}, {Rat(1)}, {Rat(-1)}});
  DistortionReport rep = gg_margin(t, 2);
  CHECK(rep.exact);
  CHECK(rep.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  double rate = std::sqrt((1.0 + std::log(1.5)) / 2.0);
  CHECK(rep.implied_constant == doctest::Approx((1.0 / std::sqrt(3.0)) / rate).epsilon(1e-9));
  CHECK(rep.implied_constant == doctest::Approx(0.688723).epsilon(1e-4));
  CHECK_THROWS_AS(gg_margin(t, 1), PreconditionError);
}

TEST_CASE("kashin margin in dimension one is exactly 1/8") {
  Matrix u = Matrix::identity(1);
  DistortionReport rep = kashin_margin(u, 50, 7);
  CHECK(rep.value == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("kashin margin is seed deterministic") {
  Matrix u = random_orthogonal(3, 21);
  DistortionReport a = kashin_margin(u, 200, 5);
  DistortionReport b = kashin_margin(u, 200, 5);
  CHECK(a.value == b.value);
}
