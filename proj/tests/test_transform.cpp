#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "corpus.hpp"
#include "csn/face.hpp"
#include "csn/transform.hpp"

using namespace csn;
using namespace csn::testing;

namespace {

CsConfiguration hexagon() {
  return CsConfiguration(Role::Primal, 2,
                         {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
}

CsConfiguration hexagon_transform() {
  return CsConfiguration(Role::Transform, 1, {{Rat(1)}, {Rat(1)}, {Rat(-1)}});
}

// LP-free gauge oracle: the gauge equals max |⟨p,u⟩| / Σ_l |⟨g_l,u⟩|
// over directions u orthogonal to dim−1 of the generators (the extreme
// points of the dual-norm ball), for p in the span.
GaugeResult oracle_gauge(const std::vector<Vec>& gens, const Vec& p) {
  int dim = int(p.size());
  if (dim == 0 || gens.empty()) {
    if (is_zero(p)) return {GaugeResult::Kind::InRelInterior, Rat(0)};
    return {GaugeResult::Kind::NotInSpan, Rat(0)};
  }
  Matrix g = Matrix::from_rows(gens, dim);
  std::vector<Vec> aug = gens;
  aug.push_back(p);
  if (rank(Matrix::from_rows(aug, dim)) > rank(g))
    return {GaugeResult::Kind::NotInSpan, Rat(0)};

  Rat best(-1);
  int m = int(gens.size());
  int k = rank(g) - 1;  // directions in span(g)ᵀ… enumerated within the span below
  std::vector<int> idx(k >= 0 ? k : 0);
  // Enumerate all subsets of size k of the generators; kernel of those
  // rows inside the span of g gives candidate directions.
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      std::vector<Vec> rows;
      for (int i = 0; i < depth; ++i) rows.push_back(gens[idx[i]]);
      // u must satisfy rows·u = 0 and u ∈ span of the generators;
      // parameterize u = gᵀ w.
      Matrix gt = g.transposed();  // dim×m
      // rows·(gᵀ w) = 0  → (rows·gᵀ) w = 0, w ∈ R^m
      Matrix sys(int(rows.size()), m);
      for (size_t r = 0; r < rows.size(); ++r) {
        Vec rv = rows[r];
        for (int c = 0; c < m; ++c) {
          Rat s;
          for (int j = 0; j < dim; ++j) s += rv[j] * gt.at(j, c);
          sys.at(int(r), c) = s;
        }
      }
      Matrix ker = kernel_columns(sys);
      for (int c = 0; c < ker.cols(); ++c) {
        Vec u = gt.apply(ker.col(c));
        Rat denom;
        for (const Vec& gen : gens) denom += dot(gen, u).abs();
        if (denom.is_zero()) continue;
        Rat val = dot(p, u).abs() / denom;
        if (val > best) best = val;
      }
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (best < Rat(0)) best = Rat(0);
  int cmp = best.compare(Rat(1));
  if (cmp < 0) return {GaugeResult::Kind::InRelInterior, best};
  if (cmp == 0) return {GaugeResult::Kind::OnBoundary, best};
  return {GaugeResult::Kind::Outside, best};
}

}  // namespace

TEST_CASE("hexagon transform is the canonical (1,1,-1)") {
  CsConfiguration t = cs_transform(hexagon());
  CHECK(t.dim() == 1);
  REQUIRE(t.count() == 3);
  CHECK(t.vector(0) == Vec{Rat(1)});
  CHECK(t.vector(1) == Vec{Rat(1)});
  CHECK(t.vector(2) == Vec{Rat(-1)});
}

TEST_CASE("independent sets transform to dimension zero") {
  std::vector<Vec> basis;
  for (int i = 0; i < 3; ++i) {
    Vec e(3);
    e[i] = Rat(1);
    basis.push_back(std::move(e));
  }
  CsConfiguration t = cs_transform(CsConfiguration(Role::Primal, 3, basis));
  CHECK(t.dim() == 0);
  CHECK(t.count() == 3);

  CsConfiguration square(Role::Primal, 2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(cs_transform(square).dim() == 0);
}

TEST_CASE("inverse transform of the hexagon line") {
  CsConfiguration p = inverse_transform(hexagon_transform());
  CHECK(p.dim() == 2);
  REQUIRE(p.count() == 3);
  CHECK(p.vector(0) == Vec{Rat(1), Rat(0)});
  CHECK(p.vector(1) == Vec{Rat(0), Rat(1)});
  CHECK(p.vector(2) == Vec{Rat(1), Rat(1)});
}

TEST_CASE("non-spanning inputs are rejected at construction") {
  CHECK_THROWS_AS(CsConfiguration(Role::Transform, 2, {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}}),
                  RankDeficientError);
}

TEST_CASE("transform round trip is the identity after canonicalization") {
  std::mt19937_64 eng(404);
  CorpusOptions opt;
  opt.require_transformable = true;
  opt.max_m = 7;
  for (int it = 0; it < 30; ++it) {
    CsConfiguration c = random_primal(eng, opt);
    if (c.count() == c.dim()) continue;
    CsConfiguration t = cs_transform(c);
    CsConfiguration c2 = inverse_transform(t);
    CsConfiguration t2 = cs_transform(c2);
    REQUIRE(t2.count() == t.count());
    for (int i = 0; i < t.count(); ++i) CHECK(t2.vector(i) == t.vector(i));

    // The two sides annihilate each other.
    Matrix prod = c.as_matrix().transposed() * t.as_matrix();
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j).is_zero());
  }
}

TEST_CASE("GL(n)-mapped transforms canonicalize identically") {
  std::mt19937_64 eng(4242);
  CorpusOptions opt;
  opt.require_transformable = true;
  for (int it = 0; it < 8; ++it) {
    CsConfiguration c = random_primal(eng, opt);
    if (c.count() == c.dim() || cs_transform(c).dim() == 0) continue;
    CsConfiguration t = cs_transform(c);
    int n = t.dim();
    Matrix map(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) map.at(i, j) = Rat(int(eng() % 7) - 3, 1 + int(eng() % 2));
    } while (determinant(map).is_zero());
    std::vector<Vec> mapped;
    for (const Vec& v : t.vectors()) mapped.push_back(map.apply(v));
    CsConfiguration tm(Role::Transform, n, mapped);
    // Same subspace, same canonical representative.
    CsConfiguration canon_a = cs_transform(inverse_transform(t));
    CsConfiguration canon_b = cs_transform(inverse_transform(tm));
    REQUIRE(canon_a.count() == canon_b.count());
    for (int i = 0; i < canon_a.count(); ++i)
      CHECK(canon_a.vector(i) == canon_b.vector(i));
  }
}

TEST_CASE("zonotope gauge basics") {
  GaugeResult center = zonotope_gauge({{Rat(1)}, {Rat(-1)}}, {Rat(0)});
  CHECK(center.kind == GaugeResult::Kind::InRelInterior);
  CHECK(center.gauge == Rat(0));

  GaugeResult outside = zonotope_gauge({{Rat(-1)}}, {Rat(2)});
  CHECK(outside.kind == GaugeResult::Kind::Outside);
  CHECK(outside.gauge == Rat(2));

  GaugeResult off_span = zonotope_gauge({{Rat(1), Rat(0)}}, {Rat(0), Rat(1)});
  CHECK(off_span.kind == GaugeResult::Kind::NotInSpan);

  GaugeResult boundary = zonotope_gauge({{Rat(1)}, {Rat(1)}}, {Rat(2)});
  CHECK(boundary.kind == GaugeResult::Kind::OnBoundary);
  CHECK(boundary.gauge == Rat(1));
}

TEST_CASE("gauge agrees with the extreme-direction oracle") {
  std::mt19937_64 eng(505);
  auto draw = [&] { return Rat(int(eng() % 9) - 4, 1 + int(eng() % 2)); };
  int disagreements = 0;
  for (int it = 0; it < 150; ++it) {
    int dim = 1 + int(eng() % 3);
    int g = 1 + int(eng() % 5);
    std::vector<Vec> gens(g, Vec(dim));
    for (auto& gen : gens)
      for (auto& x : gen) x = draw();
    Vec p(dim);
    for (auto& x : p) x = draw();
    GaugeResult lp = zonotope_gauge(gens, p);
    GaugeResult oracle = oracle_gauge(gens, p);
    if (lp.kind != oracle.kind || (lp.kind != GaugeResult::Kind::NotInSpan &&
                                   lp.gauge != oracle.gauge))
      ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("vertex-transform criterion") {
  CHECK(is_valid_vertex_transform(hexagon_transform()).valid);

  CsConfiguration two(Role::Transform, 1, {{Rat(1)}, {Rat(1)}});
  VertexTransformResult r = is_valid_vertex_transform(two);
  CHECK(!r.valid);
  CHECK(r.witness == 0);

  std::vector<Vec> empty_rows(4, Vec{});
  CsConfiguration dim0(Role::Transform, 0, empty_rows);
  CHECK(is_valid_vertex_transform(dim0).valid);
}

TEST_CASE("dual face test on the hexagon transform") {
  CsConfiguration t = hexagon_transform();
  CHECK(is_face_dual(t, SignedSubset({0, 2}, {1, 1})));    // p = 0
  CHECK(!is_face_dual(t, SignedSubset({0, 1}, {1, 1})));   // p = 2 vs [−1,1]
  CHECK(is_face_dual(t, SignedSubset({0}, {1})));          // p = 1 in (−2,2)
}

TEST_CASE("duality: dual face test equals primal face test") {
  std::mt19937_64 eng(606);
  CorpusOptions opt;
  opt.require_transformable = true;
  opt.max_m = 7;
  for (int it = 0; it < 25; ++it) {
    CsConfiguration c = random_primal(eng, opt);
    if (c.count() == c.dim()) continue;
    CsConfiguration t = cs_transform(c);
    for (int k = 1; k <= std::min(3, c.count()); ++k)
      for (const SignedSubset& s : signed_subsets_of_size(c.count(), k))
        CHECK(is_face_dual(t, s) == is_face_primal(c, s).has_value());
  }
}

TEST_CASE("dual answers are GL(n)-invariant") {
  std::mt19937_64 eng(707);
  CsConfiguration t = hexagon_transform();
  // Any invertible 1×1 map is a nonzero scale.
  for (Rat c : {Rat(2), Rat(-3), Rat(1, 5)}) {
    std::vector<Vec> mapped;
    for (const Vec& v : t.vectors()) mapped.push_back(scale(v, c));
    CsConfiguration tc(Role::Transform, 1, mapped);
    CHECK(is_valid_vertex_transform(tc).valid == is_valid_vertex_transform(t).valid);
    for (int k = 1; k <= 3; ++k)
      for (const SignedSubset& s : signed_subsets_of_size(3, k))
        CHECK(is_face_dual(tc, s) == is_face_dual(t, s));
  }

  // Higher-dimensional invariance on random transforms.
  CorpusOptions opt;
  opt.require_transformable = true;
  opt.max_m = 6;
  for (int it = 0; it < 10; ++it) {
    CsConfiguration c = random_primal(eng, opt);
    if (c.count() == c.dim()) continue;
    CsConfiguration tr = cs_transform(c);
    int n = tr.dim();
    Matrix map(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) map.at(i, j) = Rat(int(eng() % 7) - 3, 1 + int(eng() % 2));
    } while (determinant(map).is_zero());
    std::vector<Vec> mapped;
    for (const Vec& v : tr.vectors()) mapped.push_back(map.apply(v));
    CsConfiguration tm(Role::Transform, n, mapped);
    for (int k = 1; k <= std::min(3, tr.count()); ++k)
      for (const SignedSubset& s : signed_subsets_of_size(tr.count(), k))
        CHECK(is_face_dual(tm, s) == is_face_dual(tr, s));
  }
}

TEST_CASE("vertex criterion coheres with singleton faces") {
  std::mt19937_64 eng(808);
  CorpusOptions opt;
  opt.require_transformable = true;
  opt.max_m = 6;
  for (int it = 0; it < 15; ++it) {
    CsConfiguration c = random_primal(eng, opt);
    if (c.count() == c.dim()) continue;
    CsConfiguration t = cs_transform(c);
    bool all_singletons = true;
    for (int i = 0; i < t.count(); ++i)
      for (int sg : {1, -1})
        if (!is_face_dual(t, SignedSubset({i}, {sg}))) all_singletons = false;
    CHECK(is_valid_vertex_transform(t).valid == all_singletons);
  }
}
