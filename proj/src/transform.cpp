#include "csn/dominance.hpp"
#include "csn/transform.hpp"

namespace csn {

GaugeResult zonotope_gauge(const std::vector<Vec>& generators, const Vec& p) {
  int dim = int(p.size());
  int g = int(generators.size());

  if (dim == 0 || g == 0) {
    // Span is {0}; p must be the zero vector of its space.
    if (is_zero(p)) return {GaugeResult::Kind::InRelInterior, Rat(0)};
    return {GaugeResult::Kind::NotInSpan, Rat(0)};
  }

  {
    Matrix gen = Matrix::from_rows(generators, dim);
    std::vector<Vec> with_p = generators;
    with_p.push_back(p);
    if (rank(Matrix::from_rows(with_p, dim)) > rank(gen))
      return {GaugeResult::Kind::NotInSpan, Rat(0)};
  }

  // The gauge is invariant under a joint scaling of generators and
  // point; clearing denominators keeps the tableau on integer data.
  std::vector<Vec> all = generators;
  all.push_back(p);
  Rat lcm = integerizing_scale(all);
  std::vector<Vec> gens(g);
  for (int l = 0; l < g; ++l) gens[l] = scale(generators[l], lcm);
  Vec point = scale(p, lcm);

  // Variables (c₁..c_g, t).
  LpProblem lp(g + 1);
  for (int j = 0; j < dim; ++j) {
    Vec row(g + 1);
    for (int l = 0; l < g; ++l) row[l] = gens[l][j];
    lp.add_eq(std::move(row), point[j]);
  }
  for (int l = 0; l < g; ++l) {
    Vec up(g + 1), dn(g + 1);
    up[l] = Rat(1);
    up[g] = Rat(-1);
    dn[l] = Rat(-1);
    dn[g] = Rat(-1);
    lp.add_le(std::move(up), Rat(0));
    lp.add_le(std::move(dn), Rat(0));
  }
  lp.mark_nonneg(g);  // t ≥ |c_l| holds anyway; the hint narrows the tableau
  Vec obj(g + 1);
  obj[g] = Rat(1);
  lp.set_objective(std::move(obj), LpSense::Min);

  LpOutcome out = lp_solve(lp);
  if (out.status != LpOutcome::Status::Optimal)
    throw DomainError("gauge LP did not reach an optimum");
  int cmp = out.value.compare(Rat(1));
  if (cmp < 0) return {GaugeResult::Kind::InRelInterior, out.value};
  if (cmp == 0) return {GaugeResult::Kind::OnBoundary, out.value};
  return {GaugeResult::Kind::Outside, out.value};
}

CsConfiguration cs_transform(const CsConfiguration& primal) {
  Matrix b = nullspace_basis(primal.as_matrix());
  return CsConfiguration(Role::Transform, b.cols(), b.row_list());
}

CsConfiguration inverse_transform(const CsConfiguration& transform) {
  Matrix b = nullspace_basis(transform.as_matrix());
  return CsConfiguration(Role::Primal, b.cols(), b.row_list());
}

VertexTransformResult is_valid_vertex_transform(const CsConfiguration& t) {
  int m = t.count();
  int n = t.dim();
  for (int i = 0; i < m; ++i) {
    std::vector<Vec> others;
    others.reserve(m - 1);
    for (int l = 0; l < m; ++l)
      if (l != i) others.push_back(t.vector(l));
    if (n > 0 && rank(Matrix::from_rows(others, n)) < n) return {false, i};
    // Interior membership of v̄ᵢ is exactly non-dominance of {i}; the
    // support form of the gauge decision avoids a phase-1 solve.
    if (singleton_is_dominant(t, i)) return {false, i};
  }
  return {true, std::nullopt};
}

bool is_face_dual(const CsConfiguration& t, const SignedSubset& s) {
  s.check_within(t.count());
  Vec p(t.dim());
  for (int k = 0; k < s.size(); ++k)
    p = add(p, scale(t.vector(s.index(k)), Rat(s.sign(k))));
  std::vector<Vec> gens;
  for (int l = 0; l < t.count(); ++l)
    if (!s.contains(l)) gens.push_back(t.vector(l));
  return zonotope_gauge(gens, p).in_rel_interior();
}

}  // namespace csn
