#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "csn/dominance.hpp"
#include "csn/face.hpp"
#include "csn/family.hpp"
#include "csn/io.hpp"
#include "csn/sampling.hpp"
#include "csn/transform.hpp"

namespace py = pybind11;
using namespace csn;

namespace {

Rat rat_from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rat::parse(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return Rat::parse(h.cast<std::string>());
  throw ParseError("entries must be int or exact rational strings");
}

CsConfiguration make_config(const std::string& role, int dim,
                            const std::vector<std::vector<py::object>>& vectors) {
  Role r;
  if (role == "primal")
    r = Role::Primal;
  else if (role == "transform")
    r = Role::Transform;
  else
    throw ParseError("role must be 'primal' or 'transform'");
  std::vector<Vec> rows;
  for (const auto& vr : vectors) {
    Vec row;
    for (const auto& e : vr) row.push_back(rat_from_py(e));
    rows.push_back(std::move(row));
  }
  return CsConfiguration(r, dim, std::move(rows));
}

std::vector<std::vector<std::string>> vectors_out(const CsConfiguration& c) {
  std::vector<std::vector<std::string>> out;
  for (const Vec& v : c.vectors()) {
    std::vector<std::string> row;
    for (const Rat& x : v) row.push_back(x.str());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::string>> matrix_out(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).str());
  return out;
}

SignedSubset subset_from_py(const std::vector<int>& indices, const std::vector<int>& signs) {
  return SignedSubset(indices, signs);
}

py::dict report_out(const NeighborlinessReport& rep) {
  py::dict d;
  d["k_max"] = rep.k_max;
  d["exact"] = rep.exact;
  d["method"] = rep.method == CertifyMethod::DualSignEnum ? "dual-sign" : "dual-face";
  d["duplicate_warning"] = rep.duplicate_warning;
  if (rep.min_dominant)
    d["min_dominant"] = *rep.min_dominant;
  else
    d["min_dominant"] = py::none();
  if (rep.witness) {
    py::dict w;
    w["subset"] = rep.witness->subset;
    w["sigma"] = rep.witness->sign_pattern;
    std::vector<std::string> u;
    for (const Rat& x : rep.witness->witness) u.push_back(x.str());
    w["u"] = u;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

DominanceMethod method_from_py(const std::string& name) {
  if (name == "dual-sign") return DominanceMethod::DualSignEnum;
  if (name == "dual-face") return DominanceMethod::DualFaceScan;
  throw ParseError("method must be 'dual-face' or 'dual-sign'");
}

}  // namespace

PYBIND11_MODULE(_csneighborly, m) {
  m.doc() = "centrally symmetric polytopes: cs transforms, face tests and "
            "exact neighborliness certification";

  py::register_exception<ParseError>(m, "CsnParseError", PyExc_ValueError);
  py::register_exception<RankDeficientError>(m, "RankDeficientError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardLimitError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<CsConfiguration>(m, "Configuration")
      .def(py::init(&make_config), py::arg("role"), py::arg("dim"), py::arg("vectors"),
           "Half vector set of a centrally symmetric configuration; entries "
           "are ints or exact rational strings like '3/4' or '0.25'.")
      .def_property_readonly("role",
                             [](const CsConfiguration& c) {
                               return c.role() == Role::Primal ? "primal" : "transform";
                             })
      .def_property_readonly("dim", &CsConfiguration::dim)
      .def_property_readonly("count", &CsConfiguration::count)
      .def_property_readonly("vectors", &vectors_out)
      .def("to_json", &configuration_to_json)
      .def_static("from_json", [](const std::string& text) {
        std::istringstream in(text);
        return read_configuration(in);
      })
      .def("__repr__", [](const CsConfiguration& c) {
        return "<Configuration role=" +
               std::string(c.role() == Role::Primal ? "primal" : "transform") +
               " dim=" + std::to_string(c.dim()) +
               " count=" + std::to_string(c.count()) + ">";
      });

  m.def("cs_transform", &cs_transform, py::arg("primal"));
  m.def("inverse_transform", &inverse_transform, py::arg("transform"));

  m.def(
      "is_face_primal",
      [](const CsConfiguration& c, const std::vector<int>& indices,
         const std::vector<int>& signs) -> py::object {
        auto cert = is_face_primal(c, subset_from_py(indices, signs));
        if (!cert) return py::none();
        py::dict d;
        std::vector<std::string> a;
        for (const Rat& x : cert->normal) a.push_back(x.str());
        d["normal"] = a;
        d["offset"] = cert->offset.str();
        return d;
      },
      py::arg("config"), py::arg("indices"), py::arg("signs"),
      "Supporting-hyperplane certificate for {sign_i * v_i} or None. "
      "Indices are 0-based.");

  m.def("is_face_dual", [](const CsConfiguration& t, const std::vector<int>& indices,
                           const std::vector<int>& signs) {
    return is_face_dual(t, subset_from_py(indices, signs));
  });

  m.def("antipodal_pair", &antipodal_pair, py::arg("config"), py::arg("i"),
        py::arg("sign_i"), py::arg("j"), py::arg("sign_j"));

  m.def("is_antipodal_polytope", [](const CsConfiguration& c) -> py::object {
    AntipodalityResult r = is_antipodal_polytope(c);
    if (r.antipodal) return py::bool_(true);
    py::dict d;
    d["antipodal"] = false;
    d["witness"] = *r.witness;
    return d;
  });

  m.def("max_neighborliness_primal", [](const CsConfiguration& c) {
    PrimalNeighborliness rep = max_neighborliness_primal(c);
    py::dict d;
    d["k_max"] = rep.k_max;
    d["method"] = "primal";
    if (rep.failing_subset) {
      d["failing_indices"] = rep.failing_subset->indices();
      d["failing_signs"] = rep.failing_subset->signs();
    }
    return d;
  });

  m.def("is_valid_vertex_transform", [](const CsConfiguration& t) -> py::object {
    VertexTransformResult r = is_valid_vertex_transform(t);
    if (r.valid) return py::bool_(true);
    py::dict d;
    d["valid"] = false;
    d["witness"] = *r.witness;
    return d;
  });

  m.def(
      "zonotope_gauge",
      [](const std::vector<std::vector<py::object>>& generators,
         const std::vector<py::object>& point) {
        std::vector<Vec> gens;
        for (const auto& g : generators) {
          Vec row;
          for (const auto& e : g) row.push_back(rat_from_py(e));
          gens.push_back(std::move(row));
        }
        Vec p;
        for (const auto& e : point) p.push_back(rat_from_py(e));
        GaugeResult r = zonotope_gauge(gens, p);
        py::dict d;
        switch (r.kind) {
          case GaugeResult::Kind::NotInSpan: d["kind"] = "not_in_span"; break;
          case GaugeResult::Kind::InRelInterior: d["kind"] = "rel_interior"; break;
          case GaugeResult::Kind::OnBoundary: d["kind"] = "boundary"; break;
          case GaugeResult::Kind::Outside: d["kind"] = "outside"; break;
        }
        d["gauge"] = r.gauge.str();
        return d;
      },
      py::arg("generators"), py::arg("point"));

  m.def(
      "is_dominant",
      [](const CsConfiguration& t, const std::vector<int>& subset,
         const std::string& method) -> py::object {
        DominanceResult r = is_dominant(t, subset, method_from_py(method));
        if (!r.dominant) return py::bool_(false);
        py::dict d;
        d["dominant"] = true;
        d["sigma"] = r.certificate->sign_pattern;
        std::vector<std::string> u;
        for (const Rat& x : r.certificate->witness) u.push_back(x.str());
        d["u"] = u;
        return d;
      },
      py::arg("transform"), py::arg("subset"), py::arg("method") = "dual-face");

  m.def(
      "min_dominant_size",
      [](const CsConfiguration& t, const std::string& method) -> py::object {
        auto r = min_dominant_size(t, method_from_py(method));
        if (!r) return py::none();
        return py::int_(*r);
      },
      py::arg("transform"), py::arg("method") = "dual-face");

  m.def(
      "max_neighborliness",
      [](const CsConfiguration& t, const std::string& method, int max_k) {
        return report_out(max_neighborliness(t, method_from_py(method), max_k));
      },
      py::arg("transform"), py::arg("method") = "dual-face", py::arg("max_k") = -1);

  m.def("s_max_norm", [](const std::vector<py::object>& x, int s) {
    Vec v;
    for (const auto& e : x) v.push_back(rat_from_py(e));
    return s_max_norm(v, s).str();
  });

  m.def("subspace_ratio", [](const CsConfiguration& t, int s) {
    return subspace_ratio(t, s).str();
  });

  m.def(
      "euclidean_l1_distortion",
      [](const CsConfiguration& t, uint64_t seed, int samples) {
        DistortionOutcome r = euclidean_l1_distortion(t, seed, samples);
        py::dict d;
        d["exact"] = r.exact;
        d["value"] = r.value;
        if (r.exact) d["squared"] = r.squared.str();
        d["samples"] = r.samples;
        return d;
      },
      py::arg("transform"), py::arg("seed") = 1, py::arg("samples") = 4096);

  m.def(
      "greedy_family",
      [](int m_count, int s, const std::string& order, uint64_t seed) {
        FamilyOrder fo =
            order == "shuffle" ? FamilyOrder::SeededShuffle : FamilyOrder::Lex;
        return greedy_family(m_count, s, fo, seed).members;
      },
      py::arg("m"), py::arg("s"), py::arg("order") = "lex", py::arg("seed") = 0,
      "Members as 0-based index lists.");

  m.def("forbidden_count",
        [](int m_count, int s) { return forbidden_count(m_count, s).get_str(); });

  m.def("nonexistence_bound", [](int d, int m_count, int s) {
    return nonexistence_bound(d, m_count, s) == BoundVerdict::RuledOut
               ? "RuledOut"
               : "Inconclusive";
  });

  m.def(
      "translate_packing_check",
      [](const CsConfiguration& c, int s, const std::vector<std::vector<int>>& members) {
        SetFamily fam;
        fam.m = c.count();
        fam.s = s;
        fam.members = members;
        PackingReport rep = translate_packing_check(c, s, fam);
        py::dict d;
        d["pass"] = rep.pass;
        d["pairs_checked"] = rep.pairs_checked;
        d["translates_checked"] = rep.translates_checked;
        d["overlapping_pairs"] = rep.overlapping_pairs;
        d["escaped_translates"] = rep.escaped_translates;
        return d;
      },
      py::arg("config"), py::arg("s"), py::arg("members"));

  m.def("sample_gaussian_configuration", &sample_gaussian_configuration, py::arg("m"),
        py::arg("n"), py::arg("seed"), py::arg("precision_bits") = 32);

  m.def("random_orthogonal", [](int d, uint64_t seed) {
    return matrix_out(random_orthogonal(d, seed));
  });

  m.def("kashin_configuration", &kashin_configuration, py::arg("d"), py::arg("seed"));

  m.def("volume_ratio", [](int d) {
    VolumeRatioResult r = volume_ratio(d);
    py::dict out;
    out["value"] = r.value;
    out["bound"] = r.bound;
    if (r.pi_free_power)
      out["pi_free_power"] = r.pi_free_power->str();
    else
      out["pi_free_power"] = py::none();
    return out;
  });

  m.def("gg_margin", [](const CsConfiguration& t, int d) {
    DistortionReport r = gg_margin(t, d);
    py::dict out;
    out["value"] = r.value;
    out["exact"] = r.exact;
    out["samples"] = r.samples;
    out["implied_constant"] = r.implied_constant;
    return out;
  });

  m.def(
      "kashin_margin",
      [](int d, uint64_t seed, int samples) {
        Matrix u = random_orthogonal(d, seed);
        DistortionReport r = kashin_margin(u, samples, seed);
        py::dict out;
        out["value"] = r.value;
        out["samples"] = r.samples;
        return out;
      },
      py::arg("d"), py::arg("seed"), py::arg("samples") = 4096);
}
