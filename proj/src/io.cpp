#include "csn/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace csn {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  throw ParseError("vector entries must be integers or rational strings");
}

json parse_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace

CsConfiguration read_configuration(std::istream& in) {
  json j = parse_json(in);
  if (!j.is_object() || !j.contains("role") || !j.contains("dim") ||
      !j.contains("vectors"))
    throw ParseError("configuration needs role, dim and vectors fields");
  std::string role_str = j["role"].get<std::string>();
  Role role;
  if (role_str == "primal")
    role = Role::Primal;
  else if (role_str == "transform")
    role = Role::Transform;
  else
    throw ParseError("role must be 'primal' or 'transform'");
  if (!j["dim"].is_number_integer()) throw ParseError("dim must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["vectors"].is_array()) throw ParseError("vectors must be an array");
  std::vector<Vec> rows;
  for (const json& vr : j["vectors"]) {
    if (!vr.is_array()) throw ParseError("each vector must be an array");
    Vec row;
    for (const json& entry : vr) row.push_back(rat_from_json(entry));
    rows.push_back(std::move(row));
  }
  return CsConfiguration(role, dim, std::move(rows));
}

CsConfiguration read_configuration_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_configuration(f);
}

std::string configuration_to_json(const CsConfiguration& c) {
  json j;
  j["role"] = c.role() == Role::Primal ? "primal" : "transform";
  j["dim"] = c.dim();
  json vecs = json::array();
  for (const Vec& v : c.vectors()) {
    json row = json::array();
    for (const Rat& x : v) row.push_back(x.str());
    vecs.push_back(std::move(row));
  }
  j["vectors"] = std::move(vecs);
  return j.dump(2) + "\n";
}

void write_configuration_file(const CsConfiguration& c, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f << configuration_to_json(c);
}

SetFamily read_family(std::istream& in, int m, int s) {
  json j = parse_json(in);
  if (!j.is_array()) throw ParseError("family file must be a JSON array");
  SetFamily fam;
  fam.m = m;
  fam.s = s;
  for (const json& mem : j) {
    if (!mem.is_array()) throw ParseError("each family member must be an array");
    std::vector<int> indices;
    for (const json& e : mem) {
      if (!e.is_number_integer()) throw ParseError("family indices must be integers");
      int one_based = e.get<int>();
      if (one_based < 1 || one_based > m)
        throw ParseError("family index out of [1, m]");
      indices.push_back(one_based - 1);
    }
    std::sort(indices.begin(), indices.end());
    for (size_t i = 0; i + 1 < indices.size(); ++i)
      if (indices[i] == indices[i + 1]) throw ParseError("repeated family index");
    fam.members.push_back(std::move(indices));
  }
  return fam;
}

SetFamily read_family_file(const std::string& path, int m, int s) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_family(f, m, s);
}

std::string family_to_json(const SetFamily& f) {
  json j = json::array();
  for (const auto& mem : f.members) {
    json row = json::array();
    for (int i : mem) row.push_back(i + 1);
    j.push_back(std::move(row));
  }
  return j.dump() + "\n";
}

void write_family_file(const SetFamily& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << family_to_json(f);
}

}  // namespace csn
