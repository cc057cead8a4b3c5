#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bier/geometry.hpp"
#include "bier/polytopality.hpp"

// JSON wire formats. Vertices are 1-based and rationals travel as "p/q" strings.
namespace bier::io {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::Parse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, "invalid JSON in '" + path + "': " + e.what());
  }
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(ErrorCode::Parse, "expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json to_json(FaceSet s) { return s.one_based(); }

inline FaceSet face_from_json(const Json& j, int n) {
  require(j.is_array(), ErrorCode::Parse, "a face must be an array of vertices, got " + j.dump());
  FaceSet s;
  for (const auto& v : j) {
    require(v.is_number_integer(), ErrorCode::Parse, "vertex labels must be integers, got " + v.dump());
    const auto label = v.get<long long>();
    require(label >= 1 && label <= n, ErrorCode::Parse,
            "vertex " + std::to_string(label) + " outside [1, " + std::to_string(n) + "]");
    s = s.with(static_cast<int>(label - 1));
  }
  return s;
}

/// {"n": 4, "facets": [[1,2],[3]]}; listed sets need not be maximal.
inline SimplicialComplex complex_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("facets"), ErrorCode::Parse,
          "complex JSON needs \"n\" and \"facets\"");
  require(j["n"].is_number_integer(), ErrorCode::Parse, "\"n\" must be an integer");
  const auto n = j["n"].get<long long>();
  require(n >= 2, ErrorCode::EmptyGround, "ground set needs n >= 2");
  require(n <= kMaxGround, ErrorCode::GroundTooLarge, "ground set limited to n <= 20");
  require(j["facets"].is_array(), ErrorCode::Parse, "\"facets\" must be an array");
  std::vector<FaceSet> listed;
  for (const auto& f : j["facets"]) listed.push_back(face_from_json(f, static_cast<int>(n)));
  return SimplicialComplex::from_facets(static_cast<int>(n), listed);
}

inline Json to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (FaceSet f : k.facets()) facets.push_back(to_json(f));
  return Json{{"n", k.n()}, {"facets", facets}};
}

/// {"l": ["3/10", "3/10", "4/10"], "nu": "1/2"}.
inline WeightVector weights_from_json(const Json& j) {
  require(j.is_object() && j.contains("l") && j.contains("nu") && j["l"].is_array(), ErrorCode::Parse,
          "weights JSON needs an array \"l\" and a threshold \"nu\"");
  RationalVector l;
  for (const auto& x : j["l"]) l.push_back(rational_from_json(x));
  return WeightVector::make(std::move(l), rational_from_json(j["nu"]));
}

inline Json to_json(const BierFace& tau) {
  return Json{{"a1", to_json(tau.a1())}, {"a2", to_json(tau.a2())}, {"b", to_json(tau.b())}};
}

inline Json facets_report(const SimplicialComplex& k, int max_n = 12) {
  Json list = Json::array();
  for (const auto& tau : facets(k)) list.push_back(to_json(tau));
  return Json{{"facets", list}, {"f_vector", f_vector(k, max_n)}};
}

inline Json ridges_report(const SimplicialComplex& k) {
  Json list = Json::array();
  for (const auto& r : ridges(k))
    list.push_back(Json{{"x", to_json(r.x)},
                        {"y", to_json(r.y)},
                        {"class", kind_name(r.kind)},
                        {"c1", r.c1 + 1},
                        {"c2", r.c2 + 1},
                        {"facets", Json::array({to_json(r.facets[0]), to_json(r.facets[1])})}});
  return Json{{"ridges", list}};
}

inline Json to_json(const BraidCone& cone) {
  Json le = Json::array();
  for (auto [i, j] : cone.le) le.push_back(Json::array({i + 1, j + 1}));
  Json eq = Json::array();
  for (FaceSet block : cone.eq_blocks) eq.push_back(to_json(block));
  return Json{{"le", le}, {"eq", eq}};
}

inline Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

inline Json rays_report(const BierFace& tau) {
  Json list = Json::array();
  for (const auto& r : facet_rays(tau)) list.push_back(Json{{"vertex", r.vertex.label()}, {"ray", to_json(primitive_ray(r.direction))}});
  return Json{{"face", to_json(tau)}, {"rays", list}};
}

inline Json to_json(const FanReport& report) {
  return Json{{"pass", report.pass},
              {"permutations", report.permutations},
              {"facets", report.facets},
              {"facets_hit", report.facets_hit},
              {"intersection_checks", report.intersection_checks},
              {"failures", report.failures}};
}

inline Json volume_report(const SimplicialComplex& k) {
  const auto v0 = vol0(k.n());
  const auto total = euclidean_volume(k);
  return Json{{"normalized", normalized_volume(k)},
              {"vol0_sq", to_string(v0.squared())},
              {"euclid_sq", to_string(total.squared())},
              {"vol0", v0.to_string()},
              {"euclid", total.to_string()}};
}

inline Json to_json(const MinkowskiValues& m) {
  return Json{{"mu_simplex", to_string(m.simplex)}, {"mu_opposite", to_string(m.opposite)}, {"mu_polar", to_string(m.polar)}};
}

inline Json to_json(const PolarIsoReport& r) {
  Json points = Json::array();
  for (const auto& v : r.vertices) points.push_back(to_json(v));
  return Json{{"iso", r.target}, {"vertices", r.vertices.size()}, {"pass", r.pass}, {"points", points}};
}

inline Json to_json(const HeightVector& f) {
  Json out = Json::object();
  for (int i = 0; i < f.n(); ++i) {
    out[BierVertex{i, false}.label()] = to_string(f[{i, false}]);
    out[BierVertex{i, true}.label()] = to_string(f[{i, true}]);
  }
  return out;
}

/// Accepts {"1": "3/20", "1bar": "3/20", ...} or {"witness": {...}}; missing labels read as 0.
inline HeightVector witness_from_json(const Json& j, int n) {
  const Json& map = (j.is_object() && j.contains("witness")) ? j["witness"] : j;
  require(map.is_object(), ErrorCode::Parse, "witness must be an object of vertex labels");
  HeightVector f(n);
  for (const auto& [key, value] : map.items()) {
    bool matched = false;
    for (int i = 0; i < n && !matched; ++i)
      for (bool bar : {false, true})
        if (key == BierVertex{i, bar}.label()) {
          f[{i, bar}] = rational_from_json(value);
          matched = true;
          break;
        }
    require(matched, ErrorCode::Parse, "unknown vertex label '" + key + "'");
  }
  return f;
}

inline Json to_json(const FeasibilityResult& r) {
  if (r.feasible)
    return Json{{"status", "feasible"}, {"witness", to_json(*r.witness)}, {"ridges", r.ridge_count}, {"pivots", r.pivots}};
  Json cert = Json::array();
  for (const auto& [ridge, multiplier] : r.certificate) cert.push_back(Json::array({ridge, to_string(multiplier)}));
  return Json{{"status", "infeasible"}, {"certificate", cert}, {"ridges", r.ridge_count}, {"pivots", r.pivots}};
}

inline Json to_json(const Realization& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"vertex", row.vertex.label()}, {"normal", to_json(row.normal)}, {"height", to_string(row.height)}});
  Json vertices = Json::array();
  for (const auto& v : r.vertices) vertices.push_back(Json{{"facet", to_json(v.facet)}, {"point", to_json(v.point)}});
  return Json{{"rows", rows}, {"vertices", vertices}};
}

/// "1/3,0,-1/3" → rational coordinates.
inline RationalVector parse_point(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

/// "1,2" → {1,2} (1-based); the empty string is ∅.
inline FaceSet parse_face(const std::string& text, int n) {
  FaceSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const Rational v = parse_rational(item);
    require(denominator_of(v) == 1 && v >= 1 && v <= n, ErrorCode::Parse,
            "vertex '" + item + "' outside [1, " + std::to_string(n) + "]");
    s = s.with(static_cast<int>(v.convert_to<long long>()) - 1);
  }
  return s;
}

inline Json error_json(ErrorCode code, const std::string& message) {
  return Json{{"error", Json{{"code", std::string(code_name(code))}, {"message", message}}}};
}

}  // namespace bier::io
