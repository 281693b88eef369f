#include "zelpack/json_io.hpp"

namespace zelpack {

using nlohmann::json;

static int get_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(std::string(what) + ": expected an integer");
  return j.get<int>();
}

static const json& get_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

json to_json(const Multisegment& a) {
  json segs = json::array();
  for (const auto& s : a.segments()) segs.push_back({s.b.twice, s.e.twice});
  return json{{"segments", std::move(segs)}};
}

Multisegment multisegment_from_json(const json& j) {
  const json& arr = get_field(j, "segments", "multisegment");
  if (!arr.is_array()) throw Error("multisegment: \"segments\" must be an array");
  std::vector<Segment> segs;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2)
      throw Error("multisegment: each segment must be a [2b, 2e] pair");
    segs.emplace_back(HalfInt::halves(get_int(p[0], "segment base")),
                      HalfInt::halves(get_int(p[1], "segment end")));
  }
  return Multisegment(std::move(segs));
}

json to_json(const Support& s) {
  json exps = json::array();
  for (HalfInt e : s.exponents) exps.push_back(e.twice);
  return json{{"exponents2", std::move(exps)}, {"mults", s.mults}};
}

Support support_from_json(const json& j) {
  const json& exps = get_field(j, "exponents2", "support");
  const json& mults = get_field(j, "mults", "support");
  if (!exps.is_array() || !mults.is_array())
    throw Error("support: \"exponents2\" and \"mults\" must be arrays");
  std::vector<HalfInt> es;
  for (const auto& e : exps) es.push_back(HalfInt::halves(get_int(e, "exponent")));
  std::vector<int> ms;
  for (const auto& m : mults) ms.push_back(get_int(m, "multiplicity"));
  return Support(std::move(es), std::move(ms));
}

json to_json(const RankTriangle& t) {
  json j = to_json(t.support());
  j["ranks"] = t.rank_rows();
  return j;
}

RankTriangle triangle_from_json(const json& j) {
  Support s = support_from_json(j);
  const json& ranks = get_field(j, "ranks", "triangle");
  if (!ranks.is_array()) throw Error("triangle: \"ranks\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : ranks) {
    if (!row.is_array()) throw Error("triangle: each rank row must be an array");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(get_int(v, "rank"));
    rows.push_back(std::move(r));
  }
  return RankTriangle(std::move(s), std::move(rows));
}

json to_json(const ArthurParameter& p) {
  return json{{"m", p.m}, {"d", p.d}, {"a", p.a}, {"rho", p.rho_label}};
}

ArthurParameter parameter_from_json(const json& j) {
  ArthurParameter p;
  p.m = get_int(get_field(j, "m", "parameter"), "m");
  p.d = get_int(get_field(j, "d", "parameter"), "d");
  p.a = get_int(get_field(j, "a", "parameter"), "a");
  if (j.contains("rho")) {
    if (!j.at("rho").is_string()) throw Error("parameter: \"rho\" must be a string");
    p.rho_label = j.at("rho").get<std::string>();
  }
  if (p.m < 1 || p.d < 0 || p.a < 0)
    throw Error("parameter: need m >= 1, d >= 0, a >= 0");
  return p;
}

json to_json(const VoganShape& v) {
  return json{{"support", to_json(v.support)},
              {"hom_dims", v.hom_dims},
              {"dim_v", v.dim_v},
              {"h_factors", v.h_factors},
              {"rank", v.support.total()}};
}

json to_json(const PrePacket& p) {
  json members = json::array();
  json msegs = json::array();
  for (const auto& t : p.members) {
    members.push_back(to_json(t));
    msegs.push_back(to_json(triangle_to_multiseg(t)));
  }
  return json{{"base", to_json(p.base)},
              {"members", std::move(members)},
              {"singleton", p.singleton},
              {"multisegments", std::move(msegs)}};
}

}  // namespace zelpack
