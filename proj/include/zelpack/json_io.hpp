#pragma once

#include <string>

#include "json.hpp"
#include "zelpack/packets.hpp"
#include "zelpack/parameters.hpp"
#include "zelpack/rank_triangle.hpp"

namespace zelpack {

// Wire format. Half-integers travel doubled so everything stays integral:
//   multisegment  {"segments": [[2b, 2e], ...]}            canonical order
//   support       {"exponents2": [...], "mults": [...]}    largest exponent first
//   triangle      support fields plus "ranks": rows by increasing depth,
//                 within a row decreasing i
//   parameter     {"m":, "d":, "a":, "rho":}
//   pre-packet    {"base":, "members":, "singleton":, "multisegments":}

nlohmann::json to_json(const Multisegment& a);
Multisegment multisegment_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Support& s);
Support support_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankTriangle& t);
RankTriangle triangle_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ArthurParameter& p);
ArthurParameter parameter_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VoganShape& v);

nlohmann::json to_json(const PrePacket& p);

}  // namespace zelpack
