#include "crowns/crown_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crowns/errors.hpp"

namespace crowns {

namespace {

using nlohmann::json;

Phase parse_phase(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "nested") return Phase::nested();
    if (s == "twisted") return Phase::twisted();
    throw ParseError("phase string must be \"nested\" or \"twisted\", got \"" + s + "\"");
  }
  if (v.is_number()) return Phase::raw(v.get<double>());
  throw ParseError("phase must be a string or a number");
}

}  // namespace

CrownConfiguration crown_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rings")) {
      throw ParseError("crown document requires \"n\" and \"rings\"");
    }
    if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    const int n = doc["n"].get<int>();
    if (!doc["rings"].is_array() || doc["rings"].empty()) {
      throw ParseError("\"rings\" must be a non-empty array");
    }
    std::vector<RingSpec> rings;
    for (const json& r : doc["rings"]) {
      if (!r.is_object() || !r.contains("radius") || !r.contains("mass") ||
          !r.contains("phase")) {
        throw ParseError("each ring requires \"radius\", \"mass\" and \"phase\"");
      }
      rings.emplace_back(n, r["radius"].get<double>(), r["mass"].get<double>(),
                         parse_phase(r["phase"]));
    }
    return CrownConfiguration(std::move(rings));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid crown document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid crown document: ") + e.what());
  }
}

CrownConfiguration crown_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return crown_from_json(buf.str());
}

std::string crown_to_json(const CrownConfiguration& crown) {
  json rings = json::array();
  for (const RingSpec& r : crown.rings()) {
    json ring{{"radius", r.radius}, {"mass", r.mass}};
    switch (r.phase.kind()) {
      case Phase::Kind::Nested:
        ring["phase"] = "nested";
        break;
      case Phase::Kind::TwistedHalfStep:
        ring["phase"] = "twisted";
        break;
      case Phase::Kind::Raw:
        ring["phase"] = r.phase_radians();
        break;
    }
    rings.push_back(std::move(ring));
  }
  return json{{"n", crown.n()}, {"rings", std::move(rings)}}.dump(2);
}

}  // namespace crowns
