#include "clusterrad/potential_json.hpp"

#include <fstream>

namespace clusterrad {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw DomainError("potential_json", msg); }

double number(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double numberOr(const json& obj, const char* key, double fallback) {
  return obj.is_object() && obj.contains(key) ? number(obj, key) : fallback;
}

std::vector<double> numberArray(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_array()) fail(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& v : obj.at(key)) {
    if (!v.is_number()) fail(std::string("field '") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

RadialGrid parseGrid(const json& params) {
  if (params.contains("r")) return RadialGrid{numberArray(params, "r")};
  if (!params.contains("grid")) fail("tabulated potential needs 'r' or 'grid'");
  const auto& g = params.at("grid");
  const std::string type = g.value("type", "log");
  const double lo = number(g, "r_min"), hi = number(g, "r_max");
  const int count = static_cast<int>(number(g, "count"));
  if (type == "log") return RadialGrid::logUniform(lo, hi, count);
  if (type == "uniform") return RadialGrid::uniform(lo, hi, count);
  fail("unknown grid type '" + type + "'");
}

Envelope parseEnvelope(const json& j) {
  Envelope env;
  env.r1 = number(j, "r1");
  env.r2 = number(j, "r2");
  env.w = number(j, "w");
  if (j.contains("xi")) env.xi = parseDecayProfile(j.at("xi"));
  if (j.contains("eta")) env.eta = parseDecayProfile(j.at("eta"));
  return env;
}

}  // namespace

DecayProfile parseDecayProfile(const json& j) {
  const std::string type = j.value("type", "");
  DecayProfile out;
  if (type == "power_sum") {
    if (!j.contains("terms") || !j.at("terms").is_array()) fail("power_sum needs 'terms'");
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) fail("power_sum terms are [coeff, exponent] pairs");
      out.terms.push_back({DecayTerm::Form::Power, t[0].get<double>(), t[1].get<double>()});
    }
  } else if (type == "exponential") {
    out.terms.push_back({DecayTerm::Form::Exponential, number(j, "coeff"), number(j, "rate")});
  } else {
    fail("unknown profile type '" + type + "'");
  }
  return out;
}

RadialPotential parsePotential(const json& j, int defaultDimension) {
  if (!j.is_object()) fail("potential must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) fail("missing string field 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  int d = defaultDimension;
  if (j.contains("dimension")) {
    if (!j.at("dimension").is_number_integer()) fail("'dimension' must be an integer");
    d = j.at("dimension").get<int>();
  }
  if (d <= 0) fail("missing or invalid 'dimension'");
  const json params = j.value("params", json::object());
  std::optional<double> core;
  if (j.contains("hard_core_radius") && !j.at("hard_core_radius").is_null()) core = number(j, "hard_core_radius");

  std::optional<RadialPotential> p;
  if (kind == "hard_core") {
    if (!core) fail("hard_core needs 'hard_core_radius'");
    p = RadialPotential::hardCore(d, *core);
  } else if (kind == "square_well") {
    p = RadialPotential::squareWell(d, core.value_or(0.0), number(params, "depth"), number(params, "range"));
  } else if (kind == "morse") {
    p = RadialPotential::morse(d, number(params, "rho"));
  } else if (kind == "lennard_jones_126") {
    p = RadialPotential::lennardJones126(d, numberOr(params, "epsilon", 1.0), numberOr(params, "sigma", 1.0));
  } else if (kind == "lj_type") {
    p = RadialPotential::mie(d, numberOr(params, "epsilon", 1.0), numberOr(params, "sigma", 1.0), number(params, "m"),
                             number(params, "n"));
  } else if (kind == "tabulated") {
    p = RadialPotential::tabulated(d, parseGrid(params), numberArray(params, "v"));
  } else if (kind == "sum") {
    if (!params.contains("terms") || !params.at("terms").is_array()) fail("sum needs 'params.terms'");
    std::vector<RadialPotential> terms;
    for (const auto& t : params.at("terms")) terms.push_back(parsePotential(t, d));
    p = RadialPotential::sum(std::move(terms));
  } else {
    fail("unknown kind '" + kind + "'");
  }
  if (core && kind != "hard_core" && kind != "square_well") p = p->withHardCore(*core);
  if (j.contains("envelope") && !j.at("envelope").is_null()) p = p->withEnvelope(parseEnvelope(j.at("envelope")));
  return *p;
}

PotentialDocument parsePotentialDocument(const json& j) {
  try {
    PotentialDocument doc{parsePotential(j), std::nullopt, std::nullopt, j};
    if (j.contains("ruelle_split") && !j.at("ruelle_split").is_null()) {
      const auto& s = j.at("ruelle_split");
      if (!s.contains("phi1") || !s.contains("phi2")) fail("ruelle_split needs 'phi1' and 'phi2'");
      RuelleSplit split{parsePotential(s.at("phi1"), doc.potential.dimension()),
                        parsePotential(s.at("phi2"), doc.potential.dimension()),
                        number(s, "stability_constant_phi2")};
      split.validate();
      doc.split = std::move(split);
    }
    if (j.contains("stability_constant")) {
      const double b = number(j, "stability_constant");
      if (b < 0.0) fail("'stability_constant' must be nonnegative");
      doc.stabilityConstant = b;
    }
    return doc;
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

PotentialDocument loadPotentialDocument(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io", "cannot read potential file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("potential_json", std::string("invalid JSON: ") + e.what());
  }
  return parsePotentialDocument(j);
}

}  // namespace clusterrad
