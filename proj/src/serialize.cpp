#include "wpvol/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpvol {

Json to_json(const Rat& q) { return q.str(); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw std::runtime_error("expected a rational string, got " + j.dump());
  return Rat::parse(j.get<std::string>());
}

Json to_json(const PiPoly& p) {
  Json arr = Json::array();
  for (const auto& [k, q] : p.terms()) arr.push_back(Json{{"pi_power", k}, {"coeff", q.str()}});
  return arr;
}

PiPoly pipoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::runtime_error("PiPoly: expected an array");
  PiPoly p;
  for (const auto& t : j) p.add_term(t.at("pi_power").get<unsigned>(), rat_from_json(t.at("coeff")));
  return p;
}

Json to_json(const LPoly& p, std::optional<Signature> sig) {
  Json j;
  if (sig) j["g"] = sig->g;
  j["n"] = p.num_vars();
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    for (const auto& [k, q] : c.terms()) {
      terms.push_back(Json{{"alpha", alpha.entries()}, {"pi_power", k}, {"coeff", q.str()}});
    }
  }
  j["terms"] = std::move(terms);
  return j;
}

LPoly lpoly_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    LPoly p(n);
    for (const auto& t : j.at("terms")) {
      MultiIndex alpha(t.at("alpha").get<std::vector<unsigned>>());
      if (alpha.size() != n) throw std::runtime_error("term multi-index has the wrong length");
      p.add_term(alpha, PiPoly::monomial(rat_from_json(t.at("coeff")), t.at("pi_power").get<unsigned>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json table_to_json(const VolumeTable& table) {
  std::vector<Signature> order;
  for (const auto& [s, v] : table.entries()) order.push_back(s);
  std::sort(order.begin(), order.end(), [](Signature a, Signature b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
  Json j = Json::object();
  for (Signature s : order) j[s.key()] = to_json(table.at(s), s);
  return j;
}

Json cache_to_json(const VolumeTable& table) {
  Json j;
  j["format_version"] = kCacheFormatVersion;
  j["provenance"] = Json{{"tool", "wpvol"}, {"tool_version", kToolVersion}, {"convention", kInternalConvention}};
  j["entries"] = table_to_json(table);
  return j;
}

VolumeTable cache_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("format_version") || j["format_version"] != kCacheFormatVersion) {
    throw std::runtime_error("cache: unsupported format version");
  }
  if (!j.contains("provenance") || !j["provenance"].is_object() || !j.contains("entries") ||
      !j["entries"].is_object()) {
    throw std::runtime_error("cache: missing provenance or entries");
  }
  const Json& prov = j["provenance"];
  if (!prov.contains("convention") || prov["convention"] != kInternalConvention) {
    throw std::runtime_error("cache: produced under a different convention (" +
                             (prov.contains("convention") ? prov["convention"].dump() : std::string("none")) +
                             ")");
  }
  VolumeTable table;
  for (const auto& [key, entry] : j["entries"].items()) {
    Signature s;
    try {
      s = Signature::parse_key(key);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("cache: bad entry key '" + key + "'");
    }
    if (entry.contains("g") && entry["g"] != s.g) throw std::runtime_error("cache: genus mismatch for " + key);
    LPoly v = lpoly_from_json(entry);
    if (is_base_case(s) && !(v == base_volume(s))) throw std::runtime_error("cache: wrong base case " + key);
    try {
      table.insert(s, std::move(v));
    } catch (const InvariantViolation& e) {
      throw std::runtime_error(std::string("cache: entry rejected: ") + e.what());
    }
  }
  return table;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const CheckRecord& r) {
  Json j;
  j["relation"] = r.relation;
  j["g"] = r.g;
  j["n"] = r.n;
  if (r.alpha) j["alpha"] = r.alpha->entries();
  j["pass"] = r.pass;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  return j;
}

Json to_json(const oracle::OracleCheck& c) {
  return Json{{"check", c.check},
              {"grid", c.grid},
              {"max_abs_dev", c.max_abs_dev},
              {"tolerance", c.tolerance},
              {"pass", c.pass}};
}

}  // namespace wpvol
