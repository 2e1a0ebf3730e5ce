#ifndef WPVOL_SERIALIZE_HPP
#define WPVOL_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "wpvol/intersection.hpp"
#include "wpvol/oracle.hpp"

namespace wpvol {

using Json = nlohmann::ordered_json;

/// Bumped whenever the cache layout changes.
inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";
/// Convention flag stamped into caches: entries hold the halved V_{1,1}.
inline constexpr const char* kInternalConvention = "internal-halved-v11";

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

/// [{"pi_power": k, "coeff": "p/q"}, ...] in ascending k.
Json to_json(const PiPoly& p);
PiPoly pipoly_from_json(const Json& j);

/// {"g":..,"n":..,"terms":[{"alpha":[..],"pi_power":k,"coeff":"p/q"}, ...]}
/// in canonical term order. "g" is omitted without a signature (kernels).
Json to_json(const LPoly& p, std::optional<Signature> sig = std::nullopt);
LPoly lpoly_from_json(const Json& j);

/// {"g,n": <term list>, ...} ordered by (dim, g, n).
Json table_to_json(const VolumeTable& table);

/// Cache file: format version, provenance stamp, and the table.
Json cache_to_json(const VolumeTable& table);
/// Rejects foreign format versions or convention flags; every entry is
/// re-validated on insertion. Throws std::runtime_error.
VolumeTable cache_from_json(const Json& j);

std::string dump(const Json& j);

Json to_json(const CheckRecord& r);
Json to_json(const oracle::OracleCheck& c);

}  // namespace wpvol

#endif  // WPVOL_SERIALIZE_HPP
