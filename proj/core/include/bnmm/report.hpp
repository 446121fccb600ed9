#pragma once

#include "bnmm/hierarchy.hpp"
#include "bnmm/profile.hpp"
#include "bnmm/subcube.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace bnmm
{

// Every machine-readable record carries "schema": report_schema.
inline constexpr const char* report_schema = "bnmm.report.v1";

[[nodiscard]] nlohmann::json profile_to_json( const network_profile& p );
[[nodiscard]] nlohmann::json hierarchy_to_json( const hierarchy_report& r );
[[nodiscard]] nlohmann::json config_set_to_json( const config_set& s );
[[nodiscard]] nlohmann::json collection_to_json( const subcube_collection& c );

// One record per network:
//   { schema, id, seed?, n, table: [f(x) as bit-string for x = 0..],
//     profile: {...}, hierarchy: {excluded, contained, witnesses, violations} }
// `profile` is omitted when the dimension is above the profile cap.
[[nodiscard]] nlohmann::json network_record( const boolean_network& f, const hierarchy_report& r,
                                             std::optional<std::uint64_t> seed = std::nullopt );

// "<id> n=<n> violations=<k> strict=<mu<nu,...> excluded=<m,...>", "-" for an
// empty list
[[nodiscard]] std::string summary_line( const hierarchy_report& r );

} // namespace bnmm
