#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace bnmm
{

enum class mode
{
    asynchronous,
    history,
    trapping,
    most_permissive,
    subcube_based,
    interval,
    cuttable
};

inline constexpr std::array all_modes{ mode::asynchronous,   mode::history,  mode::trapping, mode::most_permissive,
                                       mode::subcube_based, mode::interval, mode::cuttable };

// Long name, e.g. "most_permissive".
[[nodiscard]] std::string_view mode_name( mode m );
// One-letter (two for "mp") short name, e.g. "a", "mp".
[[nodiscard]] std::string_view mode_short_name( mode m );
// Accepts long names, short names, "mostpermissive"/"subcube", any case.
[[nodiscard]] std::optional<mode> parse_mode( std::string_view text );

} // namespace bnmm
