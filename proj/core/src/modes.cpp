#include "bnmm/modes.hpp"

#include <algorithm>
#include <cctype>

namespace bnmm
{

std::string_view mode_name( mode m )
{
    switch ( m )
    {
        case mode::asynchronous: return "asynchronous";
        case mode::history: return "history";
        case mode::trapping: return "trapping";
        case mode::most_permissive: return "most_permissive";
        case mode::subcube_based: return "subcube_based";
        case mode::interval: return "interval";
        case mode::cuttable: return "cuttable";
    }
    return "?";
}

std::string_view mode_short_name( mode m )
{
    switch ( m )
    {
        case mode::asynchronous: return "a";
        case mode::history: return "h";
        case mode::trapping: return "t";
        case mode::most_permissive: return "mp";
        case mode::subcube_based: return "s";
        case mode::interval: return "i";
        case mode::cuttable: return "c";
    }
    return "?";
}

std::optional<mode> parse_mode( std::string_view text )
{
    std::string s( text );
    std::transform( s.begin(), s.end(), s.begin(), []( unsigned char c ) { return std::tolower( c ); } );
    std::replace( s.begin(), s.end(), '-', '_' );
    for ( auto m : all_modes )
        if ( s == mode_name( m ) || s == mode_short_name( m ) )
            return m;
    if ( s == "mostpermissive" )
        return mode::most_permissive;
    if ( s == "subcube" || s == "subcubebased" )
        return mode::subcube_based;
    return std::nullopt;
}

} // namespace bnmm
