#pragma once

#include "bnmm/configuration.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bnmm
{

// Names and defining expressions of the components, when the network was
// parsed from expressions. Not part of the network's identity.
struct network_source
{
    std::vector<std::string> names;
    std::vector<std::string> expressions; // empty when defined by a table
};

// A Boolean network f : B^n -> B^n.
//
// The n local truth tables are stored column-wise as one image per
// configuration: bit i of image(x) is f_i(x). Equality and ordering only
// look at the tables.
class boolean_network
{
    int _n = 0;
    std::vector<state_t> _images;
    std::optional<network_source> _source;

public:
    boolean_network() = default;
    boolean_network( int n, std::vector<state_t> images, std::optional<network_source> source = std::nullopt );

    [[nodiscard]] static boolean_network from_function( int n, const std::function<state_t( state_t )>& f );
    [[nodiscard]] static boolean_network identity( int n );
    [[nodiscard]] static boolean_network negation( int n );
    [[nodiscard]] static boolean_network constant( int n, state_t value );

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] const std::vector<state_t>& images() const { return _images; }
    [[nodiscard]] state_t image( state_t x ) const { return _images[ x ]; }
    [[nodiscard]] bool local( int i, state_t x ) const { return ( _images[ x ] & coordinate_bit( _n, i ) ) != 0; }

    [[nodiscard]] configuration operator()( const configuration& x ) const;

    [[nodiscard]] const std::optional<network_source>& source() const { return _source; }
    [[nodiscard]] std::string component_name( int i ) const;

    friend bool operator==( const boolean_network& a, const boolean_network& b )
    {
        return a._n == b._n && a._images == b._images;
    }
};

// f^k as a network (k >= 0).
[[nodiscard]] boolean_network power( const boolean_network& f, unsigned k );
[[nodiscard]] boolean_network compose( const boolean_network& outer, const boolean_network& inner );

} // namespace bnmm
