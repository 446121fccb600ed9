#include "bnmm/oracle.hpp"
#include "bnmm/subcube.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

namespace bnmm
{

namespace
{

using set_mask = std::uint64_t;

set_mask singleton( state_t x ) { return set_mask{ 1 } << x; }

class budget
{
    std::size_t _left;

public:
    explicit budget( std::size_t limit ) : _left{ limit } {}
    void spend()
    {
        if ( _left == 0 )
            throw budget_exceeded( "reach oracle exceeded its node budget" );
        --_left;
    }
};

// Modes whose memory is the set of visited configurations.
class set_memory_oracle
{
    const boolean_network& _f;
    mode _mode;
    int _n;
    budget& _budget;

    struct memo_key
    {
        set_mask visited;
        state_t current;
        unsigned depth;
        friend bool operator==( const memo_key&, const memo_key& ) = default;
    };
    struct memo_hash
    {
        std::size_t operator()( const memo_key& k ) const
        {
            return std::hash<std::uint64_t>{}( k.visited * 0x9E3779B97F4A7C15ull ^ ( std::uint64_t{ k.current } << 40 ) ^
                                               k.depth );
        }
    };
    std::unordered_map<memo_key, set_mask, memo_hash> _memo;

    [[nodiscard]] std::vector<state_t> candidates( set_mask visited, bool hull ) const
    {
        std::vector<state_t> out;
        if ( hull )
        {
            std::vector<state_t> members;
            for ( state_t y = 0; y < state_count( _n ); ++y )
                if ( visited & singleton( y ) )
                    members.push_back( y );
            principal_subcube( _n, members ).for_each_member( [ &out ]( state_t y ) { out.push_back( y ); } );
            return out;
        }
        for ( state_t y = 0; y < state_count( _n ); ++y )
            if ( visited & singleton( y ) )
                out.push_back( y );
        return out;
    }

public:
    set_memory_oracle( const boolean_network& f, mode m, budget& b ) : _f{ f }, _mode{ m }, _n{ f.dimension() }, _budget{ b } {}

    set_mask run( state_t current, set_mask visited, unsigned depth )
    {
        if ( depth == 0 )
            return singleton( current );
        const memo_key key{ visited, current, depth };
        if ( const auto it = _memo.find( key ); it != _memo.end() )
            return it->second;
        _budget.spend();

        std::vector<state_t> sources;
        std::vector<state_t> targets;
        switch ( _mode )
        {
            case mode::asynchronous:
                sources = { current };
                targets = { current };
                break;
            case mode::history:
                sources = candidates( visited, false );
                targets = { current };
                break;
            case mode::trapping:
                sources = candidates( visited, false );
                targets = sources;
                break;
            case mode::most_permissive:
                sources = candidates( visited, true );
                targets = { current };
                break;
            case mode::subcube_based:
                sources = candidates( visited, true );
                targets = sources;
                break;
            default: break;
        }
        set_mask out = singleton( current );
        for ( int i = 0; i < _n; ++i )
        {
            const auto bit = coordinate_bit( _n, i );
            for ( auto s : sources )
                for ( auto t : targets )
                {
                    const auto next = ( _f.image( s ) & bit ) | ( t & ~bit );
                    out |= run( next, visited | singleton( next ), depth - 1 );
                }
        }
        _memo.emplace( key, out );
        return out;
    }
};

// Interval and cuttable: the memory is the visited sequence together with
// the read timestamps (a vector V, or a matrix C stored row-major).
class timestamp_oracle
{
    const boolean_network& _f;
    mode _mode;
    int _n;
    bool _all;
    budget& _budget;
    std::map<std::vector<std::uint32_t>, set_mask> _memo;

    [[nodiscard]] bool bit_of( state_t x, int j ) const { return ( x & coordinate_bit( _n, j ) ) != 0; }

    // Timestamps b in [from, last] at which component j may be read: all of
    // them, or only the earliest one per value.
    [[nodiscard]] std::vector<std::uint32_t> read_choices( const std::vector<state_t>& xs, int j, std::uint32_t from ) const
    {
        std::vector<std::uint32_t> out;
        bool seen[ 2 ] = { false, false };
        for ( auto b = from; b < xs.size(); ++b )
        {
            const bool v = bit_of( xs[ b ], j );
            if ( _all || !seen[ v ] )
                out.push_back( b );
            seen[ v ] = true;
        }
        return out;
    }

    set_mask recurse( std::vector<state_t> xs, std::vector<std::uint32_t> stamps, unsigned depth )
    {
        // Drop the prefix no timestamp can reach any more.
        const auto low = *std::min_element( stamps.begin(), stamps.end() );
        if ( low > 0 )
        {
            xs.erase( xs.begin(), xs.begin() + low );
            for ( auto& s : stamps )
                s -= low;
        }
        std::vector<std::uint32_t> key;
        key.reserve( xs.size() + stamps.size() + 1 );
        key.push_back( depth );
        key.insert( key.end(), xs.begin(), xs.end() );
        key.insert( key.end(), stamps.begin(), stamps.end() );
        if ( const auto it = _memo.find( key ); it != _memo.end() )
            return it->second;
        auto out = run( xs, stamps, depth );
        _memo.emplace( std::move( key ), out );
        return out;
    }

    set_mask run( const std::vector<state_t>& xs, const std::vector<std::uint32_t>& stamps, unsigned depth )
    {
        const auto current = xs.back();
        set_mask out = singleton( current );
        if ( depth == 0 )
            return out;
        _budget.spend();
        const auto last = static_cast<std::uint32_t>( xs.size() - 1 ); // a - 1
        const auto nn = static_cast<std::size_t>( _n );

        for ( int i = 0; i < _n; ++i )
        {
            // Per component j: candidate timestamps for the row being read.
            std::vector<std::vector<std::uint32_t>> options( nn );
            for ( int j = 0; j < _n; ++j )
            {
                const auto at = _mode == mode::interval ? static_cast<std::size_t>( j )
                                                        : static_cast<std::size_t>( i ) * nn + static_cast<std::size_t>( j );
                if ( _mode == mode::interval && j == i )
                    options[ static_cast<std::size_t>( j ) ] = { last }; // V_i = a - 1
                else
                    options[ static_cast<std::size_t>( j ) ] = read_choices( xs, j, stamps[ at ] );
            }
            // Odometer over the choices.
            std::vector<std::size_t> pick( nn, 0 );
            while ( true )
            {
                auto next_stamps = stamps;
                state_t source = 0;
                for ( int j = 0; j < _n; ++j )
                {
                    const auto b = options[ static_cast<std::size_t>( j ) ][ pick[ static_cast<std::size_t>( j ) ] ];
                    if ( bit_of( xs[ b ], j ) )
                        source |= coordinate_bit( _n, j );
                    const auto at = _mode == mode::interval ? static_cast<std::size_t>( j )
                                                            : static_cast<std::size_t>( i ) * nn + static_cast<std::size_t>( j );
                    next_stamps[ at ] = b;
                }
                const auto bit = coordinate_bit( _n, i );
                const auto next = ( _f.image( source ) & bit ) | ( current & ~bit );
                auto next_xs = xs;
                next_xs.push_back( next );
                out |= recurse( std::move( next_xs ), std::move( next_stamps ), depth - 1 );

                std::size_t k = 0;
                while ( k < nn && ++pick[ k ] == options[ k ].size() )
                    pick[ k++ ] = 0;
                if ( k == nn )
                    break;
            }
        }
        return out;
    }

public:
    timestamp_oracle( const boolean_network& f, mode m, bool all, budget& b )
            : _f{ f }, _mode{ m }, _n{ f.dimension() }, _all{ all }, _budget{ b }
    {
    }

    set_mask start( state_t x, unsigned depth )
    {
        const auto nn = static_cast<std::size_t>( _n );
        std::vector<std::uint32_t> stamps( _mode == mode::interval ? nn : nn * nn, 0 );
        return recurse( { x }, std::move( stamps ), depth );
    }
};

} // namespace

config_set reach_oracle( const boolean_network& f, mode m, state_t x, unsigned depth, const oracle_options& options )
{
    const int n = f.dimension();
    if ( n > oracle_max_dimension )
        throw cap_exceeded( "reach_oracle", oracle_max_dimension, n );
    if ( ( x & ~full_mask( n ) ) != 0 )
        throw dimension_error( "start configuration exceeds the network dimension" );
    budget b( options.node_budget );
    set_mask found;
    if ( m == mode::interval || m == mode::cuttable )
        found = timestamp_oracle( f, m, options.all_timestamps, b ).start( x, depth );
    else
        found = set_memory_oracle( f, m, b ).run( x, singleton( x ), depth );
    config_set out( n );
    for ( state_t y = 0; y < state_count( n ); ++y )
        if ( found & singleton( y ) )
            out.insert( y );
    return out;
}

} // namespace bnmm
