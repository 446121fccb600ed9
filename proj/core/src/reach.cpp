#include "bnmm/reach.hpp"
#include "bnmm/errors.hpp"
#include "bnmm/trapspace.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace bnmm
{

namespace
{

// Visited set over encoded states: a bit array when the encoding is short,
// a hash set otherwise.
class visited_states
{
    std::vector<std::uint64_t> _bits;
    std::unordered_set<std::uint64_t> _hashed;
    bool _dense;

public:
    explicit visited_states( int code_bits ) : _dense{ code_bits <= 26 }
    {
        if ( _dense )
            _bits.assign( ( ( std::size_t{ 1 } << code_bits ) + 63 ) / 64, 0 );
    }

    // True when the state was not seen before.
    bool insert( std::uint64_t code )
    {
        if ( !_dense )
            return _hashed.insert( code ).second;
        auto& word = _bits[ code >> 6 ];
        const auto mask = std::uint64_t{ 1 } << ( code & 63 );
        if ( word & mask )
            return false;
        word |= mask;
        return true;
    }
};

template <typename Expand>
void explore( std::uint64_t start, int code_bits, Expand&& expand )
{
    visited_states seen( code_bits );
    std::vector<std::uint64_t> stack{ start };
    seen.insert( start );
    auto push = [ & ]( std::uint64_t code ) {
        if ( seen.insert( code ) )
            stack.push_back( code );
    };
    while ( !stack.empty() )
    {
        const auto code = stack.back();
        stack.pop_back();
        expand( code, push );
    }
}

config_set reach_asynchronous( const boolean_network& f, state_t x0 )
{
    const int n = f.dimension();
    config_set out( n );
    explore( x0, n, [ & ]( std::uint64_t code, auto&& push ) {
        const auto x = static_cast<state_t>( code );
        out.insert( x );
        const auto diff = x ^ f.image( x );
        for ( int i = 0; i < n; ++i )
            if ( diff & coordinate_bit( n, i ) )
                push( x ^ coordinate_bit( n, i ) );
    } );
    return out;
}

config_set reach_trapping( const boolean_network& f, state_t x0 )
{
    return principal_trapspace( f, x0 ).member_set();
}

config_set reach_most_permissive( const boolean_network& f, state_t x0 )
{
    const int n = f.dimension();
    const auto count = state_count( n );
    const auto all = full_mask( n );
    // can1[d] / can0[d]: coordinates i with f_i = 1 / 0 somewhere on the
    // subcube x0 ^ (submasks of d). Sum over subsets.
    std::vector<state_t> can1( count ), can0( count );
    for ( state_t d = 0; d < count; ++d )
    {
        can1[ d ] = f.image( x0 ^ d );
        can0[ d ] = ~f.image( x0 ^ d ) & all;
    }
    for ( int k = 0; k < n; ++k )
    {
        const auto bit = state_t{ 1 } << k;
        for ( state_t d = 0; d < count; ++d )
            if ( d & bit )
            {
                can1[ d ] |= can1[ d ^ bit ];
                can0[ d ] |= can0[ d ^ bit ];
            }
    }
    config_set out( n );
    // Code: D in the high n bits, x ^ x0 in the low n bits.
    explore( 0, 2 * n, [ & ]( std::uint64_t code, auto&& push ) {
        const auto rel = static_cast<state_t>( code & all );
        const auto d = static_cast<state_t>( code >> n );
        out.insert( x0 ^ rel );
        for ( int i = 0; i < n; ++i )
        {
            const auto bit = coordinate_bit( n, i );
            const bool x0_bit = ( x0 & bit ) != 0;
            for ( int b = 0; b < 2; ++b )
            {
                if ( !( ( b ? can1[ d ] : can0[ d ] ) & bit ) )
                    continue;
                const auto rel2 = ( b != x0_bit ) ? ( rel | bit ) : ( rel & ~bit );
                const auto d2 = d | rel2;
                push( ( std::uint64_t{ d2 } << n ) | rel2 );
            }
        }
    } );
    return out;
}

config_set reach_history( const boolean_network& f, state_t x0 )
{
    const int n = f.dimension();
    const auto all = full_mask( n );
    config_set out( n );
    auto encode = []( int n_, state_t x, state_t one, state_t zero ) {
        return ( std::uint64_t{ zero } << ( 2 * n_ ) ) | ( std::uint64_t{ one } << n_ ) | x;
    };
    const auto y0 = f.image( x0 );
    explore( encode( n, x0, y0, ~y0 & all ), 3 * n, [ & ]( std::uint64_t code, auto&& push ) {
        const auto x = static_cast<state_t>( code & all );
        const auto one = static_cast<state_t>( ( code >> n ) & all );
        const auto zero = static_cast<state_t>( ( code >> ( 2 * n ) ) & all );
        out.insert( x );
        for ( int i = 0; i < n; ++i )
        {
            const auto bit = coordinate_bit( n, i );
            for ( int b = 0; b < 2; ++b )
            {
                if ( !( ( b ? one : zero ) & bit ) )
                    continue;
                const auto x2 = b ? ( x | bit ) : ( x & ~bit );
                const auto y2 = f.image( x2 );
                push( encode( n, x2, one | y2, zero | ( ~y2 & all ) ) );
            }
        }
    } );
    return out;
}

config_set reach_interval( const boolean_network& f, state_t x0 )
{
    const int n = f.dimension();
    const auto all = full_mask( n );
    config_set out( n );
    // Code: r in the high n bits, w in the low n bits.
    explore( ( std::uint64_t{ x0 } << n ) | x0, 2 * n, [ & ]( std::uint64_t code, auto&& push ) {
        const auto w = static_cast<state_t>( code & all );
        const auto r = static_cast<state_t>( code >> n );
        out.insert( w );
        const auto pending = w ^ r;
        for ( int i = 0; i < n; ++i )
        {
            const auto bit = coordinate_bit( n, i );
            if ( pending & bit )
                push( ( std::uint64_t{ r ^ bit } << n ) | w ); // propagate
            else
            {
                const auto w2 = ( w & ~bit ) | ( f.image( r ) & bit ); // update
                push( ( std::uint64_t{ r } << n ) | w2 );
            }
        }
    } );
    return out;
}

config_set reach_cuttable( const boolean_network& f, state_t x0, int lag )
{
    const int n = f.dimension();
    const auto all = full_mask( n );
    const int width = std::bit_width( static_cast<unsigned>( lag ) ); // bits per counter
    const int code_bits = n + n * n * width;
    if ( code_bits > 64 )
        throw cap_exceeded( "reach cuttable (lag encoding)", 64, code_bits );
    const auto counter_mask = ( std::uint64_t{ 1 } << width ) - 1;
    auto counter_at = [ & ]( int i, int j ) { return n + ( i * n + j ) * width; };

    config_set out( n );
    explore( x0, code_bits, [ & ]( std::uint64_t code, auto&& push ) {
        const auto w = static_cast<state_t>( code & all );
        out.insert( w );
        for ( int i = 0; i < n; ++i )
        {
            // Row i: what reader i sees.
            state_t seen = w;
            for ( int j = 0; j < n; ++j )
            {
                const auto k = ( code >> counter_at( i, j ) ) & counter_mask;
                if ( k & 1 )
                    seen ^= coordinate_bit( n, j );
                if ( k > 0 )
                    push( code - ( std::uint64_t{ 1 } << counter_at( i, j ) ) ); // catch up once
            }
            const auto bit = coordinate_bit( n, i );
            if ( ( f.image( seen ) & bit ) == ( w & bit ) )
                continue; // no change
            auto next = code ^ bit;
            for ( int r = 0; r < n; ++r )
            {
                const auto shift = counter_at( r, i );
                auto k = ( ( next >> shift ) & counter_mask ) + 1;
                if ( k > static_cast<std::uint64_t>( lag ) )
                    k -= 2;
                next = ( next & ~( counter_mask << shift ) ) | ( k << shift );
            }
            push( next );
        }
    } );
    return out;
}

} // namespace

int reach_caps::cap( mode m ) const
{
    switch ( m )
    {
        case mode::asynchronous: return asynchronous;
        case mode::history: return history;
        case mode::trapping: return trapping;
        case mode::most_permissive: return most_permissive;
        case mode::subcube_based: return subcube_based;
        case mode::interval: return interval;
        case mode::cuttable: return cuttable;
    }
    return 0;
}

config_set reach_set( const boolean_network& f, mode m, state_t x, const reach_caps& caps )
{
    const int n = f.dimension();
    if ( n > caps.cap( m ) )
        throw cap_exceeded( "reach " + std::string( mode_name( m ) ), caps.cap( m ), n );
    if ( ( x & ~full_mask( n ) ) != 0 )
        throw dimension_error( "start configuration exceeds the network dimension" );
    switch ( m )
    {
        case mode::asynchronous: return reach_asynchronous( f, x );
        case mode::history: return reach_history( f, x );
        case mode::trapping:
        case mode::subcube_based: return reach_trapping( f, x );
        case mode::most_permissive: return reach_most_permissive( f, x );
        case mode::interval: return reach_interval( f, x );
        case mode::cuttable:
            if ( caps.cuttable_lag < 1 )
                throw invalid_argument( "cuttable lag must be at least 1" );
            return reach_cuttable( f, x, caps.cuttable_lag );
    }
    return config_set( n );
}

config_set reach_set( const boolean_network& f, mode m, const configuration& x, const reach_caps& caps )
{
    if ( x.dimension() != f.dimension() )
        throw dimension_error( "configuration and network dimensions differ" );
    return reach_set( f, m, x.bits(), caps );
}

reach_relation::reach_relation( int n, mode m, std::vector<config_set> rows ) : _n{ n }, _mode{ m }, _rows{ std::move( rows ) }
{
    if ( _rows.size() != state_count( n ) )
        throw invalid_argument( "reach relation needs one row per configuration" );
}

bool reach_relation::is_subset_of( const reach_relation& other ) const
{
    if ( _n != other._n )
        throw dimension_error( "relations of different dimensions" );
    for ( std::size_t x = 0; x < _rows.size(); ++x )
        if ( !_rows[ x ].is_subset_of( other._rows[ x ] ) )
            return false;
    return true;
}

bool reach_relation::reflexive() const
{
    for ( state_t x = 0; x < _rows.size(); ++x )
        if ( !_rows[ x ].contains( x ) )
            return false;
    return true;
}

bool reach_relation::transitive() const
{
    for ( const auto& row : _rows )
    {
        bool ok = true;
        row.for_each( [ & ]( state_t y ) { ok = ok && _rows[ y ].is_subset_of( row ); } );
        if ( !ok )
            return false;
    }
    return true;
}

reach_relation compute_reach_relation( const boolean_network& f, mode m, const reach_caps& caps )
{
    std::vector<config_set> rows;
    rows.reserve( state_count( f.dimension() ) );
    for ( state_t x = 0; x < state_count( f.dimension() ); ++x )
        rows.push_back( reach_set( f, m, x, caps ) );
    return { f.dimension(), m, std::move( rows ) };
}

} // namespace bnmm
