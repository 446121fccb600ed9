#include "bnmm/constructions.hpp"
#include "bnmm/errors.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace bnmm
{

std::vector<boolean_network> enumerate_networks( int n )
{
    if ( n < 1 || n > enumerate_cap )
        throw cap_exceeded( "enumerate", enumerate_cap, n );
    const auto rows = state_count( n );
    const auto base = state_count( n );
    std::size_t total = 1;
    for ( std::size_t r = 0; r < rows; ++r )
        total *= base;

    std::vector<boolean_network> out;
    out.reserve( total );
    for ( std::size_t code = 0; code < total; ++code )
    {
        std::vector<state_t> images( rows );
        auto rest = code;
        for ( std::size_t r = rows; r-- > 0; )
        {
            images[ r ] = static_cast<state_t>( rest % base );
            rest /= base;
        }
        out.emplace_back( n, std::move( images ) );
    }
    return out;
}

boolean_network random_network( int n, std::uint64_t seed )
{
    if ( n < 1 || n > max_dimension )
        throw dimension_error( "random network dimension " + std::to_string( n ) + " out of range" );
    std::mt19937_64 rng{ seed };
    std::vector<state_t> images( state_count( n ) );
    for ( auto& y : images )
        y = static_cast<state_t>( rng() ) & full_mask( n );
    return { n, std::move( images ) };
}

boolean_network product_network( const boolean_network& f, const boolean_network& g )
{
    const int nf = f.dimension();
    const int ng = g.dimension();
    if ( nf + ng > max_dimension )
        throw dimension_error( "product dimension exceeds " + std::to_string( max_dimension ) );
    return boolean_network::from_function( nf + ng, [ & ]( state_t x ) {
        const auto xf = x >> ng;
        const auto xg = x & full_mask( ng );
        return ( f.image( xf ) << ng ) | g.image( xg );
    } );
}

std::size_t mp_lower_bound( int d )
{
    return ( std::size_t{ 1 } << ( d / 2 ) ) + ( std::size_t{ 1 } << ( ( d + 1 ) / 2 ) ) - 1;
}

namespace
{

// Extends `out` by `slots` non-increasing exponents whose powers of two sum
// to k, depth-first from the largest exponents.
bool split_powers( std::size_t slots, std::size_t k, std::vector<int>& out )
{
    if ( slots == 0 )
        return k == 0;
    const int top = out.back();
    for ( int e = top; e >= 0; --e )
    {
        const auto p = std::size_t{ 1 } << e;
        // The remaining slots take between 1 and p each.
        if ( p > k || k - p < slots - 1 || k - p > ( slots - 1 ) * p )
            continue;
        out.push_back( e );
        if ( split_powers( slots - 1, k - p, out ) )
            return true;
        out.pop_back();
    }
    return false;
}

} // namespace

mp_cardinality_network gen_mp_cardinality( int n, std::size_t k )
{
    if ( n < 1 || n > max_dimension )
        throw dimension_error( "dimension " + std::to_string( n ) + " out of range" );
    const auto top = state_count( n );
    if ( k < mp_lower_bound( n ) || k > top )
        throw invalid_argument( "k = " + std::to_string( k ) + " outside [" + std::to_string( mp_lower_bound( n ) ) +
                                ", " + std::to_string( top ) + "]" );
    if ( n == 1 )
        return { boolean_network::constant( 1, 1 ), configuration::zeros( 1 ) };

    // Block C of c components is constant 1. Component j of block D negates
    // when j < e(x_C) and copies itself otherwise; with e monotone and
    // e(1..1) = d, the configurations reached from 0 are exactly the
    // (alpha, a) with a zero outside the first e(alpha) components of D.
    for ( int c = n / 2; c < n; ++c )
    {
        const int d = n - c;
        const auto slots = state_count( c );
        if ( k < state_count( d ) + slots - 1 || k > slots * state_count( d ) )
            continue;
        std::vector<int> exponents{ d };
        if ( !split_powers( slots - 1, k - state_count( d ), exponents ) )
            continue;

        // Larger (weight, value) first is a linear extension of the order
        // read downwards, so non-increasing exponents make e monotone.
        std::vector<state_t> order( slots );
        for ( state_t a = 0; a < slots; ++a )
            order[ a ] = a;
        std::sort( order.begin(), order.end(), []( state_t a, state_t b ) {
            const int wa = std::popcount( a );
            const int wb = std::popcount( b );
            return wa != wb ? wa > wb : a > b;
        } );
        std::vector<int> e( slots );
        for ( std::size_t j = 0; j < slots; ++j )
            e[ order[ j ] ] = exponents[ j ];

        const auto ones_c = full_mask( c ) << d;
        auto f = boolean_network::from_function( n, [ & ]( state_t x ) {
            const auto xc = x >> d;
            const auto xd = x & full_mask( d );
            // The first e components of D are the e most significant bits.
            const auto negate = full_mask( d ) & ~full_mask( d - e[ xc ] );
            return ones_c | ( xd ^ negate );
        } );
        return { std::move( f ), configuration::zeros( n ) };
    }
    throw invalid_argument( "no construction for k = " + std::to_string( k ) + " at n = " + std::to_string( n ) );
}

std::vector<state_t> transient_chain( int n )
{
    std::vector<state_t> t;
    for ( int i = 1; i <= n + 1; ++i )
    {
        state_t x = 0;
        for ( int j = 1; j <= n; ++j )
            if ( j < i || ( i + j ) % 2 == 1 )
                x |= coordinate_bit( n, j - 1 );
        t.push_back( x );
    }
    return t;
}

boolean_network gen_transient( int n )
{
    if ( n < 3 )
        throw invalid_argument( "transient construction needs n >= 3" );
    if ( n > max_dimension )
        throw dimension_error( "dimension " + std::to_string( n ) + " out of range" );
    auto images = boolean_network::identity( n ).images();
    const auto t = transient_chain( n );
    for ( int i = 0; i < n; ++i )
        images[ t[ static_cast<std::size_t>( i ) ] ] = t[ static_cast<std::size_t>( i ) + 1 ];
    images[ 0 ] = 1;
    images[ 1 ] = 0;
    return { n, std::move( images ) };
}

boolean_network gen_hat( const boolean_network& base, state_t s, int n )
{
    const int k = base.dimension();
    if ( n <= k )
        throw invalid_argument( "hat dimension must exceed the base dimension " + std::to_string( k ) );
    if ( n > max_dimension )
        throw dimension_error( "dimension " + std::to_string( n ) + " out of range" );
    if ( ( s & ~full_mask( k ) ) != 0 )
        throw invalid_argument( "special configuration exceeds the base dimension" );
    const int tail = n - k; // middle block plus x_n
    const state_t last = 1;
    const state_t middle = full_mask( tail ) & ~last;
    return boolean_network::from_function( n, [ & ]( state_t x ) -> state_t {
        const auto xb = x >> tail;
        const auto rest = x & full_mask( tail );
        if ( rest & last )
            return ( ( x ^ full_mask( n ) ) & ~last ) | last;
        if ( ( rest & middle ) != 0 )
            return x;
        return ( base.image( xb ) << tail ) | ( xb == s ? last : 0 );
    } );
}

} // namespace bnmm
