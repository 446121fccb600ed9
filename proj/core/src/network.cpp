#include "bnmm/network.hpp"
#include "bnmm/errors.hpp"

namespace bnmm
{

boolean_network::boolean_network( int n, std::vector<state_t> images, std::optional<network_source> source )
        : _n{ n }, _images{ std::move( images ) }, _source{ std::move( source ) }
{
    if ( n < 1 || n > max_dimension )
        throw dimension_error( "network dimension " + std::to_string( n ) + " out of range [1, " +
                               std::to_string( max_dimension ) + "]" );
    if ( _images.size() != state_count( n ) )
        throw invalid_argument( "network of dimension " + std::to_string( n ) + " needs " +
                                std::to_string( state_count( n ) ) + " table rows, got " +
                                std::to_string( _images.size() ) );
    for ( auto y : _images )
        if ( ( y & ~full_mask( n ) ) != 0 )
            throw invalid_argument( "network image exceeds dimension" );
    if ( _source && _source->names.size() != static_cast<std::size_t>( n ) )
        throw invalid_argument( "network source must name every component" );
}

boolean_network boolean_network::from_function( int n, const std::function<state_t( state_t )>& f )
{
    if ( n < 1 || n > max_dimension )
        throw dimension_error( "network dimension " + std::to_string( n ) + " out of range" );
    std::vector<state_t> images( state_count( n ) );
    for ( state_t x = 0; x < images.size(); ++x )
        images[ x ] = f( x ) & full_mask( n );
    return { n, std::move( images ) };
}

boolean_network boolean_network::identity( int n )
{
    return from_function( n, []( state_t x ) { return x; } );
}

boolean_network boolean_network::negation( int n )
{
    return from_function( n, [ n ]( state_t x ) { return x ^ full_mask( n ); } );
}

boolean_network boolean_network::constant( int n, state_t value )
{
    return from_function( n, [ value ]( state_t ) { return value; } );
}

configuration boolean_network::operator()( const configuration& x ) const
{
    if ( x.dimension() != _n )
        throw dimension_error( "configuration of dimension " + std::to_string( x.dimension() ) +
                               " applied to network of dimension " + std::to_string( _n ) );
    return { _n, _images[ x.bits() ] };
}

std::string boolean_network::component_name( int i ) const
{
    if ( _source )
        return _source->names[ static_cast<std::size_t>( i ) ];
    return "x" + std::to_string( i + 1 );
}

boolean_network compose( const boolean_network& outer, const boolean_network& inner )
{
    if ( outer.dimension() != inner.dimension() )
        throw dimension_error( "composition of networks with different dimensions" );
    std::vector<state_t> images( inner.images().size() );
    for ( state_t x = 0; x < images.size(); ++x )
        images[ x ] = outer.image( inner.image( x ) );
    return { inner.dimension(), std::move( images ) };
}

boolean_network power( const boolean_network& f, unsigned k )
{
    auto result = boolean_network::identity( f.dimension() );
    auto base = f;
    while ( k != 0 )
    {
        if ( k & 1u )
            result = compose( base, result );
        base = compose( base, base );
        k >>= 1;
    }
    return result;
}

} // namespace bnmm
