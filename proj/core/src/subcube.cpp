#include "bnmm/subcube.hpp"
#include "bnmm/errors.hpp"

#include <algorithm>

namespace bnmm
{

subcube::subcube( int n, state_t fixed, state_t values ) : _n{ n }, _fixed{ fixed }, _values{ values }
{
    if ( n < 0 || n > max_dimension )
        throw dimension_error( "subcube dimension " + std::to_string( n ) + " out of range" );
    if ( ( fixed & ~full_mask( n ) ) != 0 )
        throw invalid_argument( "subcube fixes coordinates outside its dimension" );
    if ( ( values & ~fixed ) != 0 )
        throw invalid_argument( "subcube values set on free coordinates" );
}

subcube subcube::parse( std::string_view text )
{
    if ( text.empty() || text.size() > static_cast<std::size_t>( max_dimension ) )
        throw invalid_argument( "subcube '" + std::string( text ) + "' has invalid length" );
    const int n = static_cast<int>( text.size() );
    state_t fixed = 0;
    state_t values = 0;
    for ( int i = 0; i < n; ++i )
    {
        const char c = text[ static_cast<std::size_t>( i ) ];
        const auto bit = coordinate_bit( n, i );
        if ( c == '0' || c == '1' )
        {
            fixed |= bit;
            if ( c == '1' )
                values |= bit;
        }
        else if ( c != '*' )
            throw invalid_argument( "subcube '" + std::string( text ) + "' must contain only 0, 1 and *" );
    }
    return { n, fixed, values };
}

state_t subcube::opposite( state_t x ) const
{
    if ( !contains( x ) )
        throw invalid_argument( "opposite of " + bits_to_string( _n, x ) + " in " + str() +
                                ": configuration not in subcube" );
    return x ^ free();
}

configuration subcube::opposite( const configuration& x ) const
{
    if ( x.dimension() != _n )
        throw dimension_error( "configuration and subcube dimensions differ" );
    return { _n, opposite( x.bits() ) };
}

std::vector<state_t> subcube::members() const
{
    std::vector<state_t> out;
    out.reserve( size() );
    for_each_member( [ &out ]( state_t x ) { out.push_back( x ); } );
    std::sort( out.begin(), out.end() );
    return out;
}

config_set subcube::member_set() const
{
    config_set out( _n );
    for_each_member( [ &out ]( state_t x ) { out.insert( x ); } );
    return out;
}

std::string subcube::str() const
{
    std::string s( static_cast<std::size_t>( _n ), '*' );
    for ( int i = 0; i < _n; ++i )
    {
        const auto bit = coordinate_bit( _n, i );
        if ( _fixed & bit )
            s[ static_cast<std::size_t>( i ) ] = ( _values & bit ) ? '1' : '0';
    }
    return s;
}

subcube principal_subcube( int n, const std::vector<state_t>& configurations )
{
    if ( configurations.empty() )
        throw invalid_argument( "principal subcube of an empty set" );
    state_t all_and = full_mask( n );
    state_t all_or = 0;
    for ( auto x : configurations )
    {
        all_and &= x;
        all_or |= x;
    }
    const auto fixed = full_mask( n ) & ~( all_and ^ all_or );
    return { n, fixed, all_and & fixed };
}

subcube principal_subcube( const std::vector<configuration>& configurations )
{
    if ( configurations.empty() )
        throw invalid_argument( "principal subcube of an empty set" );
    const int n = configurations.front().dimension();
    std::vector<state_t> bits;
    bits.reserve( configurations.size() );
    for ( const auto& x : configurations )
    {
        if ( x.dimension() != n )
            throw dimension_error( "principal subcube of configurations with different dimensions" );
        bits.push_back( x.bits() );
    }
    return principal_subcube( n, bits );
}

subcube principal_subcube( const config_set& configurations )
{
    return principal_subcube( configurations.dimension(), configurations.states() );
}

std::optional<subcube> intersect( const subcube& x, const subcube& y )
{
    if ( x.dimension() != y.dimension() )
        throw dimension_error( "intersection of subcubes with different dimensions" );
    if ( ( ( x.values() ^ y.values() ) & x.fixed() & y.fixed() ) != 0 )
        return std::nullopt;
    return subcube{ x.dimension(), x.fixed() | y.fixed(), x.values() | y.values() };
}

subcube_collection::subcube_collection( int n, std::vector<subcube> members ) : _n{ n }, _members{ std::move( members ) }
{
    for ( const auto& m : _members )
        if ( m.dimension() != n )
            throw dimension_error( "collection member has the wrong dimension" );
    std::sort( _members.begin(), _members.end() );
    _members.erase( std::unique( _members.begin(), _members.end() ), _members.end() );
}

bool subcube_collection::insert( const subcube& x )
{
    if ( x.dimension() != _n )
        throw dimension_error( "collection member has the wrong dimension" );
    const auto it = std::lower_bound( _members.begin(), _members.end(), x );
    if ( it != _members.end() && *it == x )
        return false;
    _members.insert( it, x );
    return true;
}

bool subcube_collection::contains( const subcube& x ) const
{
    return std::binary_search( _members.begin(), _members.end(), x );
}

subcube subcube_collection::focus( state_t x ) const
{
    subcube result = subcube::full( _n );
    bool any = false;
    for ( const auto& m : _members )
    {
        if ( !m.contains( x ) )
            continue;
        // Members containing x always intersect.
        result = any ? *intersect( result, m ) : m;
        any = true;
    }
    return result;
}

config_set subcube_collection::cover() const
{
    config_set out( _n );
    for ( const auto& m : _members )
        m.for_each_member( [ &out ]( state_t x ) { out.insert( x ); } );
    return out;
}

std::string subcube_collection::str() const
{
    std::string out;
    for ( const auto& m : _members )
        out += m.str() + '\n';
    return out;
}

} // namespace bnmm
