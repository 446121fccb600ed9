#include "bnmm/configuration.hpp"
#include "bnmm/errors.hpp"

#include <algorithm>

namespace bnmm
{

parse_error::parse_error( const std::string& message, std::size_t line, std::size_t column )
        : error{ "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message },
          _line{ line }, _column{ column }
{
}

cap_exceeded::cap_exceeded( std::string operation, int cap, int requested )
        : error{ operation + ": dimension " + std::to_string( requested ) + " exceeds cap " + std::to_string( cap ) },
          _operation{ std::move( operation ) }, _cap{ cap }, _requested{ requested }
{
}

state_t coordinate_mask( int n, const std::vector<int>& coordinates )
{
    state_t mask = 0;
    for ( int i : coordinates )
    {
        if ( i < 0 || i >= n )
            throw invalid_argument( "coordinate " + std::to_string( i + 1 ) + " out of range [1, " +
                                    std::to_string( n ) + "]" );
        mask |= coordinate_bit( n, i );
    }
    return mask;
}

std::vector<int> coordinates_of( int n, state_t mask )
{
    std::vector<int> out;
    for ( int i = 0; i < n; ++i )
        if ( mask & coordinate_bit( n, i ) )
            out.push_back( i );
    return out;
}

std::string bits_to_string( int n, state_t bits )
{
    std::string s( static_cast<std::size_t>( n ), '0' );
    for ( int i = 0; i < n; ++i )
        if ( bits & coordinate_bit( n, i ) )
            s[ static_cast<std::size_t>( i ) ] = '1';
    return s;
}

configuration::configuration( int n, state_t bits ) : _n{ n }, _bits{ bits }
{
    if ( n < 0 || n > max_dimension )
        throw dimension_error( "configuration dimension " + std::to_string( n ) + " out of range" );
    if ( ( bits & ~full_mask( n ) ) != 0 )
        throw invalid_argument( "configuration bits exceed dimension " + std::to_string( n ) );
}

configuration configuration::parse( std::string_view text )
{
    if ( text.empty() || text.size() > static_cast<std::size_t>( max_dimension ) )
        throw invalid_argument( "configuration '" + std::string( text ) + "' has invalid length" );
    const int n = static_cast<int>( text.size() );
    state_t bits = 0;
    for ( int i = 0; i < n; ++i )
    {
        const char c = text[ static_cast<std::size_t>( i ) ];
        if ( c == '1' )
            bits |= coordinate_bit( n, i );
        else if ( c != '0' )
            throw invalid_argument( "configuration '" + std::string( text ) + "' must contain only 0 and 1" );
    }
    return { n, bits };
}

configuration configuration::with( int i, bool value ) const
{
    const auto bit = coordinate_bit( _n, i );
    return { _n, value ? ( _bits | bit ) : ( _bits & ~bit ) };
}

std::vector<int> difference( const configuration& x, const configuration& y )
{
    if ( x.dimension() != y.dimension() )
        throw dimension_error( "difference of configurations with different dimensions" );
    return coordinates_of( x.dimension(), x.bits() ^ y.bits() );
}

int hamming_distance( const configuration& x, const configuration& y )
{
    if ( x.dimension() != y.dimension() )
        throw dimension_error( "distance between configurations with different dimensions" );
    return std::popcount( x.bits() ^ y.bits() );
}

config_set::config_set( int n ) : _n{ n }, _words( ( state_count( n ) + 63 ) / 64, 0 ) {}

config_set config_set::full( int n )
{
    config_set s( n );
    const auto count = state_count( n );
    for ( std::size_t w = 0; w < s._words.size(); ++w )
    {
        const auto remaining = count - w * 64;
        s._words[ w ] = remaining >= 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << remaining ) - 1 );
    }
    return s;
}

std::size_t config_set::size() const
{
    std::size_t total = 0;
    for ( auto w : _words )
        total += static_cast<std::size_t>( std::popcount( w ) );
    return total;
}

bool config_set::is_subset_of( const config_set& other ) const
{
    if ( _n != other._n )
        throw dimension_error( "subset test between sets of different dimensions" );
    for ( std::size_t w = 0; w < _words.size(); ++w )
        if ( ( _words[ w ] & ~other._words[ w ] ) != 0 )
            return false;
    return true;
}

config_set& config_set::operator|=( const config_set& other )
{
    if ( _n != other._n )
        throw dimension_error( "union of sets of different dimensions" );
    for ( std::size_t w = 0; w < _words.size(); ++w )
        _words[ w ] |= other._words[ w ];
    return *this;
}

config_set& config_set::operator&=( const config_set& other )
{
    if ( _n != other._n )
        throw dimension_error( "intersection of sets of different dimensions" );
    for ( std::size_t w = 0; w < _words.size(); ++w )
        _words[ w ] &= other._words[ w ];
    return *this;
}

config_set config_set::minus( const config_set& other ) const
{
    if ( _n != other._n )
        throw dimension_error( "difference of sets of different dimensions" );
    config_set out = *this;
    for ( std::size_t w = 0; w < _words.size(); ++w )
        out._words[ w ] &= ~other._words[ w ];
    return out;
}

std::vector<state_t> config_set::states() const
{
    std::vector<state_t> out;
    for_each( [ &out ]( state_t x ) { out.push_back( x ); } );
    return out;
}

std::vector<configuration> config_set::members() const
{
    std::vector<configuration> out;
    for_each( [ &, this ]( state_t x ) { out.emplace_back( _n, x ); } );
    return out;
}

} // namespace bnmm
