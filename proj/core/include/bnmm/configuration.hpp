#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bnmm
{

// Hard storage limit: configurations are packed into 32-bit words and
// truth tables hold 2^n entries. Operations carry their own, smaller caps.
inline constexpr int max_dimension = 24;

// Configurations of B^n are packed into the integer whose binary digits are
// x_1 ... x_n, x_1 being the most significant digit. Coordinates are 0-based
// in the API and 1-based in every text format.
using state_t = std::uint32_t;

[[nodiscard]] constexpr state_t coordinate_bit( int n, int i ) { return state_t{ 1 } << ( n - 1 - i ); }
[[nodiscard]] constexpr state_t full_mask( int n ) { return n >= 32 ? ~state_t{ 0 } : ( state_t{ 1 } << n ) - 1; }
[[nodiscard]] constexpr std::size_t state_count( int n ) { return std::size_t{ 1 } << n; }

// Packs an arbitrary set of 0-based coordinates into a mask.
[[nodiscard]] state_t coordinate_mask( int n, const std::vector<int>& coordinates );
[[nodiscard]] std::vector<int> coordinates_of( int n, state_t mask );

[[nodiscard]] std::string bits_to_string( int n, state_t bits );

class configuration
{
    int _n = 0;
    state_t _bits = 0;

public:
    configuration() = default;
    configuration( int n, state_t bits );

    // Parses a string of '0'/'1' characters, x_1 first.
    [[nodiscard]] static configuration parse( std::string_view text );
    [[nodiscard]] static configuration zeros( int n ) { return { n, 0 }; }
    [[nodiscard]] static configuration ones( int n ) { return { n, full_mask( n ) }; }

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] state_t bits() const { return _bits; }

    [[nodiscard]] bool operator[]( int i ) const { return ( _bits & coordinate_bit( _n, i ) ) != 0; }
    [[nodiscard]] configuration with( int i, bool value ) const;
    [[nodiscard]] configuration flipped( int i ) const { return { _n, _bits ^ coordinate_bit( _n, i ) }; }
    [[nodiscard]] configuration negated() const { return { _n, _bits ^ full_mask( _n ) }; }

    [[nodiscard]] std::string str() const { return bits_to_string( _n, _bits ); }

    friend auto operator<=>( const configuration&, const configuration& ) = default;
};

// Delta(x, y): the 0-based coordinates where x and y differ.
[[nodiscard]] std::vector<int> difference( const configuration& x, const configuration& y );
[[nodiscard]] int hamming_distance( const configuration& x, const configuration& y );

// A set of configurations of B^n, stored as a 2^n-bit array.
class config_set
{
    int _n = 0;
    std::vector<std::uint64_t> _words;

public:
    config_set() = default;
    explicit config_set( int n );

    [[nodiscard]] static config_set full( int n );

    [[nodiscard]] int dimension() const { return _n; }

    void insert( state_t x ) { _words[ x >> 6 ] |= std::uint64_t{ 1 } << ( x & 63 ); }
    void insert( const configuration& x ) { insert( x.bits() ); }
    void erase( state_t x ) { _words[ x >> 6 ] &= ~( std::uint64_t{ 1 } << ( x & 63 ) ); }
    [[nodiscard]] bool contains( state_t x ) const { return ( _words[ x >> 6 ] >> ( x & 63 ) ) & 1; }
    [[nodiscard]] bool contains( const configuration& x ) const { return contains( x.bits() ); }

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const { return size() == 0; }

    [[nodiscard]] bool is_subset_of( const config_set& other ) const;
    config_set& operator|=( const config_set& other );
    config_set& operator&=( const config_set& other );
    [[nodiscard]] config_set minus( const config_set& other ) const;

    // Members in increasing integer order (lexicographic on x_1 ... x_n).
    [[nodiscard]] std::vector<state_t> states() const;
    [[nodiscard]] std::vector<configuration> members() const;

    template <typename F>
    void for_each( F&& visit ) const
    {
        for ( std::size_t w = 0; w < _words.size(); ++w )
        {
            auto word = _words[ w ];
            while ( word != 0 )
            {
                const int b = std::countr_zero( word );
                visit( static_cast<state_t>( w * 64 + b ) );
                word &= word - 1;
            }
        }
    }

    friend bool operator==( const config_set&, const config_set& ) = default;
};

} // namespace bnmm
