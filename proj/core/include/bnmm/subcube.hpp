#pragma once

#include "bnmm/configuration.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnmm
{

// X = { x : x_S = values_S } for the fixed coordinates S. Values outside S
// are kept at zero so that equal subcubes have equal representations.
class subcube
{
    int _n = 0;
    state_t _fixed = 0;
    state_t _values = 0;

public:
    subcube() = default;
    subcube( int n, state_t fixed, state_t values );

    [[nodiscard]] static subcube full( int n ) { return { n, 0, 0 }; }
    [[nodiscard]] static subcube point( int n, state_t x ) { return { n, full_mask( n ), x }; }
    [[nodiscard]] static subcube point( const configuration& x ) { return point( x.dimension(), x.bits() ); }
    // [x, y]: the smallest subcube containing x and y.
    [[nodiscard]] static subcube span( int n, state_t x, state_t y ) { return { n, full_mask( n ) & ~( x ^ y ), x & ~( x ^ y ) }; }
    // n-character string over {0, 1, *}.
    [[nodiscard]] static subcube parse( std::string_view text );

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] state_t fixed() const { return _fixed; }
    [[nodiscard]] state_t values() const { return _values; }
    [[nodiscard]] state_t free() const { return full_mask( _n ) & ~_fixed; }
    [[nodiscard]] int free_count() const { return std::popcount( free() ); }
    [[nodiscard]] std::size_t size() const { return std::size_t{ 1 } << free_count(); }

    [[nodiscard]] bool contains( state_t x ) const { return ( x & _fixed ) == _values; }
    [[nodiscard]] bool contains( const configuration& x ) const { return contains( x.bits() ); }
    [[nodiscard]] bool is_subset_of( const subcube& other ) const
    {
        return ( other._fixed & ~_fixed ) == 0 && ( _values & other._fixed ) == other._values;
    }

    // X - x: the unique y with X = [x, y]. Requires x in X.
    [[nodiscard]] state_t opposite( state_t x ) const;
    [[nodiscard]] configuration opposite( const configuration& x ) const;

    // Smallest subcube containing X and y.
    [[nodiscard]] subcube hull_with( state_t y ) const
    {
        const auto keep = _fixed & ~( _values ^ y );
        return { _n, keep, _values & keep };
    }

    template <typename F>
    void for_each_member( F&& visit ) const
    {
        const auto fr = free();
        state_t sub = 0;
        do
        {
            visit( _values | sub );
            sub = ( sub - fr ) & fr;
        } while ( sub != 0 );
    }

    [[nodiscard]] std::vector<state_t> members() const;
    [[nodiscard]] config_set member_set() const;

    [[nodiscard]] std::string str() const;

    // Canonical order: by fixed mask, then by values.
    friend auto operator<=>( const subcube& a, const subcube& b )
    {
        if ( auto c = a._n <=> b._n; c != 0 )
            return c;
        if ( auto c = a._fixed <=> b._fixed; c != 0 )
            return c;
        return a._values <=> b._values;
    }
    friend bool operator==( const subcube&, const subcube& ) = default;
};

// [A]: the smallest subcube containing every configuration of A.
[[nodiscard]] subcube principal_subcube( int n, const std::vector<state_t>& configurations );
[[nodiscard]] subcube principal_subcube( const std::vector<configuration>& configurations );
[[nodiscard]] subcube principal_subcube( const config_set& configurations );

// X ∩ Y, or nothing when disjoint.
[[nodiscard]] std::optional<subcube> intersect( const subcube& x, const subcube& y );

// A set of subcubes of B^n kept in canonical order.
class subcube_collection
{
    int _n = 0;
    std::vector<subcube> _members;

public:
    subcube_collection() = default;
    explicit subcube_collection( int n ) : _n{ n } {}
    subcube_collection( int n, std::vector<subcube> members );

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] const std::vector<subcube>& members() const { return _members; }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] bool empty() const { return _members.empty(); }

    // Returns false when already present.
    bool insert( const subcube& x );
    [[nodiscard]] bool contains( const subcube& x ) const;

    // A(x): intersection of the members containing x; B^n when none does.
    [[nodiscard]] subcube focus( state_t x ) const;

    // Union of the members as a set of configurations.
    [[nodiscard]] config_set cover() const;

    // One subcube per line, canonical order.
    [[nodiscard]] std::string str() const;

    friend bool operator==( const subcube_collection&, const subcube_collection& ) = default;
};

} // namespace bnmm
