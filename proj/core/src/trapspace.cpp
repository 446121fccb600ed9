#include "bnmm/trapspace.hpp"
#include "bnmm/errors.hpp"

#include <algorithm>

namespace bnmm
{

namespace
{

void require_same_dimension( const boolean_network& f, const boolean_network& g )
{
    if ( f.dimension() != g.dimension() )
        throw dimension_error( "networks of dimension " + std::to_string( f.dimension() ) + " and " +
                               std::to_string( g.dimension() ) + " are not comparable" );
}

} // namespace

subcube principal_trapspace( const boolean_network& f, state_t x )
{
    const int n = f.dimension();
    auto done = subcube::point( n, x );
    auto current = done.hull_with( f.image( x ) );
    while ( current != done )
    {
        auto next = current;
        current.for_each_member( [ & ]( state_t y ) {
            if ( !done.contains( y ) )
                next = next.hull_with( f.image( y ) );
        } );
        done = current;
        current = next;
    }
    return current;
}

subcube principal_trapspace( const boolean_network& f, const configuration& x )
{
    if ( x.dimension() != f.dimension() )
        throw dimension_error( "configuration and network dimensions differ" );
    return principal_trapspace( f, x.bits() );
}

std::vector<subcube> principal_trapspace_table( const boolean_network& f )
{
    std::vector<subcube> out;
    out.reserve( state_count( f.dimension() ) );
    for ( state_t x = 0; x < state_count( f.dimension() ); ++x )
        out.push_back( principal_trapspace( f, x ) );
    return out;
}

bool is_trapspace( const boolean_network& f, const subcube& x )
{
    if ( x.dimension() != f.dimension() )
        throw dimension_error( "subcube and network dimensions differ" );
    bool closed = true;
    x.for_each_member( [ & ]( state_t y ) { closed = closed && x.contains( f.image( y ) ); } );
    return closed;
}

subcube_collection trapspaces( const boolean_network& f, trapspace_kind which, int all_cap )
{
    const int n = f.dimension();
    switch ( which )
    {
        case trapspace_kind::all:
        {
            if ( n > all_cap )
                throw cap_exceeded( "trapspaces all", all_cap, n );
            std::vector<subcube> found;
            for ( state_t fixed = 0; fixed < state_count( n ); ++fixed )
            {
                // Values run over the submasks of `fixed` in increasing order.
                state_t values = 0;
                do
                {
                    const subcube x{ n, fixed, values };
                    if ( is_trapspace( f, x ) )
                        found.push_back( x );
                    values = ( values - fixed ) & fixed;
                } while ( values != 0 );
            }
            return { n, std::move( found ) };
        }
        case trapspace_kind::principal: return { n, principal_trapspace_table( f ) };
        case trapspace_kind::minimal:
        {
            const auto principal = trapspaces( f, trapspace_kind::principal );
            std::vector<subcube> minimal;
            for ( const auto& a : principal.members() )
            {
                const bool has_smaller = std::any_of( principal.members().begin(), principal.members().end(),
                                                      [ & ]( const subcube& b ) { return b != a && b.is_subset_of( a ); } );
                if ( !has_smaller )
                    minimal.push_back( a );
            }
            return { n, std::move( minimal ) };
        }
    }
    return subcube_collection{ n };
}

config_set min_trapspace_configs( const boolean_network& f )
{
    const auto table = principal_trapspace_table( f );
    const auto minimal = trapspaces( f, trapspace_kind::minimal );
    config_set out( f.dimension() );
    for ( state_t x = 0; x < table.size(); ++x )
        if ( minimal.contains( table[ x ] ) )
            out.insert( x );
    return out;
}

boolean_network trapping_closure( const boolean_network& f )
{
    const auto table = principal_trapspace_table( f );
    std::vector<state_t> images( table.size() );
    for ( state_t x = 0; x < table.size(); ++x )
        images[ x ] = table[ x ].opposite( x );
    return { f.dimension(), std::move( images ) };
}

boolean_network min_trapping_closure( const boolean_network& f )
{
    const int n = f.dimension();
    const auto table = principal_trapspace_table( f );
    const auto members = min_trapspace_configs( f );
    std::vector<state_t> images( table.size() );
    for ( state_t x = 0; x < table.size(); ++x )
        images[ x ] = members.contains( x ) ? table[ x ].opposite( x ) : ( x ^ full_mask( n ) );
    return { n, std::move( images ) };
}

boolean_network collection_to_network( const subcube_collection& collection )
{
    const int n = collection.dimension();
    std::vector<state_t> images( state_count( n ) );
    for ( state_t x = 0; x < images.size(); ++x )
        images[ x ] = collection.focus( x ).opposite( x );
    return { n, std::move( images ) };
}

bool lattice_leq( const boolean_network& f, const boolean_network& g )
{
    require_same_dimension( f, g );
    for ( state_t x = 0; x < f.images().size(); ++x )
    {
        const auto df = x ^ f.image( x );
        const auto dg = x ^ g.image( x );
        if ( ( df & ~dg ) != 0 )
            return false;
    }
    return true;
}

boolean_network lattice_join( const boolean_network& f, const boolean_network& g )
{
    require_same_dimension( f, g );
    std::vector<state_t> images( f.images().size() );
    for ( state_t x = 0; x < images.size(); ++x )
        images[ x ] = x ^ ( ( x ^ f.image( x ) ) | ( x ^ g.image( x ) ) );
    return { f.dimension(), std::move( images ) };
}

boolean_network lattice_meet( const boolean_network& f, const boolean_network& g )
{
    require_same_dimension( f, g );
    std::vector<state_t> images( f.images().size() );
    for ( state_t x = 0; x < images.size(); ++x )
        images[ x ] = x ^ ( ( x ^ f.image( x ) ) & ( x ^ g.image( x ) ) );
    return { f.dimension(), std::move( images ) };
}

bool trapspace_equivalent( const boolean_network& f, const boolean_network& g )
{
    require_same_dimension( f, g );
    return trapping_closure( f ) == trapping_closure( g );
}

bool is_trapping( const boolean_network& g )
{
    const int n = g.dimension();
    for ( state_t x = 0; x < state_count( n ); ++x )
    {
        const auto out = subcube::span( n, x, g.image( x ) );
        bool closed = true;
        out.for_each_member( [ & ]( state_t y ) { closed = closed && out.contains( g.image( y ) ); } );
        if ( !closed )
            return false;
    }
    return true;
}

} // namespace bnmm
