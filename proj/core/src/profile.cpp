#include "bnmm/profile.hpp"
#include "bnmm/errors.hpp"
#include "bnmm/subcube.hpp"
#include "bnmm/trapspace.hpp"
#include "bnmm/update.hpp"

#include <vector>

namespace bnmm
{

namespace
{

bool block_is_bijection( const boolean_network& f, state_t block )
{
    std::vector<bool> hit( state_count( f.dimension() ), false );
    for ( state_t x = 0; x < hit.size(); ++x )
    {
        const auto y = update_block( f, block, x );
        if ( hit[ y ] )
            return false;
        hit[ y ] = true;
    }
    return true;
}

} // namespace

bool is_commutative( const boolean_network& f )
{
    const int n = f.dimension();
    for ( int i = 0; i < n; ++i )
        for ( int j = i + 1; j < n; ++j )
        {
            const auto bi = coordinate_bit( n, i );
            const auto bj = coordinate_bit( n, j );
            for ( state_t x = 0; x < state_count( n ); ++x )
                if ( update_block( f, bj, update_block( f, bi, x ) ) != update_block( f, bi, update_block( f, bj, x ) ) )
                    return false;
        }
    return true;
}

bool is_bijective( const boolean_network& f ) { return block_is_bijection( f, full_mask( f.dimension() ) ); }

bool is_locally_bijective( const boolean_network& f )
{
    for ( int i = 0; i < f.dimension(); ++i )
        if ( !block_is_bijection( f, coordinate_bit( f.dimension(), i ) ) )
            return false;
    return true;
}

bool is_globally_bijective( const boolean_network& f )
{
    for ( state_t s = 0; s < state_count( f.dimension() ); ++s )
        if ( !block_is_bijection( f, s ) )
            return false;
    return true;
}

bool is_negation_on_subcubes( const boolean_network& f )
{
    // The spans [x, f(x)] must partition B^n, with f mapping each member of
    // a block to its opposite in the block.
    const int n = f.dimension();
    for ( state_t x = 0; x < state_count( n ); ++x )
    {
        const auto block = subcube::span( n, x, f.image( x ) );
        bool ok = true;
        block.for_each_member( [ & ]( state_t y ) { ok = ok && f.image( y ) == block.opposite( y ); } );
        if ( !ok )
            return false;
    }
    return true;
}

network_profile classify_network( const boolean_network& f, int cap )
{
    const int n = f.dimension();
    if ( n > cap )
        throw cap_exceeded( "classify_network", cap, n );
    network_profile p;
    p.commutative = is_commutative( f );
    p.trapping = is_trapping( f );
    p.min_trapping = min_trapping_closure( f ) == f;
    p.locally_bijective = is_locally_bijective( f );
    p.globally_bijective = is_globally_bijective( f );
    p.negation_on_subcubes = is_negation_on_subcubes( f );
    p.increasing = true;
    for ( state_t x = 0; x < state_count( n ); ++x )
        if ( ( f.image( x ) & x ) != x )
            p.increasing = false;
    const auto f2 = compose( f, f );
    p.idempotent = f2 == f;
    p.dynamically_local = compose( f, f2 ) == f;
    p.bijective = is_bijective( f );
    p.acyclic_interaction = build_interaction_graph( f ).acyclic();
    const auto tp = transient_and_period( f );
    p.transient = tp.transient;
    p.period = tp.period;
    return p;
}

} // namespace bnmm
