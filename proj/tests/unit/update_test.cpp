#include "test_helpers.hpp"

#include <bnmm/constructions.hpp>
#include <bnmm/errors.hpp>
#include <bnmm/trapspace.hpp>
#include <bnmm/update.hpp>

#include <gtest/gtest.h>

namespace bnmm
{
namespace
{

using test::bits;
using test::fx;

TEST( apply_update, blocks_of_the_first_example )
{
    const auto& f = fx( "example1" );
    const auto x = configuration::parse( "000" );
    EXPECT_EQ( apply_update( f, { { 0, 1 } }, x ).str(), "110" );
    EXPECT_EQ( apply_update( f, { {} }, x ).str(), "000" );
    EXPECT_EQ( apply_update( f, { { 2 } }, x ).str(), "000" );
    EXPECT_THROW( (void)apply_update( f, { { 3 } }, x ), invalid_argument );
}

TEST( apply_update, blocks_fold_left_to_right )
{
    const auto& f = fx( "N_H" );
    // 000 -f^(1)-> 100 -f^(2)-> 110
    EXPECT_EQ( apply_update( f, { { 0 }, { 1 } }, configuration::parse( "000" ) ).str(), "110" );
    // 000 -f^(2)-> 000 -f^(1)-> 100
    EXPECT_EQ( apply_update( f, { { 1 }, { 0 } }, configuration::parse( "000" ) ).str(), "100" );
}

TEST( apply_update, full_block_is_f_and_outside_is_untouched )
{
    for ( int n = 1; n <= 4; ++n )
        for ( const auto& f : test::samples( n, 20, 100 + n ) )
            for ( state_t x = 0; x < state_count( n ); ++x )
            {
                EXPECT_EQ( apply_update( f, std::vector<state_t>{ full_mask( n ) }, x ), f.image( x ) );
                for ( state_t s = 0; s < state_count( n ); ++s )
                {
                    const auto y = apply_update( f, std::vector<state_t>{ s }, x );
                    EXPECT_EQ( y & ~s, x & ~s );
                }
            }
}

TEST( interaction_graph, examples )
{
    const auto g = build_interaction_graph( fx( "N_H" ) );
    EXPECT_EQ( g.edges(), ( std::vector<std::pair<int, int>>{ { 0, 1 }, { 1, 2 } } ) );
    EXPECT_TRUE( g.acyclic() );
    EXPECT_TRUE( build_interaction_graph( boolean_network::constant( 3, 5 ) ).edges().empty() );
    const auto neg = build_interaction_graph( boolean_network::negation( 3 ) );
    EXPECT_EQ( neg.edges(), ( std::vector<std::pair<int, int>>{ { 0, 0 }, { 1, 1 }, { 2, 2 } } ) );
    EXPECT_FALSE( neg.acyclic() );
}

TEST( interaction_graph, edges_match_the_flip_test )
{
    for ( const auto& f : test::samples( 3, 30, 5 ) )
    {
        const auto g = build_interaction_graph( f );
        for ( int i = 0; i < 3; ++i )
            for ( int j = 0; j < 3; ++j )
            {
                bool depends = false;
                for ( state_t x = 0; x < 8; ++x )
                    depends |= f.local( j, x ) != f.local( j, x ^ coordinate_bit( 3, i ) );
                EXPECT_EQ( g.has_edge( i, j ), depends );
            }
    }
}

TEST( transient_and_period, examples )
{
    EXPECT_EQ( transient_and_period( boolean_network::negation( 3 ) ), ( transient_period{ 0, 2 } ) );
    EXPECT_EQ( transient_and_period( gen_transient( 4 ) ), ( transient_period{ 4, 2 } ) );
    EXPECT_EQ( transient_and_period( fx( "example1" ) ), ( transient_period{ 2, 1 } ) );
    EXPECT_EQ( transient_and_period( boolean_network::identity( 2 ) ), ( transient_period{ 0, 1 } ) );
}

TEST( transient_and_period, matches_powers )
{
    for ( const auto& f : test::samples( 3, 40, 11 ) )
    {
        const auto tp = transient_and_period( f );
        EXPECT_EQ( power( f, tp.transient + tp.period ), power( f, tp.transient ) );
        if ( tp.transient > 0 )
            EXPECT_NE( power( f, tp.transient - 1 + tp.period ), power( f, tp.transient - 1 ) );
        for ( unsigned p = 1; p < tp.period; ++p )
            EXPECT_NE( power( f, tp.transient + p ), power( f, tp.transient ) );
    }
}

TEST( transient_and_period, trapping_networks_are_bounded )
{
    auto check = [ & ]( const boolean_network& f ) {
        if ( !is_trapping( f ) )
            return;
        const auto tp = transient_and_period( f );
        EXPECT_LE( tp.transient, static_cast<unsigned>( f.dimension() ) );
        EXPECT_LE( tp.period, 2u );
    };
    for ( const auto& f : test::all_n2() )
        check( f );
    for ( int n = 3; n <= 4; ++n )
    {
        for ( const auto& f : test::samples( n, 300, 1000 * n ) )
            check( f );
        for ( const auto& f : test::samples( n, 100, 77 ) )
            check( trapping_closure( f ) );
    }
}

} // namespace
} // namespace bnmm
