#include "test_helpers.hpp"

#include <bnmm/constructions.hpp>
#include <bnmm/hierarchy.hpp>
#include <bnmm/trapspace.hpp>

#include <gtest/gtest.h>

namespace bnmm
{
namespace
{

using test::fx;

TEST( check_hierarchy, every_dimension_two_network )
{
    for ( const auto& f : test::all_n2() )
    {
        const auto r = check_hierarchy( f );
        EXPECT_TRUE( r.ok() ) << r.violations.front().containment;
        EXPECT_TRUE( r.excluded.empty() );
        for ( auto [ mu, nu ] : hierarchy_containments )
            EXPECT_TRUE( r.contained[ mode_index( mu ) ][ mode_index( nu ) ] );
    }
}

TEST( check_hierarchy, sampled_dimension_three )
{
    for ( const auto& f : test::samples( 3, 60, 123 ) )
        EXPECT_TRUE( check_hierarchy( f ).ok() );
}

TEST( check_hierarchy, witnesses_are_real )
{
    for ( const char* name : { "N_H", "N_C", "N_I", "N_T", "interval_strict" } )
    {
        const auto& f = fx( name );
        const auto r = check_hierarchy( f, name );
        EXPECT_EQ( r.id, name );
        for ( const auto& w : r.witnesses )
        {
            EXPECT_FALSE( r.contained[ mode_index( w.mu ) ][ mode_index( w.nu ) ] );
            EXPECT_TRUE( reach_set( f, w.mu, w.source ).contains( w.target ) );
            EXPECT_FALSE( reach_set( f, w.nu, w.source ).contains( w.target ) );
        }
    }
    const auto r = check_hierarchy( fx( "N_H" ) );
    EXPECT_FALSE( r.contained[ mode_index( mode::history ) ][ mode_index( mode::cuttable ) ] );
    EXPECT_TRUE( r.contained[ mode_index( mode::cuttable ) ][ mode_index( mode::history ) ] );
}

TEST( check_hierarchy, interval_strictly_inside_history_and_cuttable )
{
    const auto& f = fx( "interval_strict" );
    const auto x = test::bits( "010" );
    const auto y = test::bits( "110" );
    EXPECT_FALSE( reach_set( f, mode::interval, x ).contains( y ) );
    EXPECT_TRUE( reach_set( f, mode::history, x ).contains( y ) );
    EXPECT_TRUE( reach_set( f, mode::cuttable, x ).contains( y ) );
}

TEST( check_hierarchy, excludes_capped_modes )
{
    const auto r = check_hierarchy( random_network( 5, 1 ) );
    EXPECT_TRUE( r.is_excluded( mode::cuttable ) );
    EXPECT_FALSE( r.is_excluded( mode::history ) );
    EXPECT_TRUE( r.ok() );
    EXPECT_EQ( r.sizes[ 0 ][ mode_index( mode::cuttable ) ], 0u );
}

TEST( check_hierarchy, sizes_match_reach_sets )
{
    const auto& f = fx( "N_M" );
    const auto r = check_hierarchy( f );
    ASSERT_EQ( r.sizes.size(), 8u );
    for ( state_t x = 0; x < 8; ++x )
        for ( auto m : all_modes )
            EXPECT_EQ( r.sizes[ x ][ mode_index( m ) ], reach_set( f, m, x ).size() );
}

TEST( min_trapspace_equivalence, reflexive )
{
    for ( const auto& f : test::samples( 3, 20, 4 ) )
        for ( auto m : all_modes )
            EXPECT_TRUE( min_trapspace_equivalence( f, m, m ).equivalent );
}

TEST( min_trapspace_equivalence, trapping_and_most_permissive_agree )
{
    for ( const auto& f : test::all_n2() )
        EXPECT_TRUE( min_trapspace_equivalence( f, mode::trapping, mode::most_permissive ).equivalent );
    for ( const auto& f : test::samples( 3, 100, 64 ) )
        EXPECT_TRUE( min_trapspace_equivalence( f, mode::trapping, mode::most_permissive ).equivalent );
}

TEST( min_trapspace_equivalence, hats_separate )
{
    for ( const char* name : { "hat_H", "hat_C" } )
    {
        const auto& f = fx( name );
        const auto r = min_trapspace_equivalence( f, mode::most_permissive, mode::history );
        ASSERT_FALSE( r.equivalent ) << name;
        ASSERT_TRUE( r.witness.has_value() );
        EXPECT_TRUE( min_trapspace_configs( f ).contains( r.witness->target ) );
        const bool in_mp = reach_set( f, mode::most_permissive, r.witness->source ).contains( r.witness->target );
        const bool in_h = reach_set( f, mode::history, r.witness->source ).contains( r.witness->target );
        EXPECT_NE( in_mp, in_h );
        EXPECT_EQ( r.witness->reached_by_mu, in_mp );
    }
    EXPECT_FALSE( min_trapspace_equivalence( fx( "hat_I" ), mode::interval, mode::asynchronous ).equivalent );
}

} // namespace
} // namespace bnmm
