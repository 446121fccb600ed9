#include "test_helpers.hpp"

#include <bnmm/collection_class.hpp>
#include <bnmm/errors.hpp>
#include <bnmm/trapspace.hpp>

#include <gtest/gtest.h>

namespace bnmm
{
namespace
{

using test::fx;

// Every collection of subcubes of B^2: 2^9 of them.
std::vector<subcube_collection> all_collections_n2()
{
    std::vector<subcube> cubes;
    for ( state_t fixed = 0; fixed < 4; ++fixed )
        for ( state_t values = 0; values < 4; ++values )
            if ( ( values & ~fixed ) == 0 )
                cubes.emplace_back( 2, fixed, values );
    std::vector<subcube_collection> out;
    for ( unsigned mask = 0; mask < ( 1u << cubes.size() ); ++mask )
    {
        subcube_collection c( 2 );
        for ( std::size_t k = 0; k < cubes.size(); ++k )
            if ( mask & ( 1u << k ) )
                c.insert( cubes[ k ] );
        out.push_back( std::move( c ) );
    }
    return out;
}

TEST( classify_collection, first_example )
{
    const auto& f = fx( "example1" );
    EXPECT_TRUE( classify_collection( trapspaces( f, trapspace_kind::principal ) ).pre_principal );
    EXPECT_TRUE( classify_collection( trapspaces( f, trapspace_kind::all ) ).pre_ideal );
    EXPECT_TRUE( classify_collection( trapspaces( f, trapspace_kind::minimal ) ).min_ideal );
    EXPECT_FALSE( classify_collection( trapspaces( f, trapspace_kind::principal ) ).pre_ideal );
}

TEST( classify_collection, focus_outside_the_collection )
{
    const auto c = classify_collection( subcube_collection( 2, { subcube::parse( "0*" ), subcube::parse( "*0" ) } ) );
    EXPECT_FALSE( c.pre_principal );
    ASSERT_TRUE( c.witness.has_value() );
    EXPECT_EQ( c.witness->property, "pre_principal" );
}

TEST( classify_collection, empty_and_capped )
{
    const auto c = classify_collection( subcube_collection( 2 ) );
    EXPECT_FALSE( c.pre_principal );
    EXPECT_FALSE( c.min_ideal );
    EXPECT_THROW( (void)classify_collection( subcube_collection( 9, { subcube::full( 9 ) } ) ), cap_exceeded );
}

TEST( classify_collection, three_conditions_equal_focus_test )
{
    for ( const auto& q : all_collections_n2() )
    {
        const auto c = classify_collection( q );
        EXPECT_EQ( c.pre_principal, c.covers && c.intersections_are_unions && c.no_member_is_union_of_others )
                << q.str();
        EXPECT_EQ( c.witness.has_value(), !( c.pre_principal && c.pre_ideal && c.min_ideal ) );
    }
}

TEST( classify_collection, principal_bijection )
{
    std::size_t pre_principal = 0;
    for ( const auto& q : all_collections_n2() )
        if ( classify_collection( q ).pre_principal )
        {
            ++pre_principal;
            const auto g = collection_to_network( q );
            EXPECT_TRUE( is_trapping( g ) );
            EXPECT_EQ( trapspaces( g, trapspace_kind::principal ), q ) << q.str();
        }
    std::size_t trapping = 0;
    for ( const auto& g : test::all_n2() )
        if ( is_trapping( g ) )
        {
            ++trapping;
            const auto p = trapspaces( g, trapspace_kind::principal );
            EXPECT_TRUE( classify_collection( p ).pre_principal );
            EXPECT_EQ( collection_to_network( p ), g );
        }
    EXPECT_EQ( pre_principal, trapping );
}

TEST( classify_collection, ideal_bijection )
{
    std::size_t pre_ideal = 0;
    for ( const auto& q : all_collections_n2() )
        if ( classify_collection( q ).pre_ideal )
        {
            ++pre_ideal;
            EXPECT_EQ( trapspaces( collection_to_network( q ), trapspace_kind::all ), q ) << q.str();
        }
    std::size_t trapping = 0;
    for ( const auto& g : test::all_n2() )
        if ( is_trapping( g ) )
        {
            ++trapping;
            const auto t = trapspaces( g, trapspace_kind::all );
            EXPECT_TRUE( classify_collection( t ).pre_ideal );
            EXPECT_EQ( collection_to_network( t ), g );
        }
    EXPECT_EQ( pre_ideal, trapping );
}

TEST( classify_collection, minimal_collections )
{
    for ( const auto& q : all_collections_n2() )
    {
        const auto c = classify_collection( q );
        bool disjoint = !q.empty();
        const auto& m = q.members();
        for ( std::size_t a = 0; a < m.size(); ++a )
            for ( std::size_t b = a + 1; b < m.size(); ++b )
                disjoint &= !intersect( m[ a ], m[ b ] ).has_value();
        EXPECT_EQ( c.min_ideal, disjoint );
        if ( c.min_ideal )
            EXPECT_EQ( trapspaces( collection_to_network( q ), trapspace_kind::minimal ), q ) << q.str();
    }
    for ( const auto& f : test::all_n2() )
        EXPECT_TRUE( classify_collection( trapspaces( f, trapspace_kind::minimal ) ).min_ideal );
}

} // namespace
} // namespace bnmm
