#include <bnmm/errors.hpp>
#include <bnmm/subcube.hpp>

#include <gtest/gtest.h>

#include <random>

namespace bnmm
{
namespace
{

TEST( subcube, parse_and_print )
{
    const auto x = subcube::parse( "1*0" );
    EXPECT_EQ( x.size(), 2u );
    EXPECT_EQ( x.members(), ( std::vector<state_t>{ 0b100, 0b110 } ) );
    EXPECT_EQ( x.str(), "1*0" );
    EXPECT_EQ( subcube::full( 3 ).str(), "***" );
    EXPECT_THROW( (void)subcube::parse( "1?0" ), invalid_argument );
}

TEST( subcube, principal_subcube_of_two_points )
{
    const auto a = principal_subcube( 3, { 0b000, 0b011 } );
    EXPECT_EQ( a.str(), "0**" );
    EXPECT_EQ( a, subcube::span( 3, 0b000, 0b011 ) );
    EXPECT_EQ( principal_subcube( 3, { 0b101 } ), subcube::point( 3, 0b101 ) );
}

TEST( subcube, opposite )
{
    const auto x = configuration::parse( "010" );
    EXPECT_EQ( subcube::full( 3 ).opposite( x ).str(), "101" );
    EXPECT_EQ( subcube::point( x ).opposite( x ), x );
    EXPECT_EQ( subcube::parse( "0*0" ).opposite( x ).str(), "000" );
    EXPECT_THROW( (void)subcube::parse( "1**" ).opposite( x ), invalid_argument );
}

TEST( subcube, intersection )
{
    const auto a = subcube::parse( "1**" );
    const auto b = subcube::parse( "*0*" );
    EXPECT_EQ( intersect( a, b ), subcube::parse( "10*" ) );
    EXPECT_FALSE( intersect( a, subcube::parse( "0**" ) ).has_value() );
}

TEST( subcube, span_and_opposite_are_inverse )
{
    for ( int n = 1; n <= 4; ++n )
        for ( state_t x = 0; x < state_count( n ); ++x )
            for ( state_t y = 0; y < state_count( n ); ++y )
            {
                const auto s = subcube::span( n, x, y );
                EXPECT_EQ( s.opposite( x ), y );
                EXPECT_TRUE( s.contains( x ) && s.contains( y ) );
                EXPECT_EQ( s.free_count(), std::popcount( x ^ y ) );
            }
}

TEST( subcube, principal_subcube_is_smallest )
{
    std::mt19937_64 rng( 3 );
    for ( int trial = 0; trial < 200; ++trial )
    {
        const int n = 4;
        config_set a( n );
        for ( int k = 0; k < 1 + static_cast<int>( rng() % 4 ); ++k )
            a.insert( static_cast<state_t>( rng() % 16 ) );
        const auto p = principal_subcube( a );
        a.for_each( [ & ]( state_t x ) { EXPECT_TRUE( p.contains( x ) ); } );
        // every subcube containing a contains p
        for ( state_t fixed = 0; fixed < 16; ++fixed )
            for ( state_t values = 0; values < 16; ++values )
            {
                if ( ( values & ~fixed ) != 0 )
                    continue;
                const subcube c( n, fixed, values );
                bool holds = true;
                a.for_each( [ & ]( state_t x ) { holds &= c.contains( x ); } );
                if ( holds )
                    EXPECT_TRUE( p.is_subset_of( c ) );
            }
    }
}

TEST( subcube, hull_and_membership )
{
    const auto x = subcube::point( 3, 0b000 ).hull_with( 0b101 );
    EXPECT_EQ( x.str(), "*0*" );
    EXPECT_EQ( x.member_set().size(), 4u );
    EXPECT_TRUE( subcube::parse( "10*" ).is_subset_of( x ) );
    EXPECT_FALSE( x.is_subset_of( subcube::parse( "10*" ) ) );
}

TEST( subcube_collection, focus_cover_and_order )
{
    subcube_collection c( 3 );
    EXPECT_TRUE( c.insert( subcube::parse( "1**" ) ) );
    EXPECT_TRUE( c.insert( subcube::parse( "*1*" ) ) );
    EXPECT_FALSE( c.insert( subcube::parse( "1**" ) ) );
    EXPECT_EQ( c.focus( 0b110 ), subcube::parse( "11*" ) );
    EXPECT_EQ( c.focus( 0b100 ), subcube::parse( "1**" ) );
    EXPECT_EQ( c.focus( 0b000 ), subcube::full( 3 ) );
    EXPECT_EQ( c.cover().size(), 6u );
    EXPECT_EQ( c.str(), "*1*\n1**\n" ); // fixed mask 010 before 100
    subcube_collection d( 3, { subcube::parse( "*1*" ), subcube::parse( "1**" ) } );
    EXPECT_EQ( c, d );
}

} // namespace
} // namespace bnmm
