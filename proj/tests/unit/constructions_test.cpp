#include "test_helpers.hpp"

#include <bnmm/constructions.hpp>
#include <bnmm/errors.hpp>
#include <bnmm/reach.hpp>
#include <bnmm/trapspace.hpp>
#include <bnmm/update.hpp>

#include <gtest/gtest.h>

#include <set>

namespace bnmm
{
namespace
{

TEST( enumerate_networks, counts_and_order )
{
    EXPECT_EQ( enumerate_networks( 1 ).size(), 4u );
    const auto& all = test::all_n2();
    ASSERT_EQ( all.size(), 256u );
    EXPECT_EQ( all.front(), boolean_network::constant( 2, 0 ) );
    EXPECT_EQ( all.back(), boolean_network::constant( 2, 3 ) );
    std::set<std::vector<state_t>> distinct;
    for ( const auto& f : all )
        distinct.insert( f.images() );
    EXPECT_EQ( distinct.size(), 256u );
    EXPECT_EQ( all[ 1 ].image( 3 ), 1u ); // last row is the least significant digit
    EXPECT_THROW( (void)enumerate_networks( 3 ), cap_exceeded );
}

TEST( random_network, deterministic_per_seed )
{
    EXPECT_EQ( random_network( 4, 9 ), random_network( 4, 9 ) );
    EXPECT_NE( random_network( 4, 9 ), random_network( 4, 10 ) );
}

TEST( product_network, first_factor_in_high_bits )
{
    const auto p = product_network( boolean_network::negation( 1 ), boolean_network::identity( 2 ) );
    ASSERT_EQ( p.dimension(), 3 );
    EXPECT_EQ( p.image( 0b010 ), 0b110u );
    EXPECT_EQ( p.image( 0b101 ), 0b001u );
}

TEST( mp_lower_bound, values )
{
    EXPECT_EQ( mp_lower_bound( 1 ), 2u );
    EXPECT_EQ( mp_lower_bound( 2 ), 3u );
    EXPECT_EQ( mp_lower_bound( 3 ), 5u );
    EXPECT_EQ( mp_lower_bound( 4 ), 7u );
    EXPECT_EQ( mp_lower_bound( 5 ), 11u );
}

TEST( gen_mp_cardinality, exact_counts )
{
    for ( int n = 1; n <= 5; ++n )
        for ( std::size_t k = mp_lower_bound( n ); k <= state_count( n ); ++k )
        {
            const auto c = gen_mp_cardinality( n, k );
            EXPECT_EQ( principal_trapspace( c.network, c.source ), subcube::full( n ) ) << n << " " << k;
            EXPECT_EQ( reach_set( c.network, mode::most_permissive, c.source ).size(), k ) << n << " " << k;
        }
    EXPECT_THROW( (void)gen_mp_cardinality( 4, 6 ), invalid_argument );
    EXPECT_THROW( (void)gen_mp_cardinality( 4, 17 ), invalid_argument );
}

TEST( gen_mp_cardinality, lower_bound_over_samples )
{
    for ( int n = 3; n <= 4; ++n )
        for ( const auto& f : test::samples( n, 150, 900 + n ) )
            for ( state_t x = 0; x < state_count( n ); ++x )
                if ( principal_trapspace( f, x ) == subcube::full( n ) )
                    EXPECT_GE( reach_set( f, mode::most_permissive, x ).size(), mp_lower_bound( n ) );
}

TEST( gen_transient, transient_and_period )
{
    for ( int n = 3; n <= 6; ++n )
    {
        const auto f = gen_transient( n );
        EXPECT_TRUE( is_trapping( f ) ) << n;
        EXPECT_EQ( transient_and_period( f ), ( transient_period{ static_cast<unsigned>( n ), 2 } ) ) << n;
        EXPECT_EQ( transient_chain( n ).size(), static_cast<std::size_t>( n + 1 ) );
    }
    EXPECT_THROW( (void)gen_transient( 2 ), invalid_argument );
}

TEST( gen_hat, shape )
{
    const auto& h = test::fx( "N_H" );
    const auto hat = gen_hat( h, 0b101, 4 );
    ASSERT_EQ( hat.dimension(), 4 );
    // upper half negates the base
    EXPECT_EQ( hat.image( 0b0011 ), 0b1101u );
    // lower half runs the base, flags the source
    EXPECT_EQ( hat.image( 0b0000 ), 0b1000u );
    EXPECT_EQ( hat.image( 0b1010 ), ( h.image( 0b101 ) << 1 ) | 1u );
    EXPECT_THROW( (void)gen_hat( h, 0b101, 3 ), invalid_argument );
}

} // namespace
} // namespace bnmm
