#include "test_helpers.hpp"

#include <bnmm/errors.hpp>
#include <bnmm/fixtures.hpp>
#include <bnmm/parser.hpp>
#include <bnmm/profile.hpp>
#include <bnmm/reach.hpp>
#include <bnmm/trapspace.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace bnmm
{
namespace
{

using test::bits;
using test::fx;

TEST( fixtures, printed_values )
{
    EXPECT_EQ( fx( "example1" ).image( bits( "000" ) ), bits( "110" ) );
    EXPECT_EQ( fx( "N_I" ).image( bits( "110" ) ), bits( "010" ) );
    EXPECT_EQ( fx( "N_M" ).image( bits( "010" ) ), bits( "011" ) );
    EXPECT_EQ( fx( "N_A" ).images(), ( std::vector<state_t>{ 0b11, 0b11, 0b11, 0b00 } ) );
}

TEST( fixtures, lookup )
{
    EXPECT_THROW( (void)find_fixture( "nope" ), invalid_argument );
    const auto names = fixture_names();
    EXPECT_TRUE( std::is_sorted( names.begin(), names.end() ) );
    EXPECT_EQ( names.size(), paper_fixtures().size() );
}

TEST( fixtures, figure_reconstructions_are_flagged )
{
    for ( const char* name : { "min_pair_a", "min_pair_b", "min_trapping_bijective", "commutative_not_min_trapping" } )
        EXPECT_TRUE( find_fixture( name ).reconstructed_from_figure ) << name;
    EXPECT_FALSE( find_fixture( "N_H" ).reconstructed_from_figure );
    EXPECT_TRUE( find_fixture( "interval_strict" ).searched );
}

TEST( fixtures, min_pair_has_equal_minimal_but_different_principal )
{
    const auto& a = fx( "min_pair_a" );
    const auto& b = fx( "min_pair_b" );
    EXPECT_EQ( trapspaces( a, trapspace_kind::minimal ), trapspaces( b, trapspace_kind::minimal ) );
    EXPECT_NE( trapspaces( a, trapspace_kind::principal ), trapspaces( b, trapspace_kind::principal ) );
    const auto x1 = subcube::parse( std::string( "1" ) + std::string( static_cast<std::size_t>( a.dimension() - 1 ), '*' ) );
    EXPECT_TRUE( trapspaces( a, trapspace_kind::principal ).contains( x1 ) );
    EXPECT_FALSE( trapspaces( b, trapspace_kind::principal ).contains( x1 ) );
    EXPECT_EQ( min_trapping_closure( a ), min_trapping_closure( b ) );
}

TEST( fixtures, figure_profiles )
{
    const auto p = classify_network( fx( "min_trapping_bijective" ) );
    EXPECT_TRUE( p.min_trapping );
    EXPECT_TRUE( p.bijective );
    EXPECT_FALSE( p.locally_bijective );
    const auto q = classify_network( fx( "commutative_not_min_trapping" ) );
    EXPECT_TRUE( q.commutative );
    EXPECT_FALSE( q.min_trapping );
}

TEST( fixtures, data_files_match )
{
    const std::filesystem::path dir = std::filesystem::path( BNMM_DATA_DIR ) / "networks";
    for ( const auto& [ name, fixture ] : paper_fixtures() )
    {
        std::ifstream in( dir / ( name + ".bn" ) );
        ASSERT_TRUE( in ) << name;
        std::stringstream text;
        text << in.rdbuf();
        EXPECT_EQ( parse_network( text.str() ), fixture.network ) << name;
    }
}

} // namespace
} // namespace bnmm
