#include "test_helpers.hpp"

#include <bnmm/errors.hpp>
#include <bnmm/graphs.hpp>
#include <bnmm/profile.hpp>
#include <bnmm/trapspace.hpp>

#include <gtest/gtest.h>

namespace bnmm
{
namespace
{

using test::bits;
using test::fx;

TEST( build_graph, asynchronous_edges )
{
    const auto g = build_graph( fx( "N_H" ), graph_kind::asynchronous );
    EXPECT_TRUE( g.has_edge( bits( "000" ), bits( "100" ) ) );
    EXPECT_TRUE( g.has_edge( bits( "000" ), bits( "000" ) ) );
    EXPECT_FALSE( g.has_edge( bits( "000" ), bits( "110" ) ) );
    EXPECT_EQ( g.kind(), graph_kind::asynchronous );
}

TEST( build_graph, general_asynchronous_is_the_span )
{
    const auto& f = fx( "example1" );
    const auto g = build_graph( f, graph_kind::general_asynchronous );
    for ( state_t x = 0; x < 8; ++x )
        EXPECT_EQ( g.successors( x ), subcube::span( 3, x, f.image( x ) ).member_set() );
}

TEST( build_graph, capped )
{
    EXPECT_THROW( (void)build_graph( boolean_network::identity( 13 ), graph_kind::asynchronous ), cap_exceeded );
    EXPECT_NO_THROW( (void)build_graph( boolean_network::identity( 13 ), graph_kind::asynchronous, 13 ) );
}

TEST( graph_predicates, hold_for_every_dimension_two_network )
{
    for ( const auto& f : test::all_n2() )
    {
        const auto a = build_graph( f, graph_kind::asynchronous );
        const auto ga = build_graph( f, graph_kind::general_asynchronous );
        const auto tg = build_graph( f, graph_kind::trapping );
        const auto pga = graph_predicates( ga );
        EXPECT_TRUE( pga.reflexive );
        EXPECT_TRUE( pga.outs_are_subcubes );
        EXPECT_EQ( pga.transitive, is_trapping( f ) );
        EXPECT_EQ( pga.symmetric, is_negation_on_subcubes( f ) );
        const auto ptg = graph_predicates( tg );
        EXPECT_TRUE( ptg.transitive );
        EXPECT_TRUE( ptg.reflexive );
        EXPECT_TRUE( ptg.outs_are_subcubes );
        EXPECT_EQ( graph_predicates( a ).symmetric, is_locally_bijective( f ) );
        EXPECT_TRUE( a.is_subgraph_of( ga ) );
        EXPECT_TRUE( ga.is_subgraph_of( tg ) );
    }
}

TEST( graph_to_network, general_asynchronous_round_trip )
{
    for ( const auto& f : test::all_n2() )
    {
        const auto inv = graph_to_network( build_graph( f, graph_kind::general_asynchronous ),
                                           graph_kind::general_asynchronous );
        ASSERT_TRUE( inv.network.has_value() ) << inv.rejection;
        EXPECT_EQ( *inv.network, f );
        const auto tg = graph_to_network( build_graph( f, graph_kind::trapping ), graph_kind::trapping );
        ASSERT_TRUE( tg.network.has_value() );
        EXPECT_EQ( *tg.network, trapping_closure( f ) );
    }
    for ( const auto& f : test::samples( 3, 50, 3 ) )
    {
        const auto inv = graph_to_network( build_graph( f, graph_kind::asynchronous ), graph_kind::asynchronous );
        ASSERT_TRUE( inv.network.has_value() ) << inv.rejection;
        EXPECT_EQ( *inv.network, f );
    }
    // a GA graph with a two-flip edge is not an asynchronous graph
    const auto ga = build_graph( boolean_network::negation( 2 ), graph_kind::general_asynchronous );
    EXPECT_FALSE( graph_to_network( ga, graph_kind::asynchronous ).network.has_value() );
}

TEST( graph_to_network, rejects_corrupted_graphs )
{
    const auto& f = fx( "example1" );
    auto g = static_cast<state_graph>( build_graph( f, graph_kind::general_asynchronous ) );
    // out(000) = **0; dropping 010 leaves a non-subcube
    g.remove_edge( bits( "000" ), bits( "010" ) );
    auto inv = graph_to_network( g, graph_kind::general_asynchronous );
    EXPECT_FALSE( inv.network.has_value() );
    EXPECT_FALSE( inv.rejection.empty() );
    auto h = static_cast<state_graph>( build_graph( f, graph_kind::general_asynchronous ) );
    h.remove_edge( bits( "101" ), bits( "101" ) );
    EXPECT_FALSE( graph_to_network( h, graph_kind::general_asynchronous ).network.has_value() );
    // the intransitive GA graph of a non-trapping network is not a trapping graph
    for ( const auto& n2 : test::all_n2() )
        if ( !is_trapping( n2 ) )
        {
            EXPECT_FALSE( graph_to_network( build_graph( n2, graph_kind::general_asynchronous ), graph_kind::trapping )
                                  .network.has_value() );
            break;
        }
}

TEST( limit_sets, examples )
{
    const auto id = build_graph( boolean_network::identity( 2 ), graph_kind::asynchronous );
    EXPECT_EQ( limit_sets( id ).size(), 4u );
    const auto neg = build_graph( boolean_network::negation( 2 ), graph_kind::asynchronous );
    EXPECT_EQ( limit_sets( neg ), ( std::vector<std::vector<state_t>>{ { 0, 1, 2, 3 } } ) );
    const auto e = build_graph( fx( "example1" ), graph_kind::asynchronous );
    EXPECT_EQ( limit_sets( e ), ( std::vector<std::vector<state_t>>{ { 0b100 }, { 0b101 }, { 0b110 } } ) );
}

TEST( limit_sets, trapping_graph_limits_are_minimal_trapspaces )
{
    for ( const auto& f : test::samples( 3, 100, 71 ) )
    {
        std::vector<std::vector<state_t>> expected;
        const auto minimal = trapspaces( f, trapspace_kind::minimal );
        for ( const auto& m : minimal.members() )
            expected.push_back( m.members() );
        std::sort( expected.begin(), expected.end() );
        EXPECT_EQ( limit_sets( build_graph( f, graph_kind::trapping ) ), expected );
    }
}

TEST( export_dot, deterministic_and_labelled )
{
    const auto g = build_graph( fx( "N_T" ), graph_kind::asynchronous );
    const auto a = export_dot( g );
    EXPECT_EQ( a, export_dot( g ) );
    EXPECT_NE( a.find( "digraph" ), std::string::npos );
    EXPECT_NE( a.find( "\"00\" -> \"10\"" ), std::string::npos );
    EXPECT_NE( a.find( "\"00\" -> \"00\"" ), std::string::npos );
    dot_options hide;
    hide.hide_loops = true;
    EXPECT_EQ( export_dot( g, hide ).find( "\"00\" -> \"00\"" ), std::string::npos );
    dot_options cube;
    cube.hypercube = true;
    EXPECT_NE( export_dot( g, cube ).find( "grey" ), std::string::npos );
    const auto layered = export_layered_dot( fx( "N_T" ), graph_kind::trapping );
    EXPECT_NE( layered.find( "blue" ), std::string::npos );
    EXPECT_NE( layered.find( "orange" ), std::string::npos );
}

TEST( parse_graph_kind, names )
{
    EXPECT_EQ( parse_graph_kind( "ga" ), graph_kind::general_asynchronous );
    EXPECT_EQ( parse_graph_kind( "tg" ), graph_kind::trapping );
    EXPECT_EQ( parse_graph_kind( graph_kind_name( graph_kind::asynchronous ) ), graph_kind::asynchronous );
    EXPECT_FALSE( parse_graph_kind( "xyz" ).has_value() );
}

} // namespace
} // namespace bnmm
