#include "bnmm/fixtures.hpp"
#include "bnmm/constructions.hpp"
#include "bnmm/errors.hpp"
#include "bnmm/parser.hpp"

namespace bnmm
{

namespace
{

boolean_network table( int n, std::vector<state_t> images )
{
    return { n, std::move( images ) };
}

// Identity except at the listed points.
boolean_network sparse( int n, std::initializer_list<std::pair<state_t, state_t>> points )
{
    auto images = boolean_network::identity( n ).images();
    for ( auto [ x, y ] : points )
        images[ x ] = y;
    return { n, std::move( images ) };
}

struct fixture_flags
{
    bool figure = false;
    bool searched = false;
    std::string interpretation = {};
};

std::map<std::string, fixture> build()
{
    std::map<std::string, fixture> out;
    auto add = [ &out ]( std::string name, boolean_network f, std::string description, fixture_flags flags = {} ) {
        out.emplace( name, fixture{ name, std::move( f ), std::move( description ), flags.figure, flags.searched,
                                    std::move( flags.interpretation ) } );
    };

    add( "example1",
         table( 3, { 0b110, 0b100, 0b000, 0b110, 0b100, 0b101, 0b110, 0b110 } ),
         "eight-row table of the first example: minimal trapspaces D, E, F",
         { .interpretation = "trapspace C printed as {x}; read as B^3, the trapping graph sends 001 everywhere" } );
    add( "N_A", parse_network( "x1: !x1 | !x2\nx2: !x1 | !x2" ), "asynchronous trajectory 00, 10, 11, 01" );
    add( "N_H", parse_network( "x1: 1\nx2: x1\nx3: x2" ), "101 history reachable from 000, not cuttable" );
    add( "N_T", parse_network( "x1: 1\nx2: x1 | x2" ), "01 trapping reachable from 00, not most permissive" );
    add( "N_M", sparse( 3, { { 0b000, 0b110 }, { 0b010, 0b011 } } ), "111 most permissive reachable from 000" );
    add( "N_S", sparse( 3, { { 0b000, 0b100 }, { 0b100, 0b110 }, { 0b110, 0b111 } } ),
         "001 subcube-based reachable from 000" );
    add( "N_I", sparse( 3, { { 0b000, 0b111 }, { 0b100, 0b101 }, { 0b101, 0b111 }, { 0b110, 0b010 } } ),
         "011 interval reachable from 000, not asynchronous" );
    add( "N_C", parse_network( "x1: 1\nx2: x1\nx3: x2 & !x1" ), "111 cuttable reachable from 000, not history" );

    add( "min_pair_a", table( 2, { 0b10, 0b01, 0b11, 0b11 } ),
         "same minimal trapspaces as min_pair_b; {x1 = 1} is principal here", { .figure = true } );
    add( "min_pair_b", table( 2, { 0b10, 0b01, 0b01, 0b11 } ),
         "same minimal trapspaces as min_pair_a; {x1 = 1} is not principal", { .figure = true } );
    add( "min_trapping_bijective", table( 2, { 0b00, 0b10, 0b01, 0b11 } ),
         "min-trapping and bijective, not locally bijective", { .figure = true } );
    add( "commutative_not_min_trapping", table( 2, { 0b00, 0b11, 0b00, 0b01 } ), "commutative, not min-trapping",
         { .figure = true,
           .interpretation = "the arrow drawn 10 -> 11 is taken as 10 -> 00; drawn literally the network is not "
                             "commutative (updating 1 then 2 from 10 gives 11, 2 then 1 gives 01)" } );

    const auto& h = out.at( "N_H" ).network;
    const auto& c = out.at( "N_C" ).network;
    const auto& i = out.at( "N_I" ).network;
    add( "hat_H", gen_hat( h, 0b101, 4 ), "hat of N_H at s = 101: min-trapspace configurations most permissive but not history reachable" );
    add( "hat_C", gen_hat( c, 0b010, 4 ), "hat of N_C at s = 010: min-trapspace configurations cuttable but not history reachable" );
    add( "hat_I", gen_hat( i, 0b110, 4 ), "hat of N_I at s = 110: min-trapspace configurations interval but not asynchronous reachable",
         { .interpretation = "built on the three-dimensional N_I with the interval-only source 110" } );
    add( "product_C_H", product_network( c, h ),
         "(N_C, N_H): 111101 most permissive reachable from 000000, neither history nor cuttable" );
    add( "interval_strict", table( 3, { 0b001, 0b101, 0b001, 0b101, 0b100, 0b100, 0b011, 0b111 } ),
         "110 history and cuttable reachable from 010, not interval", { .searched = true } );
    return out;
}

} // namespace

const std::map<std::string, fixture>& paper_fixtures()
{
    static const auto fixtures = build();
    return fixtures;
}

const fixture& find_fixture( const std::string& name )
{
    const auto& all = paper_fixtures();
    const auto it = all.find( name );
    if ( it == all.end() )
        throw invalid_argument( "unknown fixture '" + name + "'" );
    return it->second;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    for ( const auto& [ name, fx ] : paper_fixtures() )
        names.push_back( name );
    return names;
}

} // namespace bnmm
