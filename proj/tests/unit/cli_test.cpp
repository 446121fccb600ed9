#include <bnmm_cli/cli.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace bnmm::cli
{
namespace
{

struct result
{
    int code;
    std::string out;
    std::string err;
};

result run( std::vector<std::string> args )
{
    args.insert( args.begin(), "bnmm" );
    std::ostringstream out, err;
    const int code = run_cli( args, out, err );
    return { code, out.str(), err.str() };
}

std::string data( const std::string& name )
{
    return std::string( BNMM_DATA_DIR ) + "/networks/" + name + ".bn";
}

std::string write_temp( const std::string& name, const std::string& text )
{
    const auto path = std::filesystem::temp_directory_path() / ( "bnmm_cli_test_" + name );
    std::ofstream( path ) << text;
    return path.string();
}

TEST( cli, reach_trapping_first_example )
{
    const auto r = run( { "reach", "--mode", "trapping", "--from", "000", data( "example1" ) } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_EQ( r.out, "000\n010\n100\n110\n" );
}

TEST( cli, unreachable_pair_exits_one )
{
    const auto r = run( { "reach", "--mode", "mp", "--from", "00", "--to", "01", data( "N_T" ) } );
    EXPECT_EQ( r.code, exit_violation );
    EXPECT_EQ( r.out, "no\n" );
    const auto yes = run( { "reach", "--mode", "t", "--from", "00", "--to", "01", data( "N_T" ) } );
    EXPECT_EQ( yes.code, exit_ok );
    EXPECT_EQ( yes.out, "yes\n" );
}

TEST( cli, minimal_trapspaces )
{
    const auto r = run( { "trapspaces", "--which", "minimal", data( "example1" ) } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_EQ( r.out, "100\n101\n110\n" );
}

TEST( cli, parse_round_trips )
{
    const auto r = run( { "parse", data( "N_H" ) } );
    ASSERT_EQ( r.code, exit_ok );
    const auto again = run( { "parse", write_temp( "nh.bn", r.out ) } );
    EXPECT_EQ( again.code, exit_ok );
    EXPECT_EQ( again.out, r.out );
    const auto j = nlohmann::json::parse( run( { "--json", "parse", data( "N_H" ) } ).out );
    EXPECT_EQ( j.at( "schema" ), cli_schema );
    EXPECT_EQ( j.at( "table" ).at( 0 ), "100" );
}

TEST( cli, errors_exit_two )
{
    EXPECT_EQ( run( { "reach", "--mode", "zz", "--from", "000", data( "N_H" ) } ).code, exit_usage );
    EXPECT_EQ( run( { "reach", "--mode", "a", "--from", "00", data( "N_H" ) } ).code, exit_usage );
    EXPECT_EQ( run( { "parse", "/nonexistent/file.bn" } ).code, exit_usage );
    EXPECT_EQ( run( { "parse", write_temp( "bad.bn", "x1: (x1" ) } ).code, exit_usage );
    EXPECT_EQ( run( { "frobnicate" } ).code, exit_usage );
    EXPECT_EQ( run( { "trapspaces", "--which", "some", data( "N_H" ) } ).code, exit_usage );
    std::string big;
    for ( int i = 0; i < 5; ++i )
        big += "v" + std::to_string( i ) + ": v" + std::to_string( i ) + "\n";
    const auto capped = run( { "reach", "--mode", "c", "--from", "00000", write_temp( "big.bn", big ) } );
    EXPECT_EQ( capped.code, exit_usage );
    EXPECT_NE( capped.err.find( "cuttable" ), std::string::npos );
    EXPECT_EQ( run( { "--dimension-cap", "4", "parse", write_temp( "big.bn", big ) } ).code, exit_usage );
}

TEST( cli, byte_identical_outputs )
{
    const std::vector<std::string> args{ "--json", "hierarchy", "--n", "3", "--samples", "3", "--seed", "5" };
    const auto a = run( args );
    const auto b = run( args );
    EXPECT_EQ( a.code, exit_ok );
    EXPECT_EQ( a.out, b.out );
    std::istringstream lines( a.out );
    std::string line;
    int count = 0;
    while ( std::getline( lines, line ) )
    {
        const auto j = nlohmann::json::parse( line );
        EXPECT_EQ( j.at( "schema" ), "bnmm.report.v1" );
        EXPECT_EQ( j.at( "seed" ), 5 + count );
        ++count;
    }
    EXPECT_EQ( count, 3 );
}

TEST( cli, hierarchy_enumerate_text )
{
    const auto r = run( { "hierarchy", "--n", "1", "--enumerate" } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_NE( r.out.find( "violating networks: 0" ), std::string::npos );
    EXPECT_EQ( run( { "hierarchy", "--n", "2" } ).code, exit_usage );
    EXPECT_EQ( run( { "hierarchy", "--fixture", "interval_strict" } ).code, exit_ok );
}

TEST( cli, closure_and_graph )
{
    const auto c = run( { "closure", "--kind", "trapping", data( "example1" ) } );
    EXPECT_EQ( c.code, exit_ok );
    EXPECT_NE( c.out.find( "table 3" ), std::string::npos );
    const auto g = run( { "graph", "--kind", "ga", "--format", "dot", "--hide-loops", data( "N_T" ) } );
    EXPECT_EQ( g.code, exit_ok );
    EXPECT_NE( g.out.find( "digraph" ), std::string::npos );
    EXPECT_EQ( g.out.find( "\"11\" -> \"11\"" ), std::string::npos );
    const auto l = run( { "graph", "--kind", "a", "--format", "limits", data( "example1" ) } );
    EXPECT_EQ( l.code, exit_ok );
    EXPECT_NE( l.out.find( "110" ), std::string::npos );
    EXPECT_EQ( run( { "graph", "--kind", "q", data( "N_T" ) } ).code, exit_usage );
}

TEST( cli, validate_trajectories )
{
    const std::string interval = R"({"schema":"bnmm.trajectory.v1","start":"000",
        "steps":[{"i":1,"s":"000","t":"000"},{"i":3,"s":"000","t":"100"},
                 {"i":2,"s":"000","t":"101"},{"i":1,"s":"110","t":"111"}],
        "V":[[0,0,0],[0,0,1],[0,2,1],[3,3,1]]})";
    const auto path = write_temp( "interval.json", interval );
    const auto ok = run( { "validate", "--mode", "interval", "--trajectory", path, data( "N_I" ) } );
    EXPECT_EQ( ok.code, exit_ok ) << ok.out << ok.err;
    EXPECT_EQ( ok.out, "ok 000 100 101 111 011\n" );
    const auto bare = write_temp( "bare.json", R"({"schema":"bnmm.trajectory.v1","start":"000",
        "steps":[{"i":1,"s":"000","t":"000"},{"i":3,"s":"000","t":"100"},
                 {"i":2,"s":"000","t":"101"},{"i":1,"s":"110","t":"111"}]})" );
    EXPECT_EQ( run( { "validate", "--mode", "i", "--trajectory", bare, data( "N_I" ) } ).code, exit_ok );
    const auto t = run( { "--json", "validate", "--mode", "t", "--trajectory", bare, data( "N_I" ) } );
    EXPECT_EQ( t.code, exit_violation );
    EXPECT_EQ( nlohmann::json::parse( t.out ).at( "violation" ).at( "step" ), 4 );
    EXPECT_EQ( run( { "validate", "--mode", "t", "--trajectory", write_temp( "junk.json", "{" ), data( "N_I" ) } ).code,
               exit_usage );
}

TEST( cli, fixtures )
{
    const auto list = run( { "fixtures" } );
    EXPECT_EQ( list.code, exit_ok );
    EXPECT_NE( list.out.find( "N_H" ), std::string::npos );
    const auto one = run( { "fixtures", "--name", "N_C" } );
    EXPECT_EQ( one.code, exit_ok );
    std::ifstream in( data( "N_C" ) );
    std::stringstream file;
    file << in.rdbuf();
    EXPECT_EQ( one.out, file.str() );
    EXPECT_EQ( run( { "fixtures", "--name", "missing" } ).code, exit_usage );
}

} // namespace
} // namespace bnmm::cli
