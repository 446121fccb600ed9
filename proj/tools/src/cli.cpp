#include "bnmm_cli/cli.hpp"

#include <bnmm/constructions.hpp>
#include <bnmm/errors.hpp>
#include <bnmm/fixtures.hpp>
#include <bnmm/graphs.hpp>
#include <bnmm/hierarchy.hpp>
#include <bnmm/parser.hpp>
#include <bnmm/reach.hpp>
#include <bnmm/report.hpp>
#include <bnmm/trajectory.hpp>
#include <bnmm/trapspace.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace bnmm::cli
{

using nlohmann::json;

namespace
{

// A command failed on its input; reported on stderr with exit code 2.
struct usage_failure
{
    std::string message;
};

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw usage_failure{ "cannot read '" + path + "'" };
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

boolean_network load_network( const std::string& path, int dimension_cap )
{
    try
    {
        return parse_network( read_file( path ), { dimension_cap } );
    }
    catch ( const parse_error& e )
    {
        throw usage_failure{ path + ":" + std::to_string( e.line() ) + ":" + std::to_string( e.column() ) + ": " +
                             e.what() };
    }
}

mode require_mode( const std::string& text )
{
    const auto m = parse_mode( text );
    if ( !m )
        throw usage_failure{ "unknown mode '" + text + "'" };
    return *m;
}

configuration require_configuration( const std::string& text, int n, const char* flag )
{
    const auto x = configuration::parse( text );
    if ( x.dimension() != n )
        throw usage_failure{ std::string( flag ) + " " + text + " has " + std::to_string( x.dimension() ) +
                             " bits, network has " + std::to_string( n ) };
    return x;
}

json record( const std::string& command )
{
    return json{ { "schema", cli_schema }, { "command", command } };
}

struct common_options
{
    bool json = false;
    int dimension_cap = 16;
};

struct reach_options
{
    std::string mode;
    std::string from;
    std::string to;
    std::string file;
    int cap = 0;
    int lag = 0;
};

int cmd_parse( const common_options& common, const std::string& file, std::ostream& out )
{
    const auto f = load_network( file, common.dimension_cap );
    if ( common.json )
    {
        auto r = record( "parse" );
        r[ "n" ] = f.dimension();
        json table = json::array();
        for ( auto y : f.images() )
            table.push_back( bits_to_string( f.dimension(), y ) );
        r[ "table" ] = table;
        r[ "text" ] = print_network( f );
        out << r.dump() << '\n';
        return exit_ok;
    }
    const auto text = print_network( f );
    out << text;
    // The expression form is followed by its table as comments, so the
    // output still parses; a table is printed once.
    if ( f.source() && !f.source()->expressions.empty() )
    {
        std::istringstream table( print_truth_table( f ) );
        for ( std::string line; std::getline( table, line ); )
            out << "# " << line << '\n';
    }
    return exit_ok;
}

int cmd_reach( const common_options& common, const reach_options& o, std::ostream& out )
{
    const auto f = load_network( o.file, common.dimension_cap );
    const auto m = require_mode( o.mode );
    const auto x = require_configuration( o.from, f.dimension(), "--from" );
    reach_caps caps;
    if ( o.cap > 0 )
    {
        switch ( m )
        {
            case mode::asynchronous: caps.asynchronous = o.cap; break;
            case mode::history: caps.history = o.cap; break;
            case mode::trapping: caps.trapping = o.cap; break;
            case mode::most_permissive: caps.most_permissive = o.cap; break;
            case mode::subcube_based: caps.subcube_based = o.cap; break;
            case mode::interval: caps.interval = o.cap; break;
            case mode::cuttable: caps.cuttable = o.cap; break;
        }
    }
    if ( o.lag > 0 )
        caps.cuttable_lag = o.lag;
    const auto reached = reach_set( f, m, x, caps );

    if ( !o.to.empty() )
    {
        const auto y = require_configuration( o.to, f.dimension(), "--to" );
        const bool yes = reached.contains( y );
        if ( common.json )
        {
            auto r = record( "reach" );
            r[ "mode" ] = mode_name( m );
            r[ "from" ] = x.str();
            r[ "to" ] = y.str();
            r[ "reachable" ] = yes;
            out << r.dump() << '\n';
        }
        else
            out << ( yes ? "yes" : "no" ) << '\n';
        return yes ? exit_ok : exit_violation;
    }
    if ( common.json )
    {
        auto r = record( "reach" );
        r[ "mode" ] = mode_name( m );
        r[ "from" ] = x.str();
        r[ "reachable" ] = config_set_to_json( reached );
        out << r.dump() << '\n';
    }
    else
        reached.for_each( [ & ]( state_t y ) { out << bits_to_string( f.dimension(), y ) << '\n'; } );
    return exit_ok;
}

int cmd_trapspaces( const common_options& common, const std::string& which, const std::string& file, std::ostream& out )
{
    const auto f = load_network( file, common.dimension_cap );
    trapspace_kind kind;
    if ( which == "all" )
        kind = trapspace_kind::all;
    else if ( which == "principal" )
        kind = trapspace_kind::principal;
    else if ( which == "minimal" )
        kind = trapspace_kind::minimal;
    else
        throw usage_failure{ "--which must be all, principal or minimal, got '" + which + "'" };
    const auto c = trapspaces( f, kind );
    if ( common.json )
    {
        auto r = record( "trapspaces" );
        r[ "which" ] = which;
        r[ "trapspaces" ] = collection_to_json( c );
        out << r.dump() << '\n';
    }
    else
        out << c.str();
    return exit_ok;
}

int cmd_closure( const common_options& common, const std::string& kind, const std::string& file, std::ostream& out )
{
    const auto f = load_network( file, common.dimension_cap );
    boolean_network g;
    if ( kind == "trapping" )
        g = trapping_closure( f );
    else if ( kind == "min" || kind == "min-trapping" || kind == "min_trapping" )
        g = min_trapping_closure( f );
    else
        throw usage_failure{ "--kind must be trapping or min, got '" + kind + "'" };
    if ( common.json )
    {
        auto r = record( "closure" );
        r[ "kind" ] = kind == "trapping" ? "trapping" : "min_trapping";
        json table = json::array();
        for ( auto y : g.images() )
            table.push_back( bits_to_string( g.dimension(), y ) );
        r[ "table" ] = table;
        r[ "unchanged" ] = g == f;
        out << r.dump() << '\n';
    }
    else
        out << print_network( g );
    return exit_ok;
}

int cmd_graph( const common_options& common, const std::string& kind_text, const std::string& format, bool hide_loops,
               bool hypercube, bool layered, const std::string& file, std::ostream& out )
{
    const auto f = load_network( file, common.dimension_cap );
    const auto kind = parse_graph_kind( kind_text );
    if ( !kind )
        throw usage_failure{ "--kind must be a, ga or tg, got '" + kind_text + "'" };
    dot_options options;
    options.hide_loops = hide_loops;
    options.hypercube = hypercube;
    if ( format == "dot" )
    {
        out << ( layered ? export_layered_dot( f, *kind, options ) : export_dot( build_graph( f, *kind ), options ) );
        return exit_ok;
    }
    if ( format == "limits" )
    {
        const auto g = build_graph( f, *kind );
        const auto sets = limit_sets( g );
        if ( common.json )
        {
            auto r = record( "graph" );
            r[ "kind" ] = graph_kind_name( *kind );
            json limits = json::array();
            for ( const auto& s : sets )
            {
                json one = json::array();
                for ( auto x : s )
                    one.push_back( bits_to_string( f.dimension(), x ) );
                limits.push_back( one );
            }
            r[ "limit_sets" ] = limits;
            out << r.dump() << '\n';
            return exit_ok;
        }
        for ( const auto& s : sets )
        {
            for ( std::size_t k = 0; k < s.size(); ++k )
                out << ( k ? " " : "" ) << bits_to_string( f.dimension(), s[ k ] );
            out << '\n';
        }
        return exit_ok;
    }
    throw usage_failure{ "--format must be dot or limits, got '" + format + "'" };
}

int cmd_validate( const common_options& common, const std::string& mode_text, const std::string& trajectory_file,
                  const std::string& file, std::ostream& out )
{
    const auto f = load_network( file, common.dimension_cap );
    const auto m = require_mode( mode_text );
    json doc;
    try
    {
        doc = json::parse( read_file( trajectory_file ) );
    }
    catch ( const json::parse_error& e )
    {
        throw usage_failure{ trajectory_file + ": " + e.what() };
    }
    auto rec = trajectory_from_json( doc );
    if ( rec.traj.n != f.dimension() )
        throw usage_failure{ "trajectory has dimension " + std::to_string( rec.traj.n ) + ", network has " +
                             std::to_string( f.dimension() ) };

    // A record without V or C for interval/cuttable is checked for the
    // existence of one; a record carrying the other mode's matrices, or
    // matrices for a mode that has none, is validated as given.
    const bool needs_v = m == mode::interval;
    const bool needs_c = m == mode::cuttable;
    const bool has_witness = !std::holds_alternative<std::monostate>( rec.witness );
    bool searched = false;
    validation_result result;
    if ( ( needs_v || needs_c ) && !has_witness )
    {
        searched = true;
        if ( const auto w = find_witness( f, m, rec.traj ) )
            result = validate_trajectory( f, m, rec.traj, *w );
        else
        {
            // Validate with the all-zero matrices to locate the failing step.
            mode_witness zero;
            const auto l = rec.traj.steps.size();
            const auto n = static_cast<std::size_t>( f.dimension() );
            if ( needs_v )
                zero = interval_witness{ std::vector<std::vector<unsigned>>( l, std::vector<unsigned>( n, 0 ) ) };
            else
                zero = cuttable_witness{ std::vector<std::vector<std::vector<unsigned>>>(
                        l, std::vector<std::vector<unsigned>>( n, std::vector<unsigned>( n, 0 ) ) ) };
            result = validate_trajectory( f, m, rec.traj, zero );
            if ( result.ok() )
                result.violation = trajectory_violation{ l, "witness", "no admissible timestamps exist" };
        }
    }
    else
    {
        try
        {
            result = validate_trajectory( f, m, rec.traj, rec.witness );
        }
        catch ( const invalid_argument& e )
        {
            throw usage_failure{ e.what() };
        }
    }

    if ( common.json )
    {
        auto r = record( "validate" );
        r[ "mode" ] = mode_name( m );
        r[ "ok" ] = result.ok();
        r[ "witness_searched" ] = searched;
        json configs = json::array();
        for ( auto x : result.configurations )
            configs.push_back( bits_to_string( f.dimension(), x ) );
        r[ "configurations" ] = configs;
        if ( result.violation )
            r[ "violation" ] = { { "step", result.violation->step },
                                 { "constraint", result.violation->constraint },
                                 { "detail", result.violation->detail } };
        out << r.dump() << '\n';
    }
    else if ( result.ok() )
    {
        out << "ok";
        for ( auto x : result.configurations )
            out << ' ' << bits_to_string( f.dimension(), x );
        out << '\n';
    }
    else
        out << "violation at step " << result.violation->step << ": " << result.violation->constraint << " ("
            << result.violation->detail << ")\n";
    return result.ok() ? exit_ok : exit_violation;
}

struct hierarchy_options
{
    int n = 2;
    bool enumerate = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string fixture;
};

int cmd_hierarchy( const common_options& common, const hierarchy_options& o, std::ostream& out )
{
    std::size_t failing = 0;
    auto emit = [ & ]( const boolean_network& f, const std::string& id, std::optional<std::uint64_t> seed ) {
        const auto report = check_hierarchy( f, id );
        if ( !report.ok() )
            ++failing;
        if ( common.json )
            out << network_record( f, report, seed ).dump() << '\n';
        else
            out << summary_line( report ) << '\n';
    };

    if ( !o.fixture.empty() )
        emit( find_fixture( o.fixture ).network, o.fixture, std::nullopt );
    else if ( o.enumerate )
    {
        const auto all = enumerate_networks( o.n );
        for ( std::size_t k = 0; k < all.size(); ++k )
            emit( all[ k ], "enum:" + std::to_string( k ), std::nullopt );
    }
    else if ( o.samples > 0 )
    {
        for ( std::size_t k = 0; k < o.samples; ++k )
        {
            const auto seed = o.seed + k;
            emit( random_network( o.n, seed ), "seed:" + std::to_string( seed ), seed );
        }
    }
    else
        throw usage_failure{ "hierarchy needs --enumerate, --samples <N> or --fixture <name>" };

    if ( !common.json )
        out << "violating networks: " << failing << '\n';
    return failing == 0 ? exit_ok : exit_violation;
}

int cmd_fixtures( const common_options& common, const std::string& name, std::ostream& out )
{
    if ( name.empty() )
    {
        if ( common.json )
        {
            auto r = record( "fixtures" );
            r[ "names" ] = fixture_names();
            out << r.dump() << '\n';
        }
        else
            for ( const auto& [ key, fx ] : paper_fixtures() )
                out << key << "  " << fx.description << '\n';
        return exit_ok;
    }
    const auto& fx = find_fixture( name );
    if ( common.json )
    {
        auto r = record( "fixtures" );
        r[ "name" ] = fx.name;
        r[ "n" ] = fx.network.dimension();
        json table = json::array();
        for ( auto y : fx.network.images() )
            table.push_back( bits_to_string( fx.network.dimension(), y ) );
        r[ "table" ] = table;
        r[ "description" ] = fx.description;
        r[ "reconstructed_from_figure" ] = fx.reconstructed_from_figure;
        r[ "searched" ] = fx.searched;
        r[ "interpretation" ] = fx.interpretation;
        out << r.dump() << '\n';
        return exit_ok;
    }
    out << "# " << fx.name << ": " << fx.description << '\n';
    if ( fx.reconstructed_from_figure )
        out << "# reconstructed from figure\n";
    if ( fx.searched )
        out << "# found by seeded search\n";
    if ( !fx.interpretation.empty() )
        out << "# interpretation: " << fx.interpretation << '\n';
    out << print_network( fx.network );
    return exit_ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Boolean network dynamics under memory-based update modes", "bnmm" };
    app.require_subcommand( 1 );

    common_options common;
    app.add_flag( "--json", common.json, "One JSON record per result line (schema bnmm.cli.v1)" );
    app.add_option( "--dimension-cap", common.dimension_cap, "Largest network dimension accepted by the parser" );
    app.fallthrough();

    std::string file;
    auto* parse = app.add_subcommand( "parse", "Print the canonical network text and truth table" );
    parse->add_option( "file", file, "Network file" )->required();

    reach_options ro;
    auto* reach = app.add_subcommand( "reach", "Configurations reachable from --from, or a yes/no pair query" );
    reach->add_option( "--mode", ro.mode, "a, h, t, mp, s, i, c or a long name" )->required();
    reach->add_option( "--from", ro.from, "Start configuration, e.g. 000" )->required();
    reach->add_option( "--to", ro.to, "Target configuration; exit 1 when unreachable" );
    reach->add_option( "--cap", ro.cap, "Override the engine's dimension cap" );
    reach->add_option( "--lag", ro.lag, "Cuttable: pending changes a reader may lag behind" );
    reach->add_option( "file", ro.file, "Network file" )->required();

    std::string which;
    auto* traps = app.add_subcommand( "trapspaces", "List trapspaces in {0,1,*} form" );
    traps->add_option( "--which", which, "all, principal or minimal" )->required();
    traps->add_option( "file", file, "Network file" )->required();

    std::string kind;
    auto* closure = app.add_subcommand( "closure", "Trapping or min-trapping closure" );
    closure->add_option( "--kind", kind, "trapping or min" )->required();
    closure->add_option( "file", file, "Network file" )->required();

    std::string graph_kind_text;
    std::string format = "dot";
    bool hide_loops = false;
    bool hypercube = false;
    bool layered = false;
    auto* graph = app.add_subcommand( "graph", "Asynchronous, general asynchronous or trapping graph" );
    graph->add_option( "--kind", graph_kind_text, "a, ga or tg" )->required();
    graph->add_option( "--format", format, "dot or limits (terminal strongly connected components)" );
    graph->add_flag( "--hide-loops", hide_loops, "Do not draw loops" );
    graph->add_flag( "--hypercube", hypercube, "Draw the hypercube underneath" );
    graph->add_flag( "--layered", layered, "Colour edges by layer: A blue, GA magenta, TG orange" );
    graph->add_option( "file", file, "Network file" )->required();

    std::string mode_text;
    std::string trajectory_file;
    auto* validate = app.add_subcommand( "validate", "Check a trajectory record against a mode" );
    validate->add_option( "--mode", mode_text, "Update mode" )->required();
    validate->add_option( "--trajectory", trajectory_file, "Trajectory record (bnmm.trajectory.v1)" )->required();
    validate->add_option( "file", file, "Network file" )->required();

    hierarchy_options ho;
    auto* hierarchy = app.add_subcommand( "hierarchy", "Check the mode hierarchy on enumerated or sampled networks" );
    hierarchy->add_option( "--n", ho.n, "Dimension" );
    auto* enumerate = hierarchy->add_flag( "--enumerate", ho.enumerate, "Every network of dimension n (n <= 2)" );
    auto* samples = hierarchy->add_option( "--samples", ho.samples, "Number of random networks" );
    hierarchy->add_option( "--seed", ho.seed, "Seed of the first random network" );
    auto* fixture_option = hierarchy->add_option( "--fixture", ho.fixture, "Check a single named fixture" );
    enumerate->excludes( samples )->excludes( fixture_option );
    samples->excludes( fixture_option );

    std::string fixture_name;
    auto* fixtures = app.add_subcommand( "fixtures", "List fixtures or print one" );
    fixtures->add_option( "--name", fixture_name, "Fixture name" );

    std::vector<const char*> argv;
    for ( const auto& a : args )
        argv.push_back( a.c_str() );
    if ( argv.empty() )
        argv.push_back( "bnmm" );

    std::ostringstream buffer;
    try
    {
        app.parse( static_cast<int>( argv.size() ), argv.data() );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? exit_ok : exit_usage;
    }

    int code = exit_ok;
    try
    {
        if ( parse->parsed() )
            code = cmd_parse( common, file, buffer );
        else if ( reach->parsed() )
            code = cmd_reach( common, ro, buffer );
        else if ( traps->parsed() )
            code = cmd_trapspaces( common, which, file, buffer );
        else if ( closure->parsed() )
            code = cmd_closure( common, kind, file, buffer );
        else if ( graph->parsed() )
            code = cmd_graph( common, graph_kind_text, format, hide_loops, hypercube, layered, file, buffer );
        else if ( validate->parsed() )
            code = cmd_validate( common, mode_text, trajectory_file, file, buffer );
        else if ( hierarchy->parsed() )
            code = cmd_hierarchy( common, ho, buffer );
        else if ( fixtures->parsed() )
            code = cmd_fixtures( common, fixture_name, buffer );
    }
    catch ( const usage_failure& e )
    {
        err << "bnmm: " << e.message << '\n';
        return exit_usage;
    }
    catch ( const bnmm::error& e )
    {
        err << "bnmm: " << e.what() << '\n';
        return exit_usage;
    }
    out << buffer.str();
    return code;
}

} // namespace bnmm::cli
