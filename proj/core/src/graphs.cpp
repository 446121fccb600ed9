#include "bnmm/graphs.hpp"
#include "bnmm/errors.hpp"
#include "bnmm/subcube.hpp"
#include "bnmm/trapspace.hpp"

#include <algorithm>
#include <sstream>

namespace bnmm
{

state_graph::state_graph( int n ) : _n{ n }, _out( state_count( n ), config_set( n ) ) {}

state_graph::state_graph( int n, std::vector<config_set> out ) : _n{ n }, _out{ std::move( out ) }
{
    if ( _out.size() != state_count( n ) )
        throw invalid_argument( "graph needs one successor set per configuration" );
    for ( const auto& s : _out )
        if ( s.dimension() != n )
            throw dimension_error( "successor set has the wrong dimension" );
}

bool state_graph::is_subgraph_of( const state_graph& other ) const
{
    if ( _n != other._n )
        throw dimension_error( "graphs of different dimensions" );
    for ( std::size_t x = 0; x < _out.size(); ++x )
        if ( !_out[ x ].is_subset_of( other._out[ x ] ) )
            return false;
    return true;
}

std::size_t state_graph::non_loop_edge_count() const
{
    std::size_t total = 0;
    for ( state_t x = 0; x < _out.size(); ++x )
        total += _out[ x ].size() - ( _out[ x ].contains( x ) ? 1 : 0 );
    return total;
}

std::string_view graph_kind_name( graph_kind kind )
{
    switch ( kind )
    {
        case graph_kind::asynchronous: return "asynchronous";
        case graph_kind::general_asynchronous: return "general_asynchronous";
        case graph_kind::trapping: return "trapping";
    }
    return "?";
}

std::optional<graph_kind> parse_graph_kind( std::string_view text )
{
    if ( text == "a" || text == "asynchronous" )
        return graph_kind::asynchronous;
    if ( text == "ga" || text == "general_asynchronous" )
        return graph_kind::general_asynchronous;
    if ( text == "tg" || text == "trapping" )
        return graph_kind::trapping;
    return std::nullopt;
}

dynamics_graph build_graph( const boolean_network& f, graph_kind kind, int cap )
{
    const int n = f.dimension();
    if ( n > cap )
        throw cap_exceeded( "build_graph", cap, n );
    state_graph g( n );
    for ( state_t x = 0; x < state_count( n ); ++x )
    {
        switch ( kind )
        {
            case graph_kind::asynchronous:
                g.add_edge( x, x );
                for ( int i = 0; i < n; ++i )
                    g.add_edge( x, ( f.image( x ) & coordinate_bit( n, i ) ) | ( x & ~coordinate_bit( n, i ) ) );
                break;
            case graph_kind::general_asynchronous:
                subcube::span( n, x, f.image( x ) ).for_each_member( [ & ]( state_t y ) { g.add_edge( x, y ); } );
                break;
            case graph_kind::trapping:
                principal_trapspace( f, x ).for_each_member( [ & ]( state_t y ) { g.add_edge( x, y ); } );
                break;
        }
    }
    return { std::move( g ), kind };
}

graph_properties graph_predicates( const state_graph& g )
{
    const int n = g.dimension();
    graph_properties p{ true, true, true, true };
    for ( state_t x = 0; x < state_count( n ); ++x )
    {
        const auto& out = g.successors( x );
        if ( !out.contains( x ) )
            p.reflexive = false;
        out.for_each( [ & ]( state_t y ) {
            if ( !g.has_edge( y, x ) )
                p.symmetric = false;
            if ( p.transitive && !g.successors( y ).is_subset_of( out ) )
                p.transitive = false;
        } );
        if ( out.empty() || principal_subcube( out ).size() != out.size() )
            p.outs_are_subcubes = false;
    }
    return p;
}

graph_inversion graph_to_network( const state_graph& g, graph_kind kind )
{
    const int n = g.dimension();
    const auto p = graph_predicates( g );
    if ( !p.reflexive )
        return { std::nullopt, "not reflexive" };
    std::vector<state_t> images( state_count( n ) );
    if ( kind == graph_kind::asynchronous )
    {
        for ( state_t x = 0; x < images.size(); ++x )
        {
            state_t flips = 0;
            bool single = true;
            g.successors( x ).for_each( [ & ]( state_t y ) {
                if ( std::popcount( x ^ y ) > 1 )
                    single = false;
                flips |= x ^ y;
            } );
            if ( !single )
                return { std::nullopt, "edge from " + bits_to_string( n, x ) + " changes more than one coordinate" };
            images[ x ] = x ^ flips;
        }
        return { boolean_network{ n, std::move( images ) }, "" };
    }
    if ( !p.outs_are_subcubes )
        return { std::nullopt, "out-neighbourhoods are not all subcubes" };
    if ( kind == graph_kind::trapping && !p.transitive )
        return { std::nullopt, "not transitive" };
    for ( state_t x = 0; x < images.size(); ++x )
        images[ x ] = principal_subcube( g.successors( x ) ).opposite( x );
    return { boolean_network{ n, std::move( images ) }, "" };
}

std::vector<std::vector<state_t>> limit_sets( const state_graph& g )
{
    const auto count = static_cast<state_t>( state_count( g.dimension() ) );
    constexpr state_t unvisited = ~state_t{ 0 };
    std::vector<state_t> index( count, unvisited ), low( count, 0 ), component( count, unvisited );
    std::vector<bool> on_stack( count, false );
    std::vector<state_t> stack;
    std::vector<std::vector<state_t>> components;
    state_t next_index = 0;

    // Iterative Tarjan; each frame walks the successors of one vertex.
    struct frame
    {
        state_t v;
        std::vector<state_t> succ;
        std::size_t pos;
    };
    for ( state_t root = 0; root < count; ++root )
    {
        if ( index[ root ] != unvisited )
            continue;
        std::vector<frame> call;
        auto open = [ & ]( state_t v ) {
            index[ v ] = low[ v ] = next_index++;
            stack.push_back( v );
            on_stack[ v ] = true;
            call.push_back( { v, g.successors( v ).states(), 0 } );
        };
        open( root );
        while ( !call.empty() )
        {
            auto& fr = call.back();
            if ( fr.pos < fr.succ.size() )
            {
                const auto w = fr.succ[ fr.pos++ ];
                if ( index[ w ] == unvisited )
                    open( w );
                else if ( on_stack[ w ] )
                    low[ fr.v ] = std::min( low[ fr.v ], index[ w ] );
                continue;
            }
            const auto v = fr.v;
            if ( low[ v ] == index[ v ] )
            {
                std::vector<state_t> comp;
                state_t w;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[ w ] = false;
                    component[ w ] = static_cast<state_t>( components.size() );
                    comp.push_back( w );
                } while ( w != v );
                components.push_back( std::move( comp ) );
            }
            call.pop_back();
            if ( !call.empty() )
                low[ call.back().v ] = std::min( low[ call.back().v ], low[ v ] );
        }
    }

    std::vector<std::vector<state_t>> terminal;
    for ( std::size_t c = 0; c < components.size(); ++c )
    {
        bool closed = true;
        for ( auto v : components[ c ] )
            g.successors( v ).for_each( [ & ]( state_t w ) { closed = closed && component[ w ] == c; } );
        if ( closed )
        {
            auto comp = components[ c ];
            std::sort( comp.begin(), comp.end() );
            terminal.push_back( std::move( comp ) );
        }
    }
    std::sort( terminal.begin(), terminal.end() );
    return terminal;
}

namespace
{

void write_header( std::ostringstream& out, const state_graph& g, const dot_options& options )
{
    const int n = g.dimension();
    out << "digraph G {\n";
    out << "  node [shape=plaintext];\n";
    for ( state_t x = 0; x < state_count( n ); ++x )
        out << "  \"" << bits_to_string( n, x ) << "\";\n";
    if ( options.hypercube )
        for ( state_t x = 0; x < state_count( n ); ++x )
            for ( int i = 0; i < n; ++i )
            {
                const auto y = x | coordinate_bit( n, i );
                if ( y != x )
                    out << "  \"" << bits_to_string( n, x ) << "\" -> \"" << bits_to_string( n, y )
                        << "\" [dir=none, color=grey];\n";
            }
}

} // namespace

std::string export_dot( const state_graph& g, const dot_options& options )
{
    const int n = g.dimension();
    std::ostringstream out;
    write_header( out, g, options );
    for ( state_t x = 0; x < state_count( n ); ++x )
        g.successors( x ).for_each( [ & ]( state_t y ) {
            if ( options.hide_loops && x == y )
                return;
            out << "  \"" << bits_to_string( n, x ) << "\" -> \"" << bits_to_string( n, y ) << "\";\n";
        } );
    out << "}\n";
    return out.str();
}

std::string export_layered_dot( const boolean_network& f, graph_kind kind, const dot_options& options )
{
    const int n = f.dimension();
    const auto a = build_graph( f, graph_kind::asynchronous );
    const auto ga = build_graph( f, graph_kind::general_asynchronous );
    const auto g = build_graph( f, kind );
    std::ostringstream out;
    write_header( out, g, options );
    for ( state_t x = 0; x < state_count( n ); ++x )
        g.successors( x ).for_each( [ & ]( state_t y ) {
            if ( options.hide_loops && x == y )
                return;
            const char* colour = a.has_edge( x, y ) ? "blue" : ga.has_edge( x, y ) ? "magenta" : "orange";
            out << "  \"" << bits_to_string( n, x ) << "\" -> \"" << bits_to_string( n, y ) << "\" [color=" << colour
                << "];\n";
        } );
    out << "}\n";
    return out.str();
}

} // namespace bnmm
