#pragma once

#include "bnmm/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bnmm
{

inline constexpr int default_graph_cap = 12;

// Any directed graph on B^n, loops allowed: one successor set per vertex.
class state_graph
{
    int _n = 0;
    std::vector<config_set> _out;

public:
    state_graph() = default;
    explicit state_graph( int n );
    state_graph( int n, std::vector<config_set> out );

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] const config_set& successors( state_t x ) const { return _out[ x ]; }
    [[nodiscard]] bool has_edge( state_t x, state_t y ) const { return _out[ x ].contains( y ); }
    void add_edge( state_t x, state_t y ) { _out[ x ].insert( y ); }
    void remove_edge( state_t x, state_t y ) { _out[ x ].erase( y ); }
    [[nodiscard]] bool is_subgraph_of( const state_graph& other ) const;
    // Edges x -> y with x != y.
    [[nodiscard]] std::size_t non_loop_edge_count() const;

    friend bool operator==( const state_graph&, const state_graph& ) = default;
};

enum class graph_kind
{
    asynchronous,         // A(f): edges x -> f^(i)(x)
    general_asynchronous, // GA(f): edges x -> f^(S)(x), i.e. onto [x, f(x)]
    trapping              // TG(f): edges x -> y for y in T_f(x)
};

[[nodiscard]] std::string_view graph_kind_name( graph_kind kind );
// "a", "ga", "tg" or the long names.
[[nodiscard]] std::optional<graph_kind> parse_graph_kind( std::string_view text );

class dynamics_graph : public state_graph
{
    graph_kind _kind;

    dynamics_graph( state_graph g, graph_kind kind ) : state_graph{ std::move( g ) }, _kind{ kind } {}
    friend dynamics_graph build_graph( const boolean_network& f, graph_kind kind, int cap );

public:
    [[nodiscard]] graph_kind kind() const { return _kind; }
};

// Loops are kept. Throws cap_exceeded above `cap`.
[[nodiscard]] dynamics_graph build_graph( const boolean_network& f, graph_kind kind, int cap = default_graph_cap );

struct graph_properties
{
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    bool outs_are_subcubes = false;
};

[[nodiscard]] graph_properties graph_predicates( const state_graph& g );

struct graph_inversion
{
    std::optional<boolean_network> network;
    std::string rejection; // failed predicate when network is empty
};

// general_asynchronous: f(x) = N^out(x) - x, provided the graph is
// reflexive with subcube out-neighbourhoods; trapping additionally needs
// transitivity. asynchronous: f(x) flips exactly the coordinates x has an
// edge along, provided the graph is reflexive and every edge is a single
// flip.
[[nodiscard]] graph_inversion graph_to_network( const state_graph& g, graph_kind kind );

// Terminal strongly connected components, each sorted, ordered by their
// smallest member.
[[nodiscard]] std::vector<std::vector<state_t>> limit_sets( const state_graph& g );

struct dot_options
{
    bool hide_loops = false;
    // Draw the hypercube edges underneath, undirected and grey.
    bool hypercube = false;
};

// Deterministic DOT text, vertices labelled by bit-strings.
[[nodiscard]] std::string export_dot( const state_graph& g, const dot_options& options = {} );

// DOT text of the kind's graph with each edge coloured by the first layer
// it belongs to: blue for A(f), magenta for the extra edges of GA(f),
// orange for the extra edges of TG(f).
[[nodiscard]] std::string export_layered_dot( const boolean_network& f, graph_kind kind,
                                              const dot_options& options = {} );

} // namespace bnmm
