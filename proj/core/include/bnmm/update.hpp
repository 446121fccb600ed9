#pragma once

#include "bnmm/network.hpp"

#include <utility>
#include <vector>

namespace bnmm
{

// f^(S)(x) = (f_S(x), x_{-S}) for a coordinate mask S.
[[nodiscard]] inline state_t update_block( const boolean_network& f, state_t block, state_t x )
{
    return ( f.image( x ) & block ) | ( x & ~block );
}

// f^(S_1, ..., S_k)(x): the blocks are applied left to right. Blocks are
// lists of 0-based coordinates.
[[nodiscard]] configuration apply_update( const boolean_network& f, const std::vector<std::vector<int>>& blocks,
                                          const configuration& x );

// Same on packed masks.
[[nodiscard]] state_t apply_update( const boolean_network& f, const std::vector<state_t>& blocks, state_t x );

class interaction_graph
{
    int _n = 0;
    std::vector<std::pair<int, int>> _edges; // (i, j): f_j depends on x_i, sorted

public:
    interaction_graph( int n, std::vector<std::pair<int, int>> edges );

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] const std::vector<std::pair<int, int>>& edges() const { return _edges; }
    [[nodiscard]] bool has_edge( int i, int j ) const;

    // No directed cycle, loops included.
    [[nodiscard]] bool acyclic() const;
};

[[nodiscard]] interaction_graph build_interaction_graph( const boolean_network& f );

struct transient_period
{
    unsigned transient = 0;
    unsigned period = 1;

    friend bool operator==( const transient_period&, const transient_period& ) = default;
};

// Least t and least p >= 1 with f^(t+p) = f^t, from the orbits of every
// configuration.
[[nodiscard]] transient_period transient_and_period( const boolean_network& f );

} // namespace bnmm
