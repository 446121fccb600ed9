#pragma once

#include "bnmm/modes.hpp"
#include "bnmm/network.hpp"

#include <vector>

namespace bnmm
{

// Per-mode dimension caps of the exact engines.
struct reach_caps
{
    int asynchronous = 16;
    int history = 8;
    int trapping = 16;
    int most_permissive = 10;
    int subcube_based = 16;
    int interval = 10;
    int cuttable = 4;

    // Cuttable engine: how many pending changes of a component a reader is
    // allowed to lag behind (at least 1). See reach_set.
    int cuttable_lag = 1;

    [[nodiscard]] int cap( mode m ) const;
};

// The exact set of configurations reachable from x under mode m.
//
//   asynchronous     breadth-first search on A(f)
//   trapping,        members of T_f(x)
//   subcube_based
//   most_permissive  search over (x, D), D the coordinates where some
//                    visited configuration differs from the start; the
//                    memory subcube is the start with D freed
//   history          search over (x, A_1..A_n), A_j = {f_j(v) : v visited}
//   interval         search over (w, r): written values and the values
//                    others read; propagate(j) sets r_j := w_j, update(i)
//                    needs r_i = w_i and sets w_i := f_i(r)
//   cuttable         search over (w, k): k_ij counts the changes of j that
//                    reader i has not caught up with, so i reads
//                    w_j xor (k_ij mod 2); catching up decrements k_ij, a
//                    change of j increments column j. Counts above
//                    cuttable_lag lose two (same parity), which can only
//                    lose trajectories.
//
// Throws cap_exceeded above the mode's cap.
[[nodiscard]] config_set reach_set( const boolean_network& f, mode m, state_t x, const reach_caps& caps = {} );
[[nodiscard]] config_set reach_set( const boolean_network& f, mode m, const configuration& x,
                                    const reach_caps& caps = {} );

class reach_relation
{
    int _n = 0;
    mode _mode = mode::asynchronous;
    std::vector<config_set> _rows;

public:
    reach_relation( int n, mode m, std::vector<config_set> rows );

    [[nodiscard]] int dimension() const { return _n; }
    [[nodiscard]] mode update_mode() const { return _mode; }
    [[nodiscard]] const config_set& row( state_t x ) const { return _rows[ x ]; }
    [[nodiscard]] bool contains( state_t x, state_t y ) const { return _rows[ x ].contains( y ); }
    [[nodiscard]] bool is_subset_of( const reach_relation& other ) const;
    [[nodiscard]] bool reflexive() const;
    [[nodiscard]] bool transitive() const;

    friend bool operator==( const reach_relation& a, const reach_relation& b ) { return a._rows == b._rows; }
};

[[nodiscard]] reach_relation compute_reach_relation( const boolean_network& f, mode m, const reach_caps& caps = {} );

} // namespace bnmm
