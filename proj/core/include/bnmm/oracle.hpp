#pragma once

#include "bnmm/errors.hpp"
#include "bnmm/modes.hpp"
#include "bnmm/network.hpp"

#include <cstddef>

namespace bnmm
{

class budget_exceeded : public error
{
public:
    using error::error;
};

inline constexpr int oracle_max_dimension = 6;

struct oracle_options
{
    // Expanded search nodes before giving up with budget_exceeded.
    std::size_t node_budget = 50'000'000;
    // Interval/cuttable: enumerate every admissible timestamp instead of the
    // earliest one per read value. Much slower; used to check the pruning.
    bool all_timestamps = false;
};

// Configurations visited by some trajectory of at most `depth` steps,
// enumerated straight from the mode definitions: explicit sources and
// targets drawn from the visited configurations (or their subcube), and
// explicit V vectors / C matrices for interval and cuttable. Search states
// are memoized on the exact memory: the visited set for the first five
// modes, the visited sequence plus timestamps for interval and cuttable.
// Intended for n <= 3; refuses n > oracle_max_dimension.
[[nodiscard]] config_set reach_oracle( const boolean_network& f, mode m, state_t x, unsigned depth,
                                       const oracle_options& options = {} );

} // namespace bnmm
