#pragma once

#include "bnmm/modes.hpp"
#include "bnmm/network.hpp"
#include "bnmm/reach.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bnmm
{

inline constexpr std::size_t mode_count = all_modes.size();

[[nodiscard]] constexpr std::size_t mode_index( mode m ) { return static_cast<std::size_t>( m ); }

// y in mu*(x) but not in nu*(x).
struct strictness_witness
{
    mode mu;
    mode nu;
    state_t source;
    state_t target;
};

struct hierarchy_violation
{
    std::string containment; // e.g. "a <= i", "t = s", "t = T_f"
    state_t source;
    state_t target;
};

// The containments of the hierarchy, over all sources.
inline constexpr std::array<std::pair<mode, mode>, 7> hierarchy_containments{ {
        { mode::asynchronous, mode::interval },
        { mode::interval, mode::history },
        { mode::interval, mode::cuttable },
        { mode::history, mode::most_permissive },
        { mode::cuttable, mode::most_permissive },
        { mode::most_permissive, mode::trapping },
        { mode::trapping, mode::subcube_based },
} };

struct hierarchy_report
{
    std::string id;
    int n = 0;
    // Modes whose engine cap is below n; their rows and columns are unset.
    std::vector<mode> excluded;
    // sizes[x][mode_index(m)] = |m*(x)|, 0 for excluded modes.
    std::vector<std::array<std::size_t, mode_count>> sizes;
    // contained[mu][nu]: mu*(x) ⊆ nu*(x) for every x.
    std::array<std::array<bool, mode_count>, mode_count> contained{};
    // One witness per ordered pair (mu, nu) with contained[mu][nu] false.
    std::vector<strictness_witness> witnesses;
    std::vector<hierarchy_violation> violations;

    [[nodiscard]] bool is_excluded( mode m ) const;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

// Computes all seven relations (skipping modes above their cap) and checks
// every hierarchy containment, plus T*(x) = S*(x) = T_f(x).
[[nodiscard]] hierarchy_report check_hierarchy( const boolean_network& f, const std::string& id = {},
                                                const reach_caps& caps = {} );

struct equivalence_witness
{
    state_t source;
    state_t target;       // a min-trapspace configuration
    bool reached_by_mu;   // true: in mu* only; false: in nu* only
};

struct equivalence_result
{
    bool equivalent = true;
    std::optional<equivalence_witness> witness;
};

// For every x and every min-trapspace configuration y:
// y in mu*(x) iff y in nu*(x). The witness is the first (x, y) that
// disagrees, in increasing order of x then y.
[[nodiscard]] equivalence_result min_trapspace_equivalence( const boolean_network& f, mode mu, mode nu,
                                                            const reach_caps& caps = {} );

} // namespace bnmm
