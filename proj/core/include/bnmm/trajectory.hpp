#pragma once

#include "bnmm/modes.hpp"
#include "bnmm/network.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bnmm
{

// One step w^a = (i^a, s^a, t^a); the next configuration is
// x^a = (f_i(s^a), t^a_{-i}). `i` is 0-based.
struct step
{
    int i = 0;
    state_t s = 0;
    state_t t = 0;

    friend bool operator==( const step&, const step& ) = default;
};

struct trajectory
{
    int n = 0;
    state_t start = 0;
    std::vector<step> steps;
    // Configurations x^1..x^l as claimed by the producer; checked against
    // the recomputed ones when present.
    std::optional<std::vector<state_t>> claimed;

    friend bool operator==( const trajectory&, const trajectory& ) = default;
};

// x^0, ..., x^l.
[[nodiscard]] std::vector<state_t> derived_configurations( const boolean_network& f, const trajectory& traj );

// V^1..V^l: V^a[j] is the timestamp component j is read at.
struct interval_witness
{
    std::vector<std::vector<unsigned>> v;
    friend bool operator==( const interval_witness&, const interval_witness& ) = default;
};

// C^1..C^l: C^a[i][j] is the timestamp of j's value as seen by reader i.
struct cuttable_witness
{
    std::vector<std::vector<std::vector<unsigned>>> c;
    friend bool operator==( const cuttable_witness&, const cuttable_witness& ) = default;
};

using mode_witness = std::variant<std::monostate, interval_witness, cuttable_witness>;

struct trajectory_violation
{
    std::size_t step = 0; // 1-based step index a
    std::string constraint;
    std::string detail;
};

struct validation_result
{
    std::optional<trajectory_violation> violation;
    std::vector<state_t> configurations; // x^0..x^a up to the first violation

    [[nodiscard]] bool ok() const { return !violation; }
};

// Checks every step against the mode's constraints: source and target
// membership, the witness bounds and monotonicity, s^a_j = x^{V or C}_j,
// and the claimed configurations. Throws when the witness variant does not
// match the mode (interval needs V, cuttable needs C, others none) or on a
// dimension mismatch.
[[nodiscard]] validation_result validate_trajectory( const boolean_network& f, mode m, const trajectory& traj,
                                                     const mode_witness& witness = {} );

// Drops the steps whose configuration repeats its predecessor.
[[nodiscard]] trajectory compress_trajectory( const boolean_network& f, const trajectory& traj );

// Finds V (interval) or C (cuttable) matrices making the trajectory valid,
// if any exist, by taking at every step the earliest admissible timestamp.
// Earlier timestamps never remove options later on, so this is exact. Other
// modes need no witness and get std::monostate when valid.
[[nodiscard]] std::optional<mode_witness> find_witness( const boolean_network& f, mode m, const trajectory& traj );

// Record format "bnmm.trajectory.v1":
//   { "schema": "bnmm.trajectory.v1", "start": "000",
//     "steps": [ { "i": 1, "s": "000", "t": "000" }, ... ],
//     "V": [[0,0,0], ...], "C": [[[0,0],[0,0]], ...], "configs": ["100", ...] }
// `i` is 1-based; V, C and configs are optional.
struct trajectory_record
{
    trajectory traj;
    mode_witness witness;
};

[[nodiscard]] nlohmann::json trajectory_to_json( const trajectory& traj, const mode_witness& witness = {} );
[[nodiscard]] trajectory_record trajectory_from_json( const nlohmann::json& record );

} // namespace bnmm
