#pragma once

#include "bnmm/network.hpp"

namespace bnmm
{

inline constexpr int default_profile_cap = 10;

struct network_profile
{
    bool commutative = false;          // f^(i,j) = f^(j,i) for all i, j
    bool trapping = false;             // GA(f) transitive
    bool min_trapping = false;         // f = f^M
    bool locally_bijective = false;    // every f^(i) is a bijection
    bool globally_bijective = false;   // every f^(S) is a bijection
    bool negation_on_subcubes = false; // f = F(Q) for a partition Q of B^n into subcubes
    bool increasing = false;           // f(x) >= x
    bool idempotent = false;           // f^2 = f
    bool dynamically_local = false;    // f^3 = f
    bool bijective = false;
    bool acyclic_interaction = false;
    unsigned transient = 0;
    unsigned period = 1;

    friend bool operator==( const network_profile&, const network_profile& ) = default;
};

// All flags by exhaustive tests. Throws cap_exceeded above `cap`.
[[nodiscard]] network_profile classify_network( const boolean_network& f, int cap = default_profile_cap );

[[nodiscard]] bool is_commutative( const boolean_network& f );
[[nodiscard]] bool is_bijective( const boolean_network& f );
[[nodiscard]] bool is_locally_bijective( const boolean_network& f );
[[nodiscard]] bool is_globally_bijective( const boolean_network& f );
[[nodiscard]] bool is_negation_on_subcubes( const boolean_network& f );

} // namespace bnmm
