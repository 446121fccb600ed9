#pragma once

#include "bnmm/network.hpp"
#include "bnmm/subcube.hpp"

#include <vector>

namespace bnmm
{

// T_f(x): the smallest trapspace containing x. Iterates
// T_i = [T_{i-1} ∪ f(T_{i-1})] from {x}, applying f to each member once,
// until the first round that adds nothing.
[[nodiscard]] subcube principal_trapspace( const boolean_network& f, state_t x );
[[nodiscard]] subcube principal_trapspace( const boolean_network& f, const configuration& x );

// T_f(x) for every x, indexed by x.
[[nodiscard]] std::vector<subcube> principal_trapspace_table( const boolean_network& f );

// f(X) ⊆ X.
[[nodiscard]] bool is_trapspace( const boolean_network& f, const subcube& x );

enum class trapspace_kind
{
    all,
    principal,
    minimal
};

inline constexpr int default_all_trapspaces_cap = 12;

// `all` tests every one of the 3^n subcubes and is capped; `principal` is
// {T_f(x)}; `minimal` keeps the principal trapspaces that contain no other.
[[nodiscard]] subcube_collection trapspaces( const boolean_network& f, trapspace_kind which,
                                             int all_cap = default_all_trapspaces_cap );

// M(f): configurations whose principal trapspace is minimal.
[[nodiscard]] config_set min_trapspace_configs( const boolean_network& f );

// f^T(x) = T_f(x) - x.
[[nodiscard]] boolean_network trapping_closure( const boolean_network& f );

// f^M(x) = T_f(x) - x on M(f), ¬x elsewhere.
[[nodiscard]] boolean_network min_trapping_closure( const boolean_network& f );

// F(A)(x) = A(x) - x, with A(x) = B^n when no member contains x.
[[nodiscard]] boolean_network collection_to_network( const subcube_collection& collection );

// Lattice on F(n) through the difference masks Δ(x, f(x)).
[[nodiscard]] bool lattice_leq( const boolean_network& f, const boolean_network& g );
[[nodiscard]] boolean_network lattice_join( const boolean_network& f, const boolean_network& g );
[[nodiscard]] boolean_network lattice_meet( const boolean_network& f, const boolean_network& g );

// f^T = g^T.
[[nodiscard]] bool trapspace_equivalent( const boolean_network& f, const boolean_network& g );

// g = g^T, tested as transitivity of GA(g): every y in [x, g(x)] has
// g(y) in [x, g(x)].
[[nodiscard]] bool is_trapping( const boolean_network& g );

} // namespace bnmm
