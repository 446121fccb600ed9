#pragma once

#include "bnmm/network.hpp"

#include <cstdint>
#include <vector>

namespace bnmm
{

inline constexpr int enumerate_cap = 2;

// Every network of dimension n <= 2, in increasing order of the table read as
// a base-2^n number with image(0) as the most significant digit.
[[nodiscard]] std::vector<boolean_network> enumerate_networks( int n );

// Uniform over truth tables; the same (n, seed) gives the same network.
[[nodiscard]] boolean_network random_network( int n, std::uint64_t seed );

// (f(x_F), g(x_G)) with f on the first n_f coordinates.
[[nodiscard]] boolean_network product_network( const boolean_network& f, const boolean_network& g );

// L(d) = 2^floor(d/2) + 2^ceil(d/2) - 1.
[[nodiscard]] std::size_t mp_lower_bound( int d );

struct mp_cardinality_network
{
    boolean_network network;
    configuration source; // 0...0
};

// A network with T_f(0) = B^n and exactly k configurations most permissive
// reachable from 0, for L(n) <= k <= 2^n. Built recursively: the first
// floor(n/2) components are constant 1, the rest negate, copy or recurse
// depending on which element of an up-set of B^c the first block holds.
[[nodiscard]] mp_cardinality_network gen_mp_cardinality( int n, std::size_t k );

// The t-vectors t^1..t^{n+1} of the transient construction.
[[nodiscard]] std::vector<state_t> transient_chain( int n );

// Trapping network with transient n and period 2: t^i -> t^{i+1} along the
// chain, 0..00 <-> 0..01, identity elsewhere. n >= 3.
[[nodiscard]] boolean_network gen_transient( int n );

// Lifts a base network b of dimension k to dimension n > k:
//   x_n = 1                        -> (¬x_base, ¬x_mid, 1)
//   x_n = 0, x_mid = 0, x_base != s -> (b(x_base), 0, 0)
//   x_n = 0, x_mid = 0, x_base = s  -> (b(s), 0, 1)
//   otherwise                      -> x
// so the upper half x_n = 1 is entered only through source s.
[[nodiscard]] boolean_network gen_hat( const boolean_network& base, state_t s, int n );

} // namespace bnmm
