#pragma once

#include "bnmm/network.hpp"

#include <string>
#include <string_view>

namespace bnmm
{

struct parse_options
{
    int dimension_cap = 16;
};

// Parses the network text format:
//
//     # bnmm v1                  (optional header)
//     x1 : !x1 | !x2             (one declaration per component)
//     x2 : !x1 | !x2 ; x3 : 1    (';' and newline both end a declaration)
//
// with expr ::= term ('|' term)*, term ::= factor ('&' factor)*,
// factor ::= '!' factor | '(' expr ')' | ident | '0' | '1'. Identifiers may
// be referenced before they are declared; component order is declaration
// order. Alternatively the body is a truth-table block: `table <n>` followed
// by 2^n lines `<input bits> <output bits>`. Other '#' lines are comments.
[[nodiscard]] boolean_network parse_network( std::string_view text, const parse_options& options = {} );

// Canonical text: the expression form when the network carries expressions,
// the truth-table block otherwise. Re-parses to the same truth tables.
[[nodiscard]] std::string print_network( const boolean_network& f );

// The `table <n>` block of f, regardless of how f was defined.
[[nodiscard]] std::string print_truth_table( const boolean_network& f );

} // namespace bnmm
