#pragma once

#include "bnmm/network.hpp"

#include <map>
#include <string>
#include <vector>

namespace bnmm
{

struct fixture
{
    std::string name;
    boolean_network network;
    std::string description;
    // Network read off a drawn graph rather than printed formulas or tables.
    bool reconstructed_from_figure = false;
    // Network found by a seeded search, not taken from the text.
    bool searched = false;
    // Reading adopted where the text is ambiguous; empty otherwise.
    std::string interpretation;
};

// The worked examples, the figure-derived pairs, the hat constructions and
// the product network, keyed by name.
[[nodiscard]] const std::map<std::string, fixture>& paper_fixtures();

// Throws invalid_argument for an unknown name.
[[nodiscard]] const fixture& find_fixture( const std::string& name );
[[nodiscard]] std::vector<std::string> fixture_names();

} // namespace bnmm
