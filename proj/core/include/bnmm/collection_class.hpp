#pragma once

#include "bnmm/subcube.hpp"

#include <optional>
#include <string>

namespace bnmm
{

inline constexpr int default_classify_cap = 8;

struct collection_violation
{
    std::string property;  // "pre_principal", "pre_ideal" or "min_ideal"
    std::string condition; // which defining condition failed
    std::string detail;    // the offending subcubes, in {0,1,*} form
};

struct collection_class
{
    bool pre_principal = false;
    bool pre_ideal = false;
    bool min_ideal = false;

    // The three conditions characterising pre-principal collections: the
    // members cover B^n; every A ∩ B is a union of members; no member is a
    // union of other members. Their conjunction equals pre_principal.
    bool covers = false;
    bool intersections_are_unions = false;
    bool no_member_is_union_of_others = false;

    // First violated condition, pre-principal first.
    std::optional<collection_violation> witness;
};

// pre_principal: A = {A(x) : x in B^n}.
// pre_ideal: B^n in A, nonempty pairwise intersections in A, and every
// subcube that is a union of members is a member.
// min_ideal: nonempty and pairwise disjoint.
[[nodiscard]] collection_class classify_collection( const subcube_collection& collection,
                                                     int cap = default_classify_cap );

} // namespace bnmm
