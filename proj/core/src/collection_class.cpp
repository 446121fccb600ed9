#include "bnmm/collection_class.hpp"
#include "bnmm/errors.hpp"

namespace bnmm
{

namespace
{

// Union of the members contained in `within`.
config_set union_inside( const subcube_collection& collection, const subcube& within, bool strictly )
{
    config_set out( collection.dimension() );
    for ( const auto& m : collection.members() )
        if ( m.is_subset_of( within ) && !( strictly && m == within ) )
            m.for_each_member( [ &out ]( state_t x ) { out.insert( x ); } );
    return out;
}

void note( std::optional<collection_violation>& witness, std::string property, std::string condition,
           std::string detail )
{
    if ( !witness )
        witness = collection_violation{ std::move( property ), std::move( condition ), std::move( detail ) };
}

} // namespace

collection_class classify_collection( const subcube_collection& collection, int cap )
{
    const int n = collection.dimension();
    if ( n > cap )
        throw cap_exceeded( "classify_collection", cap, n );
    const auto& members = collection.members();
    collection_class out;
    std::optional<collection_violation> principal_witness;
    std::optional<collection_violation> ideal_witness;
    std::optional<collection_violation> min_witness;

    // Focus test.
    subcube_collection foci( n );
    for ( state_t x = 0; x < state_count( n ); ++x )
        foci.insert( collection.focus( x ) );
    out.pre_principal = foci == collection;
    if ( !out.pre_principal )
    {
        for ( state_t x = 0; x < state_count( n ); ++x )
        {
            const auto a = collection.focus( x );
            if ( !collection.contains( a ) )
            {
                note( principal_witness, "pre_principal", "focus A(x) is not a member",
                      "x=" + bits_to_string( n, x ) + " A(x)=" + a.str() );
                break;
            }
        }
        for ( const auto& m : members )
            if ( !foci.contains( m ) )
            {
                note( principal_witness, "pre_principal", "member is not the focus of any configuration", m.str() );
                break;
            }
    }

    // Literal conditions.
    out.covers = collection.cover() == config_set::full( n );
    out.intersections_are_unions = true;
    std::string intersection_detail;
    for ( std::size_t a = 0; a < members.size() && out.intersections_are_unions; ++a )
        for ( std::size_t b = a + 1; b < members.size(); ++b )
        {
            const auto meet = intersect( members[ a ], members[ b ] );
            if ( meet && union_inside( collection, *meet, false ) != meet->member_set() )
            {
                out.intersections_are_unions = false;
                intersection_detail = members[ a ].str() + " & " + members[ b ].str();
                break;
            }
        }
    out.no_member_is_union_of_others = true;
    std::string union_detail;
    for ( const auto& m : members )
        if ( union_inside( collection, m, true ) == m.member_set() )
        {
            out.no_member_is_union_of_others = false;
            union_detail = m.str();
            break;
        }
    if ( !out.covers )
        note( principal_witness, "pre_principal", "members do not cover B^n", "" );
    if ( !out.intersections_are_unions )
        note( principal_witness, "pre_principal", "intersection is not a union of members", intersection_detail );
    if ( !out.no_member_is_union_of_others )
        note( principal_witness, "pre_principal", "member is a union of other members", union_detail );

    // Pre-ideal.
    out.pre_ideal = true;
    if ( !collection.contains( subcube::full( n ) ) )
    {
        out.pre_ideal = false;
        note( ideal_witness, "pre_ideal", "B^n is not a member", subcube::full( n ).str() );
    }
    for ( std::size_t a = 0; a < members.size() && out.pre_ideal; ++a )
        for ( std::size_t b = a + 1; b < members.size(); ++b )
        {
            const auto meet = intersect( members[ a ], members[ b ] );
            if ( meet && !collection.contains( *meet ) )
            {
                out.pre_ideal = false;
                note( ideal_witness, "pre_ideal", "nonempty intersection is not a member",
                      members[ a ].str() + " & " + members[ b ].str() );
                break;
            }
        }
    if ( out.pre_ideal )
    {
        // A subcube R is a union of members iff the members inside R cover it.
        for ( state_t fixed = 0; fixed < state_count( n ) && out.pre_ideal; ++fixed )
        {
            state_t values = 0;
            do
            {
                const subcube r{ n, fixed, values };
                if ( !collection.contains( r ) && union_inside( collection, r, false ) == r.member_set() )
                {
                    out.pre_ideal = false;
                    note( ideal_witness, "pre_ideal", "union of members is a subcube but not a member", r.str() );
                    break;
                }
                values = ( values - fixed ) & fixed;
            } while ( values != 0 );
        }
    }

    // Min-ideal.
    out.min_ideal = !members.empty();
    if ( members.empty() )
        note( min_witness, "min_ideal", "collection is empty", "" );
    for ( std::size_t a = 0; a < members.size() && out.min_ideal; ++a )
        for ( std::size_t b = a + 1; b < members.size(); ++b )
            if ( intersect( members[ a ], members[ b ] ) )
            {
                out.min_ideal = false;
                note( min_witness, "min_ideal", "members intersect", members[ a ].str() + " & " + members[ b ].str() );
                break;
            }

    out.witness = principal_witness ? principal_witness : ideal_witness ? ideal_witness : min_witness;
    return out;
}

} // namespace bnmm
