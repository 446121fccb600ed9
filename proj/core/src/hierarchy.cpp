#include "bnmm/hierarchy.hpp"
#include "bnmm/trapspace.hpp"

#include <algorithm>

namespace bnmm
{

bool hierarchy_report::is_excluded( mode m ) const
{
    return std::find( excluded.begin(), excluded.end(), m ) != excluded.end();
}

namespace
{

std::string pair_label( mode mu, mode nu, const char* op )
{
    return std::string( mode_short_name( mu ) ) + " " + op + " " + std::string( mode_short_name( nu ) );
}

} // namespace

hierarchy_report check_hierarchy( const boolean_network& f, const std::string& id, const reach_caps& caps )
{
    const int n = f.dimension();
    const auto count = state_count( n );
    hierarchy_report report;
    report.id = id;
    report.n = n;
    report.sizes.assign( count, {} );

    std::array<std::vector<config_set>, mode_count> rows;
    for ( auto m : all_modes )
    {
        if ( n > caps.cap( m ) )
        {
            report.excluded.push_back( m );
            continue;
        }
        auto& r = rows[ mode_index( m ) ];
        r.reserve( count );
        for ( state_t x = 0; x < count; ++x )
        {
            r.push_back( reach_set( f, m, x, caps ) );
            report.sizes[ x ][ mode_index( m ) ] = r.back().size();
        }
    }

    for ( auto mu : all_modes )
        for ( auto nu : all_modes )
        {
            auto& cell = report.contained[ mode_index( mu ) ][ mode_index( nu ) ];
            if ( report.is_excluded( mu ) || report.is_excluded( nu ) )
                continue;
            cell = true;
            const auto& a = rows[ mode_index( mu ) ];
            const auto& b = rows[ mode_index( nu ) ];
            for ( state_t x = 0; x < count && cell; ++x )
            {
                const auto extra = a[ x ].minus( b[ x ] );
                if ( !extra.empty() )
                {
                    cell = false;
                    report.witnesses.push_back( { mu, nu, x, extra.states().front() } );
                }
            }
        }

    for ( auto [ mu, nu ] : hierarchy_containments )
    {
        if ( report.is_excluded( mu ) || report.is_excluded( nu ) )
            continue;
        if ( report.contained[ mode_index( mu ) ][ mode_index( nu ) ] )
            continue;
        for ( const auto& w : report.witnesses )
            if ( w.mu == mu && w.nu == nu )
                report.violations.push_back( { pair_label( mu, nu, "<=" ), w.source, w.target } );
    }
    // S* ⊆ T* closes the equality; T* must also be the members of T_f(x).
    for ( auto m : { mode::trapping, mode::subcube_based } )
    {
        if ( report.is_excluded( m ) )
            continue;
        const auto& r = rows[ mode_index( m ) ];
        for ( state_t x = 0; x < count; ++x )
        {
            const auto t = principal_trapspace( f, x ).member_set();
            if ( r[ x ] == t )
                continue;
            auto diff = r[ x ].minus( t );
            diff |= t.minus( r[ x ] );
            report.violations.push_back( { std::string( mode_short_name( m ) ) + " = T_f", x, diff.states().front() } );
            break;
        }
    }
    if ( !report.is_excluded( mode::trapping ) && !report.is_excluded( mode::subcube_based ) &&
         !report.contained[ mode_index( mode::subcube_based ) ][ mode_index( mode::trapping ) ] )
        for ( const auto& w : report.witnesses )
            if ( w.mu == mode::subcube_based && w.nu == mode::trapping )
                report.violations.push_back( { pair_label( w.mu, w.nu, "<=" ), w.source, w.target } );
    return report;
}

equivalence_result min_trapspace_equivalence( const boolean_network& f, mode mu, mode nu, const reach_caps& caps )
{
    const int n = f.dimension();
    const auto targets = min_trapspace_configs( f );
    equivalence_result result;
    if ( mu == nu )
    {
        // Still enforce the cap so both arguments behave alike.
        if ( n > caps.cap( mu ) )
            (void)reach_set( f, mu, state_t{ 0 }, caps );
        return result;
    }
    for ( state_t x = 0; x < state_count( n ); ++x )
    {
        auto a = reach_set( f, mu, x, caps );
        auto b = reach_set( f, nu, x, caps );
        a &= targets;
        b &= targets;
        if ( a == b )
            continue;
        const auto only_a = a.minus( b );
        const auto only_b = b.minus( a );
        const state_t ya = only_a.empty() ? ~state_t{ 0 } : only_a.states().front();
        const state_t yb = only_b.empty() ? ~state_t{ 0 } : only_b.states().front();
        result.equivalent = false;
        result.witness = equivalence_witness{ x, std::min( ya, yb ), ya < yb };
        return result;
    }
    return result;
}

} // namespace bnmm
