#include "bnmm/report.hpp"

namespace bnmm
{

using nlohmann::json;

json profile_to_json( const network_profile& p )
{
    return json{ { "commutative", p.commutative },
                 { "trapping", p.trapping },
                 { "min_trapping", p.min_trapping },
                 { "locally_bijective", p.locally_bijective },
                 { "globally_bijective", p.globally_bijective },
                 { "negation_on_subcubes", p.negation_on_subcubes },
                 { "increasing", p.increasing },
                 { "idempotent", p.idempotent },
                 { "dynamically_local", p.dynamically_local },
                 { "bijective", p.bijective },
                 { "acyclic_interaction", p.acyclic_interaction },
                 { "transient", p.transient },
                 { "period", p.period } };
}

json hierarchy_to_json( const hierarchy_report& r )
{
    json excluded = json::array();
    for ( auto m : r.excluded )
        excluded.push_back( mode_short_name( m ) );

    // contained[mu] lists every nu with mu* ⊆ nu*.
    json contained = json::object();
    for ( auto mu : all_modes )
    {
        if ( r.is_excluded( mu ) )
            continue;
        json row = json::array();
        for ( auto nu : all_modes )
            if ( r.contained[ mode_index( mu ) ][ mode_index( nu ) ] )
                row.push_back( mode_short_name( nu ) );
        contained[ std::string( mode_short_name( mu ) ) ] = row;
    }

    json witnesses = json::array();
    for ( const auto& w : r.witnesses )
        witnesses.push_back( { { "mu", mode_short_name( w.mu ) },
                               { "nu", mode_short_name( w.nu ) },
                               { "source", bits_to_string( r.n, w.source ) },
                               { "target", bits_to_string( r.n, w.target ) } } );

    json violations = json::array();
    for ( const auto& v : r.violations )
        violations.push_back( { { "containment", v.containment },
                                { "source", bits_to_string( r.n, v.source ) },
                                { "target", bits_to_string( r.n, v.target ) } } );

    return json{ { "excluded", excluded },
                 { "contained", contained },
                 { "witnesses", witnesses },
                 { "violations", violations } };
}

json config_set_to_json( const config_set& s )
{
    json out = json::array();
    s.for_each( [ & ]( state_t x ) { out.push_back( bits_to_string( s.dimension(), x ) ); } );
    return out;
}

json collection_to_json( const subcube_collection& c )
{
    json out = json::array();
    for ( const auto& x : c.members() )
        out.push_back( x.str() );
    return out;
}

json network_record( const boolean_network& f, const hierarchy_report& r, std::optional<std::uint64_t> seed )
{
    const int n = f.dimension();
    json table = json::array();
    for ( auto y : f.images() )
        table.push_back( bits_to_string( n, y ) );
    json record{ { "schema", report_schema }, { "id", r.id } };
    if ( seed )
        record[ "seed" ] = *seed;
    record[ "n" ] = n;
    record[ "table" ] = table;
    if ( n <= default_profile_cap )
        record[ "profile" ] = profile_to_json( classify_network( f ) );
    record[ "hierarchy" ] = hierarchy_to_json( r );
    return record;
}

std::string summary_line( const hierarchy_report& r )
{
    std::string strict;
    for ( const auto& w : r.witnesses )
    {
        // Only report pairs the hierarchy orders the other way round.
        if ( !r.contained[ mode_index( w.nu ) ][ mode_index( w.mu ) ] )
            continue;
        if ( !strict.empty() )
            strict += ',';
        strict += std::string( mode_short_name( w.nu ) ) + "<" + std::string( mode_short_name( w.mu ) );
    }
    std::string excluded;
    for ( auto m : r.excluded )
    {
        if ( !excluded.empty() )
            excluded += ',';
        excluded += mode_short_name( m );
    }
    auto line = r.id + " n=" + std::to_string( r.n ) + " violations=" + std::to_string( r.violations.size() ) +
                " strict=" + ( strict.empty() ? "-" : strict );
    return line + " excluded=" + ( excluded.empty() ? "-" : excluded );
}

} // namespace bnmm
