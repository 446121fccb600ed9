#include "bnmm/trajectory.hpp"
#include "bnmm/errors.hpp"
#include "bnmm/subcube.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace bnmm
{

namespace
{

state_t next_configuration( const boolean_network& f, const step& w )
{
    const auto bit = coordinate_bit( f.dimension(), w.i );
    return ( f.image( w.s ) & bit ) | ( w.t & ~bit );
}

bool in_history( const std::vector<state_t>& xs, state_t y )
{
    return std::find( xs.begin(), xs.end(), y ) != xs.end();
}

subcube history_hull( int n, const std::vector<state_t>& xs )
{
    return principal_subcube( n, xs );
}

std::string vector_str( const std::vector<unsigned>& v )
{
    std::string s = "[";
    for ( std::size_t k = 0; k < v.size(); ++k )
        s += ( k ? "," : "" ) + std::to_string( v[ k ] );
    return s + "]";
}

// Checks the reads of one step against a vector of timestamps.
std::optional<std::string> check_reads( int n, const std::vector<state_t>& xs, const std::vector<unsigned>& stamps,
                                        state_t s )
{
    for ( int j = 0; j < n; ++j )
    {
        const auto b = stamps[ static_cast<std::size_t>( j ) ];
        const auto bit = coordinate_bit( n, j );
        if ( ( xs[ b ] & bit ) != ( s & bit ) )
            return "s_" + std::to_string( j + 1 ) + " differs from x^" + std::to_string( b ) + "_" +
                   std::to_string( j + 1 );
    }
    return std::nullopt;
}

} // namespace

std::vector<state_t> derived_configurations( const boolean_network& f, const trajectory& traj )
{
    std::vector<state_t> xs{ traj.start };
    for ( const auto& w : traj.steps )
        xs.push_back( next_configuration( f, w ) );
    return xs;
}

validation_result validate_trajectory( const boolean_network& f, mode m, const trajectory& traj,
                                       const mode_witness& witness )
{
    const int n = f.dimension();
    if ( traj.n != n )
        throw dimension_error( "trajectory of dimension " + std::to_string( traj.n ) + " for network of dimension " +
                               std::to_string( n ) );
    const bool wants_v = m == mode::interval;
    const bool wants_c = m == mode::cuttable;
    if ( wants_v != std::holds_alternative<interval_witness>( witness ) ||
         wants_c != std::holds_alternative<cuttable_witness>( witness ) )
        throw invalid_argument( std::string( "mode " ) + std::string( mode_name( m ) ) +
                                ( wants_v   ? " needs a V witness"
                                  : wants_c ? " needs a C witness"
                                            : " takes no witness" ) );
    const auto l = traj.steps.size();
    if ( const auto* v = std::get_if<interval_witness>( &witness ); v && v->v.size() != l )
        throw invalid_argument( "V witness needs one vector per step" );
    if ( const auto* c = std::get_if<cuttable_witness>( &witness ); c && c->c.size() != l )
        throw invalid_argument( "C witness needs one matrix per step" );
    if ( traj.claimed && traj.claimed->size() != l )
        throw invalid_argument( "claimed configurations need one entry per step" );

    validation_result result;
    auto& xs = result.configurations;
    xs.push_back( traj.start );
    auto fail = [ & ]( std::size_t a, std::string constraint, std::string detail ) {
        result.violation = trajectory_violation{ a, std::move( constraint ), std::move( detail ) };
        return result;
    };
    if ( ( traj.start & ~full_mask( n ) ) != 0 )
        return fail( 0, "start", "start configuration exceeds the dimension" );

    std::vector<unsigned> previous_v( static_cast<std::size_t>( n ), 0 );
    std::vector<std::vector<unsigned>> previous_c( static_cast<std::size_t>( n ), previous_v );

    for ( std::size_t a = 1; a <= l; ++a )
    {
        const auto& w = traj.steps[ a - 1 ];
        const auto last = xs.back();
        const auto stamp_max = static_cast<unsigned>( a - 1 );
        if ( w.i < 0 || w.i >= n )
            return fail( a, "coordinate", "i = " + std::to_string( w.i + 1 ) + " out of range" );
        if ( ( ( w.s | w.t ) & ~full_mask( n ) ) != 0 )
            return fail( a, "dimension", "source or target exceeds the dimension" );
        const auto s_str = bits_to_string( n, w.s );
        const auto t_str = bits_to_string( n, w.t );
        switch ( m )
        {
            case mode::asynchronous:
                if ( w.s != last )
                    return fail( a, "source", "s = " + s_str + " differs from x^" + std::to_string( a - 1 ) + " = " +
                                                  bits_to_string( n, last ) );
                break;
            case mode::history:
            case mode::trapping:
                if ( !in_history( xs, w.s ) )
                    return fail( a, "source", "s = " + s_str + " was not visited" );
                break;
            case mode::most_permissive:
            case mode::subcube_based:
                if ( !history_hull( n, xs ).contains( w.s ) )
                    return fail( a, "source", "s = " + s_str + " is outside the visited subcube" );
                break;
            case mode::interval:
            {
                const auto& v = std::get<interval_witness>( witness ).v[ a - 1 ];
                if ( v.size() != static_cast<std::size_t>( n ) )
                    return fail( a, "witness", "V has " + std::to_string( v.size() ) + " entries" );
                for ( int j = 0; j < n; ++j )
                {
                    const auto vj = v[ static_cast<std::size_t>( j ) ];
                    if ( vj < previous_v[ static_cast<std::size_t>( j ) ] )
                        return fail( a, "witness", "V decreases at component " + std::to_string( j + 1 ) );
                    if ( vj > stamp_max )
                        return fail( a, "witness", "V = " + vector_str( v ) + " exceeds a-1" );
                }
                if ( v[ static_cast<std::size_t>( w.i ) ] != stamp_max )
                    return fail( a, "witness", "V_i must equal a-1" );
                if ( auto bad = check_reads( n, xs, v, w.s ) )
                    return fail( a, "source", *bad );
                previous_v = v;
                break;
            }
            case mode::cuttable:
            {
                const auto& c = std::get<cuttable_witness>( witness ).c[ a - 1 ];
                if ( c.size() != static_cast<std::size_t>( n ) )
                    return fail( a, "witness", "C has " + std::to_string( c.size() ) + " rows" );
                for ( int r = 0; r < n; ++r )
                {
                    const auto& row = c[ static_cast<std::size_t>( r ) ];
                    if ( row.size() != static_cast<std::size_t>( n ) )
                        return fail( a, "witness", "C row " + std::to_string( r + 1 ) + " has the wrong length" );
                    for ( int j = 0; j < n; ++j )
                    {
                        const auto cj = row[ static_cast<std::size_t>( j ) ];
                        if ( cj < previous_c[ static_cast<std::size_t>( r ) ][ static_cast<std::size_t>( j ) ] )
                            return fail( a, "witness",
                                         "C decreases at (" + std::to_string( r + 1 ) + "," + std::to_string( j + 1 ) + ")" );
                        if ( cj > stamp_max )
                            return fail( a, "witness",
                                         "C at (" + std::to_string( r + 1 ) + "," + std::to_string( j + 1 ) + ") exceeds a-1" );
                    }
                }
                if ( auto bad = check_reads( n, xs, c[ static_cast<std::size_t>( w.i ) ], w.s ) )
                    return fail( a, "source", *bad );
                previous_c = c;
                break;
            }
        }
        switch ( m )
        {
            case mode::trapping:
                if ( !in_history( xs, w.t ) )
                    return fail( a, "target", "t = " + t_str + " was not visited" );
                break;
            case mode::subcube_based:
                if ( !history_hull( n, xs ).contains( w.t ) )
                    return fail( a, "target", "t = " + t_str + " is outside the visited subcube" );
                break;
            default:
                if ( w.t != last )
                    return fail( a, "target", "t = " + t_str + " differs from x^" + std::to_string( a - 1 ) + " = " +
                                                  bits_to_string( n, last ) );
        }
        const auto x = next_configuration( f, w );
        if ( traj.claimed && ( *traj.claimed )[ a - 1 ] != x )
            return fail( a, "configuration", "claimed x^" + std::to_string( a ) + " = " +
                                                 bits_to_string( n, ( *traj.claimed )[ a - 1 ] ) + " but derived " +
                                                 bits_to_string( n, x ) );
        xs.push_back( x );
    }
    return result;
}

trajectory compress_trajectory( const boolean_network& f, const trajectory& traj )
{
    trajectory out{ traj.n, traj.start, {}, std::nullopt };
    state_t last = traj.start;
    for ( const auto& w : traj.steps )
    {
        const auto x = next_configuration( f, w );
        if ( x != last )
            out.steps.push_back( w );
        last = x;
    }
    if ( traj.claimed )
    {
        auto xs = derived_configurations( f, out );
        out.claimed = std::vector<state_t>( xs.begin() + 1, xs.end() );
    }
    return out;
}

std::optional<mode_witness> find_witness( const boolean_network& f, mode m, const trajectory& traj )
{
    const int n = f.dimension();
    if ( m != mode::interval && m != mode::cuttable )
    {
        if ( validate_trajectory( f, m, traj ).ok() )
            return mode_witness{};
        return std::nullopt;
    }
    const auto xs = derived_configurations( f, traj );
    const auto nn = static_cast<std::size_t>( n );
    // Earliest b >= from with x^b_j = s_j, b <= a-1.
    auto earliest = [ & ]( std::size_t a, int j, unsigned from, state_t s ) -> std::optional<unsigned> {
        const auto bit = coordinate_bit( n, j );
        for ( auto b = from; b + 1 <= a; ++b )
            if ( ( xs[ b ] & bit ) == ( s & bit ) )
                return b;
        return std::nullopt;
    };

    if ( m == mode::interval )
    {
        interval_witness out;
        std::vector<unsigned> v( nn, 0 );
        for ( std::size_t a = 1; a <= traj.steps.size(); ++a )
        {
            const auto& w = traj.steps[ a - 1 ];
            if ( w.i < 0 || w.i >= n )
                return std::nullopt;
            for ( int j = 0; j < n; ++j )
            {
                const auto from = j == w.i ? static_cast<unsigned>( a - 1 ) : v[ static_cast<std::size_t>( j ) ];
                const auto b = earliest( a, j, from, w.s );
                if ( !b )
                    return std::nullopt;
                v[ static_cast<std::size_t>( j ) ] = *b;
            }
            out.v.push_back( v );
        }
        if ( !validate_trajectory( f, m, traj, out ).ok() )
            return std::nullopt;
        return out;
    }

    cuttable_witness out;
    std::vector<std::vector<unsigned>> c( nn, std::vector<unsigned>( nn, 0 ) );
    for ( std::size_t a = 1; a <= traj.steps.size(); ++a )
    {
        const auto& w = traj.steps[ a - 1 ];
        if ( w.i < 0 || w.i >= n )
            return std::nullopt;
        auto& row = c[ static_cast<std::size_t>( w.i ) ];
        for ( int j = 0; j < n; ++j )
        {
            const auto b = earliest( a, j, row[ static_cast<std::size_t>( j ) ], w.s );
            if ( !b )
                return std::nullopt;
            row[ static_cast<std::size_t>( j ) ] = *b;
        }
        out.c.push_back( c );
    }
    if ( !validate_trajectory( f, m, traj, out ).ok() )
        return std::nullopt;
    return out;
}

nlohmann::json trajectory_to_json( const trajectory& traj, const mode_witness& witness )
{
    nlohmann::json record;
    record[ "schema" ] = "bnmm.trajectory.v1";
    record[ "start" ] = bits_to_string( traj.n, traj.start );
    auto steps = nlohmann::json::array();
    for ( const auto& w : traj.steps )
        steps.push_back( { { "i", w.i + 1 }, { "s", bits_to_string( traj.n, w.s ) }, { "t", bits_to_string( traj.n, w.t ) } } );
    record[ "steps" ] = std::move( steps );
    if ( const auto* v = std::get_if<interval_witness>( &witness ) )
        record[ "V" ] = v->v;
    if ( const auto* c = std::get_if<cuttable_witness>( &witness ) )
        record[ "C" ] = c->c;
    if ( traj.claimed )
    {
        auto configs = nlohmann::json::array();
        for ( auto x : *traj.claimed )
            configs.push_back( bits_to_string( traj.n, x ) );
        record[ "configs" ] = std::move( configs );
    }
    return record;
}

trajectory_record trajectory_from_json( const nlohmann::json& record )
{
    try
    {
        if ( !record.is_object() )
            throw invalid_argument( "trajectory record must be an object" );
        if ( record.contains( "schema" ) && record.at( "schema" ).get<std::string>() != "bnmm.trajectory.v1" )
            throw invalid_argument( "unsupported trajectory schema '" + record.at( "schema" ).get<std::string>() + "'" );
        trajectory_record out;
        const auto start = configuration::parse( record.at( "start" ).get<std::string>() );
        out.traj.n = start.dimension();
        out.traj.start = start.bits();
        auto bits = [ & ]( const nlohmann::json& j ) {
            const auto x = configuration::parse( j.get<std::string>() );
            if ( x.dimension() != out.traj.n )
                throw invalid_argument( "trajectory configuration '" + x.str() + "' has the wrong dimension" );
            return x.bits();
        };
        for ( const auto& w : record.at( "steps" ) )
        {
            const auto i = w.at( "i" ).get<int>();
            if ( i < 1 || i > out.traj.n )
                throw invalid_argument( "step coordinate " + std::to_string( i ) + " out of range" );
            out.traj.steps.push_back( { i - 1, bits( w.at( "s" ) ), bits( w.at( "t" ) ) } );
        }
        if ( record.contains( "V" ) && record.contains( "C" ) )
            throw invalid_argument( "trajectory record carries both V and C" );
        if ( record.contains( "V" ) )
            out.witness = interval_witness{ record.at( "V" ).get<std::vector<std::vector<unsigned>>>() };
        if ( record.contains( "C" ) )
            out.witness = cuttable_witness{ record.at( "C" ).get<std::vector<std::vector<std::vector<unsigned>>>>() };
        if ( record.contains( "configs" ) )
        {
            std::vector<state_t> claimed;
            for ( const auto& x : record.at( "configs" ) )
                claimed.push_back( bits( x ) );
            out.traj.claimed = std::move( claimed );
        }
        return out;
    }
    catch ( const nlohmann::json::exception& e )
    {
        throw invalid_argument( std::string( "malformed trajectory record: " ) + e.what() );
    }
}

} // namespace bnmm
