#include "bnmm/update.hpp"
#include "bnmm/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bnmm
{

configuration apply_update( const boolean_network& f, const std::vector<std::vector<int>>& blocks,
                            const configuration& x )
{
    if ( x.dimension() != f.dimension() )
        throw dimension_error( "configuration and network dimensions differ" );
    std::vector<state_t> masks;
    masks.reserve( blocks.size() );
    for ( const auto& b : blocks )
        masks.push_back( coordinate_mask( f.dimension(), b ) );
    return { f.dimension(), apply_update( f, masks, x.bits() ) };
}

state_t apply_update( const boolean_network& f, const std::vector<state_t>& blocks, state_t x )
{
    for ( auto b : blocks )
    {
        if ( ( b & ~full_mask( f.dimension() ) ) != 0 )
            throw invalid_argument( "update block has coordinates outside the network" );
        x = update_block( f, b, x );
    }
    return x;
}

interaction_graph::interaction_graph( int n, std::vector<std::pair<int, int>> edges ) : _n{ n }, _edges{ std::move( edges ) }
{
    std::sort( _edges.begin(), _edges.end() );
    _edges.erase( std::unique( _edges.begin(), _edges.end() ), _edges.end() );
}

bool interaction_graph::has_edge( int i, int j ) const
{
    return std::binary_search( _edges.begin(), _edges.end(), std::pair{ i, j } );
}

bool interaction_graph::acyclic() const
{
    // Kahn's algorithm.
    std::vector<int> indegree( static_cast<std::size_t>( _n ), 0 );
    for ( const auto& [ i, j ] : _edges )
        ++indegree[ static_cast<std::size_t>( j ) ];
    std::vector<int> ready;
    for ( int v = 0; v < _n; ++v )
        if ( indegree[ static_cast<std::size_t>( v ) ] == 0 )
            ready.push_back( v );
    int removed = 0;
    while ( !ready.empty() )
    {
        const int v = ready.back();
        ready.pop_back();
        ++removed;
        for ( const auto& [ i, j ] : _edges )
            if ( i == v && --indegree[ static_cast<std::size_t>( j ) ] == 0 )
                ready.push_back( j );
    }
    return removed == _n;
}

interaction_graph build_interaction_graph( const boolean_network& f )
{
    const int n = f.dimension();
    std::vector<std::pair<int, int>> edges;
    for ( int i = 0; i < n; ++i )
    {
        const auto bit = coordinate_bit( n, i );
        state_t depends = 0; // coordinates j with f_j sensitive to x_i
        for ( state_t x = 0; x < state_count( n ); ++x )
            depends |= f.image( x ) ^ f.image( x ^ bit );
        for ( int j = 0; j < n; ++j )
            if ( depends & coordinate_bit( n, j ) )
                edges.emplace_back( i, j );
    }
    return { n, std::move( edges ) };
}

transient_period transient_and_period( const boolean_network& f )
{
    const auto count = state_count( f.dimension() );
    // Every orbit of a functional graph is a tail followed by a cycle; walk
    // each orbit once, recording the step at which a state is first seen.
    std::vector<unsigned> tail( count, 0 );
    std::vector<unsigned> cycle( count, 0 );
    std::vector<bool> done( count, false );
    std::vector<std::size_t> seen_at( count, 0 );
    std::vector<std::size_t> mark( count, 0 );
    std::size_t walk = 0;

    unsigned transient = 0;
    unsigned long long period = 1;
    for ( state_t start = 0; start < count; ++start )
    {
        if ( done[ start ] )
            continue;
        ++walk;
        std::vector<state_t> path;
        state_t x = start;
        while ( !done[ x ] && mark[ x ] != walk )
        {
            mark[ x ] = walk;
            seen_at[ x ] = path.size();
            path.push_back( x );
            x = f.image( x );
        }
        std::size_t resolved = path.size();
        if ( !done[ x ] )
        {
            // New cycle, made of path[seen_at[x]..].
            const auto first = seen_at[ x ];
            const auto length = static_cast<unsigned>( path.size() - first );
            for ( std::size_t k = first; k < path.size(); ++k )
            {
                tail[ path[ k ] ] = 0;
                cycle[ path[ k ] ] = length;
                done[ path[ k ] ] = true;
            }
            resolved = first;
        }
        for ( std::size_t k = resolved; k-- > 0; )
        {
            const auto y = path[ k ];
            const auto next = f.image( y );
            tail[ y ] = tail[ next ] + 1;
            cycle[ y ] = cycle[ next ];
            done[ y ] = true;
        }
    }
    for ( state_t x = 0; x < count; ++x )
    {
        transient = std::max( transient, tail[ x ] );
        period = std::lcm( period, static_cast<unsigned long long>( cycle[ x ] ) );
    }
    return { transient, static_cast<unsigned>( period ) };
}

} // namespace bnmm
