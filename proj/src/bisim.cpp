#include "hda/bisim.hpp"
#include "hda/labels.hpp"
#include "hda/unfolding.hpp"

#include <algorithm>

namespace hda {

namespace {

std::uint64_t key( CubeIndex x, CubeIndex y )
{
    return ( std::uint64_t{ x } << 32 ) | y;
}

} // namespace

PairRelation::PairRelation( std::vector<CubePair> pairs, std::vector<unsigned> ranks )
    : _pairs{ std::move( pairs ) }, _ranks{ std::move( ranks ) }
{
    _index.reserve( _pairs.size() );
    for( std::size_t i = 0; i < _pairs.size(); ++i )
        _index.emplace( key( _pairs[i].first, _pairs[i].second ), i );
}

std::optional<std::size_t> PairRelation::find( CubeIndex x, CubeIndex y ) const
{
    auto it = _index.find( key( x, y ) );
    if( it == _index.end() )
        return std::nullopt;
    return it->second;
}

bool PairRelation::contains( CubeIndex x, CubeIndex y ) const
{
    const auto i = find( x, y );
    return i && _ranks[*i] == 0;
}

std::optional<unsigned> PairRelation::rank_of( CubeIndex x, CubeIndex y ) const
{
    const auto i = find( x, y );
    if( !i )
        return std::nullopt;
    return _ranks[*i];
}

std::vector<CubePair> PairRelation::survivors() const
{
    std::vector<CubePair> out;
    for( std::size_t i = 0; i < _pairs.size(); ++i )
        if( _ranks[i] == 0 )
            out.push_back( _pairs[i] );
    return out;
}

std::vector<CubePair> candidate_pairs( const Hda& x, const Hda& y, bool labeled )
{
    if( labeled && ( !x.labeled() || !y.labeled() ) )
        throw InputError( "labeled comparison needs a labeling on both HDA" );
    const PrecubicalSet& p = x.cubes;
    const PrecubicalSet& q = y.cubes;
    std::vector<CubePair> out;
    const unsigned top = std::min( p.empty() ? 0 : p.max_dim(), q.empty() ? 0 : q.max_dim() );
    for( unsigned n = 0; n <= top; ++n )
    {
        const auto ys = q.cubes_of_dim( n );
        for( CubeIndex a : p.cubes_of_dim( n ) )
            for( CubeIndex b : ys )
                if( !labeled || ( *x.labeling )[a] == ( *y.labeling )[b] )
                    out.emplace_back( a, b );
    }
    std::sort( out.begin(), out.end() );
    return out;
}

BisimResult hd_bisim( const Hda& x, const Hda& y, bool labeled )
{
    const PrecubicalSet& p = x.cubes;
    const PrecubicalSet& q = y.cubes;
    PairRelation shape( candidate_pairs( x, y, labeled ), {} );
    const auto& pairs = shape.pairs();
    const std::size_t n = pairs.size();

    std::vector<bool> alive( n, true );
    std::vector<unsigned> rank( n, 0 );
    std::vector<std::optional<Move>> strategy( n );

    auto alive_pair = [&]( CubeIndex a, CubeIndex b ) {
        const auto i = shape.find( a, b );
        return i && alive[*i];
    };
    // A violating move at a pair, judged against `alive`.
    auto violation = [&]( CubeIndex a, CubeIndex b ) -> std::optional<Move> {
        for( unsigned k = 1; k <= p.dim( a ); ++k )
            for( Sign nu : { Sign::lower, Sign::upper } )
                if( !alive_pair( p.face( a, k, nu ), q.face( b, k, nu ) ) )
                    return Move::retreat( k, nu );
        for( const Coface& cf : p.cofaces( a ) )
        {
            if( cf.sign != Sign::lower )
                continue;
            const bool answered = std::any_of( q.cofaces( b ).begin(), q.cofaces( b ).end(), [&]( const Coface& d ) {
                return d.sign == Sign::lower && d.k == cf.k && alive_pair( cf.parent, d.parent );
            } );
            if( !answered )
                return Move::extend( Side::A, cf.k, cf.parent );
        }
        for( const Coface& d : q.cofaces( b ) )
        {
            if( d.sign != Sign::lower )
                continue;
            const bool answered = std::any_of( p.cofaces( a ).begin(), p.cofaces( a ).end(), [&]( const Coface& cf ) {
                return cf.sign == Sign::lower && cf.k == d.k && alive_pair( cf.parent, d.parent );
            } );
            if( !answered )
                return Move::extend( Side::B, d.k, d.parent );
        }
        return std::nullopt;
    };

    unsigned round = 0;
    for( ;; )
    {
        std::vector<std::size_t> doomed;
        for( std::size_t i = 0; i < n; ++i )
            if( alive[i] )
                if( auto m = violation( pairs[i].first, pairs[i].second ) )
                {
                    doomed.push_back( i );
                    strategy[i] = m;
                }
        if( doomed.empty() )
            break;
        ++round;
        for( std::size_t i : doomed )
        {
            alive[i] = false;
            rank[i] = round;
        }
    }

    BisimResult out;
    out.relation = PairRelation( pairs, std::move( rank ) );
    out.strategy = std::move( strategy );
    out.rounds = round;
    out.bisimilar = out.relation.contains( x.initial, y.initial );
    return out;
}

bool is_open( const Morphism& f, const Hda& x, const Hda& y )
{
    if( auto problems = validate_morphism( f, x, y, true ); !problems.empty() )
        throw InputError( "not a pointed morphism: " + problems.front() );
    const PrecubicalSet& p = x.cubes;
    const PrecubicalSet& q = y.cubes;
    const auto reach = reachable( x );
    for( CubeIndex x1 = 0; x1 < p.size(); ++x1 )
    {
        if( !reach[x1] )
            continue;
        for( const Coface& d : q.cofaces( f( x1 ) ) )
        {
            if( d.sign != Sign::lower )
                continue;
            const bool lifted = std::any_of( p.cofaces( x1 ).begin(), p.cofaces( x1 ).end(), [&]( const Coface& cf ) {
                return cf.sign == Sign::lower && cf.k == d.k && f( cf.parent ) == d.parent;
            } );
            if( !lifted )
                return false;
        }
    }
    return true;
}

std::optional<CubeSeq> lift_path( const Morphism& f, const Hda& x, const Hda& y, CubeIndex x1, const CubePath& path )
{
    const PrecubicalSet& p = x.cubes;
    const PrecubicalSet& q = y.cubes;
    if( f( x1 ) != path.front() )
        throw InputError( "path does not start at the image of the given cube" );
    CubeSeq out{ x1 };
    for( std::size_t j = 0; j + 1 < path.length(); ++j )
    {
        const CubeIndex cur = out.back();
        const CubeIndex next = path.cubes()[j + 1];
        std::optional<CubeIndex> lifted;
        if( q.dim( next ) > q.dim( path.cubes()[j] ) )
        {
            // Entering: any k that realises the step in y must be matched.
            for( const Coface& cf : p.cofaces( cur ) )
                if( cf.sign == Sign::lower && f( cf.parent ) == next && q.face( next, cf.k, Sign::lower ) == path.cubes()[j] )
                {
                    lifted = cf.parent;
                    break;
                }
        }
        else
        {
            for( unsigned k = 1; k <= p.dim( cur ); ++k )
                if( f( p.face( cur, k, Sign::upper ) ) == next &&
                    q.face( path.cubes()[j], k, Sign::upper ) == next )
                {
                    lifted = p.face( cur, k, Sign::upper );
                    break;
                }
        }
        if( !lifted )
            return std::nullopt;
        out.push_back( *lifted );
    }
    return out;
}

Span witness_span( const BisimResult& r, const Hda& x, const Hda& y )
{
    if( !r.bisimilar )
        throw InputError( "no witness: the HDA are not bisimilar" );
    const PrecubicalSet& p = x.cubes;
    const PrecubicalSet& q = y.cubes;
    std::vector<CubeRecord> records;
    for( const auto& [a, b] : r.relation.survivors() )
    {
        CubeRecord rec{ pair_id( p.id( a ), q.id( b ) ), p.dim( a ), {}, {} };
        for( unsigned k = 1; k <= p.dim( a ); ++k )
        {
            rec.lower.push_back( pair_id( p.id( p.face( a, k, Sign::lower ) ), q.id( q.face( b, k, Sign::lower ) ) ) );
            rec.upper.push_back( pair_id( p.id( p.face( a, k, Sign::upper ) ), q.id( q.face( b, k, Sign::upper ) ) ) );
        }
        records.push_back( std::move( rec ) );
    }
    Span out;
    out.hda = Hda::make( PrecubicalSet::build( std::move( records ) ), pair_id( p.id( x.initial ), q.id( y.initial ) ) );
    const auto survivors = r.relation.survivors();
    std::unordered_map<std::string, CubePair> by_id;
    for( const auto& [a, b] : survivors )
        by_id.emplace( pair_id( p.id( a ), q.id( b ) ), CubePair{ a, b } );
    const PrecubicalSet& s = out.hda.cubes;
    out.left.map.resize( s.size() );
    out.right.map.resize( s.size() );
    for( CubeIndex c = 0; c < s.size(); ++c )
    {
        const CubePair& ab = by_id.at( s.id( c ) );
        out.left.map[c] = ab.first;
        out.right.map[c] = ab.second;
    }
    return out;
}

bool homotopy_bisim_check( const Hda& x, const Hda& y, unsigned depth, bool labeled )
{
    const CompletePart a = complete_part( unfold( x, depth ) );
    const CompletePart b = complete_part( unfold( y, depth ) );
    return hd_bisim( a.hda, b.hda, labeled ).bisimilar;
}

} // namespace hda
