#include "hda/unfolding.hpp"
#include "hda/labels.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hda {

namespace {

std::string node_id( const PrecubicalSet& p, const CubeSeq& s )
{
    std::string out = "[";
    for( std::size_t j = 0; j < s.size(); ++j )
    {
        if( j > 0 )
            out += ',';
        out += p.id( s[j] );
    }
    return out + "]";
}

CubeSeq image( const Morphism& f, const CubeSeq& s )
{
    CubeSeq out;
    out.reserve( s.size() );
    for( CubeIndex c : s )
        out.push_back( f( c ) );
    return out;
}

} // namespace

std::optional<CubeIndex> TruncatedUnfolding::node_of( const CubeSeq& s ) const
{
    auto it = _member_of.find( s );
    if( it == _member_of.end() )
        return std::nullopt;
    return it->second;
}

std::vector<bool> TruncatedUnfolding::complete() const
{
    std::vector<bool> out( _nodes.size() );
    for( std::size_t n = 0; n < _nodes.size(); ++n )
        out[n] = !_nodes[n].truncated;
    return out;
}

bool TruncatedUnfolding::fully_complete() const
{
    return std::none_of( _nodes.begin(), _nodes.end(), []( const UnfoldingNode& n ) { return n.truncated; } );
}

TruncatedUnfolding unfold( const Hda& h, unsigned depth )
{
    if( depth == 0 )
        throw InputError( "unfolding depth must be at least 1" );
    const PrecubicalSet& p = h.cubes;
    const std::size_t bound = default_class_bound();

    // Classes in discovery order; every class of length m+1 is the class of
    // some representative of length m extended by one step.
    std::vector<std::vector<CubeSeq>> classes;
    std::unordered_map<CubeSeq, std::size_t, CubeSeqHash> member_of;
    std::size_t total = 0;
    auto add_class = [&]( const CubeSeq& s ) {
        auto members = class_members( p, s, bound );
        total += members.size();
        if( total > bound )
            throw ResourceError( "unfolding exceeds " + std::to_string( bound ) + " class members" );
        for( const auto& m : members )
            member_of.emplace( m, classes.size() );
        classes.push_back( std::move( members ) );
    };

    if( 1 + p.dim( h.initial ) <= depth )
        add_class( { h.initial } );
    for( std::size_t n = 0; n < classes.size(); ++n )
    {
        const CubeSeq rep = classes[n].front();
        for_each_step( p, rep.back(), [&]( CubeIndex y ) {
            if( rep.size() + 1 + p.dim( y ) > depth )
                return;
            CubeSeq s = rep;
            s.push_back( y );
            if( !member_of.contains( s ) )
                add_class( s );
        } );
    }

    std::vector<CubeRecord> records( classes.size() );
    for( std::size_t n = 0; n < classes.size(); ++n )
    {
        const CubeSeq& rep = classes[n].front();
        const CubeIndex last = rep.back();
        const unsigned d = p.dim( last );
        CubeRecord& r = records[n];
        r.id = node_id( p, rep );
        r.dim = d;
        for( unsigned k = 1; k <= d; ++k )
        {
            CubeSeq up = rep;
            up.push_back( p.face( last, k, Sign::upper ) );
            r.upper.push_back( node_id( p, classes[member_of.at( up )].front() ) );

            // δ̃_k^0: members whose last step enters through δ_k^0, cut short.
            std::set<std::size_t> lower;
            for( const CubeSeq& m : classes[n] )
                if( m.size() >= 2 && m[m.size() - 2] == p.face( last, k, Sign::lower ) )
                    lower.insert( member_of.at( CubeSeq( m.begin(), m.end() - 1 ) ) );
            if( lower.size() != 1 )
                throw std::logic_error( "lower face " + std::to_string( k ) + " of class " + r.id + " spans " +
                                        std::to_string( lower.size() ) + " classes" );
            r.lower.push_back( node_id( p, classes[*lower.begin()].front() ) );
        }
    }
    const std::string initial_id = records.empty() ? std::string{} : records.front().id;

    TruncatedUnfolding u;
    u._depth = depth;
    u._base = h;
    std::vector<std::string> ids;
    ids.reserve( records.size() );
    for( const auto& r : records )
        ids.push_back( r.id );
    PrecubicalSet set = PrecubicalSet::build( std::move( records ) );
    if( classes.empty() )
    {
        u._hda.cubes = std::move( set );
        return u;
    }
    u._hda = Hda::make( std::move( set ), initial_id );
    const PrecubicalSet& q = u._hda.cubes;

    // Re-index classes in node order.
    std::vector<CubeIndex> node_of_class( classes.size() );
    for( std::size_t n = 0; n < classes.size(); ++n )
        node_of_class[n] = q.index_of( ids[n] );
    u._nodes.resize( classes.size() );
    u._members.resize( classes.size() );
    u._projection.map.resize( classes.size() );
    for( std::size_t n = 0; n < classes.size(); ++n )
    {
        const CubeIndex c = node_of_class[n];
        u._nodes[c] = UnfoldingNode{ classes[n].front(), p.dim( classes[n].front().back() ), false };
        u._projection.map[c] = classes[n].front().back();
        u._members[c] = std::move( classes[n] );
    }
    for( auto& [s, n] : member_of )
        u._member_of.emplace( s, node_of_class[n] );

    if( h.labeled() )
    {
        std::vector<LabelWord> words( q.size() );
        for( CubeIndex c = 0; c < q.size(); ++c )
            words[c] = ( *h.labeling )[u._projection( c )];
        u._hda.labeling = std::make_shared<const Labeling>( h.labeling->alphabet(), std::move( words ) );
    }

    // Greatest set closed under faces and under entering a cube.
    std::vector<bool> keep( q.size(), true );
    for( bool changed = true; changed; )
    {
        changed = false;
        for( CubeIndex c = 0; c < q.size(); ++c )
        {
            if( !keep[c] )
                continue;
            bool ok = true;
            for( unsigned k = 1; ok && k <= q.dim( c ); ++k )
                ok = keep[q.face( c, k, Sign::lower )] && keep[q.face( c, k, Sign::upper )];
            const CubeSeq& rep = u._nodes[c].representative;
            for( const Coface& cf : p.cofaces( rep.back() ) )
            {
                if( !ok )
                    break;
                if( cf.sign != Sign::lower )
                    continue;
                CubeSeq s = rep;
                s.push_back( cf.parent );
                const auto ext = u.node_of( s );
                ok = ext && keep[*ext];
            }
            if( !ok )
            {
                keep[c] = false;
                changed = true;
            }
        }
    }
    for( CubeIndex c = 0; c < q.size(); ++c )
        u._nodes[c].truncated = !keep[c];
    return u;
}

SubHda restrict_hda( const Hda& h, const std::vector<bool>& keep )
{
    const PrecubicalSet& p = h.cubes;
    if( keep.size() != p.size() || !keep[h.initial] )
        throw InputError( "restriction must keep the initial cube" );
    if( !is_precubical_subset( keep, p ) )
        throw InputError( "restriction is not closed under faces" );
    std::vector<CubeRecord> records;
    for( CubeIndex c = 0; c < p.size(); ++c )
        if( keep[c] )
        {
            CubeRecord r{ p.id( c ), p.dim( c ), {}, {} };
            for( unsigned k = 1; k <= p.dim( c ); ++k )
            {
                r.lower.push_back( p.id( p.face( c, k, Sign::lower ) ) );
                r.upper.push_back( p.id( p.face( c, k, Sign::upper ) ) );
            }
            records.push_back( std::move( r ) );
        }
    SubHda out;
    out.hda = Hda::make( PrecubicalSet::build( std::move( records ), Validation::deferred ), p.id( h.initial ) );
    const PrecubicalSet& q = out.hda.cubes;
    out.inclusion.resize( q.size() );
    for( CubeIndex c = 0; c < q.size(); ++c )
        out.inclusion[c] = p.index_of( q.id( c ) );
    if( h.labeled() )
    {
        std::vector<LabelWord> words( q.size() );
        for( CubeIndex c = 0; c < q.size(); ++c )
            words[c] = ( *h.labeling )[out.inclusion[c]];
        out.hda.labeling = std::make_shared<const Labeling>( h.labeling->alphabet(), std::move( words ) );
    }
    return out;
}

CompletePart complete_part( const TruncatedUnfolding& u )
{
    const auto keep = u.complete();
    if( keep.empty() || !keep[u.hda().initial] )
        throw PreconditionError( "unfolding of depth " + std::to_string( u.depth() ) +
                                 " has no complete part; the input is cyclic or the depth is too small" );
    SubHda sub = restrict_hda( u.hda(), keep );
    CompletePart out{ std::move( sub.hda ), {} };
    out.projection.map.reserve( sub.inclusion.size() );
    for( CubeIndex c : sub.inclusion )
        out.projection.map.push_back( u.projection()( c ) );
    return out;
}

bool is_acyclic( const Hda& h )
{
    const PrecubicalSet& p = h.cubes;
    enum : char { white, grey, black };
    std::vector<char> colour( p.size(), white );
    std::vector<std::pair<CubeIndex, std::vector<CubeIndex>>> stack;
    auto successors = [&]( CubeIndex c ) {
        std::vector<CubeIndex> out;
        for_each_step( p, c, [&]( CubeIndex y ) { out.push_back( y ); } );
        return out;
    };
    for( CubeIndex root = 0; root < p.size(); ++root )
    {
        if( colour[root] != white )
            continue;
        colour[root] = grey;
        stack.emplace_back( root, successors( root ) );
        while( !stack.empty() )
        {
            auto& [c, next] = stack.back();
            if( next.empty() )
            {
                colour[c] = black;
                stack.pop_back();
                continue;
            }
            const CubeIndex y = next.back();
            next.pop_back();
            if( colour[y] == grey )
                return false;
            if( colour[y] == white )
            {
                colour[y] = grey;
                stack.emplace_back( y, successors( y ) );
            }
        }
    }
    return true;
}

unsigned complete_depth( const Hda& h )
{
    if( !is_acyclic( h ) )
        throw PreconditionError( "cyclic HDA: pointed cube paths are unbounded" );
    const PrecubicalSet& p = h.cubes;
    // Longest pointed path (in cubes) to each reachable cube, by DFS
    // post-order on the step relation.
    std::vector<CubeIndex> order;
    std::vector<bool> seen( p.size(), false );
    std::vector<std::pair<CubeIndex, bool>> stack{ { h.initial, false } };
    while( !stack.empty() )
    {
        auto [c, done] = stack.back();
        stack.pop_back();
        if( done )
        {
            order.push_back( c );
            continue;
        }
        if( seen[c] )
            continue;
        seen[c] = true;
        stack.emplace_back( c, true );
        for_each_step( p, c, [&]( CubeIndex y ) {
            if( !seen[y] )
                stack.emplace_back( y, false );
        } );
    }
    std::reverse( order.begin(), order.end() );
    std::vector<unsigned> longest( p.size(), 0 );
    longest[h.initial] = 1;
    unsigned best = 1 + p.dim( h.initial );
    for( CubeIndex c : order )
    {
        best = std::max( best, longest[c] + p.dim( c ) );
        for_each_step( p, c, [&]( CubeIndex y ) { longest[y] = std::max( longest[y], longest[c] + 1 ); } );
    }
    return best;
}

bool is_hd_tree( const Hda& h )
{
    const TruncatedUnfolding u = unfold( h, complete_depth( h ) );
    std::vector<unsigned> classes( h.cubes.size(), 0 );
    for( CubeIndex n = 0; n < u.nodes().size(); ++n )
        if( ++classes[u.projection()( n )] > 1 )
            return false;
    return true;
}

CubeSeq lift_to_unfolding( const TruncatedUnfolding& u, const CubePath& pointed )
{
    if( pointed.front() != u.base().initial )
        throw InputError( "path does not start at the initial cube" );
    CubeSeq out;
    CubeSeq prefix;
    for( CubeIndex c : pointed.cubes() )
    {
        prefix.push_back( c );
        const auto n = u.node_of( prefix );
        if( !n )
            throw InputError( "path prefix " + format_path( u.base().cubes, prefix ) + " lies beyond depth " +
                              std::to_string( u.depth() ) );
        out.push_back( *n );
    }
    return out;
}

Morphism lift_morphism( const Morphism& f, const TruncatedUnfolding& a, const TruncatedUnfolding& b )
{
    if( a.depth() != b.depth() )
        throw InputError( "unfoldings have different depths " + std::to_string( a.depth() ) + " and " +
                          std::to_string( b.depth() ) );
    if( auto problems = validate_morphism( f, a.base(), b.base(), true ); !problems.empty() )
        throw InputError( "not a pointed morphism: " + problems.front() );
    Morphism out;
    out.map.reserve( a.nodes().size() );
    for( const UnfoldingNode& n : a.nodes() )
    {
        const auto target = b.node_of( image( f, n.representative ) );
        if( !target )
            throw std::logic_error( "image of a class lies outside the target unfolding" );
        out.map.push_back( *target );
    }
    return out;
}

bool class_prefix( const TruncatedUnfolding& u, CubeIndex a, CubeIndex b )
{
    const std::size_t la = u.nodes()[a].representative.size();
    for( const CubeSeq& m : u.members( b ) )
        if( m.size() >= la && u.node_of( CubeSeq( m.begin(), m.begin() + la ) ) == a )
            return true;
    return false;
}

std::vector<CubeSeq> pointed_paths( const Hda& h, std::size_t max_len, std::optional<CubeIndex> target,
                                    std::size_t bound )
{
    const PrecubicalSet& p = h.cubes;
    std::vector<CubeSeq> out;
    if( max_len == 0 )
        return out;
    std::size_t visited = 0;
    CubeSeq cur{ h.initial };
    auto visit = [&]( auto&& self ) -> void {
        if( ++visited > bound )
            throw ResourceError( "more than " + std::to_string( bound ) + " pointed paths" );
        if( !target || cur.back() == *target )
            out.push_back( cur );
        if( cur.size() >= max_len )
            return;
        std::vector<CubeIndex> next;
        for_each_step( p, cur.back(), [&]( CubeIndex y ) { next.push_back( y ); } );
        std::sort( next.begin(), next.end() );
        next.erase( std::unique( next.begin(), next.end() ), next.end() );
        for( CubeIndex y : next )
        {
            cur.push_back( y );
            self( self );
            cur.pop_back();
        }
    };
    visit( visit );
    std::sort( out.begin(), out.end() );
    return out;
}

} // namespace hda
