#include "hda/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace hda {

SemanticError::SemanticError( std::vector<std::string> problems )
    : InputError( problems.empty() ? std::string{ "semantic error" } : problems.front() ),
      _problems{ std::move( problems ) }
{}

std::string to_string( const Violation& v )
{
    return v.cube.empty() ? v.message : "cube '" + v.cube + "': " + v.message;
}

namespace {

std::string face_name( unsigned k, int nu )
{
    return "d" + std::to_string( k ) + "^" + std::to_string( nu );
}

// Structural checks shared by record validation and build(). Returns true
// when the records are safe to index.
bool check_structure( std::span<const CubeRecord> records, std::vector<Violation>& out )
{
    std::unordered_map<std::string, std::size_t> where;
    bool ok = true;
    for( std::size_t i = 0; i < records.size(); ++i )
    {
        if( !where.emplace( records[i].id, i ).second )
        {
            out.push_back( { Violation::Kind::duplicate_id, records[i].id, "duplicate cube id" } );
            ok = false;
        }
    }
    for( const CubeRecord& r : records )
    {
        if( r.lower.size() != r.dim || r.upper.size() != r.dim )
        {
            out.push_back( { Violation::Kind::arity, r.id,
                             "dimension " + std::to_string( r.dim ) + " needs " + std::to_string( r.dim ) +
                                 " lower and upper faces, got " + std::to_string( r.lower.size() ) + " and " +
                                 std::to_string( r.upper.size() ) } );
            ok = false;
            continue;
        }
        for( int nu = 0; nu < 2; ++nu )
        {
            const auto& faces = nu == 0 ? r.lower : r.upper;
            for( unsigned k = 1; k <= r.dim; ++k )
            {
                auto it = where.find( faces[k - 1] );
                if( it == where.end() )
                {
                    out.push_back( { Violation::Kind::dangling, r.id,
                                     face_name( k, nu ) + " refers to unknown cube '" + faces[k - 1] + "'" } );
                    ok = false;
                }
                else if( records[it->second].dim + 1 != r.dim )
                {
                    out.push_back( { Violation::Kind::face_dimension, r.id,
                                     face_name( k, nu ) + " = '" + faces[k - 1] + "' has dimension " +
                                         std::to_string( records[it->second].dim ) + ", expected " +
                                         std::to_string( r.dim - 1 ) } );
                    ok = false;
                }
            }
        }
    }
    return ok;
}

void check_identity( const PrecubicalSet& p, std::vector<Violation>& out )
{
    for( CubeIndex x = 0; x < p.size(); ++x )
    {
        const unsigned n = p.dim( x );
        for( unsigned l = 2; l <= n; ++l )
            for( unsigned k = 1; k < l; ++k )
                for( int nu = 0; nu < 2; ++nu )
                    for( int mu = 0; mu < 2; ++mu )
                    {
                        const CubeIndex lhs = p.face( p.face( x, l, sign_of( mu ) ), k, sign_of( nu ) );
                        const CubeIndex rhs = p.face( p.face( x, k, sign_of( nu ) ), l - 1, sign_of( mu ) );
                        if( lhs != rhs )
                            out.push_back( { Violation::Kind::cubical_identity, p.id( x ),
                                             face_name( k, nu ) + " " + face_name( l, mu ) + " = '" + p.id( lhs ) +
                                                 "' but " + face_name( l - 1, mu ) + " " + face_name( k, nu ) +
                                                 " = '" + p.id( rhs ) + "'" } );
                    }
    }
}

std::vector<std::string> messages( const std::vector<Violation>& vs )
{
    std::vector<std::string> out;
    out.reserve( vs.size() );
    for( const auto& v : vs )
        out.push_back( to_string( v ) );
    return out;
}

} // namespace

PrecubicalSet PrecubicalSet::build( std::vector<CubeRecord> records, Validation mode )
{
    std::vector<Violation> problems;
    if( !check_structure( records, problems ) )
        throw SemanticError( messages( problems ) );

    std::sort( records.begin(), records.end(),
               []( const CubeRecord& a, const CubeRecord& b ) { return a.id < b.id; } );

    PrecubicalSet p;
    const std::size_t n = records.size();
    p._ids.reserve( n );
    p._dims.reserve( n );
    for( std::size_t i = 0; i < n; ++i )
    {
        p._lookup.emplace( records[i].id, static_cast<CubeIndex>( i ) );
        p._ids.push_back( records[i].id );
        p._dims.push_back( records[i].dim );
    }
    p._offsets.resize( n + 1, 0 );
    for( std::size_t i = 0; i < n; ++i )
        p._offsets[i + 1] = p._offsets[i] + 2 * records[i].dim;
    p._faces.resize( p._offsets[n] );
    std::vector<std::size_t> coface_count( n + 1, 0 );
    for( std::size_t i = 0; i < n; ++i )
    {
        const unsigned d = records[i].dim;
        for( unsigned k = 0; k < d; ++k )
        {
            const CubeIndex lo = p._lookup.at( records[i].lower[k] );
            const CubeIndex up = p._lookup.at( records[i].upper[k] );
            p._faces[p._offsets[i] + k] = lo;
            p._faces[p._offsets[i] + d + k] = up;
            ++coface_count[lo];
            ++coface_count[up];
        }
    }
    p._coface_offsets.assign( n + 1, 0 );
    for( std::size_t i = 0; i < n; ++i )
        p._coface_offsets[i + 1] = p._coface_offsets[i] + coface_count[i];
    p._cofaces.resize( p._coface_offsets[n] );
    std::vector<std::size_t> fill( p._coface_offsets.begin(), p._coface_offsets.end() - 1 );
    // Parents are visited in index order, so each coface list is sorted by
    // (parent, sign, k).
    for( CubeIndex parent = 0; parent < n; ++parent )
        for( int nu = 0; nu < 2; ++nu )
            for( unsigned k = 1; k <= p._dims[parent]; ++k )
            {
                const CubeIndex f = p.face( parent, k, sign_of( nu ) );
                p._cofaces[fill[f]++] = Coface{ parent, k, sign_of( nu ) };
            }

    if( mode == Validation::eager )
    {
        check_identity( p, problems );
        if( !problems.empty() )
            throw SemanticError( messages( problems ) );
    }
    return p;
}

unsigned PrecubicalSet::max_dim() const
{
    return _dims.empty() ? 0 : *std::max_element( _dims.begin(), _dims.end() );
}

std::optional<CubeIndex> PrecubicalSet::find( std::string_view id ) const
{
    auto it = _lookup.find( std::string{ id } );
    if( it == _lookup.end() )
        return std::nullopt;
    return it->second;
}

CubeIndex PrecubicalSet::index_of( std::string_view id ) const
{
    if( auto c = find( id ) )
        return *c;
    throw InputError( "unknown cube id '" + std::string{ id } + "'" );
}

std::vector<CubeIndex> PrecubicalSet::cubes_of_dim( unsigned n ) const
{
    std::vector<CubeIndex> out;
    for( CubeIndex c = 0; c < size(); ++c )
        if( _dims[c] == n )
            out.push_back( c );
    return out;
}

std::size_t PrecubicalSet::count_of_dim( unsigned n ) const
{
    return static_cast<std::size_t>( std::count( _dims.begin(), _dims.end(), n ) );
}

std::vector<CubeRecord> PrecubicalSet::records() const
{
    std::vector<CubeRecord> out;
    out.reserve( size() );
    for( CubeIndex c = 0; c < size(); ++c )
    {
        CubeRecord r{ _ids[c], _dims[c], {}, {} };
        for( unsigned k = 1; k <= _dims[c]; ++k )
        {
            r.lower.push_back( _ids[face( c, k, Sign::lower )] );
            r.upper.push_back( _ids[face( c, k, Sign::upper )] );
        }
        out.push_back( std::move( r ) );
    }
    return out;
}

std::vector<Violation> validate_precubical( std::span<const CubeRecord> records )
{
    std::vector<Violation> out;
    if( !check_structure( records, out ) )
        return out;
    const PrecubicalSet p =
        PrecubicalSet::build( std::vector<CubeRecord>( records.begin(), records.end() ), Validation::deferred );
    check_identity( p, out );
    return out;
}

std::vector<Violation> validate_precubical( const PrecubicalSet& p )
{
    std::vector<Violation> out;
    check_identity( p, out );
    return out;
}

Hda Hda::make( PrecubicalSet cubes, std::string_view initial_id )
{
    const auto i = cubes.find( initial_id );
    if( !i )
        throw SemanticError( { "initial cube '" + std::string{ initial_id } + "' does not exist" } );
    if( cubes.dim( *i ) != 0 )
        throw SemanticError( { "initial cube '" + std::string{ initial_id } + "' has dimension " +
                               std::to_string( cubes.dim( *i ) ) + ", expected 0" } );
    Hda h;
    h.cubes = std::move( cubes );
    h.initial = *i;
    return h;
}

std::vector<std::string> validate_morphism( const Morphism& f, const Hda& source, const Hda& target, bool pointed )
{
    const PrecubicalSet& x = source.cubes;
    const PrecubicalSet& y = target.cubes;
    std::vector<std::string> out;
    if( f.map.size() != x.size() )
    {
        out.push_back( "map has " + std::to_string( f.map.size() ) + " entries for " + std::to_string( x.size() ) +
                       " source cubes" );
        return out;
    }
    for( CubeIndex c = 0; c < x.size(); ++c )
    {
        if( f( c ) >= y.size() )
        {
            out.push_back( "image of '" + x.id( c ) + "' is out of range" );
            return out;
        }
    }
    for( CubeIndex c = 0; c < x.size(); ++c )
    {
        if( x.dim( c ) != y.dim( f( c ) ) )
        {
            out.push_back( "'" + x.id( c ) + "' ↦ '" + y.id( f( c ) ) + "' changes dimension" );
            continue;
        }
        for( int nu = 0; nu < 2; ++nu )
            for( unsigned k = 1; k <= x.dim( c ); ++k )
                if( f( x.face( c, k, sign_of( nu ) ) ) != y.face( f( c ), k, sign_of( nu ) ) )
                    out.push_back( "'" + x.id( c ) + "': f(" + face_name( k, nu ) + " x) != " +
                                   face_name( k, nu ) + " f(x)" );
    }
    if( pointed && f( source.initial ) != target.initial )
        out.push_back( "initial cube '" + x.id( source.initial ) + "' is not mapped to '" + y.id( target.initial ) +
                       "'" );
    return out;
}

Morphism identity_morphism( const PrecubicalSet& p )
{
    Morphism f;
    f.map.resize( p.size() );
    std::iota( f.map.begin(), f.map.end(), CubeIndex{ 0 } );
    return f;
}

namespace {

std::string cube_word_id( const std::string& word )
{
    return word.empty() ? std::string{ "()" } : word;
}

} // namespace

Hda standard_cube( unsigned n )
{
    if( n > max_standard_cube_dim )
        throw ResourceError( "standard cube of dimension " + std::to_string( n ) + " exceeds the bound " +
                             std::to_string( max_standard_cube_dim ) );
    std::vector<CubeRecord> records;
    std::size_t total = 1;
    for( unsigned i = 0; i < n; ++i )
        total *= 3;
    records.reserve( total );
    std::string word( n, '0' );
    for( std::size_t code = 0; code < total; ++code )
    {
        std::size_t rest = code;
        for( unsigned i = 0; i < n; ++i )
        {
            word[i] = "01*"[rest % 3];
            rest /= 3;
        }
        CubeRecord r{ cube_word_id( word ), 0, {}, {} };
        for( unsigned i = 0; i < n; ++i )
        {
            if( word[i] != '*' )
                continue;
            ++r.dim;
            std::string lo = word, up = word;
            lo[i] = '0';
            up[i] = '1';
            r.lower.push_back( cube_word_id( lo ) );
            r.upper.push_back( cube_word_id( up ) );
        }
        records.push_back( std::move( r ) );
    }
    return Hda::make( PrecubicalSet::build( std::move( records ) ), cube_word_id( std::string( n, '0' ) ) );
}

std::string pair_id( std::string_view a, std::string_view b )
{
    std::string s;
    s.reserve( a.size() + b.size() + 3 );
    s += '(';
    s += a;
    s += ',';
    s += b;
    s += ')';
    return s;
}

PrecubicalSet product( const PrecubicalSet& p, const PrecubicalSet& q )
{
    std::vector<CubeRecord> records;
    for( CubeIndex x = 0; x < p.size(); ++x )
        for( CubeIndex y = 0; y < q.size(); ++y )
        {
            if( p.dim( x ) != q.dim( y ) )
                continue;
            CubeRecord r{ pair_id( p.id( x ), q.id( y ) ), p.dim( x ), {}, {} };
            for( unsigned k = 1; k <= r.dim; ++k )
            {
                r.lower.push_back( pair_id( p.id( p.face( x, k, Sign::lower ) ), q.id( q.face( y, k, Sign::lower ) ) ) );
                r.upper.push_back( pair_id( p.id( p.face( x, k, Sign::upper ) ), q.id( q.face( y, k, Sign::upper ) ) ) );
            }
            records.push_back( std::move( r ) );
        }
    return PrecubicalSet::build( std::move( records ) );
}

Hda product( const Hda& x, const Hda& y )
{
    return Hda::make( product( x.cubes, y.cubes ), pair_id( x.cubes.id( x.initial ), y.cubes.id( y.initial ) ) );
}

ProductProjections product_projections( const PrecubicalSet& p, const PrecubicalSet& q, const PrecubicalSet& prod )
{
    ProductProjections out;
    out.left.map.resize( prod.size() );
    out.right.map.resize( prod.size() );
    for( CubeIndex x = 0; x < p.size(); ++x )
        for( CubeIndex y = 0; y < q.size(); ++y )
            if( auto z = prod.find( pair_id( p.id( x ), q.id( y ) ) ) )
            {
                out.left.map[*z] = x;
                out.right.map[*z] = y;
            }
    return out;
}

bool is_precubical_subset( const std::vector<bool>& member, const PrecubicalSet& p )
{
    for( CubeIndex c = 0; c < p.size(); ++c )
    {
        if( !member[c] )
            continue;
        for( int nu = 0; nu < 2; ++nu )
            for( unsigned k = 1; k <= p.dim( c ); ++k )
                if( !member[p.face( c, k, sign_of( nu ) )] )
                    return false;
    }
    return true;
}

bool is_precubical_subset( std::span<const std::string> ids, const PrecubicalSet& p )
{
    std::vector<bool> member( p.size(), false );
    for( const auto& id : ids )
        member[p.index_of( id )] = true;
    return is_precubical_subset( member, p );
}

std::vector<bool> reachable( const Hda& h )
{
    const PrecubicalSet& p = h.cubes;
    std::vector<bool> seen( p.size(), false );
    if( p.empty() )
        return seen;
    std::deque<CubeIndex> queue{ h.initial };
    seen[h.initial] = true;
    while( !queue.empty() )
    {
        const CubeIndex c = queue.front();
        queue.pop_front();
        for_each_step( p, c, [&]( CubeIndex next ) {
            if( !seen[next] )
            {
                seen[next] = true;
                queue.push_back( next );
            }
        } );
    }
    return seen;
}

std::vector<std::string> reachable_ids( const Hda& h )
{
    const auto seen = reachable( h );
    std::vector<std::string> out;
    for( CubeIndex c = 0; c < h.cubes.size(); ++c )
        if( seen[c] )
            out.push_back( h.cubes.id( c ) );
    return out;
}

} // namespace hda
