#include "hda/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace hda {

std::size_t CubeSeqHash::operator()( const CubeSeq& s ) const noexcept
{
    std::size_t h = s.size();
    for( CubeIndex c : s )
        h ^= c + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 );
    return h;
}

std::optional<Step> step_between( const PrecubicalSet& p, CubeIndex from, CubeIndex to, bool* ambiguous )
{
    std::optional<Step> found;
    unsigned matches = 0;
    if( p.dim( to ) == p.dim( from ) + 1 )
    {
        for( unsigned k = 1; k <= p.dim( to ); ++k )
            if( p.face( to, k, Sign::lower ) == from )
            {
                if( !found )
                    found = Step{ StepKind::up, k };
                ++matches;
            }
    }
    else if( p.dim( from ) == p.dim( to ) + 1 )
    {
        for( unsigned k = 1; k <= p.dim( from ); ++k )
            if( p.face( from, k, Sign::upper ) == to )
            {
                if( !found )
                    found = Step{ StepKind::down, k };
                ++matches;
            }
    }
    if( ambiguous )
        *ambiguous = matches > 1;
    return found;
}

CubePath::CubePath( const PrecubicalSet& p, CubeSeq cubes, bool strict )
    : _cubes{ std::move( cubes ) }
{
    if( _cubes.empty() )
        throw PathError( "a cube path needs at least one cube", 0 );
    for( CubeIndex c : _cubes )
        if( c >= p.size() )
            throw PathError( "cube index out of range", 0 );
    _steps.reserve( _cubes.size() - 1 );
    for( std::size_t j = 0; j + 1 < _cubes.size(); ++j )
    {
        bool amb = false;
        auto step = step_between( p, _cubes[j], _cubes[j + 1], &amb );
        if( !step )
            throw PathError( "no step from '" + p.id( _cubes[j] ) + "' to '" + p.id( _cubes[j + 1] ) +
                                 "' at position " + std::to_string( j + 1 ),
                             j );
        if( amb )
        {
            if( strict )
                throw PathError( "step from '" + p.id( _cubes[j] ) + "' to '" + p.id( _cubes[j + 1] ) +
                                     "' matches several face indices",
                                 j );
            _ambiguous.push_back( j );
        }
        _steps.push_back( *step );
    }
}

CubePath validate_path( const PrecubicalSet& p, const std::vector<std::string>& ids, bool strict )
{
    CubeSeq s;
    s.reserve( ids.size() );
    for( const auto& id : ids )
        s.push_back( p.index_of( id ) );
    return CubePath( p, std::move( s ), strict );
}

std::vector<std::string> path_ids( const PrecubicalSet& p, const CubeSeq& s )
{
    std::vector<std::string> out;
    out.reserve( s.size() );
    for( CubeIndex c : s )
        out.push_back( p.id( c ) );
    return out;
}

std::string format_path( const PrecubicalSet& p, const CubeSeq& s )
{
    std::string out = "(";
    for( std::size_t j = 0; j < s.size(); ++j )
    {
        if( j > 0 )
            out += ", ";
        out += p.id( s[j] );
    }
    return out + ")";
}

CubePath concat( const PrecubicalSet& p, const CubePath& rho, const CubePath& sigma )
{
    if( !step_between( p, rho.back(), sigma.front() ) )
        throw InputError( "cannot concatenate: no step from '" + p.id( rho.back() ) + "' to '" +
                          p.id( sigma.front() ) + "'" );
    CubeSeq s = rho.cubes();
    s.insert( s.end(), sigma.cubes().begin(), sigma.cubes().end() );
    return CubePath( p, std::move( s ) );
}

bool is_prefix( const CubePath& rho, const CubePath& chi )
{
    return rho.length() <= chi.length() &&
           std::equal( rho.cubes().begin(), rho.cubes().end(), chi.cubes().begin() );
}

namespace {

constexpr Sign lo = Sign::lower;
constexpr Sign up = Sign::upper;

// The four adjacency clauses with x_p = a and y_p = b. Dimension guards come
// first so that every face index is in range.

// x_{p-1} = δ_k^0 a, a = δ_ℓ^0 next, y_{p-1} = δ_{ℓ-1}^0 b, b = δ_k^0 next.
bool enter_twice( const PrecubicalSet& p, CubeIndex prev, CubeIndex a, CubeIndex next, CubeIndex b )
{
    const unsigned n = p.dim( next );
    if( n < 2 || p.dim( a ) + 1 != n || p.dim( b ) + 1 != n || p.dim( prev ) + 2 != n )
        return false;
    for( unsigned l = 2; l <= n; ++l )
        for( unsigned k = 1; k < l; ++k )
            if( p.face( a, k, lo ) == prev && p.face( next, l, lo ) == a && p.face( b, l - 1, lo ) == prev &&
                p.face( next, k, lo ) == b )
                return true;
    return false;
}

// a = δ_ℓ^1 prev, next = δ_k^1 a, b = δ_k^1 prev, next = δ_{ℓ-1}^1 b.
bool leave_twice( const PrecubicalSet& p, CubeIndex prev, CubeIndex a, CubeIndex next, CubeIndex b )
{
    const unsigned n = p.dim( prev );
    if( n < 2 || p.dim( a ) + 1 != n || p.dim( b ) + 1 != n || p.dim( next ) + 2 != n )
        return false;
    for( unsigned l = 2; l <= n; ++l )
        for( unsigned k = 1; k < l; ++k )
            if( p.face( prev, l, up ) == a && p.face( a, k, up ) == next && p.face( prev, k, up ) == b &&
                p.face( b, l - 1, up ) == next )
                return true;
    return false;
}

// b is entered through δ_k^0 and left through δ_ℓ^1 (k < ℓ); a is the
// corner δ_k^0 δ_ℓ^1 b.
bool enter_low_leave_high( const PrecubicalSet& p, CubeIndex prev, CubeIndex a, CubeIndex next, CubeIndex b )
{
    const unsigned n = p.dim( b );
    if( n < 2 || p.dim( a ) + 2 != n || p.dim( prev ) + 1 != n || p.dim( next ) + 1 != n )
        return false;
    for( unsigned l = 2; l <= n; ++l )
        for( unsigned k = 1; k < l; ++k )
            if( p.face( p.face( b, l, up ), k, lo ) == a && p.face( b, k, lo ) == prev && p.face( b, l, up ) == next )
                return true;
    return false;
}

// b is entered through δ_ℓ^0 and left through δ_k^1 (k < ℓ); a is the
// corner δ_k^1 δ_ℓ^0 b.
bool enter_high_leave_low( const PrecubicalSet& p, CubeIndex prev, CubeIndex a, CubeIndex next, CubeIndex b )
{
    const unsigned n = p.dim( b );
    if( n < 2 || p.dim( a ) + 2 != n || p.dim( prev ) + 1 != n || p.dim( next ) + 1 != n )
        return false;
    for( unsigned l = 2; l <= n; ++l )
        for( unsigned k = 1; k < l; ++k )
            if( p.face( p.face( b, l, lo ), k, up ) == a && p.face( b, l, lo ) == prev && p.face( b, k, up ) == next )
                return true;
    return false;
}

bool one_direction( const PrecubicalSet& p, CubeIndex prev, CubeIndex a, CubeIndex next, CubeIndex b )
{
    return enter_twice( p, prev, a, next, b ) || leave_twice( p, prev, a, next, b ) ||
           enter_low_leave_high( p, prev, a, next, b ) || enter_high_leave_low( p, prev, a, next, b );
}

} // namespace

bool adjacent_at( const PrecubicalSet& p, CubeIndex prev, CubeIndex x, CubeIndex next, CubeIndex y )
{
    if( x == y )
        return false;
    return one_direction( p, prev, x, next, y ) || one_direction( p, prev, y, next, x );
}

bool adjacent( const PrecubicalSet& p, const CubePath& rho, const CubePath& sigma )
{
    const CubeSeq& x = rho.cubes();
    const CubeSeq& y = sigma.cubes();
    if( x.size() != y.size() || x.size() < 3 || x.front() != y.front() || x.back() != y.back() )
        return false;
    std::size_t where = 0, differing = 0;
    for( std::size_t j = 0; j < x.size(); ++j )
        if( x[j] != y[j] )
        {
            where = j;
            ++differing;
        }
    if( differing != 1 )
        return false;
    // Pinned endpoints keep the differing position interior.
    if( where == 0 || where + 1 == x.size() )
        throw std::logic_error( "adjacency differs at an endpoint" );
    return adjacent_at( p, x[where - 1], x[where], x[where + 1], y[where] );
}

std::vector<CubeSeq> adjacent_paths( const PrecubicalSet& p, const CubeSeq& s )
{
    std::vector<CubeSeq> out;
    if( s.size() < 3 )
        return out;
    std::vector<CubeIndex> candidates;
    for( std::size_t j = 1; j + 1 < s.size(); ++j )
    {
        const CubeIndex prev = s[j - 1], x = s[j], next = s[j + 1];
        candidates.clear();
        const bool entered = p.dim( x ) == p.dim( prev ) + 1;
        const bool left = p.dim( next ) + 1 == p.dim( x );
        if( entered && !left )
        {
            // enter, enter: the other lower faces of next
            for( unsigned k = 1; k <= p.dim( next ); ++k )
                candidates.push_back( p.face( next, k, lo ) );
        }
        else if( !entered && left )
        {
            // leave, leave: the other upper faces of prev
            for( unsigned k = 1; k <= p.dim( prev ); ++k )
                candidates.push_back( p.face( prev, k, up ) );
        }
        else if( entered && left )
        {
            // peak: corners reachable by leaving prev
            for( unsigned k = 1; k <= p.dim( prev ); ++k )
                candidates.push_back( p.face( prev, k, up ) );
        }
        else
        {
            // valley: cubes entered from prev
            for( const Coface& cf : p.cofaces( prev ) )
                if( cf.sign == lo )
                    candidates.push_back( cf.parent );
        }
        std::sort( candidates.begin(), candidates.end() );
        candidates.erase( std::unique( candidates.begin(), candidates.end() ), candidates.end() );
        for( CubeIndex y : candidates )
            if( adjacent_at( p, prev, x, next, y ) )
            {
                CubeSeq t = s;
                t[j] = y;
                out.push_back( std::move( t ) );
            }
    }
    return out;
}

std::size_t default_class_bound()
{
    if( const char* env = std::getenv( "HDA_MAX_CLASS" ) )
    {
        char* end = nullptr;
        const unsigned long long v = std::strtoull( env, &end, 10 );
        if( end != env && *end == '\0' && v > 0 )
            return static_cast<std::size_t>( v );
    }
    return 1'000'000;
}

std::vector<CubeSeq> class_members( const PrecubicalSet& p, const CubeSeq& s, std::size_t bound )
{
    std::unordered_set<CubeSeq, CubeSeqHash> seen{ s };
    std::deque<CubeSeq> queue{ s };
    while( !queue.empty() )
    {
        CubeSeq cur = std::move( queue.front() );
        queue.pop_front();
        for( CubeSeq& next : adjacent_paths( p, cur ) )
        {
            if( seen.contains( next ) )
                continue;
            if( seen.size() >= bound )
                throw ResourceError( "homotopy class exceeds " + std::to_string( bound ) + " paths" );
            seen.insert( next );
            queue.push_back( std::move( next ) );
        }
    }
    std::vector<CubeSeq> out( seen.begin(), seen.end() );
    std::sort( out.begin(), out.end() );
    return out;
}

HomotopyClass homotopy_class( const PrecubicalSet& p, const CubePath& rho, std::size_t bound )
{
    auto members = class_members( p, rho.cubes(), bound );
    return HomotopyClass{ std::move( members.front() ), members.size() };
}

bool homotopic( const PrecubicalSet& p, const CubePath& rho, const CubePath& sigma, std::size_t bound )
{
    if( rho.length() != sigma.length() || rho.front() != sigma.front() || rho.back() != sigma.back() )
        return false;
    if( rho == sigma )
        return true;
    return homotopy_class( p, rho, bound ) == homotopy_class( p, sigma, bound );
}

unsigned t_measure( const PrecubicalSet& p, const CubeSeq& s )
{
    unsigned t = 0;
    for( CubeIndex c : s )
        t += p.dim( c );
    return t;
}

bool is_fan_shaped( const PrecubicalSet& p, const CubeSeq& s )
{
    const long m = static_cast<long>( s.size() );
    const long n = static_cast<long>( p.dim( s.back() ) );
    for( long j = 1; j <= m; ++j )
    {
        const long d = static_cast<long>( p.dim( s[j - 1] ) );
        const long expected = j <= m - n ? ( j % 2 == 1 ? 0 : 1 ) : n + j - m;
        if( d != expected )
            return false;
    }
    return true;
}

namespace {

// Least 0-based index i with dim ≥ 2 that is entered from below and left
// through an upper face.
std::optional<std::size_t> least_peak( const PrecubicalSet& p, const CubePath& path )
{
    const auto& c = path.cubes();
    const auto& st = path.steps();
    for( std::size_t i = 2; i + 1 < c.size(); ++i )
        if( p.dim( c[i] ) >= 2 && st[i - 1].kind == StepKind::up && st[i].kind == StepKind::down )
            return i;
    return std::nullopt;
}

void replace_checked( const PrecubicalSet& p, CubeSeq& s, std::size_t i, CubeIndex y )
{
    if( !adjacent_at( p, s[i - 1], s[i], s[i + 1], y ) )
        throw std::logic_error( "fan rewrite produced a non-adjacent path" );
    s[i] = y;
}

} // namespace

FanNormalization normalize_fan( const PrecubicalSet& p, const CubePath& rho )
{
    if( p.dim( rho.front() ) != 0 )
        throw PreconditionError( "fan normalization needs a path starting at a 0-cube, '" + p.id( rho.front() ) +
                                 "' has dimension " + std::to_string( p.dim( rho.front() ) ) );
    FanNormalization out{ rho, 0, 0, { rho.cubes() } };
    while( !is_fan_shaped( p, out.path.cubes() ) )
    {
        const auto peak = least_peak( p, out.path );
        if( !peak )
            throw std::logic_error( "path is not fan-shaped but has no peak of dimension >= 2" );
        const std::size_t i = *peak;
        const auto& st = out.path.steps();
        if( st[i - 2].kind != StepKind::up )
            throw std::logic_error( "least peak is not preceded by an entering step" );
        const unsigned k1 = st[i - 2].k, k2 = st[i - 1].k, k3 = st[i].k;
        const unsigned t_before = t_measure( p, out.path.cubes() );

        CubeSeq s = out.path.cubes();
        unsigned enter = k2;
        if( k2 == k3 )
        {
            // First swap the cube before the peak so that the peak is entered
            // along a different direction than it is left.
            enter = k1 < k2 ? k1 : k1 + 1;
            replace_checked( p, s, i - 1, p.face( s[i], enter, lo ) );
            ++out.moves;
            out.trace.push_back( s );
        }
        if( enter < k3 )
            replace_checked( p, s, i, p.face( s[i + 1], enter, lo ) );
        else
            replace_checked( p, s, i, p.face( s[i - 1], k3, up ) );
        ++out.moves;
        ++out.rewrites;
        out.trace.push_back( s );
        out.path = CubePath( p, std::move( s ) );
        if( t_measure( p, out.path.cubes() ) + 2 != t_before )
            throw std::logic_error( "fan rewrite did not lower T by 2" );
    }
    return out;
}

} // namespace hda
