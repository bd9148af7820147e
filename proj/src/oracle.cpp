#include "hda/bisim.hpp"
#include "hda/labels.hpp"

#include <bit>
#include <map>

namespace hda {

// Brute force over subsets, written independently of hd_bisim so the two
// can check each other.
bool exhaustive_bisim_oracle( const Hda& x, const Hda& y, bool labeled, std::size_t bound )
{
    if( labeled && ( !x.labeled() || !y.labeled() ) )
        throw InputError( "labeled comparison needs a labeling on both HDA" );
    const PrecubicalSet& p = x.cubes;
    const PrecubicalSet& q = y.cubes;

    std::map<CubePair, unsigned> index;
    std::vector<CubePair> pairs;
    for( CubeIndex a = 0; a < p.size(); ++a )
        for( CubeIndex b = 0; b < q.size(); ++b )
        {
            if( p.dim( a ) != q.dim( b ) )
                continue;
            if( labeled && ( *x.labeling )[a] != ( *y.labeling )[b] )
                continue;
            index.emplace( CubePair{ a, b }, static_cast<unsigned>( pairs.size() ) );
            pairs.emplace_back( a, b );
        }
    const std::size_t limit = std::min<std::size_t>( bound, 31 );
    if( pairs.size() > limit )
        throw ResourceError( "oracle needs " + std::to_string( pairs.size() ) + " candidate pairs, bound is " +
                             std::to_string( limit ) );
    const auto start = index.find( { x.initial, y.initial } );
    if( start == index.end() )
        return false;

    using Mask = std::uint32_t;
    const std::size_t n = pairs.size();
    std::vector<Mask> faces( n, 0 );
    std::vector<bool> impossible( n, false );
    // Each challenge lists the pairs that would answer it; at least one must be in R.
    std::vector<std::vector<Mask>> challenges( n );
    auto bit = [&]( CubeIndex a, CubeIndex b ) -> std::optional<Mask> {
        auto it = index.find( { a, b } );
        if( it == index.end() )
            return std::nullopt;
        return Mask{ 1 } << it->second;
    };
    for( std::size_t i = 0; i < n; ++i )
    {
        const auto [a, b] = pairs[i];
        for( unsigned k = 1; k <= p.dim( a ); ++k )
            for( int nu = 0; nu < 2; ++nu )
            {
                const auto f = bit( p.face( a, k, sign_of( nu ) ), q.face( b, k, sign_of( nu ) ) );
                if( f )
                    faces[i] |= *f;
                else
                    impossible[i] = true;
            }
        for( const Coface& ca : p.cofaces( a ) )
        {
            if( ca.sign != Sign::lower )
                continue;
            Mask answers = 0;
            for( const Coface& cb : q.cofaces( b ) )
                if( cb.sign == Sign::lower && cb.k == ca.k )
                    answers |= bit( ca.parent, cb.parent ).value_or( 0 );
            challenges[i].push_back( answers );
        }
        for( const Coface& cb : q.cofaces( b ) )
        {
            if( cb.sign != Sign::lower )
                continue;
            Mask answers = 0;
            for( const Coface& ca : p.cofaces( a ) )
                if( ca.sign == Sign::lower && ca.k == cb.k )
                    answers |= bit( ca.parent, cb.parent ).value_or( 0 );
            challenges[i].push_back( answers );
        }
    }

    const unsigned s = start->second;
    const Mask low = ( Mask{ 1 } << s ) - 1;
    const std::uint64_t count = std::uint64_t{ 1 } << ( n - 1 );
    for( std::uint64_t m = 0; m < count; ++m )
    {
        // Spread the n-1 free bits around the fixed initial bit.
        const Mask free = static_cast<Mask>( m );
        const Mask r = ( free & low ) | ( Mask{ 1 } << s ) | ( ( free & ~low ) << 1 );
        bool ok = true;
        for( Mask rest = r; ok && rest != 0; rest &= rest - 1 )
        {
            const unsigned i = static_cast<unsigned>( std::countr_zero( rest ) );
            if( impossible[i] || ( faces[i] & ~r ) != 0 )
            {
                ok = false;
                break;
            }
            for( Mask answers : challenges[i] )
                if( ( answers & r ) == 0 )
                {
                    ok = false;
                    break;
                }
        }
        if( ok )
            return true;
    }
    return false;
}

} // namespace hda
