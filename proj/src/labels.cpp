#include "hda/labels.hpp"

#include <algorithm>

namespace hda {

LabelWord::LabelWord( std::vector<std::string> letters )
    : _letters{ std::move( letters ) }
{
    std::sort( _letters.begin(), _letters.end() );
}

std::string LabelWord::str() const
{
    const bool short_letters =
        std::all_of( _letters.begin(), _letters.end(), []( const std::string& s ) { return s.size() == 1; } );
    std::string out;
    for( std::size_t i = 0; i < _letters.size(); ++i )
    {
        if( i > 0 && !short_letters )
            out += '.';
        out += _letters[i];
    }
    return out.empty() ? std::string{ "ε" } : out;
}

LabelWord torus_face( const LabelWord& w, unsigned k, Sign )
{
    if( k < 1 || k > w.size() )
        throw InputError( "face index " + std::to_string( k ) + " out of range for a word of length " +
                          std::to_string( w.size() ) );
    std::vector<std::string> letters = w.letters();
    letters.erase( letters.begin() + ( k - 1 ) );
    return LabelWord{ std::move( letters ) };
}

LabelWord lift_function( const std::map<std::string, std::string>& f, const LabelWord& w )
{
    std::vector<std::string> image;
    image.reserve( w.size() );
    for( const auto& a : w.letters() )
    {
        auto it = f.find( a );
        if( it == f.end() )
            throw InputError( "alphabet map is undefined on '" + a + "'" );
        image.push_back( it->second );
    }
    return LabelWord{ std::move( image ) };
}

std::vector<std::string> validate_labeling( const PrecubicalSet& p, const Labeling& labeling )
{
    std::vector<std::string> out;
    if( labeling.size() != p.size() )
    {
        out.push_back( "labeling covers " + std::to_string( labeling.size() ) + " cubes, set has " +
                       std::to_string( p.size() ) );
        return out;
    }
    for( CubeIndex c = 0; c < p.size(); ++c )
    {
        const LabelWord& w = labeling[c];
        if( w.size() != p.dim( c ) )
        {
            out.push_back( "cube '" + p.id( c ) + "': label " + w.str() + " has the wrong length" );
            continue;
        }
        for( const auto& a : w.letters() )
            if( !labeling.alphabet().contains( a ) )
                out.push_back( "cube '" + p.id( c ) + "': letter '" + a + "' is not in the alphabet" );
        for( int nu = 0; nu < 2; ++nu )
            for( unsigned k = 1; k <= p.dim( c ); ++k )
            {
                const CubeIndex f = p.face( c, k, sign_of( nu ) );
                if( labeling[f] != torus_face( w, k, sign_of( nu ) ) )
                    out.push_back( "cube '" + p.id( c ) + "' labeled " + w.str() + ": face d" + std::to_string( k ) +
                                   "^" + std::to_string( nu ) + " = '" + p.id( f ) + "' is labeled " +
                                   labeling[f].str() + ", expected " + torus_face( w, k, sign_of( nu ) ).str() );
            }
    }
    return out;
}

Labeling infer_labeling( const PrecubicalSet& p, const EdgeLabels& edges )
{
    std::set<std::string> alphabet;
    for( const auto& [id, symbol] : edges )
    {
        const CubeIndex e = p.index_of( id );
        if( p.dim( e ) != 1 )
            throw LabelingError( "only 1-cubes carry input labels", id );
        if( symbol.empty() )
            throw LabelingError( "empty label symbol", id );
        alphabet.insert( symbol );
    }
    std::vector<LabelWord> words( p.size() );
    for( CubeIndex c = 0; c < p.size(); ++c )
    {
        const unsigned n = p.dim( c );
        std::vector<std::string> letters;
        letters.reserve( n );
        for( unsigned k = 1; k <= n; ++k )
        {
            CubeIndex e = c;
            for( unsigned i = 1; i < k; ++i )
                e = p.face( e, 1, Sign::lower );
            for( unsigned i = k; i < n; ++i )
                e = p.face( e, 2, Sign::lower );
            auto it = edges.find( p.id( e ) );
            if( it == edges.end() )
                throw LabelingError( "edge '" + p.id( e ) + "' has no label", p.id( e ) );
            letters.push_back( it->second );
        }
        words[c] = LabelWord{ std::move( letters ) };
    }
    Labeling labeling{ std::move( alphabet ), std::move( words ) };
    for( CubeIndex c = 0; c < p.size(); ++c )
    {
        for( int nu = 0; nu < 2; ++nu )
            for( unsigned k = 1; k <= p.dim( c ); ++k )
            {
                const CubeIndex f = p.face( c, k, sign_of( nu ) );
                const LabelWord expected = torus_face( labeling[c], k, sign_of( nu ) );
                if( labeling[f] != expected )
                    throw LabelingError( "cube '" + p.id( c ) + "' gets label " + labeling[c].str() + " but its face d" +
                                             std::to_string( k ) + "^" + std::to_string( nu ) + " '" + p.id( f ) +
                                             "' is labeled " + labeling[f].str() + " instead of " + expected.str(),
                                         p.id( c ) );
            }
    }
    return labeling;
}

Hda with_labels( Hda h, const EdgeLabels& edges )
{
    h.labeling = std::make_shared<const Labeling>( infer_labeling( h.cubes, edges ) );
    return h;
}

EdgeLabels edge_labels( const PrecubicalSet& p, const Labeling& labeling )
{
    EdgeLabels out;
    for( CubeIndex c = 0; c < p.size(); ++c )
        if( p.dim( c ) == 1 )
            out.emplace( p.id( c ), labeling[c].letters().front() );
    return out;
}

} // namespace hda
