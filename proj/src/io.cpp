#include "hda/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hda {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column( std::string_view text, std::size_t byte )
{
    std::size_t line = 1, column = 1;
    for( std::size_t i = 0; i < byte && i < text.size(); ++i )
    {
        if( text[i] == '\n' )
        {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return { line, column };
}

std::vector<std::string> id_list( const json& j, const std::string& where, std::vector<std::string>& problems )
{
    std::vector<std::string> out;
    if( !j.is_array() )
    {
        problems.push_back( where + " must be an array of ids" );
        return out;
    }
    for( const auto& e : j )
    {
        if( !e.is_string() )
        {
            problems.push_back( where + " contains a non-string entry" );
            continue;
        }
        out.push_back( e.get<std::string>() );
    }
    return out;
}

std::string dot_quote( std::string_view s )
{
    std::string out = "\"";
    for( char c : s )
    {
        if( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + '"';
}

std::string record_escape( std::string_view s )
{
    std::string out;
    for( char c : s )
    {
        if( c == '{' || c == '}' || c == '|' || c == '<' || c == '>' || c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out;
}

std::string dot_body( const Hda& h, const std::vector<bool>* dashed )
{
    const PrecubicalSet& p = h.cubes;
    std::ostringstream out;
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    auto style = [&]( CubeIndex c ) { return dashed && ( *dashed )[c] ? ", style=dashed" : ""; };
    for( CubeIndex c : p.cubes_of_dim( 0 ) )
    {
        out << "  " << dot_quote( p.id( c ) );
        if( c == h.initial )
            out << " [shape=doublecircle" << style( c ) << "]";
        else if( dashed && ( *dashed )[c] )
            out << " [style=dashed]";
        out << ";\n";
    }
    for( CubeIndex c : p.cubes_of_dim( 1 ) )
    {
        std::string label = p.id( c );
        if( h.labeled() )
            label = ( *h.labeling )[c].str() + " " + label;
        out << "  " << dot_quote( p.id( p.face( c, 1, Sign::lower ) ) ) << " -> "
            << dot_quote( p.id( p.face( c, 1, Sign::upper ) ) ) << " [label=" << dot_quote( label ) << style( c )
            << "];\n";
    }
    for( unsigned n = 2; !p.empty() && n <= p.max_dim(); ++n )
        for( CubeIndex c : p.cubes_of_dim( n ) )
        {
            std::string label = "{" + record_escape( p.id( c ) );
            if( h.labeled() )
                label += " | " + record_escape( ( *h.labeling )[c].str() );
            for( unsigned k = 1; k <= n; ++k )
                label += " | d" + std::to_string( k ) + ": " + record_escape( p.id( p.face( c, k, Sign::lower ) ) ) +
                         " / " + record_escape( p.id( p.face( c, k, Sign::upper ) ) );
            label += "}";
            out << "  " << dot_quote( p.id( c ) ) << " [shape=record, style=\"filled"
                << ( dashed && ( *dashed )[c] ? ",dashed" : "" ) << "\", fillcolor=gray85, label="
                << dot_quote( label ) << "];\n";
        }
    return out.str();
}

} // namespace

HdaDocument document_from_json( const json& j )
{
    std::vector<std::string> problems;
    HdaDocument doc;
    if( !j.is_object() )
        throw SemanticError( { "document must be a JSON object" } );
    for( const auto& [k, v] : j.items() )
        if( k != "cubes" && k != "initial" && k != "labels" && k != "pos" )
            problems.push_back( "unknown key '" + k + "'" );
    if( !j.contains( "cubes" ) || !j["cubes"].is_array() )
        problems.push_back( "'cubes' must be an array" );
    else
    {
        std::size_t n = 0;
        for( const auto& c : j["cubes"] )
        {
            const std::string where = "cube #" + std::to_string( n++ );
            if( !c.is_object() )
            {
                problems.push_back( where + " must be an object" );
                continue;
            }
            CubeRecord r;
            for( const auto& [k, v] : c.items() )
                if( k != "id" && k != "dim" && k != "d0" && k != "d1" )
                    problems.push_back( where + ": unknown key '" + k + "'" );
            if( !c.contains( "id" ) || !c["id"].is_string() )
            {
                problems.push_back( where + ": 'id' must be a string" );
                continue;
            }
            r.id = c["id"].get<std::string>();
            const std::string named = "cube '" + r.id + "'";
            if( !c.contains( "dim" ) || !c["dim"].is_number_unsigned() )
                problems.push_back( named + ": 'dim' must be a non-negative integer" );
            else
                r.dim = c["dim"].get<unsigned>();
            r.lower = c.contains( "d0" ) ? id_list( c["d0"], named + ": 'd0'", problems ) : std::vector<std::string>{};
            r.upper = c.contains( "d1" ) ? id_list( c["d1"], named + ": 'd1'", problems ) : std::vector<std::string>{};
            if( r.lower.size() != r.dim )
                problems.push_back( named + ": 'd0' has " + std::to_string( r.lower.size() ) + " entries, expected " +
                                    std::to_string( r.dim ) );
            if( r.upper.size() != r.dim )
                problems.push_back( named + ": 'd1' has " + std::to_string( r.upper.size() ) + " entries, expected " +
                                    std::to_string( r.dim ) );
            doc.cubes.push_back( std::move( r ) );
        }
    }
    if( !j.contains( "initial" ) || !j["initial"].is_string() )
        problems.push_back( "'initial' must be a string" );
    else
        doc.initial = j["initial"].get<std::string>();
    if( j.contains( "labels" ) )
    {
        if( !j["labels"].is_object() )
            problems.push_back( "'labels' must be an object" );
        else
        {
            EdgeLabels labels;
            for( const auto& [k, v] : j["labels"].items() )
            {
                if( !v.is_string() )
                    problems.push_back( "label of '" + k + "' must be a string" );
                else
                    labels.emplace( k, v.get<std::string>() );
            }
            doc.labels = std::move( labels );
        }
    }
    if( j.contains( "pos" ) )
    {
        if( !j["pos"].is_object() )
            problems.push_back( "'pos' must be an object" );
        else
            for( const auto& [k, v] : j["pos"].items() )
            {
                if( !v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number() )
                    problems.push_back( "position of '" + k + "' must be a pair of numbers" );
                else
                    doc.pos.emplace( k, std::pair{ v[0].get<double>(), v[1].get<double>() } );
            }
    }
    if( !problems.empty() )
        throw SemanticError( std::move( problems ) );
    return doc;
}

HdaDocument parse_document( std::string_view text )
{
    json j;
    try
    {
        j = json::parse( text.begin(), text.end() );
    }
    catch( const json::parse_error& e )
    {
        const auto [line, column] = line_column( text, e.byte > 0 ? e.byte - 1 : 0 );
        throw SyntaxError( "syntax error at line " + std::to_string( line ) + ", column " + std::to_string( column ) +
                               ": " + e.what(),
                           line, column );
    }
    return document_from_json( j );
}

Hda to_hda( const HdaDocument& doc )
{
    Hda h = Hda::make( PrecubicalSet::build( doc.cubes ), doc.initial );
    for( const auto& [id, xy] : doc.pos )
        if( !h.cubes.find( id ) )
            throw SemanticError( { "position given for unknown cube '" + id + "'" } );
    if( doc.labels )
    {
        std::vector<std::string> problems;
        for( const auto& [id, symbol] : *doc.labels )
        {
            const auto c = h.cubes.find( id );
            if( !c )
                problems.push_back( "label given for unknown cube '" + id + "'" );
            else if( h.cubes.dim( *c ) != 1 )
                problems.push_back( "label given for cube '" + id + "' of dimension " +
                                    std::to_string( h.cubes.dim( *c ) ) + "; only 1-cubes are labeled" );
        }
        if( !problems.empty() )
            throw SemanticError( std::move( problems ) );
        try
        {
            h = with_labels( std::move( h ), *doc.labels );
        }
        catch( const LabelingError& e )
        {
            throw SemanticError( { e.what() } );
        }
    }
    return h;
}

Hda parse_hda( std::string_view text )
{
    return to_hda( parse_document( text ) );
}

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if( !in )
        throw InputError( "cannot read '" + path + "'" );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Hda load_hda( const std::string& path )
{
    return parse_hda( read_file( path ) );
}

HdaDocument to_document( const Hda& h )
{
    HdaDocument doc;
    doc.cubes = h.cubes.records();
    doc.initial = h.cubes.empty() ? std::string{} : h.cubes.id( h.initial );
    if( h.labeled() )
        doc.labels = edge_labels( h.cubes, *h.labeling );
    return doc;
}

json to_json( const HdaDocument& doc )
{
    std::vector<CubeRecord> cubes = doc.cubes;
    std::sort( cubes.begin(), cubes.end(), []( const CubeRecord& a, const CubeRecord& b ) { return a.id < b.id; } );
    json j;
    j["cubes"] = json::array();
    for( const auto& c : cubes )
        j["cubes"].push_back( { { "id", c.id }, { "dim", c.dim }, { "d0", c.lower }, { "d1", c.upper } } );
    j["initial"] = doc.initial;
    if( doc.labels )
    {
        j["labels"] = json::object();
        for( const auto& [id, symbol] : *doc.labels )
            j["labels"][id] = symbol;
    }
    if( !doc.pos.empty() )
    {
        j["pos"] = json::object();
        for( const auto& [id, xy] : doc.pos )
            j["pos"][id] = { xy.first, xy.second };
    }
    return j;
}

std::string serialize( const HdaDocument& doc )
{
    return to_json( doc ).dump( 2, ' ', false ) + "\n";
}

std::string serialize( const Hda& h )
{
    return serialize( to_document( h ) );
}

std::string emit_dot( const Hda& h, std::string_view name )
{
    return "digraph " + dot_quote( name ) + " {\n" + dot_body( h, nullptr ) + "}\n";
}

std::string emit_dot( const TruncatedUnfolding& u )
{
    std::vector<bool> dashed( u.nodes().size() );
    for( std::size_t n = 0; n < dashed.size(); ++n )
        dashed[n] = u.nodes()[n].truncated;
    return "digraph " + dot_quote( "unfolding depth " + std::to_string( u.depth() ) ) + " {\n" +
           dot_body( u.hda(), &dashed ) + "}\n";
}

json move_to_json( const Move& m, const Hda& a, const Hda& b )
{
    if( m.kind == Move::Kind::retreat )
        return { { "kind", "retreat" }, { "k", m.k }, { "nu", to_int( m.nu ) } };
    const Hda& h = m.side == Side::A ? a : b;
    return { { "kind", "extend" },
             { "side", m.side == Side::A ? "A" : "B" },
             { "k", m.k },
             { "target", h.cubes.id( m.target ) } };
}

Move move_from_json( const json& j, const Hda& a, const Hda& b )
{
    if( !j.is_object() || !j.contains( "kind" ) || !j["kind"].is_string() )
        throw InputError( "move must be an object with a string 'kind'" );
    if( !j.contains( "k" ) || !j["k"].is_number_integer() || j["k"].get<long long>() < 1 )
        throw InputError( "move needs a positive integer 'k'" );
    const unsigned k = j["k"].get<unsigned>();
    const std::string kind = j["kind"].get<std::string>();
    if( kind == "retreat" )
    {
        if( !j.contains( "nu" ) || !j["nu"].is_number_integer() || j["nu"].get<long long>() < 0 ||
            j["nu"].get<long long>() > 1 )
            throw InputError( "retreat needs 'nu' equal to 0 or 1" );
        return Move::retreat( k, sign_of( j["nu"].get<int>() ) );
    }
    if( kind != "extend" )
        throw InputError( "unknown move kind '" + kind + "'" );
    if( !j.contains( "side" ) || !j["side"].is_string() ||
        ( j["side"].get<std::string>() != "A" && j["side"].get<std::string>() != "B" ) )
        throw InputError( "extend needs 'side' equal to \"A\" or \"B\"" );
    if( !j.contains( "target" ) || !j["target"].is_string() )
        throw InputError( "extend needs a string 'target'" );
    const Side side = j["side"].get<std::string>() == "A" ? Side::A : Side::B;
    const Hda& h = side == Side::A ? a : b;
    const auto target = h.cubes.find( j["target"].get<std::string>() );
    if( !target )
        throw InputError( "unknown cube '" + j["target"].get<std::string>() + "' on side " +
                          ( side == Side::A ? "A" : "B" ) );
    return Move::extend( side, k, *target );
}

std::string format_move( const Move& m, const Hda& a, const Hda& b )
{
    if( m.kind == Move::Kind::retreat )
        return "retreat d" + std::to_string( m.k ) + "^" + std::to_string( to_int( m.nu ) );
    const Hda& h = m.side == Side::A ? a : b;
    return std::string{ "extend " } + ( m.side == Side::A ? "A" : "B" ) + " k=" + std::to_string( m.k ) + " to " +
           h.cubes.id( m.target );
}

json witness_json( const BisimResult& r, const Hda& x, const Hda& y )
{
    json j;
    j["bisimilar"] = r.bisimilar;
    j["rounds"] = r.rounds;
    j["relation"] = json::array();
    j["deleted"] = json::array();
    const auto& pairs = r.relation.pairs();
    for( std::size_t i = 0; i < pairs.size(); ++i )
    {
        const json pair = { x.cubes.id( pairs[i].first ), y.cubes.id( pairs[i].second ) };
        if( r.relation.rank( i ) == 0 )
            j["relation"].push_back( pair );
        else
            j["deleted"].push_back( { { "pair", pair },
                                      { "rank", r.relation.rank( i ) },
                                      { "move", move_to_json( *r.strategy[i], x, y ) } } );
    }
    return j;
}

} // namespace hda
