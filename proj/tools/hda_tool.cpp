// hda: command-line front end.
//
// Exit codes: 0 affirmative, 1 negative decision, 2 input error,
// 3 resource bound hit.

#include "hda/bisim.hpp"
#include "hda/game.hpp"
#include "hda/io.hpp"
#include "hda/paths.hpp"
#include "hda/server.hpp"
#include "hda/unfolding.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hda;

namespace {

enum Exit { affirmative = 0, negative = 1, input_error = 2, resource_error = 3 };

std::vector<std::string> split_ids( const std::string& s )
{
    std::vector<std::string> out;
    std::stringstream ss( s );
    std::string item;
    while( std::getline( ss, item, ',' ) )
        out.push_back( item );
    return out;
}

void write_file( const std::string& path, const std::string& content )
{
    std::ofstream out( path, std::ios::binary );
    if( !out )
        throw InputError( "cannot write '" + path + "'" );
    out << content;
}

std::string dims_summary( const PrecubicalSet& p )
{
    std::string out;
    for( unsigned n = 0; !p.empty() && n <= p.max_dim(); ++n )
        out += ( n ? ", " : "" ) + std::to_string( p.count_of_dim( n ) ) + " in dim " + std::to_string( n );
    return out.empty() ? "no cubes" : out;
}

int cmd_validate( const std::string& file )
{
    const Hda h = load_hda( file );
    std::cout << "valid: " << h.cubes.size() << " cubes (" << dims_summary( h.cubes ) << "), initial "
              << h.cubes.id( h.initial ) << ( h.labeled() ? ", labeled" : "" ) << "\n";
    return affirmative;
}

int cmd_bisim( const std::string& fa, const std::string& fb, bool labeled, const std::string& witness, bool oracle )
{
    const Hda a = load_hda( fa );
    const Hda b = load_hda( fb );
    const BisimResult r = hd_bisim( a, b, labeled );
    std::cout << ( r.bisimilar ? "bisimilar" : "not bisimilar" ) << "\n";
    std::cout << "relation: " << r.relation.survivors().size() << " of " << r.relation.size()
              << " candidate pairs survive after " << r.rounds << " rounds\n";
    if( !r.bisimilar )
    {
        const unsigned rank = *r.relation.rank_of( a.initial, b.initial );
        std::cout << "spoiler strategy: initial pair deleted in round " << rank << "\n";
        Game g( a, b, Role::spoiler, labeled );
        while( g.status() == GameStatus::running )
        {
            const Move m = *g.engine_spoiler_move();
            const auto before = g.pair();
            const auto reply = g.apply( m );
            std::cout << "  at (" << a.cubes.id( before.first ) << ", " << b.cubes.id( before.second ) << "): "
                      << format_move( m, a, b );
            if( reply )
                std::cout << ", answered by " << format_move( *reply, a, b );
            else if( m.kind == Move::Kind::extend )
                std::cout << ", no answer";
            std::cout << "\n";
        }
        std::cout << "result: " << to_string( g.status() ) << "\n";
    }
    if( !witness.empty() )
        write_file( witness, witness_json( r, a, b ).dump( 2 ) + "\n" );
    if( oracle )
    {
        const bool o = exhaustive_bisim_oracle( a, b, labeled );
        std::cout << "oracle: " << ( o ? "bisimilar" : "not bisimilar" ) << ( o == r.bisimilar ? " (agrees)" : " (DISAGREES)" )
                  << "\n";
    }
    return r.bisimilar ? affirmative : negative;
}

int cmd_unfold( const std::string& file, unsigned depth, const std::string& dot )
{
    const Hda h = load_hda( file );
    const TruncatedUnfolding u = unfold( h, depth );
    const PrecubicalSet& q = u.hda().cubes;
    std::size_t truncated = 0;
    for( const auto& n : u.nodes() )
        truncated += n.truncated;
    std::cout << "unfolding to depth " << depth << ": " << q.size() << " nodes (" << dims_summary( q ) << "), "
              << truncated << " truncated\n";
    for( CubeIndex c = 0; c < q.size(); ++c )
        std::cout << "  " << q.id( c ) << " -> " << h.cubes.id( u.projection()( c ) ) << " ("
                  << u.members( c ).size() << " paths)" << ( u.nodes()[c].truncated ? " truncated" : "" ) << "\n";
    if( !dot.empty() )
        write_file( dot, emit_dot( u ) );
    return affirmative;
}

int cmd_paths( const std::string& file, const std::string& to, std::size_t max_len )
{
    const Hda h = load_hda( file );
    const CubeIndex target = h.cubes.index_of( to );
    const auto paths = pointed_paths( h, max_len, target );
    std::map<CubeSeq, std::vector<CubeSeq>> classes;
    for( const auto& s : paths )
        classes[homotopy_class( h.cubes, CubePath( h.cubes, s ) ).representative].push_back( s );
    std::cout << paths.size() << " pointed paths to " << to << " of length <= " << max_len << ", " << classes.size()
              << " homotopy classes\n";
    for( const auto& [rep, members] : classes )
    {
        std::cout << "class " << format_path( h.cubes, rep ) << "\n";
        for( const auto& s : members )
            std::cout << "  " << format_path( h.cubes, s ) << "\n";
    }
    return paths.empty() ? negative : affirmative;
}

int cmd_homotopic( const std::string& file, const std::vector<std::string>& paths )
{
    if( paths.size() != 2 )
        throw InputError( "homotopic needs exactly two --path options" );
    const Hda h = load_hda( file );
    const CubePath a = validate_path( h.cubes, split_ids( paths[0] ) );
    const CubePath b = validate_path( h.cubes, split_ids( paths[1] ) );
    const bool same = homotopic( h.cubes, a, b );
    std::cout << ( same ? "homotopic" : "not homotopic" ) << "\n";
    return same ? affirmative : negative;
}

int cmd_normalize( const std::string& file, const std::string& path )
{
    const Hda h = load_hda( file );
    const CubePath rho = validate_path( h.cubes, split_ids( path ) );
    const FanNormalization f = normalize_fan( h.cubes, rho );
    std::cout << format_path( h.cubes, f.path.cubes() ) << "\n";
    std::cout << "T " << t_measure( h.cubes, rho.cubes() ) << " -> " << t_measure( h.cubes, f.path.cubes() ) << ", "
              << f.rewrites << " rewrites, " << f.moves << " adjacency moves\n";
    for( const auto& s : f.trace )
        std::cout << "  " << format_path( h.cubes, s ) << "\n";
    return affirmative;
}

int cmd_product( const std::string& fa, const std::string& fb )
{
    std::cout << serialize( product( load_hda( fa ), load_hda( fb ) ) );
    return affirmative;
}

int cmd_serve( const std::string& host, int port )
{
    std::cerr << "serving on " << host << ":" << port << "\n";
    if( !serve( host, port ) )
        throw InputError( "cannot listen on " + host + ":" + std::to_string( port ) );
    return affirmative;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Higher-dimensional automata: validation, bisimilarity, homotopy, unfoldings" };
    app.require_subcommand( 1 );

    std::string file, file_b, witness, dot, to, single_path, host = "127.0.0.1";
    bool labeled = false, oracle = false;
    unsigned depth = 0;
    std::size_t max_len = 9;
    int port = 8080;
    std::vector<std::string> paths;

    auto* validate = app.add_subcommand( "validate", "Parse and validate an .hda file" );
    validate->add_option( "file", file )->required();

    auto* bisim = app.add_subcommand( "bisim", "Decide hd-bisimilarity" );
    bisim->add_option( "a", file )->required();
    bisim->add_option( "b", file_b )->required();
    bisim->add_flag( "--labeled", labeled, "Compare labels" );
    bisim->add_option( "--witness", witness, "Write relation and strategy as JSON" );
    bisim->add_flag( "--oracle", oracle, "Cross-check with the exhaustive oracle" );

    auto* unfold_cmd = app.add_subcommand( "unfold", "Truncated unfolding" );
    unfold_cmd->add_option( "file", file )->required();
    unfold_cmd->add_option( "--depth", depth, "Bound on path length plus dimension" )->required()->check( CLI::PositiveNumber );
    unfold_cmd->add_option( "--dot", dot, "Write DOT" );

    auto* paths_cmd = app.add_subcommand( "paths", "Pointed cube paths to a cube, by homotopy class" );
    paths_cmd->add_option( "file", file )->required();
    paths_cmd->add_option( "--to", to )->required();
    paths_cmd->add_option( "--max-len", max_len )->check( CLI::PositiveNumber );

    auto* homotopic_cmd = app.add_subcommand( "homotopic", "Compare two cube paths" );
    homotopic_cmd->add_option( "file", file )->required();
    homotopic_cmd->add_option( "--path", paths, "Comma-separated cube ids, given twice" )->required();

    auto* normalize = app.add_subcommand( "normalize", "Rewrite a path into a fan-shaped one" );
    normalize->add_option( "file", file )->required();
    normalize->add_option( "--path", single_path, "Comma-separated cube ids" )->required();

    auto* product_cmd = app.add_subcommand( "product", "Pointwise product of two HDA" );
    product_cmd->add_option( "a", file )->required();
    product_cmd->add_option( "b", file_b )->required();

    auto* serve_cmd = app.add_subcommand( "serve", "Run the game server" );
    serve_cmd->add_option( "--port", port )->check( CLI::Range( 1, 65535 ) );
    serve_cmd->add_option( "--host", host );

    try
    {
        app.parse( argc, argv );
    }
    catch( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? affirmative : input_error;
    }

    try
    {
        if( *validate )
            return cmd_validate( file );
        if( *bisim )
            return cmd_bisim( file, file_b, labeled, witness, oracle );
        if( *unfold_cmd )
            return cmd_unfold( file, depth, dot );
        if( *paths_cmd )
            return cmd_paths( file, to, max_len );
        if( *homotopic_cmd )
            return cmd_homotopic( file, paths );
        if( *normalize )
            return cmd_normalize( file, single_path );
        if( *product_cmd )
            return cmd_product( file, file_b );
        if( *serve_cmd )
            return cmd_serve( host, port );
    }
    catch( const SemanticError& e )
    {
        std::cerr << "invalid: " << e.problems().size() << " problem(s)\n";
        for( const auto& p : e.problems() )
            std::cerr << "  " << p << "\n";
        return input_error;
    }
    catch( const InputError& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch( const ResourceError& e )
    {
        std::cerr << "resource bound: " << e.what() << "\n";
        return resource_error;
    }
    return input_error;
}
