// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "hda/bisim.hpp"
#include "hda/game.hpp"
#include "hda/io.hpp"
#include "hda/paths.hpp"
#include "hda/unfolding.hpp"
#include "support/generators.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hda;
using hda::testing::load_corpus;
using hda::testing::Rng;

namespace {

struct Failure
{
    std::string why;
};

void require( bool ok, const std::string& why )
{
    if( !ok )
        throw Failure{ why };
}

std::string ids( const Game& g )
{
    return "(" + g.a().cubes.id( g.pair().first ) + ", " + g.b().cubes.id( g.pair().second ) + ")";
}

Move extend_to( const Game& g, Side side, const std::string& id )
{
    const Hda& h = side == Side::A ? g.a() : g.b();
    const CubeIndex here = side == Side::A ? g.pair().first : g.pair().second;
    const CubeIndex target = h.cubes.index_of( id );
    for( const Coface& cf : h.cubes.cofaces( here ) )
        if( cf.sign == Sign::lower && cf.parent == target )
            return Move::extend( side, cf.k, target );
    throw Failure{ "no extend to " + id + " at " + ids( g ) };
}

std::string branching()
{
    const Hda x = load_corpus( "branch_left.hda" );
    const Hda y = load_corpus( "branch_right.hda" );
    const std::vector<std::pair<std::string, std::string>> listed{
        { "x0", "x0'" }, { "x1", "x1'" }, { "x2", "x2'" }, { "x3", "x4'" }, { "x4", "x4'" }, { "y1", "y1'" },
        { "y2", "y2'" }, { "y3", "y4'" }, { "y4", "y4'" }, { "y5", "y5'" }, { "z", "z'" } };
    std::size_t survivors = 0;
    for( bool labeled : { false, true } )
    {
        const auto r = hd_bisim( x, y, labeled );
        require( r.bisimilar, "not bisimilar" );
        for( const auto& [a, b] : listed )
            require( r.relation.rank_of( x.cubes.index_of( a ), y.cubes.index_of( b ) ) == 0u, "missing (" + a + ", " + b + ")" );
        survivors = r.relation.survivors().size();
    }
    return "11 listed pairs among " + std::to_string( survivors ) + " survivors";
}

std::string spoiler_examples()
{
    std::ostringstream detail;
    for( const auto& [l, r] : std::vector<std::pair<const char*, const char*>>{
             { "five_squares_left.hda", "five_squares_right.hda" }, { "grid_left.hda", "grid_right.hda" } } )
    {
        const Hda a = load_corpus( l );
        const Hda b = load_corpus( r );
        const auto res = hd_bisim( a, b, true );
        require( !res.bisimilar, std::string{ l } + " reported bisimilar" );
        require( autoplay( Game( a, b, Role::spoiler, true ) ) == GameStatus::spoiler_won, "strategy autoplay lost" );
        detail << l << " rank " << *res.relation.rank_of( a.initial, b.initial ) << "; ";
    }

    Game g( load_corpus( "five_squares_left.hda" ), load_corpus( "five_squares_right.hda" ), Role::spoiler, true );
    g.apply( extend_to( g, Side::A, "y16" ) );
    g.apply( extend_to( g, Side::A, "z5" ) );
    g.apply( Move::retreat( 2, Sign::lower ) );
    require( ids( g ) == "(y15, y9')", "five-squares script reached " + ids( g ) );
    g.apply( extend_to( g, Side::B, "z3'" ) );
    require( g.status() == GameStatus::spoiler_won, "five-squares script: " + to_string( g.status() ) );

    Game h( load_corpus( "grid_left.hda" ), load_corpus( "grid_right.hda" ), Role::spoiler, true );
    for( const char* square : { "z1", "z2", "z4" } )
    {
        if( h.round() == 0 )
            h.apply( extend_to( h, Side::A, "y1" ) );
        h.apply( extend_to( h, Side::A, square ) );
        h.apply( Move::retreat( 1, Sign::upper ) );
    }
    require( ids( h ) == "(y12, y12')", "grid script reached " + ids( h ) );
    h.apply( extend_to( h, Side::A, "z5" ) );
    require( h.status() == GameStatus::spoiler_won, "grid script: " + to_string( h.status() ) );
    detail << "both scripts end spoiler_won";
    return detail.str();
}

std::string independence()
{
    const Hda x = load_corpus( "independence_concurrent.hda" );
    const Hda y = load_corpus( "independence_interleaved.hda" );
    const bool fixpoint = hd_bisim( x, y, true ).bisimilar;
    const bool oracle = exhaustive_bisim_oracle( x, y, true );
    require( !fixpoint, "fixed point says bisimilar" );
    require( fixpoint == oracle, "oracle disagrees" );
    return std::to_string( candidate_pairs( x, y, true ).size() ) + " candidate pairs, both say not bisimilar";
}

std::string oracle_agreement()
{
    Rng rng( 2024 );
    std::size_t pairs = 0, yes = 0, skipped = 0;
    while( pairs < 250 )
    {
        const bool labeled = std::bernoulli_distribution( 0.5 )( rng );
        const bool grid = std::bernoulli_distribution( 0.3 )( rng );
        const Hda x = grid ? testing::grid_hda( rng, 2, 2, 2, labeled )
                           : testing::graph_hda( rng, 3 + pairs % 2, 4, 0.8, labeled, pairs % 3 != 0 );
        Hda y = std::bernoulli_distribution( 0.8 )( rng ) ? testing::perturb( rng, x )
                                                           : testing::graph_hda( rng, 3, 4, 0.8, labeled, true );
        y = testing::renamed( y, "'" );
        if( candidate_pairs( x, y, labeled ).size() > default_oracle_bound )
        {
            ++skipped;
            continue;
        }
        const bool fast = hd_bisim( x, y, labeled ).bisimilar;
        const bool slow = exhaustive_bisim_oracle( x, y, labeled );
        require( fast == slow, "disagreement on pair " + std::to_string( pairs ) + ":\n" + serialize( x ) + serialize( y ) );
        ++pairs;
        yes += fast;
    }
    return std::to_string( pairs ) + " pairs (" + std::to_string( yes ) + " bisimilar, " + std::to_string( pairs - yes ) +
           " not), " + std::to_string( skipped ) + " over the bound skipped";
}

std::string corner_paths()
{
    std::ostringstream detail;
    for( unsigned n = 2; n <= 4; ++n )
    {
        const Hda h = standard_cube( n );
        std::vector<CubeSeq> frontier{ { h.initial } };
        for( unsigned d = 0; d < n; ++d )
        {
            std::vector<CubeSeq> next;
            for( const auto& s : frontier )
                for( const Coface& cf : h.cubes.cofaces( s.back() ) )
                    if( cf.sign == Sign::lower )
                    {
                        next.push_back( s );
                        next.back().push_back( cf.parent );
                    }
            frontier = std::move( next );
        }
        std::size_t factorial = 1;
        for( unsigned i = 2; i <= n; ++i )
            factorial *= i;
        require( frontier.size() == factorial, "n=" + std::to_string( n ) + ": " + std::to_string( frontier.size() ) + " paths" );
        const auto cls = homotopy_class( h.cubes, CubePath( h.cubes, frontier.front() ) );
        for( const auto& s : frontier )
            require( homotopy_class( h.cubes, CubePath( h.cubes, s ) ) == cls, "n=" + std::to_string( n ) + ": split class" );
        detail << "n=" << n << ": " << frontier.size() << " ";
    }
    return detail.str() + "paths, one class each";
}

std::string fan_suite()
{
    Rng rng( 77 );
    std::size_t paths = 0, rewrites = 0;
    while( paths < 600 )
    {
        const Hda h = paths % 3 == 0 ? testing::graph_hda( rng, 5, 9, 0.8, false, false ) : testing::grid_hda( rng, 3, 3, 6, false );
        const CubePath rho( h.cubes, testing::random_path( rng, h.cubes, h.initial, 4 + paths % 9 ) );
        const auto f = normalize_fan( h.cubes, rho );
        const unsigned n = h.cubes.dim( rho.back() );
        const unsigned t_in = t_measure( h.cubes, rho.cubes() ), t_out = t_measure( h.cubes, f.path.cubes() );
        const std::string where = " on " + format_path( h.cubes, rho.cubes() );
        require( is_fan_shaped( h.cubes, f.path.cubes() ), "not fan shaped" + where );
        require( 2 * t_out == n * n + rho.length() - 1, "T formula" + where );
        require( 2 * f.rewrites == t_in - t_out, "rewrite count" + where );
        require( f.path.front() == rho.front() && f.path.back() == rho.back() && f.path.length() == rho.length(), "endpoints" + where );
        require( homotopic( h.cubes, rho, f.path ), "not homotopic" + where );
        for( const auto& s : f.trace )
            for( std::size_t j = 1; j <= s.size(); ++j )
                require( ( j + h.cubes.dim( s[j - 1] ) ) % 2 == 1, "parity" + where );
        ++paths;
        rewrites += f.rewrites;
    }
    return std::to_string( paths ) + " paths, " + std::to_string( rewrites ) + " rewrites";
}

bool isomorphic_by( const Morphism& f, const Hda& s, const Hda& t )
{
    if( s.cubes.size() != t.cubes.size() || !validate_morphism( f, s, t ).empty() )
        return false;
    std::vector<bool> hit( t.cubes.size() );
    for( CubeIndex c : f.map )
        hit[c] = true;
    return std::all_of( hit.begin(), hit.end(), []( bool b ) { return b; } );
}

std::string unfolding_suite()
{
    Rng rng( 88 );
    std::size_t trees = 0;
    for( int i = 0; i < 60; ++i )
    {
        const Hda h = i % 2 ? testing::grid_hda( rng, 3, 2, 5, false ) : testing::graph_hda( rng, 4, 6, 0.8, false, i % 4 == 0 );
        const TruncatedUnfolding u = unfold( h, 7 );
        if( !u.complete()[u.hda().initial] )
            continue;
        require( is_hd_tree( complete_part( u ).hda ), "complete part is not a tree" );
        ++trees;
    }
    for( const char* name : { "cube_path.hda", "hdp_edge.hda", "hdp_square.hda", "square_faces.hda" } )
    {
        const Hda h = load_corpus( name );
        const TruncatedUnfolding u = unfold( h, complete_depth( h ) );
        require( isomorphic_by( u.projection(), u.hda(), h ), std::string{ name } + ": projection not an isomorphism" );
    }
    const Hda sq = standard_cube( 2 );
    const TruncatedUnfolding usq = unfold( sq, 9 );
    require( isomorphic_by( usq.projection(), usq.hda(), sq ), "square: projection not an isomorphism" );

    const TruncatedUnfolding chain = unfold( load_corpus( "cycle2.hda" ), 5 );
    const auto& q = chain.hda().cubes;
    require( q.count_of_dim( 0 ) == 3 && q.count_of_dim( 1 ) == 2 && q.max_dim() == 1,
             "cycle unfolds to " + std::to_string( q.count_of_dim( 0 ) ) + " vertices" );
    return std::to_string( trees ) + " complete parts are trees; 5 projection isomorphisms; cycle chain 3+2";
}

std::string homotopy_agreement()
{
    Rng rng( 99 );
    std::size_t pairs = 0, yes = 0;
    while( pairs < 120 )
    {
        const bool labeled = pairs % 2 == 0;
        const Hda x = pairs % 3 == 0 ? testing::grid_hda( rng, 3, 2, 4, labeled ) : testing::graph_hda( rng, 5, 7, 0.8, labeled, true );
        const Hda y = testing::renamed( testing::perturb( rng, x ), "'" );
        if( !is_acyclic( y ) )
            continue;
        const unsigned d = std::max( complete_depth( x ), complete_depth( y ) );
        const bool direct = hd_bisim( x, y, labeled ).bisimilar;
        const bool unfolded = homotopy_bisim_check( x, y, d, labeled );
        require( direct == unfolded, "disagreement:\n" + serialize( x ) + serialize( y ) );
        ++pairs;
        yes += direct;
    }
    return std::to_string( pairs ) + " acyclic pairs (" + std::to_string( yes ) + " bisimilar)";
}

std::string open_maps()
{
    Rng rng( 111 );
    struct Open
    {
        Morphism f;
        Hda source, target;
    };
    std::vector<Open> maps;
    for( int i = 0; maps.size() < 8; ++i )
    {
        const Hda h = i % 2 ? testing::grid_hda( rng, 3, 2, 5, false ) : testing::graph_hda( rng, 4, 6, 0.8, false, true );
        const CompletePart cp = complete_part( unfold( h, complete_depth( h ) ) );
        require( is_open( cp.projection, cp.hda, h ), "projection not open" );
        maps.push_back( { cp.projection, cp.hda, h } );
    }
    for( const char* side : { "left", "right" } )
    {
        const Hda x = load_corpus( "branch_left.hda" );
        const Hda y = load_corpus( "branch_right.hda" );
        const Span s = witness_span( hd_bisim( x, y, true ), x, y );
        const bool left = std::string{ side } == "left";
        require( is_open( left ? s.left : s.right, s.hda, left ? x : y ), std::string{ "span leg not open: " } + side );
        maps.push_back( { left ? s.left : s.right, s.hda, left ? x : y } );
    }
    std::size_t lifted = 0;
    for( const auto& m : maps )
    {
        const auto reach = reachable( m.source );
        for( int t = 0; t < 100; ++t )
        {
            const CubeIndex x1 = testing::random_path( rng, m.source.cubes, m.source.initial, 1 + t % 5 ).back();
            require( reach[x1], "unreachable start" );
            const CubePath q( m.target.cubes, testing::random_path( rng, m.target.cubes, m.f( x1 ), 1 + t % 7 ) );
            const auto l = lift_path( m.f, m.source, m.target, x1, q );
            require( l.has_value(), "no lift of " + format_path( m.target.cubes, q.cubes() ) );
            (void)CubePath( m.source.cubes, *l );
            for( std::size_t j = 0; j < l->size(); ++j )
                require( m.f( ( *l )[j] ) == q.cubes()[j], "lift does not project back" );
            ++lifted;
        }
    }
    return std::to_string( maps.size() ) + " open maps, " + std::to_string( lifted ) + " paths lifted";
}

std::string corpus_round_trip()
{
    std::size_t files = 0;
    for( const auto& entry : std::filesystem::directory_iterator( HDA_CORPUS_DIR ) )
    {
        if( entry.path().extension() != ".hda" )
            continue;
        const std::string text = read_file( entry.path().string() );
        const Hda h = parse_hda( text );
        require( validate_precubical( h.cubes ).empty(), entry.path().filename().string() + " invalid" );
        require( serialize( parse_document( text ) ) == text, entry.path().filename().string() + " changes on round trip" );
        ++files;
    }
    require( files >= 14, "corpus incomplete" );
    return std::to_string( files ) + " files";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        { "branching pair bisimilar with the listed relation", branching },
        { "five-squares and grid pairs: spoiler wins by strategy and by script", spoiler_examples },
        { "independence pair: not bisimilar, oracle agrees", independence },
        { "fixed point agrees with the exhaustive oracle on random pairs", oracle_agreement },
        { "corner-to-top paths of the n-cube: n! paths in one class", corner_paths },
        { "fan normalization on random pointed paths", fan_suite },
        { "unfoldings: trees, projection isomorphisms, cycle chain", unfolding_suite },
        { "homotopy bisimilarity equals hd-bisimilarity on acyclic pairs", homotopy_agreement },
        { "projections are open and open maps lift paths", open_maps },
        { "corpus validates and round-trips byte for byte", corpus_round_trip },
    };
    int failed = 0;
    for( const auto& [name, run] : criteria )
    {
        try
        {
            const std::string detail = run();
            std::cout << "PASS  " << name << " [" << detail << "]\n";
        }
        catch( const Failure& f )
        {
            std::cout << "FAIL  " << name << ": " << f.why << "\n";
            ++failed;
        }
        catch( const std::exception& e )
        {
            std::cout << "FAIL  " << name << ": exception: " << e.what() << "\n";
            ++failed;
        }
    }
    std::cout << ( criteria.size() - failed ) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
