#include "hda/game.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace hda;
using hda::testing::load_corpus;

namespace {

// The extend move towards `id`, with k read off the current cube's cofaces.
Move extend_to( const Game& g, Side side, const std::string& id )
{
    const Hda& h = side == Side::A ? g.a() : g.b();
    const CubeIndex here = side == Side::A ? g.pair().first : g.pair().second;
    const CubeIndex target = h.cubes.index_of( id );
    for( const Coface& cf : h.cubes.cofaces( here ) )
        if( cf.sign == Sign::lower && cf.parent == target )
            return Move::extend( side, cf.k, target );
    FAIL( "no extend to " << id );
    return Move::retreat( 1, Sign::lower );
}

std::pair<std::string, std::string> ids( const Game& g )
{
    return { g.a().cubes.id( g.pair().first ), g.b().cubes.id( g.pair().second ) };
}

std::size_t spoiler_moves( const Game& g )
{
    return static_cast<std::size_t>(
        std::count_if( g.history().begin(), g.history().end(), []( const HistoryEntry& e ) { return e.player == Role::spoiler; } ) );
}

} // namespace

TEST_CASE( "five-squares script ends with the spoiler winning" )
{
    Game g( load_corpus( "five_squares_left.hda" ), load_corpus( "five_squares_right.hda" ), Role::spoiler, true );
    CHECK( ids( g ) == std::pair<std::string, std::string>{ "x0", "x0'" } );
    const auto opening = g.legal_moves();
    CHECK( std::find( opening.begin(), opening.end(), extend_to( g, Side::A, "y16" ) ) != opening.end() );
    CHECK( std::none_of( opening.begin(), opening.end(), []( const Move& m ) { return m.kind == Move::Kind::retreat; } ) );

    auto reply = g.apply( extend_to( g, Side::A, "y16" ) );
    REQUIRE( reply );
    CHECK( ids( g ) == std::pair<std::string, std::string>{ "y16", "y10'" } );
    reply = g.apply( extend_to( g, Side::A, "z5" ) );
    CHECK( ids( g ) == std::pair<std::string, std::string>{ "z5", "z4'" } );
    reply = g.apply( Move::retreat( 2, Sign::lower ) );
    CHECK_FALSE( reply );
    CHECK( ids( g ) == std::pair<std::string, std::string>{ "y15", "y9'" } );
    g.apply( extend_to( g, Side::B, "z3'" ) );
    CHECK( g.status() == GameStatus::spoiler_won );
    CHECK_THROWS_AS( (void)g.legal_moves(), StateError );
    CHECK_THROWS_AS( g.apply( Move::retreat( 1, Sign::lower ) ), StateError );
}

TEST_CASE( "grid script ends with the spoiler winning" )
{
    Game g( load_corpus( "grid_left.hda" ), load_corpus( "grid_right.hda" ), Role::spoiler, true );
    g.apply( extend_to( g, Side::A, "y1" ) );
    g.apply( extend_to( g, Side::A, "z1" ) );
    g.apply( Move::retreat( 1, Sign::upper ) );
    CHECK( ids( g ).first == "y4" );
    g.apply( extend_to( g, Side::A, "z2" ) );
    g.apply( Move::retreat( 1, Sign::upper ) );
    CHECK( ids( g ).first == "y8" );
    g.apply( extend_to( g, Side::A, "z4" ) );
    CHECK( ids( g ) == std::pair<std::string, std::string>{ "z4", "z4'" } );
    // Both directions can be retreated along in the cc square.
    const auto here = g.legal_moves();
    for( unsigned k : { 1u, 2u } )
        CHECK( std::find( here.begin(), here.end(), Move::retreat( k, Sign::upper ) ) != here.end() );
    g.apply( Move::retreat( 1, Sign::upper ) );
    CHECK( ids( g ) == std::pair<std::string, std::string>{ "y12", "y12'" } );
    CHECK( g.answers( extend_to( g, Side::A, "z5" ) ).empty() );
    g.apply( extend_to( g, Side::A, "z5" ) );
    CHECK( g.status() == GameStatus::spoiler_won );
}

TEST_CASE( "illegal moves list the alternatives" )
{
    Game g( load_corpus( "branch_left.hda" ), load_corpus( "branch_right.hda" ), Role::spoiler, true );
    try
    {
        g.apply( Move::retreat( 1, Sign::lower ) );
        FAIL( "expected a move error" );
    }
    catch( const MoveError& e )
    {
        CHECK( e.legal() == g.legal_moves() );
    }
}

TEST_CASE( "engine duplicator survives on bisimilar pairs" )
{
    testing::Rng rng( 51 );
    const Hda a = load_corpus( "branch_left.hda" );
    const Hda b = load_corpus( "branch_right.hda" );
    for( int play = 0; play < 50; ++play )
    {
        Game g( a, b, Role::spoiler, true, 20 );
        while( g.status() == GameStatus::running )
        {
            const auto moves = g.legal_moves();
            g.apply( moves[std::uniform_int_distribution<std::size_t>( 0, moves.size() - 1 )( rng )] );
            CHECK( g.fixed_point().relation.rank_of( g.pair().first, g.pair().second ) == 0u );
        }
        CHECK( g.status() == GameStatus::duplicator_won );
    }

    Game self( a, a, Role::spoiler, true, 10 );
    while( self.status() == GameStatus::running )
        self.apply( self.legal_moves().front() );
    CHECK( self.status() == GameStatus::duplicator_won );
    CHECK( self.round() <= 10 );
}

TEST_CASE( "engine spoiler beats every duplicator within the rank" )
{
    for( const auto& [l, r] : std::vector<std::pair<const char*, const char*>>{
             { "five_squares_left.hda", "five_squares_right.hda" },
             { "grid_left.hda", "grid_right.hda" },
             { "independence_concurrent.hda", "independence_interleaved.hda" } } )
    {
        const Game start( load_corpus( l ), load_corpus( r ), Role::duplicator, true );
        const unsigned rank = *start.fixed_point().relation.rank_of( start.a().initial, start.b().initial );
        std::size_t leaves = 0;
        std::function<void( const Game& )> explore = [&]( const Game& g ) {
            if( g.status() != GameStatus::running )
            {
                CHECK( g.status() == GameStatus::spoiler_won );
                CHECK( spoiler_moves( g ) <= rank );
                ++leaves;
                return;
            }
            for( const Move& answer : g.legal_moves() )
            {
                Game next = g;
                next.apply( answer );
                explore( next );
            }
        };
        explore( start );
        CHECK( leaves > 0 );
        CHECK( autoplay( Game( load_corpus( l ), load_corpus( r ), Role::spoiler, true ) ) == GameStatus::spoiler_won );
    }
}

TEST_CASE( "random pairs: autoplay follows the fixed point" )
{
    testing::Rng rng( 52 );
    for( int round = 0; round < 40; ++round )
    {
        const Hda x = testing::graph_hda( rng, 4, 6, 0.8, true, true );
        const Hda y = testing::renamed( testing::perturb( rng, x ), "'" );
        const bool bisimilar = hd_bisim( x, y, true ).bisimilar;
        const auto expected = bisimilar ? GameStatus::duplicator_won : GameStatus::spoiler_won;
        CHECK( autoplay( Game( x, y, Role::spoiler, true, 30 ) ) == expected );
        CHECK( autoplay( Game( x, y, Role::duplicator, true, 30 ) ) == expected );
    }
}

TEST_CASE( "retreats keep pairs in the relation" )
{
    const Hda a = load_corpus( "branch_left.hda" );
    const Hda b = load_corpus( "branch_right.hda" );
    const auto r = hd_bisim( a, b, true );
    for( const auto& [x, y] : r.relation.survivors() )
        for( unsigned k = 1; k <= a.cubes.dim( x ); ++k )
            for( Sign nu : { Sign::lower, Sign::upper } )
                CHECK( r.relation.rank_of( a.cubes.face( x, k, nu ), b.cubes.face( y, k, nu ) ) == 0u );
}

TEST_CASE( "invalid setup" )
{
    CHECK_THROWS_AS( Game( standard_cube( 1 ), standard_cube( 1 ), Role::spoiler, false, 0 ), InputError );
    CHECK_THROWS_AS( Game( standard_cube( 1 ), standard_cube( 1 ), Role::spoiler, true ), InputError );
    const Game lone( standard_cube( 0 ), standard_cube( 0 ), Role::spoiler, false );
    CHECK( lone.status() == GameStatus::duplicator_won );
}
