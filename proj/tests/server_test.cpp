#include "hda/io.hpp"
#include "hda/server.hpp"
#include "support/generators.hpp"

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <thread>

using namespace hda;
using nlohmann::json;
using hda::testing::corpus_path;

namespace {

json corpus_json( const std::string& name )
{
    return json::parse( read_file( corpus_path( name ) ) );
}

json new_game( const std::string& a, const std::string& b, const std::string& role, bool labeled )
{
    return { { "hdaA", corpus_json( a ) }, { "hdaB", corpus_json( b ) }, { "role", role }, { "labeled", labeled } };
}

json extend( const std::string& side, unsigned k, const std::string& target )
{
    return { { "move", { { "kind", "extend" }, { "side", side }, { "k", k }, { "target", target } } } };
}

json retreat( unsigned k, int nu )
{
    return { { "move", { { "kind", "retreat" }, { "k", k }, { "nu", nu } } } };
}

// In-process server on a free port.
struct Running
{
    httplib::Server server;
    GameService service;
    int port = 0;
    std::thread thread;

    Running()
    {
        mount_routes( server, service );
        port = server.bind_to_any_port( "127.0.0.1" );
        thread = std::thread( [this] { server.listen_after_bind(); } );
        server.wait_until_ready();
    }
    ~Running()
    {
        server.stop();
        thread.join();
    }
};

} // namespace

TEST_CASE( "service plays the five-squares script" )
{
    GameService s;
    auto r = s.create( new_game( "five_squares_left.hda", "five_squares_right.hda", "spoiler", true ).dump() );
    REQUIRE( r.status == 200 );
    const std::string id = r.body["gameId"];
    CHECK( r.body["position"]["a"] == "x0" );
    CHECK( r.body["position"]["b"] == "x0'" );
    CHECK( r.body["status"] == "running" );

    r = s.move( id, extend( "A", 1, "y16" ).dump() );
    REQUIRE( r.status == 200 );
    CHECK( r.body["engineReply"]["target"] == "y10'" );
    r = s.move( id, extend( "A", 1, "z5" ).dump() );
    CHECK( r.body["engineReply"]["target"] == "z4'" );
    r = s.move( id, retreat( 2, 0 ).dump() );
    CHECK( r.body["engineReply"].is_null() );
    CHECK( r.body["position"]["a"] == "y15" );
    r = s.move( id, extend( "B", 2, "z3'" ).dump() );
    CHECK( r.body["status"] == "spoiler_won" );

    CHECK( s.moves( id ).status == 409 );
    CHECK( s.move( id, retreat( 1, 0 ).dump() ).status == 409 );
    const auto full = s.get( id );
    CHECK( full.body["history"].size() == 6 );
    CHECK( s.remove( id ).status == 204 );
    CHECK( s.get( id ).status == 404 );
    CHECK( s.remove( id ).status == 404 );
}

TEST_CASE( "service error codes" )
{
    GameService s;
    CHECK( s.create( "{" ).status == 400 );
    CHECK( s.create( R"({"hdaA": {}})" ).status == 400 );
    auto bad_role = new_game( "branch_left.hda", "branch_right.hda", "referee", true );
    CHECK( s.create( bad_role.dump() ).status == 400 );
    auto bad_doc = new_game( "branch_left.hda", "branch_right.hda", "spoiler", true );
    bad_doc["hdaA"]["initial"] = "nowhere";
    const auto semantic = s.create( bad_doc.dump() );
    CHECK( semantic.status == 400 );
    CHECK( semantic.body.contains( "problems" ) );
    auto bad_limit = new_game( "branch_left.hda", "branch_right.hda", "spoiler", true );
    bad_limit["roundLimit"] = 0;
    CHECK( s.create( bad_limit.dump() ).status == 400 );

    const auto ok = s.create( new_game( "branch_left.hda", "branch_right.hda", "spoiler", true ).dump() );
    const std::string id = ok.body["gameId"];
    const auto illegal = s.move( id, retreat( 1, 0 ).dump() );
    CHECK( illegal.status == 422 );
    CHECK( illegal.body["legal"] == s.moves( id ).body["moves"] );
    CHECK( s.move( id, R"({"move": {"kind": "fly"}})" ).status == 400 );
    CHECK( s.move( id, "not json" ).status == 400 );
    CHECK( s.move( "g999", retreat( 1, 0 ).dump() ).status == 404 );
    CHECK( s.moves( "g999" ).status == 404 );
    CHECK( s.sessions() == 1 );
}

TEST_CASE( "human duplicator faces the engine spoiler" )
{
    GameService s;
    auto r = s.create( new_game( "grid_left.hda", "grid_right.hda", "duplicator", true ).dump() );
    REQUIRE( r.status == 200 );
    const std::string id = r.body["gameId"];
    for( int guard = 0; guard < 100 && r.body["status"] == "running"; ++guard )
    {
        CHECK( r.body["position"]["turn"] == "duplicator" );
        CHECK_FALSE( r.body["position"]["pending"].is_null() );
        const auto moves = s.moves( id ).body["moves"];
        REQUIRE( !moves.empty() );
        r = s.move( id, json{ { "move", moves.front() } }.dump() );
        REQUIRE( r.status == 200 );
    }
    CHECK( r.body["status"] == "spoiler_won" );
}

TEST_CASE( "HTTP endpoints" )
{
    Running srv;
    httplib::Client cli( "127.0.0.1", srv.port );

    auto res = cli.Post( "/game/new", new_game( "five_squares_left.hda", "five_squares_right.hda", "spoiler", true ).dump(),
                         "application/json" );
    REQUIRE( res );
    CHECK( res->status == 200 );
    const json created = json::parse( res->body );
    const std::string id = created["gameId"];
    CHECK( created["position"]["a"] == "x0" );

    res = cli.Get( "/game/" + id + "/moves" );
    REQUIRE( res );
    CHECK( res->status == 200 );
    CHECK( json::parse( res->body )["moves"].size() == 14 );

    const std::vector<json> script{ extend( "A", 1, "y16" ), extend( "A", 1, "z5" ), retreat( 2, 0 ), extend( "B", 2, "z3'" ) };
    json last;
    for( const auto& m : script )
    {
        res = cli.Post( "/game/" + id + "/move", m.dump(), "application/json" );
        REQUIRE( res );
        CHECK( res->status == 200 );
        last = json::parse( res->body );
    }
    CHECK( last["status"] == "spoiler_won" );

    res = cli.Get( "/game/" + id );
    REQUIRE( res );
    const json state = json::parse( res->body );
    CHECK( state["status"] == "spoiler_won" );
    CHECK( state["history"].front()["player"] == "spoiler" );

    res = cli.Post( "/game/" + id + "/move", retreat( 1, 0 ).dump(), "application/json" );
    REQUIRE( res );
    CHECK( res->status == 409 );

    res = cli.Post( "/game/new", "{", "application/json" );
    REQUIRE( res );
    CHECK( res->status == 400 );

    res = cli.Delete( "/game/" + id );
    REQUIRE( res );
    CHECK( res->status == 204 );
    res = cli.Get( "/game/" + id );
    REQUIRE( res );
    CHECK( res->status == 404 );
}

TEST_CASE( "distinct sessions run concurrently" )
{
    Running srv;
    std::vector<std::thread> players;
    std::atomic<int> won{ 0 };
    for( int t = 0; t < 4; ++t )
        players.emplace_back( [&] {
            httplib::Client cli( "127.0.0.1", srv.port );
            auto res = cli.Post( "/game/new", new_game( "grid_left.hda", "grid_right.hda", "spoiler", true ).dump(),
                                 "application/json" );
            if( !res || res->status != 200 )
                return;
            const std::string id = json::parse( res->body )["gameId"];
            const std::vector<json> script{ extend( "A", 1, "y1" ), extend( "A", 2, "z1" ), retreat( 1, 1 ),
                                            extend( "A", 2, "z2" ),  retreat( 1, 1 ),        extend( "A", 2, "z4" ),
                                            retreat( 1, 1 ),        extend( "A", 2, "z5" ) };
            json last;
            for( const auto& m : script )
            {
                res = cli.Post( "/game/" + id + "/move", m.dump(), "application/json" );
                if( !res )
                    return;
                last = json::parse( res->body );
            }
            if( last["status"] == "spoiler_won" )
                ++won;
        } );
    for( auto& p : players )
        p.join();
    CHECK( won == 4 );
    CHECK( srv.service.sessions() == 4 );
}
