#include "hda/server.hpp"
#include "hda/io.hpp"

#include <httplib.h>

namespace hda {

using nlohmann::json;

namespace {

GameService::Reply error( int status, const std::string& message )
{
    return { status, { { "error", message } } };
}

json position_json( const Game& g )
{
    json pending = nullptr;
    if( g.pending() )
        pending = move_to_json( *g.pending(), g.a(), g.b() );
    return { { "a", g.a().cubes.id( g.pair().first ) },
             { "b", g.b().cubes.id( g.pair().second ) },
             { "round", g.round() },
             { "roundLimit", g.round_limit() },
             { "turn", to_string( g.to_move() ) },
             { "pending", pending } };
}

json history_json( const Game& g )
{
    json out = json::array();
    for( const auto& e : g.history() )
        out.push_back( { { "player", to_string( e.player ) },
                         { "engine", e.by_engine },
                         { "move", move_to_json( e.move, g.a(), g.b() ) } } );
    return out;
}

json moves_json( const Game& g, const std::vector<Move>& moves )
{
    json out = json::array();
    for( const Move& m : moves )
        out.push_back( move_to_json( m, g.a(), g.b() ) );
    return out;
}

GameService::Reply input_error( const InputError& e )
{
    auto r = error( 400, e.what() );
    if( const auto* s = dynamic_cast<const SemanticError*>( &e ) )
        r.body["problems"] = s->problems();
    return r;
}

} // namespace

std::shared_ptr<GameService::Session> GameService::find( const std::string& id ) const
{
    std::lock_guard lock( _mutex );
    auto it = _sessions.find( id );
    return it == _sessions.end() ? nullptr : it->second;
}

std::size_t GameService::sessions() const
{
    std::lock_guard lock( _mutex );
    return _sessions.size();
}

GameService::Reply GameService::create( const std::string& body )
{
    try
    {
        const json j = json::parse( body );
        if( !j.is_object() || !j.contains( "hdaA" ) || !j.contains( "hdaB" ) )
            return error( 400, "request needs 'hdaA' and 'hdaB'" );
        Role role = Role::spoiler;
        if( j.contains( "role" ) )
        {
            if( j["role"] == "spoiler" )
                role = Role::spoiler;
            else if( j["role"] == "duplicator" )
                role = Role::duplicator;
            else
                return error( 400, "'role' must be \"spoiler\" or \"duplicator\"" );
        }
        bool labeled = false;
        if( j.contains( "labeled" ) )
        {
            if( !j["labeled"].is_boolean() )
                return error( 400, "'labeled' must be a boolean" );
            labeled = j["labeled"].get<bool>();
        }
        unsigned limit = default_round_limit;
        if( j.contains( "roundLimit" ) )
        {
            if( !j["roundLimit"].is_number_unsigned() || j["roundLimit"].get<unsigned>() == 0 )
                return error( 400, "'roundLimit' must be a positive integer" );
            limit = j["roundLimit"].get<unsigned>();
        }
        Hda a = to_hda( document_from_json( j["hdaA"] ) );
        Hda b = to_hda( document_from_json( j["hdaB"] ) );
        auto session = std::make_shared<Session>();
        session->game = std::make_unique<Game>( std::move( a ), std::move( b ), role, labeled, limit );
        std::string id;
        {
            std::lock_guard lock( _mutex );
            id = "g" + std::to_string( _next++ );
            _sessions.emplace( id, session );
        }
        const Game& g = *session->game;
        return { 200,
                 { { "gameId", id }, { "position", position_json( g ) }, { "status", to_string( g.status() ) } } };
    }
    catch( const json::exception& e )
    {
        return error( 400, std::string{ "bad request body: " } + e.what() );
    }
    catch( const InputError& e )
    {
        return input_error( e );
    }
    catch( const ResourceError& e )
    {
        return error( 413, e.what() );
    }
}

GameService::Reply GameService::get( const std::string& id )
{
    auto s = find( id );
    if( !s )
        return error( 404, "no game '" + id + "'" );
    std::lock_guard lock( s->mutex );
    const Game& g = *s->game;
    return { 200,
             { { "position", position_json( g ) }, { "status", to_string( g.status() ) }, { "history", history_json( g ) } } };
}

GameService::Reply GameService::moves( const std::string& id )
{
    auto s = find( id );
    if( !s )
        return error( 404, "no game '" + id + "'" );
    std::lock_guard lock( s->mutex );
    const Game& g = *s->game;
    try
    {
        return { 200, { { "moves", moves_json( g, g.legal_moves() ) } } };
    }
    catch( const StateError& e )
    {
        return error( 409, e.what() );
    }
}

GameService::Reply GameService::move( const std::string& id, const std::string& body )
{
    auto s = find( id );
    if( !s )
        return error( 404, "no game '" + id + "'" );
    std::lock_guard lock( s->mutex );
    Game& g = *s->game;
    try
    {
        const json j = json::parse( body );
        if( !j.is_object() || !j.contains( "move" ) )
            return error( 400, "request needs 'move'" );
        const Move m = move_from_json( j["move"], g.a(), g.b() );
        const auto reply = g.apply( m );
        json engine = nullptr;
        if( reply )
            engine = move_to_json( *reply, g.a(), g.b() );
        return { 200, { { "engineReply", engine }, { "position", position_json( g ) }, { "status", to_string( g.status() ) } } };
    }
    catch( const json::exception& e )
    {
        return error( 400, std::string{ "bad request body: " } + e.what() );
    }
    catch( const StateError& e )
    {
        return error( 409, e.what() );
    }
    catch( const MoveError& e )
    {
        auto r = error( 422, e.what() );
        r.body["legal"] = moves_json( g, e.legal() );
        return r;
    }
    catch( const InputError& e )
    {
        return input_error( e );
    }
}

GameService::Reply GameService::remove( const std::string& id )
{
    std::lock_guard lock( _mutex );
    if( _sessions.erase( id ) == 0 )
        return error( 404, "no game '" + id + "'" );
    return { 204, nullptr };
}

void mount_routes( httplib::Server& server, GameService& service )
{
    auto send = []( httplib::Response& res, const GameService::Reply& r ) {
        res.status = r.status;
        if( r.status != 204 )
            res.set_content( r.body.dump(), "application/json" );
    };
    server.Post( "/game/new", [&service, send]( const httplib::Request& req, httplib::Response& res ) {
        send( res, service.create( req.body ) );
    } );
    server.Get( R"(/game/([^/]+))", [&service, send]( const httplib::Request& req, httplib::Response& res ) {
        send( res, service.get( req.matches[1] ) );
    } );
    server.Get( R"(/game/([^/]+)/moves)", [&service, send]( const httplib::Request& req, httplib::Response& res ) {
        send( res, service.moves( req.matches[1] ) );
    } );
    server.Post( R"(/game/([^/]+)/move)", [&service, send]( const httplib::Request& req, httplib::Response& res ) {
        send( res, service.move( req.matches[1], req.body ) );
    } );
    server.Delete( R"(/game/([^/]+))", [&service, send]( const httplib::Request& req, httplib::Response& res ) {
        send( res, service.remove( req.matches[1] ) );
    } );
}

bool serve( const std::string& host, int port )
{
    httplib::Server server;
    GameService service;
    mount_routes( server, service );
    return server.listen( host, port );
}

} // namespace hda
