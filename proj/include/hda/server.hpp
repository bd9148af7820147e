#pragma once

#include "hda/game.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace httplib {
class Server;
}

namespace hda {

/// In-memory game sessions behind the HTTP API. Each call returns an HTTP
/// status and a JSON body; moves on one session are serialized by that
/// session's mutex, distinct sessions run independently.
class GameService
{
public:
    struct Reply
    {
        int status = 200;
        nlohmann::json body;
    };

    Reply create( const std::string& body );
    Reply get( const std::string& id );
    Reply moves( const std::string& id );
    Reply move( const std::string& id, const std::string& body );
    Reply remove( const std::string& id );

    [[nodiscard]] std::size_t sessions() const;

private:
    struct Session
    {
        std::mutex mutex;
        std::unique_ptr<Game> game;
    };

    std::shared_ptr<Session> find( const std::string& id ) const;

    mutable std::mutex _mutex;
    std::map<std::string, std::shared_ptr<Session>> _sessions;
    unsigned long long _next = 1;
};

/// POST /game/new, GET /game/{id}, GET /game/{id}/moves,
/// POST /game/{id}/move, DELETE /game/{id}.
void mount_routes( httplib::Server& server, GameService& service );

/// Blocks serving on host:port. Returns false if the socket cannot be bound.
bool serve( const std::string& host, int port );

} // namespace hda
