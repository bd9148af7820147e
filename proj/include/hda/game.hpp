#pragma once

#include "hda/bisim.hpp"
#include "hda/core.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hda {

enum class Role { spoiler, duplicator };
enum class GameStatus { running, spoiler_won, duplicator_won };

[[nodiscard]] std::string to_string( Role r );
[[nodiscard]] std::string to_string( GameStatus s );

/// Illegal move; carries what would have been legal.
class MoveError : public InputError
{
public:
    MoveError( const std::string& what, std::vector<Move> legal )
        : InputError( what ), _legal{ std::move( legal ) }
    {}

    [[nodiscard]] const std::vector<Move>& legal() const { return _legal; }

private:
    std::vector<Move> _legal;
};

/// Move on a finished game.
class StateError : public InputError
{
public:
    using InputError::InputError;
};

struct HistoryEntry
{
    Role player;
    bool by_engine;
    Move move;
};

inline constexpr unsigned default_round_limit = 64;

/// One play of the bisimulation game between A and B.
///
/// The spoiler either extends one side (a challenge the duplicator must
/// answer on the other side with the same k and, when labeled, the same
/// label) or retreats both sides along the same face. The engine plays
/// whichever role the human does not, using the fixed point of hd_bisim:
/// as duplicator it keeps the pair inside the surviving relation when it
/// can and otherwise picks the answer of largest rank; as spoiler it plays
/// the recorded violating move of the current pair.
///
/// Every spoiler move counts as a round; reaching the round limit, or a
/// spoiler without moves, ends the game for the duplicator.
class Game
{
public:
    Game( Hda a, Hda b, Role human, bool labeled, unsigned round_limit = default_round_limit );

    [[nodiscard]] const Hda& a() const { return *_a; }
    [[nodiscard]] const Hda& b() const { return *_b; }
    [[nodiscard]] Role human() const { return _human; }
    [[nodiscard]] bool labeled() const { return _labeled; }
    [[nodiscard]] const BisimResult& fixed_point() const { return *_result; }

    [[nodiscard]] CubePair pair() const { return _pair; }
    [[nodiscard]] GameStatus status() const { return _status; }
    [[nodiscard]] unsigned round() const { return _round; }
    [[nodiscard]] unsigned round_limit() const { return _round_limit; }
    [[nodiscard]] const std::vector<HistoryEntry>& history() const { return _history; }
    /// The spoiler's open challenge, if the duplicator is to move.
    [[nodiscard]] const std::optional<Move>& pending() const { return _pending; }
    [[nodiscard]] Role to_move() const { return _pending ? Role::duplicator : Role::spoiler; }

    /// Moves available to the player to move. Throws StateError once the
    /// game is over.
    [[nodiscard]] std::vector<Move> legal_moves() const;

    /// Plays the human's move and lets the engine respond. Returns the last
    /// engine move, if any. Throws StateError on a finished game and
    /// MoveError for illegal moves.
    std::optional<Move> apply( const Move& m );

    /// What the engine would play as spoiler in the current position.
    [[nodiscard]] std::optional<Move> engine_spoiler_move() const;
    /// What the engine would answer to `challenge`, if any answer exists.
    [[nodiscard]] std::optional<Move> engine_duplicator_move( const Move& challenge ) const;

    /// Answers to `challenge` in the current position.
    [[nodiscard]] std::vector<Move> answers( const Move& challenge ) const;

private:
    [[nodiscard]] std::vector<Move> spoiler_moves() const;
    void play_spoiler( const Move& m, bool by_engine );
    void play_duplicator( const Move& m, bool by_engine );
    void engine_turns( std::optional<Move>& last );
    void finish_round();

    std::shared_ptr<const Hda> _a;
    std::shared_ptr<const Hda> _b;
    Role _human;
    bool _labeled;
    unsigned _round_limit;
    std::shared_ptr<const BisimResult> _result;

    CubePair _pair;
    GameStatus _status = GameStatus::running;
    unsigned _round = 0;
    std::vector<HistoryEntry> _history;
    std::optional<Move> _pending;
};

/// Engine against engine from the start position.
[[nodiscard]] GameStatus autoplay( Game game );

} // namespace hda
