#include "hda/game.hpp"
#include "hda/labels.hpp"

#include <algorithm>

namespace hda {

std::string to_string( Role r )
{
    return r == Role::spoiler ? "spoiler" : "duplicator";
}

std::string to_string( GameStatus s )
{
    switch( s )
    {
    case GameStatus::running: return "running";
    case GameStatus::spoiler_won: return "spoiler_won";
    case GameStatus::duplicator_won: return "duplicator_won";
    }
    return "running";
}

Game::Game( Hda a, Hda b, Role human, bool labeled, unsigned round_limit )
    : _a{ std::make_shared<const Hda>( std::move( a ) ) },
      _b{ std::make_shared<const Hda>( std::move( b ) ) },
      _human{ human },
      _labeled{ labeled },
      _round_limit{ round_limit }
{
    if( round_limit == 0 )
        throw InputError( "round limit must be positive" );
    _result = std::make_shared<const BisimResult>( hd_bisim( *_a, *_b, labeled ) );
    _pair = { _a->initial, _b->initial };
    if( spoiler_moves().empty() )
    {
        _status = GameStatus::duplicator_won;
        return;
    }
    if( _human == Role::duplicator )
    {
        std::optional<Move> last;
        engine_turns( last );
    }
}

std::vector<Move> Game::spoiler_moves() const
{
    std::vector<Move> out;
    const PrecubicalSet& p = _a->cubes;
    const PrecubicalSet& q = _b->cubes;
    for( const Coface& cf : p.cofaces( _pair.first ) )
        if( cf.sign == Sign::lower )
            out.push_back( Move::extend( Side::A, cf.k, cf.parent ) );
    for( const Coface& cf : q.cofaces( _pair.second ) )
        if( cf.sign == Sign::lower )
            out.push_back( Move::extend( Side::B, cf.k, cf.parent ) );
    for( unsigned k = 1; k <= p.dim( _pair.first ); ++k )
        for( Sign nu : { Sign::lower, Sign::upper } )
            out.push_back( Move::retreat( k, nu ) );
    return out;
}

std::vector<Move> Game::answers( const Move& challenge ) const
{
    std::vector<Move> out;
    if( challenge.kind != Move::Kind::extend )
        return out;
    const bool from_a = challenge.side == Side::A;
    const Hda& mover = from_a ? *_a : *_b;
    const Hda& other = from_a ? *_b : *_a;
    const CubeIndex here = from_a ? _pair.second : _pair.first;
    for( const Coface& cf : other.cubes.cofaces( here ) )
    {
        if( cf.sign != Sign::lower || cf.k != challenge.k )
            continue;
        if( _labeled && ( *mover.labeling )[challenge.target] != ( *other.labeling )[cf.parent] )
            continue;
        out.push_back( Move::extend( from_a ? Side::B : Side::A, cf.k, cf.parent ) );
    }
    return out;
}

std::vector<Move> Game::legal_moves() const
{
    if( _status != GameStatus::running )
        throw StateError( "game is over: " + to_string( _status ) );
    return _pending ? answers( *_pending ) : spoiler_moves();
}

std::optional<Move> Game::engine_spoiler_move() const
{
    if( const auto i = _result->relation.find( _pair.first, _pair.second ); i && _result->relation.rank( *i ) > 0 )
        return _result->strategy[*i];
    const auto moves = spoiler_moves();
    if( moves.empty() )
        return std::nullopt;
    return moves.front();
}

std::optional<Move> Game::engine_duplicator_move( const Move& challenge ) const
{
    std::optional<Move> best;
    unsigned best_rank = 0;
    for( const Move& m : answers( challenge ) )
    {
        const CubePair next = m.side == Side::B ? CubePair{ challenge.target, m.target }
                                                : CubePair{ m.target, challenge.target };
        const unsigned r = _result->relation.rank_of( next.first, next.second ).value_or( 0 );
        if( r == 0 )
            return m;
        if( !best || r > best_rank )
        {
            best = m;
            best_rank = r;
        }
    }
    return best;
}

void Game::finish_round()
{
    ++_round;
    if( _round >= _round_limit || spoiler_moves().empty() )
        _status = GameStatus::duplicator_won;
}

void Game::play_spoiler( const Move& m, bool by_engine )
{
    _history.push_back( { Role::spoiler, by_engine, m } );
    if( m.kind == Move::Kind::retreat )
    {
        _pair = { _a->cubes.face( _pair.first, m.k, m.nu ), _b->cubes.face( _pair.second, m.k, m.nu ) };
        finish_round();
        return;
    }
    _pending = m;
    if( answers( m ).empty() )
        _status = GameStatus::spoiler_won;
}

void Game::play_duplicator( const Move& m, bool by_engine )
{
    _history.push_back( { Role::duplicator, by_engine, m } );
    const Move challenge = *_pending;
    _pending.reset();
    _pair = challenge.side == Side::A ? CubePair{ challenge.target, m.target } : CubePair{ m.target, challenge.target };
    finish_round();
}

void Game::engine_turns( std::optional<Move>& last )
{
    while( _status == GameStatus::running && !_pending )
    {
        const auto m = engine_spoiler_move();
        if( !m )
        {
            _status = GameStatus::duplicator_won;
            return;
        }
        play_spoiler( *m, true );
        last = m;
    }
}

std::optional<Move> Game::apply( const Move& m )
{
    const auto legal = legal_moves();
    if( std::find( legal.begin(), legal.end(), m ) == legal.end() )
        throw MoveError( "illegal move for the " + to_string( to_move() ), legal );
    if( to_move() != _human )
        throw StateError( "it is not the human's turn" );

    std::optional<Move> last;
    if( _human == Role::spoiler )
    {
        play_spoiler( m, false );
        if( _status == GameStatus::running && _pending )
        {
            last = engine_duplicator_move( *_pending );
            play_duplicator( *last, true );
        }
    }
    else
    {
        play_duplicator( m, false );
        engine_turns( last );
    }
    return last;
}

GameStatus autoplay( Game game )
{
    while( game.status() == GameStatus::running )
    {
        if( game.human() == Role::spoiler )
            game.apply( *game.engine_spoiler_move() );
        else
            game.apply( *game.engine_duplicator_move( *game.pending() ) );
    }
    return game.status();
}

} // namespace hda
