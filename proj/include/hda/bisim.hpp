#pragma once

#include "hda/core.hpp"
#include "hda/paths.hpp"

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hda {

enum class Side { A, B };

/// A move of the bisimulation game. `extend` enters a cube on one side,
/// `current = δ_k^0 target`; `retreat` takes δ_k^ν on both sides.
struct Move
{
    enum class Kind { extend, retreat };

    Kind kind = Kind::extend;
    Side side = Side::A;
    unsigned k = 1;
    CubeIndex target = 0;
    Sign nu = Sign::lower;

    static Move extend( Side side, unsigned k, CubeIndex target ) { return { Kind::extend, side, k, target, Sign::lower }; }
    static Move retreat( unsigned k, Sign nu ) { return { Kind::retreat, Side::A, k, 0, nu }; }

    bool operator==( const Move& other ) const
    {
        if( kind != other.kind || k != other.k )
            return false;
        return kind == Kind::extend ? side == other.side && target == other.target : nu == other.nu;
    }
};

using CubePair = std::pair<CubeIndex, CubeIndex>;

/// Candidate pairs (equal dimension, equal label words when labeled) with
/// the round in which each was deleted; rank 0 means it survived.
class PairRelation
{
public:
    PairRelation() = default;
    PairRelation( std::vector<CubePair> pairs, std::vector<unsigned> ranks );

    [[nodiscard]] const std::vector<CubePair>& pairs() const { return _pairs; }
    [[nodiscard]] std::size_t size() const { return _pairs.size(); }
    [[nodiscard]] unsigned rank( std::size_t i ) const { return _ranks[i]; }

    [[nodiscard]] std::optional<std::size_t> find( CubeIndex x, CubeIndex y ) const;
    /// Survivor check; false for non-candidates.
    [[nodiscard]] bool contains( CubeIndex x, CubeIndex y ) const;
    /// Deletion round of a candidate; 0 if it survived, nullopt if it was never a candidate.
    [[nodiscard]] std::optional<unsigned> rank_of( CubeIndex x, CubeIndex y ) const;

    [[nodiscard]] std::vector<CubePair> survivors() const;

private:
    std::vector<CubePair> _pairs;
    std::vector<unsigned> _ranks;
    std::unordered_map<std::uint64_t, std::size_t> _index;
};

struct BisimResult
{
    bool bisimilar = false;
    PairRelation relation;
    /// For every deleted pair (by index into relation.pairs()), a move after
    /// which every reachable pair has a smaller rank or the answer is missing.
    std::vector<std::optional<Move>> strategy;
    unsigned rounds = 0;
};

/// Candidate pairs of x and y: equal dimensions, and equal label words when
/// `labeled`. Throws InputError if `labeled` and a labeling is missing.
[[nodiscard]] std::vector<CubePair> candidate_pairs( const Hda& x, const Hda& y, bool labeled );

/// Greatest face-closed zig-zag relation by round-synchronous deletion.
[[nodiscard]] BisimResult hd_bisim( const Hda& x, const Hda& y, bool labeled );

inline constexpr std::size_t default_oracle_bound = 24;

/// Tries every face-closed set of candidate pairs containing the initial
/// pair against the zig-zag clauses. Throws ResourceError when there are
/// more than `bound` candidate pairs.
[[nodiscard]] bool exhaustive_bisim_oracle( const Hda& x, const Hda& y, bool labeled,
                                            std::size_t bound = default_oracle_bound );

/// For every reachable x1 and every y2 with f(x1) = δ_k^0 y2 there is an x2
/// with x1 = δ_k^0 x2 and f(x2) = y2. Throws InputError if f is not a
/// pointed morphism.
[[nodiscard]] bool is_open( const Morphism& f, const Hda& x, const Hda& y );

/// Lifts a cube path of y starting at f(x1) to one of x starting at x1,
/// choosing the least cube whenever an entering step has several lifts.
/// Returns nullopt when some entering step has no lift.
[[nodiscard]] std::optional<CubeSeq> lift_path( const Morphism& f, const Hda& x, const Hda& y, CubeIndex x1,
                                                const CubePath& path );

/// The surviving pairs as an HDA with its two projections.
struct Span
{
    Hda hda;
    Morphism left;
    Morphism right;
};

/// Throws InputError if `r` is negative.
[[nodiscard]] Span witness_span( const BisimResult& r, const Hda& x, const Hda& y );

/// hd_bisim on the complete parts of the depth-truncated unfoldings. Throws
/// PreconditionError if either complete part misses the initial node.
[[nodiscard]] bool homotopy_bisim_check( const Hda& x, const Hda& y, unsigned depth, bool labeled );

} // namespace hda
