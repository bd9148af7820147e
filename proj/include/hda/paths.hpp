#pragma once

#include "hda/core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hda {

using CubeSeq = std::vector<CubeIndex>;

struct CubeSeqHash
{
    std::size_t operator()( const CubeSeq& s ) const noexcept;
};

enum class StepKind { up, down };

/// up(k):   x_j = δ_k^0 x_{j+1}  (an event starts)
/// down(k): x_{j+1} = δ_k^1 x_j  (an event finishes)
struct Step
{
    StepKind kind;
    unsigned k;

    bool operator==( const Step& ) const = default;
};

/// The step from `from` to `to` with the least matching k, if any.
/// `ambiguous` is set when more than one k matches.
[[nodiscard]] std::optional<Step> step_between( const PrecubicalSet& p, CubeIndex from, CubeIndex to,
                                               bool* ambiguous = nullptr );

/// Non-empty cube sequence with a valid step between consecutive cubes.
class CubePath
{
public:
    /// Throws PathError at the first pair without a step; with `strict`,
    /// also when a step matches several face indices.
    CubePath( const PrecubicalSet& p, CubeSeq cubes, bool strict = false );

    [[nodiscard]] const CubeSeq& cubes() const { return _cubes; }
    [[nodiscard]] const std::vector<Step>& steps() const { return _steps; }
    /// Positions j whose step j → j+1 matched more than one k.
    [[nodiscard]] const std::vector<std::size_t>& ambiguous_steps() const { return _ambiguous; }

    [[nodiscard]] std::size_t length() const { return _cubes.size(); }
    [[nodiscard]] CubeIndex front() const { return _cubes.front(); }
    [[nodiscard]] CubeIndex back() const { return _cubes.back(); }

    bool operator==( const CubePath& other ) const { return _cubes == other._cubes; }

private:
    CubeSeq _cubes;
    std::vector<Step> _steps;
    std::vector<std::size_t> _ambiguous;
};

[[nodiscard]] CubePath validate_path( const PrecubicalSet& p, const std::vector<std::string>& ids,
                                      bool strict = false );
[[nodiscard]] std::vector<std::string> path_ids( const PrecubicalSet& p, const CubeSeq& s );
[[nodiscard]] std::string format_path( const PrecubicalSet& p, const CubeSeq& s );

/// ρ * σ; throws InputError when last(ρ) and first(σ) are not a step apart.
[[nodiscard]] CubePath concat( const PrecubicalSet& p, const CubePath& rho, const CubePath& sigma );

/// ρ ⊑ χ, reflexive: χ equals ρ or extends it.
[[nodiscard]] bool is_prefix( const CubePath& rho, const CubePath& chi );

/// Whether replacing the middle cube of (prev, x, next) by y is one of the
/// four adjacency moves (in either direction).
[[nodiscard]] bool adjacent_at( const PrecubicalSet& p, CubeIndex prev, CubeIndex x, CubeIndex next, CubeIndex y );

[[nodiscard]] bool adjacent( const PrecubicalSet& p, const CubePath& rho, const CubePath& sigma );

/// Every sequence obtained from `s` by one adjacency move, in no particular order.
[[nodiscard]] std::vector<CubeSeq> adjacent_paths( const PrecubicalSet& p, const CubeSeq& s );

/// HDA_MAX_CLASS if set, otherwise 10^6.
[[nodiscard]] std::size_t default_class_bound();

/// The ~-class of `s`, sorted. Throws ResourceError past `bound` members.
[[nodiscard]] std::vector<CubeSeq> class_members( const PrecubicalSet& p, const CubeSeq& s,
                                                  std::size_t bound = default_class_bound() );

struct HomotopyClass
{
    /// Lexicographically least member.
    CubeSeq representative;
    std::size_t size = 0;

    [[nodiscard]] std::size_t length() const { return representative.size(); }
    bool operator==( const HomotopyClass& other ) const { return representative == other.representative; }
};

[[nodiscard]] HomotopyClass homotopy_class( const PrecubicalSet& p, const CubePath& rho,
                                            std::size_t bound = default_class_bound() );
[[nodiscard]] bool homotopic( const PrecubicalSet& p, const CubePath& rho, const CubePath& sigma,
                              std::size_t bound = default_class_bound() );

/// Sum of the dimensions along the path.
[[nodiscard]] unsigned t_measure( const PrecubicalSet& p, const CubeSeq& s );

/// Vertices and edges alternate, then the dimension climbs straight to the last cube.
[[nodiscard]] bool is_fan_shaped( const PrecubicalSet& p, const CubeSeq& s );

struct FanNormalization
{
    CubePath path;
    /// T-reducing rewrites; each lowers T by exactly 2.
    std::size_t rewrites = 0;
    /// Individual adjacency moves (a rewrite is one or two of them).
    std::size_t moves = 0;
    /// Every intermediate sequence, starting with the input.
    std::vector<CubeSeq> trace;
};

/// Rewrites a path starting at a 0-cube into a homotopic fan-shaped one by
/// repeatedly flattening the least peak of dimension ≥ 2 (entered from a
/// lower face, left through an upper face).
[[nodiscard]] FanNormalization normalize_fan( const PrecubicalSet& p, const CubePath& rho );

} // namespace hda
