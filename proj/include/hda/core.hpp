#pragma once

#include "hda/errors.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hda {

/// Dense index of a cube inside one PrecubicalSet. Indices follow the sorted
/// order of the cube ids, so comparing indices compares ids.
using CubeIndex = std::uint32_t;

/// ν in δ_k^ν: lower faces are where a running event has not started yet,
/// upper faces where it has finished.
enum class Sign : std::uint8_t { lower = 0, upper = 1 };

inline constexpr int to_int( Sign s ) { return s == Sign::lower ? 0 : 1; }
inline constexpr Sign sign_of( int nu ) { return nu == 0 ? Sign::lower : Sign::upper; }

/// Input form of one cube: `lower[k-1]` is the id of δ_k^0, `upper[k-1]` of δ_k^1.
struct CubeRecord
{
    std::string id;
    unsigned dim = 0;
    std::vector<std::string> lower;
    std::vector<std::string> upper;

    bool operator==( const CubeRecord& ) const = default;
};

struct Violation
{
    enum class Kind { duplicate_id, arity, dangling, face_dimension, cubical_identity, initial };

    Kind kind;
    std::string cube;
    std::string message;
};

[[nodiscard]] std::string to_string( const Violation& v );

/// A face relation seen from the face: `face == δ_k^sign parent`.
struct Coface
{
    CubeIndex parent;
    unsigned k;
    Sign sign;
};

enum class Validation { eager, deferred };

/// Finite graded set with face maps. Immutable once built.
class PrecubicalSet
{
public:
    PrecubicalSet() = default;

    /// Builds from records. Structural problems (duplicates, dangling ids,
    /// wrong arities or face dimensions) always throw SemanticError; identity
    /// violations throw only under Validation::eager.
    static PrecubicalSet build( std::vector<CubeRecord> records, Validation mode = Validation::eager );

    [[nodiscard]] std::size_t size() const { return _ids.size(); }
    [[nodiscard]] bool empty() const { return _ids.empty(); }

    [[nodiscard]] const std::string& id( CubeIndex c ) const { return _ids[c]; }
    [[nodiscard]] unsigned dim( CubeIndex c ) const { return _dims[c]; }
    [[nodiscard]] unsigned max_dim() const;

    /// δ_k^sign c with 1-based k; requires 1 ≤ k ≤ dim(c).
    [[nodiscard]] CubeIndex face( CubeIndex c, unsigned k, Sign sign ) const
    {
        return _faces[_offsets[c] + ( sign == Sign::upper ? _dims[c] : 0 ) + k - 1];
    }

    [[nodiscard]] std::optional<CubeIndex> find( std::string_view id ) const;
    /// Like find() but throws InputError for unknown ids.
    [[nodiscard]] CubeIndex index_of( std::string_view id ) const;

    [[nodiscard]] std::span<const Coface> cofaces( CubeIndex c ) const
    {
        return { _cofaces.data() + _coface_offsets[c], _coface_offsets[c + 1] - _coface_offsets[c] };
    }

    [[nodiscard]] std::vector<CubeIndex> cubes_of_dim( unsigned n ) const;
    [[nodiscard]] std::size_t count_of_dim( unsigned n ) const;

    [[nodiscard]] std::vector<CubeRecord> records() const;

private:
    std::vector<std::string> _ids;
    std::vector<unsigned> _dims;
    std::vector<std::size_t> _offsets;
    std::vector<CubeIndex> _faces;
    std::vector<std::size_t> _coface_offsets;
    std::vector<Coface> _cofaces;
    std::unordered_map<std::string, CubeIndex> _lookup;
};

/// Every structural problem and every (x, k, ℓ, ν, μ) violating
/// δ_k^ν δ_ℓ^μ x = δ_{ℓ-1}^μ δ_k^ν x.
[[nodiscard]] std::vector<Violation> validate_precubical( std::span<const CubeRecord> records );
[[nodiscard]] std::vector<Violation> validate_precubical( const PrecubicalSet& p );

class Labeling;

/// Pointed precubical set, optionally labeled.
struct Hda
{
    PrecubicalSet cubes;
    CubeIndex initial = 0;
    std::shared_ptr<const Labeling> labeling;

    static Hda make( PrecubicalSet cubes, std::string_view initial_id );

    [[nodiscard]] bool labeled() const { return labeling != nullptr; }
};

/// Graded map given by the image of every source cube (indexed by source
/// CubeIndex). Source and target are passed alongside where needed.
struct Morphism
{
    std::vector<CubeIndex> map;

    [[nodiscard]] CubeIndex operator()( CubeIndex c ) const { return map[c]; }
};

/// Empty iff `f` preserves dimensions, commutes with every face map and,
/// when `pointed`, sends the initial cube to the initial cube.
[[nodiscard]] std::vector<std::string> validate_morphism( const Morphism& f, const Hda& source,
                                                          const Hda& target, bool pointed = true );

[[nodiscard]] Morphism identity_morphism( const PrecubicalSet& p );

/// n-cube as an HDA: cubes are words over {0,1,*}, the dimension is the
/// number of stars and δ_k^ν substitutes ν for the k-th star.
[[nodiscard]] Hda standard_cube( unsigned n );

inline constexpr unsigned max_standard_cube_dim = 10;

[[nodiscard]] PrecubicalSet product( const PrecubicalSet& p, const PrecubicalSet& q );
/// Product pointed at (initial, initial); labels are dropped.
[[nodiscard]] Hda product( const Hda& x, const Hda& y );
[[nodiscard]] std::string pair_id( std::string_view a, std::string_view b );

struct ProductProjections
{
    Morphism left;
    Morphism right;
};

/// Component projections of `product(p, q)`.
[[nodiscard]] ProductProjections product_projections( const PrecubicalSet& p, const PrecubicalSet& q,
                                                      const PrecubicalSet& prod );

[[nodiscard]] bool is_precubical_subset( std::span<const std::string> ids, const PrecubicalSet& p );
[[nodiscard]] bool is_precubical_subset( const std::vector<bool>& member, const PrecubicalSet& p );

/// Calls `fn(next)` for every cube one step away from `c`: entering a cube
/// through a lower face, or leaving to an upper face.
template<typename Fn>
void for_each_step( const PrecubicalSet& p, CubeIndex c, Fn&& fn )
{
    for( const Coface& cf : p.cofaces( c ) )
        if( cf.sign == Sign::lower )
            fn( cf.parent );
    for( unsigned k = 1; k <= p.dim( c ); ++k )
        fn( p.face( c, k, Sign::upper ) );
}

/// Membership flags of the cubes admitting a pointed cube path.
[[nodiscard]] std::vector<bool> reachable( const Hda& h );
[[nodiscard]] std::vector<std::string> reachable_ids( const Hda& h );

} // namespace hda
