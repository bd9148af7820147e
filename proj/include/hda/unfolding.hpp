#pragma once

#include "hda/core.hpp"
#include "hda/paths.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace hda {

struct UnfoldingNode
{
    /// Least member of the class; pointed.
    CubeSeq representative;
    unsigned dim = 0;
    /// Outside the complete part (see TruncatedUnfolding::complete()).
    bool truncated = false;
};

/// The unfolding cut at `depth`. It contains the class of every pointed
/// cube path whose length plus the dimension of its last cube is at most
/// `depth`; that set is closed under all faces, so it forms an HDA.
///
/// Node i of nodes() is cube i of hda(). Node ids print the representative
/// as "[i,a,x]".
class TruncatedUnfolding
{
public:
    [[nodiscard]] unsigned depth() const { return _depth; }
    [[nodiscard]] const Hda& base() const { return _base; }
    [[nodiscard]] const Hda& hda() const { return _hda; }
    [[nodiscard]] const std::vector<UnfoldingNode>& nodes() const { return _nodes; }
    /// Class node ↦ last cube of its members.
    [[nodiscard]] const Morphism& projection() const { return _projection; }

    /// Sorted members of a node's class.
    [[nodiscard]] const std::vector<CubeSeq>& members( CubeIndex node ) const { return _members[node]; }
    /// Node whose class contains the pointed path `s`, if it lies within depth.
    [[nodiscard]] std::optional<CubeIndex> node_of( const CubeSeq& s ) const;

    /// Flags of the greatest set of nodes that is closed under faces and
    /// contains every node reached from one of its members by entering a
    /// cube. It is all of hda() when the depth covers every pointed path of
    /// an acyclic HDA, and empty for cyclic ones.
    [[nodiscard]] std::vector<bool> complete() const;
    [[nodiscard]] bool fully_complete() const;

    friend TruncatedUnfolding unfold( const Hda& h, unsigned depth );

private:
    unsigned _depth = 0;
    Hda _base;
    Hda _hda;
    std::vector<UnfoldingNode> _nodes;
    std::vector<std::vector<CubeSeq>> _members;
    Morphism _projection;
    std::unordered_map<CubeSeq, CubeIndex, CubeSeqHash> _member_of;
};

/// Throws InputError for depth 0 and ResourceError when the total number of
/// class members exceeds default_class_bound().
[[nodiscard]] TruncatedUnfolding unfold( const Hda& h, unsigned depth );

/// A sub-HDA together with its inclusion (as a map from sub indices).
struct SubHda
{
    Hda hda;
    std::vector<CubeIndex> inclusion;
};

/// Restriction of an HDA to a face-closed set of cubes containing the
/// initial one. Labels are restricted too.
[[nodiscard]] SubHda restrict_hda( const Hda& h, const std::vector<bool>& keep );

/// The complete part of an unfolding as an HDA, plus its projection to the
/// base. Throws PreconditionError if the initial node is not complete.
struct CompletePart
{
    Hda hda;
    Morphism projection;
};
[[nodiscard]] CompletePart complete_part( const TruncatedUnfolding& u );

/// No cube path visits a cube twice.
[[nodiscard]] bool is_acyclic( const Hda& h );

/// Least depth at which unfold() sees every pointed cube path: the maximum
/// of length + dim(last). Throws PreconditionError on cyclic input.
[[nodiscard]] unsigned complete_depth( const Hda& h );

/// Every cube has at most one homotopy class of pointed cube paths ending
/// in it. Throws PreconditionError on cyclic input.
[[nodiscard]] bool is_hd_tree( const Hda& h );

/// Node sequence (x̃_1 … x̃_m) with x̃_j the class of the length-j prefix.
/// Throws InputError if the path is not pointed or leaves the depth.
[[nodiscard]] CubeSeq lift_to_unfolding( const TruncatedUnfolding& u, const CubePath& pointed );

/// f̃[x_1 … x_m] = [f(x_1) … f(x_m)] on nodes. Throws InputError for unequal
/// depths or an invalid pointed f.
[[nodiscard]] Morphism lift_morphism( const Morphism& f, const TruncatedUnfolding& a, const TruncatedUnfolding& b );

/// Some member of `a` is a prefix of some member of `b` (reflexive).
[[nodiscard]] bool class_prefix( const TruncatedUnfolding& u, CubeIndex a, CubeIndex b );

/// Pointed cube paths of length ≤ max_len, optionally only those ending at
/// `target`, in lexicographic order. Throws ResourceError past `bound`.
[[nodiscard]] std::vector<CubeSeq> pointed_paths( const Hda& h, std::size_t max_len,
                                                  std::optional<CubeIndex> target = std::nullopt,
                                                  std::size_t bound = default_class_bound() );

} // namespace hda
