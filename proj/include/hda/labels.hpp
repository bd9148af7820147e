#pragma once

#include "hda/core.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hda {

/// Cube of the label torus !Σ: a non-decreasing word over the alphabet,
/// one letter per direction of the labeled cube.
class LabelWord
{
public:
    LabelWord() = default;
    /// Sorts `letters`.
    explicit LabelWord( std::vector<std::string> letters );

    [[nodiscard]] const std::vector<std::string>& letters() const { return _letters; }
    [[nodiscard]] std::size_t size() const { return _letters.size(); }

    /// "ab"-style rendering for single-character letters, "a.bc" otherwise.
    [[nodiscard]] std::string str() const;

    auto operator<=>( const LabelWord& ) const = default;

private:
    std::vector<std::string> _letters;
};

/// δ_k^ν on !Σ: drops the k-th letter (ν does not matter).
[[nodiscard]] LabelWord torus_face( const LabelWord& w, unsigned k, Sign sign );

/// !f on words: maps every letter and re-sorts.
[[nodiscard]] LabelWord lift_function( const std::map<std::string, std::string>& f, const LabelWord& w );

/// Precubical map X → !Σ, stored per cube index of X.
class Labeling
{
public:
    Labeling( std::set<std::string> alphabet, std::vector<LabelWord> words )
        : _alphabet{ std::move( alphabet ) }, _words{ std::move( words ) }
    {}

    [[nodiscard]] const std::set<std::string>& alphabet() const { return _alphabet; }
    [[nodiscard]] const LabelWord& operator[]( CubeIndex c ) const { return _words[c]; }
    [[nodiscard]] std::size_t size() const { return _words.size(); }

private:
    std::set<std::string> _alphabet;
    std::vector<LabelWord> _words;
};

/// Edge-to-symbol input, keyed by 1-cube id.
using EdgeLabels = std::map<std::string, std::string>;

/// Extends edge labels to all cubes. The direction-k letter of an n-cube is
/// the label of the edge reached by taking δ_1^0 (k-1) times and then
/// δ_2^0 (n-k) times. Throws LabelingError if the result is not a
/// precubical map (e.g. a square whose direction-1 label sorts after its
/// direction-2 label).
[[nodiscard]] Labeling infer_labeling( const PrecubicalSet& p, const EdgeLabels& edges );

/// Empty iff λ(δ_k^ν x) = δ_k^ν λ(x) for every cube and face.
[[nodiscard]] std::vector<std::string> validate_labeling( const PrecubicalSet& p, const Labeling& labeling );

/// Returns `h` carrying the inferred labeling.
[[nodiscard]] Hda with_labels( Hda h, const EdgeLabels& edges );

/// Edge labels read back from a labeling (1-cubes only).
[[nodiscard]] EdgeLabels edge_labels( const PrecubicalSet& p, const Labeling& labeling );

} // namespace hda
