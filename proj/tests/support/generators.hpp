#pragma once

#include "hda/core.hpp"
#include "hda/labels.hpp"
#include "hda/paths.hpp"

#include <random>
#include <string>

namespace hda::testing {

using Rng = std::mt19937_64;

[[nodiscard]] std::string corpus_path( const std::string& name );
[[nodiscard]] Hda load_corpus( const std::string& name );

/// Records plus optional edge labels, built and validated.
[[nodiscard]] Hda make_hda( std::vector<CubeRecord> records, const std::string& initial, const EdgeLabels* labels = nullptr );

/// Random face-closed set of cells of a small integer grid of dimension
/// 1..max_dim. Always acyclic; contains the origin. Edge labels depend on
/// axis and position only, with axis letters ordered so squares sort.
[[nodiscard]] Hda grid_hda( Rng& rng, unsigned max_dim, unsigned max_extent, unsigned cells, bool labeled );

/// Random graph whose commuting squares are filled at random. With
/// `acyclic` edges only go from lower to higher vertex numbers.
[[nodiscard]] Hda graph_hda( Rng& rng, unsigned vertices, unsigned edges, double fill, bool labeled, bool acyclic );

/// Same HDA with every id suffixed.
[[nodiscard]] Hda renamed( const Hda& h, const std::string& suffix );

/// A small random change: drop a cube without cofaces, relabel a free
/// edge, or add a fresh branch.
[[nodiscard]] Hda perturb( Rng& rng, const Hda& h );

/// Random walk of at most `max_len` cubes from `start`.
[[nodiscard]] CubeSeq random_path( Rng& rng, const PrecubicalSet& p, CubeIndex start, std::size_t max_len );

} // namespace hda::testing
