#pragma once

#include "tilecoh/language.hpp"
#include "tilecoh/tiling.hpp"

#include <vector>

namespace tilecoh {

/// Translation class of a tile together with its surroundings out to depth
/// n: the admissible (2n+1)-window (1D) or (2n+1) x (2n+1) window (2D)
/// centered on the tile. Corner-touching tiles count as neighbors, hence
/// full square windows. Two classes are equal iff their windows are equal;
/// `id` is the window's rank in canonical pattern order.
struct CollaredTile {
  std::size_t depth = 0;
  std::string center;
  Pattern collar;
  std::size_t id = 0;
};

enum class Direction { Successor, East, North };

/// Ordered pairs (s, t) of depth-n classes that can sit next to each other
/// in the given direction; t is the successor/east/north neighbor of s.
/// Pairs are derived from admissible windows one tile longer than the
/// collar along the direction's axis, so the shared overlap agrees by
/// construction. Stored per positive axis only; the mirrored direction is
/// the set of reversed pairs.
struct AdjacencyRelation {
  std::size_t depth = 0;
  Direction direction = Direction::Successor;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // tile ids, sorted
};

/// All depth-n classes in canonical order. Depth 0 classes are the
/// admissible single tiles.
std::vector<CollaredTile> collar(const TilingDefinition& def, std::size_t n);

/// Admissible neighbor pairs at depth n: one relation (Successor) in 1D,
/// two (East, North) in 2D. Guarantees every class occurs on both sides of
/// every relation; a violation means the input does not describe a tiling
/// space where every tile extends.
std::vector<AdjacencyRelation> adjacency(const TilingDefinition& def, std::size_t n);

/// Drop the outermost ring: the depth-(n-1) class whose collar is the
/// central sub-window of t's collar. `parents` must be collar(def, n-1).
CollaredTile forget(const CollaredTile& t, const std::vector<CollaredTile>& parents,
                    const TilingDefinition& def);

/// The central (2n-1)-sized sub-window of a depth-n collar.
Pattern forget_pattern(const CollaredTile& t);

const char* direction_name(Direction d);

}  // namespace tilecoh
