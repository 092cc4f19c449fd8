#include "tilecoh/collaring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tilecoh {

namespace {

WindowShape collar_shape(const TilingDefinition& def, std::size_t n) {
  WindowShape s;
  s.width = 2 * n + 1;
  s.height = def.dimension == 2 ? 2 * n + 1 : 1;
  return s;
}

}  // namespace

std::vector<CollaredTile> collar(const TilingDefinition& def, std::size_t n) {
  const WindowLanguage lang = factor_language(def, collar_shape(def, n));
  std::vector<CollaredTile> tiles;
  tiles.reserve(lang.size());
  for (std::size_t i = 0; i < lang.size(); ++i) {
    CollaredTile t;
    t.depth = n;
    t.collar = lang.patterns[i];
    t.center = def.dimension == 2 ? t.collar.at(n, n) : t.collar.at(0, n);
    t.id = i;
    tiles.push_back(std::move(t));
  }
  return tiles;
}

std::vector<AdjacencyRelation> adjacency(const TilingDefinition& def, std::size_t n) {
  const WindowLanguage tiles = factor_language(def, collar_shape(def, n));
  const std::size_t c = 2 * n + 1;

  auto relation_for = [&](Direction dir) {
    WindowShape shape;
    if (def.dimension == 1) {
      shape.width = c + 1;
      shape.height = 1;
    } else if (dir == Direction::East) {
      shape.width = c + 1;
      shape.height = c;
    } else {
      shape.width = c;
      shape.height = c + 1;
    }
    const WindowLanguage windows = factor_language(def, shape);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const Pattern& w : windows.patterns) {
      Pattern first, second;  // second is the successor/east/north neighbor
      if (dir == Direction::North) {
        // Row 0 is the top row, so the northern collar is rows 0..c-1.
        first = w.sub(1, 0, c, c);
        second = w.sub(0, 0, c, c);
      } else {
        first = w.sub(0, 0, shape.height, c);
        second = w.sub(0, 1, shape.height, c);
      }
      auto a = tiles.index_of(first, def);
      auto b = tiles.index_of(second, def);
      if (!a || !b)
        throw std::logic_error("adjacency window restricts outside the collar language");
      pairs.emplace(*a, *b);
    }
    AdjacencyRelation rel;
    rel.depth = n;
    rel.direction = dir;
    rel.pairs.assign(pairs.begin(), pairs.end());
    // Compactness: every class extends on both sides in every direction.
    std::vector<bool> left(tiles.size(), false), right(tiles.size(), false);
    for (const auto& [a, b] : rel.pairs) {
      left[a] = true;
      right[b] = true;
    }
    // Every class must occur on both sides of the relation.  A one-sided
    // class means the window language is not extendable, so the definition
    // does not describe a tiling space in which every tile continues.
    for (std::size_t i = 0; i < tiles.size(); ++i)
      if (!left[i] || !right[i])
        throw std::invalid_argument("collared class " + std::to_string(i) +
                                    " does not extend in direction " + direction_name(dir) +
                                    "; the definition does not describe an extendable tiling");
    return rel;
  };

  std::vector<AdjacencyRelation> out;
  if (def.dimension == 1) {
    out.push_back(relation_for(Direction::Successor));
  } else {
    out.push_back(relation_for(Direction::East));
    out.push_back(relation_for(Direction::North));
  }
  return out;
}

Pattern forget_pattern(const CollaredTile& t) {
  if (t.depth == 0) throw std::invalid_argument("depth-0 classes have no outer ring to drop");
  const std::size_t c = 2 * t.depth - 1;
  if (t.collar.height == 1) return t.collar.sub(0, 1, 1, c);
  return t.collar.sub(1, 1, c, c);
}

CollaredTile forget(const CollaredTile& t, const std::vector<CollaredTile>& parents,
                    const TilingDefinition& def) {
  const Pattern central = forget_pattern(t);
  const auto key = pattern_key(central, def);
  // parents are in canonical order, so a binary search on keys applies.
  auto it = std::lower_bound(parents.begin(), parents.end(), key,
                             [&](const CollaredTile& p, const std::vector<int>& k) {
                               return pattern_key(p.collar, def) < k;
                             });
  if (it == parents.end() || it->collar != central)
    throw std::logic_error("central restriction is not an admissible class one depth down");
  return *it;
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::Successor: return "successor";
    case Direction::East: return "east";
    case Direction::North: return "north";
  }
  return "?";
}

}  // namespace tilecoh
