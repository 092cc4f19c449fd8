#include "tilecoh/collaring.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace tilecoh;

namespace {

TilingDefinition fibonacci() {
  return parse_definition(R"({
    "name": "fibonacci", "dimension": 1, "alphabet": ["a", "b"],
    "generator": {"type": "substitution_1d", "rules": {"a": "ab", "b": "a"}}})");
}

TilingDefinition table() {
  return parse_definition(R"({
    "name": "table", "dimension": 2, "alphabet": ["a", "b"],
    "generator": {"type": "block_substitution_2d", "rules": {
      "a": [["a", "b"], ["b", "a"]],
      "b": [["b", "b"], ["a", "b"]]}}})");
}

// Each relation must mention every class on both sides; pairs must be
// admissible, sorted, duplicate-free.
void check_relation_shape(const AdjacencyRelation& rel, std::size_t classes) {
  std::set<std::size_t> left, right;
  CHECK(std::is_sorted(rel.pairs.begin(), rel.pairs.end()));
  CHECK(std::adjacent_find(rel.pairs.begin(), rel.pairs.end()) == rel.pairs.end());
  for (const auto& [s, t] : rel.pairs) {
    CHECK(s < classes);
    CHECK(t < classes);
    left.insert(s);
    right.insert(t);
  }
  CHECK(left.size() == classes);
  CHECK(right.size() == classes);
}

}  // namespace

TEST_CASE("fibonacci collar counts are 2n+2") {
  const TilingDefinition def = fibonacci();
  CHECK(collar(def, 0).size() == 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto tiles = collar(def, n);
    CHECK(tiles.size() == 2 * n + 2);
    CHECK(tiles.size() == oracle::word_windows(def, 2 * n + 1, 16).size());
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      CHECK(tiles[i].id == i);
      CHECK(tiles[i].depth == n);
      CHECK(tiles[i].collar.width == 2 * n + 1);
      CHECK(tiles[i].center == tiles[i].collar.at(0, n));
    }
  }
}

TEST_CASE("fibonacci depth-1 successor pairs") {
  const TilingDefinition def = fibonacci();
  const auto rels = adjacency(def, 1);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].direction == Direction::Successor);
  CHECK(rels[0].depth == 1);
  const std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 1}, {1, 2}, {1, 3}, {2, 0}, {3, 1}};
  CHECK(rels[0].pairs == expected);
}

TEST_CASE("adjacency mentions every class on both sides at every depth") {
  for (const TilingDefinition& def : {fibonacci(), table()}) {
    const std::size_t max_n = def.dimension == 1 ? 4 : 2;
    for (std::size_t n = 0; n <= max_n; ++n) {
      const std::size_t classes = collar(def, n).size();
      const auto rels = adjacency(def, n);
      REQUIRE(rels.size() == (def.dimension == 1 ? 1 : 2));
      for (const auto& rel : rels) check_relation_shape(rel, classes);
    }
  }
}

TEST_CASE("2D relations come as east then north") {
  const auto rels = adjacency(table(), 1);
  REQUIRE(rels.size() == 2);
  CHECK(rels[0].direction == Direction::East);
  CHECK(rels[1].direction == Direction::North);
  CHECK(std::string(direction_name(rels[0].direction)) == "east");
  CHECK(std::string(direction_name(rels[1].direction)) == "north");
  CHECK(std::string(direction_name(Direction::Successor)) == "successor");
}

TEST_CASE("forget drops the outer ring and is onto the parent classes") {
  for (const TilingDefinition& def : {fibonacci(), table()}) {
    const std::size_t max_n = def.dimension == 1 ? 4 : 2;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto tiles = collar(def, n);
      const auto parents = collar(def, n - 1);
      std::set<std::size_t> hit;
      for (const auto& t : tiles) {
        const Pattern central = forget_pattern(t);
        const CollaredTile parent = forget(t, parents, def);
        CHECK(parent.collar == central);
        CHECK(parent.center == t.center);
        CHECK(parent.depth == n - 1);
        hit.insert(parent.id);
      }
      CHECK(hit.size() == parents.size());
    }
  }
}

TEST_CASE("forget is compatible with adjacency") {
  for (const TilingDefinition& def : {fibonacci(), table()}) {
    const std::size_t max_n = def.dimension == 1 ? 4 : 2;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto tiles = collar(def, n);
      const auto parents = collar(def, n - 1);
      std::vector<std::size_t> down(tiles.size());
      for (const auto& t : tiles) down[t.id] = forget(t, parents, def).id;
      const auto fine = adjacency(def, n);
      const auto coarse = adjacency(def, n - 1);
      for (std::size_t r = 0; r < fine.size(); ++r) {
        std::set<std::pair<std::size_t, std::size_t>> allowed(coarse[r].pairs.begin(),
                                                              coarse[r].pairs.end());
        for (const auto& [s, t] : fine[r].pairs)
          CHECK(allowed.count({down[s], down[t]}) == 1);
      }
    }
  }
}

TEST_CASE("square lattice collapses to one class per depth") {
  const TilingDefinition def = parse_definition(R"({
    "name": "grid", "dimension": 2, "alphabet": ["a"],
    "generator": {"type": "periodic", "pattern": [["a"]]}})");
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(collar(def, n).size() == 1);
    const auto rels = adjacency(def, n);
    REQUIRE(rels.size() == 2);
    for (const auto& rel : rels)
      CHECK(rel.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
  }
}

TEST_CASE("non-extendable languages are rejected at adjacency time") {
  const TilingDefinition def = parse_definition(R"({
    "name": "slow", "dimension": 1, "alphabet": ["a", "b", "c"],
    "generator": {"type": "substitution_1d",
                  "rules": {"a": "ab", "b": "cb", "c": "c"}}})");
  CHECK(collar(def, 1).size() > 0);
  CHECK_THROWS_AS(adjacency(def, 1), std::invalid_argument);
}
