#pragma once

#include "tilecoh/collaring.hpp"
#include "tilecoh/matrix.hpp"
#include "tilecoh/tiling.hpp"

#include <string>
#include <vector>

namespace tilecoh {

/// Finite CW complex with signed integer boundary matrices. Cells of each
/// dimension are ordered deterministically and tagged with their origin
/// (collared-tile window for top cells, representative face slot below).
///
/// Boundary conventions: 1D edges run left to right, so an edge's boundary
/// is head minus tail. 2D squares use edges oriented toward increasing
/// coordinate (south/north edges point east, west/east edges point north)
/// and the square's boundary is south + east - north - west, the
/// counterclockwise traversal in those orientations. The composite of two
/// boundaries is identically zero; construction verifies this.
struct CWComplex {
  int dimension = 0;
  std::vector<std::vector<std::string>> cell_tags;  // [degree][cell]
  std::vector<IntMatrix> boundaries;  // boundaries[k-1]: cells(k-1) x cells(k)

  std::size_t cell_count(std::size_t degree) const {
    return degree < cell_tags.size() ? cell_tags[degree].size() : 0;
  }
  const IntMatrix& boundary_matrix(std::size_t degree) const {
    return boundaries.at(degree - 1);
  }
  long long euler_characteristic() const;

  /// Face-slot class lookups recorded during the gluing, used to transport
  /// cells along forgetful maps. Slot numbering: 1D vertex slots 2t
  /// (left) and 2t+1 (right) per edge t; 2D edge slots 4t+{S,E,N,W} and
  /// vertex slots 4t+{SW,SE,NW,NE} per square t, in that order.
  std::vector<std::size_t> vertex_class_of_slot;
  std::vector<std::size_t> edge_class_of_slot;  // 2D only
};

/// Cell-to-cell assignment between complexes, one table per degree. All
/// identifications are translations, so every assignment carries sign +1
/// and the induced chain map is the plain 0/1 incidence of the tables.
/// Invariant (verified at construction): boundaries commute with the
/// assignment.
struct CellularMap {
  CWComplex source;
  CWComplex target;
  std::vector<std::vector<std::size_t>> assignment;  // [degree][source cell]

  /// The chain-map matrix of one degree: entry (t, s) is 1 iff the
  /// assignment sends source cell s to target cell t.
  IntMatrix chain_matrix(std::size_t degree) const;
};

/// Assemble the depth-n approximant: one top cell per collared tile, face
/// slots identified along admissible adjacencies, closed transitively.
/// With Discrete symmetry the result is the 0-dimensional complex with one
/// point per class and no gluing.
CWComplex build_approximant(const TilingDefinition& def, std::size_t n);

/// The map from the depth-n approximant to depth n-1 that forgets the
/// outermost ring: top cells map by central restriction, face classes to
/// the classes of their image slots. Surjective in every degree.
CellularMap forgetful_map(const TilingDefinition& def, std::size_t n);

/// Compose assignments: g after f, where f.target and g.source agree.
CellularMap compose(const CellularMap& g, const CellularMap& f);

/// The 1-skeleton as a DOT directed multigraph, deterministically ordered.
std::string export_dot(const CWComplex& k);

}  // namespace tilecoh
