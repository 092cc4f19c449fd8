#pragma once

#include "tilecoh/approximant.hpp"
#include "tilecoh/matrix.hpp"
#include "tilecoh/smith.hpp"

#include <string>
#include <vector>

namespace tilecoh {

/// One cohomology group H^k with integer coefficients, presented as
/// Z^free_rank plus one cyclic summand Z/e per torsion entry, free
/// generators first. `torsion` is the nontrivial invariant factor chain:
/// every entry is at least 2 and divides the next.
///
/// `generator_lifts` holds one cocycle representative per generator as a
/// column, normalized so the first nonzero entry is positive. The
/// remaining fields record the change of basis needed to express an
/// arbitrary cocycle in these generators; `coords` consumes them.
struct AbelianGroupPresentation {
  std::size_t degree = 0;
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  IntMatrix generator_lifts;

  IntMatrix vinv;                  // cochain coordinates to kernel-adapted basis
  std::size_t kernel_start = 0;    // coordinates below this vanish on cocycles
  IntMatrix u2;                    // kernel coordinates to quotient-adapted basis
  std::vector<std::size_t> order;  // generator position to quotient coordinate
  std::vector<Int> signs;          // +1 or -1 applied per generator
  std::vector<Int> ediag;          // 0 for free generators, the invariant factor otherwise

  std::size_t generator_count() const { return free_rank + torsion.size(); }
};

/// H^degree of the complex, 0 <= degree <= dimension. Cochains are integer
/// vectors indexed by the cells of that degree; the coboundary is the
/// transpose of the boundary one dimension up.
AbelianGroupPresentation cohomology(const CWComplex& k, std::size_t degree);

/// Coordinates of a cocycle in the presentation's generators. Torsion
/// coordinates are reduced into [0, e). Throws if the vector has the wrong
/// length or is not a cocycle.
std::vector<Int> coords(const AbelianGroupPresentation& g, const std::vector<Int>& cocycle);

/// Same abstract group: equal free rank and equal torsion chain.
bool same_invariants(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b);

/// "0", "Z", "Z^2", "Z^2 ⊕ Z/2 ⊕ Z/4", in that spelling.
std::string group_to_string(const AbelianGroupPresentation& g);

/// Homomorphism between presented groups: column j holds the target
/// coordinates of the image of source generator j, torsion rows reduced
/// into [0, e).
struct GroupMap {
  AbelianGroupPresentation source;
  AbelianGroupPresentation target;
  IntMatrix matrix;
};

/// Pullback on cohomology. Contravariant: for a cellular map K -> L this
/// is H^degree(L) -> H^degree(K), so `source` is the group of f.target.
GroupMap induced_cohomology_map(const CellularMap& f, std::size_t degree);

/// Same pullback with the two presentations supplied by the caller, for
/// towers where each level's cohomology is shared by consecutive maps.
/// `source` must present H^degree(f.target) and `target` H^degree(f.source)
/// exactly as cohomology() returns them; anything else is undefined.
GroupMap induced_cohomology_map(const CellularMap& f, std::size_t degree,
                                const AbelianGroupPresentation& source,
                                const AbelianGroupPresentation& target);

/// outer after inner; inner.target and outer.source must present the same
/// group.
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

/// True iff the map is invertible. Source and target must be abstractly
/// equal; the map is then invertible iff it is surjective, which the Smith
/// form of the matrix augmented by the target relations detects.
bool is_isomorphism(const GroupMap& m);

}  // namespace tilecoh
