#pragma once

#include "tilecoh/cohomology.hpp"

#include <string>
#include <vector>

namespace tilecoh {

enum class TowerClass { FinitelyGenerated, EventualTransition, Unclassified };

/// How an eventual transition was detected, strongest first. Stepwise:
/// window maps are literally equal matrices between equal presentations.
/// Aligned: equal after a recorded unimodular change of basis per level,
/// which makes every window map the Smith form of the last one.
/// Telescoped: torsion-free tower whose single steps vary but whose
/// full composite has settled, detected by a rank plateau under trims at
/// both ends; the reported invariants are those of the composite.
enum class TransitionKind { None, Stepwise, Aligned, Telescoped };

/// Classified cohomology tower in one degree. `groups` and `step_matrices`
/// always carry the raw tower; the remaining fields depend on the class.
/// `stabilization_depth` is the 1-based tower level where the detected
/// regime starts (0 when unclassified).
///
/// For eventual transitions the divisibility report is the Smith form of
/// the transition: `transition_diagonal` lists its nonzero invariant
/// factors e_1 | e_2 | ..., and every e_i >= 2 signals a factor of the
/// limit on which multiplication by e_i is invertible. `rendering` names
/// the limit in closed form (Z^a ⊕ Z[1/e] ⊕ ...) only when the transition
/// is diagonal in the chosen basis and torsion-free; otherwise it reports
/// the invariants without naming a group.
struct DirectLimitPresentation {
  std::size_t degree = 0;
  std::vector<AbelianGroupPresentation> groups;
  std::vector<IntMatrix> step_matrices;

  TowerClass classification = TowerClass::Unclassified;
  std::size_t stabilization_depth = 0;
  AbelianGroupPresentation stable_group;  // finitely generated case

  TransitionKind transition_kind = TransitionKind::None;
  std::size_t transition_rank = 0;
  std::vector<Int> transition_diagonal;
  std::vector<Int> transition_torsion;
  std::vector<IntMatrix> basis_changes;  // aligned case, one per window level
  bool closed_form = false;

  std::string rendering;
};

const char* tower_class_name(TowerClass c);
const char* transition_kind_name(TransitionKind k);

/// Classify the tower presented by consecutive maps (maps[i] goes from
/// level i to level i+1). Requires at least stab_window maps and
/// stab_window >= 2; consecutive maps must share their middle group.
/// The cascade tries finitely-generated, then the three transition
/// detectors in the order above, and falls back to unclassified with the
/// raw tower attached. Never claims a closed form it cannot justify.
DirectLimitPresentation analyze_tower(const std::vector<GroupMap>& maps,
                                      std::size_t stab_window);

}  // namespace tilecoh
