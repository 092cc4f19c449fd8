#include "tilecoh/tower.hpp"

#include <sstream>
#include <stdexcept>

namespace tilecoh {
namespace {

bool unimodular(const IntMatrix& b) {
  if (b.rows() != b.cols()) return false;
  const SmithDecomposition s = smith_normal_form(b);
  if (s.rank != b.rows()) return false;
  for (const Int& d : s.diagonal)
    if (d != 1) return false;
  return true;
}

// Product of the step matrices carrying level `from` to level `to`.
IntMatrix composite(const std::vector<IntMatrix>& steps, std::size_t from,
                    std::size_t to) {
  IntMatrix c = steps[from];
  for (std::size_t i = from + 1; i < to; ++i) c = multiply(steps[i], c);
  return c;
}

std::size_t matrix_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

bool is_diagonal(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a.at(i, j) != 0) return false;
  return true;
}

// Z^(#{e=1}) ⊕ Z[1/e] per e >= 2, zero entries dropped; the direct limit
// of Z^r under a fixed diagonal transition.
std::string render_closed(const std::vector<Int>& diag) {
  std::size_t free_part = 0;
  std::vector<Int> inverted;
  for (const Int& d : diag) {
    const Int a = abs(d);
    if (a == 1)
      ++free_part;
    else if (a >= 2)
      inverted.push_back(a);
  }
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " ⊕ ";
    first = false;
  };
  if (free_part == 1) {
    sep();
    out << "Z";
  } else if (free_part > 1) {
    sep();
    out << "Z^" << free_part;
  }
  for (const Int& e : inverted) {
    sep();
    out << "Z[1/" << e << "]";
  }
  if (first) out << "0";
  return out.str();
}

std::string render_raw(const std::vector<Int>& diag, const std::vector<Int>& torsion) {
  std::ostringstream out;
  out << "eventual transition with invariant factors (";
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (i) out << ", ";
    out << diag[i];
  }
  out << ")";
  if (!torsion.empty()) {
    out << " and torsion";
    for (std::size_t i = 0; i < torsion.size(); ++i)
      out << (i ? " ⊕ " : " ") << "Z/" << torsion[i];
  }
  return out.str();
}

std::vector<Int> nonzero_factors(const SmithDecomposition& s) {
  std::vector<Int> out;
  for (const Int& d : s.diagonal)
    if (d != 0) out.push_back(d);
  return out;
}

}  // namespace

const char* tower_class_name(TowerClass c) {
  switch (c) {
    case TowerClass::FinitelyGenerated: return "finitely_generated";
    case TowerClass::EventualTransition: return "eventual_transition";
    default: return "unclassified";
  }
}

const char* transition_kind_name(TransitionKind k) {
  switch (k) {
    case TransitionKind::Stepwise: return "stepwise";
    case TransitionKind::Aligned: return "aligned";
    case TransitionKind::Telescoped: return "telescoped";
    default: return "none";
  }
}

DirectLimitPresentation analyze_tower(const std::vector<GroupMap>& maps,
                                      std::size_t stab_window) {
  if (stab_window < 2)
    throw std::invalid_argument("stabilization window must be at least 2");
  if (maps.size() < stab_window)
    throw std::invalid_argument("tower too short for the stabilization window");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!same_invariants(maps[i].target, maps[i + 1].source))
      throw std::invalid_argument("tower maps do not compose");

  const std::size_t m = maps.size();
  const std::size_t w = stab_window;
  const std::size_t start = m - w;  // first map of the detection window

  DirectLimitPresentation out;
  out.degree = maps.front().source.degree;
  out.groups.push_back(maps.front().source);
  for (const GroupMap& f : maps) {
    out.groups.push_back(f.target);
    out.step_matrices.push_back(f.matrix);
  }

  // Finitely generated: the trailing maps are isomorphisms.
  {
    std::vector<bool> iso(m);
    bool window_iso = true;
    for (std::size_t i = start; i < m; ++i) {
      iso[i] = is_isomorphism(maps[i]);
      window_iso = window_iso && iso[i];
    }
    if (window_iso) {
      std::size_t s = start;
      while (s > 0 && is_isomorphism(maps[s - 1])) --s;
      out.classification = TowerClass::FinitelyGenerated;
      out.stabilization_depth = s + 1;
      out.stable_group = out.groups[s];
      out.rendering = group_to_string(out.stable_group);
      return out;
    }
  }

  const bool constant_window = [&] {
    for (std::size_t i = start; i < m; ++i)
      if (!same_invariants(out.groups[i], out.groups[i + 1])) return false;
    return true;
  }();
  const bool torsion_free_window = [&] {
    for (std::size_t i = start; i <= m; ++i)
      if (!out.groups[i].torsion.empty()) return false;
    return true;
  }();

  // Stepwise: equal presentations, literally equal matrices.
  if (constant_window) {
    const IntMatrix& t = maps[m - 1].matrix;
    bool equal = true;
    for (std::size_t i = start; i + 1 < m; ++i)
      if (maps[i].matrix != t) equal = false;
    if (equal) {
      std::size_t s = start;
      while (s > 0 && same_invariants(out.groups[s - 1], out.groups[s]) &&
             maps[s - 1].matrix == t)
        --s;
      out.classification = TowerClass::EventualTransition;
      out.transition_kind = TransitionKind::Stepwise;
      out.stabilization_depth = s + 1;
      const SmithDecomposition smith = smith_normal_form(t);
      out.transition_diagonal = nonzero_factors(smith);
      out.transition_rank = out.transition_diagonal.size();
      out.transition_torsion = out.groups[m].torsion;
      out.closed_form = is_diagonal(t) && out.transition_torsion.empty();
      if (out.closed_form) {
        // The limit reads off the repeated matrix itself, not its Smith
        // form: conjugating a constant tower needs one basis for all
        // levels, which Smith's U and V do not provide.
        std::vector<Int> diag;
        for (std::size_t i = 0; i < std::min(t.rows(), t.cols()); ++i)
          diag.push_back(t.at(i, i));
        out.rendering = render_closed(diag);
      } else {
        out.rendering = render_raw(out.transition_diagonal, out.transition_torsion);
      }
      return out;
    }
  }

  // Aligned: one unimodular basis change per level turns every window map
  // into the Smith form of the last one. Built backwards; each earlier
  // basis must come out integral and unimodular.
  if (constant_window && torsion_free_window) {
    const SmithDecomposition last = smith_normal_form(maps[m - 1].matrix);
    const std::size_t g = out.groups[m].free_rank;
    if (last.rank == g && g > 0) {
      std::vector<IntMatrix> bases(w + 1);  // window levels start..m
      bases[w] = last.u;
      bases[w - 1] = last.v_inv;
      bool ok = true;
      for (std::size_t i = m - 2; ok && i + 1 > start; --i) {
        const IntMatrix prod = multiply(bases[i + 1 - start], maps[i].matrix);
        IntMatrix b(g, g);
        for (std::size_t r = 0; ok && r < g; ++r) {
          for (std::size_t c = 0; c < g; ++c) {
            if (prod.at(r, c) % last.diagonal[r] != 0) {
              ok = false;
              break;
            }
            b.at(r, c) = prod.at(r, c) / last.diagonal[r];
          }
        }
        if (ok) ok = unimodular(b);
        if (ok) bases[i - start] = std::move(b);
      }
      if (ok) {
        out.classification = TowerClass::EventualTransition;
        out.transition_kind = TransitionKind::Aligned;
        out.stabilization_depth = start + 1;
        out.transition_diagonal = last.diagonal;
        out.transition_rank = last.rank;
        out.basis_changes = std::move(bases);
        out.closed_form = true;
        out.rendering = render_closed(out.transition_diagonal);
        return out;
      }
    }
  }

  // Telescoped: single steps wobble (ranks may even spike) but the
  // composite across the whole tower has settled. Requires a genuine
  // kernel somewhere, so a merely growing injective tower stays
  // unclassified, and a rank plateau: dropping one level from either end
  // must not change the composite's rank. Reports the invariants of the
  // surviving core; levels and factors outside it are not claimed.
  {
    bool torsion_free_tower = true;
    for (const auto& g : out.groups)
      if (!g.torsion.empty()) torsion_free_tower = false;
    bool kernel_step = false;
    for (const GroupMap& f : maps)
      if (matrix_rank(f.matrix) < f.source.generator_count()) kernel_step = true;
    if (torsion_free_tower && kernel_step) {
      const SmithDecomposition full =
          smith_normal_form(composite(out.step_matrices, 0, m));
      const bool plateau =
          full.rank == matrix_rank(composite(out.step_matrices, 1, m)) &&
          full.rank == matrix_rank(composite(out.step_matrices, 0, m - 1));
      if (plateau) {
        out.classification = TowerClass::EventualTransition;
        out.transition_kind = TransitionKind::Telescoped;
        out.stabilization_depth = 1;
        out.transition_diagonal = nonzero_factors(full);
        out.transition_rank = out.transition_diagonal.size();
        out.closed_form = true;
        out.rendering = render_closed(out.transition_diagonal);
        return out;
      }
    }
  }

  out.classification = TowerClass::Unclassified;
  out.rendering = "unclassified";
  return out;
}

}  // namespace tilecoh
