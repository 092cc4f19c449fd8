#include "tilecoh/language.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tilecoh {

namespace {

constexpr std::size_t kClosureCap = 32;
constexpr std::size_t kCellBudget = 4'000'000;  // pooled supertile cells per order

// Sorted unique keys drive everything: determinism and set comparison.
struct KeyedSet {
  std::set<std::vector<int>> keys;
  std::map<std::vector<int>, Pattern> patterns;

  void insert(std::vector<int> key, const Pattern& p) {
    if (keys.insert(key).second) patterns.emplace(std::move(key), p);
  }
  bool operator==(const KeyedSet& o) const { return keys == o.keys; }
};

WindowLanguage finish(const WindowShape& shape, const KeyedSet& set,
                      LanguageProvenance provenance, std::size_t closure_order) {
  WindowLanguage lang;
  lang.shape = shape;
  lang.provenance = provenance;
  lang.closure_order = closure_order;
  for (const auto& [key, pat] : set.patterns) {
    lang.keys.push_back(key);
    lang.patterns.push_back(pat);
  }
  return lang;
}

void collect_windows(const Pattern& p, const WindowShape& shape,
                     const TilingDefinition& def, KeyedSet& out) {
  if (p.width < shape.width || p.height < shape.height) return;
  for (std::size_t r = 0; r + shape.height <= p.height; ++r)
    for (std::size_t c = 0; c + shape.width <= p.width; ++c) {
      Pattern w = p.sub(r, c, shape.height, shape.width);
      out.insert(pattern_key(w, def), w);
    }
}

// Windows of the doubly infinite periodic repetition of `cell`: one per
// translation class, read with wraparound.
void collect_periodic_windows(const Pattern& cell, const WindowShape& shape,
                              const TilingDefinition& def, KeyedSet& out) {
  for (std::size_t r0 = 0; r0 < cell.height; ++r0)
    for (std::size_t c0 = 0; c0 < cell.width; ++c0) {
      Pattern w;
      w.dimension = cell.dimension;
      w.width = shape.width;
      w.height = shape.height;
      w.labels.reserve(shape.width * shape.height);
      for (std::size_t r = 0; r < shape.height; ++r)
        for (std::size_t c = 0; c < shape.width; ++c)
          w.labels.push_back(cell.at((r0 + r) % cell.height, (c0 + c) % cell.width));
      out.insert(pattern_key(w, def), w);
    }
}

std::vector<Pattern> to_sorted_patterns(const KeyedSet& set) {
  std::vector<Pattern> out;
  out.reserve(set.patterns.size());
  for (const auto& [key, pat] : set.patterns) out.push_back(pat);
  return out;
}

WindowLanguage substitution_closure(const TilingDefinition& def, const WindowShape& shape) {
  // Supertiles of every letter are pooled; the window set of the pool is
  // nondecreasing in the order, so two consecutive equal sets mean closure.
  std::map<std::string, Pattern> supers;
  for (const auto& label : def.alphabet) {
    Pattern seed;
    seed.dimension = def.dimension;
    seed.width = 1;
    seed.height = 1;
    seed.labels = {label};
    supers[label] = seed;
  }
  const bool one_dimensional = std::holds_alternative<Substitution1D>(def.generator);
  KeyedSet prev;
  KeyedSet second_last;
  bool have_prev = false;
  std::size_t prev_cells = 0;
  for (std::size_t order = 1; order <= kClosureCap; ++order) {
    std::size_t cells = 0;
    for (auto& [label, super] : supers) {
      super = substitute(super, def);
      cells += super.labels.size();
    }
    if (cells > kCellBudget)
      throw ResourceLimitError("supertile pool exceeds the cell budget before closure");
    KeyedSet cur;
    for (const auto& label : def.alphabet) collect_windows(supers.at(label), shape, def, cur);
    if (have_prev && cur == prev && !cur.keys.empty())
      return finish(shape, cur, LanguageProvenance::SubstitutionClosure, order);
    if (one_dimensional) {
      // Substitutions whose supertiles stop changing describe periodic
      // words; their windows come from the periodic repetition instead.
      bool fixed = true;
      for (const auto& label : def.alphabet)
        if (substitute(supers.at(label), def) != supers.at(label)) {
          fixed = false;
          break;
        }
      if (fixed) {
        KeyedSet cyc;
        for (const auto& label : def.alphabet)
          collect_periodic_windows(supers.at(label), shape, def, cyc);
        return finish(shape, cyc, LanguageProvenance::SubstitutionClosure, order);
      }
    }
    if (have_prev && cur.keys.empty() && prev.keys.empty() && cells == prev_cells) {
      // No windows, and the supertiles stopped growing: the window will
      // never fit. (Empty sets alone are fine while supertiles still grow.)
      throw UnsupportedWindowError("window does not fit in any supertile");
    }
    second_last = std::move(prev);
    prev = std::move(cur);
    prev_cells = cells;
    have_prev = true;
  }
  // Cap reached without two equal consecutive sets; attach the last two.
  throw ClosureError(shape, kClosureCap, to_sorted_patterns(second_last),
                     to_sorted_patterns(prev));
}

}  // namespace

std::vector<int> pattern_key(const Pattern& p, const TilingDefinition& def) {
  std::vector<int> key;
  key.reserve(p.labels.size());
  for (const auto& label : p.labels) key.push_back(static_cast<int>(def.rank(label)));
  return key;
}

std::optional<std::size_t> WindowLanguage::index_of_key(const std::vector<int>& key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys.begin());
}

std::optional<std::size_t> WindowLanguage::index_of(const Pattern& p,
                                                    const TilingDefinition& def) const {
  return index_of_key(pattern_key(p, def));
}

WindowLanguage factor_language(const TilingDefinition& def, const WindowShape& shape) {
  if (shape.width == 0 || shape.height == 0)
    throw UnsupportedWindowError("window shape must be positive");
  if (def.dimension == 1 && shape.height != 1)
    throw UnsupportedWindowError("1D windows must have height 1");

  if (const auto* per = std::get_if<PeriodicPattern>(&def.generator)) {
    KeyedSet out;
    collect_periodic_windows(per->cell, shape, def, out);
    return finish(shape, out, LanguageProvenance::Periodic, 0);
  }
  if (const auto* ab = std::get_if<AllowedBlocks>(&def.generator)) {
    if (shape.width > ab->block_width || shape.height > ab->block_height)
      throw UnsupportedWindowError("window exceeds the declared block shape");
    KeyedSet out;
    for (const auto& block : ab->blocks) collect_windows(block, shape, def, out);
    return finish(shape, out, LanguageProvenance::Explicit, 0);
  }
  return substitution_closure(def, shape);
}

}  // namespace tilecoh
