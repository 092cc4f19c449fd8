#pragma once

#include "tilecoh/tiling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tilecoh {

/// Window dimensions: 1D windows have height 1.
struct WindowShape {
  std::size_t width = 0;
  std::size_t height = 1;
  bool operator==(const WindowShape& o) const {
    return width == o.width && height == o.height;
  }
};

enum class LanguageProvenance { SubstitutionClosure, Explicit, Periodic };

/// All admissible patterns of one window shape, sorted in canonical order
/// (lexicographic on row-major label sequences under the alphabet order).
/// Invariant: nonempty, duplicate-free, and consistent under sub-window
/// restriction with the languages of smaller shapes.
struct WindowLanguage {
  WindowShape shape;
  std::vector<Pattern> patterns;
  std::vector<std::vector<int>> keys;  // canonical comparison keys, parallel
  LanguageProvenance provenance = LanguageProvenance::Explicit;
  std::size_t closure_order = 0;  // supertile order at detection, closure only

  std::size_t size() const { return patterns.size(); }
  /// Index of a pattern in canonical order, if admissible.
  std::optional<std::size_t> index_of(const Pattern& p, const TilingDefinition& def) const;
  std::optional<std::size_t> index_of_key(const std::vector<int>& key) const;
};

class LanguageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Window enumeration did not reach two consecutive equal window sets
/// within the supertile-order cap. Carries the last two sets for
/// diagnostics and partial reports.
class ClosureError : public LanguageError {
public:
  ClosureError(WindowShape shape, std::size_t cap, std::vector<Pattern> previous,
               std::vector<Pattern> last)
      : LanguageError("window-set closure not reached within " + std::to_string(cap) +
                      " supertile orders"),
        shape_(shape),
        previous_(std::move(previous)),
        last_(std::move(last)) {}
  const WindowShape& shape() const { return shape_; }
  const std::vector<Pattern>& previous_set() const { return previous_; }
  const std::vector<Pattern>& last_set() const { return last_; }

private:
  WindowShape shape_;
  std::vector<Pattern> previous_, last_;
};

/// The requested shape cannot be produced by this generator (larger than
/// the declared blocks, or larger than any supertile ever gets).
class UnsupportedWindowError : public LanguageError {
public:
  using LanguageError::LanguageError;
};

/// Supertile growth exceeded the in-memory budget before closure.
class ResourceLimitError : public LanguageError {
public:
  using LanguageError::LanguageError;
};

/// Enumerate the admissible patterns of the given shape. For substitutions
/// this inspects supertiles of increasing order until the window set is
/// stable for two consecutive orders (hard cap 32 orders); substitutions
/// whose supertiles stop changing are treated as periodic words. Periodic
/// generators contribute the translates of the repeating cell;
/// allowed-block generators contribute every sub-window of the declared
/// blocks. Deterministic: the result depends only on def and shape.
WindowLanguage factor_language(const TilingDefinition& def, const WindowShape& shape);

/// Canonical comparison key of a pattern (alphabet ranks, row-major).
std::vector<int> pattern_key(const Pattern& p, const TilingDefinition& def);

}  // namespace tilecoh
