#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tilecoh {

/// A finite rectangular block of tile labels. Row 0 is the top row; "north"
/// means decreasing row index. 1D patterns have height 1. Coordinates are
/// translation-normalized: the block always starts at the origin, only its
/// content matters.
struct Pattern {
  int dimension = 1;
  std::size_t width = 0;
  std::size_t height = 1;
  std::vector<std::string> labels;  // row-major, height*width entries

  const std::string& at(std::size_t row, std::size_t col) const {
    return labels[row * width + col];
  }
  std::string& at(std::size_t row, std::size_t col) { return labels[row * width + col]; }

  bool operator==(const Pattern& o) const {
    return dimension == o.dimension && width == o.width && height == o.height &&
           labels == o.labels;
  }
  bool operator!=(const Pattern& o) const { return !(*this == o); }

  /// The rectangular sub-block with the given top-left corner.
  Pattern sub(std::size_t row0, std::size_t col0, std::size_t h, std::size_t w) const;
};

/// Distinguishes a plain tile system from its one-point-per-tile shadow:
/// with Discrete symmetry the approximants are finite point sets and only
/// degree-0 cohomology is meaningful; with Continuous symmetry they are
/// full cell complexes of the tiling dimension.
enum class Symmetry { Discrete, Continuous };

struct Substitution1D {
  std::map<std::string, std::vector<std::string>> rules;  // label -> image word
};

struct BlockSubstitution2D {
  std::size_t block_size = 0;               // uniform expansion k >= 2
  std::map<std::string, Pattern> rules;     // label -> k x k block
};

struct AllowedBlocks {
  std::size_t block_width = 0;
  std::size_t block_height = 1;
  std::vector<Pattern> blocks;  // declared to be the full language at this shape
};

struct PeriodicPattern {
  Pattern cell;  // repeats in all directions
};

using Generator = std::variant<Substitution1D, BlockSubstitution2D, AllowedBlocks, PeriodicPattern>;

/// Validated description of a tiling space: label set, geometry mode, and
/// the mechanism generating its language. Immutable after construction.
struct TilingDefinition {
  std::string name;
  int dimension = 1;  // 1 or 2
  std::vector<std::string> alphabet;
  Symmetry symmetry = Symmetry::Continuous;
  Generator generator;

  bool is_substitution() const {
    return std::holds_alternative<Substitution1D>(generator) ||
           std::holds_alternative<BlockSubstitution2D>(generator);
  }
  /// Rank of a label in the declared alphabet order; throws on unknown labels.
  std::size_t rank(const std::string& label) const;
};

/// Raised by parse_definition and validation helpers; `field` names the
/// offending part of the document (for example "generator.rules.b").
class DefinitionError : public std::runtime_error {
public:
  DefinitionError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// Parse a JSON definition document. Rejects malformed syntax, unknown
/// labels, ragged arrays, empty substitution images and non-uniform block
/// expansion, each with a field-level diagnostic.
TilingDefinition parse_definition(const std::string& text);

/// Canonical JSON serialization; parse_definition(serialize_definition(d))
/// reproduces d exactly.
std::string serialize_definition(const TilingDefinition& def);

/// Apply the substitution once: every cell of p is replaced by its image
/// block. 1D output length is the sum of image lengths; 2D output is
/// (k*w) x (k*h). Throws if the generator is not a substitution.
Pattern substitute(const Pattern& p, const TilingDefinition& def);

/// Render a pattern for reports: labels joined (with "," when any alphabet
/// label has several characters), rows joined by "/".
std::string pattern_to_string(const Pattern& p, const TilingDefinition& def);

}  // namespace tilecoh
