#include "tilecoh/tiling.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace tilecoh {

using nlohmann::json;

Pattern Pattern::sub(std::size_t row0, std::size_t col0, std::size_t h, std::size_t w) const {
  Pattern out;
  out.dimension = dimension;
  out.width = w;
  out.height = h;
  out.labels.reserve(h * w);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) out.labels.push_back(at(row0 + r, col0 + c));
  return out;
}

std::size_t TilingDefinition::rank(const std::string& label) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == label) return i;
  throw DefinitionError("alphabet", "unknown label '" + label + "'");
}

namespace {

bool single_char_alphabet(const std::vector<std::string>& alphabet) {
  for (const auto& a : alphabet)
    if (a.size() != 1) return false;
  return true;
}

// A word is either a string (one character per label, only valid when the
// whole alphabet is single-character) or an array of label strings.
std::vector<std::string> parse_word(const json& j, const std::string& field,
                                    const std::vector<std::string>& alphabet) {
  std::vector<std::string> out;
  if (j.is_string()) {
    if (!single_char_alphabet(alphabet))
      throw DefinitionError(field, "string shorthand needs a single-character alphabet");
    for (char ch : j.get<std::string>()) out.emplace_back(1, ch);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_string()) throw DefinitionError(field, "labels must be strings");
      out.push_back(e.get<std::string>());
    }
  } else {
    throw DefinitionError(field, "expected a string or an array of labels");
  }
  return out;
}

void check_labels(const std::vector<std::string>& word, const std::string& field,
                  const std::set<std::string>& alphabet) {
  for (const auto& l : word)
    if (!alphabet.count(l)) throw DefinitionError(field, "unknown label '" + l + "'");
}

// Rectangular array of labels: array of rows, row 0 = top.
Pattern parse_array(const json& j, const std::string& field, int dimension,
                    const std::vector<std::string>& alphabet,
                    const std::set<std::string>& alphaset) {
  Pattern p;
  p.dimension = dimension;
  if (dimension == 1) {
    auto word = parse_word(j, field, alphabet);
    if (word.empty()) throw DefinitionError(field, "empty array");
    check_labels(word, field, alphaset);
    p.width = word.size();
    p.height = 1;
    p.labels = std::move(word);
    return p;
  }
  if (!j.is_array() || j.empty()) throw DefinitionError(field, "expected a nonempty array of rows");
  std::size_t width = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto row = parse_word(j[r], field, alphabet);
    if (row.empty()) throw DefinitionError(field, "empty row");
    if (r == 0)
      width = row.size();
    else if (row.size() != width)
      throw DefinitionError(field, "ragged array");
    check_labels(row, field, alphaset);
    p.labels.insert(p.labels.end(), row.begin(), row.end());
  }
  p.width = width;
  p.height = j.size();
  return p;
}

json word_to_json(const std::vector<std::string>& word) {
  json arr = json::array();
  for (const auto& l : word) arr.push_back(l);
  return arr;
}

json pattern_to_json(const Pattern& p) {
  if (p.dimension == 1) return word_to_json(p.labels);
  json rows = json::array();
  for (std::size_t r = 0; r < p.height; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < p.width; ++c) row.push_back(p.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TilingDefinition parse_definition(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DefinitionError("document", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DefinitionError("document", "expected a JSON object");

  TilingDefinition def;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw DefinitionError("name", "required string");
  def.name = doc["name"].get<std::string>();

  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw DefinitionError("dimension", "required integer");
  def.dimension = doc["dimension"].get<int>();
  if (def.dimension != 1 && def.dimension != 2)
    throw DefinitionError("dimension", "must be 1 or 2");

  if (!doc.contains("alphabet") || !doc["alphabet"].is_array() || doc["alphabet"].empty())
    throw DefinitionError("alphabet", "required nonempty array");
  std::set<std::string> seen;
  for (const auto& e : doc["alphabet"]) {
    if (!e.is_string() || e.get<std::string>().empty())
      throw DefinitionError("alphabet", "labels must be nonempty strings");
    auto label = e.get<std::string>();
    if (!seen.insert(label).second)
      throw DefinitionError("alphabet", "duplicate label '" + label + "'");
    def.alphabet.push_back(label);
  }

  if (doc.contains("symmetry")) {
    if (!doc["symmetry"].is_string()) throw DefinitionError("symmetry", "expected a string");
    auto s = doc["symmetry"].get<std::string>();
    if (s == "discrete")
      def.symmetry = Symmetry::Discrete;
    else if (s == "continuous")
      def.symmetry = Symmetry::Continuous;
    else
      throw DefinitionError("symmetry", "must be 'discrete' or 'continuous'");
  }

  if (!doc.contains("generator") || !doc["generator"].is_object())
    throw DefinitionError("generator", "required object");
  const json& gen = doc["generator"];
  if (!gen.contains("type") || !gen["type"].is_string())
    throw DefinitionError("generator.type", "required string");
  const auto type = gen["type"].get<std::string>();

  if (type == "substitution_1d") {
    if (def.dimension != 1)
      throw DefinitionError("generator.type", "substitution_1d requires dimension 1");
    if (!gen.contains("rules") || !gen["rules"].is_object())
      throw DefinitionError("generator.rules", "required object");
    Substitution1D sub;
    for (const auto& label : def.alphabet) {
      const std::string field = "generator.rules." + label;
      if (!gen["rules"].contains(label)) throw DefinitionError(field, "missing rule");
      auto word = parse_word(gen["rules"][label], field, def.alphabet);
      if (word.empty()) throw DefinitionError(field, "empty substitution image");
      check_labels(word, field, seen);
      sub.rules[label] = std::move(word);
    }
    for (auto it = gen["rules"].begin(); it != gen["rules"].end(); ++it)
      if (!seen.count(it.key()))
        throw DefinitionError("generator.rules." + it.key(), "rule for unknown label");
    def.generator = std::move(sub);
  } else if (type == "block_substitution_2d") {
    if (def.dimension != 2)
      throw DefinitionError("generator.type", "block_substitution_2d requires dimension 2");
    if (!gen.contains("rules") || !gen["rules"].is_object())
      throw DefinitionError("generator.rules", "required object");
    BlockSubstitution2D sub;
    for (const auto& label : def.alphabet) {
      const std::string field = "generator.rules." + label;
      if (!gen["rules"].contains(label)) throw DefinitionError(field, "missing rule");
      Pattern block = parse_array(gen["rules"][label], field, 2, def.alphabet, seen);
      if (block.width != block.height)
        throw DefinitionError(field, "image block must be square");
      if (sub.block_size == 0)
        sub.block_size = block.width;
      else if (block.width != sub.block_size)
        throw DefinitionError(field, "non-uniform expansion");
      sub.rules[label] = std::move(block);
    }
    if (sub.block_size < 2) throw DefinitionError("generator.rules", "expansion must be k >= 2");
    for (auto it = gen["rules"].begin(); it != gen["rules"].end(); ++it)
      if (!seen.count(it.key()))
        throw DefinitionError("generator.rules." + it.key(), "rule for unknown label");
    def.generator = std::move(sub);
  } else if (type == "allowed_blocks") {
    if (!gen.contains("blocks") || !gen["blocks"].is_array() || gen["blocks"].empty())
      throw DefinitionError("generator.blocks", "required nonempty array");
    AllowedBlocks ab;
    for (std::size_t i = 0; i < gen["blocks"].size(); ++i) {
      const std::string field = "generator.blocks[" + std::to_string(i) + "]";
      Pattern b = parse_array(gen["blocks"][i], field, def.dimension, def.alphabet, seen);
      if (i == 0) {
        ab.block_width = b.width;
        ab.block_height = b.height;
      } else if (b.width != ab.block_width || b.height != ab.block_height) {
        throw DefinitionError(field, "blocks must share one shape");
      }
      ab.blocks.push_back(std::move(b));
    }
    def.generator = std::move(ab);
  } else if (type == "periodic") {
    if (!gen.contains("pattern"))
      throw DefinitionError("generator.pattern", "required");
    PeriodicPattern per;
    per.cell = parse_array(gen["pattern"], "generator.pattern", def.dimension, def.alphabet, seen);
    def.generator = std::move(per);
  } else {
    throw DefinitionError("generator.type", "unknown type '" + type + "'");
  }
  return def;
}

std::string serialize_definition(const TilingDefinition& def) {
  json doc;
  doc["name"] = def.name;
  doc["dimension"] = def.dimension;
  doc["alphabet"] = word_to_json(def.alphabet);
  doc["symmetry"] = def.symmetry == Symmetry::Discrete ? "discrete" : "continuous";
  json gen;
  if (const auto* s = std::get_if<Substitution1D>(&def.generator)) {
    gen["type"] = "substitution_1d";
    json rules;
    for (const auto& [label, word] : s->rules) rules[label] = word_to_json(word);
    gen["rules"] = rules;
  } else if (const auto* b = std::get_if<BlockSubstitution2D>(&def.generator)) {
    gen["type"] = "block_substitution_2d";
    json rules;
    for (const auto& [label, block] : b->rules) rules[label] = pattern_to_json(block);
    gen["rules"] = rules;
  } else if (const auto* a = std::get_if<AllowedBlocks>(&def.generator)) {
    gen["type"] = "allowed_blocks";
    json blocks = json::array();
    for (const auto& block : a->blocks) blocks.push_back(pattern_to_json(block));
    gen["blocks"] = blocks;
  } else {
    const auto& p = std::get<PeriodicPattern>(def.generator);
    gen["type"] = "periodic";
    gen["pattern"] = pattern_to_json(p.cell);
  }
  doc["generator"] = gen;
  return doc.dump(2) + "\n";
}

Pattern substitute(const Pattern& p, const TilingDefinition& def) {
  if (const auto* s = std::get_if<Substitution1D>(&def.generator)) {
    Pattern out;
    out.dimension = 1;
    out.height = 1;
    for (const auto& label : p.labels) {
      auto it = s->rules.find(label);
      if (it == s->rules.end())
        throw DefinitionError("pattern", "label '" + label + "' has no rule");
      out.labels.insert(out.labels.end(), it->second.begin(), it->second.end());
    }
    out.width = out.labels.size();
    return out;
  }
  if (const auto* b = std::get_if<BlockSubstitution2D>(&def.generator)) {
    const std::size_t k = b->block_size;
    Pattern out;
    out.dimension = 2;
    out.width = p.width * k;
    out.height = p.height * k;
    out.labels.assign(out.width * out.height, std::string());
    for (std::size_t r = 0; r < p.height; ++r)
      for (std::size_t c = 0; c < p.width; ++c) {
        auto it = b->rules.find(p.at(r, c));
        if (it == b->rules.end())
          throw DefinitionError("pattern", "label '" + p.at(r, c) + "' has no rule");
        const Pattern& img = it->second;
        for (std::size_t rr = 0; rr < k; ++rr)
          for (std::size_t cc = 0; cc < k; ++cc)
            out.at(r * k + rr, c * k + cc) = img.at(rr, cc);
      }
    return out;
  }
  throw DefinitionError("generator", "not a substitution");
}

std::string pattern_to_string(const Pattern& p, const TilingDefinition& def) {
  const char* sep = single_char_alphabet(def.alphabet) ? "" : ",";
  std::string out;
  for (std::size_t r = 0; r < p.height; ++r) {
    if (r > 0) out += "/";
    for (std::size_t c = 0; c < p.width; ++c) {
      if (c > 0) out += sep;
      out += p.at(r, c);
    }
  }
  return out;
}

}  // namespace tilecoh
