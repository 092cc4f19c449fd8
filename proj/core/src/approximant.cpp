#include "tilecoh/approximant.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tilecoh {
namespace {

// Union-find with the smallest slot as root, so class representatives and
// class order are independent of union order.
struct Dsu {
  std::vector<std::size_t> parent;

  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

// Numbers the classes by ascending representative slot. Returns the class
// of every slot; `reps` receives the representative slot of each class.
std::vector<std::size_t> number_classes(Dsu& dsu, std::size_t slots,
                                        std::vector<std::size_t>& reps) {
  reps.clear();
  std::vector<std::size_t> root(slots);
  for (std::size_t s = 0; s < slots; ++s) root[s] = dsu.find(s);
  for (std::size_t s = 0; s < slots; ++s)
    if (root[s] == s) reps.push_back(s);
  std::vector<std::size_t> cls(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    auto it = std::lower_bound(reps.begin(), reps.end(), root[s]);
    cls[s] = static_cast<std::size_t>(it - reps.begin());
  }
  return cls;
}

// 2D slot codes within a square, see CWComplex docs.
constexpr std::size_t kS = 0, kE = 1, kN = 2, kW = 3;
constexpr std::size_t kSW = 0, kSE = 1, kNW = 2, kNE = 3;
const char* const kEdgeSide[4] = {"S", "E", "N", "W"};
const char* const kCornerSide[4] = {"SW", "SE", "NW", "NE"};

// Oriented endpoints of an edge slot: south/north edges run west to east,
// west/east edges run south to north.
void edge_endpoints(std::size_t tile, std::size_t side, std::size_t& tail_slot,
                    std::size_t& head_slot) {
  switch (side) {
    case kS: tail_slot = 4 * tile + kSW; head_slot = 4 * tile + kSE; break;
    case kN: tail_slot = 4 * tile + kNW; head_slot = 4 * tile + kNE; break;
    case kW: tail_slot = 4 * tile + kSW; head_slot = 4 * tile + kNW; break;
    default: tail_slot = 4 * tile + kSE; head_slot = 4 * tile + kNE; break;
  }
}

void require_zero_square(const CWComplex& k) {
  for (std::size_t d = 2; d <= static_cast<std::size_t>(k.dimension); ++d) {
    if (!multiply(k.boundary_matrix(d - 1), k.boundary_matrix(d)).is_zero())
      throw std::logic_error("approximant gluing produced a nonzero boundary square");
  }
}

CWComplex build_discrete(const TilingDefinition& def, std::size_t n) {
  CWComplex k;
  k.dimension = 0;
  k.cell_tags.resize(1);
  for (const auto& t : collar(def, n))
    k.cell_tags[0].push_back(pattern_to_string(t.collar, def));
  return k;
}

CWComplex build_1d(const TilingDefinition& def, std::size_t n) {
  const auto tiles = collar(def, n);
  const auto rels = adjacency(def, n);
  const std::size_t count = tiles.size();

  // Vertex slots: 2t is the left end of edge t, 2t+1 the right end.
  Dsu dsu(2 * count);
  for (const auto& [a, b] : rels.front().pairs) dsu.unite(2 * a + 1, 2 * b);
  std::vector<std::size_t> reps;
  const auto cls = number_classes(dsu, 2 * count, reps);

  CWComplex k;
  k.dimension = 1;
  k.cell_tags.resize(2);
  for (std::size_t rep : reps) {
    std::ostringstream tag;
    tag << "t" << rep / 2 << "." << (rep % 2 ? "R" : "L");
    k.cell_tags[0].push_back(tag.str());
  }
  for (const auto& t : tiles)
    k.cell_tags[1].push_back(pattern_to_string(t.collar, def));

  IntMatrix d1(reps.size(), count);
  for (std::size_t t = 0; t < count; ++t) {
    d1.at(cls[2 * t + 1], t) += 1;
    d1.at(cls[2 * t], t) -= 1;
  }
  k.boundaries.push_back(std::move(d1));
  k.vertex_class_of_slot = cls;
  return k;
}

CWComplex build_2d(const TilingDefinition& def, std::size_t n) {
  const auto tiles = collar(def, n);
  const auto rels = adjacency(def, n);
  const std::size_t count = tiles.size();

  Dsu edge_dsu(4 * count);
  Dsu corner_dsu(4 * count);
  for (const auto& rel : rels) {
    for (const auto& [a, b] : rel.pairs) {
      if (rel.direction == Direction::East) {
        edge_dsu.unite(4 * a + kE, 4 * b + kW);
        corner_dsu.unite(4 * a + kSE, 4 * b + kSW);
        corner_dsu.unite(4 * a + kNE, 4 * b + kNW);
      } else {
        edge_dsu.unite(4 * a + kN, 4 * b + kS);
        corner_dsu.unite(4 * a + kNW, 4 * b + kSW);
        corner_dsu.unite(4 * a + kNE, 4 * b + kSE);
      }
    }
  }
  std::vector<std::size_t> edge_reps, corner_reps;
  const auto edge_cls = number_classes(edge_dsu, 4 * count, edge_reps);
  const auto corner_cls = number_classes(corner_dsu, 4 * count, corner_reps);

  // Endpoints per edge class; agreement across all glued slots is forced
  // by the corner unions above, checked anyway.
  struct Ends {
    bool set = false;
    std::size_t axis = 0;  // 0 horizontal, 1 vertical
    std::size_t head = 0;
    std::size_t tail = 0;
  };
  std::vector<Ends> ends(edge_reps.size());
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t side = 0; side < 4; ++side) {
      std::size_t tail_slot = 0, head_slot = 0;
      edge_endpoints(t, side, tail_slot, head_slot);
      Ends e;
      e.set = true;
      e.axis = (side == kS || side == kN) ? 0 : 1;
      e.head = corner_cls[head_slot];
      e.tail = corner_cls[tail_slot];
      Ends& slot_ends = ends[edge_cls[4 * t + side]];
      if (!slot_ends.set) {
        slot_ends = e;
      } else if (slot_ends.axis != e.axis || slot_ends.head != e.head ||
                 slot_ends.tail != e.tail) {
        throw std::logic_error("glued edge slots disagree on endpoints");
      }
    }
  }

  CWComplex k;
  k.dimension = 2;
  k.cell_tags.resize(3);
  for (std::size_t rep : corner_reps) {
    std::ostringstream tag;
    tag << "t" << rep / 4 << "." << kCornerSide[rep % 4];
    k.cell_tags[0].push_back(tag.str());
  }
  for (std::size_t rep : edge_reps) {
    std::ostringstream tag;
    tag << "t" << rep / 4 << "." << kEdgeSide[rep % 4];
    k.cell_tags[1].push_back(tag.str());
  }
  for (const auto& t : tiles)
    k.cell_tags[2].push_back(pattern_to_string(t.collar, def));

  IntMatrix d1(corner_reps.size(), edge_reps.size());
  for (std::size_t e = 0; e < edge_reps.size(); ++e) {
    d1.at(ends[e].head, e) += 1;
    d1.at(ends[e].tail, e) -= 1;
  }
  IntMatrix d2(edge_reps.size(), count);
  for (std::size_t t = 0; t < count; ++t) {
    d2.at(edge_cls[4 * t + kS], t) += 1;
    d2.at(edge_cls[4 * t + kE], t) += 1;
    d2.at(edge_cls[4 * t + kN], t) -= 1;
    d2.at(edge_cls[4 * t + kW], t) -= 1;
  }
  k.boundaries.push_back(std::move(d1));
  k.boundaries.push_back(std::move(d2));
  k.vertex_class_of_slot = corner_cls;
  k.edge_class_of_slot = edge_cls;
  require_zero_square(k);
  return k;
}

// Transports a slot-level class assignment along a top-cell assignment.
// slots_per_cell slots of source cell t map to the same slots of top[t].
std::vector<std::size_t> transport_classes(
    const std::vector<std::size_t>& source_cls,
    const std::vector<std::size_t>& target_cls, std::size_t source_classes,
    const std::vector<std::size_t>& top, std::size_t slots_per_cell,
    const char* what) {
  std::vector<std::optional<std::size_t>> image(source_classes);
  for (std::size_t s = 0; s < source_cls.size(); ++s) {
    const std::size_t t = s / slots_per_cell;
    const std::size_t image_slot = slots_per_cell * top[t] + s % slots_per_cell;
    const std::size_t c = target_cls[image_slot];
    auto& slot_image = image[source_cls[s]];
    if (!slot_image) {
      slot_image = c;
    } else if (*slot_image != c) {
      throw std::logic_error(std::string("forgetful map is not well defined on ") + what);
    }
  }
  std::vector<std::size_t> out(source_classes);
  for (std::size_t c = 0; c < source_classes; ++c) out[c] = *image[c];
  return out;
}

void require_chain_map(const CellularMap& f) {
  for (std::size_t d = 1; d <= static_cast<std::size_t>(f.source.dimension); ++d) {
    const IntMatrix left = multiply(f.target.boundary_matrix(d), f.chain_matrix(d));
    const IntMatrix right = multiply(f.chain_matrix(d - 1), f.source.boundary_matrix(d));
    if (left != right)
      throw std::logic_error("forgetful map does not commute with boundaries");
  }
}

}  // namespace

long long CWComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < cell_tags.size(); ++d) {
    const long long c = static_cast<long long>(cell_tags[d].size());
    chi += (d % 2 == 0) ? c : -c;
  }
  return chi;
}

IntMatrix CellularMap::chain_matrix(std::size_t degree) const {
  IntMatrix m(target.cell_count(degree), source.cell_count(degree));
  for (std::size_t s = 0; s < assignment[degree].size(); ++s)
    m.at(assignment[degree][s], s) = 1;
  return m;
}

CWComplex build_approximant(const TilingDefinition& def, std::size_t n) {
  if (def.symmetry == Symmetry::Discrete) return build_discrete(def, n);
  return def.dimension == 1 ? build_1d(def, n) : build_2d(def, n);
}

CellularMap forgetful_map(const TilingDefinition& def, std::size_t n) {
  if (n == 0) throw std::invalid_argument("forgetful map needs depth at least 1");
  CellularMap f;
  f.source = build_approximant(def, n);
  f.target = build_approximant(def, n - 1);

  const auto fine = collar(def, n);
  const auto coarse = collar(def, n - 1);
  std::vector<std::size_t> top(fine.size());
  for (std::size_t t = 0; t < fine.size(); ++t)
    top[t] = forget(fine[t], coarse, def).id;

  if (def.symmetry == Symmetry::Discrete) {
    f.assignment = {top};
    return f;
  }
  if (def.dimension == 1) {
    f.assignment = {
        transport_classes(f.source.vertex_class_of_slot, f.target.vertex_class_of_slot,
                          f.source.cell_count(0), top, 2, "vertices"),
        top};
  } else {
    f.assignment = {
        transport_classes(f.source.vertex_class_of_slot, f.target.vertex_class_of_slot,
                          f.source.cell_count(0), top, 4, "vertices"),
        transport_classes(f.source.edge_class_of_slot, f.target.edge_class_of_slot,
                          f.source.cell_count(1), top, 4, "edges"),
        top};
  }
  require_chain_map(f);
  return f;
}

CellularMap compose(const CellularMap& g, const CellularMap& f) {
  const bool same = f.target.dimension == g.source.dimension &&
                    f.target.cell_tags == g.source.cell_tags &&
                    f.target.boundaries == g.source.boundaries;
  if (!same) throw std::invalid_argument("compose: inner complexes differ");
  CellularMap h;
  h.source = f.source;
  h.target = g.target;
  h.assignment.resize(f.assignment.size());
  for (std::size_t d = 0; d < f.assignment.size(); ++d) {
    h.assignment[d].reserve(f.assignment[d].size());
    for (std::size_t c : f.assignment[d])
      h.assignment[d].push_back(g.assignment[d][c]);
  }
  return h;
}

std::string export_dot(const CWComplex& k) {
  std::ostringstream out;
  out << "digraph approximant {\n";
  if (k.dimension == 0) {
    for (std::size_t v = 0; v < k.cell_count(0); ++v)
      out << "  v" << v << " [label=\"" << k.cell_tags[0][v] << "\"];\n";
    out << "}\n";
    return out.str();
  }
  for (std::size_t v = 0; v < k.cell_count(0); ++v)
    out << "  v" << v << " [label=\"" << k.cell_tags[0][v] << "\"];\n";
  if (k.dimension == 1) {
    for (std::size_t e = 0; e < k.cell_count(1); ++e) {
      out << "  v" << k.vertex_class_of_slot[2 * e] << " -> v"
          << k.vertex_class_of_slot[2 * e + 1] << " [label=\"" << k.cell_tags[1][e]
          << "\"];\n";
    }
  } else {
    // Representative slot of each edge class is the smallest, so scanning
    // slots in order visits classes in order the first time each appears.
    std::vector<bool> seen(k.cell_count(1), false);
    for (std::size_t s = 0; s < k.edge_class_of_slot.size(); ++s) {
      const std::size_t e = k.edge_class_of_slot[s];
      if (seen[e]) continue;
      seen[e] = true;
      std::size_t tail_slot = 0, head_slot = 0;
      edge_endpoints(s / 4, s % 4, tail_slot, head_slot);
      out << "  v" << k.vertex_class_of_slot[tail_slot] << " -> v"
          << k.vertex_class_of_slot[head_slot] << " [label=\"" << k.cell_tags[1][e]
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tilecoh
