#include "tilecoh/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace tilecoh {
namespace {

IntMatrix column_range(const IntMatrix& a, std::size_t first) {
  IntMatrix out(a.rows(), a.cols() - first);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = first; j < a.cols(); ++j) out.at(i, j - first) = a.at(i, j);
  return out;
}

IntMatrix row_range(const IntMatrix& a, std::size_t first) {
  IntMatrix out(a.rows() - first, a.cols());
  for (std::size_t i = first; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i - first, j) = a.at(i, j);
  return out;
}

Int reduce_mod(const Int& value, const Int& e) {
  Int r = value % e;
  if (r < 0) r += e;
  return r;
}

// Coboundary leaving degree k: transpose of the boundary into degree k
// cells from one dimension up, or the empty map at the top.
IntMatrix coboundary_out(const CWComplex& k, std::size_t degree) {
  if (degree + 1 <= static_cast<std::size_t>(k.dimension))
    return transpose(k.boundary_matrix(degree + 1));
  return IntMatrix(0, k.cell_count(degree));
}

IntMatrix coboundary_in(const CWComplex& k, std::size_t degree) {
  if (degree >= 1) return transpose(k.boundary_matrix(degree));
  return IntMatrix(k.cell_count(degree), 0);
}

}  // namespace

AbelianGroupPresentation cohomology(const CWComplex& k, std::size_t degree) {
  if (degree > static_cast<std::size_t>(k.dimension))
    throw std::invalid_argument("cohomology degree exceeds complex dimension");

  const std::size_t cochains = k.cell_count(degree);
  const SmithDecomposition out = smith_normal_form(coboundary_out(k, degree));
  const std::size_t r = out.rank;
  const std::size_t z = cochains - r;
  const IntMatrix kernel_basis = column_range(out.v, r);

  // Incoming coboundaries land in the kernel, so their first r
  // kernel-adapted coordinates vanish.
  const IntMatrix in_adapted = multiply(out.v_inv, coboundary_in(k, degree));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < in_adapted.cols(); ++j)
      if (in_adapted.at(i, j) != 0)
        throw std::logic_error("coboundary image escapes the cocycle lattice");
  const SmithDecomposition rel = smith_normal_form(row_range(in_adapted, r));

  AbelianGroupPresentation g;
  g.degree = degree;
  g.vinv = out.v_inv;
  g.kernel_start = r;
  g.u2 = rel.u;

  for (std::size_t i = rel.rank; i < z; ++i) {
    g.order.push_back(i);
    g.ediag.push_back(0);
  }
  g.free_rank = g.order.size();
  for (std::size_t i = 0; i < rel.rank; ++i) {
    if (rel.diagonal[i] >= 2) {
      g.order.push_back(i);
      g.ediag.push_back(rel.diagonal[i]);
      g.torsion.push_back(rel.diagonal[i]);
    }
  }

  g.generator_lifts = IntMatrix(cochains, g.order.size());
  for (std::size_t pos = 0; pos < g.order.size(); ++pos) {
    const std::vector<Int> lift =
        multiply(kernel_basis, column(rel.u_inv, g.order[pos]));
    Int sign = 1;
    for (const Int& v : lift) {
      if (v != 0) {
        if (v < 0) sign = -1;
        break;
      }
    }
    g.signs.push_back(sign);
    for (std::size_t i = 0; i < cochains; ++i)
      g.generator_lifts.at(i, pos) = sign * lift[i];
  }
  return g;
}

std::vector<Int> coords(const AbelianGroupPresentation& g, const std::vector<Int>& cocycle) {
  if (cocycle.size() != g.vinv.cols())
    throw std::invalid_argument("cochain length does not match the complex");
  const std::vector<Int> adapted = multiply(g.vinv, cocycle);
  for (std::size_t i = 0; i < g.kernel_start; ++i)
    if (adapted[i] != 0) throw std::invalid_argument("vector is not a cocycle");
  const std::vector<Int> kernel_part(adapted.begin() + static_cast<long>(g.kernel_start),
                                     adapted.end());
  const std::vector<Int> quotient = multiply(g.u2, kernel_part);

  std::vector<Int> out(g.order.size());
  for (std::size_t pos = 0; pos < g.order.size(); ++pos) {
    Int c = g.signs[pos] * quotient[g.order[pos]];
    if (g.ediag[pos] != 0) c = reduce_mod(c, g.ediag[pos]);
    out[pos] = c;
  }
  return out;
}

bool same_invariants(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

std::string group_to_string(const AbelianGroupPresentation& g) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " ⊕ ";
    first = false;
  };
  if (g.free_rank == 1) {
    sep();
    out << "Z";
  } else if (g.free_rank > 1) {
    sep();
    out << "Z^" << g.free_rank;
  }
  for (const Int& e : g.torsion) {
    sep();
    out << "Z/" << e;
  }
  if (first) out << "0";
  return out.str();
}

GroupMap induced_cohomology_map(const CellularMap& f, std::size_t degree) {
  return induced_cohomology_map(f, degree, cohomology(f.target, degree),
                                cohomology(f.source, degree));
}

GroupMap induced_cohomology_map(const CellularMap& f, std::size_t degree,
                                const AbelianGroupPresentation& source,
                                const AbelianGroupPresentation& target) {
  GroupMap m;
  m.source = source;
  m.target = target;
  const IntMatrix pullback = transpose(f.chain_matrix(degree));

  m.matrix = IntMatrix(m.target.generator_count(), m.source.generator_count());
  for (std::size_t j = 0; j < m.source.generator_count(); ++j) {
    const std::vector<Int> image =
        multiply(pullback, column(m.source.generator_lifts, j));
    const std::vector<Int> c = coords(m.target, image);
    for (std::size_t i = 0; i < c.size(); ++i) m.matrix.at(i, j) = c[i];
  }
  return m;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (!same_invariants(inner.target, outer.source))
    throw std::invalid_argument("compose: inner target and outer source differ");
  GroupMap m;
  m.source = inner.source;
  m.target = outer.target;
  m.matrix = multiply(outer.matrix, inner.matrix);
  for (std::size_t pos = 0; pos < m.target.generator_count(); ++pos) {
    if (m.target.ediag[pos] == 0) continue;
    for (std::size_t j = 0; j < m.matrix.cols(); ++j)
      m.matrix.at(pos, j) = ((m.matrix.at(pos, j) % m.target.ediag[pos]) +
                             m.target.ediag[pos]) %
                            m.target.ediag[pos];
  }
  return m;
}

bool is_isomorphism(const GroupMap& m) {
  if (!same_invariants(m.source, m.target)) return false;
  const std::size_t gens = m.target.generator_count();
  const std::size_t torsion = m.target.torsion.size();

  // A surjective endomorphism of a finitely generated abelian group is an
  // isomorphism, and surjectivity means the images together with the
  // target relations generate the whole coordinate lattice.
  IntMatrix aug(gens, m.matrix.cols() + torsion);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) aug.at(i, j) = m.matrix.at(i, j);
  for (std::size_t t = 0; t < torsion; ++t)
    aug.at(m.target.free_rank + t, m.matrix.cols() + t) = m.target.torsion[t];

  const SmithDecomposition s = smith_normal_form(aug);
  if (s.rank != gens) return false;
  for (const Int& d : s.diagonal)
    if (d != 1) return false;
  return true;
}

}  // namespace tilecoh
