#include "tilecoh/smith.hpp"

#include <cstddef>
#include <utility>

namespace tilecoh {

namespace {

// Truncating quotient, like C++ integer division.
Int tdiv(const Int& a, const Int& b) { return a / b; }

struct Worker {
  std::size_t m, n;
  IntMatrix d, u, uinv, v, vinv;

  explicit Worker(const IntMatrix& a)
      : m(a.rows()),
        n(a.cols()),
        d(a),
        u(IntMatrix::identity(a.rows())),
        uinv(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())),
        vinv(IntMatrix::identity(a.cols())) {}

  // Elementary operations keep U*A*V = D and the tracked inverses exact:
  // a row operation E applied to D multiplies U by E on the left and
  // U^-1 by E^-1 on the right; columns dually for V.

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(d.at(a, c), d.at(b, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u.at(a, c), u.at(b, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(uinv.at(r, a), uinv.at(r, b));
  }

  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(d.at(r, a), d.at(r, b));
    for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, a), v.at(r, b));
    for (std::size_t c = 0; c < n; ++c) std::swap(vinv.at(a, c), vinv.at(b, c));
  }

  // row a += f * row b
  void row_axpy(std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t c = 0; c < n; ++c) d.at(a, c) += f * d.at(b, c);
    for (std::size_t c = 0; c < m; ++c) u.at(a, c) += f * u.at(b, c);
    for (std::size_t r = 0; r < m; ++r) uinv.at(r, b) -= f * uinv.at(r, a);
  }

  // col a += f * col b
  void col_axpy(std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t r = 0; r < m; ++r) d.at(r, a) += f * d.at(r, b);
    for (std::size_t r = 0; r < n; ++r) v.at(r, a) += f * v.at(r, b);
    for (std::size_t c = 0; c < n; ++c) vinv.at(b, c) -= f * vinv.at(a, c);
  }

  void row_negate(std::size_t a) {
    for (std::size_t c = 0; c < n; ++c) d.at(a, c) = -d.at(a, c);
    for (std::size_t c = 0; c < m; ++c) u.at(a, c) = -u.at(a, c);
    for (std::size_t r = 0; r < m; ++r) uinv.at(r, a) = -uinv.at(r, a);
  }

  // Smallest |value| in the trailing submatrix, ties by lowest row then
  // lowest column. Returns false when the submatrix is zero.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        Int av = abs(d.at(i, j));
        if (av == 0) continue;
        if (!found || av < best) {
          found = true;
          best = av;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  void run() {
    const std::size_t nmin = m < n ? m : n;
    for (std::size_t t = 0; t < nmin; ++t) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) break;
      for (;;) {
        find_pivot(t, pr, pc);
        row_swap(t, pr);
        col_swap(t, pc);
        for (std::size_t i = t + 1; i < m; ++i)
          if (d.at(i, t) != 0) {
            Int q = tdiv(d.at(i, t), d.at(t, t));
            if (q != 0) row_axpy(i, t, -q);
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (d.at(t, j) != 0) {
            Int q = tdiv(d.at(t, j), d.at(t, t));
            if (q != 0) col_axpy(j, t, -q);
          }
        bool clean = true;
        for (std::size_t i = t + 1; i < m && clean; ++i)
          if (d.at(i, t) != 0) clean = false;
        for (std::size_t j = t + 1; j < n && clean; ++j)
          if (d.at(t, j) != 0) clean = false;
        if (!clean) continue;  // remainders left, pick a smaller pivot
        // Divisibility repair: pull a violating row up so the next sweep
        // produces a pivot dividing the rest of the submatrix.
        bool bad_found = false;
        std::size_t bad = 0;
        for (std::size_t i = t + 1; i < m && !bad_found; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (d.at(i, j) % d.at(t, t) != 0) {
              bad_found = true;
              bad = i;
              break;
            }
        if (!bad_found) break;
        row_axpy(t, bad, 1);
      }
      if (d.at(t, t) < 0) row_negate(t);
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  Worker w(a);
  w.run();
  SmithDecomposition out;
  out.u = std::move(w.u);
  out.d = std::move(w.d);
  out.v = std::move(w.v);
  out.u_inv = std::move(w.uinv);
  out.v_inv = std::move(w.vinv);
  const std::size_t nmin = a.rows() < a.cols() ? a.rows() : a.cols();
  out.diagonal.resize(nmin);
  for (std::size_t i = 0; i < nmin; ++i) {
    out.diagonal[i] = out.d.at(i, i);
    if (out.diagonal[i] != 0) ++out.rank;
  }
  return out;
}

}  // namespace tilecoh
