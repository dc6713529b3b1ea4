#pragma once

#include "tmdim/linalg.hpp"
#include "tmdim/topology.hpp"

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace tmdim {

struct ConformalityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Row r of the matrix: coefficient of x^power (horizontal l-edge) or
/// y^power (vertical) in cofactor slice `slice` of l-edge `ledge`.
struct RowLabel {
  int ledge, slice, power;
  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

/// Column c: vertex cofactor coefficient d^{p,q} of `vertex`.
struct ColLabel {
  int vertex, p, q;
  friend bool operator==(const ColLabel&, const ColLabel&) = default;
};

struct ConformalityMatrix {
  RationalMatrix entries;
  std::vector<RowLabel> row_index;
  std::vector<ColLabel> col_index;
};

/// Conformality block of one interior l-edge whose vertices sit at
/// `positions` along the line (x-values for a horizontal l-edge, y-values
/// for a vertical one). Columns are ordered (vertex, p, q); rows (slice, power).
///
/// Horizontal: the q-slices are identical copies of the univariate block
/// whose columns are the monomial coefficients of (x - x_t)^(p+alpha+1).
inline RationalMatrix ledge_block(Orientation o, std::span<const Rational> positions, const SplineSpaceSpec& s) {
  if (positions.size() < 2) throw ConformalityError("an l-edge needs at least two vertices");
  std::set<Rational> distinct(positions.begin(), positions.end());
  if (distinct.size() != positions.size()) throw ConformalityError("duplicate knot values on an l-edge");

  const bool h = o == Orientation::Horizontal;
  const int cx = s.cx(), cy = s.cy();
  const int deg = h ? s.d1() : s.d2();
  const int shift = h ? s.alpha() + 1 : s.beta() + 1;
  const int slices = h ? cy : cx;
  const int per_vertex = cx * cy;
  RationalMatrix m(static_cast<std::size_t>(slices) * (deg + 1), positions.size() * per_vertex);
  for (std::size_t t = 0; t < positions.size(); ++t) {
    const Rational neg = -positions[t];
    for (int p = 0; p < cx; ++p)
      for (int q = 0; q < cy; ++q) {
        const int slice = h ? q : p;
        const int n = (h ? p : q) + shift;  // exponent of (x - x_t) or (y - y_t)
        const std::size_t col = t * per_vertex + p * cy + q;
        for (int k = 0; k <= n; ++k)
          m(static_cast<std::size_t>(slice) * (deg + 1) + k, col) = Rational(binomial(n, k)) * pow(neg, n - k);
      }
  }
  return m;
}

inline std::vector<Rational> ledge_positions(const TMesh& mesh, const Topology& topo, const LEdge& l) {
  std::vector<Rational> pos;
  for (int v : l.vertices) {
    const auto& at = topo.vertices[v].at;
    pos.push_back(l.orientation == Orientation::Horizontal ? mesh.x_knots()[at.ix] : mesh.y_knots()[at.iy]);
  }
  return pos;
}

inline RationalMatrix ledge_block(const TMesh& mesh, const Topology& topo, const LEdge& l, const SplineSpaceSpec& s) {
  if (l.kind != LEdgeKind::InteriorLEdge) throw ConformalityError("not an interior l-edge");
  auto pos = ledge_positions(mesh, topo, l);
  return ledge_block(l.orientation, pos, s);
}

/// Stitches the blocks of all interior l-edges into the global matrix.
/// Cross-cuts and rays add no rows; free vertices add no columns.
inline ConformalityMatrix assemble_conformality(const TMesh& mesh, const Topology& topo, const SplineSpaceSpec& s) {
  ConformalityMatrix cm;
  const int per_vertex = s.vertex_cofactors();
  std::map<int, int> first_col;
  for (int v : topo.constrained_vertices()) {
    first_col[v] = static_cast<int>(cm.col_index.size());
    for (int p = 0; p < s.cx(); ++p)
      for (int q = 0; q < s.cy(); ++q) cm.col_index.push_back({v, p, q});
  }
  const auto ledges = topo.interior_ledges();
  std::vector<RationalMatrix> blocks;
  for (int id : ledges) {
    const LEdge& l = topo.ledges[id];
    blocks.push_back(ledge_block(mesh, topo, l, s));
    const bool h = l.orientation == Orientation::Horizontal;
    const int slices = h ? s.cy() : s.cx();
    const int deg = h ? s.d1() : s.d2();
    for (int sl = 0; sl < slices; ++sl)
      for (int k = 0; k <= deg; ++k) cm.row_index.push_back({id, sl, k});
  }
  cm.entries = RationalMatrix(cm.row_index.size(), cm.col_index.size());
  std::size_t row0 = 0;
  for (std::size_t b = 0; b < ledges.size(); ++b) {
    const LEdge& l = topo.ledges[ledges[b]];
    const RationalMatrix& blk = blocks[b];
    for (std::size_t t = 0; t < l.vertices.size(); ++t) {
      const int c0 = first_col.at(l.vertices[t]);
      for (int j = 0; j < per_vertex; ++j)
        for (std::size_t r = 0; r < blk.rows(); ++r) cm.entries(row0 + r, c0 + j) = blk(r, t * per_vertex + j);
    }
    row0 += blk.rows();
  }
  return cm;
}

inline ConformalityMatrix assemble_conformality(const TMesh& mesh, const SplineSpaceSpec& s) {
  return assemble_conformality(mesh, extract_topology(mesh), s);
}

}  // namespace tmdim
