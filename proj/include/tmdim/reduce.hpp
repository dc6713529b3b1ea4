#pragma once

#include "tmdim/topology.hpp"

#include <vector>

namespace tmdim {

/// Outcome of vanished l-edge removal.
struct Reduction {
  TMesh mesh;
  int removed = 0;
  /// Vanished interior l-edges left because merging across them would not
  /// produce rectangles (a perpendicular line ends on them from one side).
  int residual_vanished = 0;
};

namespace detail {

inline bool ledge_vanished(const LEdge& l, const SplineSpaceSpec& s) {
  return l.kind == LEdgeKind::InteriorLEdge && is_vanished(static_cast<int>(l.vertices.size()), s, l.orientation);
}

// Removable iff every inner vertex has the perpendicular line on both sides,
// so faces on the two sides of the l-edge pair up with identical extents.
inline bool ledge_removable(const Topology& t, const LEdge& l) {
  for (std::size_t k = 1; k + 1 < l.vertices.size(); ++k)
    if (t.vertices[l.vertices[k]].degree != 4) return false;
  return true;
}

inline TMesh merge_across(const TMesh& mesh, const Topology& t, const LEdge& l) {
  auto t_at = [&](int v) -> const GridPoint& { return t.vertices[v].at; };
  const auto& a = mesh.faces();
  const bool h = l.orientation == Orientation::Horizontal;
  const int line = l.fixed_knot_index;
  auto along = [&](int v) { return h ? t_at(v).ix : t_at(v).iy; };
  const int span_lo = along(l.vertices.front());
  const int span_hi = along(l.vertices.back());
  std::vector<bool> used(a.size(), false);
  std::vector<Face> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Face& f = a[i];
    // f lies below/left of the l-edge and touches it
    const bool touches = h ? (f.iy1 == line && f.ix0 >= span_lo && f.ix1 <= span_hi)
                           : (f.ix1 == line && f.iy0 >= span_lo && f.iy1 <= span_hi);
    if (!touches) continue;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Face& g = a[j];
      if (used[j]) continue;
      const bool partner = h ? (g.iy0 == line && g.ix0 == f.ix0 && g.ix1 == f.ix1)
                             : (g.ix0 == line && g.iy0 == f.iy0 && g.iy1 == f.iy1);
      if (!partner) continue;
      used[i] = used[j] = true;
      out.push_back(h ? Face{f.ix0, f.ix1, f.iy0, g.iy1} : Face{f.ix0, g.ix1, f.iy0, f.iy1});
      break;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!used[i]) out.push_back(a[i]);
  return TMesh(mesh.x_knots(), mesh.y_knots(), std::move(out));
}

}  // namespace detail

/// Repeatedly deletes a vanished interior l-edge (merging the face pairs on
/// its two sides) until none is removable. Degree-two vertices disappear
/// with the merge because vertices are face corners.
inline Reduction reduce_vanished_detailed(const TMesh& mesh, const SplineSpaceSpec& s) {
  TMesh current = mesh;
  int removed = 0;
  for (;;) {
    Topology topo = extract_topology(current);
    const LEdge* target = nullptr;
    int residual = 0;
    for (const auto& l : topo.ledges) {
      if (!detail::ledge_vanished(l, s)) continue;
      if (!target && detail::ledge_removable(topo, l))
        target = &l;
      else
        ++residual;
    }
    if (!target) return {current, removed, residual};
    TMesh next = detail::merge_across(current, topo, *target);
    require_valid(next);
    current = std::move(next);
    ++removed;
  }
}

inline TMesh reduce_vanished(const TMesh& mesh, const SplineSpaceSpec& s) { return reduce_vanished_detailed(mesh, s).mesh; }

}  // namespace tmdim
