#pragma once

#include "tmdim/mesh.hpp"
#include "tmdim/spec.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tmdim {

enum class LEdgeKind { InteriorLEdge, CrossCut, Ray };

inline const char* to_string(LEdgeKind k) {
  switch (k) {
    case LEdgeKind::InteriorLEdge: return "interior";
    case LEdgeKind::CrossCut: return "cross-cut";
    case LEdgeKind::Ray: return "ray";
  }
  return "?";
}

struct Vertex {
  GridPoint at;
  bool boundary = false;
  bool tjunction = false;  // interior vertex with exactly three edges
  bool mono = false;       // interior, on exactly one interior l-edge
  bool free = false;       // interior, on no interior l-edge
  int hledge = -1;         // horizontal l-edge through the vertex, if any
  int vledge = -1;
  int degree = 0;
};

/// Unit segment between consecutive vertices on a grid line. `lo`/`hi` are
/// the faces below/above (horizontal) or left/right (vertical), -1 if none.
struct Edge {
  int v0, v1;
  Orientation orientation;
  int lo = -1, hi = -1;
  bool interior() const { return lo >= 0 && hi >= 0; }
};

/// Maximal chain of interior edges on one grid line.
struct LEdge {
  Orientation orientation;
  int fixed_knot_index;     // iy for horizontal, ix for vertical
  std::vector<int> vertices;  // increasing coordinate order
  LEdgeKind kind;
};

struct Topology {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<LEdge> ledges;

  int vertex_id(GridPoint p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  }

  std::vector<int> interior_ledges() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < ledges.size(); ++i)
      if (ledges[i].kind == LEdgeKind::InteriorLEdge) out.push_back(static_cast<int>(i));
    return out;
  }

  /// Interior vertices lying on at least one interior l-edge, in vertex order.
  std::vector<int> constrained_vertices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (!vertices[i].boundary && !vertices[i].free) out.push_back(static_cast<int>(i));
    return out;
  }

  std::map<GridPoint, int> index;
};

/// Derives vertices, edges and l-edges from a validated mesh.
inline Topology extract_topology(const TMesh& mesh) {
  Topology topo;
  const auto& faces = mesh.faces();
  for (const auto& p : detail::face_corners(faces)) {
    topo.index[p] = static_cast<int>(topo.vertices.size());
    Vertex v;
    v.at = p;
    auto q = detail::quadrants(faces, p);
    v.boundary = q[0] < 0 || q[1] < 0 || q[2] < 0 || q[3] < 0;
    topo.vertices.push_back(v);
  }

  std::map<int, std::vector<int>> by_row, by_col;  // vertex ids, sorted by the other coordinate
  for (std::size_t i = 0; i < topo.vertices.size(); ++i) {
    by_row[topo.vertices[i].at.iy].push_back(static_cast<int>(i));
    by_col[topo.vertices[i].at.ix].push_back(static_cast<int>(i));
  }
  for (auto& [k, ids] : by_col)
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return topo.vertices[a].at.iy < topo.vertices[b].at.iy; });

  // key: (orientation, v0) -> edge id; v0 is the lower/left endpoint
  std::map<std::pair<int, int>, int> edge_of;
  auto add_side = [&](Orientation o, const std::vector<int>& line, int lo, int hi, int face, bool face_is_hi) {
    int prev = -1;
    for (int vid : line) {
      const auto& at = topo.vertices[vid].at;
      int c = o == Orientation::Horizontal ? at.ix : at.iy;
      if (c < lo || c > hi) continue;
      if (prev >= 0) {
        auto key = std::make_pair(static_cast<int>(o), prev);
        auto it = edge_of.find(key);
        if (it == edge_of.end()) {
          it = edge_of.emplace(key, static_cast<int>(topo.edges.size())).first;
          topo.edges.push_back({prev, vid, o});
        }
        (face_is_hi ? topo.edges[it->second].hi : topo.edges[it->second].lo) = face;
      }
      prev = vid;
    }
  };
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& f = faces[i];
    const int fi = static_cast<int>(i);
    add_side(Orientation::Horizontal, by_row[f.iy0], f.ix0, f.ix1, fi, true);
    add_side(Orientation::Horizontal, by_row[f.iy1], f.ix0, f.ix1, fi, false);
    add_side(Orientation::Vertical, by_col[f.ix0], f.iy0, f.iy1, fi, true);
    add_side(Orientation::Vertical, by_col[f.ix1], f.iy0, f.iy1, fi, false);
  }
  std::sort(topo.edges.begin(), topo.edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.orientation != b.orientation) return a.orientation < b.orientation;
    const auto &pa = topo.vertices[a.v0].at, &pb = topo.vertices[b.v0].at;
    return a.orientation == Orientation::Horizontal ? std::pair(pa.iy, pa.ix) < std::pair(pb.iy, pb.ix)
                                                    : std::pair(pa.ix, pa.iy) < std::pair(pb.ix, pb.iy);
  });
  for (const auto& e : topo.edges) {
    ++topo.vertices[e.v0].degree;
    ++topo.vertices[e.v1].degree;
  }

  // Chain interior edges into l-edges. Edges are sorted by line, then position.
  for (std::size_t i = 0; i < topo.edges.size();) {
    const Edge& e = topo.edges[i];
    if (!e.interior()) {
      ++i;
      continue;
    }
    LEdge le{e.orientation, 0, {e.v0, e.v1}, LEdgeKind::InteriorLEdge};
    const auto& at = topo.vertices[e.v0].at;
    le.fixed_knot_index = e.orientation == Orientation::Horizontal ? at.iy : at.ix;
    std::size_t j = i + 1;
    while (j < topo.edges.size() && topo.edges[j].orientation == e.orientation && topo.edges[j].interior() &&
           topo.edges[j].v0 == le.vertices.back()) {
      le.vertices.push_back(topo.edges[j].v1);
      ++j;
    }
    const bool b0 = topo.vertices[le.vertices.front()].boundary;
    const bool b1 = topo.vertices[le.vertices.back()].boundary;
    le.kind = (b0 && b1) ? LEdgeKind::CrossCut : (b0 || b1) ? LEdgeKind::Ray : LEdgeKind::InteriorLEdge;
    const int id = static_cast<int>(topo.ledges.size());
    for (int v : le.vertices) (e.orientation == Orientation::Horizontal ? topo.vertices[v].hledge : topo.vertices[v].vledge) = id;
    topo.ledges.push_back(std::move(le));
    i = j;
  }

  for (auto& v : topo.vertices) {
    if (v.boundary) continue;
    int on_interior = 0;
    for (int l : {v.hledge, v.vledge})
      if (l >= 0 && topo.ledges[l].kind == LEdgeKind::InteriorLEdge) ++on_interior;
    v.free = on_interior == 0;
    v.mono = on_interior == 1;
    v.tjunction = v.degree == 3;
  }
  return topo;
}

/// Table of mesh counts plus the degree-dependent sizes of the conformality matrix.
struct MeshCounts {
  int F = 0, E_h = 0, E_v = 0, V = 0, C_h = 0, C_v = 0, T_h = 0, T_v = 0, n_e = 0, V_plus = 0;
  long long n_c = 0, n_r = 0;
  friend bool operator==(const MeshCounts&, const MeshCounts&) = default;
};

inline MeshCounts mesh_counts(const TMesh& mesh, const Topology& topo, const SplineSpaceSpec& s) {
  MeshCounts c;
  c.F = static_cast<int>(mesh.faces().size());
  for (const auto& e : topo.edges)
    if (e.interior()) ++(e.orientation == Orientation::Horizontal ? c.E_h : c.E_v);
  for (const auto& v : topo.vertices) {
    if (v.boundary) continue;
    ++c.V;
    if (v.free) ++c.V_plus;
  }
  for (const auto& l : topo.ledges) {
    const bool h = l.orientation == Orientation::Horizontal;
    if (l.kind == LEdgeKind::CrossCut) ++(h ? c.C_h : c.C_v);
    if (l.kind == LEdgeKind::InteriorLEdge) ++(h ? c.T_h : c.T_v);
  }
  c.n_e = c.T_h + c.T_v;
  c.n_c = static_cast<long long>(s.vertex_cofactors()) * (c.V - c.V_plus);
  c.n_r = static_cast<long long>(s.hrow_block()) * c.T_h + static_cast<long long>(s.vrow_block()) * c.T_v;
  return c;
}

}  // namespace tmdim
