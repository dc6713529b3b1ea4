#pragma once

#include "tmdim/mesh.hpp"
#include "tmdim/spec.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace tmdim {

/// Axis-parallel cut on the knot grid: a horizontal segment on y-line
/// `line` from x-index `from` to `to`, or a vertical one on x-line `line`.
struct Segment {
  Orientation orientation;
  int line, from, to;
};

/// Partitions the full box [x_0, x_n] x [y_0, y_m] along the given segments.
/// Throws std::invalid_argument if some region is not a rectangle or a cut
/// dangles inside a face.
inline TMesh mesh_from_segments(std::vector<Rational> xk, std::vector<Rational> yk, const std::vector<Segment>& segs) {
  const int nx = static_cast<int>(xk.size()) - 1, ny = static_cast<int>(yk.size()) - 1;
  if (nx < 1 || ny < 1) throw std::invalid_argument("need at least one cell");
  // wall_v[i][j]: wall on x-line i over cell row j; wall_h[j][i]: on y-line j over cell column i
  std::vector<std::vector<bool>> wall_v(nx + 1, std::vector<bool>(ny, false));
  std::vector<std::vector<bool>> wall_h(ny + 1, std::vector<bool>(nx, false));
  for (const auto& s : segs) {
    if (s.from >= s.to) throw std::invalid_argument("empty segment");
    for (int k = s.from; k < s.to; ++k)
      (s.orientation == Orientation::Vertical ? wall_v.at(s.line).at(k) : wall_h.at(s.line).at(k)) = true;
  }
  std::vector<int> parent(static_cast<std::size_t>(nx) * ny);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto cell = [&](int i, int j) { return j * nx + i; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx && !wall_v[i + 1][j]) parent[find(cell(i, j))] = find(cell(i + 1, j));
      if (j + 1 < ny && !wall_h[j + 1][i]) parent[find(cell(i, j))] = find(cell(i, j + 1));
    }
  // every piece of a cut must separate two faces, otherwise it dangles inside one
  for (int i = 1; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (wall_v[i][j] && find(cell(i - 1, j)) == find(cell(i, j)))
        throw std::invalid_argument("segment ends inside a face");
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (wall_h[j][i] && find(cell(i, j - 1)) == find(cell(i, j)))
        throw std::invalid_argument("segment ends inside a face");
  std::map<int, Face> box;
  std::map<int, int> count;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int r = find(cell(i, j));
      auto [it, fresh] = box.try_emplace(r, Face{i, i + 1, j, j + 1});
      if (!fresh) {
        Face& f = it->second;
        f = {std::min(f.ix0, i), std::max(f.ix1, i + 1), std::min(f.iy0, j), std::max(f.iy1, j + 1)};
      }
      ++count[r];
    }
  std::vector<Face> faces;
  for (const auto& [r, f] : box) {
    if ((f.ix1 - f.ix0) * (f.iy1 - f.iy0) != count[r]) throw std::invalid_argument("segments leave a non-rectangular region");
    faces.push_back(f);
  }
  return TMesh(std::move(xk), std::move(yk), std::move(faces));
}

inline std::vector<Rational> integer_knots(int lo, int hi) {
  std::vector<Rational> k;
  for (int i = lo; i <= hi; ++i) k.emplace_back(i);
  return k;
}

/// Random T-mesh by repeated face splitting. Knots are small integers so
/// exact elimination stays cheap. A full-line split costs one split per face
/// it cuts, so the result has at most max_splits + 1 faces.
inline TMesh random_tmesh(int max_splits, std::uint64_t seed) {
  if (max_splits < 0) throw std::invalid_argument("max_splits must be >= 0");
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  struct Box {
    int x0, x1, y0, y1;
  };
  const int ox = uni(0, 4), oy = uni(0, 4);
  std::vector<Box> boxes{{ox, ox + uni(8, 24), oy, oy + uni(8, 24)}};
  std::set<int> xs{boxes[0].x0, boxes[0].x1}, ys{boxes[0].y0, boxes[0].y1};

  // A cut position strictly inside (lo, hi): an existing knot or a fresh one.
  auto pick_cut = [&](const std::set<int>& used, int lo, int hi) -> int {
    std::vector<int> existing, fresh;
    for (int v = lo + 1; v < hi; ++v) (used.count(v) ? existing : fresh).push_back(v);
    const bool take_existing = !existing.empty() && (fresh.empty() || uni(0, 1) == 0);
    if (take_existing) return existing[uni(0, static_cast<int>(existing.size()) - 1)];
    if (fresh.empty()) return -1;
    return fresh[uni(0, static_cast<int>(fresh.size()) - 1)];
  };

  int budget = max_splits;
  for (int attempts = 0; budget > 0 && attempts < 50 * (max_splits + 1); ++attempts) {
    const bool vertical = uni(0, 1) == 0;  // vertical cut line x = c
    const bool partial = std::bernoulli_distribution(0.7)(rng);
    const std::size_t pick = static_cast<std::size_t>(uni(0, static_cast<int>(boxes.size()) - 1));
    const Box b = boxes[pick];
    const int c = vertical ? pick_cut(xs, b.x0, b.x1) : pick_cut(ys, b.y0, b.y1);
    if (c < 0) continue;
    std::vector<std::size_t> hit;
    if (partial) {
      hit.push_back(pick);
    } else {
      for (std::size_t i = 0; i < boxes.size(); ++i) {
        const Box& o = boxes[i];
        if (vertical ? (o.x0 < c && c < o.x1) : (o.y0 < c && c < o.y1)) hit.push_back(i);
      }
      if (static_cast<int>(hit.size()) > budget) hit = {pick};
    }
    for (std::size_t i : hit) {
      Box& o = boxes[i];
      if (vertical) {
        boxes.push_back({c, o.x1, o.y0, o.y1});
        boxes[i].x1 = c;
      } else {
        boxes.push_back({o.x0, o.x1, c, o.y1});
        boxes[i].y1 = c;
      }
    }
    (vertical ? xs : ys).insert(c);
    budget -= static_cast<int>(hit.size());
  }

  std::vector<int> xv(xs.begin(), xs.end()), yv(ys.begin(), ys.end());
  auto idx = [](const std::vector<int>& v, int x) { return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin()); };
  std::vector<Face> faces;
  for (const auto& b : boxes) faces.push_back({idx(xv, b.x0), idx(xv, b.x1), idx(yv, b.y0), idx(yv, b.y1)});
  std::vector<Rational> xk, yk;
  for (int v : xv) xk.emplace_back(v);
  for (int v : yv) yk.emplace_back(v);
  return TMesh(std::move(xk), std::move(yk), std::move(faces)).compacted();
}

/// Tensor mesh with nx by ny cells on integer knots.
inline TMesh tensor_mesh(int nx, int ny) {
  std::vector<Segment> segs;
  for (int i = 1; i < nx; ++i) segs.push_back({Orientation::Vertical, i, 0, ny});
  for (int j = 1; j < ny; ++j) segs.push_back({Orientation::Horizontal, j, 0, nx});
  return mesh_from_segments(integer_knots(0, nx), integer_knots(0, ny), segs);
}

/// Four interior l-edges in a pinwheel cycle on [0,9]^2 with knots s_i = i,
/// t_j = j. Each l-edge has five vertices, two of them mono-vertices fed by
/// rays from the nearest side. A frame of four cross-cuts plus four short
/// rays in the frame bands fix the free-vertex count.
inline TMesh pinwheel_counterexample() {
  using O = Orientation;
  const std::vector<Segment> segs{
      // the cycle
      {O::Horizontal, 2, 2, 8},
      {O::Vertical, 7, 2, 8},
      {O::Horizontal, 7, 1, 7},
      {O::Vertical, 2, 1, 7},
      // frame cross-cuts
      {O::Vertical, 1, 0, 9},
      {O::Vertical, 8, 0, 9},
      {O::Horizontal, 1, 0, 9},
      {O::Horizontal, 8, 0, 9},
      // rays ending on the cycle
      {O::Vertical, 3, 0, 2},
      {O::Vertical, 4, 0, 2},
      {O::Horizontal, 3, 7, 9},
      {O::Horizontal, 4, 7, 9},
      {O::Vertical, 5, 7, 9},
      {O::Vertical, 6, 7, 9},
      {O::Horizontal, 5, 0, 2},
      {O::Horizontal, 6, 0, 2},
      // rays in the frame bands
      {O::Vertical, 7, 0, 1},
      {O::Horizontal, 7, 8, 9},
      {O::Vertical, 2, 8, 9},
      {O::Horizontal, 2, 0, 1},
  };
  return mesh_from_segments(integer_knots(0, 9), integer_knots(0, 9), segs);
}

/// U-shaped domain with a two-vertex interior l-edge at the bottom of the
/// notch; vanishes for spec(3,3,2,2).
inline TMesh vanished_ledge_example() {
  return TMesh(integer_knots(0, 3), integer_knots(0, 3), {{0, 1, 0, 3}, {1, 2, 0, 1}, {1, 2, 1, 2}, {2, 3, 0, 3}});
}

/// Two horizontal (e1, e3) and two vertical (e4, e2) interior l-edges with
/// five vertices each, between two horizontal and two vertical cross-cuts.
/// e1 meets e4, e3 meets e4 and e2, e1 and e2 are disjoint. Interior
/// l-edges are listed by extract_topology as e1, e3, e4, e2.
inline TMesh four_ledge_example() {
  using O = Orientation;
  const std::vector<Segment> segs{
      {O::Horizontal, 3, 1, 5},  // e1
      {O::Horizontal, 7, 1, 9},  // e3
      {O::Vertical, 3, 1, 9},    // e4
      {O::Vertical, 7, 1, 9},    // e2
      {O::Horizontal, 1, 0, 10},
      {O::Horizontal, 9, 0, 10},
      {O::Vertical, 1, 0, 10},
      {O::Vertical, 9, 0, 10},
      {O::Vertical, 2, 0, 3},
      {O::Vertical, 4, 0, 3},
      {O::Vertical, 5, 0, 7},
      {O::Horizontal, 5, 0, 3},
      {O::Horizontal, 3, 7, 10},
      {O::Horizontal, 5, 7, 10},
  };
  return mesh_from_segments(integer_knots(0, 10), integer_knots(0, 10), segs);
}

}  // namespace tmdim
