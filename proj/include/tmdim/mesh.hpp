#pragma once

#include "tmdim/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tmdim {

/// Axis-aligned face given by knot indices: [x[ix0], x[ix1]] x [y[iy0], y[iy1]].
struct Face {
  int ix0, ix1, iy0, iy1;
  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Grid point in knot-index coordinates.
struct GridPoint {
  int ix, iy;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// T-mesh: topology in knot indices, geometry in the knot values. The
/// constructor checks local invariants only; `validate` checks the global ones.
class TMesh {
 public:
  TMesh(std::vector<Rational> x_knots, std::vector<Rational> y_knots, std::vector<Face> faces)
      : x_(std::move(x_knots)), y_(std::move(y_knots)), faces_(std::move(faces)) {
    check_increasing(x_, "x_knots");
    check_increasing(y_, "y_knots");
    if (faces_.empty()) throw ParseError("mesh has no faces");
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const Face& f = faces_[i];
      auto in_range = [](int v, std::size_t n) { return v >= 0 && static_cast<std::size_t>(v) < n; };
      if (!in_range(f.ix0, x_.size()) || !in_range(f.ix1, x_.size()) || !in_range(f.iy0, y_.size()) ||
          !in_range(f.iy1, y_.size()))
        throw ParseError("face " + std::to_string(i) + ": knot index out of range");
      if (f.ix0 >= f.ix1 || f.iy0 >= f.iy1) throw ParseError("face " + std::to_string(i) + ": need ix0 < ix1 and iy0 < iy1");
    }
  }

  const std::vector<Rational>& x_knots() const { return x_; }
  const std::vector<Rational>& y_knots() const { return y_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Same topology, different knot values (must keep the count).
  TMesh with_knots(std::vector<Rational> x, std::vector<Rational> y) const {
    if (x.size() != x_.size() || y.size() != y_.size()) throw std::invalid_argument("knot count mismatch");
    return TMesh(std::move(x), std::move(y), faces_);
  }

  /// Drops knot lines no face references and sorts faces; geometry is kept.
  TMesh compacted() const {
    std::set<int> xs, ys;
    for (const auto& f : faces_) {
      xs.insert({f.ix0, f.ix1});
      ys.insert({f.iy0, f.iy1});
    }
    auto remap = [](const std::set<int>& used, const std::vector<Rational>& knots, std::map<int, int>& idx) {
      std::vector<Rational> out;
      for (int i : used) {
        idx[i] = static_cast<int>(out.size());
        out.push_back(knots[i]);
      }
      return out;
    };
    std::map<int, int> mx, my;
    auto nx = remap(xs, x_, mx);
    auto ny = remap(ys, y_, my);
    std::vector<Face> nf;
    for (const auto& f : faces_) nf.push_back({mx[f.ix0], mx[f.ix1], my[f.iy0], my[f.iy1]});
    std::sort(nf.begin(), nf.end());
    return TMesh(std::move(nx), std::move(ny), std::move(nf));
  }

  friend bool operator==(const TMesh&, const TMesh&) = default;

 private:
  static void check_increasing(const std::vector<Rational>& k, const char* name) {
    if (k.size() < 2) throw ParseError(std::string(name) + ": need at least two knots");
    for (std::size_t i = 1; i < k.size(); ++i)
      if (!(k[i - 1] < k[i])) throw ParseError(std::string(name) + ": knots must be strictly increasing");
  }

  std::vector<Rational> x_, y_;
  std::vector<Face> faces_;
};

// ---------------------------------------------------------------------------
// Mesh file format (JSON):
//   {"x_knots": ["0", "1/2", ...], "y_knots": [...], "faces": [[ix0,ix1,iy0,iy1], ...]}

inline TMesh parse_tmesh(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("mesh document must be an object");
  auto knots = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
    std::vector<Rational> out;
    for (const auto& v : doc[key]) {
      if (v.is_string())
        out.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer())
        out.emplace_back(Integer(std::to_string(v.get<long long>())));
      else
        throw ParseError(std::string(key) + ": knots must be rational strings");
    }
    return out;
  };
  auto xs = knots("x_knots");
  auto ys = knots("y_knots");
  if (!doc.contains("faces") || !doc["faces"].is_array()) throw ParseError("missing array 'faces'");
  std::vector<Face> faces;
  for (const auto& f : doc["faces"]) {
    if (!f.is_array() || f.size() != 4) throw ParseError("each face must be [ix0, ix1, iy0, iy1]");
    std::array<int, 4> v{};
    for (int i = 0; i < 4; ++i) {
      if (!f[i].is_number_integer()) throw ParseError("face indices must be integers");
      v[i] = f[i].get<int>();
    }
    faces.push_back({v[0], v[1], v[2], v[3]});
  }
  return TMesh(std::move(xs), std::move(ys), std::move(faces));
}

/// Canonical form: faces sorted, rationals in lowest terms, fixed layout.
inline std::string serialize_tmesh(const TMesh& mesh) {
  auto knots = [](const std::vector<Rational>& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ", \"" : "\"") + to_string(k[i]) + "\"";
    return s + "]";
  };
  auto faces = mesh.faces();
  std::sort(faces.begin(), faces.end());
  std::string out = "{\n  \"x_knots\": " + knots(mesh.x_knots()) + ",\n  \"y_knots\": " + knots(mesh.y_knots()) +
                    ",\n  \"faces\": [";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    out += (i ? ",\n    [" : "\n    [") + std::to_string(f.ix0) + ", " + std::to_string(f.ix1) + ", " +
           std::to_string(f.iy0) + ", " + std::to_string(f.iy1) + "]";
  }
  return out + "\n  ]\n}\n";
}

// ---------------------------------------------------------------------------
// Validation

enum class ValidationError { None, OverlappingFaces, Disconnected, HasHole, NotRegular };

inline const char* to_string(ValidationError e) {
  switch (e) {
    case ValidationError::None: return "OK";
    case ValidationError::OverlappingFaces: return "OverlappingFaces";
    case ValidationError::Disconnected: return "Disconnected";
    case ValidationError::HasHole: return "HasHole";
    case ValidationError::NotRegular: return "NotRegular";
  }
  return "?";
}

struct ValidationReport {
  ValidationError error = ValidationError::None;
  std::string message;
  std::vector<int> faces;           // offending faces, if any
  std::optional<GridPoint> vertex;  // offending vertex, if any

  bool ok() const { return error == ValidationError::None; }
};

struct InvalidMesh : std::runtime_error {
  explicit InvalidMesh(ValidationReport r) : std::runtime_error(r.message), report(std::move(r)) {}
  ValidationReport report;
};

namespace detail {

// Quadrant occupancy around a grid point, in counter-clockwise order
// NE, NW, SW, SE. Entry is the covering face index or -1.
inline std::array<int, 4> quadrants(const std::vector<Face>& faces, GridPoint p) {
  std::array<int, 4> q{-1, -1, -1, -1};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& f = faces[i];
    const bool right = f.ix0 <= p.ix && p.ix < f.ix1;
    const bool left = f.ix0 < p.ix && p.ix <= f.ix1;
    const bool up = f.iy0 <= p.iy && p.iy < f.iy1;
    const bool down = f.iy0 < p.iy && p.iy <= f.iy1;
    if (right && up) q[0] = static_cast<int>(i);
    if (left && up) q[1] = static_cast<int>(i);
    if (left && down) q[2] = static_cast<int>(i);
    if (right && down) q[3] = static_cast<int>(i);
  }
  return q;
}

inline std::set<GridPoint> face_corners(const std::vector<Face>& faces) {
  std::set<GridPoint> pts;
  for (const auto& f : faces) pts.insert({{f.ix0, f.iy0}, {f.ix1, f.iy0}, {f.ix0, f.iy1}, {f.ix1, f.iy1}});
  return pts;
}

/// Counts the unit segments of the subdivision: every face side is cut at
/// the grid points (face corners) lying on it; shared pieces count once.
inline std::size_t count_segments(const std::vector<Face>& faces, const std::set<GridPoint>& pts) {
  std::map<int, std::vector<int>> by_row, by_col;
  for (const auto& p : pts) {
    by_row[p.iy].push_back(p.ix);
    by_col[p.ix].push_back(p.iy);
  }
  std::set<std::array<int, 4>> segs;  // {dir, line, a, b}
  auto add = [&](int dir, int line, int lo, int hi, const std::vector<int>& on_line) {
    int prev = lo;
    for (int v : on_line) {
      if (v <= lo || v > hi) continue;
      segs.insert({dir, line, prev, v});
      prev = v;
    }
  };
  for (const auto& f : faces) {
    add(0, f.iy0, f.ix0, f.ix1, by_row[f.iy0]);
    add(0, f.iy1, f.ix0, f.ix1, by_row[f.iy1]);
    add(1, f.ix0, f.iy0, f.iy1, by_col[f.ix0]);
    add(1, f.ix1, f.iy0, f.iy1, by_col[f.ix1]);
  }
  return segs.size();
}

}  // namespace detail

/// Global validity: disjoint interiors, connected, regular, no holes.
inline ValidationReport validate(const TMesh& mesh) {
  const auto& faces = mesh.faces();
  const int n = static_cast<int>(faces.size());
  auto overlap = [](int a0, int a1, int b0, int b1) { return a0 < b1 && b0 < a1; };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Face &a = faces[i], &b = faces[j];
      if (overlap(a.ix0, a.ix1, b.ix0, b.ix1) && overlap(a.iy0, a.iy1, b.iy0, b.iy1))
        return {ValidationError::OverlappingFaces,
                "faces " + std::to_string(i) + " and " + std::to_string(j) + " overlap", {i, j}, std::nullopt};
    }

  // Components of the edge-adjacency graph (faces sharing a positive-length segment).
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  auto find = [&](int i) {
    while (comp[i] != i) i = comp[i] = comp[comp[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Face &a = faces[i], &b = faces[j];
      const bool vshare = (a.ix1 == b.ix0 || b.ix1 == a.ix0) && overlap(a.iy0, a.iy1, b.iy0, b.iy1);
      const bool hshare = (a.iy1 == b.iy0 || b.iy1 == a.iy0) && overlap(a.ix0, a.ix1, b.ix0, b.ix1);
      if (vshare || hshare) comp[find(i)] = find(j);
    }

  const auto pts = detail::face_corners(faces);
  for (const auto& p : pts) {
    auto q = detail::quadrants(faces, p);
    const bool diag1 = q[0] >= 0 && q[2] >= 0 && q[1] < 0 && q[3] < 0;
    const bool diag2 = q[1] >= 0 && q[3] >= 0 && q[0] < 0 && q[2] < 0;
    if (diag1 || diag2) {
      int a = diag1 ? q[0] : q[1], b = diag1 ? q[2] : q[3];
      return {ValidationError::NotRegular,
              "vertex (" + std::to_string(p.ix) + "," + std::to_string(p.iy) + ") joins faces only at a corner",
              {a, b}, p};
    }
  }

  for (int i = 1; i < n; ++i)
    if (find(i) != find(0))
      return {ValidationError::Disconnected, "face " + std::to_string(i) + " is not connected to face 0", {0, i},
              std::nullopt};

  const long long chi = static_cast<long long>(pts.size()) -
                        static_cast<long long>(detail::count_segments(faces, pts)) + static_cast<long long>(n);
  if (chi != 1)
    return {ValidationError::HasHole, "Euler characteristic " + std::to_string(chi) + " != 1: the domain has a hole",
            {}, std::nullopt};
  return {};
}

inline void require_valid(const TMesh& mesh) {
  auto r = validate(mesh);
  if (!r.ok()) throw InvalidMesh(std::move(r));
}

}  // namespace tmdim
