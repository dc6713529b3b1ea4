#pragma once

// Brute-force dimension straight from the definition of the spline space:
// one bi-degree (d1, d2) polynomial per face, coefficients in the global
// monomial basis x^a y^b, and smoothness equations across every segment
// shared by two faces. Deliberately shares no code with topology.hpp or the
// conformality assembly.

#include "tmdim/linalg.hpp"
#include "tmdim/mesh.hpp"
#include "tmdim/spec.hpp"

#include <vector>

namespace tmdim {

struct SmoothnessSystem {
  RationalMatrix matrix;
  std::size_t unknowns() const { return matrix.cols(); }
  /// Column of coefficient x^a y^b on face f.
  static std::size_t column(const SplineSpaceSpec& s, int f, int a, int b) {
    return static_cast<std::size_t>(f) * s.patch_size() + a * (s.d2() + 1) + b;
  }
};

inline SmoothnessSystem smoothness_system(const TMesh& mesh, const SplineSpaceSpec& s) {
  const auto& faces = mesh.faces();
  const int n = static_cast<int>(faces.size());
  auto overlap = [](int a0, int a1, int b0, int b1) { return a0 < b1 && b0 < a1; };

  struct Pair {
    int left, right;  // left/below face, right/above face
    bool vertical;    // shared segment lies on a vertical line
    Rational at;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Face &a = faces[i], &b = faces[j];
      if (a.ix1 == b.ix0 && overlap(a.iy0, a.iy1, b.iy0, b.iy1)) pairs.push_back({i, j, true, mesh.x_knots()[a.ix1]});
      if (a.iy1 == b.iy0 && overlap(a.ix0, a.ix1, b.ix0, b.ix1)) pairs.push_back({i, j, false, mesh.y_knots()[a.iy1]});
    }

  std::size_t rows = 0;
  for (const auto& p : pairs) rows += p.vertical ? (s.alpha() + 1) * (s.d2() + 1) : (s.beta() + 1) * (s.d1() + 1);
  SmoothnessSystem sys{RationalMatrix(rows, static_cast<std::size_t>(n) * s.patch_size())};

  std::size_t r = 0;
  for (const auto& p : pairs) {
    if (p.vertical) {
      // d^j/dx^j (p_left - p_right)(x_e, y) == 0 for every power y^b
      for (int j = 0; j <= s.alpha(); ++j)
        for (int b = 0; b <= s.d2(); ++b, ++r)
          for (int a = j; a <= s.d1(); ++a) {
            Rational c = Rational(falling_factorial(a, j)) * pow(p.at, a - j);
            sys.matrix(r, SmoothnessSystem::column(s, p.left, a, b)) += c;
            sys.matrix(r, SmoothnessSystem::column(s, p.right, a, b)) -= c;
          }
    } else {
      for (int j = 0; j <= s.beta(); ++j)
        for (int a = 0; a <= s.d1(); ++a, ++r)
          for (int b = j; b <= s.d2(); ++b) {
            Rational c = Rational(falling_factorial(b, j)) * pow(p.at, b - j);
            sys.matrix(r, SmoothnessSystem::column(s, p.left, a, b)) += c;
            sys.matrix(r, SmoothnessSystem::column(s, p.right, a, b)) -= c;
          }
    }
  }
  return sys;
}

/// Dimension of the spline space as the nullity of the smoothness system.
/// Applies no vanished l-edge reduction.
inline long long dim_direct(const TMesh& mesh, const SplineSpaceSpec& s) {
  require_valid(mesh);
  return static_cast<long long>(nullity(smoothness_system(mesh, s).matrix));
}

}  // namespace tmdim
