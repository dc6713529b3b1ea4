#pragma once

#include <stdexcept>
#include <string>

namespace tmdim {

enum class Orientation { Horizontal, Vertical };

inline const char* to_string(Orientation o) { return o == Orientation::Horizontal ? "horizontal" : "vertical"; }

/// Bi-degree (d1, d2) with smoothness alpha across vertical lines and beta
/// across horizontal lines. Construction enforces 0 <= alpha < d1 and
/// 0 <= beta < d2.
class SplineSpaceSpec {
 public:
  SplineSpaceSpec(int d1, int d2, int alpha, int beta) : d1_(d1), d2_(d2), alpha_(alpha), beta_(beta) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be >= 1");
    if (alpha < 0 || alpha >= d1) throw std::invalid_argument("need 0 <= alpha < d1");
    if (beta < 0 || beta >= d2) throw std::invalid_argument("need 0 <= beta < d2");
  }

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

  // Frequently used products.
  int cx() const { return d1_ - alpha_; }  // cofactor x-size
  int cy() const { return d2_ - beta_; }   // cofactor y-size
  int patch_size() const { return (d1_ + 1) * (d2_ + 1); }
  int vertex_cofactors() const { return cx() * cy(); }
  int hrow_block() const { return (d1_ + 1) * cy(); }  // rows of a horizontal l-edge
  int vrow_block() const { return (d2_ + 1) * cx(); }  // rows of a vertical l-edge

  /// ceil((d1+1)/(d1-alpha)), ceil((d2+1)/(d2-beta))
  int threshold_h() const { return (d1_ + 1 + cx() - 1) / cx(); }
  int threshold_v() const { return (d2_ + 1 + cy() - 1) / cy(); }
  int threshold(Orientation o) const { return o == Orientation::Horizontal ? threshold_h() : threshold_v(); }

  std::string str() const {
    return "(" + std::to_string(d1_) + "," + std::to_string(d2_) + "," + std::to_string(alpha_) + "," +
           std::to_string(beta_) + ")";
  }

  friend bool operator==(const SplineSpaceSpec&, const SplineSpaceSpec&) = default;

 private:
  int d1_, d2_, alpha_, beta_;
};

struct Thresholds {
  int n_h;
  int n_v;
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

inline Thresholds thresholds(const SplineSpaceSpec& s) { return {s.threshold_h(), s.threshold_v()}; }

/// Nullity of the conformality block of a single interior l-edge with m
/// vertices at distinct knots.
inline int ledge_nullity_formula(int m, const SplineSpaceSpec& s, Orientation o) {
  if (m < 2) throw std::invalid_argument("an l-edge has at least two vertices");
  auto pos = [](int v) { return v > 0 ? v : 0; };
  if (o == Orientation::Horizontal) return s.cy() * pos(m * s.cx() - s.d1() - 1);
  return s.cx() * pos(m * s.cy() - s.d2() - 1);
}

/// An l-edge is vanished when its block cannot have a nonzero solution.
inline bool is_vanished(int m, const SplineSpaceSpec& s, Orientation o) { return ledge_nullity_formula(m, s, o) == 0; }

}  // namespace tmdim
