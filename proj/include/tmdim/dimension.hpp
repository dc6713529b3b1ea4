#pragma once

#include "tmdim/conformality.hpp"
#include "tmdim/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace tmdim {

struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dimension over a diagonalizable T-mesh; depends on counts only.
inline long long dim_diagonalizable_formula(const MeshCounts& c, const SplineSpaceSpec& s) {
  return static_cast<long long>(s.patch_size()) + static_cast<long long>(c.C_h - c.T_h) * s.hrow_block() +
         static_cast<long long>(c.C_v - c.T_v) * s.vrow_block() + static_cast<long long>(c.V) * s.vertex_cofactors();
}

/// Dimension for reduced regularity (d1 >= 2 alpha + 1, d2 >= 2 beta + 1).
inline long long dim_reduced_regularity(const MeshCounts& c, const SplineSpaceSpec& s) {
  if (s.d1() < 2 * s.alpha() + 1 || s.d2() < 2 * s.beta() + 1)
    throw PreconditionViolated("reduced regularity needs d1 >= 2*alpha+1 and d2 >= 2*beta+1, got " + s.str());
  const long long d1 = s.d1(), d2 = s.d2(), a = s.alpha(), b = s.beta();
  return c.F * (d1 + 1) * (d2 + 1) - c.E_h * (d1 + 1) * (b + 1) - c.E_v * (d2 + 1) * (a + 1) + c.V * (a + 1) * (b + 1);
}

// ---------------------------------------------------------------------------
// Diagonalizability

struct NotAPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// nu_j = vertices of the j-th l-edge of `order` not on any earlier one.
inline std::vector<int> new_vertex_vector(const Topology& topo, const std::vector<int>& order) {
  auto interior = topo.interior_ledges();
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != interior) throw NotAPermutation("order must list every interior l-edge exactly once");
  std::set<int> seen;
  std::vector<int> nu;
  for (int id : order) {
    int fresh = 0;
    for (int v : topo.ledges[id].vertices)
      if (seen.insert(v).second) ++fresh;
    nu.push_back(fresh);
  }
  return nu;
}

inline bool order_meets_thresholds(const Topology& topo, const std::vector<int>& order, const SplineSpaceSpec& s) {
  auto nu = new_vertex_vector(topo, order);
  for (std::size_t j = 0; j < order.size(); ++j)
    if (nu[j] < s.threshold(topo.ledges[order[j]].orientation)) return false;
  return true;
}

/// Greedy decision. Repeatedly picks an l-edge with enough vertices that no
/// other remaining l-edge contains and fills the order from the back.
inline std::optional<std::vector<int>> is_diagonalizable(const Topology& topo, const SplineSpaceSpec& s) {
  std::vector<int> remaining = topo.interior_ledges();
  std::vector<int> order(remaining.size());
  std::size_t slot = remaining.size();
  while (!remaining.empty()) {
    bool placed = false;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const LEdge& l = topo.ledges[remaining[i]];
      int own = 0;
      for (int v : l.vertices) {
        const Vertex& vx = topo.vertices[v];
        const int other = l.orientation == Orientation::Horizontal ? vx.vledge : vx.hledge;
        const bool shared = other >= 0 && std::find(remaining.begin(), remaining.end(), other) != remaining.end();
        if (!shared) ++own;
      }
      if (own >= s.threshold(l.orientation)) {
        order[--slot] = remaining[i];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  if (!order_meets_thresholds(topo, order, s)) throw std::logic_error("greedy order failed verification");
  return order;
}

/// Tries every permutation; test support for small meshes.
inline std::optional<std::vector<int>> find_order_exhaustive(const Topology& topo, const SplineSpaceSpec& s) {
  auto order = topo.interior_ledges();
  do {
    if (order_meets_thresholds(topo, order, s)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

/// Each horizontal interior l-edge carries >= N^h - 1 mono-vertices and each
/// vertical one >= N^v - 1, not counting the two end vertices.
inline bool check_mono_vertex_condition(const Topology& topo, const SplineSpaceSpec& s) {
  for (int id : topo.interior_ledges()) {
    const LEdge& l = topo.ledges[id];
    int mono = 0;
    for (std::size_t k = 1; k + 1 < l.vertices.size(); ++k)
      if (topo.vertices[l.vertices[k]].mono) ++mono;
    if (mono < s.threshold(l.orientation) - 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Knot sampling and stability

/// `n` distinct increasing rationals k/q, k in [1, 1e6], q in [1, 1e3].
template <class Rng>
std::vector<Rational> random_knots(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<long> num(1, 1000000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (;;) {
    std::vector<Rational> k;
    for (std::size_t i = 0; i < n; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      k.push_back(r);
    }
    std::sort(k.begin(), k.end());
    if (std::adjacent_find(k.begin(), k.end()) == k.end()) return k;
  }
}

/// Same topology, knots redrawn from the seed (order preserved).
inline TMesh resample_knots(const TMesh& mesh, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto x = random_knots(mesh.x_knots().size(), rng);
  auto y = random_knots(mesh.y_knots().size(), rng);
  return mesh.with_knots(std::move(x), std::move(y));
}

/// Largest rank of the conformality matrix over `trials` random knot
/// assignments; trial i uses seed + i.
inline std::size_t generic_rank(const TMesh& mesh, const SplineSpaceSpec& s, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Topology topo = extract_topology(mesh);
  std::size_t best = 0;
  for (int i = 0; i < trials; ++i) {
    TMesh sample = resample_knots(mesh, seed + static_cast<std::uint64_t>(i));
    best = std::max(best, rank(assemble_conformality(sample, topo, s).entries));
  }
  return best;
}

enum class Stability { Stable, UnstableAtGivenKnots, Unknown };

inline const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::UnstableAtGivenKnots: return "unstable";
    case Stability::Unknown: return "unknown";
  }
  return "?";
}

struct StabilityReport {
  std::size_t rank_at_knots = 0;
  std::size_t generic_rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool unstable() const { return rank_at_knots < generic_rank; }
};

/// Works on the mesh after vanished l-edge removal.
inline StabilityReport stability_verdict(const TMesh& mesh, const SplineSpaceSpec& s, int trials, std::uint64_t seed) {
  require_valid(mesh);
  const TMesh reduced = reduce_vanished(mesh, s);
  StabilityReport r;
  r.rank_at_knots = rank(assemble_conformality(reduced, s).entries);
  // sampling also covers the given knots
  r.generic_rank = std::max(r.rank_at_knots, generic_rank(reduced, s, trials, seed));
  r.trials = trials;
  r.seed = seed;
  return r;
}

// ---------------------------------------------------------------------------

struct GenericRankInfo {
  std::size_t rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

struct DimensionReport {
  MeshCounts counts;  // of the reduced mesh
  std::size_t rank = 0;
  std::size_t nullity = 0;
  long long dimension = 0;
  std::optional<std::vector<int>> diagonalizable;  // l-edge ids in the reduced topology
  Stability stability = Stability::Unknown;
  std::optional<GenericRankInfo> generic_rank;
  int removed_vanished = 0;
  int residual_vanished = 0;
};

struct AnalysisOptions {
  bool check_diagonalizable = true;
  int stability_trials = 0;  // 0: skip knot sampling
  std::uint64_t seed = 0;
};

/// Base + cross-cut + free-vertex contributions; add nullity(M) for the dimension.
inline long long topological_part(const MeshCounts& c, const SplineSpaceSpec& s) {
  return static_cast<long long>(s.patch_size()) + static_cast<long long>(c.C_h) * s.hrow_block() +
         static_cast<long long>(c.C_v) * s.vrow_block() + static_cast<long long>(c.V_plus) * s.vertex_cofactors();
}

inline DimensionReport dim_general(const TMesh& mesh, const SplineSpaceSpec& s, const AnalysisOptions& opt = {}) {
  require_valid(mesh);
  const Reduction red = reduce_vanished_detailed(mesh, s);
  const Topology topo = extract_topology(red.mesh);
  DimensionReport rep;
  rep.removed_vanished = red.removed;
  rep.residual_vanished = red.residual_vanished;
  rep.counts = mesh_counts(red.mesh, topo, s);
  const auto cm = assemble_conformality(red.mesh, topo, s);
  rep.rank = rank(cm.entries);
  rep.nullity = cm.entries.cols() - rep.rank;
  rep.dimension = topological_part(rep.counts, s) + static_cast<long long>(rep.nullity);
  if (opt.check_diagonalizable) rep.diagonalizable = is_diagonalizable(topo, s);
  if (opt.stability_trials > 0) {
    std::size_t g = std::max(rep.rank, generic_rank(red.mesh, s, opt.stability_trials, opt.seed));
    rep.generic_rank = GenericRankInfo{g, opt.stability_trials, opt.seed};
    rep.stability = rep.rank < g ? Stability::UnstableAtGivenKnots : Stability::Stable;
  } else if (rep.diagonalizable) {
    rep.stability = Stability::Stable;
  }
  return rep;
}

}  // namespace tmdim
