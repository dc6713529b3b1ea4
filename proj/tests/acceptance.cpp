// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "tmdim/tmdim.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace tmdim;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<SplineSpaceSpec> specs_up_to(int dmax) {
  std::vector<SplineSpaceSpec> out;
  for (int d1 = 1; d1 <= dmax; ++d1)
    for (int d2 = 1; d2 <= dmax; ++d2)
      for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) out.emplace_back(d1, d2, a, b);
  return out;
}

// the random corpus shared by criteria 3, 7 and 8
std::vector<TMesh> corpus() {
  std::vector<TMesh> out;
  for (std::uint64_t seed = 0; seed < 220; ++seed) out.push_back(random_tmesh(static_cast<int>(seed % 11), seed));
  return out;
}

const std::vector<SplineSpaceSpec> kOracleSpecs{{1, 1, 0, 0}, {2, 2, 1, 1}, {3, 3, 1, 1}, {3, 3, 2, 2}};

Outcome counterexample() {
  const auto t0 = Clock::now();
  const SplineSpaceSpec s(3, 3, 2, 2);
  const TMesh m = pinwheel_counterexample();
  const AnalysisOptions opt{false, 0, 0};
  const auto a = dim_general(m, s, opt);
  auto xs = m.x_knots();
  xs[3] = Rational(3001, 1000);
  const auto b = dim_general(m.with_knots(xs, m.y_knots()), s, opt);
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << "integer knots rank " << a.rank << " dim " << a.dimension << "; s3=3+1/1000 rank " << b.rank << " dim "
     << b.dimension << "; " << t << " s";
  return {a.rank == 15 && a.dimension == 49 && b.rank == 16 && b.dimension == 48 && t < 1.0, os.str()};
}

Outcome formulas() {
  MeshCounts ex1;
  ex1.C_h = 2, ex1.C_v = 2, ex1.T_h = 2, ex1.T_v = 2, ex1.V = 31;
  MeshCounts ex2;
  ex2.C_h = 4, ex2.C_v = 4, ex2.T_h = 2, ex2.T_v = 2, ex2.V = 27;
  const long long a = dim_diagonalizable_formula(ex1, SplineSpaceSpec(3, 3, 2, 2));
  const long long b = dim_diagonalizable_formula(ex2, SplineSpaceSpec(3, 3, 1, 1));
  const long long c = dim_general(vanished_ledge_example(), SplineSpaceSpec(3, 3, 2, 2)).dimension;
  std::ostringstream os;
  os << "count table A " << a << ", count table B " << b << ", reduced U-shape " << c;
  return {a == 47 && b == 156 && c == 24, os.str()};
}

Outcome oracle_equivalence(const std::vector<TMesh>& meshes) {
  const auto t0 = Clock::now();
  int runs = 0, mismatches = 0;
  std::string first;
  for (const auto& s : kOracleSpecs)
    for (std::size_t i = 0; i < meshes.size(); ++i) {
      const long long g = dim_general(meshes[i], s, {false, 0, 0}).dimension;
      const long long d = dim_direct(meshes[i], s);
      ++runs;
      if (g != d && mismatches++ == 0)
        first = "; first mismatch seed " + std::to_string(i) + " " + s.str() + ": " + std::to_string(g) + " vs " +
                std::to_string(d);
    }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << meshes.size() << " meshes x " << kOracleSpecs.size() << " specs, " << mismatches << " mismatches, " << t << " s"
     << first;
  return {meshes.size() >= 200 && mismatches == 0 && t < 600, os.str()};
}

Outcome single_ledge_nullity() {
  std::mt19937_64 rng(2024);
  int checks = 0, bad = 0;
  for (const auto& s : specs_up_to(4))
    for (int m = 2; m <= 8; ++m)
      for (auto o : {Orientation::Horizontal, Orientation::Vertical})
        for (int sample = 0; sample < 5; ++sample) {
          const auto pos = random_knots(static_cast<std::size_t>(m), rng);
          ++checks;
          if (nullity(ledge_block(o, pos, s)) != static_cast<std::size_t>(ledge_nullity_formula(m, s, o))) ++bad;
        }
  std::ostringstream os;
  os << checks << " blocks, " << bad << " disagreements";
  return {bad == 0, os.str()};
}

Outcome diagonalizability() {
  const std::vector<SplineSpaceSpec> specs{{2, 2, 1, 1}, {3, 3, 1, 1}, {3, 3, 2, 2}, {4, 4, 2, 2}, {2, 2, 0, 0}};
  std::vector<TMesh> meshes{pinwheel_counterexample(), four_ledge_example(), vanished_ledge_example()};
  for (std::uint64_t seed = 0; seed < 400; ++seed) meshes.push_back(random_tmesh(12, 5000 + seed));
  int compared = 0, disagree = 0, mono = 0, mono_bad = 0, diag = 0, rank_bad = 0;
  for (const auto& s : specs)
    for (std::size_t i = 0; i < meshes.size(); ++i) {
      const TMesh m = reduce_vanished(meshes[i], s);
      const Topology t = extract_topology(m);
      const auto greedy = is_diagonalizable(t, s);
      if (t.interior_ledges().size() <= 6) {
        ++compared;
        if (greedy.has_value() != find_order_exhaustive(t, s).has_value()) ++disagree;
      }
      if (check_mono_vertex_condition(t, s)) {
        ++mono;
        if (!greedy) ++mono_bad;
      }
      if (greedy) {
        ++diag;
        const auto n_r = static_cast<std::size_t>(mesh_counts(m, t, s).n_r);
        for (int k = 0; k < 20; ++k)
          if (rank(assemble_conformality(resample_knots(m, 77 * i + k), t, s).entries) != n_r) {
            ++rank_bad;
            break;
          }
      }
    }
  std::ostringstream os;
  os << compared << " greedy/exhaustive comparisons (" << disagree << " disagree); " << mono
     << " meshes meet the mono-vertex condition (" << mono_bad << " not diagonalizable); " << diag
     << " diagonalizable meshes x 20 knot draws (" << rank_bad << " below full row rank)";
  return {compared > 0 && disagree == 0 && mono_bad == 0 && rank_bad == 0 && diag > 0, os.str()};
}

Outcome tensor_identity() {
  int checks = 0, bad = 0;
  for (int nx = 1; nx <= 6; ++nx)
    for (int ny = 1; ny <= 6; ++ny) {
      const TMesh m = tensor_mesh(nx, ny);
      for (const auto& s : specs_up_to(4)) {
        const auto r = dim_general(m, s, {false, 0, 0});
        const long long expect = static_cast<long long>(s.d1() + 1 + r.counts.C_v * s.cx()) * (s.d2() + 1 + r.counts.C_h * s.cy());
        ++checks;
        if (r.dimension != expect || r.counts.C_v != nx - 1 || r.counts.C_h != ny - 1) ++bad;
      }
    }
  std::ostringstream os;
  os << checks << " mesh/spec pairs, " << bad << " disagreements";
  return {bad == 0, os.str()};
}

Outcome reduced_regularity(const std::vector<TMesh>& meshes) {
  int checks = 0, bad = 0;
  for (const auto& s : specs_up_to(4)) {
    if (s.d1() < 2 * s.alpha() + 1 || s.d2() < 2 * s.beta() + 1) continue;
    for (const auto& m : meshes) {
      const auto counts = mesh_counts(m, extract_topology(m), s);
      ++checks;
      if (dim_general(m, s, {false, 0, 0}).dimension != dim_reduced_regularity(counts, s)) ++bad;
    }
  }
  std::ostringstream os;
  os << checks << " mesh/spec pairs, " << bad << " disagreements";
  return {checks > 0 && bad == 0, os.str()};
}

Outcome reduction_safety(const std::vector<TMesh>& meshes) {
  int checks = 0, bad = 0;
  for (const auto& s : kOracleSpecs)
    for (const auto& m : meshes) {
      const auto red = reduce_vanished_detailed(m, s);
      if (red.removed == 0 && red.residual_vanished == 0) continue;
      ++checks;
      if (dim_direct(m, s) != dim_direct(red.mesh, s)) ++bad;
    }
  std::ostringstream os;
  os << checks << " meshes with vanished l-edges, " << bad << " changed dimension";
  return {checks > 0 && bad == 0, os.str()};
}

}  // namespace

int main() {
  const auto meshes = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Counterexample regression", counterexample},
      {"Formula regressions", formulas},
      {"Oracle equivalence", [&] { return oracle_equivalence(meshes); }},
      {"Single l-edge nullity", single_ledge_nullity},
      {"Diagonalizability soundness", diagonalizability},
      {"Tensor-product identity", tensor_identity},
      {"Reduced-regularity cross-check", [&] { return reduced_regularity(meshes); }},
      {"Reduction safety", [&] { return reduction_safety(meshes); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
