#include "tmdim/conformality.hpp"
#include "tmdim/dimension.hpp"
#include "tmdim/meshgen.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace tmdim;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

// Printed counterexample matrix: per l-edge four rows (1, u, u^2, u^3) over
// its five vertices, with u the coordinate along the l-edge.
struct PaperMatrix {
  std::vector<GridPoint> columns;  // vertex (x, y) per column
  RationalMatrix m;
};

PaperMatrix paper_pinwheel(const std::vector<Rational>& s, const std::vector<Rational>& t) {
  const std::vector<GridPoint> cols{{2, 2}, {3, 2}, {4, 2}, {8, 2}, {7, 2}, {7, 3}, {7, 4}, {7, 8},
                                    {7, 7}, {6, 7}, {5, 7}, {1, 7}, {2, 7}, {2, 6}, {2, 5}, {2, 1}};
  // l-edge vertex columns and whether the varying coordinate is x
  const std::vector<std::pair<std::vector<int>, bool>> ledges{
      {{0, 1, 2, 3, 4}, true}, {{4, 5, 6, 7, 8}, false}, {{8, 9, 10, 11, 12}, true}, {{12, 13, 14, 15, 0}, false}};
  PaperMatrix p{cols, RationalMatrix(16, 16)};
  for (std::size_t e = 0; e < ledges.size(); ++e)
    for (int r = 0; r < 4; ++r)
      for (int c : ledges[e].first) {
        const Rational u = ledges[e].second ? s[cols[c].ix] : t[cols[c].iy];
        p.m(e * 4 + r, c) = pow(u, r);
      }
  return p;
}

}  // namespace

TEST_CASE("ledge block rows are rescaled powers of the vertex positions") {
  SplineSpaceSpec s(3, 3, 2, 2);
  const auto pos = ints({2, 3, 4, 8, 7});
  auto b = ledge_block(Orientation::Horizontal, pos, s);
  REQUIRE(b.rows() == 4);
  REQUIRE(b.cols() == 5);
  for (int k = 0; k <= 3; ++k)
    for (std::size_t t = 0; t < pos.size(); ++t) {
      // coefficient of x^k in (x - x_t)^3
      const Rational scale = Rational(binomial(3, k)) * ((3 - k) % 2 ? -1 : 1);
      CHECK(b(k, t) == scale * pow(pos[t], 3 - k));
    }
}

TEST_CASE("ledge block with three vertices at spec(3,3,1,1) has full row rank") {
  auto b = ledge_block(Orientation::Horizontal, ints({0, 2, 5}), SplineSpaceSpec(3, 3, 1, 1));
  CHECK(b.rows() == 8);
  CHECK(b.cols() == 12);
  CHECK(rank(b) == 8);
}

TEST_CASE("ledge block preconditions") {
  SplineSpaceSpec s(3, 3, 2, 2);
  CHECK_THROWS_AS(ledge_block(Orientation::Horizontal, ints({4}), s), ConformalityError);
  CHECK_THROWS_AS(ledge_block(Orientation::Vertical, ints({1, 2, 1}), s), ConformalityError);
  auto m = tensor_mesh(2, 2);
  auto t = extract_topology(m);
  CHECK_THROWS_AS(ledge_block(m, t, t.ledges[0], s), ConformalityError);
}

TEST_CASE("vertical block mirrors the horizontal one with swapped spec") {
  const auto pos = ints({1, 3, 4, 9});
  auto h = ledge_block(Orientation::Horizontal, pos, SplineSpaceSpec(4, 3, 2, 1));
  auto v = ledge_block(Orientation::Vertical, pos, SplineSpaceSpec(3, 4, 1, 2));
  REQUIRE(h.rows() == v.rows());
  REQUIRE(h.cols() == v.cols());
  // column (t, p, q) in h corresponds to (t, q, p) in v
  const int cx = 2, cy = 2;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t t = 0; t < pos.size(); ++t)
      for (int p = 0; p < cx; ++p)
        for (int q = 0; q < cy; ++q) CHECK(h(r, t * 4 + p * cy + q) == v(r, t * 4 + q * cx + p));
}

TEST_CASE("single l-edge nullity matches the formula on small cases") {
  CHECK(ledge_nullity_formula(5, SplineSpaceSpec(3, 3, 2, 2), Orientation::Horizontal) == 1);
  CHECK(ledge_nullity_formula(4, SplineSpaceSpec(3, 3, 2, 2), Orientation::Horizontal) == 0);
  CHECK(ledge_nullity_formula(6, SplineSpaceSpec(3, 3, 1, 1), Orientation::Horizontal) == 16);
  auto b = ledge_block(Orientation::Horizontal, ints({1, 2, 4, 7, 8, 11}), SplineSpaceSpec(3, 3, 1, 1));
  CHECK(b.rows() == 8);
  CHECK(b.cols() == 24);
  CHECK(nullity(b) == 16);
  CHECK_THROWS(ledge_nullity_formula(1, SplineSpaceSpec(3, 3, 2, 2), Orientation::Vertical));
}

TEST_CASE("pinwheel matrix equals the printed one up to row scaling") {
  const SplineSpaceSpec s(3, 3, 2, 2);
  auto mesh = pinwheel_counterexample();
  auto topo = extract_topology(mesh);
  auto cm = assemble_conformality(mesh, topo, s);
  REQUIRE(cm.entries.rows() == 16);
  REQUIRE(cm.entries.cols() == 16);

  auto paper = paper_pinwheel(mesh.x_knots(), mesh.y_knots());
  // our column -> printed column
  std::vector<int> col_map;
  for (const auto& cl : cm.col_index) {
    auto at = topo.vertices[cl.vertex].at;
    auto it = std::find(paper.columns.begin(), paper.columns.end(), at);
    REQUIRE(it != paper.columns.end());
    col_map.push_back(static_cast<int>(it - paper.columns.begin()));
  }
  // our l-edge -> printed row block, identified by the l-edge's first printed column
  auto block_of = [&](int ledge) {
    const auto& l = topo.ledges[ledge];
    const bool h = l.orientation == Orientation::Horizontal;
    return h ? (l.fixed_knot_index == 2 ? 0 : 2) : (l.fixed_knot_index == 7 ? 1 : 3);
  };
  for (std::size_t r = 0; r < cm.row_index.size(); ++r) {
    const auto& rl = cm.row_index[r];
    const int k = rl.power;
    const Rational scale = Rational(binomial(3, k)) * ((3 - k) % 2 ? -1 : 1);
    const std::size_t pr = static_cast<std::size_t>(block_of(rl.ledge) * 4 + (3 - k));
    for (std::size_t c = 0; c < cm.col_index.size(); ++c) {
      INFO("row " << r << " col " << c);
      CHECK(cm.entries(r, c) == scale * paper.m(pr, col_map[c]));
    }
  }
}

TEST_CASE("printed pinwheel matrix ranks") {
  auto s = integer_knots(0, 9), t = integer_knots(0, 9);
  CHECK(rank(paper_pinwheel(s, t).m) == 15);
  CHECK(null_space_basis(paper_pinwheel(s, t).m).size() == 1);
  s[3] = Rational(3001, 1000);
  CHECK(rank(paper_pinwheel(s, t).m) == 16);
}

TEST_CASE("assembled matrix shape and sparsity follow the topology") {
  const std::vector<SplineSpaceSpec> specs{{2, 2, 1, 1}, {3, 3, 1, 1}, {3, 3, 2, 2}, {4, 3, 1, 2}};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto mesh = random_tmesh(10, seed);
    auto topo = extract_topology(mesh);
    for (const auto& s : specs) {
      auto cm = assemble_conformality(mesh, topo, s);
      auto c = mesh_counts(mesh, topo, s);
      REQUIRE(static_cast<long long>(cm.entries.rows()) == c.n_r);
      REQUIRE(static_cast<long long>(cm.entries.cols()) == c.n_c);
      for (std::size_t r = 0; r < cm.entries.rows(); ++r)
        for (std::size_t col = 0; col < cm.entries.cols(); ++col) {
          if (cm.entries(r, col) == 0) continue;
          const auto& l = topo.ledges[cm.row_index[r].ledge];
          CHECK(std::find(l.vertices.begin(), l.vertices.end(), cm.col_index[col].vertex) != l.vertices.end());
        }
    }
  }
}

TEST_CASE("rank is invariant under affine maps of the knots") {
  std::mt19937_64 rng(21);
  const SplineSpaceSpec s(3, 3, 2, 2);
  auto check_mesh = [&](const TMesh& mesh) {
    const auto r0 = rank(assemble_conformality(mesh, s).entries);
    for (int trial = 0; trial < 3; ++trial) {
      std::uniform_int_distribution<int> d(1, 9);
      const Rational a(d(rng), d(rng)), b(d(rng) - 5, d(rng));
      auto xs = mesh.x_knots(), ys = mesh.y_knots();
      for (auto& x : xs) x = a * x + b;
      for (auto& y : ys) y = -a * y + b;  // negative scale flips the order
      std::reverse(ys.begin(), ys.end());
      std::vector<Face> flipped;
      const int ny = static_cast<int>(ys.size()) - 1;
      for (const auto& f : mesh.faces()) flipped.push_back({f.ix0, f.ix1, ny - f.iy1, ny - f.iy0});
      TMesh mapped(xs, ys, flipped);
      CHECK(rank(assemble_conformality(mapped, s).entries) == r0);
    }
  };
  check_mesh(pinwheel_counterexample());
  for (std::uint64_t seed = 0; seed < 20; ++seed) check_mesh(random_tmesh(10, seed));
}

TEST_CASE("mesh without interior l-edges gives an empty matrix") {
  auto cm = assemble_conformality(tensor_mesh(3, 3), SplineSpaceSpec(3, 3, 1, 1));
  CHECK(cm.entries.rows() == 0);
  CHECK(cm.entries.cols() == 0);
  CHECK(rank(cm.entries) == 0);
}
