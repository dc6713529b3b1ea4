// tmdim: spline space dimensions over T-meshes.
//
// exit status: 0 ok, 1 usage or I/O error, 2 malformed or invalid mesh,
// 3 internal inconsistency (oracle mismatch).

#include "tmdim/tmdim.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace tmdim;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  int d1 = 0, d2 = 0, alpha = 0, beta = 0;
  SplineSpaceSpec make() const { return SplineSpaceSpec(d1, d2, alpha, beta); }
};

void add_spec(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--d1", f.d1, "degree in x")->required();
  cmd->add_option("--d2", f.d2, "degree in y")->required();
  cmd->add_option("--alpha", f.alpha, "smoothness across vertical lines")->required();
  cmd->add_option("--beta", f.beta, "smoothness across horizontal lines")->required();
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

TMesh load_mesh(const std::string& path) {
  TMesh m = parse_tmesh(slurp(path));
  require_valid(m);
  return m;
}

std::string ledge_label(const TMesh& m, const Topology& t, int id) {
  const LEdge& l = t.ledges[id];
  const auto& a = t.vertices[l.vertices.front()].at;
  const auto& b = t.vertices[l.vertices.back()].at;
  if (l.orientation == Orientation::Horizontal)
    return "h:y=" + to_string(m.y_knots()[a.iy]) + ":x=" + to_string(m.x_knots()[a.ix]) + ".." + to_string(m.x_knots()[b.ix]);
  return "v:x=" + to_string(m.x_knots()[a.ix]) + ":y=" + to_string(m.y_knots()[a.iy]) + ".." + to_string(m.y_knots()[b.iy]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spline space dimensions over T-meshes"};
  app.require_subcommand(1);

  std::string mesh_path, out_path, dump_path, matrix_path, example;
  SpecFlags spec;
  bool as_json = false, as_text = false;
  int trials = 5, analyze_trials = 0, count = 50, max_splits = 10;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "dimension report for a mesh");
  analyze->add_option("mesh", mesh_path, "mesh file ('-' for stdin)")->required();
  add_spec(analyze, spec);
  auto* fmt = analyze->add_option_group("format");
  fmt->add_flag("--json", as_json, "JSON report");
  fmt->add_flag("--text", as_text, "aligned text report (default)");
  fmt->require_option(0, 1);
  analyze->add_option("--trials", analyze_trials, "knot samples for the stability check (0 skips it)")->default_val(0);
  analyze->add_option("--seed", seed, "first sampling seed")->default_val(0);

  auto* diag = app.add_subcommand("diag", "diagonalizability check");
  diag->add_option("mesh", mesh_path)->required();
  add_spec(diag, spec);

  auto* stab = app.add_subcommand("stability", "compare the rank at the given knots with the generic rank");
  stab->add_option("mesh", mesh_path)->required();
  add_spec(stab, spec);
  stab->add_option("--trials", trials, "knot samples")->default_val(5)->check(CLI::PositiveNumber);
  stab->add_option("--seed", seed, "first sampling seed")->default_val(0);

  auto* rnk = app.add_subcommand("rank", "rank of the conformality matrix, or of a matrix file");
  auto* rank_mesh = rnk->add_option("mesh", mesh_path);
  auto* rank_matrix = rnk->add_option("--matrix", matrix_path, "read a matrix file instead of a mesh");
  rank_mesh->excludes(rank_matrix);
  rnk->add_option("--dump", dump_path, "write the assembled matrix");
  auto* rd1 = rnk->add_option("--d1", spec.d1);
  auto* rd2 = rnk->add_option("--d2", spec.d2);
  auto* ral = rnk->add_option("--alpha", spec.alpha);
  auto* rbe = rnk->add_option("--beta", spec.beta);

  auto* cmp = app.add_subcommand("oracle-compare", "check the formula against the direct computation");
  cmp->add_option("meshes", mesh_path, "mesh file; random meshes when omitted");
  add_spec(cmp, spec);
  cmp->add_option("--count", count, "number of random meshes")->default_val(50)->check(CLI::NonNegativeNumber);
  cmp->add_option("--max-splits", max_splits, "splits per random mesh")->default_val(10)->check(CLI::NonNegativeNumber);
  cmp->add_option("--seed", seed, "seed of the first random mesh")->default_val(0);

  auto* gen = app.add_subcommand("gen", "emit a mesh file");
  auto* gen_kind = gen->add_option_group("kind");
  bool pinwheel = false, random = false;
  gen_kind->add_flag("--pinwheel", pinwheel, "pinwheel mesh with unstable dimension");
  gen_kind->add_option("--example", example, "named example")->check(CLI::IsMember({"pinwheel", "vanished", "four-ledge"}));
  gen_kind->add_flag("--random", random, "random split mesh");
  gen_kind->require_option(1);
  gen->add_option("--max-splits", max_splits)->default_val(10)->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed)->default_val(0);
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* render = app.add_subcommand("render", "SVG drawing of a mesh");
  render->add_option("mesh", mesh_path)->required();
  render->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (analyze->parsed()) {
      const auto s = spec.make();
      AnalysisOptions opt;
      opt.stability_trials = analyze_trials;
      opt.seed = seed;
      AnalysisResult a{s, dim_general(load_mesh(mesh_path), s, opt)};
      if (as_json)
        std::cout << report_json(a).dump(2) << '\n';
      else
        std::cout << report_text(a);
    } else if (diag->parsed()) {
      const auto s = spec.make();
      const TMesh m = reduce_vanished(load_mesh(mesh_path), s);
      const Topology t = extract_topology(m);
      auto order = is_diagonalizable(t, s);
      if (!order) {
        std::cout << "diagonalizable: no\n";
      } else {
        std::cout << "diagonalizable: yes, order:";
        for (int id : *order) std::cout << ' ' << ledge_label(m, t, id);
        std::cout << '\n';
      }
    } else if (stab->parsed()) {
      const auto r = stability_verdict(load_mesh(mesh_path), spec.make(), trials, seed);
      std::cout << "rank_at_knots " << r.rank_at_knots << "\ngeneric_rank  " << r.generic_rank << "\nverdict       "
                << (r.unstable() ? "unstable" : "stable") << "\ntrials        " << r.trials << "\nseed          " << r.seed
                << '\n';
    } else if (rnk->parsed()) {
      RationalMatrix m;
      if (!matrix_path.empty()) {
        std::istringstream in(slurp(matrix_path));
        m = read_matrix(in);
      } else {
        if (mesh_path.empty()) throw CLI::ValidationError("rank needs a mesh or --matrix");
        for (auto* o : {rd1, rd2, ral, rbe})
          if (o->count() == 0) throw CLI::ValidationError(o->get_name() + " is required with a mesh");
        const auto s = spec.make();
        m = assemble_conformality(reduce_vanished(load_mesh(mesh_path), s), s).entries;
      }
      if (!dump_path.empty()) {
        std::ostringstream os;
        write_matrix(os, m);
        write_out(dump_path, os.str());
      }
      std::cout << "rows " << m.rows() << "\ncols " << m.cols() << "\nrank " << rank(m) << '\n';
    } else if (cmp->parsed()) {
      const auto s = spec.make();
      int match = 0, total = 0;
      auto check = [&](const TMesh& m, const std::string& label) {
        const long long a = dim_general(m, s, {false, 0, 0}).dimension, b = dim_direct(m, s);
        ++total;
        if (a == b)
          ++match;
        else
          std::cout << "mismatch " << label << ": formula " << a << ", direct " << b << '\n';
      };
      if (!mesh_path.empty()) {
        check(load_mesh(mesh_path), mesh_path);
      } else {
        std::cout << "seed " << seed << '\n';
        for (int i = 0; i < count; ++i)
          check(random_tmesh(max_splits, seed + static_cast<std::uint64_t>(i)), "seed " + std::to_string(seed + i));
      }
      std::cout << match << '/' << total << " match\n";
      if (match != total) throw Inconsistent("oracle mismatch");
    } else if (gen->parsed()) {
      TMesh m = random ? random_tmesh(max_splits, seed)
                : (pinwheel || example == "pinwheel") ? pinwheel_counterexample()
                : example == "vanished"               ? vanished_ledge_example()
                                                      : four_ledge_example();
      if (random) std::cerr << "seed " << seed << '\n';
      write_out(out_path, serialize_tmesh(m));
    } else if (render->parsed()) {
      write_out(out_path, render_svg(load_mesh(mesh_path)));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidMesh& e) {
    std::cerr << "invalid mesh: " << e.what() << '\n';
    return 2;
  } catch (const Inconsistent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
