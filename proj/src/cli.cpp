// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "eqdecomp/decomp.hpp"
#include "eqdecomp/error.hpp"
#include "eqdecomp/fixtures.hpp"
#include "eqdecomp/json_io.hpp"
#include "eqdecomp/orbits.hpp"
#include "eqdecomp/partition.hpp"
#include "eqdecomp/spectra.hpp"
#include "eqdecomp/text_io.hpp"

namespace eqdecomp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::shared_ptr<spdlog::logger> logger() {
  auto log = spdlog::get("eqdecomp");
  if (!log) {
    log = spdlog::stderr_logger_mt("eqdecomp");
    log->set_pattern("[%l] %v");
  }
  const char* env = std::getenv("EQDECOMP_LOG");
  const std::string level = env ? env : "quiet";
  if (level == "debug") {
    log->set_level(spdlog::level::debug);
  } else if (level == "info") {
    log->set_level(spdlog::level::info);
  } else {
    log->set_level(spdlog::level::off);
  }
  return log;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
}

Permutation read_permutation(const std::string& path, std::optional<std::size_t> n) {
  const std::string text = read_file(path);
  return parse_permutation(text, n.value_or(std::max<std::size_t>(1, max_label_in_cycle_text(text))));
}

// Writes JSON to `path`, or to `out` when path is "-".
void emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << '\n';
  } else {
    write_file(path, j.dump(2) + "\n");
  }
}

struct Options {
  std::string graph_path;
  std::string perm_path;
  std::string kind_name = "adjacency";
  std::optional<double> tol;
  std::string json_path;
  std::optional<std::size_t> n;
  std::string decomposition_path;
  std::uint64_t seed = 1;
  // fixtures
  std::string fixture_name;
  std::vector<std::string> fixture_params;
  std::string out_dir;
  std::size_t planted_k = 3;
  std::size_t planted_p = 0;
  double density = 0.3;
  bool directed = false;
  bool weighted = false;
};

MatrixKind kind_of(const Options& o) { return *parse_matrix_kind(o.kind_name); }

const std::vector<std::string> kKindChoices{"adjacency", "weighted", "laplacian", "signless", "normalized", "distance"};

void add_kind(CLI::App* cmd, Options& o) {
  cmd->add_option("--kind", o.kind_name, "matrix kind")->check(CLI::IsMember(kKindChoices));
}

// ---- verbs ---------------------------------------------------------------

int cmd_check_auto(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  const Permutation phi = read_permutation(o.perm_path, g.order());
  out << (is_automorphism(g, phi, o.tol.value_or(0.0)) ? "true" : "false") << '\n';
  return 0;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const Permutation phi = read_permutation(o.perm_path, o.n);
  const OrbitStructure s = orbit_structure(phi);
  if (!o.json_path.empty()) {
    json orbits = json::array();
    for (const auto& orbit : s.orbits) {
      json cell = json::array();
      for (Vertex v : orbit) cell.push_back(v + 1);
      orbits.push_back(cell);
    }
    json fixed = json::array();
    for (Vertex v : s.fixed_vertices) fixed.push_back(v + 1);
    emit_json({{"permutation", phi.to_string()}, {"kind", s.kind_name()}, {"order", phi.order()},
               {"orbits", orbits}, {"fixed", fixed}},
              o.json_path, out);
    if (o.json_path == "-") return 0;
  }
  out << "permutation: " << phi.to_string() << '\n';
  out << "kind: " << s.kind_name() << '\n';
  out << "order: " << phi.order() << '\n';
  out << "orbits:\n";
  for (const auto& orbit : s.orbits) {
    std::vector<std::string> labels;
    for (Vertex v : orbit) labels.push_back(std::to_string(v + 1));
    out << "  {" << fmt::format("{}", fmt::join(labels, ", ")) << "}\n";
  }
  return 0;
}

int cmd_build(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  const CompatibleMatrix m = build_matrix(g, kind_of(o));
  if (!o.json_path.empty()) {
    emit_json({{"kind", o.kind_name}, {"matrix", matrix_to_json(m.entries())}}, o.json_path, out);
    if (o.json_path == "-") return 0;
  }
  out << o.kind_name << " matrix (" << m.dimension() << "x" << m.dimension() << "):\n" << format_matrix(m.entries());
  return 0;
}

int cmd_partition(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  const Permutation phi = read_permutation(o.perm_path, g.order());
  const CompatibleMatrix m = build_matrix(g, kind_of(o));
  const VertexPartition partition = orbit_partition(phi);
  const DivisorMatrix d = divisor_matrix(m, partition, o.tol);
  if (!o.json_path.empty()) {
    json cells = json::array();
    for (const auto& cell : partition.cells()) {
      json c = json::array();
      for (Vertex v : cell) c.push_back(v + 1);
      cells.push_back(c);
    }
    emit_json({{"cells", cells}, {"divisorMatrix", matrix_to_json(d.entries)}}, o.json_path, out);
    if (o.json_path == "-") return 0;
  }
  out << "orbit partition:";
  for (const auto& cell : partition.cells()) {
    std::vector<std::string> labels;
    for (Vertex v : cell) labels.push_back(std::to_string(v + 1));
    out << " {" << fmt::format("{}", fmt::join(labels, ",")) << "}";
  }
  out << "\nequitable: true\ndivisor matrix:\n" << format_matrix(d.entries);
  return 0;
}

void print_decomposition(const Decomposition& d, std::ostream& out) {
  std::vector<std::string> labels;
  for (Vertex v : d.ordering) labels.push_back(std::to_string(v + 1));
  out << "k=" << d.k << " r=" << d.r << " p=" << d.p << " omega=" << format_complex(d.omega) << '\n';
  out << "ordering: " << fmt::format("{}", fmt::join(labels, " ")) << '\n';
  out << "divisor block:\n" << format_matrix(d.divisor_block);
  for (std::size_t j = 0; j < d.blocks.size(); ++j) out << "B" << j + 1 << ":\n" << format_matrix(d.blocks[j]);
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  const Permutation phi = read_permutation(o.perm_path, g.order());
  const CompatibleMatrix m = build_matrix(g, kind_of(o));
  const Decomposition d = decompose(m, phi, o.tol.value_or(0.0));
  logger()->info("decomposed {} matrix: n={} k={} r={} p={}", o.kind_name, m.dimension(), d.k, d.r, d.p);
  if (o.json_path.empty() || o.json_path == "-") {
    out << decomposition_to_json(d).dump(2) << '\n';
    return 0;
  }
  emit_json(decomposition_to_json(d), o.json_path, out);
  print_decomposition(d, out);
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  const CompatibleMatrix m = build_matrix(g, kind_of(o));
  const SpectrumMultiset s = eigenvalues(m.entries());
  if (!o.json_path.empty()) {
    emit_json(spectrum_to_json(s), o.json_path, out);
    if (o.json_path == "-") return 0;
  }
  out << "spectrum of " << o.kind_name << " matrix (n=" << m.dimension() << "):\n";
  for (const auto& z : s.sorted_values()) out << "  " << format_complex(z) << '\n';
  out << "simple eigenvalues: " << count_simple(s) << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  const Permutation phi = read_permutation(o.perm_path, g.order());
  const CompatibleMatrix m = build_matrix(g, kind_of(o));
  const Decomposition d = o.decomposition_path.empty()
                              ? decompose(m, phi, o.tol.value_or(0.0))
                              : decomposition_from_json(json::parse(read_file(o.decomposition_path)));

  const double residual = verify_similarity(m, phi, d);
  const double residual_tol = 1e-10 * std::max(1.0, m.entries().inf_norm());
  const bool similar = residual <= residual_tol;

  const SpectrumMultiset full = eigenvalues(m.entries());
  SpectrumMultiset pieces = eigenvalues(d.divisor_block);
  for (const auto& b : d.blocks) {
    const auto v = eigenvalues(b).values;
    pieces.values.insert(pieces.values.end(), v.begin(), v.end());
  }
  const double spectrum_tol = full.tolerance;
  const bool spectra_match = multiset_equal(full, pieces, spectrum_tol);

  if (!o.json_path.empty()) {
    emit_json({{"residual", residual},
               {"residualTolerance", residual_tol},
               {"similarity", similar},
               {"spectrumTolerance", spectrum_tol},
               {"spectrumMatch", spectra_match}},
              o.json_path, out);
  }
  if (o.json_path != "-") {
    out << "similarity residual: " << fmt::format("{:.3e}", residual) << " (tolerance "
        << fmt::format("{:.3e}", residual_tol) << "): " << (similar ? "pass" : "FAIL") << '\n';
    out << "spectrum match: " << (spectra_match ? "pass" : "FAIL") << " (tolerance "
        << fmt::format("{:.3e}", spectrum_tol) << ")\n";
  }
  return similar && spectra_match ? 0 : 1;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Permutation phi = read_permutation(o.perm_path, o.n);
  const auto bounds = count_bounds(phi, phi.size());
  if (!o.json_path.empty()) {
    emit_json(bounds_to_json(bounds), o.json_path, out);
    if (o.json_path == "-") return 0;
  }
  out << "automorphism " << phi.to_string() << " (" << orbit_structure(phi).kind_name() << ", n=" << phi.size()
      << ")\n";
  for (const auto& b : bounds) {
    out << to_string(b.kind) << ": at most " << b.bound << " simple eigenvalues";
    if (b.kind == BoundKind::UniformOdd || b.kind == BoundKind::UniformEven) {
      out << " (k=" << b.k << ", r=" << b.r << ")";
    } else if (b.kind == BoundKind::BasicOdd || b.kind == BoundKind::BasicEven) {
      out << " (k=" << b.k << ", N=" << b.fixed_points << ")";
    }
    out << '\n';
  }
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.graph_path));
  std::vector<std::string> files;
  if (fs::is_directory(o.perm_path)) {
    for (const auto& entry : fs::directory_iterator(o.perm_path))
      if (entry.is_regular_file()) files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(o.perm_path);
  }
  if (files.empty()) throw Error("no permutation files in '" + o.perm_path + "'");
  std::vector<Permutation> automorphisms;
  for (const auto& f : files) automorphisms.push_back(read_permutation(f, g.order()));

  const MatrixKind kind = kind_of(o);
  const CompatibleMatrix m = build_matrix(g, kind);
  const SpectrumMultiset partial = certified_eigen_subset(m, automorphisms);
  const SpectralBoundsReport report = spectral_bounds(partial, kind);
  if (!o.json_path.empty()) {
    emit_json(spectral_report_to_json(partial, report), o.json_path, out);
    if (o.json_path == "-") return 0;
  }
  out << "certified eigenvalues (" << partial.size() << "): " << format_values(partial.sorted_values()) << '\n';
  out << "spectral radius >= " << format_real(report.radius_lower_bound) << '\n';
  if (kind == MatrixKind::Laplacian || kind == MatrixKind::NormalizedLaplacian) {
    out << "algebraic connectivity <= "
        << (report.gap_upper_bound ? format_real(*report.gap_upper_bound) : std::string("none (no positive value)"))
        << '\n';
  }
  return 0;
}

// ---- fixtures ------------------------------------------------------------

struct NamedFixture {
  std::string name;
  Graph graph;
  std::vector<Permutation> automorphisms;
};

std::size_t param(const std::vector<std::string>& params, std::size_t index, const std::string& what) {
  if (index >= params.size()) throw CLI::ValidationError("fixtures", "missing parameter " + what);
  std::size_t value = 0;
  try {
    std::size_t used = 0;
    value = std::stoul(params[index], &used);
    if (used != params[index].size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw CLI::ValidationError("fixtures", "parameter " + what + " must be a non-negative integer");
  }
  return value;
}

NamedFixture make_fixture(const Options& o) {
  const auto& name = o.fixture_name;
  const auto& params = o.fixture_params;
  const auto single = [](std::string label, fixtures::Fixture f) {
    return NamedFixture{std::move(label), std::move(f.graph), {std::move(f.automorphism)}};
  };
  if (name == "figure1") return single("figure1", fixtures::figure1());
  if (name == "trigraph") return single("trigraph", fixtures::trigraph10());
  if (name == "ksun") {
    const auto k = param(params, 0, "<k>");
    return single("ksun-" + std::to_string(k), fixtures::k_sun(k));
  }
  if (name == "ladder") {
    const auto k = param(params, 0, "<k>");
    return single("ladder-" + std::to_string(k), fixtures::directed_ladder(k));
  }
  if (name == "tree") {
    const auto n = param(params, 0, "<n>");
    const auto big_n = param(params, 1, "<N>");
    return single("tree-" + std::to_string(n) + "-" + std::to_string(big_n), fixtures::sharpness_tree(n, big_n));
  }
  if (name == "network") {
    auto net = fixtures::local_symmetry_network();
    return NamedFixture{"network", std::move(net.graph), std::move(net.automorphisms)};
  }
  if (name == "planted") {
    const std::size_t n = o.n.value_or(12);
    fixtures::PlantedOptions options;
    options.directedness = o.directed ? Directedness::Directed : Directedness::Undirected;
    options.weighted = o.weighted;
    auto inst = fixtures::planted_random(o.seed, n, o.planted_k, o.planted_p, o.density, options);
    return NamedFixture{"planted-" + std::to_string(o.seed), std::move(inst.graph), {std::move(inst.automorphism)}};
  }
  throw CLI::ValidationError("fixtures", "unknown fixture '" + name +
                                             "' (expected figure1, ksun, ladder, trigraph, tree, network, planted, "
                                             "export-all)");
}

std::string fixture_text(const NamedFixture& f) {
  std::string text = "# fixture: " + f.name + "\n" + to_graph_text(f.graph);
  for (const auto& phi : f.automorphisms) text += "# automorphism: " + phi.to_string() + "\n";
  return text;
}

void write_fixture(const NamedFixture& f, const fs::path& dir) {
  write_file(dir / (f.name + ".txt"), to_graph_text(f.graph));
  if (f.automorphisms.size() == 1) {
    write_file(dir / (f.name + "-phi.txt"), f.automorphisms.front().to_string() + "\n");
    return;
  }
  const fs::path perms = dir / (f.name + "-perms");
  fs::create_directories(perms);
  for (std::size_t i = 0; i < f.automorphisms.size(); ++i)
    write_file(perms / ("phi" + std::to_string(i + 1) + ".txt"), f.automorphisms[i].to_string() + "\n");
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  if (o.fixture_name == "export-all") {
    if (o.fixture_params.empty()) throw CLI::ValidationError("fixtures", "export-all needs a target directory");
    const fs::path dir = o.fixture_params.front();
    fs::create_directories(dir);
    std::vector<NamedFixture> corpus;
    const auto add = [&corpus](std::string name, fixtures::Fixture f) {
      corpus.push_back({std::move(name), std::move(f.graph), {std::move(f.automorphism)}});
    };
    add("figure1", fixtures::figure1());
    for (std::size_t k : {3, 4, 5, 6, 7}) add("ksun-" + std::to_string(k), fixtures::k_sun(k));
    for (std::size_t k : {3, 4}) add("ladder-" + std::to_string(k), fixtures::directed_ladder(k));
    add("trigraph", fixtures::trigraph10());
    add("tree-8-3", fixtures::sharpness_tree(8, 3));
    auto net = fixtures::local_symmetry_network();
    corpus.push_back({"network", std::move(net.graph), std::move(net.automorphisms)});
    for (const auto& f : corpus) {
      write_fixture(f, dir);
      out << "wrote " << (dir / (f.name + ".txt")).string() << '\n';
    }
    return 0;
  }
  const NamedFixture f = make_fixture(o);
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    write_fixture(f, o.out_dir);
    out << "wrote " << (fs::path(o.out_dir) / (f.name + ".txt")).string() << '\n';
    return 0;
  }
  out << fixture_text(f);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable decompositions of graph matrices over uniform and basic automorphisms", "eqdecomp"};
  app.require_subcommand(1, 1);
  Options o;

  auto* check = app.add_subcommand("check-auto", "test whether a permutation is an automorphism");
  check->add_option("graph", o.graph_path)->required();
  check->add_option("perm", o.perm_path)->required();
  check->add_option("--tol", o.tol, "weight comparison tolerance");

  auto* orbits = app.add_subcommand("orbits", "orbit structure of a permutation");
  orbits->add_option("perm", o.perm_path)->required();
  orbits->add_option("--n", o.n, "vertex count (default: largest label)");
  orbits->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* build = app.add_subcommand("build", "print a graph matrix");
  build->add_option("graph", o.graph_path)->required();
  add_kind(build, o);
  build->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* partition = app.add_subcommand("partition", "orbit partition and divisor matrix");
  partition->add_option("graph", o.graph_path)->required();
  partition->add_option("perm", o.perm_path)->required();
  add_kind(partition, o);
  partition->add_option("--tol", o.tol, "equitability tolerance");
  partition->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* decomp = app.add_subcommand("decompose", "equitable decomposition (JSON on stdout unless --json)");
  decomp->add_option("graph", o.graph_path)->required();
  decomp->add_option("perm", o.perm_path)->required();
  add_kind(decomp, o);
  decomp->add_option("--tol", o.tol, "compatibility tolerance");
  decomp->add_option("--json", o.json_path, "JSON output path");

  auto* spectrum = app.add_subcommand("spectrum", "full spectrum of a graph matrix");
  spectrum->add_option("graph", o.graph_path)->required();
  add_kind(spectrum, o);
  spectrum->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "check similarity residual and spectrum preservation");
  verify->add_option("graph", o.graph_path)->required();
  verify->add_option("perm", o.perm_path)->required();
  add_kind(verify, o);
  verify->add_option("--tol", o.tol, "compatibility tolerance");
  verify->add_option("--decomposition", o.decomposition_path, "verify a saved decomposition JSON instead");
  verify->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* bounds = app.add_subcommand("bounds", "bounds on the number of simple eigenvalues");
  bounds->add_option("perm", o.perm_path)->required();
  bounds->add_option("--n", o.n, "vertex count (default: largest label)");
  bounds->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* certify = app.add_subcommand("certify", "certified partial spectrum and spectral bounds");
  certify->add_option("graph", o.graph_path)->required();
  certify->add_option("perms", o.perm_path, "permutation file or directory of them")->required();
  add_kind(certify, o);
  certify->add_option("--json", o.json_path, "JSON output path ('-' for stdout)");

  auto* fix = app.add_subcommand("fixtures", "emit built-in example graphs");
  fix->add_option("name", o.fixture_name,
                  "figure1 | ksun <k> | ladder <k> | trigraph | tree <n> <N> | network | planted | export-all <dir>")
      ->required();
  fix->add_option("params", o.fixture_params, "fixture parameters");
  fix->add_option("--out", o.out_dir, "write <name>.txt and its automorphism file(s) into this directory");
  fix->add_option("--seed", o.seed, "planted: RNG seed");
  fix->add_option("--n", o.n, "planted: vertex count");
  fix->add_option("--k", o.planted_k, "planted: orbit size");
  fix->add_option("--p", o.planted_p, "planted: fixed vertices");
  fix->add_option("--density", o.density, "planted: edge-orbit probability");
  fix->add_flag("--directed", o.directed, "planted: directed graph");
  fix->add_flag("--weighted", o.weighted, "planted: integer weights 1..9");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    logger()->debug("verb: {}", app.get_subcommands().front()->get_name());
    if (check->parsed()) return cmd_check_auto(o, out);
    if (orbits->parsed()) return cmd_orbits(o, out);
    if (build->parsed()) return cmd_build(o, out);
    if (partition->parsed()) return cmd_partition(o, out);
    if (decomp->parsed()) return cmd_decompose(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (fix->parsed()) return cmd_fixtures(o, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace eqdecomp::cli
