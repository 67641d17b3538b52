// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_TOOLS_CLI_HPP
#define OGL_TOOLS_CLI_HPP

// Command-line front end of the harness. Kept in a header so tests can run
// it in-process with captured streams.
//
// Exit codes: 0 success, 1 failed trials or invalid documents, 2 usage
// errors, 3 unreadable or malformed input files.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ogl/harness.hpp"

namespace ogl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

namespace detail {

inline void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path)
    io::write_file(*path, text);
  else
    out << text;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification harness for Grassmann and ortho-Grassmann graphs", "ogl"};
  app.require_subcommand(1);
  int status = kExitOk;

  // verify
  struct VerifyOptions {
    std::string lemma;
    std::optional<std::size_t> n, k;
    std::optional<std::string> sigma, d;
    std::size_t trials = 0, witness_budget = kDefaultWitnessBudget, jobs = 1;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::optional<std::string> out;
    bool inline_inputs = false;
  } v;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign for one lemma");
  verify->add_option("lemma", v.lemma, "Lemma id (see `ogl lemmas`)")->required();
  verify->add_option("--n", v.n, "Ambient dimension");
  verify->add_option("--k", v.k, "Subspace dimension");
  verify->add_option("--sigma", v.sigma, "Spectrum, comma separated rationals");
  verify->add_option("--d", v.d, "Multiplicities, comma separated");
  verify->add_option("--trials", v.trials, "Number of trials (default: per lemma)");
  verify->add_option("--seed", v.seed, "Campaign seed")->envname("OGL_DEFAULT_SEED");
  verify->add_option("--witness-budget", v.witness_budget, "Witnesses sampled from infinite families");
  verify->add_option("--format", v.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", v.out, "Write the report to FILE");
  verify->add_option("--jobs", v.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--inline", v.inline_inputs, "Record inputs of passing trials too");
  verify->callback([&] {
    harness::Campaign c;
    c.lemma_id = v.lemma;
    c.n = v.n;
    c.k = v.k;
    if (v.sigma) c.sigma = harness::parse_rationals(*v.sigma);
    if (v.d) c.d = harness::parse_sizes(*v.d);
    c.trials = v.trials;
    c.witness_budget = v.witness_budget;
    c.seed = v.seed;
    c.inline_inputs = v.inline_inputs;
    const auto report = harness::run_campaign(c, v.jobs);
    const std::string text =
        v.format == "json" ? io::dump(harness::to_json(report)) : harness::to_text(report);
    detail::emit(out, v.out, text);
    if (v.out) out << "result: " << (report.pass() ? "PASS" : "FAIL") << " " << report.passed << "/"
                   << report.trials.size() << " trials passed\n";
    status = report.pass() ? kExitOk : kExitFailed;
  });

  // lemmas
  std::string lemmas_format = "text";
  auto* lemmas = app.add_subcommand("lemmas", "List registered lemmas with their claims and commands");
  lemmas->add_option("--format", lemmas_format, "Output format")->check(CLI::IsMember({"json", "text"}));
  lemmas->callback([&] {
    const auto catalog = harness::list_lemmas();
    if (lemmas_format == "json") {
      io::Json j = io::Json::array();
      for (const auto& e : catalog) j.push_back({{"id", e.id}, {"claim", e.claim}, {"command", e.command}});
      out << io::dump(j);
    } else {
      for (const auto& e : catalog) out << e.id << "\n  " << e.claim << "\n  $ " << e.command << "\n";
    }
  });

  // fixture
  std::string fixture_name;
  std::optional<std::string> fixture_dir;
  bool fixture_list = false;
  auto* fixture = app.add_subcommand("fixture", "Emit a worked example as JSON documents");
  fixture->add_option("name", fixture_name, "Fixture name");
  fixture->add_option("--out", fixture_dir, "Directory for one file per item");
  fixture->add_flag("--list", fixture_list, "List fixture names");
  fixture->callback([&] {
    if (fixture_list) {
      for (const auto& f : harness::fixtures()) out << f.name << "  " << f.description << "\n";
      return;
    }
    if (fixture_name.empty()) throw harness::UsageError("fixture: give a name or --list");
    if (fixture_dir) {
      for (const auto& p : harness::emit_fixture(fixture_name, *fixture_dir)) out << p << "\n";
    } else {
      out << io::dump(harness::fixture_json(harness::find_fixture(fixture_name)));
    }
  });

  // validate
  std::vector<std::string> validate_paths;
  auto* validate = app.add_subcommand("validate", "Check JSON documents against the type invariants");
  validate->add_option("files", validate_paths, "Documents to check")->required();
  validate->callback([&] {
    for (const auto& path : validate_paths) {
      const auto diags = harness::validate_file(path);
      if (diags.empty()) out << path << ": ok\n";
      for (const auto& dg : diags) out << path << ":" << dg.to_string() << "\n";
      if (!diags.empty()) status = kExitFailed;
    }
  });

  // demo
  std::string demo_name;
  std::uint64_t demo_seed = 0;
  auto* demo = app.add_subcommand("demo", "Narrated demonstration");
  demo->add_option("name", demo_name, "Demonstration name")->required()->check(CLI::IsMember({"dim4-exceptional"}));
  demo->add_option("--seed", demo_seed, "Seed")->envname("OGL_DEFAULT_SEED");
  demo->callback([&] {
    const std::string text = harness::demo_dim4_exceptional(demo_seed);
    out << text;
    if (text.find("result: PASS") == std::string::npos) status = kExitFailed;
  });

  // experiment
  std::string experiment_name;
  std::uint64_t experiment_seed = 0;
  auto* experiment = app.add_subcommand("experiment", "Exploratory computation, reported but not asserted");
  experiment->add_option("name", experiment_name, "Experiment name")
      ->required()
      ->check(CLI::IsMember({"dim4-conjecture"}));
  experiment->add_option("--seed", experiment_seed, "Seed for the orthogonal basis")->envname("OGL_DEFAULT_SEED");
  experiment->callback([&] { out << io::dump(harness::conjecture_experiment_json(experiment_seed)); });

  // universe build
  std::size_t universe_n = 0, universe_k = 0;
  std::string universe_edges = "grassmann";
  std::optional<std::uint64_t> universe_seed;
  std::optional<std::string> universe_out;
  auto* universe = app.add_subcommand("universe", "Finite universes of subspaces");
  universe->require_subcommand(1);
  auto* build = universe->add_subcommand("build", "All k-subspaces spanned by one orthogonal basis");
  build->add_option("--n", universe_n, "Ambient dimension")->required();
  build->add_option("--k", universe_k, "Subspace dimension")->required();
  build->add_option("--edges", universe_edges, "Edge relation")->check(CLI::IsMember({"grassmann", "ortho"}));
  build->add_option("--seed", universe_seed, "Use a random orthogonal basis instead of the standard one");
  build->add_option("--out", universe_out, "Write to FILE");
  build->callback([&] {
    if (universe_k == 0 || universe_k >= universe_n || universe_n > 8)
      throw harness::UsageError("universe build: need 0 < k < n <= 8");
    const GraphKind kind = parse_graph_kind(universe_edges);
    std::vector<Vector> basis;
    if (universe_seed) {
      Rng rng(*universe_seed);
      basis = random_orthogonal_basis(universe_n, rng);
    } else {
      basis = harness::detail::standard_basis(universe_n);
    }
    const auto u = basis_universe(basis, universe_k, kind);
    detail::emit(out, universe_out, io::dump(io::tagged("universe", io::to_json(u))));
  });

  // graph bfs
  std::string bfs_universe, bfs_from, bfs_to;
  auto* graph = app.add_subcommand("graph", "Graph queries on a universe file");
  graph->require_subcommand(1);
  auto* bfs = graph->add_subcommand("bfs", "Shortest path between two vertices");
  bfs->add_option("--universe", bfs_universe, "Universe JSON")->required();
  bfs->add_option("--from", bfs_from, "Subspace JSON")->required();
  bfs->add_option("--to", bfs_to, "Subspace JSON")->required();
  bfs->callback([&] {
    const FiniteUniverse u = io::universe_from_json(io::load_file(bfs_universe));
    const Subspace x = io::subspace_from_json(io::load_file(bfs_from));
    const Subspace y = io::subspace_from_json(io::load_file(bfs_to));
    if (!u.index_of(x) || !u.index_of(y)) throw io::DocumentError(io::DocumentError::Kind::Invariant, "",
                                                                  "endpoint is not a vertex of the universe");
    const auto path = bfs_path(u, x, y);
    io::Json j;
    j["edges"] = to_string(u.edge_kind());
    if (path) {
      j["distance"] = path->size() - 1;
      io::Json vs = io::Json::array();
      for (const auto& s : *path) vs.push_back(io::to_json(s));
      j["path"] = std::move(vs);
    } else {
      j["distance"] = nullptr;
    }
    out << io::dump(j);
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const harness::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::DocumentError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return status;
}

}  // namespace ogl::cli

#endif  // OGL_TOOLS_CLI_HPP
