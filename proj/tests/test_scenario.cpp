#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "rft/first_order.hpp"
#include "rft/scenario.hpp"
#include "rft/table_io.hpp"

using namespace rft;
namespace fs = std::filesystem;

namespace {

const char kTinyScenario[] =
    "# quick regression scenario\n"
    "[grid]\n"
    "n = 16\n"
    "dt = 0.5\n"
    "\n"
    "[transition]\n"
    "initial_index = 2\n"
    "omega0_dw = 1\n"
    "v_fi = 1.1\n"
    "\n"
    "[potential]\n"
    "kind = gaussian\n"
    "strength = 0.8\n"
    "tau = 0.9\n"
    "\n"
    "[oracle]\n"
    "steps = 256\n"
    "\n"
    "[tasks]\n"
    "task = first_order\n"
    "task = first_order_oracle\n"
    "task = compare:first_order:first_order_oracle\n";

void expect_parse_error(const std::string& text, ErrorCode code,
                        const std::string& fragment) {
  try {
    parse_scenario(text, "bad");
    FAIL("expected an error mentioning '" << fragment << "'");
  } catch (const Error& e) {
    CHECK(e.code() == code);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return body;
}

fs::path fresh_dir(const std::string& leaf) {
  const fs::path p = fs::temp_directory_path() / "rft_scenario_tests" / leaf;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("minimal scenario text parses with documented defaults") {
  const ScenarioConfig cfg = parse_scenario(kTinyScenario, "tiny");
  CHECK(cfg.name == "tiny");
  CHECK(cfg.description == "quick regression scenario");
  CHECK(cfg.grid.n == 16);
  CHECK(cfg.grid.dt == 0.5);
  CHECK(cfg.spec.hbar == 1.0);
  CHECK(cfg.spec.v_fi == 1.1);
  CHECK(cfg.spec.initial_index == 2);
  CHECK(cfg.spec.window == cfg.grid.time_span());
  CHECK(cfg.spec.offset == 0.0);
  CHECK(cfg.mode == SelfTermMode::spectral_delta);
  CHECK(cfg.rule == QuadratureRule::midpoint);
  CHECK(cfg.steps == 256);
  CHECK(cfg.tasks.size() == 3);
  REQUIRE(cfg.potential.has_value());
  CHECK(cfg.potential->kind() == PotentialKind::gaussian_kick);
}

TEST_CASE("parser rejects malformed input with the offending line") {
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\nwat = 1\n[tasks]\ntask = bardeen1\n",
                     ErrorCode::parse, "unknown key 'wat' in [grid]");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\n[grid]\n[tasks]\ntask = bardeen1\n",
                     ErrorCode::parse, "line 4: duplicate section [grid]");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\nn = 32\n[tasks]\ntask = bardeen1\n",
                     ErrorCode::parse, "line 4: duplicate key 'n' in [grid]");
  expect_parse_error("[mystery]\nx = 1\n", ErrorCode::parse,
                     "unknown section [mystery]");
  expect_parse_error("[tasks]\ntask = bardeen1\n", ErrorCode::parse,
                     "missing the [grid] section");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\ndw = 0.5\n[tasks]\ntask = bardeen1\n",
                     ErrorCode::parse, "exactly one of dt and dw");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\n", ErrorCode::parse,
                     "missing the [tasks] section");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\n[tasks]\ntask = warp\n",
                     ErrorCode::parse, "line 5: unknown task 'warp'");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\n[tasks]\n",
                     ErrorCode::parse, "empty task list");
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n[tasks]\ntask = compare:a:b\n",
      ErrorCode::parse, "before it was produced");
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n[tasks]\ntask = first_order\n",
      ErrorCode::parse, "needs a [potential] section");
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n[tasks]\ntask = jsa_rft\n",
      ErrorCode::parse, "needs a [jsa] section");
  expect_parse_error("[grid]\nn = 16\ndt = 0.5\nkey_no_value\n",
                     ErrorCode::parse, "line 4: expected key = value");
  expect_parse_error("[grid]\nn = 20\ndt = 0.5\n[tasks]\ntask = bardeen1\n",
                     ErrorCode::invariant, "power of two");
}

TEST_CASE("grid-aligned level conventions are enforced") {
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[transition]\ncyclotron = true\nfund_convention = one_over_t\n"
      "[tasks]\ntask = bardeen1\n",
      ErrorCode::invariant, "requires two_pi");
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[transition]\nwindow_fraction = 4\ncyclotron = true\nomega0_dw = 2\n"
      "[tasks]\ntask = bardeen1\n",
      ErrorCode::invariant, "omega0_dw equal to window_fraction");
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[transition]\nwindow_fraction = 5\n"
      "[tasks]\ntask = bardeen1\n",
      ErrorCode::invariant, "window_fraction must divide");

  const ScenarioConfig cfg = parse_scenario(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[transition]\nwindow_fraction = 4\ncyclotron = true\n"
      "[tasks]\ntask = bardeen1\n",
      "cyc");
  CHECK(cfg.spec.omega0 == 4.0 * cfg.grid.dw);
}

TEST_CASE("resonant-drive task demands a matching potential") {
  expect_parse_error(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[potential]\nkind = gaussian\ntau = 1.0\n"
      "[tasks]\ntask = golden_rule2\n",
      ErrorCode::invariant, "resonant_only");
  const ScenarioConfig ok = parse_scenario(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[transition]\nomega0_dw = 2\nk_max = 1\n"
      "[potential]\nkind = harmonic\nomega_d_dw = 5\nresonant_only = true\n"
      "[tasks]\ntask = golden_rule2\n",
      "gr");
  CHECK(ok.potential->resonant_only());
}

TEST_CASE("scenario run writes tables, manifest, and report") {
  const ScenarioConfig cfg = parse_scenario(kTinyScenario, "tiny");
  const fs::path dir = fresh_dir("run_a");
  RunOptions opts;
  opts.out_dir = dir.string();
  opts.quiet = true;
  const RunResult res = run_scenario(cfg, opts);

  REQUIRE(res.records.size() == 3);
  CHECK(fs::exists(dir / "first_order.tsv"));
  CHECK(fs::exists(dir / "first_order_oracle.tsv"));
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(fs::exists(dir / "report.txt"));

  // Tables round-trip exactly: %.17g preserves doubles.
  const Table t = read_table((dir / "first_order.tsv").string());
  const Signal direct =
      first_order_amplitude(cfg.grid, cfg.spec, *cfg.potential);
  REQUIRE(t.values.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(t.axis[i] == direct.axis_at(i));
    CHECK(t.values[i] == direct.values[i]);
  }

  const std::string report = slurp((dir / "report.txt").string());
  CHECK(report.find("compare first_order vs first_order_oracle") !=
        std::string::npos);
  CHECK(report.find("rel_l2=") != std::string::npos);

  const std::string manifest = slurp((dir / "manifest.json").string());
  CHECK(manifest.find("\"config_hash\"") != std::string::npos);
  CHECK(manifest.find("first_order.tsv") != std::string::npos);

  // A second run reproduces the manifest byte for byte.
  const fs::path dir_b = fresh_dir("run_b");
  RunOptions opts_b;
  opts_b.out_dir = dir_b.string();
  opts_b.quiet = true;
  run_scenario(cfg, opts_b);
  CHECK(slurp((dir_b / "manifest.json").string()) == manifest);
  CHECK(slurp((dir_b / "first_order.tsv").string()) ==
        slurp((dir / "first_order.tsv").string()));
}

TEST_CASE("transfer dump reports the origin-weight scan fit") {
  const ScenarioConfig cfg = parse_scenario(
      "[grid]\nn = 16\ndt = 0.5\n"
      "[transition]\nwindow_fraction = 4\ncyclotron = true\nk_max = 2\n"
      "[potential]\nkind = delta\n"
      "[tasks]\ntask = transfer_dump\n",
      "dump");
  const fs::path dir = fresh_dir("dump");
  RunOptions opts;
  opts.out_dir = dir.string();
  opts.quiet = true;
  run_scenario(cfg, opts);

  for (int k = -2; k <= 2; ++k)
    CHECK(fs::exists(dir / ("transfer_k" + std::to_string(k) + ".tsv")));
  CHECK(fs::exists(dir / "transfer_origin_scan.tsv"));
  const std::string report = slurp((dir / "report.txt").string());
  CHECK(report.find("origin scan fit: slope=") != std::string::npos);
}

TEST_CASE("scenario files load under their stem name") {
  const fs::path dir = fresh_dir("load");
  const fs::path file = dir / "roundtrip_check.scn";
  {
    std::ofstream out(file);
    out << kTinyScenario;
  }
  const ScenarioConfig cfg = load_scenario_file(file.string());
  CHECK(cfg.name == "roundtrip_check");
  CHECK(cfg.tasks.size() == 3);
}

TEST_CASE("every bundled scenario parses cleanly") {
  const auto& all = bundled_scenarios();
  REQUIRE(!all.empty());
  std::set<std::string> names;
  for (const auto& b : all) {
    CHECK(names.insert(b.name).second);
    const ScenarioConfig cfg = parse_scenario(b.text, b.name);
    CHECK(!cfg.tasks.empty());
    CHECK(!cfg.description.empty());
  }
  CHECK(names.count("smoke") == 1);
  CHECK(load_bundled("smoke").name == "smoke");
  CHECK_THROWS_AS(load_bundled("no_such_scenario"), Error);
}
