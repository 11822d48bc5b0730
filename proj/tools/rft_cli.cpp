#include <cstdio>
#include <string>
#include <sys/stat.h>

#include <CLI11.hpp>

#include "rft.h"

namespace {

bool file_exists(const std::string& path) {
  struct stat st{};
  return ::stat(path.c_str(), &st) == 0;
}

int report_failure(rft_status st) {
  std::fprintf(stderr, "error: %s\n", rft_last_error());
  return static_cast<int>(st);
}

int cmd_run(const std::string& scenario, const std::string& out_dir,
            bool quiet) {
  rft_scenario* handle = nullptr;
  rft_status st = file_exists(scenario)
                      ? rft_scenario_open_file(scenario.c_str(), &handle)
                      : rft_scenario_open_bundled(scenario.c_str(), &handle);
  if (st != RFT_OK) return report_failure(st);

  rft_scenario_set_output_dir(handle, out_dir.c_str());
  rft_scenario_set_quiet(handle, quiet ? 1 : 0);
  st = rft_scenario_run(handle);
  rft_scenario_close(handle);
  if (st != RFT_OK) return report_failure(st);
  return 0;
}

int cmd_list() {
  const size_t count = rft_bundled_count();
  for (size_t i = 0; i < count; ++i) {
    const char* desc = rft_bundled_description(i);
    std::printf("%-24s %s\n", rft_bundled_name(i), desc ? desc : "");
  }
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b) {
  rft_table_comparison c{};
  const rft_status st = rft_compare_table_files(a.c_str(), b.c_str(), &c);
  if (st != RFT_OK) return report_failure(st);
  std::printf("rows=%lld rel_l2=%.9e max_abs_diff=%.9e peak_shift_bins=%lld\n",
              c.rows, c.relative_l2, c.max_abs_diff,
              c.peak_location_diff_bins);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transition-amplitude engine"};
  app.set_version_flag("--version", std::string(rft_version()));
  app.require_subcommand(1);

  std::string scenario, out_dir = ".", file_a, file_b;
  bool quiet = false;

  auto* run = app.add_subcommand(
      "run", "Run a scenario file (or a bundled scenario by name)");
  run->add_option("scenario", scenario,
                  "Scenario file path, or bundled scenario name")
      ->required();
  run->add_option("--out", out_dir, "Output directory (default: .)");
  run->add_flag("--quiet", quiet, "Suppress progress lines");

  auto* list =
      app.add_subcommand("list-scenarios", "List bundled scenarios");

  auto* compare =
      app.add_subcommand("compare", "Compare two result tables (b is the "
                                    "reference of relative measures)");
  compare->add_option("file-a", file_a, "Candidate table")->required();
  compare->add_option("file-b", file_b, "Reference table")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(scenario, out_dir, quiet);
  if (list->parsed()) return cmd_list();
  if (compare->parsed()) return cmd_compare(file_a, file_b);
  return 0;
}
