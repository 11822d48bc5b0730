#include "rft.h"

#include <exception>
#include <iostream>
#include <string>

#include "rft/scenario.hpp"
#include "rft/table_io.hpp"

namespace {

thread_local std::string g_last_error;

rft_status code_of(const rft::Error& e) {
  switch (e.code()) {
    case rft::ErrorCode::parse:
      return RFT_ERR_PARSE;
    case rft::ErrorCode::invariant:
      return RFT_ERR_INVARIANT;
    case rft::ErrorCode::numeric:
      return RFT_ERR_NUMERIC;
    case rft::ErrorCode::io:
      return RFT_ERR_IO;
    case rft::ErrorCode::invalid_argument:
      return RFT_ERR_INVALID_ARGUMENT;
  }
  return RFT_ERROR;
}

template <typename Fn>
rft_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return RFT_OK;
  } catch (const rft::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RFT_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return RFT_ERROR;
  }
}

}  // namespace

struct rft_scenario {
  rft::ScenarioConfig cfg;
  rft::RunOptions opts;
};

extern "C" {

const char* rft_version(void) { return rft::kVersion; }

const char* rft_last_error(void) { return g_last_error.c_str(); }

rft_status rft_scenario_open_file(const char* path, rft_scenario** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return RFT_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto* s = new rft_scenario{rft::load_scenario_file(path), {}};
    s->opts.log = &std::cout;
    *out = s;
  });
}

rft_status rft_scenario_open_bundled(const char* name, rft_scenario** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return RFT_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto* s = new rft_scenario{rft::load_bundled(name), {}};
    s->opts.log = &std::cout;
    *out = s;
  });
}

rft_status rft_scenario_set_output_dir(rft_scenario* s, const char* dir) {
  if (!s || !dir) {
    g_last_error = "null argument";
    return RFT_ERR_INVALID_ARGUMENT;
  }
  s->opts.out_dir = dir;
  return RFT_OK;
}

rft_status rft_scenario_set_quiet(rft_scenario* s, int quiet) {
  if (!s) {
    g_last_error = "null argument";
    return RFT_ERR_INVALID_ARGUMENT;
  }
  s->opts.quiet = quiet != 0;
  return RFT_OK;
}

const char* rft_scenario_name(const rft_scenario* s) {
  return s ? s->cfg.name.c_str() : "";
}

const char* rft_scenario_description(const rft_scenario* s) {
  return s ? s->cfg.description.c_str() : "";
}

rft_status rft_scenario_run(rft_scenario* s) {
  if (!s) {
    g_last_error = "null argument";
    return RFT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { rft::run_scenario(s->cfg, s->opts); });
}

void rft_scenario_close(rft_scenario* s) { delete s; }

size_t rft_bundled_count(void) { return rft::bundled_scenarios().size(); }

const char* rft_bundled_name(size_t index) {
  const auto& all = rft::bundled_scenarios();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

const char* rft_bundled_description(size_t index) {
  const auto& all = rft::bundled_scenarios();
  if (index >= all.size()) return nullptr;
  // Description is the leading comment line; cache the parse per entry.
  static thread_local std::string cache;
  rft_status st = guarded([&] {
    cache = rft::parse_scenario(all[index].text, all[index].name).description;
  });
  return st == RFT_OK ? cache.c_str() : "";
}

rft_status rft_compare_table_files(const char* path_a, const char* path_b,
                                   rft_table_comparison* out) {
  if (!path_a || !path_b || !out) {
    g_last_error = "null argument";
    return RFT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const rft::Table a = rft::read_table(path_a);
    const rft::Table b = rft::read_table(path_b);
    const rft::TableComparison c = rft::compare_tables(a, b);
    out->relative_l2 = c.relative_l2;
    out->max_abs_diff = c.max_abs_diff;
    out->peak_location_diff_bins = c.peak_location_diff_bins;
    out->rows = c.rows;
  });
}

}  // extern "C"
