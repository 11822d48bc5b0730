#include "rft/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rft/first_order.hpp"
#include "rft/second_order.hpp"
#include "rft/table_io.hpp"

namespace rft {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct IniEntry {
  std::string key;
  std::string value;
  int line = 0;
};

using IniSection = std::vector<IniEntry>;
using Ini = std::map<std::string, IniSection>;

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

Ini parse_ini(const std::string& text, std::string* description) {
  Ini ini;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#' || t[0] == ';') {
      if (!saw_content && description && description->empty())
        *description = trim(t.substr(1));
      continue;
    }
    saw_content = true;
    if (t.front() == '[') {
      if (t.back() != ']') parse_fail(lineno, "unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) parse_fail(lineno, "empty section name");
      if (ini.count(section))
        parse_fail(lineno, "duplicate section [" + section + "]");
      ini[section];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      parse_fail(lineno, "expected key = value");
    if (section.empty())
      parse_fail(lineno, "key outside any section");
    IniEntry e{trim(t.substr(0, eq)), trim(t.substr(eq + 1)), lineno};
    if (e.key.empty()) parse_fail(lineno, "empty key");
    ini[section].push_back(std::move(e));
  }
  return ini;
}

// Typed, strict access to one section: every key must be known, duplicates
// are rejected (the task list is the one deliberate exception).
class SectionReader {
 public:
  SectionReader(const Ini& ini, const std::string& name) : name_(name) {
    auto it = ini.find(name);
    if (it != ini.end()) entries_ = &it->second;
  }

  bool present() const { return entries_ != nullptr; }

  std::optional<std::string> get(const std::string& key) {
    known_.insert(key);
    if (!entries_) return std::nullopt;
    std::optional<std::string> found;
    for (const auto& e : *entries_) {
      if (e.key != key) continue;
      if (found)
        parse_fail(e.line, "duplicate key '" + key + "' in [" + name_ + "]");
      found = e.value;
    }
    return found;
  }

  std::string get_string(const std::string& key, const std::string& dflt) {
    auto v = get(key);
    return v ? *v : dflt;
  }

  double get_double(const std::string& key, double dflt) {
    auto v = get(key);
    if (!v) return dflt;
    std::size_t used = 0;
    double out = 0.0;
    try {
      out = std::stod(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v->size())
      fail(ErrorCode::parse,
           "[" + name_ + "] " + key + ": '" + *v + "' is not a number");
    return out;
  }

  long long get_int(const std::string& key, long long dflt) {
    auto v = get(key);
    if (!v) return dflt;
    std::size_t used = 0;
    long long out = 0;
    try {
      out = std::stoll(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v->size())
      fail(ErrorCode::parse,
           "[" + name_ + "] " + key + ": '" + *v + "' is not an integer");
    return out;
  }

  bool get_bool(const std::string& key, bool dflt) {
    auto v = get(key);
    if (!v) return dflt;
    if (*v == "true") return true;
    if (*v == "false") return false;
    fail(ErrorCode::parse,
         "[" + name_ + "] " + key + ": expected true or false");
  }

  // Call after all reads: flags any key this interpreter never asked for.
  void finish() const {
    if (!entries_) return;
    for (const auto& e : *entries_) {
      if (!known_.count(e.key))
        parse_fail(e.line, "unknown key '" + e.key + "' in [" + name_ + "]");
    }
  }

 private:
  const IniSection* entries_ = nullptr;
  std::string name_;
  std::set<std::string> known_;
};

const std::set<std::string> kSections = {"grid",   "transition", "potential",
                                         "oracle", "jsa",        "tasks"};

const std::set<std::string> kTableTasks = {
    "first_order", "first_order_oracle", "second_order",
    "second_order_oracle", "golden_rule2", "bardeen1", "bardeen2"};

const std::set<std::string> kJsaTasks = {"jsa_rft", "jsa_direct",
                                         "jsa_reference"};

bool needs_potential(const std::string& task) {
  return task == "first_order" || task == "first_order_oracle" ||
         task == "second_order" || task == "second_order_oracle" ||
         task == "golden_rule2" || task == "transfer_dump";
}

Potential build_potential(SectionReader& sec, const DualGrid& grid) {
  const std::string kind = sec.get_string("kind", "");
  const double strength = sec.get_double("strength", 1.0);
  const double omega_d = sec.get_double("omega_d_dw", 0.0) * grid.dw;
  const double epsilon = sec.get_double("epsilon_dw", 0.0) * grid.dw;
  const double tau = sec.get_double("tau", 0.0);
  const bool resonant_only = sec.get_bool("resonant_only", false);
  const std::string source = sec.get_string("source", "");
  const std::string table_file = sec.get_string("table_file", "");

  if (kind == "constant") return Potential::constant(strength);
  if (kind == "delta") return Potential::constant(strength * kInvSqrt2Pi);
  if (kind == "harmonic")
    return Potential::harmonic(strength, omega_d, resonant_only);
  if (kind == "gaussian") return Potential::gaussian(strength, tau);
  if (kind == "ramped") return Potential::ramped(strength, omega_d, epsilon);
  if (kind == "tabulated") {
    if (source == "gaussian") {
      return Potential::tabulated_from(
          Potential::gaussian(strength, tau).spectrum(grid));
    }
    if (source == "file") {
      require(!table_file.empty(), ErrorCode::parse,
              "[potential] tabulated file source needs table_file");
      const Table t = read_table(table_file);
      require(t.values.size() == grid.n, ErrorCode::invariant,
              "tabulated potential length does not match the grid");
      for (std::size_t i = 0; i < grid.n; ++i)
        require(std::abs(t.axis[i] - grid.freq_at(i)) < 1e-9 * grid.dw,
                ErrorCode::invariant,
                "tabulated potential axis does not match the grid");
      return Potential::tabulated_from(
          Signal(grid, Domain::freq, t.values));
    }
    fail(ErrorCode::parse,
         "[potential] tabulated source must be gaussian or file");
  }
  fail(ErrorCode::parse, "[potential] unknown kind '" + kind + "'");
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, ap);
  va_end(ap);
  return buf;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text,
                              const std::string& name) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.text = text;

  const Ini ini = parse_ini(text, &cfg.description);
  for (const auto& [section, entries] : ini) {
    (void)entries;
    if (!kSections.count(section))
      fail(ErrorCode::parse, "unknown section [" + section + "]");
  }

  SectionReader grid_sec(ini, "grid");
  require(grid_sec.present(), ErrorCode::parse,
          "scenario is missing the [grid] section");
  const long long n = grid_sec.get_int("n", 0);
  const double dt = grid_sec.get_double("dt", 0.0);
  const double dw = grid_sec.get_double("dw", 0.0);
  require(n > 0, ErrorCode::parse, "[grid] n is required");
  require((dt > 0.0) != (dw > 0.0), ErrorCode::parse,
          "[grid] exactly one of dt and dw must be set");
  cfg.grid = dt > 0.0
                 ? DualGrid::from_time_step(static_cast<std::size_t>(n), dt)
                 : DualGrid::from_freq_step(static_cast<std::size_t>(n), dw);
  grid_sec.finish();

  SectionReader tr(ini, "transition");
  cfg.spec.hbar = tr.get_double("hbar", 1.0);
  cfg.spec.amplitude = tr.get_double("amplitude", 1.0);
  cfg.spec.v_fi = tr.get_double("v_fi", 1.0);
  cfg.spec.v_fk_ki = tr.get_double("v_fk_ki", 1.0);
  cfg.spec.initial_index = tr.get_int("initial_index", 0);
  cfg.spec.k_max = tr.get_int("k_max", 0);
  const long long omega0_dw = tr.get_int("omega0_dw", 0);
  const long long bias_dw = tr.get_int("bias_offset_dw", 0);
  const long long fraction = tr.get_int("window_fraction", 1);
  const double offset_dt = tr.get_double("window_offset_dt", 0.0);
  const bool cyclotron = tr.get_bool("cyclotron", false);
  const std::string fund = tr.get_string("fund_convention", "two_pi");
  const std::string self_term = tr.get_string("self_term", "delta");
  tr.finish();

  require(fraction >= 1 && cfg.grid.n % static_cast<std::size_t>(fraction) ==
                               0,
          ErrorCode::invariant,
          "[transition] window_fraction must divide the grid size");
  cfg.spec.window =
      cfg.grid.time_span() / static_cast<double>(fraction);
  cfg.spec.offset = offset_dt * cfg.grid.dt;
  cfg.spec.omega0 = static_cast<double>(omega0_dw) * cfg.grid.dw;
  cfg.spec.bias_offset = static_cast<double>(bias_dw) * cfg.grid.dw;

  if (fund != "two_pi" && fund != "one_over_t")
    fail(ErrorCode::parse,
         "[transition] fund_convention must be two_pi or one_over_t");
  if (cyclotron) {
    require(fund == "two_pi", ErrorCode::invariant,
            "the one_over_t level-spacing convention never lands on the "
            "frequency lattice; cyclotron alignment requires two_pi");
    if (omega0_dw == 0) {
      cfg.spec.omega0 = static_cast<double>(fraction) * cfg.grid.dw;
    } else {
      require(omega0_dw == fraction, ErrorCode::invariant,
              "cyclotron alignment needs omega0_dw equal to window_fraction");
    }
  }

  if (self_term == "delta") {
    cfg.mode = SelfTermMode::spectral_delta;
  } else if (self_term == "literal") {
    cfg.mode = SelfTermMode::literal;
  } else {
    fail(ErrorCode::parse,
         "[transition] self_term must be delta or literal");
  }

  SectionReader pot(ini, "potential");
  if (pot.present()) cfg.potential = build_potential(pot, cfg.grid);
  pot.finish();

  SectionReader orc(ini, "oracle");
  const std::string rule = orc.get_string("rule", "midpoint");
  if (rule == "midpoint") {
    cfg.rule = QuadratureRule::midpoint;
  } else if (rule == "trapezoid") {
    cfg.rule = QuadratureRule::trapezoid;
  } else {
    fail(ErrorCode::parse, "[oracle] rule must be midpoint or trapezoid");
  }
  const long long steps = orc.get_int("steps", 1024);
  const long long steps_inner = orc.get_int("steps_inner", 0);
  require(steps >= 1 && steps_inner >= 0, ErrorCode::parse,
          "[oracle] step counts must be positive");
  cfg.steps = static_cast<std::size_t>(steps);
  cfg.steps_inner = static_cast<std::size_t>(steps_inner);
  orc.finish();

  SectionReader jsa(ini, "jsa");
  if (jsa.present()) {
    JsaParams p;
    p.sigma = jsa.get_double("sigma", 1.0);
    p.k2 = jsa.get_double("k2", 0.0);
    p.gamma_p = jsa.get_double("gamma_p", 0.0);
    p.length = jsa.get_double("length", 1.0);
    p.omega_c = jsa.get_double("omega_c", 0.0);
    p.t_window = jsa.get_double("t_window", 0.0);
    p.refine = static_cast<std::size_t>(jsa.get_int("refine", 8));
    p.n_sum = static_cast<std::size_t>(jsa.get_int("n_sum", 2048));
    p.z_steps = static_cast<std::size_t>(jsa.get_int("z_steps", 256));
    p.t_steps = static_cast<std::size_t>(jsa.get_int("t_steps", 2048));
    cfg.jsa = p;
  }
  jsa.finish();

  auto tasks_it = ini.find("tasks");
  require(tasks_it != ini.end(), ErrorCode::parse,
          "scenario is missing the [tasks] section");
  std::set<std::string> seen;
  for (const auto& e : tasks_it->second) {
    if (e.key != "task")
      parse_fail(e.line, "unknown key '" + e.key + "' in [tasks]");
    const std::string& t = e.value;
    if (t.rfind("compare:", 0) == 0) {
      const auto rest = t.substr(8);
      const auto colon = rest.find(':');
      if (colon == std::string::npos || colon == 0 ||
          colon + 1 == rest.size())
        parse_fail(e.line, "compare task must be compare:<a>:<b>");
      const std::string a = rest.substr(0, colon);
      const std::string b = rest.substr(colon + 1);
      for (const std::string& side : {a, b}) {
        if (!seen.count(side))
          parse_fail(e.line, "compare refers to '" + side +
                                 "' before it was produced");
      }
    } else if (kTableTasks.count(t) || kJsaTasks.count(t) ||
               t == "transfer_dump") {
      if (needs_potential(t) && !cfg.potential)
        parse_fail(e.line,
                   "task " + t + " needs a [potential] section");
      if (kJsaTasks.count(t) && !cfg.jsa)
        parse_fail(e.line, "task " + t + " needs a [jsa] section");
      seen.insert(t);
    } else {
      parse_fail(e.line, "unknown task '" + t + "'");
    }
    cfg.tasks.push_back(t);
  }
  require(!cfg.tasks.empty(), ErrorCode::parse,
          "scenario has an empty task list");

  if (std::any_of(cfg.tasks.begin(), cfg.tasks.end(), [](const auto& t) {
        return t == "golden_rule2";
      })) {
    require(cfg.potential &&
                cfg.potential->kind() == PotentialKind::harmonic_drive &&
                cfg.potential->resonant_only(),
            ErrorCode::invariant,
            "golden_rule2 models a resonant harmonic drive; set "
            "[potential] kind = harmonic with resonant_only = true");
  }

  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  const std::string text = read_file(path);
  std::string name = std::filesystem::path(path).stem().string();
  return parse_scenario(text, name);
}

ScenarioConfig load_bundled(const std::string& name) {
  for (const auto& b : bundled_scenarios()) {
    if (b.name == name) return parse_scenario(b.text, b.name);
  }
  fail(ErrorCode::invalid_argument, "no bundled scenario named " + name);
}

namespace {

struct Emitter {
  std::string out_dir;
  std::map<std::string, std::string> hashes;

  std::string emit(const std::string& base, const std::string& content) {
    const std::string path =
        (std::filesystem::path(out_dir) / base).string();
    write_file(path, content);
    hashes[base] = hex64(fnv1a64(content));
    return path;
  }
};

std::string render_signal(const Signal& s) {
  std::string out = "omega\tre\tim\tabs\tabs2\n";
  char buf[160];
  for (std::size_t i = 0; i < s.size(); ++i) {
    const cplx& v = s.values[i];
    std::snprintf(buf, sizeof(buf), "%.17g\t%.17g\t%.17g\t%.17g\t%.17g\n",
                  s.axis_at(i), v.real(), v.imag(), std::abs(v),
                  std::norm(v));
    out += buf;
  }
  return out;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);

  RunResult result;
  Emitter emitter{opts.out_dir, {}};
  std::map<std::string, Signal> signals;
  std::map<std::string, JsaMap> maps;
  std::vector<std::string> report;

  auto say = [&](const std::string& line) {
    report.push_back(line);
    if (!opts.quiet && opts.log) *opts.log << line << '\n';
  };

  say("scenario " + cfg.name + " (engine " + kVersion + ")");
  if (!cfg.description.empty()) say("  " + cfg.description);

  const std::size_t inner = cfg.steps_inner ? cfg.steps_inner : cfg.steps;

  for (const std::string& task : cfg.tasks) {
    const auto t0 = std::chrono::steady_clock::now();
    TaskRecord rec;
    rec.task = task;

    auto keep_signal = [&](const std::string& name, const Signal& s) {
      signals[name] = s;
      rec.files.push_back(name + ".tsv");
      emitter.emit(name + ".tsv", render_signal(s));
    };
    auto keep_map = [&](const std::string& name, const JsaMap& m) {
      maps[name] = m;
      // Rendered by write_jsa_map through temporary strings for hashing.
      std::string body;
      body.reserve(m.values.size() * 48);
      char buf[96];
      for (std::size_t i = 0; i < m.grid.n; ++i) {
        for (std::size_t j = 0; j < m.grid.n; ++j) {
          const cplx& v = m.at(i, j);
          std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
          body += buf;
          body += (j + 1 == m.grid.n) ? '\n' : '\t';
        }
      }
      std::string axis;
      for (std::size_t i = 0; i < m.grid.n; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g\n",
                      m.omega_c + m.grid.freq_at(i));
        axis += buf;
      }
      emitter.emit(name + ".mat", body);
      emitter.emit(name + ".mat.axis", axis);
      rec.files.push_back(name + ".mat");
      rec.files.push_back(name + ".mat.axis");
    };

    if (task == "first_order") {
      keep_signal(task, first_order_amplitude(cfg.grid, cfg.spec,
                                              *cfg.potential));
    } else if (task == "first_order_oracle") {
      keep_signal(task, direct_first_order(cfg.grid, cfg.spec,
                                           *cfg.potential, cfg.rule,
                                           cfg.steps));
    } else if (task == "second_order") {
      keep_signal(task, second_order_amplitude(cfg.grid, cfg.spec,
                                               *cfg.potential, cfg.mode));
    } else if (task == "second_order_oracle") {
      keep_signal(task,
                  direct_second_order(cfg.grid, cfg.spec, *cfg.potential,
                                      cfg.rule, cfg.steps, inner));
    } else if (task == "golden_rule2") {
      const SeriesResult r = second_order_golden_rule(
          cfg.grid, cfg.spec, cfg.potential->strength(),
          cfg.potential->omega_d());
      keep_signal(task, r.amplitude);
      if (!r.skipped.empty()) {
        std::string note = "skipped near-resonant levels:";
        for (long long k : r.skipped) note += " " + std::to_string(k);
        rec.note = note;
        say("  " + note);
      }
    } else if (task == "bardeen1") {
      keep_signal(task, bardeen_first_order(cfg.grid, cfg.spec));
    } else if (task == "bardeen2") {
      const SeriesResult r = bardeen_second_order(cfg.grid, cfg.spec);
      keep_signal(task, r.amplitude);
      if (!r.skipped.empty()) {
        std::string note = "skipped near-resonant levels:";
        for (long long k : r.skipped) note += " " + std::to_string(k);
        rec.note = note;
        say("  " + note);
      }
    } else if (task == "transfer_dump") {
      // Per-level transfer functions plus the accumulated origin weight as
      // a function of the level cutoff, with a straight-line fit.
      std::vector<cplx> origin(static_cast<std::size_t>(cfg.spec.k_max) + 1,
                               cplx(0.0, 0.0));
      cplx running(0.0, 0.0);
      const std::size_t center = cfg.grid.n / 2;
      for (long long k = -cfg.spec.k_max; k <= cfg.spec.k_max; ++k) {
        const Signal tf =
            transfer_function(cfg.grid, cfg.spec, *cfg.potential, k,
                              cfg.mode);
        const std::string fname = "transfer_k" + std::to_string(k);
        keep_signal(fname, tf);
      }
      for (long long km = 1; km <= cfg.spec.k_max; ++km) {
        running = cplx(0.0, 0.0);
        for (long long k = -km; k <= km; ++k)
          running += signals["transfer_k" + std::to_string(k)]
                         .values[center];
        origin[static_cast<std::size_t>(km)] =
            running / static_cast<double>(km);
      }
      Table scan;
      for (long long km = 1; km <= cfg.spec.k_max; ++km) {
        scan.axis.push_back(static_cast<double>(km));
        scan.values.push_back(origin[static_cast<std::size_t>(km)]);
      }
      emitter.emit("transfer_origin_scan.tsv", [&] {
        std::string out = "omega\tre\tim\tabs\tabs2\n";
        char buf[160];
        for (std::size_t i = 0; i < scan.values.size(); ++i) {
          std::snprintf(buf, sizeof(buf),
                        "%.17g\t%.17g\t%.17g\t%.17g\t%.17g\n", scan.axis[i],
                        scan.values[i].real(), scan.values[i].imag(),
                        std::abs(scan.values[i]), std::norm(scan.values[i]));
          out += buf;
        }
        return out;
      }());
      rec.files.push_back("transfer_origin_scan.tsv");
      if (scan.axis.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        const double m = static_cast<double>(scan.axis.size());
        for (std::size_t i = 0; i < scan.axis.size(); ++i) {
          const double x = scan.axis[i];
          const double y = scan.values[i].real();
          sx += x;
          sy += y;
          sxx += x * x;
          sxy += x * y;
          syy += y * y;
        }
        const double denom = m * sxx - sx * sx;
        const double slope = (m * sxy - sx * sy) / denom;
        const double intercept = (sy - slope * sx) / m;
        double ss_res = 0.0, ss_tot = 0.0;
        for (std::size_t i = 0; i < scan.axis.size(); ++i) {
          const double y = scan.values[i].real();
          const double fit = slope * scan.axis[i] + intercept;
          ss_res += (y - fit) * (y - fit);
          ss_tot += (y - sy / m) * (y - sy / m);
        }
        const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot
                                       : std::numeric_limits<double>::quiet_NaN();
        say(fmt("  origin scan fit: slope=%.6e intercept=%.6e r2=%.6f",
                slope, intercept, r2));
      }
    } else if (task == "jsa_rft") {
      keep_map(task, jsa_rft(cfg.grid, *cfg.jsa));
    } else if (task == "jsa_direct") {
      keep_map(task, jsa_direct(cfg.grid, *cfg.jsa));
      say(fmt("  weak-dispersion regime: %s",
              jsa_weak_dispersion(*cfg.jsa) ? "yes" : "no"));
    } else if (task == "jsa_reference") {
      keep_map(task, jsa_reference(cfg.grid, *cfg.jsa));
    } else if (task.rfind("compare:", 0) == 0) {
      const auto rest = task.substr(8);
      const auto colon = rest.find(':');
      const std::string a = rest.substr(0, colon);
      const std::string b = rest.substr(colon + 1);
      if (maps.count(a) && maps.count(b)) {
        say(fmt("  compare %s vs %s: rel_l2=%.6e", a.c_str(), b.c_str(),
                rel_l2(maps[a], maps[b])));
      } else if (signals.count(a) && signals.count(b)) {
        Table ta, tb;
        ta.values = signals[a].values;
        tb.values = signals[b].values;
        for (std::size_t i = 0; i < signals[a].size(); ++i) {
          ta.axis.push_back(signals[a].axis_at(i));
          tb.axis.push_back(signals[b].axis_at(i));
        }
        const TableComparison c = compare_tables(ta, tb);
        say(fmt("  compare %s vs %s: rel_l2=%.6e max_abs=%.6e "
                "peak_shift=%lld rows=%lld",
                a.c_str(), b.c_str(), c.relative_l2, c.max_abs_diff,
                c.peak_location_diff_bins, c.rows));
      } else {
        fail(ErrorCode::invalid_argument,
             "compare operands are not both tables or both maps");
      }
    } else {
      fail(ErrorCode::invariant, "unhandled task " + task);
    }

    const auto t1 = std::chrono::steady_clock::now();
    rec.milliseconds =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (task.rfind("compare:", 0) != 0)
      say(fmt("task %s: %.1f ms", task.c_str(), rec.milliseconds));
    result.records.push_back(std::move(rec));
  }

  nlohmann::json manifest;
  manifest["scenario"] = cfg.name;
  manifest["version"] = kVersion;
  manifest["config_hash"] = hex64(fnv1a64(cfg.text));
  manifest["grid"] = {{"n", cfg.grid.n}, {"dt", cfg.grid.dt},
                      {"dw", cfg.grid.dw}};
  manifest["tasks"] = cfg.tasks;
  manifest["files"] = emitter.hashes;

  const std::string manifest_body = manifest.dump(2) + "\n";
  result.manifest_path =
      (std::filesystem::path(opts.out_dir) / "manifest.json").string();
  write_file(result.manifest_path, manifest_body);

  std::string report_body;
  for (const auto& line : report) report_body += line + "\n";
  result.report_path =
      (std::filesystem::path(opts.out_dir) / "report.txt").string();
  write_file(result.report_path, report_body);

  return result;
}

}  // namespace rft
