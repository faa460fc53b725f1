// cosen: run, validate and sweep coset enumerations from the command line.
//
// Exit status: 0 index found (or validation passed), 1 input error,
// 2 out of space, 3 validation failure or inconsistent sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cosen/driver.hpp"
#include "cosen/parse.hpp"
#include "cosen/report.hpp"
#include "cosen/sweep.hpp"

using namespace cosen;

namespace {

  constexpr int kExitOk         = 0;
  constexpr int kExitInput      = 1;
  constexpr int kExitSpace      = 2;
  constexpr int kExitValidation = 3;

  struct StrategyFlags {
    std::string preset;
    std::string method;
    std::string lookahead;
    std::string rels;
    std::string pdl;
    std::string pdl_drop;
    std::size_t pdl_size = 0;
    std::string fill;
    std::string reuse;
    std::size_t max_cosets = 0;
    std::string sort;
    bool        no_collapse_shortcut = false;
  };

  std::size_t parse_count(std::string const& s, char const* what) {
    std::size_t used = 0;
    unsigned long long v;
    try {
      v = std::stoull(s, &used);
    } catch (std::exception const&) {
      throw CLI::ValidationError(what, "expected a number, got '" + s + "'");
    }
    if (used != s.size()) {
      throw CLI::ValidationError(what, "expected a number, got '" + s + "'");
    }
    return static_cast<std::size_t>(v);
  }

  void add_strategy_flags(CLI::App* cmd, StrategyFlags& f) {
    cmd->add_option("--preset", f.preset, "Strategy preset, applied before other flags")
        ->check(CLI::IsMember({"A", "B", "C"}));
    cmd->add_option("--method", f.method)->check(CLI::IsMember({"felsch", "hlt"}));
    cmd->add_option("--lookahead", f.lookahead, "HLT lookahead when the table fills")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--rels-in-subgroup", f.rels, "all, or the number of leading relators");
    cmd->add_option("--pdl", f.pdl)->check(CLI::IsMember({"queue", "stack", "off"}));
    cmd->add_option("--pdl-drop", f.pdl_drop)->check(CLI::IsMember({"earliest", "latest"}));
    cmd->add_option("--pdl-size", f.pdl_size)->check(CLI::PositiveNumber);
    cmd->add_option("--fill-factor", f.fill, "auto, or a positive integer");
    cmd->add_option("--reuse", f.reuse)->check(CLI::IsMember({"compact", "freelist"}));
    cmd->add_option("--max-cosets", f.max_cosets, "Table capacity in rows")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--sort", f.sort)->check(CLI::IsMember({"given", "length"}));
    cmd->add_flag("--no-collapse-shortcut", f.no_collapse_shortcut);
  }

  Strategy build_strategy(StrategyFlags const& f, Presentation const& p) {
    Strategy s;
    if (!f.preset.empty()) {
      s.apply_preset(f.preset[0]);
    }
    if (!f.method.empty()) {
      s.method = f.method == "hlt" ? Method::hlt : Method::felsch;
    }
    if (!f.lookahead.empty()) {
      s.lookahead = f.lookahead == "on";
    }
    if (!f.rels.empty()) {
      s.rels_in_subgroup = f.rels == "all" ? kAllRelators : parse_count(f.rels, "--rels-in-subgroup");
    }
    if (!f.pdl.empty()) {
      s.pdl_structure = f.pdl == "queue"   ? PdlStructure::queue
                        : f.pdl == "stack" ? PdlStructure::stack
                                           : PdlStructure::off;
    }
    if (!f.pdl_drop.empty()) {
      s.pdl_drop = f.pdl_drop == "latest" ? DropPolicy::latest : DropPolicy::earliest;
    }
    if (f.pdl_size != 0) {
      s.pdl_capacity = f.pdl_size;
    }
    if (!f.fill.empty()) {
      if (f.fill == "auto") {
        s.fill_factor = kAutoFillFactor;
      } else {
        s.fill_factor = parse_count(f.fill, "--fill-factor");
        if (s.fill_factor == 0) {
          throw CLI::ValidationError("--fill-factor", "must be positive");
        }
      }
    }
    if (!f.reuse.empty()) {
      s.reuse = f.reuse == "freelist" ? ReusePolicy::freelist : ReusePolicy::compact;
    }
    if (f.max_cosets != 0) {
      std::size_t c = column_layout(p.generator_count(), p.involutions).columns();
      s.max_words   = f.max_cosets * c;
    }
    if (!f.sort.empty()) {
      s.sort_by_length = f.sort == "length";
    }
    if (f.no_collapse_shortcut) {
      s.collapse_shortcut = false;
    }
    return s;
  }

  std::optional<Presentation> load(std::string const& path) {
    std::vector<std::string> warnings;
    try {
      Presentation p = read_presentation_file(path, &warnings);
      for (auto const& w : warnings) {
        std::cerr << path << ": warning: " << w << '\n';
      }
      return p;
    } catch (ParseError const& e) {
      std::cerr << path << ':' << e.line() << ':' << e.column() << ": " << e.what() << '\n';
    } catch (std::exception const& e) {
      std::cerr << path << ": " << e.what() << '\n';
    }
    return std::nullopt;
  }

  int cmd_run(std::string const& file, StrategyFlags const& f, std::string const& format) {
    auto p = load(file);
    if (!p) {
      return kExitInput;
    }
    Strategy    s = build_strategy(f, *p);
    Enumeration e = enumerate(*p, s);
    if (format == "json") {
      std::cout << to_json(e.stats, s).dump(2) << '\n';
    } else {
      std::cout << render_stats_text(e.stats, s);
    }
    if (!e.stats.ok()) {
      std::cerr << file << ": out of space\n";
      return kExitSpace;
    }
    return kExitOk;
  }

  int cmd_validate(std::string const& file, StrategyFlags const& f, bool corrupt) {
    auto p = load(file);
    if (!p) {
      return kExitInput;
    }
    Strategy    s = build_strategy(f, *p);
    Enumeration e = enumerate(*p, s);
    if (!e.stats.ok()) {
      std::cerr << file << ": out of space\n";
      return kExitSpace;
    }
    if (corrupt) {
      e.table.corrupt_entry(1, 0, kNoRow);
    }
    ValidationReport rep = validate_table(e.table, *p);
    if (!rep.pass) {
      for (auto const& v : rep.violations) {
        std::cerr << to_string(v.kind) << " at coset " << v.row << " (" << v.detail << ")\n";
      }
      std::cout << "index " << e.stats.index << ": FAIL\n";
      return kExitValidation;
    }
    std::cout << "index " << e.stats.index << ": ok\n";
    return kExitOk;
  }

  struct SweepFlags {
    std::string              method = "felsch";
    std::vector<std::string> rels;
    std::vector<std::string> pdl;
    std::vector<std::size_t> fill;
    std::vector<std::string> reuse;
    std::size_t              jobs = 0;
    std::string              csv;
    std::string              json;
  };

  PdlVariant parse_variant(std::string const& v) {
    if (v == "off") {
      return {PdlStructure::off, DropPolicy::earliest};
    }
    auto slash = v.find('/');
    std::string st = v.substr(0, slash);
    std::string dr = slash == std::string::npos ? "earliest" : v.substr(slash + 1);
    if ((st != "queue" && st != "stack") || (dr != "earliest" && dr != "latest")) {
      throw CLI::ValidationError("--grid-pdl", "bad variant '" + v + "'");
    }
    return {st == "queue" ? PdlStructure::queue : PdlStructure::stack,
            dr == "latest" ? DropPolicy::latest : DropPolicy::earliest};
  }

  bool write_out(std::string const& path, std::string const& text) {
    if (path == "-") {
      std::cout << text;
      return true;
    }
    std::ofstream out(path);
    out << text;
    if (!out) {
      std::cerr << path << ": cannot write\n";
      return false;
    }
    return true;
  }

  int cmd_sweep(std::string const& file, StrategyFlags const& f, SweepFlags const& g) {
    auto p = load(file);
    if (!p) {
      return kExitInput;
    }
    Strategy  base = build_strategy(f, *p);
    SweepGrid grid = SweepGrid::defaults(p->relators.size());
    grid.method    = g.method == "hlt" ? Method::hlt : Method::felsch;
    if (!g.rels.empty()) {
      grid.rels_in_subgroup.clear();
      for (auto const& r : g.rels) {
        grid.rels_in_subgroup.push_back(r == "all" ? kAllRelators
                                                   : parse_count(r, "--grid-rels"));
      }
    }
    if (!g.pdl.empty()) {
      grid.pdl.clear();
      for (auto const& v : g.pdl) {
        grid.pdl.push_back(parse_variant(v));
      }
    }
    if (!g.fill.empty()) {
      grid.fill_factors = g.fill;
    }
    if (!g.reuse.empty()) {
      grid.reuse.clear();
      for (auto const& r : g.reuse) {
        grid.reuse.push_back(r == "freelist" ? ReusePolicy::freelist : ReusePolicy::compact);
      }
    }
    std::size_t jobs = g.jobs != 0 ? g.jobs : std::max(1u, std::thread::hardware_concurrency());

    SweepReport rep;
    try {
      rep = run_sweep(*p, grid, base, jobs);
    } catch (SweepDisagreement const& e) {
      std::cerr << file << ": " << e.what() << '\n';
      return kExitValidation;
    }
    std::cout << render_sweep_text(rep);
    if (!g.csv.empty() && !write_out(g.csv, render_sweep_csv(rep))) {
      return kExitInput;
    }
    if (!g.json.empty() && !write_out(g.json, sweep_to_json(rep).dump(2) + "\n")) {
      return kExitInput;
    }
    return rep.failed_cells == rep.cells.size() ? kExitSpace : kExitOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Todd-Coxeter coset enumeration"};
  app.require_subcommand(1);

  std::string   file;
  StrategyFlags flags;
  std::string   format = "text";
  bool          corrupt = false;
  SweepFlags    grid;

  auto* run = app.add_subcommand("run", "Enumerate cosets and print statistics");
  run->add_option("file", file, "Presentation file")->required();
  add_strategy_flags(run, flags);
  run->add_option("--stats", format)->check(CLI::IsMember({"text", "json"}));

  auto* validate = app.add_subcommand("validate", "Enumerate, then check the coset table");
  validate->add_option("file", file, "Presentation file")->required();
  add_strategy_flags(validate, flags);
  validate->add_flag("--debug-corrupt", corrupt)->group("");

  auto* sweep = app.add_subcommand("sweep", "Run a grid of strategies");
  sweep->add_option("file", file, "Presentation file")->required();
  add_strategy_flags(sweep, flags);
  sweep->add_option("--grid-method", grid.method)->check(CLI::IsMember({"felsch", "hlt"}));
  sweep->add_option("--grid-rels", grid.rels, "rels-in-subgroup values (default 0..R)")
      ->delimiter(',');
  sweep->add_option("--grid-pdl", grid.pdl,
                    "Variants such as stack/earliest, queue/latest, off")
      ->delimiter(',');
  sweep->add_option("--grid-fill", grid.fill, "Fill factors (default 1..20)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep->add_option("--grid-reuse", grid.reuse)
      ->delimiter(',')
      ->check(CLI::IsMember({"compact", "freelist"}));
  sweep->add_option("--jobs,-j", grid.jobs, "Worker threads (default: all cores)");
  sweep->add_option("--csv", grid.csv, "Write every cell as CSV ('-' for stdout)");
  sweep->add_option("--json", grid.json, "Write every cell as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
    if (run->parsed()) {
      return cmd_run(file, flags, format);
    }
    if (validate->parsed()) {
      return cmd_validate(file, flags, corrupt);
    }
    return cmd_sweep(file, flags, grid);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  } catch (std::exception const& e) {
    std::cerr << "cosen: " << e.what() << '\n';
    return kExitInput;
  }
}
