#include "cosen/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "cosen/driver.hpp"
#include "cosen/report.hpp"

namespace cosen {

  SweepGrid SweepGrid::defaults(std::size_t relator_count) {
    SweepGrid g;
    for (std::size_t r = 0; r <= relator_count; ++r) {
      g.rels_in_subgroup.push_back(r);
    }
    g.pdl = {{PdlStructure::stack, DropPolicy::earliest},
             {PdlStructure::stack, DropPolicy::latest},
             {PdlStructure::queue, DropPolicy::earliest},
             {PdlStructure::queue, DropPolicy::latest},
             {PdlStructure::off, DropPolicy::earliest}};
    for (std::size_t f = 1; f <= 20; ++f) {
      g.fill_factors.push_back(f);
    }
    g.reuse = {ReusePolicy::compact};
    return g;
  }

  std::vector<Strategy> SweepGrid::cells(Strategy const& base) const {
    std::vector<Strategy> out;
    // HLT ignores the list and fill settings: one cell per rels/reuse pair.
    std::vector<PdlVariant> variants = pdl;
    if (method == Method::hlt) {
      variants = {{PdlStructure::off, DropPolicy::earliest}};
    }
    std::vector<std::size_t> fills = fill_factors;
    if (fills.empty()) {
      fills.push_back(kAutoFillFactor);
    }
    for (ReusePolicy reuse_policy : reuse) {
      for (std::size_t rels : rels_in_subgroup) {
        for (PdlVariant v : variants) {
          for (std::size_t ff : fills) {
            Strategy s         = base;
            s.method           = method;
            s.reuse            = reuse_policy;
            s.rels_in_subgroup = rels;
            s.pdl_structure    = v.structure;
            s.pdl_drop         = v.drop;
            s.fill_factor      = ff;
            out.push_back(s);
            if (v.structure == PdlStructure::off) {
              break;
            }
          }
        }
      }
    }
    return out;
  }

  SweepReport run_sweep(Presentation const& p,
                        SweepGrid const&    grid,
                        Strategy const&     base,
                        std::size_t         jobs) {
    std::vector<Strategy> strategies = grid.cells(base);
    if (strategies.empty()) {
      throw std::invalid_argument("empty sweep grid");
    }
    Strategy def = base;
    def.apply_preset('C');
    SweepReport rep;
    auto        it = std::find(strategies.begin(), strategies.end(), def);
    if (it == strategies.end()) {
      strategies.push_back(def);
      rep.default_cell = strategies.size() - 1;
    } else {
      rep.default_cell = static_cast<std::size_t>(it - strategies.begin());
    }

    rep.cells.resize(strategies.size());
    std::atomic<std::size_t> next{0};
    auto                     worker = [&]() {
      for (std::size_t i = next++; i < strategies.size(); i = next++) {
        rep.cells[i] = SweepCell{strategies[i], enumerate(p, strategies[i]).stats};
      }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, strategies.size()));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < jobs; ++k) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
      th.join();
    }

    bool any_ok = false;
    for (std::size_t i = 0; i < rep.cells.size(); ++i) {
      EnumStats const& s = rep.cells[i].stats;
      if (!s.ok()) {
        ++rep.failed_cells;
        continue;
      }
      if (!any_ok) {
        rep.index = s.index;
        rep.best = rep.worst = i;
        any_ok               = true;
        continue;
      }
      if (s.index != rep.index) {
        throw SweepDisagreement("sweep cells disagree on the index: "
                                + std::to_string(rep.index) + " vs "
                                + std::to_string(s.index) + " in cell "
                                + std::to_string(i));
      }
      EnumStats const& b = rep.cells[rep.best].stats;
      if (s.total_defined < b.total_defined
          || (s.total_defined == b.total_defined && s.max_active < b.max_active)) {
        rep.best = i;
      }
      EnumStats const& w = rep.cells[rep.worst].stats;
      if (s.total_defined > w.total_defined
          || (s.total_defined == w.total_defined && s.max_active > w.max_active)) {
        rep.worst = i;
      }
    }
    if (!any_ok) {
      rep.best = rep.worst = 0;
      for (std::size_t i = 1; i < rep.cells.size(); ++i) {
        if (rep.cells[i].stats.total_defined > rep.cells[rep.worst].stats.total_defined) {
          rep.worst = i;
        }
      }
    }
    return rep;
  }

  namespace {
    std::string describe(Strategy const& s) {
      std::ostringstream os;
      os << to_string(s.method) << " rels="
         << (s.rels_in_subgroup == kAllRelators ? std::string("all")
                                                : std::to_string(s.rels_in_subgroup));
      if (s.method == Method::felsch) {
        os << " pdl=" << to_string(s.pdl_structure);
        if (s.pdl_structure != PdlStructure::off) {
          os << '/' << to_string(s.pdl_drop) << " fill="
             << (s.fill_factor == kAutoFillFactor ? std::string("auto")
                                                  : std::to_string(s.fill_factor));
        }
      }
      os << " reuse=" << to_string(s.reuse);
      return os.str();
    }
  }  // namespace

  std::string render_sweep_text(SweepReport const& r) {
    std::ostringstream os;
    os << "cells: " << r.cells.size() << " (" << r.failed_cells << " out of space)";
    if (r.failed_cells < r.cells.size()) {
      os << ", index " << r.index;
    }
    os << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %10s %10s %9s  %s\n", "", "max", "total", "time",
                  "strategy");
    os << line;
    auto emit = [&](char const* name, SweepCell const& c) {
      std::snprintf(line, sizeof line, "%-8s %10zu %10zu %9.3f  %s\n", name,
                    c.stats.max_active, c.stats.total_defined, c.stats.elapsed_seconds,
                    describe(c.strategy).c_str());
      os << line;
    };
    emit("best", r.best_cell());
    emit("default", r.default_run());
    emit("worst", r.worst_cell());
    if (r.best_cell().stats.total_defined > 0) {
      std::snprintf(line, sizeof line, "worst/best total ratio: %.2f\n",
                    static_cast<double>(r.worst_cell().stats.total_defined)
                        / static_cast<double>(r.best_cell().stats.total_defined));
      os << line;
    }
    return os.str();
  }

  std::string render_sweep_csv(SweepReport const& r) {
    std::ostringstream os;
    os << "method,rels_in_subgroup,pdl,pdl_drop,pdl_size,fill_factor,reuse,outcome,index,"
          "max_active,total_defined,pdl_definitions,standard_definitions,pdl_pushed,"
          "pdl_dropped,pdl_stale,lookahead_passes,compactions,coincidences_merged,"
          "deductions_applied,total_collapse,elapsed_seconds\n";
    for (auto const& c : r.cells) {
      Strategy const&  s = c.strategy;
      EnumStats const& t = c.stats;
      os << to_string(s.method) << ','
         << (s.rels_in_subgroup == kAllRelators ? std::string("all")
                                                : std::to_string(s.rels_in_subgroup))
         << ',' << to_string(s.pdl_structure) << ',' << to_string(s.pdl_drop) << ','
         << s.pdl_capacity << ','
         << (s.fill_factor == kAutoFillFactor ? std::string("auto")
                                              : std::to_string(s.fill_factor))
         << ',' << to_string(s.reuse) << ',' << to_string(t.outcome) << ',' << t.index
         << ',' << t.max_active << ',' << t.total_defined << ',' << t.pdl_definitions << ','
         << t.standard_definitions << ',' << t.pdl_pushed << ',' << t.pdl_dropped << ','
         << t.pdl_stale << ',' << t.lookahead_passes << ',' << t.compactions << ','
         << t.coincidences_merged << ',' << t.deductions_applied << ','
         << (t.total_collapse ? 1 : 0) << ',' << t.elapsed_seconds << '\n';
    }
    return os.str();
  }

  nlohmann::json sweep_to_json(SweepReport const& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (auto const& c : r.cells) {
      cells.push_back(to_json(c.stats, c.strategy));
    }
    return nlohmann::json{{"index", r.index},
                          {"failed_cells", r.failed_cells},
                          {"best", r.best},
                          {"default", r.default_cell},
                          {"worst", r.worst},
                          {"cells", cells}};
  }

}  // namespace cosen
