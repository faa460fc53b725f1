#include "cosen/felsch.hpp"

namespace cosen {

  bool process_deductions(CosetTable&       t,
                          DeductionStack&   ds,
                          ScanBuffer const& buf,
                          Pdl*              pdl,
                          EnumStats&        stats) {
    while (!ds.empty()) {
      auto [row, col] = ds.pop();
      if (!t.is_live(row) || t.lookup(row, col) == kNoRow) {
        continue;
      }
      for (Occurrence const& occ : buf.occurrences(col)) {
        Row         base = occ.from_image ? t.lookup(row, col) : row;
        ScanOutcome out  = scan_relator(t, buf, occ.relator, occ.offset, base);
        switch (out.kind) {
          case ScanKind::complete:
          case ScanKind::open:
          case ScanKind::table_full:
            break;
          case ScanKind::gap1:
            if (pdl != nullptr) {
              pdl->push({out.first, out.column});
            }
            break;
          case ScanKind::deduction: {
            ForceResult r = t.force_entry(out.first, out.column, out.second);
            if (r == ForceResult::deduction) {
              ++stats.deductions_applied;
              ds.push({out.first, out.column});
              break;
            }
            if (r != ForceResult::coincidence) {
              break;
            }
            [[fallthrough]];
          }
          case ScanKind::coincidence: {
            if (out.kind == ScanKind::coincidence) {
              t.enqueue_coincidence(out.first, out.second);
            }
            CoincidenceOutcome co = t.process_coincidences(true);
            if (co.total_collapse) {
              ds.clear();
              return true;
            }
            for (Deduction d : co.deductions) {
              ds.push(d);
            }
            break;
          }
        }
        if (!t.is_live(row) || t.lookup(row, col) == kNoRow) {
          break;
        }
      }
    }
    return false;
  }

  std::optional<DefinitionSite> next_definition(CosetTable& t, Pdl* pdl, std::size_t fill_factor) {
    Row fi = t.first_incomplete();
    if (fi == kNoRow) {
      return std::nullopt;
    }
    if (pdl != nullptr && pdl_gate_open(fi, fill_factor, t.high_water())) {
      if (auto s = pdl->pop_valid(t)) {
        return DefinitionSite{s->row, s->column, true};
      }
    }
    for (Column x = 0; x < t.columns(); ++x) {
      if (t.lookup(fi, x) == kNoRow) {
        return DefinitionSite{fi, x, false};
      }
    }
    return std::nullopt;  // unreachable: fi is incomplete
  }

  EnumStats felsch_enumerate(PreparedPresentation const& p, Strategy const& s, CosetTable& t) {
    EnumStats          stats;
    std::optional<Pdl> pdl_storage;
    if (s.pdl_structure != PdlStructure::off) {
      pdl_storage.emplace(s.pdl_structure, s.pdl_drop, s.pdl_capacity);
    }
    Pdl*              pdl = pdl_storage ? &*pdl_storage : nullptr;
    DeductionStack    ds;
    std::size_t const ff = s.resolved_fill_factor(t.columns());
    bool              collapsed = false;

    auto finish = [&](Outcome o) {
      stats.outcome        = o;
      stats.index          = o == Outcome::index ? t.live_count() : 0;
      stats.total_collapse = collapsed;
      collect_table_counters(t, stats);
      if (pdl != nullptr) {
        stats.pdl_pushed  = pdl->pushed();
        stats.pdl_dropped = pdl->dropped();
        stats.pdl_stale   = pdl->stale();
      }
      return stats;
    };

    // Only called with an empty deduction stack.
    auto reclaim = [&]() {
      if (t.reuse() == ReusePolicy::compact && t.dead_rows() > 0) {
        RenumberMap map = t.compact();
        if (pdl != nullptr) {
          pdl->remap(map);
        }
      }
      return t.has_space();
    };

    auto push = [&](Row r, Column x, bool) { ds.push({r, x}); };

    std::size_t before = t.total_defined();
    for (auto const& w : p.subgroup_columns) {
      while (true) {
        ScanOutcome out = apply_coset(t, w, 1, true, push);
        if (out.kind == ScanKind::deduction) {
          ++stats.deductions_applied;
        }
        if (t.pending_coincidences() > 0) {
          CoincidenceOutcome co = t.process_coincidences(true);
          for (Deduction d : co.deductions) {
            ds.push(d);
          }
          collapsed = co.total_collapse;
        }
        if (!collapsed) {
          collapsed = process_deductions(t, ds, p.buffer, pdl, stats);
        }
        if (collapsed || out.kind != ScanKind::table_full) {
          break;
        }
        if (!reclaim()) {
          stats.standard_definitions = t.total_defined() - before;
          return finish(Outcome::out_of_space);
        }
      }
      if (collapsed) {
        break;
      }
    }
    stats.standard_definitions = t.total_defined() - before;

    while (!collapsed) {
      if (process_deductions(t, ds, p.buffer, pdl, stats)) {
        collapsed = true;
        break;
      }
      if (t.first_incomplete() == kNoRow) {
        break;
      }
      if (!t.has_space() && !reclaim()) {
        return finish(Outcome::out_of_space);
      }
      std::optional<DefinitionSite> site = next_definition(t, pdl, ff);
      if (!site) {
        break;
      }
      t.define(site->row, site->column);
      ds.push({site->row, site->column});
      if (site->from_pdl) {
        ++stats.pdl_definitions;
      } else {
        ++stats.standard_definitions;
      }
    }
    return finish(Outcome::index);
  }

}  // namespace cosen
