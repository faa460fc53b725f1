#include "cosen/hlt.hpp"

namespace cosen {

  LookaheadReport lookahead_pass(CosetTable&                          t,
                                 std::span<std::vector<Column> const> relators,
                                 std::size_t                          pass) {
    LookaheadReport rep;
    rep.pass                = pass;
    std::size_t live_before = t.live_count();
    auto        ignore      = [](Row, Column, bool) {};
    for (Row r = 1; r <= t.high_water(); ++r) {
      if (!t.is_live(r)) {
        continue;
      }
      ++rep.cosets_scanned;
      for (auto const& rel : relators) {
        ScanOutcome out = apply_coset(t, rel, r, false, ignore);
        if (out.kind == ScanKind::deduction) {
          ++rep.deductions;
        }
        if (t.pending_coincidences() > 0) {
          CoincidenceOutcome co = t.process_coincidences();
          rep.coincidences_found += co.merges;
          if (co.total_collapse) {
            rep.total_collapse = true;
            rep.rows_freed     = live_before - t.live_count();
            return rep;
          }
          if (!t.is_live(r)) {
            break;
          }
        }
      }
    }
    rep.rows_freed = live_before - t.live_count();
    return rep;
  }

  namespace {

    class HltRun {
     public:
      HltRun(PreparedPresentation const& p, Strategy const& s, CosetTable& t)
          : _p(p), _s(s), _t(t) {}

      EnumStats run() {
        grow_flags();
        _cursor = 1;
        for (auto const& w : _p.subgroup_columns) {
          Step st = apply_word(w);
          if (st == Step::full) {
            return finish(Outcome::out_of_space);
          }
          if (st == Step::collapsed) {
            return finish(Outcome::index);
          }
        }
        _cursor = 1;
        while (true) {
          while (_cursor <= _t.high_water()
                 && (!_t.is_live(_cursor) || _applied[_cursor] != 0)) {
            ++_cursor;
          }
          if (_cursor > _t.high_water()) {
            Row r = find_pending();
            if (r == kNoRow) {
              break;
            }
            _cursor = r;
            continue;
          }
          Step st = Step::ok;
          for (auto const& rel : _p.relator_columns) {
            st = apply_word(rel);
            if (st != Step::ok) {
              break;
            }
          }
          if (st == Step::ok) {
            st = fill_row();
          }
          if (st == Step::full) {
            return finish(Outcome::out_of_space);
          }
          if (st == Step::collapsed) {
            break;
          }
          if (st == Step::died) {
            continue;
          }
          _applied[_cursor] = 1;
          ++_cursor;
        }
        return finish(Outcome::index);
      }

     private:
      enum class Step { ok, died, full, collapsed };

      void grow_flags() {
        if (_applied.size() < static_cast<std::size_t>(_t.high_water()) + 1) {
          _applied.resize(static_cast<std::size_t>(_t.high_water()) + 1, 0);
        }
      }

      void on_entry(Row f, Column x, bool defined) {
        if (defined) {
          grow_flags();
          _applied[_t.lookup(f, x)] = 0;
        }
      }

      EnumStats finish(Outcome o) {
        _stats.outcome              = o;
        _stats.index                = o == Outcome::index ? _t.live_count() : 0;
        _stats.total_collapse       = _collapsed;
        collect_table_counters(_t, _stats);
        _stats.standard_definitions = _t.total_defined() - 1;
        return _stats;
      }

      // Makes room for at least one definition. May run a lookahead pass and
      // compact the table, in which case the cursor is renumbered.
      bool ensure_space() {
        if (_t.has_space()) {
          return true;
        }
        if (_s.lookahead) {
          ++_stats.lookahead_passes;
          LookaheadReport rep = lookahead_pass(_t, _p.relator_columns, _stats.lookahead_passes);
          _stats.deductions_applied += rep.deductions;
          if (rep.total_collapse) {
            _collapsed = true;
            return true;
          }
        }
        if (_t.reuse() == ReusePolicy::compact && _t.dead_rows() > 0) {
          Row  old_hw = _t.high_water();
          Row  c      = _cursor;
          bool alive  = _t.is_live(c);
          while (c <= old_hw && !_t.is_live(c)) {
            ++c;
          }
          std::vector<char> was_live(static_cast<std::size_t>(old_hw) + 1, 0);
          for (Row r = 1; r <= old_hw; ++r) {
            was_live[r] = _t.is_live(r) ? 1 : 0;
          }
          RenumberMap       map = _t.compact();
          std::vector<char> applied(static_cast<std::size_t>(_t.high_water()) + 1, 0);
          for (Row r = 1; r <= old_hw; ++r) {
            if (was_live[r] != 0) {
              applied[map(r)] = _applied[r];
            }
          }
          _applied = std::move(applied);
          _cursor  = c <= old_hw ? map(c) : _t.high_water() + 1;
          if (!alive) {
            _current_died = true;
          }
        }
        return _t.has_space();
      }

      Step apply_word(std::span<Column const> w) {
        auto hook = [this](Row f, Column x, bool defined) { on_entry(f, x, defined); };
        while (true) {
          ScanOutcome out = apply_coset(_t, w, _cursor, true, hook);
          if (out.kind == ScanKind::deduction) {
            ++_stats.deductions_applied;
          }
          if (_t.pending_coincidences() > 0) {
            if (_t.process_coincidences().total_collapse) {
              _collapsed = true;
              return Step::collapsed;
            }
          }
          if (out.kind != ScanKind::table_full) {
            return _t.is_live(_cursor) ? Step::ok : Step::died;
          }
          if (Step st = make_room(); st != Step::ok) {
            return st;
          }
        }
      }

      Step make_room() {
        _current_died = false;
        if (!ensure_space()) {
          return Step::full;
        }
        if (_collapsed) {
          return Step::collapsed;
        }
        if (_current_died || !_t.is_live(_cursor)) {
          return Step::died;
        }
        return Step::ok;
      }

      Step fill_row() {
        for (Column x = 0; x < _t.columns(); ++x) {
          while (_t.lookup(_cursor, x) == kNoRow) {
            if (!_t.has_space()) {
              if (Step st = make_room(); st != Step::ok) {
                return st;
              }
              continue;
            }
            _t.define(_cursor, x);
            on_entry(_cursor, x, true);
          }
        }
        return Step::ok;
      }

      // Lowest live row still needing work, or kNoRow.
      Row find_pending() {
        grow_flags();
        for (Row r = 1; r <= _t.high_water(); ++r) {
          if (!_t.is_live(r)) {
            continue;
          }
          if (_applied[r] == 0 || !_t.row_complete(r)) {
            _applied[r] = 0;
            return r;
          }
        }
        return kNoRow;
      }

      PreparedPresentation const& _p;
      Strategy const&             _s;
      CosetTable&                 _t;
      EnumStats                   _stats;
      std::vector<char>           _applied;
      Row                         _cursor       = 1;
      bool                        _collapsed    = false;
      bool                        _current_died = false;
    };

  }  // namespace

  EnumStats hlt_enumerate(PreparedPresentation const& p, Strategy const& s, CosetTable& t) {
    return HltRun(p, s, t).run();
  }

}  // namespace cosen
