#include "cosen/table.hpp"

#include <limits>
#include <sstream>

namespace cosen {

  bool RenumberMap::is_identity() const {
    for (std::size_t i = 1; i < old_to_new.size(); ++i) {
      if (old_to_new[i] != i) {
        return false;
      }
    }
    return true;
  }

  CosetTable::CosetTable(ColumnLayout layout, std::size_t max_words, ReusePolicy reuse)
      : _layout(std::move(layout)),
        _c(_layout.columns()),
        _capacity(rows_for_budget(max_words, _layout.columns())),
        _reuse(reuse) {
    if (_c == 0) {
      throw std::invalid_argument("coset table needs at least one column");
    }
    if (_capacity == 0) {
      throw std::invalid_argument("space budget of " + std::to_string(max_words)
                                  + " words is too small for one row of "
                                  + std::to_string(_c) + " columns");
    }
    std::size_t limit = (std::numeric_limits<std::uint32_t>::max() - 1) / _c;
    if (_capacity > limit) {
      _capacity = limit;
    }
    _forward.push_back(kNoRow);
    allocate_row();
  }

  Row CosetTable::resolve(Row r) {
    if (r == kNoRow) {
      return r;
    }
    Row root = r;
    while (_forward[root] != root) {
      root = _forward[root];
    }
    while (r != root) {
      Row next    = _forward[r];
      _forward[r] = root;
      r           = next;
    }
    return root;
  }

  bool CosetTable::row_complete(Row i) const noexcept {
    std::uint32_t const* p = _entries.data() + (i - 1) * _c;
    for (std::size_t x = 0; x < _c; ++x) {
      if (p[x] == 0) {
        return false;
      }
    }
    return true;
  }

  bool CosetTable::has_space() const noexcept {
    return (_reuse == ReusePolicy::freelist && !_free.empty())
           || _high_water < _capacity;
  }

  Row CosetTable::allocate_row() {
    Row n;
    if (_reuse == ReusePolicy::freelist && !_free.empty()) {
      n = _free.top();
      _free.pop();
    } else if (_high_water < _capacity) {
      n = ++_high_water;
      _entries.resize(static_cast<std::size_t>(_high_water) * _c, 0);
      _forward.push_back(n);
    } else {
      throw TableFull();
    }
    _forward[n] = n;
    ++_live;
    ++_total_defined;
    if (_live > _max_live) {
      _max_live = _live;
    }
    note_modified(n);
    return n;
  }

  Row CosetTable::define(Row f, Column x) {
    if (at(f, x) != 0) {
      throw std::logic_error("define on an entry that is already set");
    }
    Row n                           = allocate_row();
    at(f, x)                        = ref(n);
    at(n, _layout.inverse_column(x)) = ref(f);
    return n;
  }

  ForceResult CosetTable::force_entry(Row f, Column x, Row b) {
    return install(f, x, b, nullptr);
  }

  ForceResult CosetTable::install(Row s, Column x, Row e, std::vector<Deduction>* out) {
    Column         inv = _layout.inverse_column(x);
    std::uint32_t  rs  = ref(s);
    std::uint32_t  re  = ref(e);
    std::uint32_t& t   = at(s, x);
    std::uint32_t& u   = at(e, inv);
    if (t == re) {
      if (u == 0) {
        u = rs;
      } else if (u != rs) {
        enqueue_coincidence(ref_row(u), s);
        return ForceResult::coincidence;
      }
      return ForceResult::unchanged;
    }
    if (t != 0) {
      enqueue_coincidence(ref_row(t), e);
      return ForceResult::coincidence;
    }
    if (u == rs) {
      t = re;
      return ForceResult::unchanged;
    }
    if (u != 0) {
      enqueue_coincidence(ref_row(u), s);
      return ForceResult::coincidence;
    }
    t = re;
    u = rs;
    if (out != nullptr) {
      out->push_back({s, x});
    }
    return ForceResult::deduction;
  }

  void CosetTable::merge(Row keep, Row lose, std::vector<Deduction>* out) {
    _forward[lose] = keep;
    --_live;
    ++_merges_total;
    if (_reuse == ReusePolicy::freelist) {
      _killed.push_back(lose);
    }
    note_modified(keep);

    // Detach every entry of the dead row before reinstalling any of them.
    _detached.clear();
    std::uint32_t const rl = ref(lose);
    for (Column x = 0; x < _c; ++x) {
      std::uint32_t e = at(lose, x);
      if (e == 0) {
        continue;
      }
      at(lose, x) = 0;
      Row            er   = ref_row(e);
      std::uint32_t& back = at(er, _layout.inverse_column(x));
      if (back == rl) {
        back = 0;
        note_modified(er);
      }
      _detached.emplace_back(x, er);
    }
    for (auto [x, er] : _detached) {
      install(keep, x, resolve(er), out);
    }
  }

  CoincidenceOutcome CosetTable::process_coincidences(bool collect_deductions) {
    CoincidenceOutcome out;
    auto*              ded = collect_deductions ? &out.deductions : nullptr;
    _killed.clear();
    while (!_queue.empty()) {
      auto [a, b] = _queue.front();
      _queue.pop_front();
      a = resolve(a);
      b = resolve(b);
      if (a == b) {
        continue;
      }
      if (a > b) {
        std::swap(a, b);
      }
      merge(a, b, ded);
      ++out.merges;
      if (_collapse_shortcut && _live == 1 && row_complete(1)) {
        for (Column x = 0; x < _c; ++x) {
          at(1, x) = 1;
        }
        _queue.clear();
        out.total_collapse = true;
        out.deductions.clear();
        break;
      }
    }
    for (Row r : _killed) {
      _free.push(r);
    }
    _killed.clear();
    return out;
  }

  RenumberMap CosetTable::compact() {
    if (!_queue.empty()) {
      throw std::logic_error("compact with pending coincidences");
    }
    RenumberMap map;
    map.old_to_new.assign(static_cast<std::size_t>(_high_water) + 1, kNoRow);
    Row next = 0;
    for (Row r = 1; r <= _high_water; ++r) {
      if (_forward[r] == r) {
        map.old_to_new[r] = ++next;
      }
    }
    for (Row r = 1; r <= _high_water; ++r) {
      if (_forward[r] != r) {
        map.old_to_new[r] = map.old_to_new[resolve(r)];
      }
    }
    Row first = kNoRow;
    for (Row r = _first_incomplete; r <= _high_water; ++r) {
      if (_forward[r] == r) {
        first = map.old_to_new[r];
        break;
      }
    }
    for (Row r = 1; r <= _high_water; ++r) {
      Row nr = map.old_to_new[r];
      if (_forward[r] != r) {
        continue;
      }
      std::uint32_t* src = _entries.data() + (r - 1) * _c;
      std::uint32_t* dst = _entries.data() + (nr - 1) * _c;
      for (std::size_t x = 0; x < _c; ++x) {
        std::uint32_t e = src[x];
        dst[x]          = e == 0 ? 0 : ref(map.old_to_new[ref_row(e)]);
      }
    }
    _high_water = next;
    _entries.resize(static_cast<std::size_t>(_high_water) * _c);
    _forward.resize(static_cast<std::size_t>(_high_water) + 1);
    for (Row r = 1; r <= _high_water; ++r) {
      _forward[r] = r;
    }
    _free             = {};
    _first_incomplete = first == kNoRow ? _high_water + 1 : first;
    ++_compactions;
    return map;
  }

  Row CosetTable::first_incomplete() {
    while (_first_incomplete <= _high_water) {
      Row r = _first_incomplete;
      if (_forward[r] == r && !row_complete(r)) {
        return r;
      }
      ++_first_incomplete;
    }
    return kNoRow;
  }

  std::string CosetTable::dump(std::vector<std::string> const& names) const {
    std::ostringstream os;
    os << "# row:";
    for (Column x = 0; x < _c; ++x) {
      Letter      l    = _layout.letter_of(x);
      std::string name = l.gen() <= names.size() ? names[l.gen() - 1]
                                                 : "g" + std::to_string(l.gen());
      os << ' ' << name << (l.inverse() ? "^-1" : "");
    }
    os << '\n';
    for (Row r = 1; r <= _high_water; ++r) {
      if (_forward[r] != r) {
        continue;
      }
      os << r << ':';
      for (Column x = 0; x < _c; ++x) {
        Row v = lookup(r, x);
        if (v == kNoRow) {
          os << " -";
        } else {
          os << ' ' << v;
        }
      }
      os << '\n';
    }
    return os.str();
  }

  void CosetTable::corrupt_entry(Row i, Column x, Row value) {
    at(i, x) = ref(value);
  }

}  // namespace cosen
