// Coset table with premultiplied row references.
//
// Entries are stored row-major in one flat array. A reference to row i is
// stored as (i - 1) * c + 1, so the entry for column x of the row referenced
// by r lives at index r - 1 + x and no multiplication is needed while
// tracing words. 0 means undefined.
//
// Coincidences are processed without auxiliary per-row columns: dead rows
// forward to their survivor, and pending identifications live in a queue
// whose size is proportional to the number of pending items.

#ifndef COSEN_TABLE_HPP_
#define COSEN_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosen/words.hpp"

namespace cosen {

  // 1-based coset number. 0 is "no row".
  using Row = std::uint32_t;

  inline constexpr Row kNoRow = 0;

  // Encoded coset reference as stored in the table.
  class CosetRef {
   public:
    constexpr CosetRef() = default;
    constexpr explicit CosetRef(std::uint32_t encoded) : _encoded(encoded) {}

    static constexpr CosetRef from_row(Row row, std::size_t c) {
      return CosetRef(row == kNoRow ? 0 : static_cast<std::uint32_t>((row - 1) * c + 1));
    }
    constexpr Row row(std::size_t c) const {
      return _encoded == 0 ? kNoRow : static_cast<Row>((_encoded - 1) / c + 1);
    }
    constexpr std::uint32_t encoded() const { return _encoded; }
    constexpr bool          defined() const { return _encoded != 0; }

    constexpr bool operator==(CosetRef const&) const = default;

   private:
    std::uint32_t _encoded = 0;
  };

  enum class ReusePolicy { compact, freelist };

  class TableFull : public std::runtime_error {
   public:
    TableFull() : std::runtime_error("coset table full") {}
  };

  struct Deduction {
    Row    row;
    Column column;

    bool operator==(Deduction const&) const = default;
  };

  enum class ForceResult { unchanged, deduction, coincidence };

  struct CoincidenceOutcome {
    std::size_t            merges         = 0;
    bool                   total_collapse = false;
    std::vector<Deduction> deductions;  // only filled when requested
  };

  // Old row number -> new row number. Dead rows map to the new number of the
  // row they were identified with.
  struct RenumberMap {
    std::vector<Row> old_to_new;

    Row operator()(Row old) const {
      return old < old_to_new.size() ? old_to_new[old] : kNoRow;
    }
    bool is_identity() const;
  };

  class CosetTable {
   public:
    CosetTable(ColumnLayout layout, std::size_t max_words,
               ReusePolicy reuse = ReusePolicy::compact);

    ColumnLayout const& layout() const noexcept { return _layout; }
    std::size_t         columns() const noexcept { return _c; }
    std::size_t         capacity() const noexcept { return _capacity; }
    Row                 high_water() const noexcept { return _high_water; }
    std::size_t         live_count() const noexcept { return _live; }
    std::size_t         max_live() const noexcept { return _max_live; }
    std::size_t         total_defined() const noexcept { return _total_defined; }
    std::size_t         merges() const noexcept { return _merges_total; }
    std::size_t         compactions() const noexcept { return _compactions; }
    ReusePolicy         reuse() const noexcept { return _reuse; }

    bool is_live(Row r) const noexcept {
      return r != kNoRow && r <= _high_water && _forward[r] == r;
    }
    // Follows forwarding from dead rows to their surviving row.
    Row resolve(Row r);

    Row lookup(Row i, Column x) const noexcept {
      return ref_row(_entries[(i - 1) * _c + x]);
    }
    CosetRef entry(Row i, Column x) const noexcept {
      return CosetRef(_entries[(i - 1) * _c + x]);
    }
    bool row_complete(Row i) const noexcept;

    bool        has_space() const noexcept;
    // Dead rows not yet reclaimed (compaction policy).
    std::size_t dead_rows() const noexcept {
      return _high_water - _live - _free.size();
    }

    // Allocates a new coset n with f.x = n and n.x^-1 = f.
    Row define(Row f, Column x);

    // Installs f.x = b together with b.x^-1 = f, or queues the coincidence
    // this entry implies.
    ForceResult force_entry(Row f, Column x, Row b);

    void        enqueue_coincidence(Row a, Row b) { _queue.emplace_back(a, b); }
    std::size_t pending_coincidences() const noexcept { return _queue.size(); }

    CoincidenceOutcome process_coincidences(bool collect_deductions = false);

    RenumberMap compact();

    // Lowest live row with an undefined entry, or kNoRow when every live row
    // is complete. Advances a cached cursor.
    Row first_incomplete();

    bool collapse_shortcut() const noexcept { return _collapse_shortcut; }
    void set_collapse_shortcut(bool on) noexcept { _collapse_shortcut = on; }

    // Text dump, one line per live row.
    std::string dump(std::vector<std::string> const& names = {}) const;

    // Writes an entry without maintaining any invariant (fault injection).
    void corrupt_entry(Row i, Column x, Row value);

    // Raw access for tight tracing loops.
    std::uint32_t const* data() const noexcept { return _entries.data(); }
    std::uint32_t        ref(Row r) const noexcept {
      return r == kNoRow ? 0 : static_cast<std::uint32_t>((r - 1) * _c + 1);
    }
    Row ref_row(std::uint32_t e) const noexcept {
      return e == 0 ? kNoRow : static_cast<Row>((e - 1) / _c + 1);
    }

   private:
    std::uint32_t& at(Row i, Column x) noexcept { return _entries[(i - 1) * _c + x]; }
    Row            allocate_row();
    ForceResult    install(Row s, Column x, Row e, std::vector<Deduction>* out);
    void           merge(Row keep, Row lose, std::vector<Deduction>* out);
    void           note_modified(Row r) noexcept {
      if (r < _first_incomplete) {
        _first_incomplete = r;
      }
    }

    ColumnLayout               _layout;
    std::size_t                _c;
    std::size_t                _capacity;
    ReusePolicy                _reuse;
    std::vector<std::uint32_t> _entries;
    std::vector<Row>           _forward;  // _forward[r] == r iff r is live
    Row                        _high_water    = 0;
    std::size_t                _live          = 0;
    std::size_t                _max_live      = 0;
    std::size_t                _total_defined = 0;
    std::size_t                _merges_total  = 0;
    std::size_t                _compactions   = 0;
    Row                        _first_incomplete = 1;
    bool                       _collapse_shortcut = true;
    std::deque<std::pair<Row, Row>>                                _queue;
    std::priority_queue<Row, std::vector<Row>, std::greater<Row>>  _free;
    std::vector<Row>                                               _killed;
    std::vector<std::pair<Column, Row>>                            _detached;
  };

  // Rows that fit in a budget of `words` table entries at c columns.
  inline std::size_t rows_for_budget(std::size_t words, std::size_t c) {
    return c == 0 ? 0 : words / c;
  }

}  // namespace cosen

#endif  // COSEN_TABLE_HPP_
