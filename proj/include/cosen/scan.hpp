// Relator scanning shared by the Felsch and HLT engines.

#ifndef COSEN_SCAN_HPP_
#define COSEN_SCAN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cosen/table.hpp"
#include "cosen/words.hpp"

namespace cosen {

  // A place where a relator letter of a given column occurs. When
  // `from_image` is set the letter is the inverse of the column, and the
  // scan starts at the image of the popped entry instead of its row.
  struct Occurrence {
    std::uint32_t relator;
    std::uint32_t offset;
    bool          from_image;
  };

  // Each relator is expanded three times so that every cyclic window can be
  // read without wrapping.
  class ScanBuffer {
   public:
    ScanBuffer() = default;
    ScanBuffer(std::span<Word const> relators, ColumnLayout const& layout);

    std::size_t relator_count() const noexcept { return _length.size(); }
    std::size_t length(std::size_t r) const noexcept { return _length[r]; }

    // 3 * length(r) columns.
    std::span<Column const> forward(std::size_t r) const noexcept {
      return {_fwd.data() + _start[r], 3 * _length[r]};
    }
    // Inverse columns of forward(r), position by position.
    std::span<Column const> backward(std::size_t r) const noexcept {
      return {_bwd.data() + _start[r], 3 * _length[r]};
    }
    std::span<Occurrence const> occurrences(Column x) const noexcept {
      return _occ[x];
    }

   private:
    std::vector<std::size_t>             _length;
    std::vector<std::size_t>             _start;
    std::vector<Column>                  _fwd;
    std::vector<Column>                  _bwd;
    std::vector<std::vector<Occurrence>> _occ;
  };

  enum class ScanKind {
    complete,
    coincidence,  // first ~ second
    deduction,    // first . column = second
    gap1,         // one missing coset; site (first, column)
    open,
    table_full
  };

  struct ScanOutcome {
    ScanKind kind   = ScanKind::complete;
    Row      first  = kNoRow;
    Column   column = 0;
    Row      second = kNoRow;

    bool operator==(ScanOutcome const&) const = default;
  };

  // Classifies the cycle of the relator window starting at `offset` traced
  // from `base`. Does not modify the table.
  ScanOutcome scan_window(CosetTable const&       t,
                          std::span<Column const> fwd,
                          std::span<Column const> bwd,
                          Row                     base);

  inline ScanOutcome scan_relator(CosetTable const& t,
                                  ScanBuffer const& buf,
                                  std::size_t       relator,
                                  std::size_t       offset,
                                  Row               base) {
    std::size_t len = buf.length(relator);
    return scan_window(t,
                       buf.forward(relator).subspan(offset, len),
                       buf.backward(relator).subspan(offset, len),
                       base);
  }

  // Traces `word` (as columns) at `coset`. With `define_allowed`, blocked
  // positions get new cosets from the forward side until one letter is left,
  // which is then closed with force_entry. Without it, behaves like
  // scan_window but applies the deduction and queues any coincidence.
  // `on_entry(row, column, defined)` is called for every entry newly set;
  // `defined` is true when the entry points at a freshly defined coset.
  // Coincidences are queued on the table; the caller processes them.
  template <typename OnEntry>
  ScanOutcome apply_coset(CosetTable&             t,
                          std::span<Column const> word,
                          Row                     coset,
                          bool                    define_allowed,
                          OnEntry&&               on_entry) {
    ColumnLayout const&  layout = t.layout();
    std::size_t          len    = word.size();
    if (len == 0) {
      return {};
    }
    std::size_t i = 0;
    std::size_t j = len;  // letters [j, len) already traced backwards
    Row         f = coset;
    Row         b = coset;
    while (true) {
      while (i < j) {
        Row n = t.lookup(f, word[i]);
        if (n == kNoRow) {
          break;
        }
        f = n;
        ++i;
      }
      if (i == j) {
        if (f != b) {
          t.enqueue_coincidence(f, b);
          return {ScanKind::coincidence, f, 0, b};
        }
        return {};
      }
      while (j > i) {
        Row n = t.lookup(b, layout.inverse_column(word[j - 1]));
        if (n == kNoRow) {
          break;
        }
        b = n;
        --j;
      }
      if (i == j) {
        if (f != b) {
          t.enqueue_coincidence(f, b);
          return {ScanKind::coincidence, f, 0, b};
        }
        return {};
      }
      if (j == i + 1) {
        ForceResult r = t.force_entry(f, word[i], b);
        if (r == ForceResult::deduction) {
          on_entry(f, word[i], false);
          return {ScanKind::deduction, f, word[i], b};
        }
        if (r == ForceResult::coincidence) {
          return {ScanKind::coincidence, f, word[i], b};
        }
        return {};
      }
      if (!define_allowed) {
        if (j == i + 2) {
          return {ScanKind::gap1, f, word[i], kNoRow};
        }
        return {ScanKind::open, f, word[i], kNoRow};
      }
      if (!t.has_space()) {
        return {ScanKind::table_full, f, word[i], kNoRow};
      }
      Row n = t.define(f, word[i]);
      on_entry(f, word[i], true);
      f = n;
      ++i;
    }
  }

}  // namespace cosen

#endif  // COSEN_SCAN_HPP_
