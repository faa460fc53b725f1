#include "cosen/scan.hpp"

namespace cosen {

  ScanBuffer::ScanBuffer(std::span<Word const> relators, ColumnLayout const& layout)
      : _occ(layout.columns()) {
    for (std::size_t r = 0; r < relators.size(); ++r) {
      std::vector<Column> cols = layout.columns_of(relators[r]);
      _length.push_back(cols.size());
      _start.push_back(_fwd.size());
      for (int k = 0; k < 3; ++k) {
        for (Column x : cols) {
          _fwd.push_back(x);
          _bwd.push_back(layout.inverse_column(x));
        }
      }
      for (std::size_t p = 0; p < cols.size(); ++p) {
        Column x = cols[p];
        auto   r32 = static_cast<std::uint32_t>(r);
        auto   p32 = static_cast<std::uint32_t>(p);
        _occ[x].push_back({r32, p32, false});
        _occ[layout.inverse_column(x)].push_back({r32, p32, true});
      }
    }
  }

  ScanOutcome scan_window(CosetTable const&       t,
                          std::span<Column const> fwd,
                          std::span<Column const> bwd,
                          Row                     base) {
    std::uint32_t const* d   = t.data();
    std::size_t const    len = fwd.size();
    std::uint32_t        f   = t.ref(base);
    std::uint32_t const  b0  = f;
    std::size_t          i   = 0;
    while (i < len) {
      std::uint32_t n = d[f - 1 + fwd[i]];
      if (n == 0) {
        break;
      }
      f = n;
      ++i;
    }
    if (i == len) {
      if (f == b0) {
        return {};
      }
      return {ScanKind::coincidence, t.ref_row(f), 0, base};
    }
    std::uint32_t b = b0;
    std::size_t   j = len;
    while (j > i) {
      std::uint32_t n = d[b - 1 + bwd[j - 1]];
      if (n == 0) {
        break;
      }
      b = n;
      --j;
    }
    if (j == i) {
      if (f == b) {
        return {};
      }
      return {ScanKind::coincidence, t.ref_row(f), 0, t.ref_row(b)};
    }
    if (j == i + 1) {
      return {ScanKind::deduction, t.ref_row(f), fwd[i], t.ref_row(b)};
    }
    if (j == i + 2) {
      return {ScanKind::gap1, t.ref_row(f), fwd[i], kNoRow};
    }
    return {ScanKind::open, t.ref_row(f), fwd[i], kNoRow};
  }

}  // namespace cosen
