// HLT-type enumeration: each coset is applied to every relator in turn,
// defining cosets whenever a trace is blocked. When the table fills up a
// complete lookahead pass looks for coincidences without defining anything.

#ifndef COSEN_HLT_HPP_
#define COSEN_HLT_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cosen/prepare.hpp"
#include "cosen/scan.hpp"
#include "cosen/strategy.hpp"
#include "cosen/table.hpp"

namespace cosen {

  struct LookaheadReport {
    std::size_t pass               = 0;
    std::size_t cosets_scanned     = 0;
    std::size_t coincidences_found = 0;
    std::size_t deductions         = 0;
    std::size_t rows_freed         = 0;
    bool        total_collapse     = false;
  };

  // Scans every relator at every live coset without defining. Deductions are
  // applied and coincidences processed as they arise.
  LookaheadReport lookahead_pass(CosetTable&                            t,
                                 std::span<std::vector<Column> const>   relators,
                                 std::size_t                            pass = 1);

  EnumStats hlt_enumerate(PreparedPresentation const& p, Strategy const& s, CosetTable& t);

}  // namespace cosen

#endif  // COSEN_HLT_HPP_
