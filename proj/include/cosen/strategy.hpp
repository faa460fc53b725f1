// Enumeration strategy knobs and run statistics.

#ifndef COSEN_STRATEGY_HPP_
#define COSEN_STRATEGY_HPP_

#include <cstddef>
#include <limits>
#include <string>

#include "cosen/pdl.hpp"
#include "cosen/table.hpp"

namespace cosen {

  enum class Method { felsch, hlt };

  inline constexpr std::size_t kAllRelators     = std::numeric_limits<std::size_t>::max();
  inline constexpr std::size_t kAutoFillFactor  = 0;
  inline constexpr std::size_t kDefaultMaxWords = std::size_t{1} << 25;

  // Fill factor used when none is given: floor(5 (c + 2) / 4).
  constexpr std::size_t default_fill_factor(std::size_t columns) {
    return 5 * (columns + 2) / 4;
  }

  // The defaults are the Method C strategy.
  struct Strategy {
    Method       method            = Method::felsch;
    bool         lookahead         = true;  // hlt only
    std::size_t  rels_in_subgroup  = kAllRelators;
    PdlStructure pdl_structure     = PdlStructure::queue;
    DropPolicy   pdl_drop          = DropPolicy::earliest;
    std::size_t  pdl_capacity      = kDefaultPdlCapacity;
    std::size_t  fill_factor       = kAutoFillFactor;
    ReusePolicy  reuse             = ReusePolicy::compact;
    bool         sort_by_length    = true;
    std::size_t  max_words         = kDefaultMaxWords;
    bool         collapse_shortcut = true;

    std::size_t resolved_fill_factor(std::size_t columns) const {
      return fill_factor == kAutoFillFactor ? default_fill_factor(columns) : fill_factor;
    }

    // 'A', 'B' or 'C'. Only the definition-strategy fields are touched.
    Strategy& apply_preset(char preset);
    static Strategy preset(char p) { return Strategy{}.apply_preset(p); }

    bool operator==(Strategy const&) const = default;
  };

  enum class Outcome { index, out_of_space };

  struct EnumStats {
    Outcome     outcome              = Outcome::out_of_space;
    std::size_t index                = 0;
    std::size_t max_active           = 0;
    std::size_t total_defined        = 0;
    std::size_t pdl_definitions      = 0;
    std::size_t standard_definitions = 0;
    std::size_t pdl_pushed           = 0;
    std::size_t pdl_dropped          = 0;
    std::size_t pdl_stale            = 0;
    std::size_t lookahead_passes     = 0;
    std::size_t compactions          = 0;
    std::size_t coincidences_merged  = 0;
    std::size_t deductions_applied   = 0;
    bool        total_collapse       = false;
    double      elapsed_seconds      = 0.0;

    bool ok() const noexcept { return outcome == Outcome::index; }

    // Field-wise equality ignoring elapsed time.
    bool same_counts(EnumStats const& o) const noexcept;
  };

  // Copies the table's own counters into the stats record.
  void collect_table_counters(CosetTable const& t, EnumStats& s);

  char const* to_string(Method m);
  char const* to_string(PdlStructure p);
  char const* to_string(DropPolicy d);
  char const* to_string(ReusePolicy r);
  char const* to_string(Outcome o);

}  // namespace cosen

#endif  // COSEN_STRATEGY_HPP_
