// Strategy grid sweeps: run every cell, then report the best, default
// (Method C) and worst cells by total cosets defined.

#ifndef COSEN_SWEEP_HPP_
#define COSEN_SWEEP_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cosen/strategy.hpp"
#include "cosen/words.hpp"

namespace cosen {

  struct PdlVariant {
    PdlStructure structure;
    DropPolicy   drop;

    bool operator==(PdlVariant const&) const = default;
  };

  struct SweepGrid {
    Method                   method = Method::felsch;
    std::vector<std::size_t> rels_in_subgroup;  // prefix counts
    std::vector<PdlVariant>  pdl;
    std::vector<std::size_t> fill_factors;
    std::vector<ReusePolicy> reuse;

    // rels 0..R, the four list variants plus off, fill factors 1..20,
    // compaction only.
    static SweepGrid defaults(std::size_t relator_count);

    // Cells in grid order. PDL-off and HLT cells do not vary the list or
    // fill factor.
    // Every cell starts from `base` (space budget, sorting, ...).
    std::vector<Strategy> cells(Strategy const& base) const;
  };

  struct SweepCell {
    Strategy  strategy;
    EnumStats stats;
  };

  struct SweepReport {
    std::vector<SweepCell> cells;
    std::size_t            best          = 0;
    std::size_t            worst         = 0;
    std::size_t            default_cell  = 0;
    std::size_t            index         = 0;  // agreed by all successful cells
    std::size_t            failed_cells  = 0;

    SweepCell const& best_cell() const { return cells[best]; }
    SweepCell const& worst_cell() const { return cells[worst]; }
    SweepCell const& default_run() const { return cells[default_cell]; }
  };

  class SweepDisagreement : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The default strategy cell is added when the grid does not contain it.
  // Cells run on up to `jobs` threads.
  SweepReport run_sweep(Presentation const& p,
                        SweepGrid const&    grid,
                        Strategy const&     base,
                        std::size_t         jobs = 1);

  std::string    render_sweep_text(SweepReport const& r);
  std::string    render_sweep_csv(SweepReport const& r);
  nlohmann::json sweep_to_json(SweepReport const& r);

}  // namespace cosen

#endif  // COSEN_SWEEP_HPP_
