// Felsch-type enumeration: every new entry is pushed as a deduction and all
// relator cycles through it are scanned before the next definition. Gaps of
// length one seen during scanning feed the preferred definition list.

#ifndef COSEN_FELSCH_HPP_
#define COSEN_FELSCH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cosen/pdl.hpp"
#include "cosen/prepare.hpp"
#include "cosen/scan.hpp"
#include "cosen/strategy.hpp"
#include "cosen/table.hpp"

namespace cosen {

  // Entries awaiting relator scanning. Rows may die before they are popped.
  class DeductionStack {
   public:
    void push(Deduction d) { _items.push_back(d); }
    Deduction pop() {
      Deduction d = _items.back();
      _items.pop_back();
      return d;
    }
    bool        empty() const noexcept { return _items.empty(); }
    std::size_t size() const noexcept { return _items.size(); }
    void        clear() noexcept { _items.clear(); }

   private:
    std::vector<Deduction> _items;
  };

  struct DefinitionSite {
    Row    row;
    Column column;
    bool   from_pdl;

    bool operator==(DefinitionSite const&) const = default;
  };

  // A preferred definition may be made only once the rows before
  // `first_incomplete` make up at least 1/fill_factor of the rows in use.
  constexpr bool pdl_gate_open(Row first_incomplete, std::size_t fill_factor, Row high_water) {
    return static_cast<std::size_t>(first_incomplete) * fill_factor
           >= static_cast<std::size_t>(high_water) + 1;
  }

  // Drains the stack. Returns true if the table collapsed to a single coset,
  // in which case the remaining deductions are discarded.
  bool process_deductions(CosetTable&       t,
                          DeductionStack&   ds,
                          ScanBuffer const& buf,
                          Pdl*              pdl,
                          EnumStats&        stats);

  // Next site to define, or nullopt when the table is complete.
  std::optional<DefinitionSite> next_definition(CosetTable& t, Pdl* pdl, std::size_t fill_factor);

  EnumStats felsch_enumerate(PreparedPresentation const& p, Strategy const& s, CosetTable& t);

}  // namespace cosen

#endif  // COSEN_FELSCH_HPP_
