#include "cosen/strategy.hpp"

#include <stdexcept>

namespace cosen {

  Strategy& Strategy::apply_preset(char p) {
    switch (p) {
      case 'A':
      case 'a':
        method           = Method::felsch;
        rels_in_subgroup = 0;
        pdl_structure    = PdlStructure::off;
        break;
      case 'B':
      case 'b':
        method           = Method::felsch;
        rels_in_subgroup = kAllRelators;
        pdl_structure    = PdlStructure::off;
        break;
      case 'C':
      case 'c':
        method           = Method::felsch;
        rels_in_subgroup = kAllRelators;
        pdl_structure    = PdlStructure::queue;
        pdl_drop         = DropPolicy::earliest;
        pdl_capacity     = kDefaultPdlCapacity;
        fill_factor      = kAutoFillFactor;
        break;
      default:
        throw std::invalid_argument(std::string("unknown preset '") + p + "'");
    }
    return *this;
  }

  bool EnumStats::same_counts(EnumStats const& o) const noexcept {
    return outcome == o.outcome && index == o.index && max_active == o.max_active
           && total_defined == o.total_defined && pdl_definitions == o.pdl_definitions
           && standard_definitions == o.standard_definitions
           && pdl_pushed == o.pdl_pushed && pdl_dropped == o.pdl_dropped
           && pdl_stale == o.pdl_stale && lookahead_passes == o.lookahead_passes
           && compactions == o.compactions
           && coincidences_merged == o.coincidences_merged
           && deductions_applied == o.deductions_applied
           && total_collapse == o.total_collapse;
  }

  void collect_table_counters(CosetTable const& t, EnumStats& s) {
    s.max_active          = t.max_live();
    s.total_defined       = t.total_defined();
    s.compactions         = t.compactions();
    s.coincidences_merged = t.merges();
  }

  char const* to_string(Method m) {
    return m == Method::felsch ? "felsch" : "hlt";
  }
  char const* to_string(PdlStructure p) {
    switch (p) {
      case PdlStructure::off:
        return "off";
      case PdlStructure::queue:
        return "queue";
      case PdlStructure::stack:
        return "stack";
    }
    return "?";
  }
  char const* to_string(DropPolicy d) {
    return d == DropPolicy::earliest ? "earliest" : "latest";
  }
  char const* to_string(ReusePolicy r) {
    return r == ReusePolicy::compact ? "compact" : "freelist";
  }
  char const* to_string(Outcome o) {
    return o == Outcome::index ? "index" : "out_of_space";
  }

}  // namespace cosen
