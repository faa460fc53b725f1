#include "cosen/prepare.hpp"

#include <algorithm>

namespace cosen {

  namespace {
    void sort_by_length(std::vector<Word>& words) {
      std::stable_sort(words.begin(), words.end(), [](Word const& a, Word const& b) {
        return a.size() < b.size();
      });
    }
  }  // namespace

  PreparedPresentation prepare(Presentation const& p, Strategy const& s) {
    PreparedPresentation out;
    out.layout        = column_layout(p.generator_count(), p.involutions);
    out.relators      = p.relators;
    out.subgroup_gens = p.subgroup_gens;
    if (s.sort_by_length) {
      sort_by_length(out.relators);
      sort_by_length(out.subgroup_gens);
    }
    std::size_t n = std::min(s.rels_in_subgroup, out.relators.size());
    out.subgroup_gens.insert(out.subgroup_gens.end(),
                             out.relators.begin(),
                             out.relators.begin() + static_cast<std::ptrdiff_t>(n));

    for (auto const& r : out.relators) {
      if (is_involution_relator(r) && out.layout.is_involution(r[0].gen())) {
        continue;
      }
      out.scan_relators.push_back(r);
    }
    for (auto const& w : out.subgroup_gens) {
      out.subgroup_columns.push_back(out.layout.columns_of(w));
    }
    for (auto const& r : out.scan_relators) {
      out.relator_columns.push_back(out.layout.columns_of(r));
    }
    out.buffer = ScanBuffer(out.scan_relators, out.layout);
    return out;
  }

}  // namespace cosen
