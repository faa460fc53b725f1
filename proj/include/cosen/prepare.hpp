// Presentation preparation: ordering, relators as subgroup generators and
// scan buffers.

#ifndef COSEN_PREPARE_HPP_
#define COSEN_PREPARE_HPP_

#include <vector>

#include "cosen/scan.hpp"
#include "cosen/strategy.hpp"
#include "cosen/words.hpp"

namespace cosen {

  struct PreparedPresentation {
    ColumnLayout      layout;
    std::vector<Word> relators;       // prepared order
    std::vector<Word> subgroup_gens;  // prepared order, then appended relators

    // Relators that are traced at every coset. Literal g^2 relators of
    // involutions are implied by the folded column and left out.
    std::vector<Word> scan_relators;

    std::vector<std::vector<Column>> subgroup_columns;
    std::vector<std::vector<Column>> relator_columns;  // of scan_relators
    ScanBuffer                       buffer;           // of scan_relators
  };

  PreparedPresentation prepare(Presentation const& p, Strategy const& s);

}  // namespace cosen

#endif  // COSEN_PREPARE_HPP_
