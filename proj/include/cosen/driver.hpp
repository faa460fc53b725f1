// Enumeration entry point, completed-table validation and a permutation
// based index oracle for small fixtures.

#ifndef COSEN_DRIVER_HPP_
#define COSEN_DRIVER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cosen/prepare.hpp"
#include "cosen/strategy.hpp"
#include "cosen/table.hpp"
#include "cosen/words.hpp"

namespace cosen {

  struct Enumeration {
    EnumStats            stats;
    PreparedPresentation prepared;
    CosetTable           table;
  };

  // Never throws for lack of space; that is reported in stats.outcome.
  Enumeration enumerate(Presentation const& p, Strategy const& s);

  enum class ViolationKind {
    column_not_bijective,
    pair_asymmetry,
    relator_open_at_coset,
    subgroup_gen_moves_coset_1,
    unreachable_coset
  };

  char const* to_string(ViolationKind k);

  struct Violation {
    ViolationKind kind;
    Row           row;
    std::size_t   detail;  // column, relator or subgroup generator index
  };

  struct ValidationReport {
    bool                   pass = true;
    std::vector<Violation> violations;

    bool has(ViolationKind k) const;
  };

  // Checks that the live part of `t` is a complete coset table for `p`.
  ValidationReport validate_table(CosetTable const& t, Presentation const& p);

  // Permutation images on points 0..n-1, one per generator.
  using PermImages = std::vector<std::vector<std::uint32_t>>;

  // Index of the subgroup computed by listing the elements of the
  // permutation group the images generate. The images must satisfy every
  // relator and give a faithful action; small degrees only.
  std::size_t brute_force_index(Presentation const& p, PermImages const& images);

}  // namespace cosen

#endif  // COSEN_DRIVER_HPP_
