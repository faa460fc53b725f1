// Bounded list of preferred definition sites (gaps of length one found
// while processing deductions).

#ifndef COSEN_PDL_HPP_
#define COSEN_PDL_HPP_

#include <cstddef>
#include <deque>
#include <optional>

#include "cosen/table.hpp"

namespace cosen {

  enum class PdlStructure { off, queue, stack };
  enum class DropPolicy { earliest, latest };

  inline constexpr std::size_t kDefaultPdlCapacity = 200;

  struct Site {
    Row    row;
    Column column;

    bool operator==(Site const&) const = default;
  };

  class Pdl {
   public:
    Pdl(PdlStructure structure, DropPolicy drop, std::size_t capacity = kDefaultPdlCapacity);

    PdlStructure structure() const noexcept { return _structure; }
    DropPolicy   drop_policy() const noexcept { return _drop; }
    std::size_t  capacity() const noexcept { return _capacity; }
    std::size_t  size() const noexcept { return _items.size(); }
    bool         empty() const noexcept { return _items.empty(); }

    std::size_t pushed() const noexcept { return _pushed; }
    std::size_t dropped() const noexcept { return _dropped; }
    std::size_t popped() const noexcept { return _popped; }
    std::size_t stale() const noexcept { return _stale; }

    // Stored items, oldest first.
    std::deque<Site> const& items() const noexcept { return _items; }

    void push(Site s);

    // Removes items from the service end (newest for a stack, oldest for a
    // queue) until one whose row resolves to a live row with the entry still
    // undefined is found. Stale items are discarded.
    std::optional<Site> pop_valid(CosetTable& t);

    void remap(RenumberMap const& map);
    void clear() noexcept { _items.clear(); }

   private:
    PdlStructure     _structure;
    DropPolicy       _drop;
    std::size_t      _capacity;
    std::deque<Site> _items;
    std::size_t      _pushed  = 0;
    std::size_t      _dropped = 0;
    std::size_t      _popped  = 0;
    std::size_t      _stale   = 0;
  };

}  // namespace cosen

#endif  // COSEN_PDL_HPP_
