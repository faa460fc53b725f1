#include "cosen/pdl.hpp"

#include <stdexcept>

namespace cosen {

  Pdl::Pdl(PdlStructure structure, DropPolicy drop, std::size_t capacity)
      : _structure(structure), _drop(drop), _capacity(capacity) {
    if (capacity == 0) {
      throw std::invalid_argument("preferred definition list capacity must be positive");
    }
  }

  void Pdl::push(Site s) {
    ++_pushed;
    if (_items.size() == _capacity) {
      ++_dropped;
      if (_drop == DropPolicy::latest) {
        return;
      }
      _items.pop_front();
    }
    _items.push_back(s);
  }

  std::optional<Site> Pdl::pop_valid(CosetTable& t) {
    while (!_items.empty()) {
      Site s;
      if (_structure == PdlStructure::stack) {
        s = _items.back();
        _items.pop_back();
      } else {
        s = _items.front();
        _items.pop_front();
      }
      ++_popped;
      if (s.row <= t.high_water()) {
        s.row = t.resolve(s.row);
        if (t.is_live(s.row) && t.lookup(s.row, s.column) == kNoRow) {
          return s;
        }
      }
      ++_stale;
    }
    return std::nullopt;
  }

  void Pdl::remap(RenumberMap const& map) {
    for (auto& s : _items) {
      s.row = map(s.row);
    }
  }

}  // namespace cosen
