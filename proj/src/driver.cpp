#include "cosen/driver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <stdexcept>

#include "cosen/felsch.hpp"
#include "cosen/hlt.hpp"

namespace cosen {

  Enumeration enumerate(Presentation const& p, Strategy const& s) {
    auto                 start = std::chrono::steady_clock::now();
    PreparedPresentation prep  = prepare(p, s);
    CosetTable           table(prep.layout, s.max_words, s.reuse);
    table.set_collapse_shortcut(s.collapse_shortcut);
    EnumStats stats = s.method == Method::felsch ? felsch_enumerate(prep, s, table)
                                                 : hlt_enumerate(prep, s, table);
    stats.elapsed_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Enumeration{stats, std::move(prep), std::move(table)};
  }

  char const* to_string(ViolationKind k) {
    switch (k) {
      case ViolationKind::column_not_bijective:
        return "column-not-bijective";
      case ViolationKind::pair_asymmetry:
        return "pair-asymmetry";
      case ViolationKind::relator_open_at_coset:
        return "relator-open-at-coset";
      case ViolationKind::subgroup_gen_moves_coset_1:
        return "subgroup-gen-moves-coset-1";
      case ViolationKind::unreachable_coset:
        return "unreachable-coset";
    }
    return "?";
  }

  bool ValidationReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](Violation const& v) {
      return v.kind == k;
    });
  }

  namespace {
    constexpr std::size_t kMaxViolations = 64;

    // Traces w from r; kNoRow if some entry is missing or not live.
    Row trace(CosetTable const& t, Row r, std::vector<Column> const& w) {
      for (Column x : w) {
        r = t.lookup(r, x);
        if (!t.is_live(r)) {
          return kNoRow;
        }
      }
      return r;
    }
  }  // namespace

  ValidationReport validate_table(CosetTable const& t, Presentation const& p) {
    ValidationReport rep;
    auto             add = [&rep](ViolationKind k, Row r, std::size_t d) {
      rep.pass = false;
      if (rep.violations.size() < kMaxViolations) {
        rep.violations.push_back({k, r, d});
      }
    };
    ColumnLayout const& layout = t.layout();
    std::size_t const   c      = t.columns();
    Row const           hw     = t.high_water();

    if (!t.is_live(1)) {
      add(ViolationKind::unreachable_coset, 1, 0);
      return rep;
    }

    // (a) columns are permutations of the live rows, paired with their
    // inverse columns.
    for (Column x = 0; x < c; ++x) {
      std::vector<char> hit(static_cast<std::size_t>(hw) + 1, 0);
      for (Row r = 1; r <= hw; ++r) {
        if (!t.is_live(r)) {
          continue;
        }
        Row e = t.lookup(r, x);
        if (e == kNoRow || e > hw || !t.is_live(e) || hit[e] != 0) {
          add(ViolationKind::column_not_bijective, r, x);
          continue;
        }
        hit[e] = 1;
        if (t.lookup(e, layout.inverse_column(x)) != r) {
          add(ViolationKind::pair_asymmetry, r, x);
        }
      }
    }
    if (!rep.pass) {
      return rep;
    }

    // (b) every relator closes at every live coset.
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      std::vector<Column> w = layout.columns_of(p.relators[i]);
      for (Row r = 1; r <= hw; ++r) {
        if (t.is_live(r) && trace(t, r, w) != r) {
          add(ViolationKind::relator_open_at_coset, r, i);
        }
      }
    }

    // (c) subgroup generators fix coset 1.
    for (std::size_t i = 0; i < p.subgroup_gens.size(); ++i) {
      if (trace(t, 1, layout.columns_of(p.subgroup_gens[i])) != 1) {
        add(ViolationKind::subgroup_gen_moves_coset_1, 1, i);
      }
    }

    // (d) every live coset is reachable from coset 1.
    std::vector<char> seen(static_cast<std::size_t>(hw) + 1, 0);
    std::deque<Row>   todo{1};
    seen[1] = 1;
    while (!todo.empty()) {
      Row r = todo.front();
      todo.pop_front();
      for (Column x = 0; x < c; ++x) {
        Row e = t.lookup(r, x);
        if (e != kNoRow && seen[e] == 0) {
          seen[e] = 1;
          todo.push_back(e);
        }
      }
    }
    for (Row r = 1; r <= hw; ++r) {
      if (t.is_live(r) && seen[r] == 0) {
        add(ViolationKind::unreachable_coset, r, 0);
      }
    }
    return rep;
  }

  namespace {
    using Perm = std::vector<std::uint32_t>;

    Perm compose(Perm const& a, Perm const& b) {  // apply a, then b
      Perm out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = b[a[i]];
      }
      return out;
    }

    Perm inverse(Perm const& a) {
      Perm out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[a[i]] = static_cast<std::uint32_t>(i);
      }
      return out;
    }

    Perm identity(std::size_t n) {
      Perm out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint32_t>(i);
      }
      return out;
    }

    Perm evaluate(Word const& w, std::vector<Perm> const& gens, std::vector<Perm> const& invs) {
      Perm r = identity(gens.front().size());
      for (Letter l : w) {
        r = compose(r, l.inverse() ? invs[l.gen() - 1] : gens[l.gen() - 1]);
      }
      return r;
    }

    std::size_t group_order(std::vector<Perm> const& gens, std::size_t n) {
      constexpr std::size_t kLimit = 1'000'000;
      std::set<Perm>        seen{identity(n)};
      std::deque<Perm>      todo{identity(n)};
      while (!todo.empty()) {
        Perm g = std::move(todo.front());
        todo.pop_front();
        for (auto const& s : gens) {
          Perm h = compose(g, s);
          if (seen.insert(h).second) {
            if (seen.size() > kLimit) {
              throw std::invalid_argument("permutation group too large for brute force");
            }
            todo.push_back(std::move(h));
          }
        }
      }
      return seen.size();
    }
  }  // namespace

  std::size_t brute_force_index(Presentation const& p, PermImages const& images) {
    if (images.size() != p.generator_count() || images.empty()) {
      throw std::invalid_argument("need one permutation per generator");
    }
    std::size_t const n = images.front().size();
    std::vector<Perm> gens;
    std::vector<Perm> invs;
    for (auto const& img : images) {
      if (img.size() != n || n == 0) {
        throw std::invalid_argument("permutation images must share a nonzero degree");
      }
      std::vector<char> hit(n, 0);
      for (auto v : img) {
        if (v >= n || hit[v] != 0) {
          throw std::invalid_argument("image is not a permutation");
        }
        hit[v] = 1;
      }
      gens.push_back(img);
      invs.push_back(inverse(img));
    }
    Perm const id = identity(n);
    for (auto const& r : p.relators) {
      if (evaluate(r, gens, invs) != id) {
        throw std::invalid_argument("permutation images do not satisfy relator "
                                    + render_word(r, p.generator_names));
      }
    }
    std::vector<Perm> sub;
    for (auto const& w : p.subgroup_gens) {
      sub.push_back(evaluate(w, gens, invs));
    }
    std::size_t order_g = group_order(gens, n);
    std::size_t order_h = sub.empty() ? 1 : group_order(sub, n);
    return order_g / order_h;
  }

}  // namespace cosen
