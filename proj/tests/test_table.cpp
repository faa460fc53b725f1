#include <random>

#include "doctest.h"

#include "cosen/table.hpp"
#include "oracles.hpp"

using namespace cosen;

namespace {
  // Two generators a, b without involutions: a a^-1 b b^-1.
  constexpr Column A = 0, Ai = 1, B = 2, Bi = 3;

  ColumnLayout two_gen() { return column_layout(2, {}); }

  bool pair_symmetric(CosetTable const& t) {
    for (Row r = 1; r <= t.high_water(); ++r) {
      if (!t.is_live(r)) {
        continue;
      }
      for (Column x = 0; x < t.columns(); ++x) {
        Row e = t.lookup(r, x);
        if (e == kNoRow) {
          continue;
        }
        if (!t.is_live(e) || t.lookup(e, t.layout().inverse_column(x)) != r) {
          return false;
        }
      }
    }
    return true;
  }

  bool encoded_ok(CosetTable const& t) {
    std::uint32_t const* d = t.data();
    for (std::size_t k = 0; k < t.high_water() * t.columns(); ++k) {
      if (d[k] != 0 && (d[k] - 1) % t.columns() != 0) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_SUITE("table") {
  TEST_CASE("capacity from the word budget") {
    CHECK(CosetTable(two_gen(), 40).capacity() == 10);
    std::vector<GeneratorId> all8{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(CosetTable(column_layout(8, all8), 8).capacity() == 1);
    std::vector<GeneratorId> two{1, 2};
    CHECK_THROWS_AS(CosetTable(column_layout(4, two), 5), std::invalid_argument);
    CHECK(rows_for_budget(100, 4) == 25);
    CHECK(rows_for_budget(100, 6) == 16);
  }

  TEST_CASE("fresh table") {
    CosetTable t(two_gen(), 400);
    CHECK(t.live_count() == 1);
    CHECK(t.high_water() == 1);
    CHECK(t.total_defined() == 1);
    CHECK(t.lookup(1, A) == kNoRow);
    CHECK(t.first_incomplete() == 1);
  }

  TEST_CASE("define writes both entries in premultiplied form") {
    CosetTable t(two_gen(), 400);
    CHECK(t.define(1, A) == 2);
    CHECK(t.entry(1, A).encoded() == 5);
    CHECK(t.lookup(1, A) == 2);
    CHECK(t.lookup(2, Ai) == 1);
    CHECK(CosetRef::from_row(2, 4).row(4) == 2);
    CHECK(CosetRef::from_row(kNoRow, 4).encoded() == 0);
    CHECK_THROWS_AS(t.define(1, A), std::logic_error);
  }

  TEST_CASE("define on an involution column") {
    std::vector<GeneratorId> inv{1};
    CosetTable               t(column_layout(1, inv), 10);
    REQUIRE(t.columns() == 1);
    t.define(1, 0);
    CHECK(t.lookup(2, 0) == 1);
    CHECK(t.lookup(1, 0) == 2);
  }

  TEST_CASE("define on a full table") {
    CosetTable t(two_gen(), 4);
    CHECK_FALSE(t.has_space());
    CHECK_THROWS_AS(t.define(1, A), TableFull);
  }

  TEST_CASE("force_entry") {
    SUBCASE("empty pair gives a deduction") {
      CosetTable t(two_gen(), 400);
      t.define(1, B);  // row 2
      CHECK(t.force_entry(1, A, 2) == ForceResult::deduction);
      CHECK(t.lookup(2, Ai) == 1);
    }
    SUBCASE("conflicting back entry queues a coincidence") {
      CosetTable t(two_gen(), 400);
      t.define(1, B);   // 2
      t.define(2, Ai);  // 3, 3.a = 2
      CHECK(t.force_entry(1, A, 2) == ForceResult::coincidence);
      CHECK(t.pending_coincidences() == 1);
      auto out = t.process_coincidences();
      CHECK(out.merges == 1);
      CHECK_FALSE(t.is_live(3));
      CHECK(t.lookup(1, A) == 2);
      CHECK(t.lookup(2, Ai) == 1);
      CHECK(pair_symmetric(t));
    }
    SUBCASE("consistent pair is a no-op") {
      CosetTable t(two_gen(), 400);
      t.define(1, A);
      CHECK(t.force_entry(1, A, 2) == ForceResult::unchanged);
      CHECK(t.pending_coincidences() == 0);
    }
  }

  TEST_CASE("three row merge") {
    CosetTable t(two_gen(), 400);
    t.define(1, A);  // 2
    t.define(1, B);  // 3
    t.enqueue_coincidence(2, 3);
    auto out = t.process_coincidences();
    CHECK(out.merges == 1);
    CHECK(t.live_count() == 2);
    CHECK_FALSE(t.is_live(3));
    CHECK(t.lookup(1, B) == 2);
    CHECK(t.lookup(2, Bi) == 1);
    CHECK(t.lookup(1, A) == 2);
    CHECK(t.resolve(3) == 2);
  }

  TEST_CASE("self coincidence") {
    CosetTable t(two_gen(), 400);
    t.define(1, A);
    t.enqueue_coincidence(2, 2);
    CHECK(t.process_coincidences().merges == 0);
    CHECK(t.live_count() == 2);
  }

  TEST_CASE("row 1 survives and the shortcut discards the queue") {
    // <a | a^2> style: every row is identified with row 1.
    for (bool shortcut : {true, false}) {
      CosetTable t(two_gen(), 400);
      t.set_collapse_shortcut(shortcut);
      Row r = 1;
      for (int k = 0; k < 5; ++k) {
        r = t.define(r, A);
      }
      t.force_entry(r, A, 1);
      t.define(1, B);  // 7
      t.force_entry(7, B, 1);
      for (Row k = 2; k <= 7; ++k) {
        t.enqueue_coincidence(k, k == 7 ? 1 : k + 1);
      }
      auto out = t.process_coincidences();
      CHECK(t.is_live(1));
      CHECK(t.live_count() == 1);
      CHECK(out.total_collapse == shortcut);
      for (Column x = 0; x < 4; ++x) {
        CHECK(t.lookup(1, x) == 1);
      }
      CHECK(t.pending_coincidences() == 0);
    }
  }

  TEST_CASE("compaction") {
    CosetTable t(two_gen(), 400);
    t.define(1, A);  // 2
    t.define(1, B);  // 3
    t.define(2, A);  // 4
    t.define(3, B);  // 5
    t.define(4, B);  // 6
    t.enqueue_coincidence(2, 3);
    t.process_coincidences();
    REQUIRE_FALSE(t.is_live(3));
    auto        live = oracle::live_rows(t);
    auto        snap = oracle::snapshot(t);
    RenumberMap map  = t.compact();
    CHECK(live == std::vector<Row>{1, 2, 4, 5, 6});
    CHECK(map(4) == 3);
    CHECK(map(6) == 5);
    CHECK(map(3) == 2);
    CHECK(t.high_water() == 5);
    CHECK(t.live_count() == 5);
    for (Row old : live) {
      Row nr = map(old);
      REQUIRE(t.is_live(nr));
      for (Column x = 0; x < 4; ++x) {
        CHECK(t.lookup(nr, x) == map(snap.rows[old][x]));
      }
    }
    CHECK(pair_symmetric(t));
    CHECK(encoded_ok(t));
    std::string again = t.dump();
    CHECK(t.compact().is_identity());
    CHECK(t.dump() == again);
  }

  TEST_CASE("compaction of a table without dead rows is the identity") {
    CosetTable t(two_gen(), 400);
    t.define(1, A);
    t.define(2, B);
    std::vector<std::uint32_t> raw(t.data(), t.data() + t.high_water() * t.columns());
    CHECK(t.compact().is_identity());
    CHECK(std::equal(raw.begin(), raw.end(), t.data()));
  }

  TEST_CASE("free list reuses the lowest dead row") {
    CosetTable t(two_gen(), 400, ReusePolicy::freelist);
    t.define(1, A);  // 2
    t.define(1, B);  // 3
    t.define(3, A);  // 4
    t.enqueue_coincidence(2, 3);
    t.process_coincidences();
    REQUIRE_FALSE(t.is_live(3));
    CHECK(t.lookup(2, A) == 4);
    CHECK(t.define(4, B) == 3);
    CHECK(t.high_water() == 4);
    CHECK(t.lookup(3, Bi) == 4);
    CHECK(t.define(4, A) == 5);
  }

  TEST_CASE("first_incomplete tracks the lowest open row") {
    std::vector<GeneratorId> inv{1};
    CosetTable               t(column_layout(1, inv), 10);
    CHECK(t.first_incomplete() == 1);
    t.define(1, 0);
    CHECK(t.first_incomplete() == kNoRow);
  }

  TEST_CASE("dump format") {
    Presentation p = parse_presentation("generators: a, b\nrelators: a^2\n");
    CosetTable   t(column_layout(2, p.involutions), 30);
    t.define(1, 0);
    t.define(1, 1);
    CHECK(t.dump(p.generator_names) == "# row: a b b^-1\n1: 2 3 -\n2: 1 - -\n3: - - 1\n");
  }

  TEST_CASE("property: random coincidences match the naive merger") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t gens = 1 + rng() % 3;
      std::vector<GeneratorId> inv;
      if (rng() % 3 == 0) {
        inv.push_back(1);
      }
      CosetTable t(column_layout(gens, inv), 30 * (2 * gens), trial % 2 ? ReusePolicy::freelist : ReusePolicy::compact);
      t.set_collapse_shortcut(false);
      oracle::random_fill(t, rng, 2 + rng() % 29, rng() % 40);
      REQUIRE(t.pending_coincidences() == 0);
      REQUIRE(pair_symmetric(t));
      auto live = oracle::live_rows(t);
      auto snap = oracle::snapshot(t);
      std::vector<std::pair<Row, Row>> pairs;
      for (std::size_t k = 1 + rng() % 2; k > 0; --k) {
        Row a = live[rng() % live.size()];
        Row b = live[rng() % live.size()];
        pairs.emplace_back(a, b);
        t.enqueue_coincidence(a, b);
      }
      t.process_coincidences();
      auto q = oracle::naive_merge(snap, live, pairs);
      CHECK(oracle::compare_with_quotient(t, q) == "");
      CHECK(pair_symmetric(t));
      CHECK(encoded_ok(t));
      CHECK(t.is_live(1));
    }
  }

  TEST_CASE("property: compaction preserves the partial action") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      CosetTable t(column_layout(2, {}), 200);
      oracle::random_fill(t, rng, 2 + rng() % 29, rng() % 40);
      auto live = oracle::live_rows(t);
      t.enqueue_coincidence(live[rng() % live.size()], live[rng() % live.size()]);
      t.process_coincidences();
      live      = oracle::live_rows(t);
      auto snap = oracle::snapshot(t);
      auto map  = t.compact();
      CHECK(t.high_water() == live.size());
      for (Row old : live) {
        for (Column x = 0; x < 4; ++x) {
          CHECK(t.lookup(map(old), x) == map(snap.rows[old][x]));
        }
      }
      CHECK(pair_symmetric(t));
      CHECK(encoded_ok(t));
    }
  }
}
