#include <random>

#include "doctest.h"

#include "cosen/driver.hpp"
#include "cosen/hlt.hpp"
#include "cosen/parse.hpp"
#include "oracles.hpp"

using namespace cosen;

namespace {
  Presentation corpus(std::string const& name) {
    return read_presentation_file(std::string(COSEN_DATA_DIR) + "/" + name + ".pres");
  }

  Strategy hlt(bool lookahead = true, ReusePolicy reuse = ReusePolicy::compact) {
    Strategy s;
    s.method    = Method::hlt;
    s.lookahead = lookahead;
    s.reuse     = reuse;
    return s;
  }

  std::vector<std::vector<Column>> columns(Presentation const& p, ColumnLayout const& l) {
    std::vector<std::vector<Column>> out;
    for (auto const& r : p.relators) {
      out.push_back(l.columns_of(r));
    }
    return out;
  }
}  // namespace

TEST_SUITE("hlt") {
  TEST_CASE("lookahead on a consistent table frees nothing") {
    Presentation p = parse_presentation("generators: a\nrelators: a^3\n");
    ColumnLayout l = column_layout(1, {});
    CosetTable   t(l, 20);
    t.define(1, 0);
    auto rels = columns(p, l);
    auto rep  = lookahead_pass(t, rels);
    CHECK(rep.rows_freed == 0);
    CHECK(rep.cosets_scanned == 2);
    CHECK(t.high_water() == 2);
  }

  TEST_CASE("lookahead finds a closing coincidence") {
    Presentation p = parse_presentation("generators: a\nrelators: a^3\n");
    ColumnLayout l = column_layout(1, {});
    CosetTable   t(l, 20);
    t.define(1, 0);
    t.define(2, 0);
    t.define(3, 0);
    auto rels = columns(p, l);
    auto rep  = lookahead_pass(t, rels);
    CHECK(rep.rows_freed == 1);
    CHECK(rep.coincidences_found == 1);
    CHECK(t.live_count() == 3);
    CHECK(t.lookup(3, 0) == 1);
    CHECK(t.lookup(1, 1) == 3);
    CHECK(t.total_defined() == 4);
  }

  TEST_CASE("lookahead reports a total collapse") {
    Presentation p = parse_presentation("generators: a, b\nrelators: a, b\n");
    ColumnLayout l = column_layout(2, {});
    CosetTable   t(l, 40);
    t.define(1, 0);
    t.define(1, 2);
    auto rels = columns(p, l);
    auto rep  = lookahead_pass(t, rels);
    CHECK(rep.total_collapse);
    CHECK(t.live_count() == 1);
    EnumStats s = enumerate(p, hlt()).stats;
    CHECK(s.index == 1);
  }

  TEST_CASE("published indices") {
    CHECK(enumerate(corpus("idx105"), hlt()).stats.index == 105);
    CHECK(enumerate(corpus("f27"), hlt()).stats.index == 29);
    CHECK(enumerate(corpus("z_n2_4"), hlt()).stats.index == 15);
  }

  TEST_CASE("small budgets need lookahead") {
    for (ReusePolicy reuse : {ReusePolicy::compact, ReusePolicy::freelist}) {
      Strategy s  = hlt(true, reuse);
      s.max_words = 130 * 4;
      EnumStats e = enumerate(corpus("z_n2_10"), s).stats;
      CHECK(e.ok());
      CHECK(e.index == 99);
      CHECK(e.lookahead_passes > 0);
      CHECK(e.max_active <= 130);

      s.lookahead = false;
      CHECK(enumerate(corpus("z_n2_10"), s).stats.outcome == Outcome::out_of_space);
    }
  }

  TEST_CASE("tiny budget fails cleanly") {
    Strategy s  = hlt();
    s.max_words = 50 * 6;
    EnumStats e = enumerate(corpus("idx105"), s).stats;
    CHECK(e.outcome == Outcome::out_of_space);
    CHECK(e.index == 0);
  }

  TEST_CASE("property: lookahead never defines or grows the table") {
    std::mt19937 rng(51);
    Presentation p = parse_presentation("generators: a, b\nrelators: a^3, b^2, (a*b)^3\n");
    ColumnLayout l = column_layout(2, p.involutions);
    auto         rels = columns(p, l);
    for (int trial = 0; trial < 200; ++trial) {
      CosetTable t(l, 40 * l.columns(), trial % 2 ? ReusePolicy::freelist : ReusePolicy::compact);
      oracle::random_fill(t, rng, 2 + rng() % 30, rng() % 30);
      std::size_t live  = t.live_count();
      std::size_t total = t.total_defined();
      Row         hw    = t.high_water();
      lookahead_pass(t, rels);
      CHECK(t.live_count() <= live);
      CHECK(t.total_defined() == total);
      CHECK(t.high_water() == hw);
      CHECK(t.pending_coincidences() == 0);
    }
  }

  TEST_CASE("property: hlt agrees with felsch and is quiescent") {
    for (auto const& name : {"s3", "z7", "z5", "d4", "f27", "idx105", "z_n2_3", "z_n2_4",
                             "z_n2_5", "z_n2_6", "z_n2_7", "z_n2_8", "z_n2_9", "z_n2_10"}) {
      Presentation p      = corpus(name);
      std::size_t  expect = enumerate(p, Strategy{}).stats.index;
      for (ReusePolicy reuse : {ReusePolicy::compact, ReusePolicy::freelist}) {
        for (std::size_t rels : {std::size_t{0}, kAllRelators}) {
          Strategy s         = hlt(true, reuse);
          s.rels_in_subgroup = rels;
          Enumeration e      = enumerate(p, s);
          REQUIRE(e.stats.ok());
          CHECK_MESSAGE(e.stats.index == expect, name);
          CHECK(e.stats.pdl_definitions == 0);
          CHECK(e.stats.standard_definitions == e.stats.total_defined - 1);
          for (auto const& w : e.prepared.relator_columns) {
            for (Row r = 1; r <= e.table.high_water(); ++r) {
              if (e.table.is_live(r)) {
                CHECK(oracle::naive_scan(e.table, w, r).kind == ScanKind::complete);
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("property: free list and compaction agree under pressure") {
    // Budgets between the index and the unconstrained maximum.
    struct Case {
      char const* name;
      std::size_t rows;
    };
    for (Case c : {Case{"z_n2_8", 70}, Case{"z_n2_9", 90}, Case{"z_n2_10", 110},
                   Case{"idx105", 3000}}) {
      Presentation p = corpus(c.name);
      std::size_t  cols = column_layout(p.generator_count(), p.involutions).columns();
      std::size_t  want = enumerate(p, Strategy{}).stats.index;
      for (ReusePolicy reuse : {ReusePolicy::compact, ReusePolicy::freelist}) {
        Strategy s  = hlt(true, reuse);
        s.max_words = c.rows * cols;
        Enumeration e = enumerate(p, s);
        if (e.stats.ok()) {
          CHECK_MESSAGE(e.stats.index == want, c.name);
          CHECK(validate_table(e.table, p).pass);
        }
      }
    }
  }
}
