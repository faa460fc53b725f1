#include <random>

#include "doctest.h"

#include "cosen/driver.hpp"
#include "cosen/felsch.hpp"
#include "cosen/parse.hpp"
#include "cosen/pdl.hpp"
#include "cosen/scan.hpp"
#include "oracles.hpp"

using namespace cosen;

namespace {
  Presentation pres(std::string const& text) { return parse_presentation(text); }

  struct Fixture {
    Presentation p;
    ColumnLayout layout;
    ScanBuffer   buf;
    CosetTable   t;

    explicit Fixture(std::string const& text, std::size_t rows = 100)
        : p(pres(text)),
          layout(column_layout(p.generator_count(), p.involutions)),
          buf(p.relators, layout),
          t(layout, rows * layout.columns()) {}
  };

  std::vector<std::string> corpus_small() {
    return {"s3", "z7", "z5", "d4", "f27", "idx105", "z_n2_3", "z_n2_4", "z_n2_5",
            "z_n2_6", "z_n2_7", "z_n2_8", "z_n2_9", "z_n2_10"};
  }

  Presentation corpus(std::string const& name) {
    return read_presentation_file(std::string(COSEN_DATA_DIR) + "/" + name + ".pres");
  }

  bool quiescent(Enumeration const& e) {
    CosetTable const& t = e.table;
    for (auto const& w : e.prepared.relator_columns) {
      for (Row r = 1; r <= t.high_water(); ++r) {
        if (t.is_live(r) && oracle::naive_scan(t, w, r).kind != ScanKind::complete) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_SUITE("scan") {
  TEST_CASE("scan buffer layout") {
    Fixture f("generators: a, b\nrelators: a*b^-1*a\n");
    REQUIRE(f.buf.relator_count() == 1);
    CHECK(f.buf.length(0) == 3);
    CHECK(f.buf.forward(0).size() == 9);
    std::vector<Column> fwd(f.buf.forward(0).begin(), f.buf.forward(0).end());
    CHECK(fwd == std::vector<Column>{0, 3, 0, 0, 3, 0, 0, 3, 0});
    std::vector<Column> bwd(f.buf.backward(0).begin(), f.buf.backward(0).end());
    CHECK(bwd[0] == 1);
    CHECK(bwd[1] == 2);
    // a occurs twice forward; a^-1 sees the same positions from the image.
    CHECK(f.buf.occurrences(0).size() == 2);
    CHECK(f.buf.occurrences(1).size() == 2);
    CHECK(f.buf.occurrences(1)[0].from_image);
    CHECK(f.buf.occurrences(3).size() == 1);
    CHECK(f.buf.occurrences(2).size() == 1);
  }

  TEST_CASE("deduction when one letter is missing") {
    Fixture f("generators: a\nrelators: a^3\n");
    f.t.define(1, 0);
    f.t.define(2, 0);
    ScanOutcome out = scan_relator(f.t, f.buf, 0, 0, 1);
    CHECK(out == ScanOutcome{ScanKind::deduction, 3, 0, 1});
  }

  TEST_CASE("gap of length one when one coset is missing") {
    Fixture f("generators: a\nrelators: a^3\n");
    f.t.define(1, 0);
    ScanOutcome out = scan_relator(f.t, f.buf, 0, 0, 1);
    CHECK(out == ScanOutcome{ScanKind::gap1, 2, 0, kNoRow});
  }

  TEST_CASE("open and complete windows") {
    Fixture f("generators: a\nrelators: a^4\n");
    CHECK(scan_relator(f.t, f.buf, 0, 0, 1).kind == ScanKind::open);
    Fixture g("generators: x\nrelators: x^2, x^3\n");
    g.t.define(1, 0);
    CHECK(scan_relator(g.t, g.buf, 0, 0, 1).kind == ScanKind::complete);
    // x^3 at 1 reaches 2 instead of 1.
    ScanOutcome out = scan_relator(g.t, g.buf, 1, 0, 1);
    CHECK(out.kind == ScanKind::coincidence);
  }

  TEST_CASE("apply_coset defines along the word") {
    Fixture             f("generators: a\nrelators: a^4\n");
    std::vector<Column> w{0, 0, 0, 0};
    std::size_t         defined = 0;
    auto out = apply_coset(f.t, w, 1, true, [&](Row, Column, bool d) { defined += d; });
    CHECK(out.kind == ScanKind::deduction);
    CHECK(defined == 3);
    CHECK(f.t.high_water() == 4);
    CHECK(f.t.lookup(4, 0) == 1);
    CHECK(apply_coset(f.t, w, 1, true, [](Row, Column, bool) {}).kind == ScanKind::complete);
    CHECK(f.t.high_water() == 4);
  }

  TEST_CASE("apply_coset without definitions queues a mismatch") {
    Fixture f("generators: a\nrelators: a^3\n");
    // a*a traced at 1 ends at 3 instead of 1
    f.t.define(1, 0);
    f.t.define(2, 0);
    std::vector<Column> w{0, 0};
    auto out = apply_coset(f.t, w, 1, false, [](Row, Column, bool) {});
    CHECK(out.kind == ScanKind::coincidence);
    CHECK(f.t.pending_coincidences() == 1);
    CHECK(f.t.high_water() == 3);
    f.t.process_coincidences();
    CHECK(f.t.live_count() == 2);
  }

  TEST_CASE("property: scan_window agrees with the naive scanner") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
      std::size_t              gens = 1 + rng() % 3;
      std::vector<GeneratorId> inv;
      if (rng() % 2) {
        inv.push_back(1);
      }
      ColumnLayout layout = column_layout(gens, inv);
      CosetTable   t(layout, 40 * layout.columns());
      oracle::random_fill(t, rng, 1 + rng() % 25, rng() % 60);
      std::vector<Word> rels;
      for (int k = 0; k < 3; ++k) {
        Word w;
        for (std::size_t n = 1 + rng() % 8; n > 0; --n) {
          int g = 1 + static_cast<int>(rng() % gens);
          w.push_back(Letter::from_value(rng() % 2 ? g : -g));
        }
        rels.push_back(w);
      }
      ScanBuffer buf(rels, layout);
      for (std::size_t r = 0; r < rels.size(); ++r) {
        for (std::size_t off = 0; off < buf.length(r); ++off) {
          auto                window = buf.forward(r).subspan(off, buf.length(r));
          std::vector<Column> w(window.begin(), window.end());
          for (Row base : oracle::live_rows(t)) {
            ScanOutcome got  = scan_relator(t, buf, r, off, base);
            ScanOutcome want = oracle::naive_scan(t, w, base);
            CHECK(got == want);
          }
        }
      }
    }
  }

  TEST_CASE("property: a single missing letter is never a gap") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      Fixture f("generators: a, b\nrelators: a*b*a^-1*b^-1*a\n", 60);
      oracle::random_fill(f.t, rng, 2 + rng() % 30, rng() % 40);
      for (std::size_t off = 0; off < f.buf.length(0); ++off) {
        for (Row base : oracle::live_rows(f.t)) {
          auto   window = f.buf.forward(0).subspan(off, f.buf.length(0));
          auto   naive  = oracle::naive_scan(f.t, {window.begin(), window.end()}, base);
          auto   got    = scan_relator(f.t, f.buf, 0, off, base);
          if (naive.kind == ScanKind::deduction) {
            CHECK(got.kind == ScanKind::deduction);
          }
          if (got.kind == ScanKind::gap1) {
            CHECK(naive.kind == ScanKind::gap1);
          }
        }
      }
    }
  }
}

TEST_SUITE("pdl") {
  Site s1{1, 0}, s2{2, 0}, s3{3, 0};

  TEST_CASE("four structure and drop variants") {
    auto contents = [&](PdlStructure st, DropPolicy d) {
      Pdl p(st, d, 2);
      p.push(s1);
      p.push(s2);
      p.push(s3);
      CHECK(p.size() == 2);
      CHECK(p.dropped() == 1);
      CHECK(p.pushed() == 3);
      return std::vector<Site>(p.items().begin(), p.items().end());
    };
    CHECK(contents(PdlStructure::queue, DropPolicy::earliest) == std::vector<Site>{s2, s3});
    CHECK(contents(PdlStructure::stack, DropPolicy::latest) == std::vector<Site>{s1, s2});
    CHECK(contents(PdlStructure::stack, DropPolicy::earliest) == std::vector<Site>{s2, s3});
    CHECK(contents(PdlStructure::queue, DropPolicy::latest) == std::vector<Site>{s1, s2});
  }

  TEST_CASE("service end") {
    Fixture f("generators: a\nrelators: a^5\n");
    f.t.define(1, 0);
    f.t.define(2, 0);
    f.t.define(3, 0);
    Pdl q(PdlStructure::queue, DropPolicy::earliest);
    Pdl s(PdlStructure::stack, DropPolicy::earliest);
    for (Row r : {1, 2, 3}) {
      q.push({r, 1});
      s.push({r, 1});
    }
    // 1.a^-1 is undefined; 2.a^-1 and 3.a^-1 are defined.
    CHECK(q.pop_valid(f.t) == Site{1, 1});
    CHECK(q.size() == 2);
    CHECK(q.stale() == 0);
    CHECK(s.pop_valid(f.t) == Site{1, 1});
    CHECK(s.stale() == 2);
  }

  TEST_CASE("default capacity") {
    Pdl p(PdlStructure::queue, DropPolicy::earliest);
    for (Row r = 1; r <= 300; ++r) {
      p.push({r, 0});
    }
    CHECK(p.size() == 200);
    CHECK(p.dropped() == 100);
    CHECK(p.items().front().row == 101);
    CHECK_THROWS_AS(Pdl(PdlStructure::queue, DropPolicy::earliest, 0), std::invalid_argument);
  }

  TEST_CASE("stale sites are skipped") {
    Fixture f("generators: a, b\nrelators: a^3\n");
    Pdl     p(PdlStructure::queue, DropPolicy::earliest);
    p.push({1, 0});
    f.t.define(1, 0);  // fills the site
    CHECK_FALSE(p.pop_valid(f.t).has_value());
    CHECK(p.stale() == 1);

    // A site on a row that died, followed by a valid one.
    f.t.define(1, 2);  // 3
    p.push({3, 3});
    p.push({2, 2});
    f.t.enqueue_coincidence(2, 3);
    f.t.process_coincidences();
    auto got = p.pop_valid(f.t);
    // (3, b^-1) resolves to (2, b^-1), which the merge filled.
    REQUIRE(got.has_value());
    CHECK(*got == Site{2, 2});
  }

  TEST_CASE("property: capacity is never exceeded") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t cap = 1 + rng() % 20;
      Pdl p(rng() % 2 ? PdlStructure::queue : PdlStructure::stack,
            rng() % 2 ? DropPolicy::earliest : DropPolicy::latest, cap);
      Fixture f("generators: a\nrelators: a^2\n");
      std::size_t prev_pushed = 0, prev_dropped = 0, prev_stale = 0;
      for (int op = 0; op < 500; ++op) {
        if (rng() % 3) {
          p.push({1, static_cast<Column>(rng() % 2)});
        } else {
          p.pop_valid(f.t);
        }
        CHECK(p.size() <= cap);
        CHECK(p.pushed() >= prev_pushed);
        CHECK(p.dropped() >= prev_dropped);
        CHECK(p.stale() >= prev_stale);
        prev_pushed  = p.pushed();
        prev_dropped = p.dropped();
        prev_stale   = p.stale();
      }
    }
  }
}

TEST_SUITE("felsch") {
  TEST_CASE("fill gate") {
    CHECK(pdl_gate_open(1, 7, 1));
    CHECK_FALSE(pdl_gate_open(1, 1, 1));
    for (Row fi = 1; fi < 50; ++fi) {
      for (Row hw = fi; hw < 60; ++hw) {
        CHECK_FALSE(pdl_gate_open(fi, 1, hw));
      }
    }
    CHECK(default_fill_factor(8) == 12);
    CHECK(default_fill_factor(4) == 7);
    CHECK(default_fill_factor(6) == 10);
  }

  TEST_CASE("next definition") {
    Fixture f("generators: a, b\nrelators: a^3\n");
    Pdl     p(PdlStructure::queue, DropPolicy::earliest);
    CHECK(next_definition(f.t, &p, 7) == DefinitionSite{1, 0, false});
    f.t.define(1, 0);
    p.push({2, 0});
    CHECK(next_definition(f.t, &p, 1) == DefinitionSite{1, 1, false});
    CHECK(p.size() == 1);
    CHECK(next_definition(f.t, &p, 7) == DefinitionSite{2, 0, true});
    CHECK(next_definition(f.t, nullptr, 7) == DefinitionSite{1, 1, false});
  }

  TEST_CASE("deductions close a^3") {
    Fixture        f("generators: a\nrelators: a^3\n");
    DeductionStack ds;
    EnumStats      st;
    Pdl            p(PdlStructure::queue, DropPolicy::earliest);
    f.t.define(1, 0);
    ds.push({1, 0});
    CHECK_FALSE(process_deductions(f.t, ds, f.buf, &p, st));
    CHECK(p.size() >= 1);
    auto site = next_definition(f.t, &p, 7);
    REQUIRE(site.has_value());
    CHECK(site->from_pdl);
    f.t.define(site->row, site->column);
    ds.push({site->row, site->column});
    process_deductions(f.t, ds, f.buf, &p, st);
    CHECK(f.t.first_incomplete() == kNoRow);
    CHECK(f.t.live_count() == 3);
    CHECK(f.t.total_defined() == 3);
    CHECK(st.deductions_applied == 1);
  }

  TEST_CASE("total collapse discards the deduction stack") {
    Fixture        f("generators: a\nrelators: a\n");
    DeductionStack ds;
    EnumStats      st;
    f.t.define(1, 0);
    ds.push({2, 1});
    ds.push({2, 1});
    ds.push({1, 0});
    CHECK(process_deductions(f.t, ds, f.buf, nullptr, st));
    CHECK(ds.empty());
    CHECK(f.t.live_count() == 1);
  }

  TEST_CASE("subgroup equal to the group") {
    Presentation p = pres("generators: a\nrelators: a^3\nsubgroup: a\n");
    CHECK(enumerate(p, Strategy::preset('A')).stats.index == 1);
  }

  TEST_CASE("published indices") {
    CHECK(enumerate(corpus("idx105"), Strategy{}).stats.index == 105);
    CHECK(enumerate(corpus("f27"), Strategy{}).stats.index == 29);
    CHECK(enumerate(corpus("z_n2_5"), Strategy{}).stats.index == 24);
    Presentation a3 = pres("generators: a\nrelators: a^3\n");
    EnumStats    s  = enumerate(a3, Strategy{}).stats;
    CHECK(s.index == 3);
    CHECK(s.total_defined == 3);
  }

  TEST_CASE("out of space") {
    Strategy s;
    s.max_words = 50 * 6;
    EnumStats st = enumerate(corpus("idx105"), s).stats;
    CHECK(st.outcome == Outcome::out_of_space);
    CHECK(st.max_active <= 50);
  }

  TEST_CASE("property: fill factor 1 never uses the list") {
    for (auto const& name : corpus_small()) {
      for (PdlStructure st : {PdlStructure::queue, PdlStructure::stack}) {
        Strategy s;
        s.pdl_structure = st;
        s.fill_factor   = 1;
        EnumStats e     = enumerate(corpus(name), s).stats;
        CHECK_MESSAGE(e.pdl_definitions == 0, name);
      }
    }
  }

  TEST_CASE("property: index and quiescence are strategy invariant") {
    for (auto const& name : corpus_small()) {
      Presentation p     = corpus(name);
      std::size_t  index = 0;
      for (std::size_t rels : {std::size_t{0}, kAllRelators}) {
        for (PdlStructure st : {PdlStructure::queue, PdlStructure::stack, PdlStructure::off}) {
          for (DropPolicy d : {DropPolicy::earliest, DropPolicy::latest}) {
            for (std::size_t ff : {1, 2, 7, 20}) {
              Strategy s;
              s.rels_in_subgroup = rels;
              s.pdl_structure    = st;
              s.pdl_drop         = d;
              s.fill_factor      = ff;
              Enumeration e      = enumerate(p, s);
              REQUIRE(e.stats.ok());
              if (index == 0) {
                index = e.stats.index;
              }
              CHECK_MESSAGE(e.stats.index == index, name);
              CHECK(quiescent(e));
              CHECK(e.stats.total_defined >= e.stats.index);
              CHECK(e.stats.max_active <= e.stats.total_defined);
              CHECK(e.stats.pdl_definitions + e.stats.standard_definitions
                    == e.stats.total_defined - 1);
              if (st == PdlStructure::off) {
                break;
              }
            }
            if (st == PdlStructure::off) {
              break;
            }
          }
        }
      }
    }
  }
}
