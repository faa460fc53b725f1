#include "cosen/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cosen {

  using nlohmann::json;

  namespace {
    template <typename E>
    E enum_from(std::string const& s, std::initializer_list<E> values) {
      for (E v : values) {
        if (s == to_string(v)) {
          return v;
        }
      }
      throw std::invalid_argument("unknown value '" + s + "'");
    }
  }  // namespace

  json to_json(EnumStats const& s) {
    return json{{"outcome", to_string(s.outcome)},
                {"index", s.index},
                {"max_active", s.max_active},
                {"total_defined", s.total_defined},
                {"pdl_definitions", s.pdl_definitions},
                {"standard_definitions", s.standard_definitions},
                {"pdl_pushed", s.pdl_pushed},
                {"pdl_dropped", s.pdl_dropped},
                {"pdl_stale", s.pdl_stale},
                {"lookahead_passes", s.lookahead_passes},
                {"compactions", s.compactions},
                {"coincidences_merged", s.coincidences_merged},
                {"deductions_applied", s.deductions_applied},
                {"total_collapse", s.total_collapse},
                {"elapsed_seconds", s.elapsed_seconds}};
  }

  json to_json(Strategy const& s) {
    json j{{"method", to_string(s.method)},
           {"lookahead", s.lookahead},
           {"pdl", to_string(s.pdl_structure)},
           {"pdl_drop", to_string(s.pdl_drop)},
           {"pdl_size", s.pdl_capacity},
           {"reuse", to_string(s.reuse)},
           {"sort", s.sort_by_length ? "length" : "given"},
           {"max_words", s.max_words},
           {"collapse_shortcut", s.collapse_shortcut}};
    if (s.rels_in_subgroup == kAllRelators) {
      j["rels_in_subgroup"] = "all";
    } else {
      j["rels_in_subgroup"] = s.rels_in_subgroup;
    }
    if (s.fill_factor == kAutoFillFactor) {
      j["fill_factor"] = "auto";
    } else {
      j["fill_factor"] = s.fill_factor;
    }
    return j;
  }

  json to_json(EnumStats const& stats, Strategy const& strategy) {
    json j        = to_json(stats);
    j["strategy"] = to_json(strategy);
    return j;
  }

  EnumStats stats_from_json(json const& j) {
    EnumStats s;
    s.outcome = enum_from(j.at("outcome").get<std::string>(),
                          {Outcome::index, Outcome::out_of_space});
    j.at("index").get_to(s.index);
    j.at("max_active").get_to(s.max_active);
    j.at("total_defined").get_to(s.total_defined);
    j.at("pdl_definitions").get_to(s.pdl_definitions);
    j.at("standard_definitions").get_to(s.standard_definitions);
    j.at("pdl_pushed").get_to(s.pdl_pushed);
    j.at("pdl_dropped").get_to(s.pdl_dropped);
    j.at("pdl_stale").get_to(s.pdl_stale);
    j.at("lookahead_passes").get_to(s.lookahead_passes);
    j.at("compactions").get_to(s.compactions);
    j.at("coincidences_merged").get_to(s.coincidences_merged);
    j.at("deductions_applied").get_to(s.deductions_applied);
    j.at("total_collapse").get_to(s.total_collapse);
    j.at("elapsed_seconds").get_to(s.elapsed_seconds);
    return s;
  }

  Strategy strategy_from_json(json const& j) {
    Strategy s;
    s.method = enum_from(j.at("method").get<std::string>(), {Method::felsch, Method::hlt});
    j.at("lookahead").get_to(s.lookahead);
    s.pdl_structure = enum_from(j.at("pdl").get<std::string>(),
                                {PdlStructure::off, PdlStructure::queue, PdlStructure::stack});
    s.pdl_drop = enum_from(j.at("pdl_drop").get<std::string>(),
                           {DropPolicy::earliest, DropPolicy::latest});
    j.at("pdl_size").get_to(s.pdl_capacity);
    s.reuse = enum_from(j.at("reuse").get<std::string>(),
                        {ReusePolicy::compact, ReusePolicy::freelist});
    s.sort_by_length = j.at("sort").get<std::string>() == "length";
    j.at("max_words").get_to(s.max_words);
    j.at("collapse_shortcut").get_to(s.collapse_shortcut);
    auto const& r      = j.at("rels_in_subgroup");
    s.rels_in_subgroup = r.is_string() ? kAllRelators : r.get<std::size_t>();
    auto const& f      = j.at("fill_factor");
    s.fill_factor      = f.is_string() ? kAutoFillFactor : f.get<std::size_t>();
    return s;
  }

  std::string render_stats_text(EnumStats const& stats, Strategy const& strategy) {
    std::ostringstream os;
    auto               row = [&os](char const* name, auto value) {
      os << "  ";
      os.width(22);
      os << std::left << name << value << '\n';
    };
    os << "strategy: " << to_string(strategy.method);
    if (strategy.method == Method::hlt) {
      os << " lookahead=" << (strategy.lookahead ? "on" : "off");
    } else {
      os << " pdl=" << to_string(strategy.pdl_structure) << '/'
         << to_string(strategy.pdl_drop) << '/' << strategy.pdl_capacity << " fill="
         << (strategy.fill_factor == kAutoFillFactor ? std::string("auto")
                                                     : std::to_string(strategy.fill_factor));
    }
    os << " rels-in-subgroup="
       << (strategy.rels_in_subgroup == kAllRelators ? std::string("all")
                                                     : std::to_string(strategy.rels_in_subgroup))
       << " reuse=" << to_string(strategy.reuse) << '\n';
    if (stats.ok()) {
      row("index", stats.index);
    } else {
      row("outcome", "out of space");
    }
    row("max active", stats.max_active);
    row("total defined", stats.total_defined);
    row("pdl definitions", stats.pdl_definitions);
    row("standard definitions", stats.standard_definitions);
    row("pdl pushed", stats.pdl_pushed);
    row("pdl dropped", stats.pdl_dropped);
    row("pdl stale", stats.pdl_stale);
    row("lookahead passes", stats.lookahead_passes);
    row("compactions", stats.compactions);
    row("coincidences merged", stats.coincidences_merged);
    row("deductions applied", stats.deductions_applied);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", stats.elapsed_seconds);
    row("elapsed", buf);
    return os.str();
  }

}  // namespace cosen
