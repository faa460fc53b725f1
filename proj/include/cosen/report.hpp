// Stats rendering: JSON (with a strategy echo) and aligned text.

#ifndef COSEN_REPORT_HPP_
#define COSEN_REPORT_HPP_

#include <string>

#include "json.hpp"

#include "cosen/strategy.hpp"

namespace cosen {

  nlohmann::json to_json(EnumStats const& s);
  nlohmann::json to_json(Strategy const& s);
  nlohmann::json to_json(EnumStats const& stats, Strategy const& strategy);

  EnumStats stats_from_json(nlohmann::json const& j);
  Strategy  strategy_from_json(nlohmann::json const& j);

  std::string render_stats_text(EnumStats const& stats, Strategy const& strategy);

}  // namespace cosen

#endif  // COSEN_REPORT_HPP_
