#pragma once

#include <json.hpp>

#include "littlewood/laurent.hpp"

namespace littlewood {

// JSON form: list of {coeff: decimal string, exps: {var: int}} in canonical
// term order.
inline nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (int v = 0; v < kNumVars; ++v)
      if (m.exp(v) != 0) exps[var_name(v)] = m.exp(v);
    arr.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return arr;
}

}  // namespace littlewood
