#include "acs/json_io.hpp"

namespace acs {

using nlohmann::json;

nlohmann::json family_to_json(const Family& f) {
  json sets = json::array();
  for (Mask m : f.members) sets.push_back(elements_of(m));
  return json{{"n", f.n}, {"sets", std::move(sets)}};
}

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw ContractError("family JSON must be {\"n\":..., \"sets\":[...]}");
  const int n = j.at("n").get<int>();
  std::vector<std::vector<int>> sets;
  for (const auto& s : j.at("sets")) sets.push_back(s.get<std::vector<int>>());
  return family_of(n, sets);
}

nlohmann::json transcript_to_json(const Transcript& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back(json{{"query", elements_of(e.query)}, {"answer", e.answer}});
  return json{{"n", t.n}, {"entries", std::move(entries)}};
}

Transcript transcript_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ContractError("transcript JSON must be {\"n\":..., \"entries\":[...]}");
  Transcript t;
  t.n = j.at("n").get<int>();
  check_ground_set(t.n);
  for (const auto& e : j.at("entries")) {
    Mask q = 0;
    for (int el : e.at("query").get<std::vector<int>>()) {
      if (el < 1 || el > t.n) throw ContractError("transcript element outside [n]");
      q |= Mask{1} << (el - 1);
    }
    t.entries.push_back({q, e.at("answer").get<bool>()});
  }
  return t;
}

}  // namespace acs
