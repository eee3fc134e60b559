#include "dpw/json_io.hpp"

#include <stdexcept>

namespace dpw {

using nlohmann::json;

json ambient_to_json(const Ambient& a) {
  if (a.is_rim()) return a.hi();
  return std::to_string(a.lo()) + ".." + std::to_string(a.hi());
}

Ambient ambient_from_json(const json& j) {
  if (j.is_number_integer()) return Ambient::rim(j.get<int>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    auto dots = s.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("ambient: expected 'a..b'");
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    return Ambient::interval(lo, hi);
  }
  throw std::invalid_argument("ambient: expected integer or 'a..b' string");
}

json element_to_json(const PartialInjection& p) {
  json map = json::array();
  for (auto [d, i] : p.pairs()) map.push_back({d, i});
  return json{{"ambient", ambient_to_json(p.ambient())}, {"map", map}};
}

PartialInjection element_from_json(const json& j) {
  if (!j.contains("ambient") || !j.contains("map")) {
    throw std::invalid_argument("element: expected keys 'ambient' and 'map'");
  }
  Ambient a = ambient_from_json(j.at("ambient"));
  std::vector<PartialInjection::Pair> pairs;
  for (const auto& pr : j.at("map")) {
    if (!pr.is_array() || pr.size() != 2) {
      throw std::invalid_argument("element: map entries must be [d, i] pairs");
    }
    pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
  }
  return {a, std::move(pairs)};
}

json word_to_json(const Word& w) {
  json labels = json::array();
  for (const auto& lab : w.labels) labels.push_back(lab.str());
  return json{{"ambient", ambient_to_json(w.ambient)}, {"word", labels}};
}

}  // namespace dpw
