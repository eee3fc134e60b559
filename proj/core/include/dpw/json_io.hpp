#ifndef DPW_JSON_IO_HPP
#define DPW_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "dpw/factor.hpp"
#include "dpw/partial_injection.hpp"

namespace dpw {

// Element wire format: {"ambient": n | "0..n" | "a..b", "map": [[d,i],...]}
// with domain-sorted pairs.  A bare integer n denotes the rim {1..n}.
nlohmann::json element_to_json(const PartialInjection& p);
PartialInjection element_from_json(const nlohmann::json& j);

nlohmann::json word_to_json(const Word& w);

nlohmann::json ambient_to_json(const Ambient& a);
Ambient ambient_from_json(const nlohmann::json& j);

}  // namespace dpw

#endif  // DPW_JSON_IO_HPP
