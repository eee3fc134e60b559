#include <doctest.h>

#include "dpw/generators.hpp"
#include "dpw/json_io.hpp"

using namespace dpw;
using nlohmann::json;

TEST_CASE("element wire format") {
  PartialInjection a(Ambient::rim(6), {{1, 3}, {2, 4}});
  json j = element_to_json(a);
  CHECK(j["ambient"] == 6);
  CHECK(j["map"] == json::array({{1, 3}, {2, 4}}));
  CHECK(element_from_json(j) == a);

  auto z = build_generator(6, {GenTag::Z});
  json jz = element_to_json(z);
  CHECK(jz["ambient"] == "0..6");
  CHECK(element_from_json(jz) == z);

  CHECK(element_from_json(json::parse(R"({"ambient":"0..5","map":[[0,0],[3,4]]})")) ==
        PartialInjection(Ambient::with_hub(5), {{0, 0}, {3, 4}}));
}

TEST_CASE("round trip across a generating set") {
  for (int n : {4, 6, 9}) {
    for (const auto& g : genset_full(n)) {
      CHECK(element_from_json(element_to_json(g.element)) == g.element);
    }
    for (const auto& g : genset_minus(n)) {
      CHECK(element_from_json(element_to_json(g.element)) == g.element);
    }
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"map":[[1,1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"ambient":5,"map":[[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"ambient":5,"map":[[1,1],[1,2]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"ambient":"x","map":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"ambient":5,"map":[[1,7]]})")),
                  std::invalid_argument);
}

TEST_CASE("word wire format") {
  Word w{Ambient::with_hub(4),
         {{GenTag::G0}, {GenTag::G0}, {GenTag::G0}, {GenTag::Z}, {GenTag::Z}, {GenTag::G0}}};
  json j = word_to_json(w);
  CHECK(j["ambient"] == "0..4");
  CHECK(j["word"] == json::array({"g0", "g0", "g0", "z", "z", "g0"}));
}
