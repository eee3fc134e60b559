#include <doctest.h>

#include "dpw/factor.hpp"
#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

using namespace dpw;

namespace {

Word rim_word(int n, std::initializer_list<GeneratorLabel> ls) {
  return {Ambient::rim(n), std::vector<GeneratorLabel>(ls)};
}

}  // namespace

TEST_CASE("evaluate_word") {
  const int n = 6;
  DihedralGroup d(n);
  CHECK(evaluate_word(n, rim_word(n, {})) == PartialInjection::identity(Ambient::rim(n)));
  CHECK(evaluate_word(n, rim_word(n, {{GenTag::G}, {GenTag::G}})) == d.rotation(2));
  // mixed-family labels are rejected
  CHECK_THROWS_AS(evaluate_word(n, rim_word(n, {{GenTag::G0}})), std::invalid_argument);
  Word hub{Ambient::with_hub(n), {{GenTag::G}}};
  CHECK_THROWS_AS(evaluate_word(n, hub), std::invalid_argument);
}

TEST_CASE("factor_DI") {
  const int n = 6;
  DihedralGroup d(n);
  auto w = factor_DI(n, d.rotation(3));
  CHECK(w.labels == std::vector<GeneratorLabel>{{GenTag::G}, {GenTag::G}, {GenTag::G}});

  // e_2 e_n = g^{n-2} e g^2 e, the two-gap partial identity
  std::vector<Vertex> dom;
  for (int v = 1; v <= n; ++v) {
    if (v != 2 && v != n) dom.push_back(v);
  }
  auto e2en = PartialInjection::partial_identity(Ambient::rim(n), dom);
  auto w2 = factor_DI(n, e2en);
  CHECK(evaluate_word(n, w2) == e2en);
  std::vector<GeneratorLabel> expect;
  for (int q = 0; q < n - 2; ++q) expect.push_back({GenTag::G});
  expect.push_back({GenTag::E});
  expect.push_back({GenTag::G});
  expect.push_back({GenTag::G});
  expect.push_back({GenTag::E});
  CHECK(w2.labels == expect);

  // the empty map factors and evaluates to itself
  auto empty = PartialInjection::empty_map(Ambient::rim(n));
  CHECK(evaluate_word(n, factor_DI(n, empty)) == empty);

  CHECK_THROWS_AS(factor_DI(6, build_generator(6, {GenTag::C, 1})), std::invalid_argument);
}

TEST_CASE("factor_minus returns one-letter words on generators") {
  CHECK(factor_minus(6, build_generator(6, {GenTag::C, 1})).labels ==
        std::vector<GeneratorLabel>{{GenTag::C, 1}});
  CHECK(factor_minus(6, PartialInjection::identity(Ambient::rim(6))).labels.empty());
  CHECK_THROWS_AS(factor_minus(6, PartialInjection(Ambient::rim(6), {{1, 1}, {2, 2}, {3, 5}})),
                  std::invalid_argument);
}

TEST_CASE("rank n-2 words take the shifted normal form") {
  // a two-arc rank n-2 element with one reversal lands on the
  // g^{n-r+1} c_j g^{s-1} shape
  const int n = 6;
  DihedralGroup d(n);
  auto c1 = build_generator(n, {GenTag::C, 1});
  auto alpha = d.rotation(2).compose(c1).compose(d.rotation(3));
  REQUIRE(alpha.rank() == n - 2);
  auto w = factor_minus(n, alpha);
  CHECK(evaluate_word(n, w) == alpha);
  bool has_c = false;
  for (const auto& lab : w.labels) has_c |= lab.tag == GenTag::C;
  CHECK(has_c);
}

TEST_CASE("factor_minus is sound on all of DPW_n^-, n = 4..6") {
  for (int n = 4; n <= 6; ++n) {
    EnumerateOptions opts;
    opts.vertex_cap = n + 1;
    opts.filter = DpFilter::Minus;
    for (const auto& e : enumerate_dp(wheel(n), opts)) {
      auto a = project(e);
      CHECK(evaluate_word(n, factor_minus(n, a)) == a);
    }
  }
}

TEST_CASE("factor_full: examples") {
  const int n = 5;
  CHECK(factor_full(n, build_generator(n, {GenTag::Z})).labels ==
        std::vector<GeneratorLabel>{{GenTag::Z}});
  CHECK(factor_full(n, build_generator(n, {GenTag::Iota})).labels ==
        std::vector<GeneratorLabel>{{GenTag::Iota}});
  // e0 = g0^3 z^2 g0 for n = 4, label for label
  auto w = factor_full(4, build_generator(4, {GenTag::E0}));
  CHECK(w.labels == std::vector<GeneratorLabel>{{GenTag::G0}, {GenTag::G0}, {GenTag::G0},
                                                {GenTag::Z}, {GenTag::Z}, {GenTag::G0}});
  CHECK_THROWS_AS(factor_full(5, PartialInjection(Ambient::with_hub(5), {{0, 1}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("factor_full is sound on all of DPW_5") {
  EnumerateOptions opts;
  opts.vertex_cap = 6;
  for (const auto& e : enumerate_dp(wheel(5), opts)) {
    auto w = factor_full(5, e);
    CHECK(evaluate_word(5, w) == e);
    // words stay inside the generating set
    for (const auto& lab : w.labels) {
      CHECK((lab.tag == GenTag::G0 || lab.tag == GenTag::H0 || lab.tag == GenTag::E0 ||
             lab.tag == GenTag::Iota || lab.tag == GenTag::Z || lab.tag == GenTag::B));
    }
  }
}

TEST_CASE("n = 4 words avoid e0") {
  EnumerateOptions opts;
  opts.vertex_cap = 5;
  for (const auto& e : enumerate_dp(wheel(4), opts)) {
    auto w = factor_full(4, e);
    CHECK(evaluate_word(4, w) == e);
    for (const auto& lab : w.labels) {
      CHECK(lab.tag != GenTag::E0);
      CHECK(lab.tag != GenTag::B);
    }
  }
}

TEST_CASE("rank descent pieces multiply back and strictly raise rank") {
  const int n = 6;
  EnumerateOptions opts;
  opts.vertex_cap = n + 1;
  opts.filter = DpFilter::Minus;
  for (const auto& e : enumerate_dp(wheel(n), opts)) {
    auto a = project(e);
    if (a.rank() > n - 3 || maximal_arcs(n, a.domain()).size() <= 1) continue;
    auto pieces = rank_descent_pieces(n, a);
    auto prod = PartialInjection::identity(Ambient::rim(n));
    for (const auto& p : pieces) {
      CHECK(p.rank() > a.rank());
      CHECK(char_member_minus(n, p));
      prod = prod.compose(p);
    }
    CHECK(prod == a);
  }
}
