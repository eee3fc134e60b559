#include <doctest.h>

#include "dpw/generators.hpp"
#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

using namespace dpw;

TEST_CASE("generator displays") {
  CHECK(build_generator(6, {GenTag::C, 1}) ==
        PartialInjection(Ambient::rim(6), {{1, 1}, {2, 2}, {4, 5}, {5, 4}}));
  for (int n : {4, 5, 6, 7, 8}) {
    CHECK(build_generator(n, {GenTag::Z}) ==
          PartialInjection(Ambient::with_hub(n), {{0, 1}, {1, 0}, {2, 2}, {n, n}}));
  }
  CHECK(build_generator(6, {GenTag::E}) == build_generator(6, {GenTag::Ei, 6}));
  // e_i = g^{n-i} e g^i
  for (int n : {5, 7}) {
    DihedralGroup d(n);
    auto e = build_generator(n, {GenTag::E});
    for (int i = 1; i <= n; ++i) {
      CHECK(build_generator(n, {GenTag::Ei, i}) ==
            d.rotation(n - i).compose(e).compose(d.rotation(i)));
    }
  }
}

TEST_CASE("labels parse and print") {
  for (const char* s : {"g", "h", "e", "e_3", "c_1", "g0", "h0", "e0", "b_2", "iota", "z"}) {
    CHECK(GeneratorLabel::parse(s).str() == s);
  }
  CHECK_THROWS_AS(GeneratorLabel::parse("q"), std::invalid_argument);
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(build_generator(5, {GenTag::C, 1}), std::invalid_argument);  // none for n=5
  CHECK_THROWS_AS(build_generator(8, {GenTag::C, 3}), std::invalid_argument);  // max is 2
  CHECK(build_generator(8, {GenTag::C, 2}).rank() == 6);
  CHECK_THROWS_AS(build_generator(6, {GenTag::Ei, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_generator(6, {GenTag::B, 5}), std::invalid_argument);
}

TEST_CASE("generating set sizes") {
  CHECK(genset_minus(8).size() == 5);  // floor(n/2)+1
  auto m5 = genset_minus(5);           // {g, h, e}, no c_j
  REQUIRE(m5.size() == 3);
  CHECK(m5[0].label.str() == "g");
  CHECK(m5[1].label.str() == "h");
  CHECK(m5[2].label.str() == "e");
  CHECK(genset_full(6).size() == 6);   // floor(n/2)+3
  CHECK(genset_full(5).size() == 5);
  CHECK(genset_union(7).size() == 5);  // floor(n/2)+2
  CHECK(genset_plus(8).size() == 5);
  // n = 4 degenerates: {g0, h0, iota, z}
  auto f4 = genset_full(4);
  REQUIRE(f4.size() == 4);
  CHECK(f4[0].label.str() == "g0");
  CHECK(f4[1].label.str() == "h0");
  CHECK(f4[2].label.str() == "iota");
  CHECK(f4[3].label.str() == "z");
}

TEST_CASE("dihedral relations among the built generators") {
  for (int n = 4; n <= 8; ++n) {
    auto g = build_generator(n, {GenTag::G});
    auto h = build_generator(n, {GenTag::H});
    auto id = PartialInjection::identity(Ambient::rim(n));
    PartialInjection gn = id;
    for (int k = 0; k < n; ++k) gn = gn.compose(g);
    CHECK(gn == id);
    CHECK(h.compose(h) == id);
    PartialInjection gn1h = id;
    for (int k = 0; k < n - 1; ++k) gn1h = gn1h.compose(g);
    CHECK(h.compose(g) == gn1h.compose(h));
  }
}

TEST_CASE("iota bridges the hub-fixed family to the rim family") {
  for (int n : {4, 6, 8}) {
    auto iota = build_generator(n, {GenTag::Iota});
    CHECK(build_generator(n, {GenTag::G0}).compose(iota) == embed(build_generator(n, {GenTag::G})));
    CHECK(build_generator(n, {GenTag::H0}).compose(iota) == embed(build_generator(n, {GenTag::H})));
    CHECK(build_generator(n, {GenTag::E0}).compose(iota) == embed(build_generator(n, {GenTag::E})));
    for (int j = 1; j <= cj_max(n); ++j) {
      CHECK(build_generator(n, {GenTag::B, j}).compose(iota) ==
            embed(build_generator(n, {GenTag::C, j})));
    }
  }
}

TEST_CASE("z is its own inverse") {
  for (int n = 4; n <= 8; ++n) {
    auto z = build_generator(n, {GenTag::Z});
    CHECK(z.inverse() == z);
  }
}

TEST_CASE("the n = 4 relation e0 = g0^3 z^2 g0") {
  auto g0 = build_generator(4, {GenTag::G0});
  auto z = build_generator(4, {GenTag::Z});
  auto e0 = build_generator(4, {GenTag::E0});
  CHECK(g0.compose(g0).compose(g0).compose(z).compose(z).compose(g0) == e0);
}

TEST_CASE("every named generator is a partial isometry of its wheel") {
  for (int n = 4; n <= 8; ++n) {
    DistanceMatrix dist(wheel(n));
    for (const auto& g : genset_full(n)) CHECK(is_partial_isometry(dist, g.element));
    for (const auto& g : genset_union(n)) CHECK(is_partial_isometry(dist, g.element));
    for (const auto& g : genset_minus(n)) CHECK(char_member_minus(n, g.element));
  }
}
