#include <doctest.h>

#include <map>
#include <random>
#include <unordered_set>
#include <set>

#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

using namespace dpw;

namespace {

PartialInjection hub(int n, std::vector<PartialInjection::Pair> p) {
  return {Ambient::with_hub(n), std::move(p)};
}

}  // namespace

TEST_CASE("partial isometry predicate") {
  auto w6 = wheel(6);
  CHECK(is_partial_isometry(w6, PartialInjection::empty_map(Ambient::with_hub(6))));
  DihedralGroup d(6);
  CHECK(is_partial_isometry(w6, embed(d.rotation(1))));
  CHECK(is_partial_isometry(w6, embed(d.reflection(0))));
  // d(0,3) = 1 but d(1,4) = 2
  CHECK_FALSE(is_partial_isometry(w6, hub(6, {{0, 1}, {3, 4}})));
  CHECK_THROWS_AS(is_partial_isometry(w6, PartialInjection::identity(Ambient::rim(6))),
                  std::invalid_argument);
}

TEST_CASE("enumerate_dp on the complete graph is the whole symmetric inverse monoid") {
  // |I_3| = sum C(3,k)^2 k! = 34, |I_4| = 209
  CHECK(count_partial_injections(3) == 34);
  CHECK(count_partial_injections(4) == 209);
  EnumerateOptions opts;
  opts.vertex_cap = 4;
  auto dp3 = enumerate_dp(complete(3), opts);
  CHECK(dp3.size() == 34);
  auto dp4 = enumerate_dp(complete(4), opts);
  CHECK(dp4.size() == 209);
  std::set<PartialInjection> all;
  for_each_partial_injection(Ambient::rim(4),
                             [&](const PartialInjection& p) { all.insert(p); });
  CHECK(all == std::set<PartialInjection>(dp4.begin(), dp4.end()));
}

TEST_CASE("enumeration sizes are frozen regression values") {
  // brute-force values, independently cross-checked
  const std::map<int, std::size_t> expected_total = {{4, 410}, {5, 957}, {6, 2534}};
  const std::map<int, std::size_t> expected_minus = {{4, 97}, {5, 286}, {6, 955}};
  for (auto [n, total] : expected_total) {
    EnumerateOptions opts;
    opts.vertex_cap = n + 1;
    CHECK(enumerate_dp(wheel(n), opts).size() == total);
    opts.filter = DpFilter::Minus;
    CHECK(enumerate_dp(wheel(n), opts).size() == expected_minus.at(n));
  }
}

TEST_CASE("enumeration order is deterministic and worker independent") {
  EnumerateOptions one;
  one.vertex_cap = 6;
  one.workers = 1;
  EnumerateOptions four = one;
  four.workers = 4;
  CHECK(enumerate_dp(wheel(5), one) == enumerate_dp(wheel(5), four));
}

TEST_CASE("enumerate_dp enforces the vertex cap") {
  EnumerateOptions opts;
  opts.vertex_cap = 5;
  CHECK_THROWS_WITH_AS(enumerate_dp(wheel(6), opts),
                       doctest::Contains("cap 5"), std::invalid_argument);
}

TEST_CASE("DP(G) is closed under composition, inversion and restriction") {
  for (int n = 4; n <= 6; ++n) {  // exhaustive
    EnumerateOptions opts;
    opts.vertex_cap = n + 1;
    auto elems = enumerate_dp(wheel(n), opts);
    std::unordered_set<PartialInjection> s(elems.begin(), elems.end());
    std::uint64_t bad = 0;
    for (const auto& a : elems) {
      bad += s.count(a.inverse()) == 0;
      for (const auto& b : elems) bad += s.count(a.compose(b)) == 0;
    }
    CHECK(bad == 0);
  }
  for (int n = 7; n <= 8; ++n) {  // sampled
    EnumerateOptions opts;
    opts.vertex_cap = n + 1;
    auto elems = enumerate_dp(wheel(n), opts);
    std::unordered_set<PartialInjection> s(elems.begin(), elems.end());
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 20000; ++i) {
      const auto& a = elems[pick(rng)];
      const auto& b = elems[pick(rng)];
      CHECK(s.count(a.compose(b)) == 1);
      CHECK(s.count(a.inverse()) == 1);
      auto dom = a.domain();
      std::vector<Vertex> half(dom.begin(), dom.begin() + static_cast<long>(dom.size() / 2));
      CHECK(s.count(a.restrict_to(half)) == 1);
    }
  }
}

TEST_CASE("enumeration order: domains lexicographic, images lexicographic") {
  EnumerateOptions opts;
  opts.vertex_cap = 5;
  auto elems = enumerate_dp(wheel(4), opts);
  REQUIRE(elems.size() >= 3);
  CHECK(elems[0] == PartialInjection::empty_map(Ambient::with_hub(4)));
  CHECK(elems[1] == PartialInjection(Ambient::with_hub(4), {{0, 0}}));
  CHECK(elems[2] == PartialInjection(Ambient::with_hub(4), {{0, 1}}));
  std::set<PartialInjection> distinct(elems.begin(), elems.end());
  CHECK(distinct.size() == elems.size());
}

TEST_CASE("dihedral group from closed forms") {
  CHECK(dihedral(6).elements().size() == 12);
  CHECK_THROWS_AS(dihedral(2), std::invalid_argument);
  DihedralGroup d5(5);
  // i h g^k = k - i + 1 for i <= k, n + k - i + 1 above
  CHECK(d5.reflection(3).apply(2) == 2);
  CHECK(d5.reflection(3).apply(4) == 5);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      CHECK(d5.rotation(a).compose(d5.rotation(b)) == d5.rotation((a + b) % 5));
    }
  }
}

TEST_CASE("DI membership and witnesses") {
  auto empty6 = PartialInjection::empty_map(Ambient::rim(6));
  auto w = di_witness(6, empty6);
  REQUIRE(w.has_value());
  CHECK(*w == PartialInjection::identity(Ambient::rim(6)));  // scan starts at g^0

  // c_1 fixes 1 and 2 but is not the identity's restriction
  PartialInjection c1(Ambient::rim(6), {{1, 1}, {2, 2}, {4, 5}, {5, 4}});
  CHECK_FALSE(is_in_DI(6, c1));

  PartialInjection shift(Ambient::rim(6), {{1, 3}, {2, 4}});
  auto w2 = di_witness(6, shift);
  REQUIRE(w2.has_value());
  CHECK(*w2 == DihedralGroup(6).rotation(2));
}

TEST_CASE("DI_n sits inside DPW_n^- and rank >= n-1 elements are dihedral restrictions") {
  for (int n = 4; n <= 8; ++n) {
    EnumerateOptions opts;
    opts.vertex_cap = n + 1;
    opts.filter = DpFilter::Minus;
    auto minus = enumerate_dp(wheel(n), opts);
    std::set<PartialInjection> minus_set;
    for (const auto& e : minus) minus_set.insert(project(e));
    for (const auto& d : enumerate_DI(n)) CHECK(minus_set.count(d) == 1);
    for (const auto& e : minus_set) {
      if (e.rank() >= n - 1) CHECK(is_in_DI(n, e));
    }
  }
  // frozen |DI_n|
  CHECK(enumerate_DI(4).size() == 97);
  CHECK(enumerate_DI(5).size() == 286);
  CHECK(enumerate_DI(6).size() == 703);
  CHECK(enumerate_DI(7).size() == 1730);
}

TEST_CASE("hub filters partition the enumeration") {
  EnumerateOptions opts;
  opts.vertex_cap = 6;
  auto all = enumerate_dp(wheel(5), opts);
  opts.filter = DpFilter::Minus;
  auto m = enumerate_dp(wheel(5), opts);
  opts.filter = DpFilter::Plus;
  auto p = enumerate_dp(wheel(5), opts);
  opts.filter = DpFilter::Outside;
  auto o = enumerate_dp(wheel(5), opts);
  CHECK(m.size() + p.size() + o.size() == all.size());
  CHECK(m.size() == 286);
  CHECK(p.size() == 286);
  CHECK(o.size() == 385);
  for (const auto& e : o) CHECK(e.rank() <= 4);
  CHECK_THROWS_AS(enumerate_dp(cycle(5), opts), std::invalid_argument);  // no hub to filter on
}
