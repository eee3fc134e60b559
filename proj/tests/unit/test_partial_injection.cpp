#include <doctest.h>

#include <set>
#include <unordered_set>

#include "dpw/generators.hpp"
#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/partial_injection.hpp"

using namespace dpw;

namespace {

PartialInjection rim(int n, std::vector<PartialInjection::Pair> p) {
  return {Ambient::rim(n), std::move(p)};
}

}  // namespace

TEST_CASE("canonical form and equality") {
  auto a = rim(5, {{3, 1}, {1, 2}});
  auto b = rim(5, {{1, 2}, {3, 1}});
  CHECK(a == b);
  CHECK(a.pairs() == std::vector<PartialInjection::Pair>{{1, 2}, {3, 1}});
  CHECK(std::hash<PartialInjection>{}(a) == std::hash<PartialInjection>{}(b));
  CHECK(a != rim(5, {{1, 2}}));
  CHECK(rim(5, {}) == PartialInjection::empty_map(Ambient::rim(5)));
}

TEST_CASE("construction rejects invalid maps") {
  CHECK_THROWS_AS(rim(4, {{1, 1}, {1, 2}}), std::invalid_argument);  // duplicate domain
  CHECK_THROWS_AS(rim(4, {{1, 3}, {2, 3}}), std::invalid_argument);  // not injective
  CHECK_THROWS_AS(rim(4, {{5, 1}}), std::invalid_argument);          // outside ambient
  CHECK_THROWS_AS(rim(4, {{1, 0}}), std::invalid_argument);          // hub not in rim ambient
}

TEST_CASE("compose matches the dihedral closed form: g.g = g^2 on n=6") {
  DihedralGroup d(6);
  auto g2 = d.rotation(1).compose(d.rotation(1));
  CHECK(g2 == d.rotation(2));
  CHECK(g2.apply(1) == 3);
  CHECK(g2.apply(5) == 1);
  CHECK(g2.apply(6) == 2);
}

TEST_CASE("compose identities") {
  auto id6 = PartialInjection::identity(Ambient::rim(6));
  auto alpha = rim(6, {{1, 4}, {2, 5}});
  CHECK(id6.compose(alpha) == alpha);
  CHECK(alpha.compose(alpha.inverse()) ==
        PartialInjection::partial_identity(Ambient::rim(6), {1, 2}));
  CHECK_THROWS_AS(alpha.compose(PartialInjection::identity(Ambient::rim(5))),
                  std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(PartialInjection::empty_map(Ambient::rim(4)).inverse() ==
        PartialInjection::empty_map(Ambient::rim(4)));
  DihedralGroup d(5);
  CHECK(d.rotation(1).inverse() == d.rotation(4));  // g^-1 = g^{n-1}
  CHECK(d.rotation(1).inverse().apply(2) == 1);
  CHECK(d.rotation(1).inverse().apply(1) == 5);
  auto alpha = rim(5, {{2, 4}, {3, 1}});
  CHECK(alpha.inverse().inverse() == alpha);
}

TEST_CASE("restrict") {
  auto amb = Ambient::rim(6);
  DihedralGroup d(6);
  auto alpha = rim(6, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(alpha.restrict_to(amb.vertices()) == alpha);
  CHECK(alpha.restrict_to({}) == PartialInjection::empty_map(amb));
  CHECK_THROWS_AS(alpha.restrict_to({7}), std::invalid_argument);
  // restrict(g, rim \ {n}) = e . g
  auto e = PartialInjection::partial_identity(amb, {1, 2, 3, 4, 5});
  CHECK(d.rotation(1).restrict_to({1, 2, 3, 4, 5}) == e.compose(d.rotation(1)));
}

TEST_CASE("partial identities") {
  auto amb = Ambient::rim(6);
  auto e = PartialInjection::partial_identity(amb, {1, 2, 3, 4, 5});
  CHECK(e.rank() == 5);
  CHECK(e.is_identity_on_domain());
  CHECK(e == build_generator(6, {GenTag::E}));
  for (int i = 1; i <= 6; ++i) {
    std::vector<Vertex> dom;
    for (int v = 1; v <= 6; ++v) {
      if (v != i) dom.push_back(v);
    }
    auto ei = PartialInjection::partial_identity(amb, dom);
    CHECK(ei.rank() == 5);
    CHECK_FALSE(ei.defined_at(i));
    CHECK(ei == build_generator(6, {GenTag::Ei, i}));
  }
  CHECK(PartialInjection::partial_identity(amb, {}).empty());
}

TEST_CASE("composition is associative on all triples of DPW_4") {
  EnumerateOptions opts;
  opts.vertex_cap = 5;
  auto elems = enumerate_dp(wheel(4), opts);
  const std::size_t N = elems.size();
  REQUIRE(N == 410);
  // index the multiplication table once, then check (ab)c = a(bc) by lookup
  std::unordered_map<PartialInjection, std::uint16_t> idx;
  for (std::size_t i = 0; i < N; ++i) idx.emplace(elems[i], static_cast<std::uint16_t>(i));
  std::vector<std::uint16_t> mul(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      mul[i * N + j] = idx.at(elems[i].compose(elems[j]));
    }
  }
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      const std::size_t ab = mul[a * N + b];
      for (std::size_t c = 0; c < N; ++c) {
        CHECK_EQ(mul[ab * N + c], mul[a * N + mul[b * N + c]]);
      }
    }
  }
}

TEST_CASE("rank of a product never exceeds either factor (all pairs, DPW_4)") {
  EnumerateOptions opts;
  opts.vertex_cap = 5;
  auto elems = enumerate_dp(wheel(4), opts);
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      CHECK(a.compose(b).rank() <= std::min(a.rank(), b.rank()));
    }
  }
}

TEST_CASE("inverse-monoid law a a^-1 a = a over DPW_n, n = 4..6") {
  for (int n = 4; n <= 6; ++n) {
    EnumerateOptions opts;
    opts.vertex_cap = n + 1;
    for (const auto& a : enumerate_dp(wheel(n), opts)) {
      CHECK(a.compose(a.inverse()).compose(a) == a);
    }
  }
}
