#include <doctest.h>

#include <map>
#include <set>

#include "dpw/closure.hpp"
#include "dpw/factor.hpp"
#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

using namespace dpw;

namespace {

std::vector<LabeledGenerator> labeled(std::initializer_list<GeneratorLabel> ls, int n) {
  std::vector<LabeledGenerator> out;
  for (const auto& l : ls) out.push_back({l, build_generator(n, l)});
  return out;
}

}  // namespace

TEST_CASE("cyclic and dihedral closures") {
  for (int n = 4; n <= 8; ++n) {
    auto cyc = generate(Ambient::rim(n), labeled({{GenTag::G}}, n), {});
    CHECK(cyc.size() == static_cast<std::size_t>(n));
    auto dih = generate(Ambient::rim(n), labeled({{GenTag::G}, {GenTag::H}}, n), {});
    CHECK(dih.size() == static_cast<std::size_t>(2 * n));
    std::set<PartialInjection> got(dih.elements().begin(), dih.elements().end());
    const DihedralGroup d(n);
    CHECK(got == std::set<PartialInjection>(d.elements().begin(), d.elements().end()));
  }
}

TEST_CASE("closure basics") {
  auto m = generate(Ambient::rim(6), labeled({{GenTag::G}, {GenTag::H}, {GenTag::E}}, 6), {});
  CHECK(m.elements()[0] == PartialInjection::identity(Ambient::rim(6)));
  CHECK(m.size() == 703);  // |DI_6|
  // every element's word evaluates back to it
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    Word w{m.ambient(), {}};
    for (int gi : m.word_of(i)) w.labels.push_back(m.generators()[static_cast<std::size_t>(gi)].label);
    CHECK(evaluate_word(6, w) == m.elements()[i]);
    CHECK(w.labels.size() <= m.max_word_length());
  }
  CHECK_THROWS_AS(generate(Ambient::rim(6), {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(generate(Ambient::rim(5), labeled({{GenTag::G}}, 6), {}),
                  std::invalid_argument);
  ClosureOptions tiny;
  tiny.element_cap = 10;
  CHECK_THROWS_AS(generate(Ambient::rim(6), labeled({{GenTag::G}, {GenTag::H}}, 6), tiny),
                  std::runtime_error);
}

TEST_CASE("generate is idempotent on its own element set") {
  auto m = generate(Ambient::rim(5), labeled({{GenTag::G}, {GenTag::H}, {GenTag::E}}, 5), {});
  std::vector<LabeledGenerator> as_gens;
  for (const auto& e : m.elements()) as_gens.push_back({{GenTag::G}, e});
  auto again = generate(m.ambient(), as_gens, {});
  CHECK(std::set<PartialInjection>(again.elements().begin(), again.elements().end()) ==
        std::set<PartialInjection>(m.elements().begin(), m.elements().end()));
}

TEST_CASE("shortest words are lexicographically smallest among shortest") {
  // tiny closure where ties exist: g h and h g^... in D_8
  auto m = generate(Ambient::rim(4), labeled({{GenTag::G}, {GenTag::H}}, 4), {});
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    auto w = m.word_of(i);
    // brute force all words up to the same length
    std::vector<std::vector<int>> frontier{{}};
    std::vector<int> best;
    bool found = false;
    for (std::size_t len = 0; len <= w.size() && !found; ++len) {
      std::vector<std::vector<int>> next;
      for (auto& word : frontier) {
        PartialInjection cur = PartialInjection::identity(m.ambient());
        for (int gi : word) cur = cur.compose(m.generators()[static_cast<std::size_t>(gi)].element);
        if (cur == m.elements()[i]) {
          best = word;
          found = true;
          break;
        }
        for (int gi = 0; gi < 2; ++gi) {
          auto nw = word;
          nw.push_back(gi);
          next.push_back(std::move(nw));
        }
      }
      frontier = std::move(next);
    }
    REQUIRE(found);
    CHECK(w == best);
  }
}

TEST_CASE("green: a group is a single D-class") {
  auto m = generate(Ambient::rim(5), labeled({{GenTag::G}, {GenTag::H}}, 5), {});
  for (auto mode : {GreenMode::ByDomIm, GreenMode::ByIdeals}) {
    auto g = green(m, mode);
    CHECK(g.d_count == 1);
    CHECK(g.h_count == 1);
    CHECK(g.l_count == 1);
  }
}

TEST_CASE("green: both J algorithms agree and rank-2 classes of DPW_6 split in two") {
  auto m = generate(Ambient::with_hub(6), genset_full(6), {});
  auto g1 = green(m, GreenMode::ByDomIm);
  auto g2 = green(m, GreenMode::ByIdeals);
  REQUIRE(g1.d_of.size() == g2.d_of.size());
  std::map<std::uint32_t, std::uint32_t> fwd, bwd;
  for (std::size_t i = 0; i < g1.d_of.size(); ++i) {
    auto f = fwd.emplace(g1.d_of[i], g2.d_of[i]);
    CHECK((f.second || f.first->second == g2.d_of[i]));
    auto b = bwd.emplace(g2.d_of[i], g1.d_of[i]);
    CHECK((b.second || b.first->second == g1.d_of[i]));
  }
  std::set<std::uint32_t> rank2_classes;
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    if (m.elements()[i].rank() == 2) rank2_classes.insert(g1.d_of[i]);
  }
  CHECK(rank2_classes.size() == 2);  // J'_2 and J_(1,1)^-
}

TEST_CASE("rank_upper") {
  // the full generating set generates DPW_6
  EnumerateOptions opts;
  opts.vertex_cap = 7;
  auto target = enumerate_dp(wheel(6), opts);
  auto res = rank_upper(Ambient::with_hub(6), genset_full(6), target, {});
  CHECK(res.generated);
  CHECK(res.gens_size == 6);

  // {g, h} only generates the units; the reported witness is the canonically
  // smallest missing element of maximal rank, which is e = id_{1..n-1}
  opts.filter = DpFilter::Minus;
  auto minus = enumerate_dp(wheel(6), opts);
  std::vector<PartialInjection> minus_rim;
  for (const auto& e : minus) minus_rim.push_back(project(e));
  auto res2 = rank_upper(Ambient::rim(6), labeled({{GenTag::G}, {GenTag::H}}, 6), minus_rim, {});
  CHECK_FALSE(res2.generated);
  REQUIRE(res2.missing_witness.has_value());
  CHECK(*res2.missing_witness == build_generator(6, {GenTag::E}));

  // {g, h, e} generates DPW_5^-
  EnumerateOptions opts5;
  opts5.vertex_cap = 6;
  opts5.filter = DpFilter::Minus;
  std::vector<PartialInjection> minus5;
  for (const auto& e : enumerate_dp(wheel(5), opts5)) minus5.push_back(project(e));
  auto res3 = rank_upper(Ambient::rim(5), genset_minus(5), minus5, {});
  CHECK(res3.generated);
  CHECK(res3.gens_size == 3);
}

TEST_CASE("mechanized lower bounds") {
  for (int n : {5, 6, 8}) {
    auto m = generate(Ambient::rim(n), genset_minus(n), {});
    CHECK(rank_lower_minus(n, m) == n / 2 + 1);
  }
  for (int n : {5, 6, 8}) {
    auto m = generate(Ambient::with_hub(n), genset_full(n), {});
    CHECK(rank_lower_full(n, m) == n / 2 + 3);
  }
  auto m4 = generate(Ambient::with_hub(4), genset_full(4), {});
  CHECK_THROWS_AS(rank_lower_full(4, m4), std::invalid_argument);
  // a closure that is not all of DPW_n^- is rejected
  auto units_only = generate(Ambient::rim(6), labeled({{GenTag::G}, {GenTag::H}}, 6), {});
  CHECK_THROWS_AS(rank_lower_minus(6, units_only), std::invalid_argument);
}

TEST_CASE("rank_exact") {
  // dihedral groups are 2-generated
  auto d10 = generate(Ambient::rim(5), labeled({{GenTag::G}, {GenTag::H}}, 5), {});
  auto res = rank_exact(d10);
  REQUIRE(res.rank.has_value());
  CHECK(*res.rank == 2);

  // rank(DPW_5^-) = 3
  auto m5 = generate(Ambient::rim(5), genset_minus(5), {});
  RankSearchOptions ro;
  for (const auto& g : genset_minus(5)) ro.hint.push_back(g.element);
  auto res5 = rank_exact(m5, ro);
  REQUIRE(res5.rank.has_value());
  CHECK(*res5.rank == 3);

  // budget exhaustion reports inconclusive, never a value
  RankSearchOptions broke;
  broke.candidate_budget = 1;
  auto res_b = rank_exact(m5, broke);
  CHECK_FALSE(res_b.rank.has_value());
  CHECK(res_b.candidates_tested <= 1);
}
