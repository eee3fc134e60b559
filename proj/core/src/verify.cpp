#include "dpw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dpw/closure.hpp"
#include "dpw/factor.hpp"
#include "dpw/generators.hpp"
#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/json_io.hpp"
#include "dpw/wheel_structure.hpp"

namespace dpw {

namespace {

constexpr std::uint64_t kSampleSeed = 0xd15a57e15eedULL;

using Clock = std::chrono::steady_clock;

struct CheckTimer {
  Clock::time_point t0 = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
};

void add(SuiteReport& r, std::string name, int n, bool pass, std::string details,
         const CheckTimer& timer, std::optional<PartialInjection> witness = std::nullopt) {
  r.checks.push_back({std::move(name), n, pass ? CheckStatus::Pass : CheckStatus::Fail,
                      std::move(details), std::move(witness), timer.ms()});
}

int lo_clamp(int n_min, int bound) { return std::max(n_min, bound); }
int hi_clamp(int n_max, int bound) { return std::min(n_max, bound); }

std::vector<PartialInjection> enumerate_wheel(int n, int workers) {
  EnumerateOptions opts;
  opts.vertex_cap = n + 1;
  opts.workers = std::max(1, workers);
  return enumerate_dp(wheel(n), opts);
}

// predicted J-class key on the full monoid: the rank-by-rank inventory,
// with the rank <= 4 classes merging across the minus/plus/outside split
std::string full_class_key(const PartialInjection& e) {
  const int k = e.rank();
  if (k == 0) return "J0";
  if (k == 1) return "J1";
  switch (classify(e)) {
    case Classification::Minus: {
      const std::string t = j_type_string(j_type(e));
      if (k >= 4) return "M" + t;
      if (k == 3) return t == "(3)" ? "J'3" : "M" + t;
      return t == "(1,1)" ? "M(1,1)" : "J'2";
    }
    case Classification::Plus: {
      const std::string t = j_type_string(j_type(psi(e)));
      if (k >= 5) return "P" + t;
      if (k == 4) return t == "(3)" ? "J'4" : "P" + t;
      if (k == 3) return t == "(2)" ? "J''3" : "J'3";
      return "J'2";
    }
    case Classification::Outside: {
      if (k == 4) return "J'4";
      if (k == 3) {
        return (e.defined_at(0) && e.hits(0)) ? "J''3" : "J'3";
      }
      return "J'2";
    }
  }
  return "?";
}

// predicted J-class key on DPW_n^- u DPW_n^+
std::string union_class_key(const PartialInjection& e) {
  if (classify(e) == Classification::Minus) return "M" + j_type_string(j_type(e));
  return "P" + j_type_string(j_type(psi(e)));
}

bool partitions_equal(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::uint32_t, std::uint32_t> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto f = fwd.emplace(a[i], b[i]);
    if (!f.second && f.first->second != b[i]) return false;
    auto g = bwd.emplace(b[i], a[i]);
    if (!g.second && g.first->second != a[i]) return false;
  }
  return true;
}

bool partition_matches_keys(const std::vector<std::uint32_t>& cls,
                            const std::vector<std::string>& keys) {
  std::vector<std::uint32_t> key_ids(keys.size());
  std::map<std::string, std::uint32_t> id;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    key_ids[i] = id.emplace(keys[i], static_cast<std::uint32_t>(id.size())).first->second;
  }
  return partitions_equal(cls, key_ids);
}

// first element whose block assignment disagrees between two partitions;
// only evaluated on failure
std::optional<std::size_t> partition_mismatch_index(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return i;
    }
  }
  return std::nullopt;
}

std::optional<PartialInjection> key_mismatch_witness(const MonoidClosure& m,
                                                     const std::vector<std::uint32_t>& cls,
                                                     const std::vector<std::string>& keys) {
  std::vector<std::uint32_t> key_ids(keys.size());
  std::map<std::string, std::uint32_t> id;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    key_ids[i] = id.emplace(keys[i], static_cast<std::uint32_t>(id.size())).first->second;
  }
  if (auto i = partition_mismatch_index(cls, key_ids)) return m.elements()[*i];
  return std::nullopt;
}

std::string count_details(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : kv) {
    if (!first) os << " ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
}

bool SuiteReport::any_inconclusive() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Inconclusive; });
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

SuiteReport verify_distances(int n_min, int n_max, const VerifyOptions&) {
  SuiteReport r{"distances", n_min, n_max, {}};
  for (int n = n_min; n <= hi_clamp(n_max, 9); ++n) {
    CheckTimer timer;
    const Graph w = wheel(n);
    std::uint64_t pairs = 0, mismatches = 0;
    for (Vertex u = 0; u <= n; ++u) {
      for (Vertex v = 0; v <= n; ++v) {
        ++pairs;
        if (wheel_distance(n, u, v) != distance_bfs(w, u, v)) ++mismatches;
      }
    }
    // metric axioms, via the BFS oracle
    const DistanceMatrix d(w);
    std::uint64_t axiom_bad = 0;
    for (Vertex u = 0; u <= n; ++u) {
      for (Vertex v = 0; v <= n; ++v) {
        if (d.at(u, v) != d.at(v, u)) ++axiom_bad;
        if ((d.at(u, v) == 0) != (u == v)) ++axiom_bad;
        for (Vertex x = 0; x <= n; ++x) {
          if (d.at(u, v) > d.at(u, x) + d.at(x, v)) ++axiom_bad;
        }
      }
    }
    add(r, "wheel-closed-form-vs-bfs", n, mismatches == 0 && axiom_bad == 0,
        count_details({{"pairs", pairs}, {"mismatches", mismatches}, {"axiom_violations", axiom_bad}}),
        timer);
  }
  return r;
}

SuiteReport verify_characterization(int n_min, int n_max, const VerifyOptions& opts) {
  SuiteReport r{"characterization", n_min, n_max, {}};
  // exhaustive over all partial injections on the rim
  for (int n = n_min; n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    const DistanceMatrix dist(wheel(n));
    std::uint64_t total = 0, mismatches = 0;
    std::optional<PartialInjection> witness;
    for_each_partial_injection(Ambient::rim(n), [&](const PartialInjection& a) {
      ++total;
      const bool lhs = char_member_minus(n, a);
      const bool rhs = is_partial_isometry(dist, embed(a));
      if (lhs != rhs && !witness) witness = a;
      if (lhs != rhs) ++mismatches;
    });
    add(r, "characterization-exhaustive", n, mismatches == 0,
        count_details({{"maps", total}, {"mismatches", mismatches}}), timer, witness);
  }
  // n = 8: uniform sample over I_8
  if (n_min <= 8 && 8 <= n_max) {
    CheckTimer timer;
    const int n = 8;
    const DistanceMatrix dist(wheel(n));
    std::mt19937_64 rng(kSampleSeed);
    // k-weights C(8,k)^2 k!
    std::vector<double> weights;
    for (int k = 0; k <= n; ++k) {
      double c = 1;
      for (int j = 0; j < k; ++j) c = c * (n - j) / (j + 1);
      double f = 1;
      for (int j = 2; j <= k; ++j) f *= j;
      weights.push_back(c * c * f);
    }
    std::discrete_distribution<int> pick_k(weights.begin(), weights.end());
    std::vector<Vertex> verts;
    for (Vertex v = 1; v <= n; ++v) verts.push_back(v);
    std::uint64_t mismatches = 0;
    std::optional<PartialInjection> witness;
    for (std::uint64_t i = 0; i < opts.char_samples; ++i) {
      const int k = pick_k(rng);
      std::vector<Vertex> dom = verts, im = verts;
      std::shuffle(dom.begin(), dom.end(), rng);
      std::shuffle(im.begin(), im.end(), rng);
      std::vector<PartialInjection::Pair> pairs;
      for (int j = 0; j < k; ++j) pairs.emplace_back(dom[static_cast<std::size_t>(j)],
                                                     im[static_cast<std::size_t>(j)]);
      PartialInjection a(Ambient::rim(n), std::move(pairs));
      if (char_member_minus(n, a) != is_partial_isometry(dist, embed(a))) {
        ++mismatches;
        if (!witness) witness = a;
      }
    }
    add(r, "characterization-sampled", n, mismatches == 0,
        count_details({{"samples", opts.char_samples}, {"mismatches", mismatches}}), timer, witness);
  }
  // small-n collapse: DPW_4^- = DI_4 and DPW_5^- = DI_5
  for (int n = lo_clamp(n_min, 4); n <= hi_clamp(n_max, 5); ++n) {
    CheckTimer timer;
    auto minus = enumerate_wheel(n, opts.workers);
    std::set<PartialInjection> minus_set;
    for (const auto& e : minus) {
      if (classify(e) == Classification::Minus) minus_set.insert(project(e));
    }
    auto di = enumerate_DI(n);
    std::set<PartialInjection> di_set(di.begin(), di.end());
    add(r, "collapse-DI", n, minus_set == di_set,
        count_details({{"minus", minus_set.size()}, {"di", di_set.size()}}), timer);
  }
  // Psi is an isomorphism DPW_n^+ -> DPW_n^-
  for (int n = lo_clamp(n_min, 4); n <= hi_clamp(n_max, 6); ++n) {
    CheckTimer timer;
    auto all = enumerate_wheel(n, opts.workers);
    std::vector<PartialInjection> plus;
    std::set<PartialInjection> minus_set;
    for (const auto& e : all) {
      Classification c = classify(e);
      if (c == Classification::Plus) plus.push_back(e);
      if (c == Classification::Minus) minus_set.insert(project(e));
    }
    std::set<PartialInjection> image;
    for (const auto& p : plus) image.insert(psi(p));
    bool bijection = image.size() == plus.size() && image == minus_set;
    std::uint64_t hom_bad = 0;
    for (const auto& x : plus) {
      for (const auto& y : plus) {
        if (!(psi(x.compose(y)) == psi(x).compose(psi(y)))) ++hom_bad;
      }
    }
    bool inverse_ok = true;
    for (const auto& p : plus) {
      if (!(psi_inv(psi(p)) == p)) inverse_ok = false;
    }
    add(r, "psi-isomorphism", n, bijection && hom_bad == 0 && inverse_ok,
        count_details({{"plus", plus.size()},
                       {"minus", minus_set.size()},
                       {"hom_violations", hom_bad}}),
        timer);
  }
  return r;
}

SuiteReport verify_split(int n_min, int n_max, const VerifyOptions& opts) {
  SuiteReport r{"split", n_min, n_max, {}};
  for (int n = n_min; n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    auto all = enumerate_wheel(n, opts.workers);
    std::uint64_t violations = 0, outside_high = 0, high_unfixed = 0;
    std::optional<PartialInjection> witness;
    for (const auto& e : all) {
      if (!split_lemma_check(e).empty()) {
        ++violations;
        if (!witness) witness = e;
      }
      if (classify(e) == Classification::Outside && e.rank() > 4) ++outside_high;
      if (e.rank() >= 5 && (e.defined_at(0) || e.hits(0)) && e.apply(0) != 0) ++high_unfixed;
    }
    add(r, "split-lemma-sweep", n, violations == 0 && outside_high == 0 && high_unfixed == 0,
        count_details({{"elements", all.size()},
                       {"violations", violations},
                       {"outside_rank_gt4", outside_high},
                       {"rank_ge5_hub_unfixed", high_unfixed}}),
        timer, witness);
  }
  return r;
}

SuiteReport verify_generation(int n_min, int n_max, const VerifyOptions& opts) {
  SuiteReport r{"generation", n_min, n_max, {}};
  for (int n = n_min; n <= hi_clamp(n_max, 8); ++n) {
    auto all = enumerate_wheel(n, opts.workers);
    std::set<PartialInjection> minus_rim, plus_set, union_set, full_set;
    for (const auto& e : all) {
      full_set.insert(e);
      switch (classify(e)) {
        case Classification::Minus:
          minus_rim.insert(project(e));
          union_set.insert(e);
          break;
        case Classification::Plus:
          plus_set.insert(e);
          union_set.insert(e);
          break;
        default: break;
      }
    }
    // units: rank-n minus elements are exactly the dihedral group, and the
    // group of units of DPW_n is its hub-fixed copy (2n elements each)
    {
      CheckTimer timer;
      const DihedralGroup d2n(n);
      std::set<PartialInjection> rank_n_minus, units;
      for (const auto& e : all) {
        if (e.rank() == n && classify(e) == Classification::Minus) rank_n_minus.insert(project(e));
        if (e.rank() == n + 1) units.insert(e);
      }
      std::set<PartialInjection> dihedral_set(d2n.elements().begin(), d2n.elements().end());
      std::set<PartialInjection> dihedral_hub;
      for (const auto& s : d2n.elements()) dihedral_hub.insert(psi_inv(s));
      add(r, "units-dihedral", n,
          rank_n_minus == dihedral_set && units == dihedral_hub && units.size() == 2 * static_cast<std::size_t>(n),
          count_details({{"rank_n_minus", rank_n_minus.size()}, {"units", units.size()}}), timer);
    }
    auto check_set = [&](const char* name, const std::vector<LabeledGenerator>& gens, Ambient amb,
                         const std::set<PartialInjection>& expected) {
      CheckTimer timer;
      MonoidClosure m = generate(amb, gens, {});
      std::set<PartialInjection> got(m.elements().begin(), m.elements().end());
      bool ok = got == expected;
      std::optional<PartialInjection> witness;
      if (!ok) {
        for (const auto& e : expected) {
          if (!got.count(e)) {
            witness = e;
            break;
          }
        }
        if (!witness) {
          for (const auto& e : got) {
            if (!expected.count(e)) {
              witness = e;
              break;
            }
          }
        }
      }
      add(r, name, n, ok,
          count_details({{"generated", got.size()}, {"expected", expected.size()}}), timer, witness);
    };
    check_set("generate-minus", genset_minus(n), Ambient::rim(n), minus_rim);
    check_set("generate-plus", genset_plus(n), Ambient::with_hub(n), plus_set);
    check_set("generate-union", genset_union(n), Ambient::with_hub(n), union_set);
    check_set("generate-full", genset_full(n), Ambient::with_hub(n), full_set);
  }
  return r;
}

SuiteReport verify_green(int n_min, int n_max, const VerifyOptions&) {
  SuiteReport r{"green", n_min, n_max, {}};
  // D-classes of DPW_n^- are exactly the J-type fibers
  for (int n = n_min; n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    MonoidClosure m = generate(Ambient::rim(n), genset_minus(n), {});
    GreenStructure g1 = green(m, GreenMode::ByDomIm);
    GreenStructure g2 = green(m, GreenMode::ByIdeals);
    std::vector<std::string> keys;
    keys.reserve(m.size());
    for (const auto& e : m.elements()) keys.push_back(j_type_string(j_type(e)));
    bool agree = partitions_equal(g1.d_of, g2.d_of);
    bool fibers = partition_matches_keys(g1.d_of, keys);
    std::optional<PartialInjection> witness;
    if (!fibers) witness = key_mismatch_witness(m, g1.d_of, keys);
    add(r, "green-minus-jtype", n, agree && fibers,
        count_details({{"elements", m.size()}, {"d_classes", g1.d_count}}), timer, witness);
  }
  // Psi transports the J-type description to DPW_n^+
  for (int n = n_min; n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    MonoidClosure p = generate(Ambient::with_hub(n), genset_plus(n), {});
    GreenStructure pg1 = green(p, GreenMode::ByDomIm);
    GreenStructure pg2 = green(p, GreenMode::ByIdeals);
    std::vector<std::string> pkeys;
    pkeys.reserve(p.size());
    for (const auto& e : p.elements()) pkeys.push_back(j_type_string(j_type(psi(e))));
    bool plus_ok = partitions_equal(pg1.d_of, pg2.d_of) && partition_matches_keys(pg1.d_of, pkeys);
    add(r, "green-plus-jtype", n, plus_ok,
        count_details({{"elements", p.size()}, {"d_classes", pg1.d_count}}), timer,
        plus_ok ? std::nullopt : key_mismatch_witness(p, pg1.d_of, pkeys));
  }
  // the union splits by classification then J-type; the full monoid follows
  // the rank-by-rank inventory
  for (int n = lo_clamp(n_min, 5); n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    MonoidClosure u = generate(Ambient::with_hub(n), genset_union(n), {});
    GreenStructure ug1 = green(u, GreenMode::ByDomIm);
    GreenStructure ug2 = green(u, GreenMode::ByIdeals);
    std::vector<std::string> ukeys;
    ukeys.reserve(u.size());
    for (const auto& e : u.elements()) ukeys.push_back(union_class_key(e));
    bool union_ok = partitions_equal(ug1.d_of, ug2.d_of) && partition_matches_keys(ug1.d_of, ukeys);
    add(r, "green-union-split", n, union_ok,
        count_details({{"elements", u.size()}, {"d_classes", ug1.d_count}}), timer,
        union_ok ? std::nullopt : key_mismatch_witness(u, ug1.d_of, ukeys));

    CheckTimer timer2;
    MonoidClosure f = generate(Ambient::with_hub(n), genset_full(n), {});
    GreenStructure fg1 = green(f, GreenMode::ByDomIm);
    GreenStructure fg2 = green(f, GreenMode::ByIdeals);
    std::vector<std::string> fkeys;
    std::set<std::string> present;
    fkeys.reserve(f.size());
    for (const auto& e : f.elements()) {
      fkeys.push_back(full_class_key(e));
      present.insert(fkeys.back());
    }
    bool inventory = partitions_equal(fg1.d_of, fg2.d_of) && partition_matches_keys(fg1.d_of, fkeys);
    // small-n existence remarks for the named rank <= 4 classes
    const std::vector<std::pair<std::string, int>> named = {
        {"M(1,2)", 5},    {"P(1,2)", 5},   {"M(1,1,1)", 6},    {"P(1,1,1)", 6},
        {"M(1,3)", 6},    {"M(2,2)", 6},   {"M(1,1,2)", 7},    {"M(1,1,1,1)", 8}};
    bool existence = true;
    for (const auto& [key, threshold] : named) {
      if (present.count(key) != static_cast<std::size_t>(n >= threshold ? 1 : 0)) existence = false;
    }
    add(r, "green-full-inventory", n, inventory && existence,
        count_details({{"elements", f.size()}, {"d_classes", fg1.d_count}}), timer2,
        inventory ? std::nullopt : key_mismatch_witness(f, fg1.d_of, fkeys));
  }
  return r;
}

SuiteReport verify_factorization(int n_min, int n_max, const VerifyOptions& opts) {
  SuiteReport r{"factorization", n_min, n_max, {}};
  // the rim-only factorization, exhaustively over DPW_n^-
  for (int n = n_min; n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    EnumerateOptions eo;
    eo.vertex_cap = n + 1;
    eo.filter = DpFilter::Minus;
    eo.workers = std::max(1, opts.workers);
    std::uint64_t total = 0, bad = 0;
    std::optional<PartialInjection> witness;
    for (const auto& e : enumerate_dp(wheel(n), eo)) {
      PartialInjection a = project(e);
      ++total;
      Word w = factor_minus(n, a);
      if (!(evaluate_word(n, w) == a)) {
        ++bad;
        if (!witness) witness = a;
      }
    }
    add(r, "factor-minus-exhaustive", n, bad == 0,
        count_details({{"elements", total}, {"bad", bad}}), timer, witness);
  }
  for (int n = n_min; n <= hi_clamp(n_max, 6); ++n) {
    CheckTimer timer;
    auto all = enumerate_wheel(n, opts.workers);
    std::uint64_t bad = 0;
    std::size_t max_len = 0;
    std::optional<PartialInjection> witness;
    for (const auto& e : all) {
      Word w = factor_full(n, e);
      max_len = std::max(max_len, w.labels.size());
      if (!(evaluate_word(n, w) == e)) {
        ++bad;
        if (!witness) witness = e;
      }
    }
    add(r, "factor-full-exhaustive", n, bad == 0,
        count_details({{"elements", all.size()}, {"bad", bad}, {"max_word_len", max_len}}), timer,
        witness);
  }
  if (n_min <= 7 && 7 <= n_max) {
    CheckTimer timer;
    const int n = 7;
    auto all = enumerate_wheel(n, opts.workers);
    std::mt19937_64 rng(kSampleSeed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uint64_t bad = 0;
    std::optional<PartialInjection> witness;
    for (std::uint64_t i = 0; i < opts.factor_samples; ++i) {
      const auto& e = all[pick(rng)];
      Word w = factor_full(n, e);
      if (!(evaluate_word(n, w) == e)) {
        ++bad;
        if (!witness) witness = e;
      }
    }
    add(r, "factor-full-sampled", n, bad == 0,
        count_details({{"samples", opts.factor_samples}, {"bad", bad}}), timer, witness);
  }
  if (n_min <= 4 && 4 <= n_max) {
    // the n = 4 relation e0 = g0^3 z^2 g0, reproduced label for label
    CheckTimer timer;
    PartialInjection e0 = build_generator(4, {GenTag::E0});
    Word w = factor_full(4, e0);
    const std::vector<GeneratorLabel> expect = {{GenTag::G0}, {GenTag::G0}, {GenTag::G0},
                                                {GenTag::Z},  {GenTag::Z},  {GenTag::G0}};
    bool ok = w.labels == expect && evaluate_word(4, w) == e0;
    add(r, "factor-e0-identity", 4, ok, "e0 = g0^3 z^2 g0", timer);
  }
  // rank monotonicity of the descent: every piece strictly increases rank
  for (int n = n_min; n <= hi_clamp(n_max, 6); ++n) {
    CheckTimer timer;
    auto all = enumerate_wheel(n, opts.workers);
    std::uint64_t checked = 0, bad = 0;
    for (const auto& e : all) {
      if (classify(e) != Classification::Minus) continue;
      PartialInjection a = project(e);
      if (a.rank() > n - 3 || maximal_arcs(n, a.domain()).size() <= 1) continue;
      ++checked;
      auto pieces = rank_descent_pieces(n, a);
      PartialInjection prod = PartialInjection::identity(Ambient::rim(n));
      bool ranks_ok = true;
      for (const auto& p : pieces) {
        prod = prod.compose(p);
        if (p.rank() <= a.rank()) ranks_ok = false;
        if (!char_member_minus(n, p)) ranks_ok = false;
      }
      if (!ranks_ok || !(prod == a)) ++bad;
    }
    add(r, "factor-rank-descent", n, bad == 0,
        count_details({{"checked", checked}, {"bad", bad}}), timer);
  }
  return r;
}

SuiteReport verify_rank(int n_min, int n_max, const VerifyOptions& opts) {
  SuiteReport r{"rank", n_min, n_max, {}};
  if (n_min <= 4 && 4 <= n_max) {
    CheckTimer timer;
    MonoidClosure m = generate(Ambient::with_hub(4), genset_full(4), {});
    RankSearchOptions ro;
    ro.candidate_budget = opts.rank_budget;
    for (const auto& g : genset_full(4)) ro.hint.push_back(g.element);
    RankSearchResult res = rank_exact(m, ro);
    CheckResult c{"rank-exact-full", 4,
                  res.rank.has_value() ? (res.rank == 4 ? CheckStatus::Pass : CheckStatus::Fail)
                                       : CheckStatus::Inconclusive,
                  count_details({{"candidates", res.candidates_tested},
                                 {"rank", res.rank ? static_cast<std::uint64_t>(*res.rank) : 0}}),
                  std::nullopt, timer.ms()};
    r.checks.push_back(std::move(c));
  }
  if (n_min <= 5 && 5 <= n_max) {
    CheckTimer timer;
    MonoidClosure m = generate(Ambient::rim(5), genset_minus(5), {});
    RankSearchOptions ro;
    ro.candidate_budget = opts.rank_budget;
    for (const auto& g : genset_minus(5)) ro.hint.push_back(g.element);
    RankSearchResult res = rank_exact(m, ro);
    CheckResult c{"rank-exact-minus", 5,
                  res.rank.has_value() ? (res.rank == 3 ? CheckStatus::Pass : CheckStatus::Fail)
                                       : CheckStatus::Inconclusive,
                  count_details({{"candidates", res.candidates_tested},
                                 {"rank", res.rank ? static_cast<std::uint64_t>(*res.rank) : 0}}),
                  std::nullopt, timer.ms()};
    r.checks.push_back(std::move(c));
  }
  for (int n = lo_clamp(n_min, 5); n <= hi_clamp(n_max, 8); ++n) {
    CheckTimer timer;
    auto gens = genset_minus(n);
    MonoidClosure m = generate(Ambient::rim(n), gens, {});
    int lower = rank_lower_minus(n, m);
    bool ok = lower == n / 2 + 1 && static_cast<int>(gens.size()) == lower;
    add(r, "rank-minus", n, ok,
        count_details({{"lower", static_cast<std::uint64_t>(lower)},
                       {"genset", gens.size()},
                       {"elements", m.size()}}),
        timer);
  }
  for (int n = lo_clamp(n_min, 5); n <= hi_clamp(n_max, 7); ++n) {
    CheckTimer timer;
    auto gens = genset_full(n);
    MonoidClosure m = generate(Ambient::with_hub(n), gens, {});
    int lower = rank_lower_full(n, m);
    bool ok = lower == n / 2 + 3 && static_cast<int>(gens.size()) == lower;
    add(r, "rank-full", n, ok,
        count_details({{"lower", static_cast<std::uint64_t>(lower)},
                       {"genset", gens.size()},
                       {"elements", m.size()}}),
        timer);
  }
  return r;
}

SuiteReport verify_all(int n_min, int n_max, const VerifyOptions& opts) {
  SuiteReport r{"all", n_min, n_max, {}};
  for (auto* fn : {verify_distances, verify_characterization, verify_split, verify_generation,
                   verify_green, verify_factorization, verify_rank}) {
    SuiteReport part = fn(n_min, n_max, opts);
    for (auto& c : part.checks) r.checks.push_back(std::move(c));
  }
  return r;
}

nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json timings = nlohmann::json::object();
  for (const auto& c : r.checks) {
    nlohmann::json jc{{"name", c.name}, {"n", c.n}, {"status", status_name(c.status)},
                      {"details", c.details}};
    if (c.witness) jc["witness"] = element_to_json(*c.witness);
    checks.push_back(std::move(jc));
    timings[c.name + "@" + std::to_string(c.n)] = c.elapsed_ms;
  }
  nlohmann::json payload{{"suite", r.suite},
                         {"n_min", r.n_min},
                         {"n_max", r.n_max},
                         {"checks", checks},
                         {"all_pass", r.all_pass()}};
  return nlohmann::json{{"payload", payload}, {"envelope", {{"timings_ms", timings}}}};
}

}  // namespace dpw
