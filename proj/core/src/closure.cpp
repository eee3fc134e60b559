#include "dpw/closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

namespace dpw {

MonoidClosure::MonoidClosure(Ambient ambient, std::vector<LabeledGenerator> gens,
                             const ClosureOptions& opts)
    : ambient_(ambient), gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("generate: empty generator set");
  for (const auto& g : gens_) {
    if (!(g.element.ambient() == ambient_)) {
      throw std::invalid_argument("generate: generator ambient mismatch");
    }
  }
  PartialInjection id = PartialInjection::identity(ambient_);
  elements_.push_back(id);
  index_.emplace(std::move(id), 0);
  parent_.push_back(0);
  parent_gen_.push_back(-1);
  for (std::uint32_t cur = 0; cur < elements_.size(); ++cur) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      PartialInjection nxt = elements_[cur].compose(gens_[g].element);
      auto [it, fresh] = index_.emplace(nxt, static_cast<std::uint32_t>(elements_.size()));
      if (fresh) {
        if (elements_.size() >= opts.element_cap) {
          throw std::runtime_error("generate: element cap " + std::to_string(opts.element_cap) +
                                   " exceeded");
        }
        elements_.push_back(std::move(nxt));
        parent_.push_back(cur);
        parent_gen_.push_back(static_cast<int>(g));
      }
      cayley_.push_back(it->second);
    }
  }
  // cayley_ was filled row by row in discovery order, so it is already the
  // elements x generators table
  for (std::uint32_t e = 0; e < elements_.size(); ++e) {
    max_word_length_ = std::max(max_word_length_, word_of(e).size());
  }
}

std::optional<std::uint32_t> MonoidClosure::index_of(const PartialInjection& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> MonoidClosure::word_of(std::uint32_t e) const {
  std::vector<int> w;
  while (parent_gen_[e] >= 0) {
    w.push_back(parent_gen_[e]);
    e = parent_[e];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

MonoidClosure generate(Ambient ambient, std::vector<LabeledGenerator> gens,
                       const ClosureOptions& opts) {
  return MonoidClosure(ambient, std::move(gens), opts);
}

namespace {

std::uint32_t relabel_by_first_occurrence(std::vector<std::uint32_t>& cls) {
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  std::uint32_t next = 0;
  for (auto& c : cls) {
    auto [it, fresh] = remap.emplace(c, next);
    if (fresh) ++next;
    c = it->second;
  }
  return next;
}

struct UnionFind {
  std::vector<std::uint32_t> up;
  explicit UnionFind(std::size_t n) : up(n) {
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { up[find(a)] = find(b); }
};

// strongly connected components of the two-sided Cayley reachability graph,
// iterative Tarjan
std::vector<std::uint32_t> j_classes_by_ideals(const MonoidClosure& m) {
  const std::size_t N = m.size();
  const std::size_t G = m.generators().size();
  std::vector<std::vector<std::uint32_t>> adj(N);
  for (std::uint32_t e = 0; e < N; ++e) {
    auto& out = adj[e];
    out.reserve(2 * G);
    for (std::size_t g = 0; g < G; ++g) {
      out.push_back(m.right_step(e, g));
      auto left = m.generators()[g].element.compose(m.elements()[e]);
      auto li = m.index_of(left);
      if (!li) throw std::logic_error("green: closure not closed under left multiplication");
      out.push_back(*li);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  std::vector<std::uint32_t> comp(N, 0);
  std::vector<std::int64_t> num(N, -1), low(N, 0);
  std::vector<char> onstk(N, 0);
  std::vector<std::uint32_t> stk;
  std::int64_t counter = 0;
  std::uint32_t ncomp = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> work;
  for (std::uint32_t root = 0; root < N; ++root) {
    if (num[root] >= 0) continue;
    work.emplace_back(root, 0);
    while (!work.empty()) {
      auto [v, pi] = work.back();
      work.pop_back();
      if (pi == 0) {
        num[v] = low[v] = counter++;
        stk.push_back(v);
        onstk[v] = 1;
      }
      bool descended = false;
      for (std::size_t i = pi; i < adj[v].size(); ++i) {
        std::uint32_t w = adj[v][i];
        if (num[w] < 0) {
          work.emplace_back(v, i + 1);
          work.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (onstk[w]) low[v] = std::min(low[v], num[w]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        while (true) {
          std::uint32_t w = stk.back();
          stk.pop_back();
          onstk[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      if (!work.empty()) {
        std::uint32_t u = work.back().first;
        low[u] = std::min(low[u], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

GreenStructure green(const MonoidClosure& m, GreenMode mode) {
  const std::size_t N = m.size();
  GreenStructure out;
  out.l_of.resize(N);
  out.r_of.resize(N);
  out.h_of.resize(N);
  std::map<std::vector<Vertex>, std::uint32_t> by_im, by_dom;
  std::map<std::pair<std::vector<Vertex>, std::vector<Vertex>>, std::uint32_t> by_both;
  for (std::uint32_t e = 0; e < N; ++e) {
    auto dom = m.elements()[e].domain();
    auto im = m.elements()[e].image();
    out.l_of[e] = by_im.emplace(im, static_cast<std::uint32_t>(by_im.size())).first->second;
    out.r_of[e] = by_dom.emplace(dom, static_cast<std::uint32_t>(by_dom.size())).first->second;
    out.h_of[e] = by_both.emplace(std::make_pair(std::move(dom), std::move(im)),
                                  static_cast<std::uint32_t>(by_both.size()))
                      .first->second;
  }
  relabel_by_first_occurrence(out.l_of);
  relabel_by_first_occurrence(out.r_of);
  relabel_by_first_occurrence(out.h_of);
  out.l_count = static_cast<std::uint32_t>(by_im.size());
  out.r_count = static_cast<std::uint32_t>(by_dom.size());
  out.h_count = static_cast<std::uint32_t>(by_both.size());

  if (mode == GreenMode::ByDomIm) {
    // D = join of L and R: union each element with the first element sharing
    // its L-class and the first sharing its R-class
    UnionFind uf(N);
    std::unordered_map<std::uint32_t, std::uint32_t> l_first, r_first;
    for (std::uint32_t e = 0; e < N; ++e) {
      auto [li, lf] = l_first.emplace(out.l_of[e], e);
      if (!lf) uf.unite(e, li->second);
      auto [ri, rf] = r_first.emplace(out.r_of[e], e);
      if (!rf) uf.unite(e, ri->second);
    }
    out.d_of.resize(N);
    for (std::uint32_t e = 0; e < N; ++e) out.d_of[e] = uf.find(e);
  } else {
    out.d_of = j_classes_by_ideals(m);
  }
  out.d_count = relabel_by_first_occurrence(out.d_of);
  return out;
}

RankUpperResult rank_upper(Ambient ambient, const std::vector<LabeledGenerator>& gens,
                           const std::vector<PartialInjection>& target, const ClosureOptions& opts) {
  RankUpperResult res;
  res.gens_size = static_cast<int>(gens.size());
  MonoidClosure m = generate(ambient, gens, opts);
  std::set<PartialInjection> have(m.elements().begin(), m.elements().end());
  std::set<PartialInjection> want(target.begin(), target.end());
  if (have == want) {
    res.generated = true;
    return res;
  }
  // witness: canonically smallest missing element of maximal rank
  int best_rank = -1;
  for (const auto& t : want) {
    if (have.count(t)) continue;
    if (t.rank() > best_rank) {
      best_rank = t.rank();
      res.missing_witness = t;
    }
  }
  if (!res.missing_witness) {
    // closure is a strict superset of the target
    for (const auto& h : have) {
      if (!want.count(h)) {
        res.missing_witness = h;
        break;
      }
    }
  }
  return res;
}

namespace {

std::vector<PartialInjection> expected_wheel_part(int n, DpFilter f) {
  EnumerateOptions opts;
  opts.vertex_cap = n + 1;
  opts.filter = f;
  return enumerate_dp(wheel(n), opts);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("rank lower bound: verification failed: " + what);
}

// smallest generating size of the group of units, found by exhaustive search
// inside the (small) unit group
int unit_group_min_generators(const std::vector<PartialInjection>& units, Ambient amb) {
  const PartialInjection id = PartialInjection::identity(amb);
  if (units.size() == 1) return 0;
  auto generates = [&](const std::vector<const PartialInjection*>& gens) {
    std::set<PartialInjection> seen{id};
    std::vector<const PartialInjection*> frontier;
    std::vector<PartialInjection> store{id};
    for (std::size_t qi = 0; qi < store.size(); ++qi) {
      for (auto* g : gens) {
        PartialInjection nxt = store[qi].compose(*g);
        if (seen.insert(nxt).second) store.push_back(std::move(nxt));
      }
    }
    return store.size() == units.size();
  };
  for (std::size_t k = 1; k <= units.size(); ++k) {
    std::vector<std::size_t> pick(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
      if (pos == k) {
        std::vector<const PartialInjection*> gens;
        for (auto i : pick) gens.push_back(&units[i]);
        return generates(gens);
      }
      for (std::size_t i = from; i < units.size(); ++i) {
        pick[pos] = i;
        if (rec(pos + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return static_cast<int>(k);
  }
  return static_cast<int>(units.size());
}

}  // namespace

int rank_lower_minus(int n, const MonoidClosure& m) {
  if (!(m.ambient() == Ambient::rim(n))) {
    throw std::invalid_argument("rank_lower_minus: closure must live on the rim");
  }
  // the closure must be exactly DPW_n^-
  auto expected = expected_wheel_part(n, DpFilter::Minus);
  std::set<PartialInjection> want;
  for (auto& e : expected) want.insert(project(e));
  std::set<PartialInjection> have(m.elements().begin(), m.elements().end());
  if (have != want) throw std::invalid_argument("rank_lower_minus: closure is not DPW_n^-");

  // (a) the group of units J_n^- needs two generators: it is dihedral of
  // order 2n, not cyclic
  std::vector<PartialInjection> units;
  for (const auto& e : m.elements()) {
    if (e.rank() == n) units.push_back(e);
  }
  require(units.size() == 2 * static_cast<std::size_t>(n), "units are not 2n elements");
  require(unit_group_min_generators(units, m.ambient()) == 2, "unit group is cyclic");

  // (b) rank-(n-1) elements exist and lie outside the unit group, so some
  // generator has rank exactly n-1 (products of units stay units)
  bool has_n1 = std::any_of(m.elements().begin(), m.elements().end(),
                            [&](const PartialInjection& e) { return e.rank() == n - 1; });
  require(has_n1, "no rank n-1 element");

  // (c) the prefix argument: every element of rank >= n-1 is a dihedral
  // restriction, every element carries its domain-arc sizes onto its image,
  // no c_j is a dihedral restriction, and the forced image-arc size pairs
  // {j+1, n-j-3} are pairwise distinct; so each c_j forces its own
  // rank-(n-2) generator with exactly those image arcs.
  for (const auto& e : m.elements()) {
    if (e.rank() >= n - 1) require(is_in_DI(n, e), "rank >= n-1 element outside DI_n");
    JType dt = j_type(e);
    JType it = j_type(e.inverse());
    require(dt == it, "domain/image maximal-arc sizes differ");
  }
  std::set<std::pair<int, int>> forced;
  for (int j = 1; j <= cj_max(n); ++j) {
    PartialInjection cj = build_generator(n, {GenTag::C, j});
    require(!is_in_DI(n, cj), "c_j unexpectedly in DI_n");
    require(m.contains(cj), "c_j missing from closure");
    auto sizes = std::make_pair(std::min(j + 1, n - j - 3), std::max(j + 1, n - j - 3));
    require(forced.insert(sizes).second, "image-arc size pair collision");
    // the forced generators exist in the monoid at all
    bool exists = std::any_of(m.elements().begin(), m.elements().end(), [&](const PartialInjection& e) {
      if (e.rank() != n - 2) return false;
      JType t = j_type(e.inverse());
      return t == JType{sizes.first, sizes.second};
    });
    require(exists, "no rank n-2 element with the forced image arcs");
  }
  return 3 + std::max(0, cj_max(n));
}

int rank_lower_full(int n, const MonoidClosure& m) {
  if (n == 4) {
    throw std::invalid_argument("rank_lower_full: n = 4 is settled by rank_exact");
  }
  if (!(m.ambient() == Ambient::with_hub(n))) {
    throw std::invalid_argument("rank_lower_full: closure must live on {0..n}");
  }
  auto expected = expected_wheel_part(n, DpFilter::All);
  std::set<PartialInjection> want(expected.begin(), expected.end());
  std::set<PartialInjection> have(m.elements().begin(), m.elements().end());
  if (have != want) throw std::invalid_argument("rank_lower_full: closure is not DPW_n");

  // cited fact 1: every element outside DPW_n^- u DPW_n^+ has rank <= 4,
  // hence every element of rank >= 5 lies in the union
  bool outside_nonempty = false;
  for (const auto& e : m.elements()) {
    Classification c = classify(e);
    if (c == Classification::Outside) {
      outside_nonempty = true;
      require(e.rank() <= 4, "outside element of rank >= 5");
    }
  }
  require(outside_nonempty, "no outside element (z missing?)");

  // cited fact 2: the union is generated by elements of rank >= 5, so a
  // factorization of a rank >= 5 union element only ever uses union
  // generators of rank >= 5
  auto ugens = genset_union(n);
  for (const auto& g : ugens) require(g.element.rank() >= 5, "union generator of rank < 5");
  std::set<PartialInjection> union_part;
  for (const auto& e : m.elements()) {
    if (classify(e) != Classification::Outside) union_part.insert(e);
  }
  MonoidClosure uc = generate(m.ambient(), ugens, {});
  std::set<PartialInjection> got(uc.elements().begin(), uc.elements().end());
  require(got == union_part, "union generating set does not generate the union");

  // the union needs rank(DPW_n^-) + 1 generators (Psi carries the minus
  // bound to the plus part; the minus part is an ideal of the union and
  // needs one generator of its own), and one extra generator outside the
  // union is unavoidable, giving floor(n/2)+2+1
  std::vector<LabeledGenerator> mgens = genset_minus(n);
  MonoidClosure mc = generate(Ambient::rim(n), mgens, {});
  int minus_lower = rank_lower_minus(n, mc);
  return minus_lower + 1 + 1;
}

RankSearchResult rank_exact(const MonoidClosure& m, const RankSearchOptions& opts) {
  RankSearchResult res;
  const std::size_t N = m.size();
  const Ambient amb = m.ambient();
  const PartialInjection id = PartialInjection::identity(amb);

  std::vector<PartialInjection> units, nonunits;
  for (const auto& e : m.elements()) {
    if (e.rank() == amb.size()) {
      units.push_back(e);
    } else {
      nonunits.push_back(e);
    }
  }
  std::sort(units.begin(), units.end());
  // non-units by descending rank, then canonical order: plausible generators first
  std::sort(nonunits.begin(), nonunits.end(), [](const PartialInjection& a, const PartialInjection& b) {
    if (a.rank() != b.rank()) return a.rank() > b.rank();
    return a < b;
  });

  auto closure_is_all = [&](const std::vector<const PartialInjection*>& gens) {
    std::set<PartialInjection> seen{id};
    std::vector<PartialInjection> store{id};
    for (std::size_t qi = 0; qi < store.size(); ++qi) {
      for (auto* g : gens) {
        PartialInjection nxt = store[qi].compose(*g);
        if (seen.insert(nxt).second) store.push_back(std::move(nxt));
      }
    }
    return store.size() == N;
  };

  // unit subsets that generate the whole unit group, grouped by size
  auto unit_subsets_generating = [&](std::size_t k) {
    std::vector<std::vector<const PartialInjection*>> out;
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
      if (pos == k) {
        std::vector<const PartialInjection*> gens;
        for (auto i : pick) gens.push_back(&units[i]);
        // closure inside the unit group
        std::set<PartialInjection> seen{id};
        std::vector<PartialInjection> store{id};
        for (std::size_t qi = 0; qi < store.size(); ++qi) {
          for (auto* g : gens) {
            PartialInjection nxt = store[qi].compose(*g);
            if (seen.insert(nxt).second) store.push_back(std::move(nxt));
          }
        }
        if (store.size() == units.size()) out.push_back(std::move(gens));
        return;
      }
      for (std::size_t i = from; i < units.size(); ++i) {
        pick[pos] = i;
        rec(pos + 1, i + 1);
      }
    };
    if (k > 0 && k <= units.size()) rec(0, 0);
    if (k == 0 && units.size() == 1) out.push_back({});
    return out;
  };

  if (N == 1) {
    res.rank = 0;
    return res;
  }

  for (std::size_t k = 1; k <= N; ++k) {
    // hint first: minimality below k is already settled exhaustively
    if (opts.hint.size() == k) {
      std::vector<const PartialInjection*> gens;
      for (const auto& h : opts.hint) gens.push_back(&h);
      ++res.candidates_tested;
      if (closure_is_all(gens)) {
        res.rank = static_cast<int>(k);
        return res;
      }
    }
    for (std::size_t j = (nonunits.empty() ? k : 0); j <= k; ++j) {
      auto unit_parts = unit_subsets_generating(j);
      if (unit_parts.empty()) continue;
      std::size_t rest = k - j;
      if (rest > nonunits.size()) continue;
      for (auto& up : unit_parts) {
        std::vector<std::size_t> pick(rest);
        bool budget_stop = false;
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
          if (pos == rest) {
            if (res.candidates_tested >= opts.candidate_budget) {
              budget_stop = true;
              return true;
            }
            ++res.candidates_tested;
            auto gens = up;
            for (auto i : pick) gens.push_back(&nonunits[i]);
            return closure_is_all(gens);
          }
          for (std::size_t i = from; i < nonunits.size(); ++i) {
            pick[pos] = i;
            if (rec(pos + 1, i + 1)) return true;
          }
          return false;
        };
        const bool found = rec(0, 0);
        if (budget_stop) {
          res.rank = std::nullopt;  // inconclusive
          return res;
        }
        if (found) {
          res.rank = static_cast<int>(k);
          return res;
        }
      }
    }
  }
  res.rank = std::nullopt;
  return res;
}

}  // namespace dpw
