#include "dpw/isometry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace dpw {

bool is_partial_isometry(const DistanceMatrix& d, const PartialInjection& alpha) {
  if (!(d.vertices() == alpha.ambient())) {
    throw std::invalid_argument("is_partial_isometry: ambient mismatch");
  }
  const auto& ps = alpha.pairs();
  for (std::size_t s = 0; s < ps.size(); ++s) {
    for (std::size_t t = s + 1; t < ps.size(); ++t) {
      if (d.at(ps[s].first, ps[t].first) != d.at(ps[s].second, ps[t].second)) return false;
    }
  }
  return true;
}

bool is_partial_isometry(const Graph& g, const PartialInjection& alpha) {
  return is_partial_isometry(DistanceMatrix(g), alpha);
}

namespace {

// domain subsets of [lo, hi] in lexicographic order of their sorted vertex lists
void lex_subsets(Vertex lo, Vertex hi, std::vector<std::vector<Vertex>>& out) {
  std::vector<Vertex> cur;
  std::function<void(Vertex)> rec = [&](Vertex next) {
    out.push_back(cur);
    for (Vertex v = next; v <= hi; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
}

// all metric-preserving injective assignments for one domain, image-lex order
void assignments_for_domain(const DistanceMatrix& d, Ambient amb, const std::vector<Vertex>& dom,
                            std::vector<PartialInjection>& out) {
  std::vector<PartialInjection::Pair> cur;
  std::vector<char> used(static_cast<std::size_t>(amb.size()), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == dom.size()) {
      out.emplace_back(amb, cur);
      return;
    }
    Vertex x = dom[k];
    for (Vertex v = amb.lo(); v <= amb.hi(); ++v) {
      if (used[static_cast<std::size_t>(v - amb.lo())]) continue;
      bool ok = true;
      for (auto [p, q] : cur) {
        if (d.at(p, x) != d.at(q, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.emplace_back(x, v);
      used[static_cast<std::size_t>(v - amb.lo())] = 1;
      rec(k + 1);
      cur.pop_back();
      used[static_cast<std::size_t>(v - amb.lo())] = 0;
    }
  };
  rec(0);
}

bool keep(DpFilter f, const PartialInjection& p) {
  if (f == DpFilter::All) return true;
  bool d0 = p.defined_at(0);
  bool i0 = p.hits(0);
  bool minus = !d0 && !i0;
  bool plus = d0 && p.apply(0) == 0;
  switch (f) {
    case DpFilter::Minus: return minus;
    case DpFilter::Plus: return plus;
    case DpFilter::Outside: return !minus && !plus;
    default: return true;
  }
}

}  // namespace

std::vector<PartialInjection> enumerate_dp(const Graph& g, const EnumerateOptions& opts) {
  if (g.vertex_count() > opts.vertex_cap) {
    throw std::invalid_argument("enumerate_dp: vertex count " + std::to_string(g.vertex_count()) +
                                " exceeds cap " + std::to_string(opts.vertex_cap));
  }
  const Ambient amb = g.vertices();
  if (opts.filter != DpFilter::All && !amb.has_hub()) {
    throw std::invalid_argument("enumerate_dp: hub filter requires a graph with vertex 0");
  }
  const DistanceMatrix dist(g);
  std::vector<std::vector<Vertex>> domains;
  lex_subsets(amb.lo(), amb.hi(), domains);

  int workers = std::max(1, opts.workers);
  workers = std::min<int>(workers, static_cast<int>(domains.size()));
  std::vector<std::vector<PartialInjection>> found(domains.size());
  auto run = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < domains.size();
         i += static_cast<std::size_t>(workers)) {
      assignments_for_domain(dist, amb, domains[i], found[i]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<PartialInjection> out;
  for (auto& chunk : found) {
    for (auto& p : chunk) {
      if (keep(opts.filter, p)) out.push_back(std::move(p));
    }
  }
  return out;
}

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
  const Ambient amb = Ambient::rim(n);
  for (int k = 0; k < n; ++k) {
    std::vector<PartialInjection::Pair> p;
    for (int i = 1; i <= n; ++i) p.emplace_back(i, rim_norm(n, i + k));
    elements_.emplace_back(amb, std::move(p));
  }
  for (int k = 0; k < n; ++k) {
    std::vector<PartialInjection::Pair> p;
    for (int i = 1; i <= n; ++i) p.emplace_back(i, rim_norm(n, k - i + 1));
    elements_.emplace_back(amb, std::move(p));
  }
  // defining relations: g^n = 1, h^2 = 1, hg = g^{n-1}h
  const auto& g = rotation(1);
  const auto& h = reflection(0);
  PartialInjection gn = g;
  for (int k = 1; k < n; ++k) gn = gn.compose(g);
  if (!(gn == PartialInjection::identity(amb)) || !(h.compose(h) == PartialInjection::identity(amb)) ||
      !(h.compose(g) == rotation(n - 1).compose(h))) {
    throw std::logic_error("dihedral: relations failed");
  }
}

const PartialInjection& DihedralGroup::rotation(int k) const {
  return elements_[static_cast<std::size_t>(((k % n_) + n_) % n_)];
}

const PartialInjection& DihedralGroup::reflection(int k) const {
  return elements_[static_cast<std::size_t>(n_ + ((k % n_) + n_) % n_)];
}

std::optional<PartialInjection> di_witness(int n, const PartialInjection& alpha) {
  if (!(alpha.ambient() == Ambient::rim(n))) {
    throw std::invalid_argument("di_witness: alpha must live on the rim {1..n}");
  }
  const DihedralGroup d2n(n);
  for (const auto& sigma : d2n.elements()) {
    bool ok = true;
    for (auto [x, y] : alpha.pairs()) {
      if (sigma.apply(x) != y) {
        ok = false;
        break;
      }
    }
    if (ok) return sigma;
  }
  return std::nullopt;
}

std::vector<PartialInjection> enumerate_DI(int n) {
  const DihedralGroup d2n(n);
  std::vector<std::vector<Vertex>> subsets;
  lex_subsets(1, n, subsets);
  std::vector<PartialInjection> out;
  for (const auto& sigma : d2n.elements()) {
    for (const auto& s : subsets) out.push_back(sigma.restrict_to(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_partial_injection(Ambient a, const std::function<void(const PartialInjection&)>& fn) {
  std::vector<std::vector<Vertex>> domains;
  lex_subsets(a.lo(), a.hi(), domains);
  std::vector<PartialInjection::Pair> cur;
  for (const auto& dom : domains) {
    std::vector<char> used(static_cast<std::size_t>(a.size()), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == dom.size()) {
        fn(PartialInjection(a, cur));
        return;
      }
      for (Vertex v = a.lo(); v <= a.hi(); ++v) {
        if (used[static_cast<std::size_t>(v - a.lo())]) continue;
        cur.emplace_back(dom[k], v);
        used[static_cast<std::size_t>(v - a.lo())] = 1;
        rec(k + 1);
        cur.pop_back();
        used[static_cast<std::size_t>(v - a.lo())] = 0;
      }
    };
    rec(0);
  }
}

std::uint64_t count_partial_injections(int points) {
  // sum over k of C(points,k)^2 k!
  std::uint64_t total = 0;
  for (int k = 0; k <= points; ++k) {
    std::uint64_t c = 1;
    for (int j = 0; j < k; ++j) c = c * static_cast<std::uint64_t>(points - j) / (j + 1);
    std::uint64_t f = 1;
    for (int j = 2; j <= k; ++j) f *= static_cast<std::uint64_t>(j);
    total += c * c * f;
  }
  return total;
}

}  // namespace dpw
