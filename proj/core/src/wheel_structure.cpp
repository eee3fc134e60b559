#include "dpw/wheel_structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "dpw/graph.hpp"

namespace dpw {

Arc::Arc(int n, Vertex start, Vertex end) : n_(n), start_(start), end_(end) {
  if (n < 1 || start < 1 || start > n || end < 1 || end > n) {
    throw std::invalid_argument("Arc: endpoints must lie in {1..n}");
  }
}

int Arc::size() const {
  int d = end_ - start_;
  if (d < 0) d += n_;
  return d + 1;
}

bool Arc::contains(Vertex v) const {
  if (v < 1 || v > n_) return false;
  if (start_ <= end_) return start_ <= v && v <= end_;
  return v >= start_ || v <= end_;
}

std::vector<Vertex> Arc::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  Vertex x = start_;
  out.push_back(x);
  while (x != end_) {
    x = rim_norm(n_, x + 1);
    out.push_back(x);
  }
  return out;
}

Vertex Arc::min_member() const {
  if (start_ <= end_) return start_;
  return 1;  // wrap arc always contains 1
}

std::vector<Arc> maximal_arcs(int n, const std::vector<Vertex>& X) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  std::size_t count = 0;
  for (Vertex v : X) {
    if (v < 1 || v > n) throw std::invalid_argument("maximal_arcs: X must lie in {1..n}");
    if (!in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  }
  if (count == 0) return {};
  if (count == static_cast<std::size_t>(n)) return {Arc::full(n)};
  std::vector<Arc> arcs;
  for (Vertex s = 1; s <= n; ++s) {
    if (!in[static_cast<std::size_t>(s)]) continue;
    if (in[static_cast<std::size_t>(rim_norm(n, s - 1))]) continue;  // not a run start
    Vertex e = s;
    while (in[static_cast<std::size_t>(rim_norm(n, e + 1))]) e = rim_norm(n, e + 1);
    arcs.emplace_back(n, s, e);
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.min_member() < b.min_member(); });
  return arcs;
}

namespace {

// alpha restricted to the arc is a dihedral restriction iff its images step
// by +1 or -1 along the arc; returns the step, or 0 on failure.
int arc_step(int n, const PartialInjection& a, const std::vector<Vertex>& mem) {
  Vertex base = *a.apply(mem[0]);
  if (mem.size() == 1) return 1;
  int step;
  Vertex second = *a.apply(mem[1]);
  if (second == rim_norm(n, base + 1)) {
    step = 1;
  } else if (second == rim_norm(n, base - 1)) {
    step = -1;
  } else {
    return 0;
  }
  for (std::size_t t = 2; t < mem.size(); ++t) {
    if (*a.apply(mem[t]) != rim_norm(n, base + step * static_cast<int>(t))) return 0;
  }
  return step;
}

}  // namespace

bool char_member_minus(int n, const PartialInjection& a) {
  if (!(a.ambient() == Ambient::rim(n))) {
    throw std::invalid_argument("char_member_minus: alpha must live on the rim {1..n}");
  }
  if (a.empty()) return true;
  const auto dom_arcs = maximal_arcs(n, a.domain());
  const auto im_arcs = maximal_arcs(n, a.image());
  std::set<std::vector<Vertex>> im_arc_sets;
  for (const auto& b : im_arcs) {
    auto m = b.members();
    std::sort(m.begin(), m.end());
    im_arc_sets.insert(std::move(m));
  }
  for (const auto& arc : dom_arcs) {
    const auto mem = arc.members();
    if (arc_step(n, a, mem) == 0) return false;  // condition 2'
    std::vector<Vertex> img;
    img.reserve(mem.size());
    for (Vertex x : mem) img.push_back(*a.apply(x));
    std::sort(img.begin(), img.end());
    if (im_arc_sets.find(img) == im_arc_sets.end()) return false;  // condition 1'
  }
  return true;
}

ArcOrientation orientation(int n, const PartialInjection& a, const Arc& arc) {
  if (!char_member_minus(n, a)) {
    throw std::invalid_argument("orientation: alpha is not in DPW_n^-");
  }
  const auto mem = arc.members();
  for (Vertex x : mem) {
    if (!a.defined_at(x)) throw std::invalid_argument("orientation: arc not inside Dom(alpha)");
  }
  int step = arc_step(n, a, mem);
  if (step == 0) throw std::invalid_argument("orientation: alpha is not dihedral on the arc");
  return step > 0 ? ArcOrientation::Preserves : ArcOrientation::Reverses;
}

JType j_type(const PartialInjection& alpha) {
  const Ambient& amb = alpha.ambient();
  int n;
  if (amb.is_rim()) {
    n = amb.hi();
  } else if (amb.has_hub()) {
    if (alpha.defined_at(0) || alpha.hits(0)) {
      throw std::invalid_argument("j_type: hub occurs in Dom or Im");
    }
    n = amb.hi();
  } else {
    throw std::invalid_argument("j_type: unsupported ambient");
  }
  JType t;
  for (const auto& arc : maximal_arcs(n, alpha.domain())) t.push_back(arc.size());
  std::sort(t.begin(), t.end());
  return t;
}

std::string j_type_string(const JType& t) {
  if (t.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

Classification classify(const PartialInjection& a) {
  if (!a.ambient().has_hub()) {
    throw std::invalid_argument("classify: element must live on {0..n}");
  }
  const bool d0 = a.defined_at(0);
  const bool i0 = a.hits(0);
  if (!d0 && !i0) return Classification::Minus;
  if (d0 && a.apply(0) == 0) return Classification::Plus;
  return Classification::Outside;
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Minus: return "minus";
    case Classification::Plus: return "plus";
    default: return "outside";
  }
}

PartialInjection embed(const PartialInjection& rim_alpha) {
  if (!rim_alpha.ambient().is_rim()) {
    throw std::invalid_argument("embed: element must live on {1..n}");
  }
  return {Ambient::with_hub(rim_alpha.ambient().hi()), rim_alpha.pairs()};
}

PartialInjection project(const PartialInjection& hub_alpha) {
  if (!hub_alpha.ambient().has_hub()) {
    throw std::invalid_argument("project: element must live on {0..n}");
  }
  if (hub_alpha.defined_at(0) || hub_alpha.hits(0)) {
    throw std::invalid_argument("project: hub occurs in Dom or Im");
  }
  return {Ambient::rim(hub_alpha.ambient().hi()), hub_alpha.pairs()};
}

PartialInjection psi(const PartialInjection& hub_plus) {
  if (!hub_plus.ambient().has_hub() || classify(hub_plus) != Classification::Plus) {
    throw std::invalid_argument("psi: element must be in DPW_n^+");
  }
  std::vector<PartialInjection::Pair> p;
  for (auto [d, m] : hub_plus.pairs()) {
    if (d != 0) p.emplace_back(d, m);
  }
  return {Ambient::rim(hub_plus.ambient().hi()), std::move(p)};
}

PartialInjection psi_inv(const PartialInjection& rim_alpha) {
  if (!rim_alpha.ambient().is_rim()) {
    throw std::invalid_argument("psi_inv: element must live on {1..n}");
  }
  auto p = rim_alpha.pairs();
  p.emplace_back(0, 0);
  return {Ambient::with_hub(rim_alpha.ambient().hi()), std::move(p)};
}

std::vector<int> split_lemma_check(const PartialInjection& a) {
  if (!a.ambient().has_hub()) {
    throw std::invalid_argument("split_lemma_check: element must live on {0..n}");
  }
  std::vector<int> violated;
  const int k = a.rank();
  const bool d0 = a.defined_at(0);
  const bool i0 = a.hits(0);
  const bool fixes0 = d0 && a.apply(0) == 0;
  if (d0 && !fixes0 && k > 4) violated.push_back(1);
  if (i0 && !fixes0 && k > 4) violated.push_back(2);
  if (k >= 4 && d0 != i0) violated.push_back(3);
  if (k >= 5 && (d0 || i0) && !(d0 && i0 && fixes0)) violated.push_back(4);
  return violated;
}

}  // namespace dpw
