#include "dpw/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

namespace dpw {

PartialInjection evaluate_word(int n, const Word& w) {
  PartialInjection cur = PartialInjection::identity(w.ambient);
  for (const auto& lab : w.labels) {
    bool rim = is_rim_tag(lab.tag);
    if (rim != w.ambient.is_rim()) {
      throw std::invalid_argument("evaluate_word: label '" + lab.str() +
                                  "' does not live on the word's ambient");
    }
    cur = cur.compose(build_generator(n, lab));
  }
  return cur;
}

namespace {

using Labels = std::vector<GeneratorLabel>;

void emit_g(Labels& w, int n, int k) {
  k = ((k % n) + n) % n;
  for (int i = 0; i < k; ++i) w.push_back({GenTag::G});
}

void emit_ei(Labels& w, int n, int i) {
  // e_i = g^{n-i} e g^i, with e_n = e
  if (i == n) {
    w.push_back({GenTag::E});
    return;
  }
  emit_g(w, n, n - i);
  w.push_back({GenTag::E});
  emit_g(w, n, i);
}

PartialInjection make_rim(int n, std::vector<PartialInjection::Pair> pairs) {
  return {Ambient::rim(n), std::move(pairs)};
}

void factor_dispatch(int n, const PartialInjection& a, Labels& w);

void factor_di_into(int n, const PartialInjection& a, Labels& w) {
  auto sigma = di_witness(n, a);
  if (!sigma) throw std::invalid_argument("factor_DI: element is not in DI_n");
  std::vector<char> in_dom(static_cast<std::size_t>(n) + 1, 0);
  for (auto [d, m] : a.pairs()) in_dom[static_cast<std::size_t>(d)] = 1;
  for (int t = 1; t <= n; ++t) {
    if (!in_dom[static_cast<std::size_t>(t)]) emit_ei(w, n, t);
  }
  // witness as g^k or h g^k
  Vertex one = *sigma->apply(1);
  Vertex two = *sigma->apply(2);
  if (two == rim_norm(n, one + 1)) {
    emit_g(w, n, one - 1);
  } else {
    w.push_back({GenTag::H});
    emit_g(w, n, one);  // h g^k maps 1 to k
  }
}

// image run of a domain arc, in the arc's cyclic order
std::vector<Vertex> image_run(const PartialInjection& a, const Arc& arc) {
  std::vector<Vertex> out;
  for (Vertex x : arc.members()) out.push_back(*a.apply(x));
  return out;
}

// cyclic start of the arc formed by an (unordered) image run
Vertex run_start(int n, const std::vector<Vertex>& run) {
  if (static_cast<int>(run.size()) == n) return 1;
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : run) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : run) {
    if (!in[static_cast<std::size_t>(rim_norm(n, v - 1))]) return v;
  }
  throw std::logic_error("run_start: run is not an arc");
}

// g^{r-1} . a . g^{n-s+1}
PartialInjection shifted(int n, const PartialInjection& a, Vertex r, Vertex s) {
  const DihedralGroup d2n(n);
  return d2n.rotation(r - 1).compose(a).compose(d2n.rotation(n - s + 1));
}

// rank n-2 normal forms (the four displays of the two-arc case)
void factor_rank_n2(int n, const PartialInjection& a, Labels& w) {
  auto arcs = maximal_arcs(n, a.domain());
  if (arcs.size() == 1) {
    factor_di_into(n, a, w);
    return;
  }
  Arc a1 = arcs[0], a2 = arcs[1];
  if (a1.size() > a2.size()) std::swap(a1, a2);
  const int j = a1.size() - 1;
  const Vertex r = a1.start();
  const Vertex s = run_start(n, image_run(a, a1));
  PartialInjection beta = shifted(n, a, r, s);
  const bool first_rev = j >= 1 && beta.apply(1) == j + 1;
  const bool second_rev = j + 3 != n - 1 && beta.apply(j + 3) == n - 1;
  // the four normal forms: (id,id) = e_{j+2} e_n; (id,rev) = c_j (or
  // e_2 e_n h g when the first arc is a singleton); (rev,id) =
  // c_j e_{j+2} e_n h g^{j+1}; (rev,rev) = e_{j+2} e_n h g^{j+1}
  Labels bw;
  if (!first_rev && !second_rev) {
    emit_ei(bw, n, j + 2);
    bw.push_back({GenTag::E});
  } else if (!first_rev && second_rev && j >= 1) {
    bw.push_back({GenTag::C, j});
  } else {
    if (first_rev && !second_rev) bw.push_back({GenTag::C, j});
    emit_ei(bw, n, j + 2);
    bw.push_back({GenTag::E});
    bw.push_back({GenTag::H});
    emit_g(bw, n, j + 1);
  }
  emit_g(w, n, n - r + 1);
  w.insert(w.end(), bw.begin(), bw.end());
  emit_g(w, n, s - 1);
}

bool is_quasi_identity(int n, const PartialInjection& a) {
  if (a.domain() != a.image()) return false;
  int moved_arcs = 0;
  for (const auto& arc : maximal_arcs(n, a.domain())) {
    bool moved = false;
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex x : arc.members()) in[static_cast<std::size_t>(x)] = 1;
    for (Vertex x : arc.members()) {
      Vertex y = *a.apply(x);
      if (!in[static_cast<std::size_t>(y)]) return false;  // arc not fixed setwise
      if (y != x) moved = true;
    }
    if (moved) ++moved_arcs;
  }
  return moved_arcs <= 1;
}

// one step of the quasi-identity route: extend across the gap run next to a
// non-special arc, so a = abar . prod(e_t over the adjoined gaps) with
// rank(abar) strictly above rank(a)
struct QidStep {
  PartialInjection abar;
  std::vector<Vertex> gaps;  // ascending
};

QidStep qid_step(int n, const PartialInjection& a) {
  auto arcs = maximal_arcs(n, a.domain());
  const std::size_t ell = arcs.size();
  std::vector<std::vector<Vertex>> mems;
  for (const auto& arc : arcs) mems.push_back(arc.members());
  std::size_t special = 0;
  for (std::size_t i = 0; i < ell; ++i) {
    bool moved = std::any_of(mems[i].begin(), mems[i].end(),
                             [&](Vertex x) { return *a.apply(x) != x; });
    if (moved) {
      special = i;
      break;
    }
  }
  if (ell == 2) {
    const std::size_t i = 1 - special;
    const Vertex r = mems[i].front();
    const Vertex s = mems[i].back();
    const auto dom = a.domain();
    auto in_dom = [&](Vertex v) { return std::find(dom.begin(), dom.end(), v) != dom.end(); };
    if (in_dom(rim_norm(n, r - 2)) && in_dom(rim_norm(n, s + 2))) {
      throw std::logic_error("factor_qid: gap dichotomy failed");
    }
    const Vertex t = !in_dom(rim_norm(n, r - 2)) ? rim_norm(n, r - 1) : rim_norm(n, s + 1);
    auto pairs = a.pairs();
    pairs.emplace_back(t, t);
    return {make_rim(n, std::move(pairs)), {t}};
  }
  // ell >= 3: smallest i with special not in {i, i (+) 1}
  std::size_t i = 0;
  while (special == i || special == (i + 1) % ell) ++i;
  const std::size_t nxt = (i + 1) % ell;
  std::vector<Vertex> gap;
  Vertex x = rim_norm(n, mems[i].back() + 1);
  while (x != mems[nxt].front()) {
    gap.push_back(x);
    x = rim_norm(n, x + 1);
  }
  auto pairs = a.pairs();
  for (Vertex t : gap) pairs.emplace_back(t, t);
  std::sort(gap.begin(), gap.end());
  return {make_rim(n, std::move(pairs)), std::move(gap)};
}

// a quasi-identity of rank <= n-3 is an extension-by-partial-identities of a
// higher-rank quasi-identity: adjoin the gap(s) next to a non-special arc and
// peel them off again with e_t factors
void factor_qid(int n, const PartialInjection& a, Labels& w) {
  if (maximal_arcs(n, a.domain()).size() <= 1) {
    factor_di_into(n, a, w);
    return;
  }
  QidStep step = qid_step(n, a);
  factor_dispatch(n, step.abar, w);
  for (Vertex t : step.gaps) emit_ei(w, n, t);
}

// one top-level piece of the rank descent; quasi-identities of the starting
// rank recurse through the extension-by-partial-identities route, everything
// else has rank strictly above the starting rank
struct Piece {
  PartialInjection elem;
  bool via_qid;
};

// alpha (rank k <= n-3, at least two arcs, not a quasi-identity) as a
// left-to-right product of pieces:
//   alpha = g^{n-r+1} . delta^-1 . e_{t+1} . barbeta . gamma2 . lambda . gamma1 . g^{s-1}
std::vector<Piece> general_pieces(int n, const PartialInjection& a) {
  const int k = a.rank();
  const DihedralGroup d2n(n);
  auto arcs = maximal_arcs(n, a.domain());
  const Arc a1 = arcs[0];
  const int t = a1.size();
  const Vertex r = a1.start();
  const Vertex s = run_start(n, image_run(a, a1));

  PartialInjection beta0 = shifted(n, a, r, s);
  // gamma1: equals beta0 on {1..t} (an involution there), identity elsewhere
  // on Im(beta0)
  std::vector<PartialInjection::Pair> g1;
  for (Vertex y : beta0.image()) {
    if (y > t) g1.emplace_back(y, y);
  }
  for (Vertex x2 = 1; x2 <= t; ++x2) g1.emplace_back(x2, *beta0.apply(x2));
  PartialInjection gamma1 = make_rim(n, std::move(g1));
  PartialInjection beta = beta0.compose(gamma1);  // identity on {1..t}

  // A'2 = smallest-min remaining arc of Dom(beta)
  auto barcs = maximal_arcs(n, beta.domain());
  const Arc* a2 = nullptr;
  for (const auto& arc : barcs) {
    if (arc.start() == 1) continue;
    if (!a2 || arc.start() < a2->start()) a2 = &arc;
  }
  if (!a2) throw std::logic_error("factor_general: single-arc element slipped through");
  const int p = a2->size();
  const int jj = a2->start() - t;  // >= 2

  auto b2run = image_run(beta, *a2);
  const Vertex b = *std::max_element(b2run.begin(), b2run.end());
  const Vertex aa = t + 2;

  // lambda: identity on the wrap arc {b+2..t}, reversal of {aa..b}
  std::vector<PartialInjection::Pair> lp;
  for (Vertex v : Arc(n, rim_norm(n, b + 2), t).members()) lp.emplace_back(v, v);
  for (Vertex v = aa; v <= b; ++v) lp.emplace_back(v, aa + b - v);
  PartialInjection lambda = make_rim(n, std::move(lp));
  PartialInjection betalam = beta.compose(lambda);

  // gamma2: identity off the block {t+2..t+p+1}; on the block, identity if
  // betalam preserves the orientation of A'2, its reversal otherwise
  const bool preserves = p == 1 || betalam.apply(a2->start()) == t + 2;
  std::vector<PartialInjection::Pair> g2;
  for (Vertex y : betalam.image()) {
    if (y < t + 2 || y > t + p + 1) g2.emplace_back(y, y);
  }
  for (Vertex y = t + 2; y <= t + p + 1; ++y) {
    g2.emplace_back(y, preserves ? y : 2 * t + p + 3 - y);
  }
  PartialInjection gamma2 = make_rim(n, std::move(g2));

  // delta: identity on {1..t}, shift by jj-2 on {t+2..n-jj+1}
  std::vector<PartialInjection::Pair> dl;
  for (Vertex v = 1; v <= t; ++v) dl.emplace_back(v, v);
  for (Vertex v = t + 2; v <= n - jj + 1; ++v) dl.emplace_back(v, v + jj - 2);
  PartialInjection delta = make_rim(n, std::move(dl));

  PartialInjection core = delta.compose(betalam).compose(gamma2);
  auto bb = core.pairs();
  bb.emplace_back(t + 1, t + 1);
  PartialInjection barbeta = make_rim(n, std::move(bb));
  if (barbeta.rank() != k + 1) throw std::logic_error("factor_general: barbeta rank");

  std::vector<Piece> pieces;
  pieces.push_back({d2n.rotation(n - r + 1), false});
  // delta^-1.  jj = 2 gives the rank n-2 identity off {t+1, n}.  For jj >= 3
  // a split of delta into two unit-shift pieces breaks at jj = 3 (one factor
  // maps a single domain arc onto two image arcs), so use a two-reflection
  // split delta = f.g, valid for every jj >= 3:
  //   f = id_{1..t}   u reversal of {t+2..n-1}    (rank n-2)
  //   g = id_{1..t+1} u reversal of {t+jj..n-1}   (rank n-jj+1 > k)
  // both are involutions, so delta^-1 = g.f.
  if (jj == 2) {
    pieces.push_back({delta.inverse(), false});
  } else {
    std::vector<PartialInjection::Pair> fp, gp;
    for (Vertex v = 1; v <= t; ++v) fp.emplace_back(v, v);
    for (Vertex v = t + 2; v <= n - 1; ++v) fp.emplace_back(v, n + t + 1 - v);
    for (Vertex v = 1; v <= t + 1; ++v) gp.emplace_back(v, v);
    for (Vertex v = t + jj; v <= n - 1; ++v) gp.emplace_back(v, n + t + jj - 1 - v);
    PartialInjection f = make_rim(n, std::move(fp));
    PartialInjection g = make_rim(n, std::move(gp));
    if (!(f.compose(g) == delta)) throw std::logic_error("factor_general: delta split");
    pieces.push_back({std::move(g), false});
    pieces.push_back({std::move(f), false});
  }
  {
    std::vector<PartialInjection::Pair> et;
    for (Vertex v = 1; v <= n; ++v) {
      if (v != t + 1) et.emplace_back(v, v);
    }
    pieces.push_back({make_rim(n, std::move(et)), false});
  }
  pieces.push_back({std::move(barbeta), false});
  pieces.push_back({std::move(gamma2), true});
  pieces.push_back({std::move(lambda), false});
  pieces.push_back({std::move(gamma1), true});
  pieces.push_back({d2n.rotation(s - 1), false});
  return pieces;
}

// the general rank <= n-3 descent
void factor_general(int n, const PartialInjection& a, Labels& w) {
  for (const auto& piece : general_pieces(n, a)) {
    if (piece.via_qid) {
      factor_qid(n, piece.elem, w);
    } else {
      factor_dispatch(n, piece.elem, w);
    }
  }
}

void factor_dispatch(int n, const PartialInjection& a, Labels& w) {
  const int k = a.rank();
  if (k >= n - 1 || maximal_arcs(n, a.domain()).size() <= 1) {
    factor_di_into(n, a, w);
  } else if (k == n - 2) {
    factor_rank_n2(n, a, w);
  } else if (is_quasi_identity(n, a)) {
    factor_qid(n, a, w);
  } else {
    factor_general(n, a, w);
  }
}

Labels to_plus_labels(const Labels& w) {
  Labels out;
  out.reserve(w.size());
  for (const auto& lab : w) {
    switch (lab.tag) {
      case GenTag::G: out.push_back({GenTag::G0}); break;
      case GenTag::H: out.push_back({GenTag::H0}); break;
      case GenTag::E: out.push_back({GenTag::E0}); break;
      case GenTag::C: out.push_back({GenTag::B, lab.param}); break;
      default: throw std::logic_error("to_plus_labels: non-rim label");
    }
  }
  return out;
}

void factor_outside(int n, const PartialInjection& a, Labels& w);

void factor_full_into(int n, const PartialInjection& a, Labels& w) {
  // a named generator is its own one-letter word
  for (const auto& g : genset_full(n)) {
    if (g.element == a) {
      w.push_back(g.label);
      return;
    }
  }
  switch (classify(a)) {
    case Classification::Minus: {
      Labels rim;
      factor_dispatch(n, project(a), rim);
      Labels plus = to_plus_labels(rim);
      w.insert(w.end(), plus.begin(), plus.end());
      w.push_back({GenTag::Iota});
      return;
    }
    case Classification::Plus: {
      Labels rim;
      factor_dispatch(n, psi(a), rim);
      Labels plus = to_plus_labels(rim);
      w.insert(w.end(), plus.begin(), plus.end());
      return;
    }
    case Classification::Outside: factor_outside(n, a, w); return;
  }
}

PartialInjection make_hub(int n, std::vector<PartialInjection::Pair> pairs) {
  return {Ambient::with_hub(n), std::move(pairs)};
}

// the rank <= 4 case analysis around z; every branch reduces to plus/minus
// factors on both sides of a single z
void factor_outside(int n, const PartialInjection& a, Labels& w) {
  const int k = a.rank();
  const bool d0 = a.defined_at(0);
  const bool i0 = a.hits(0);
  auto ainv = a.inverse();
  if (k == 4) {
    // 0 and its neighbours: 0 -> j, i -> 0, i-1 / i+1 -> j -/+ 1
    const Vertex j = *a.apply(0);
    const Vertex i = *ainv.apply(0);
    const Vertex im1 = rim_norm(n, i - 1), ip1 = rim_norm(n, i + 1);
    PartialInjection a1 = make_hub(n, {{0, 0}, {im1, n}, {i, 1}, {ip1, 2}});
    PartialInjection a2 = make_hub(n, {{0, 0}, {1, j}, {2, *a.apply(ip1)}, {n, *a.apply(im1)}});
    factor_full_into(n, a1, w);
    w.push_back({GenTag::Z});
    factor_full_into(n, a2, w);
    return;
  }
  if (k == 3 && d0 && i0) {
    const Vertex j = *a.apply(0);
    const Vertex i = *ainv.apply(0);
    Vertex other = 0;
    for (Vertex x : a.domain()) {
      if (x != 0 && x != i) other = x;
    }
    PartialInjection a1 = make_hub(n, {{0, 0}, {i, 1}, {other, 2}});
    PartialInjection a2 = make_hub(n, {{0, 0}, {1, j}, {2, *a.apply(other)}});
    factor_full_into(n, a1, w);
    w.push_back({GenTag::Z});
    factor_full_into(n, a2, w);
    return;
  }
  if (k == 3 && d0) {
    std::vector<Vertex> pts;
    for (Vertex x : a.domain()) {
      if (x != 0) pts.push_back(x);
    }
    PartialInjection a1 = make_hub(n, {{0, 0}, {pts[0], 2}, {pts[1], n}});
    PartialInjection a2 = make_hub(n, {{1, *a.apply(0)}, {2, *a.apply(pts[0])}, {n, *a.apply(pts[1])}});
    factor_full_into(n, a1, w);
    w.push_back({GenTag::Z});
    factor_full_into(n, a2, w);
    return;
  }
  if (k == 3) {  // 0 in Im only: factor the inverse, then invert the word
    Labels winv;
    factor_outside(n, ainv, winv);
    for (auto it = winv.rbegin(); it != winv.rend(); ++it) {
      if (it->tag == GenTag::G0) {
        for (int q = 0; q < n - 1; ++q) w.push_back({GenTag::G0});
      } else {
        w.push_back(*it);  // h0, e0, b_j, iota, z are involutions or idempotents
      }
    }
    return;
  }
  if (k == 2 && d0 && i0) {
    const Vertex j = *a.apply(0);
    const Vertex i = *ainv.apply(0);
    PartialInjection a1 = make_hub(n, {{0, 0}, {i, 1}});
    PartialInjection a2 = make_hub(n, {{0, 0}, {1, j}});
    factor_full_into(n, a1, w);
    w.push_back({GenTag::Z});
    factor_full_into(n, a2, w);
    return;
  }
  if (k == 2 && d0) {
    Vertex i = 0;
    for (Vertex x : a.domain()) {
      if (x != 0) i = x;
    }
    PartialInjection a1 = make_hub(n, {{0, 0}, {i, 2}});
    PartialInjection a2 = make_hub(n, {{1, *a.apply(0)}, {2, *a.apply(i)}});
    factor_full_into(n, a1, w);
    w.push_back({GenTag::Z});
    factor_full_into(n, a2, w);
    return;
  }
  if (k == 2) {  // (a, b | 0, i): route the point hitting 0 through z's 1 -> 0
    const Vertex hits0 = *ainv.apply(0);
    Vertex other = 0;
    for (Vertex x : a.domain()) {
      if (x != hits0) other = x;
    }
    PartialInjection a1 = make_hub(n, {{hits0, 1}, {other, 2}});
    PartialInjection a2 = make_hub(n, {{0, 0}, {2, *a.apply(other)}});
    factor_full_into(n, a1, w);
    w.push_back({GenTag::Z});
    factor_full_into(n, a2, w);
    return;
  }
  if (k == 1 && d0) {
    w.push_back({GenTag::Z});
    factor_full_into(n, make_hub(n, {{1, *a.apply(0)}}), w);
    return;
  }
  if (k == 1) {
    factor_full_into(n, make_hub(n, {{a.domain()[0], 1}}), w);
    w.push_back({GenTag::Z});
    return;
  }
  throw std::logic_error("factor_outside: element matches no case of the rank <= 4 analysis");
}

}  // namespace

Word factor_DI(int n, const PartialInjection& a) {
  Word w{Ambient::rim(n), {}};
  factor_di_into(n, a, w.labels);
  return w;
}

std::vector<PartialInjection> rank_descent_pieces(int n, const PartialInjection& a) {
  if (!char_member_minus(n, a)) {
    throw std::invalid_argument("rank_descent_pieces: element is not in DPW_n^-");
  }
  if (a.rank() > n - 3 || maximal_arcs(n, a.domain()).size() <= 1) {
    throw std::invalid_argument("rank_descent_pieces: needs rank <= n-3 and two or more arcs");
  }
  auto ei = [&](Vertex t) {
    std::vector<PartialInjection::Pair> p;
    for (Vertex v = 1; v <= n; ++v) {
      if (v != t) p.emplace_back(v, v);
    }
    return make_rim(n, std::move(p));
  };
  std::vector<PartialInjection> out;
  if (is_quasi_identity(n, a)) {
    QidStep step = qid_step(n, a);
    out.push_back(step.abar);
    for (Vertex t : step.gaps) out.push_back(ei(t));
    return out;
  }
  for (const auto& piece : general_pieces(n, a)) {
    if (piece.via_qid && piece.elem.rank() == a.rank() &&
        maximal_arcs(n, piece.elem.domain()).size() >= 2) {
      // expand the same-rank quasi-identities one level so every listed
      // piece has rank strictly above rank(a)
      QidStep step = qid_step(n, piece.elem);
      out.push_back(step.abar);
      for (Vertex t : step.gaps) out.push_back(ei(t));
    } else {
      out.push_back(piece.elem);
    }
  }
  return out;
}

Word factor_minus(int n, const PartialInjection& a) {
  if (!char_member_minus(n, a)) {
    throw std::invalid_argument("factor_minus: element is not in DPW_n^-");
  }
  Word w{Ambient::rim(n), {}};
  factor_dispatch(n, a, w.labels);
  return w;
}

Word factor_full(int n, const PartialInjection& a) {
  if (!(a.ambient() == Ambient::with_hub(n))) {
    throw std::invalid_argument("factor_full: element must live on {0..n}");
  }
  if (!is_partial_isometry(wheel(n), a)) {
    throw std::invalid_argument("factor_full: element is not a partial isometry of W_n");
  }
  Word w{Ambient::with_hub(n), {}};
  factor_full_into(n, a, w.labels);
  if (n == 4) {
    // e0 is not a generator of DPW_4: rewrite it through e0 = g0^3 z^2 g0
    Labels rewritten;
    for (const auto& lab : w.labels) {
      if (lab.tag == GenTag::E0) {
        for (int q = 0; q < 3; ++q) rewritten.push_back({GenTag::G0});
        rewritten.push_back({GenTag::Z});
        rewritten.push_back({GenTag::Z});
        rewritten.push_back({GenTag::G0});
      } else {
        rewritten.push_back(lab);
      }
    }
    w.labels = std::move(rewritten);
  }
  return w;
}

}  // namespace dpw
