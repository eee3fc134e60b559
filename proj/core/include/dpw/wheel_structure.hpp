#ifndef DPW_WHEEL_STRUCTURE_HPP
#define DPW_WHEEL_STRUCTURE_HPP

#include <vector>

#include "dpw/partial_injection.hpp"

namespace dpw {

// The cyclic interval A_{i,j} = {i, i+1, ..., j} of the rim {1..n}, indices
// mod n with representatives 1..n.  A_{1,n} is the whole rim.
class Arc {
public:
  Arc(int n, Vertex start, Vertex end);

  int n() const { return n_; }
  Vertex start() const { return start_; }
  Vertex end() const { return end_; }
  int size() const;
  bool contains(Vertex v) const;
  std::vector<Vertex> members() const;  // cyclic order from start to end
  Vertex min_member() const;

  static Arc full(int n) { return Arc(n, 1, n); }

  friend bool operator==(const Arc&, const Arc&) = default;

private:
  int n_;
  Vertex start_;
  Vertex end_;
};

// Maximal arcs of X, pairwise disjoint with union X, ordered by smallest
// member; a wrap-around arc (containing both n and 1) therefore comes first.
// X = {1..n} yields the single arc A_{1,n}; X empty yields no arcs.
std::vector<Arc> maximal_arcs(int n, const std::vector<Vertex>& X);

// Membership test for DPW_n^- via the maximal-arc characterization: alpha
// maps maximal arcs of its domain onto maximal arcs of its image, and is a
// dihedral restriction on each of them.  Total over all rim partial
// injections; equivalent to the metric predicate on hubless maps.
bool char_member_minus(int n, const PartialInjection& rim_alpha);

enum class ArcOrientation { Preserves, Reverses };

// Orientation of alpha on an arc of its domain (alpha in DPW_n^-).  Singleton
// arcs are Preserves by convention: both dihedral witnesses agree pointwise
// there.
ArcOrientation orientation(int n, const PartialInjection& rim_alpha, const Arc& arc);

// Sorted maximal-arc sizes of the domain.  Degenerate-case conventions: the
// empty map has J-type (), a full-domain element is the single arc A_{1,n}
// with J-type (n).
using JType = std::vector<int>;
JType j_type(const PartialInjection& alpha);  // hub must not occur in dom/im
std::string j_type_string(const JType& t);

enum class Classification { Minus, Plus, Outside };

// Three-way split of DPW_n: Minus avoids the hub entirely, Plus fixes it,
// everything else is Outside (and has rank <= 4 by the splitting lemma).
Classification classify(const PartialInjection& hub_alpha);
const char* classification_name(Classification c);

// The only sanctioned conversions between the rim world {1..n} and the hub
// world {0..n}.
PartialInjection embed(const PartialInjection& rim_alpha);    // same pairs on {0..n}
PartialInjection project(const PartialInjection& hub_alpha);  // hub-free map to {1..n}

// The isomorphism Psi: DPW_n^+ -> DPW_n^-, alpha |-> alpha|_{1..n}, realized
// here as dropping the 0->0 pair and moving to the rim ambient (and back).
PartialInjection psi(const PartialInjection& hub_plus);
PartialInjection psi_inv(const PartialInjection& rim_alpha);

// Violated properties (by number 1..4) of the splitting lemma; empty for
// every genuine partial isometry of W_n.
std::vector<int> split_lemma_check(const PartialInjection& hub_alpha);

}  // namespace dpw

#endif  // DPW_WHEEL_STRUCTURE_HPP
