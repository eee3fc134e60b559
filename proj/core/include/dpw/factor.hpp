#ifndef DPW_FACTOR_HPP
#define DPW_FACTOR_HPP

#include <vector>

#include "dpw/generators.hpp"
#include "dpw/partial_injection.hpp"

namespace dpw {

// A sequence of labeled generators together with the ambient it evaluates
// on.  The empty word is the ambient identity; evaluation composes left to
// right.  Words are constructive, not minimized; shortest words come from the
// closure BFS instead.
struct Word {
  Ambient ambient;
  std::vector<GeneratorLabel> labels;
};

PartialInjection evaluate_word(int n, const Word& w);

// alpha = id_{Dom} . sigma for a dihedral witness sigma: one e_t per gap of
// the domain (each expanded through e_i = g^{n-i} e g^i), then sigma as g^k
// or h g^k.
Word factor_DI(int n, const PartialInjection& rim_alpha);

// Constructive factorization over {g, h, e, c_j} following the recursive
// rank descent: rank >= n-1 and single-arc elements are dihedral
// restrictions; rank n-2 elements reduce to one of four normal forms; lower
// ranks are rebuilt from strictly higher-rank pieces, so recursion
// terminates structurally.
Word factor_minus(int n, const PartialInjection& rim_alpha);

// Factorization over the full generating set: minus elements via the iota
// bridge, plus elements through Psi, and hub-moving elements by the rank <= 4
// case analysis around z.  For n = 4 every e0 is rewritten as g0^3 z^2 g0.
Word factor_full(int n, const PartialInjection& hub_alpha);

// The top-level pieces of one descent step for an element of rank k <= n-3
// with two or more arcs: the element equals their left-to-right product and
// every piece has rank strictly greater than k (same-rank quasi-identities
// are expanded one extension step).  Exposes the rank-monotonicity claim of
// the descent for direct verification.
std::vector<PartialInjection> rank_descent_pieces(int n, const PartialInjection& rim_alpha);

}  // namespace dpw

#endif  // DPW_FACTOR_HPP
