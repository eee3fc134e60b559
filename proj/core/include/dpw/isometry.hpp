#ifndef DPW_ISOMETRY_HPP
#define DPW_ISOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dpw/graph.hpp"
#include "dpw/partial_injection.hpp"

namespace dpw {

// alpha is a partial isometry of g iff d(x a, y a) = d(x, y) for all x, y in
// its domain.  Unordered pairs suffice by symmetry of the metric.
bool is_partial_isometry(const Graph& g, const PartialInjection& alpha);
bool is_partial_isometry(const DistanceMatrix& d, const PartialInjection& alpha);

enum class DpFilter { All, Minus, Plus, Outside };

struct EnumerateOptions {
  int vertex_cap = 10;
  DpFilter filter = DpFilter::All;
  int workers = 1;
};

// Brute-force enumeration of DP(G) over all partial injections on V(G), with
// distance-pruned backtracking.  Deterministic order: domains in lexicographic
// subset order, assignments in lexicographic image order.  Output is
// independent of the worker count.
std::vector<PartialInjection> enumerate_dp(const Graph& g, const EnumerateOptions& opts = {});

// The dihedral group D_2n acting on the rim {1..n}, built from the closed
// forms i g^k = i + k and i h g^k = k - i + 1 (mod n).  Element order:
// g^0..g^{n-1}, h g^0..h g^{n-1}.
class DihedralGroup {
public:
  explicit DihedralGroup(int n);  // n >= 3

  int n() const { return n_; }
  const std::vector<PartialInjection>& elements() const { return elements_; }
  const PartialInjection& rotation(int k) const;     // g^k
  const PartialInjection& reflection(int k) const;   // h g^k

private:
  int n_;
  std::vector<PartialInjection> elements_;
};

inline DihedralGroup dihedral(int n) { return DihedralGroup(n); }

// Membership in the dihedral inverse monoid DI_n: alpha is in DI_n iff it is
// the restriction of some dihedral permutation.  Scans g^0..g^{n-1} then
// h g^0..h g^{n-1} and returns the first witness.
std::optional<PartialInjection> di_witness(int n, const PartialInjection& alpha);
inline bool is_in_DI(int n, const PartialInjection& alpha) {
  return di_witness(n, alpha).has_value();
}

// All of DI_n by enumerating restrictions of the 2n dihedral permutations.
std::vector<PartialInjection> enumerate_DI(int n);

// Visits every partial injection on the ambient, in the same deterministic
// order as enumerate_dp; used by exhaustive sweeps and test oracles.
void for_each_partial_injection(Ambient a, const std::function<void(const PartialInjection&)>& fn);

std::uint64_t count_partial_injections(int points);  // |I_k| = sum C(k,j)^2 j!

}  // namespace dpw

#endif  // DPW_ISOMETRY_HPP
