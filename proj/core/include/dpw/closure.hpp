#ifndef DPW_CLOSURE_HPP
#define DPW_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dpw/generators.hpp"
#include "dpw/partial_injection.hpp"

namespace dpw {

struct ClosureOptions {
  std::uint64_t element_cap = 50'000'000;
};

// The monoid generated by a labeled generator set: element table in
// breadth-first discovery order (index 0 is the ambient identity), the right
// Cayley graph, and a shortest factorization word per element.  BFS with the
// generator loop innermost assigns every element the lexicographically
// smallest among its shortest words (by generator index in listed order).
class MonoidClosure {
public:
  MonoidClosure(Ambient ambient, std::vector<LabeledGenerator> gens, const ClosureOptions& opts);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<LabeledGenerator>& generators() const { return gens_; }
  const std::vector<PartialInjection>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::uint32_t> index_of(const PartialInjection& p) const;
  bool contains(const PartialInjection& p) const { return index_of(p).has_value(); }

  // right Cayley edge: index of elements[e] * gens[g]
  std::uint32_t right_step(std::uint32_t e, std::size_t g) const {
    return cayley_[e * gens_.size() + g];
  }

  std::vector<int> word_of(std::uint32_t e) const;  // generator indices
  std::size_t max_word_length() const { return max_word_length_; }

private:
  Ambient ambient_;
  std::vector<LabeledGenerator> gens_;
  std::vector<PartialInjection> elements_;
  std::unordered_map<PartialInjection, std::uint32_t> index_;
  std::vector<std::uint32_t> cayley_;
  std::vector<std::uint32_t> parent_;
  std::vector<int> parent_gen_;
  std::size_t max_word_length_ = 0;
};

MonoidClosure generate(Ambient ambient, std::vector<LabeledGenerator> gens,
                       const ClosureOptions& opts = {});

// Green's relations.  L, R and H come from image / domain fibers (valid in
// any inverse submonoid of I(Omega)).  D is computed either as the join of L
// and R (mode ByDomIm) or, as an independent oracle, directly as the
// J-relation via strongly connected components of the two-sided Cayley
// reachability graph (mode ByIdeals); D = J on these finite monoids.
enum class GreenMode { ByDomIm, ByIdeals };

struct GreenStructure {
  // class id per element index; ids are dense and assigned by first occurrence
  std::vector<std::uint32_t> l_of, r_of, h_of, d_of;
  std::uint32_t l_count = 0, r_count = 0, h_count = 0, d_count = 0;
};

GreenStructure green(const MonoidClosure& m, GreenMode mode);

// Closure check that gens generate target: |gens| on success, otherwise a
// witness element of target not generated (the canonically smallest of
// maximal rank, so the most informative miss is reported).
struct RankUpperResult {
  bool generated = false;
  int gens_size = 0;
  std::optional<PartialInjection> missing_witness;
};

RankUpperResult rank_upper(Ambient ambient, const std::vector<LabeledGenerator>& gens,
                           const std::vector<PartialInjection>& target,
                           const ClosureOptions& opts = {});

// Mechanized lower bound floor(n/2)+1 for rank(DPW_n^-): two units, one
// rank n-1 element, and one forced rank n-2 generator per c_j, with every
// counting fact verified inside the closure.  Requires the closure to be
// exactly DPW_n^- (checked against an independent enumeration).
int rank_lower_minus(int n, const MonoidClosure& minus_closure);

// Mechanized lower bound floor(n/2)+3 for rank(DPW_n), n >= 5 (n = 4 is
// settled by rank_exact).  Requires the closure to be exactly DPW_n.
int rank_lower_full(int n, const MonoidClosure& full_closure);

// Exhaustive minimal-generating-set search.  Sound pruning: in each candidate
// the unit part must generate the group of units (units arise only as
// products of units), so candidates are (unit subsets generating the units) x
// (non-unit subsets).  Within a size level a known generating set may be
// offered as a hint; it is tested first but never skips the exhaustive
// refutation of smaller sizes.
struct RankSearchOptions {
  std::uint64_t candidate_budget = 10'000'000;
  std::vector<PartialInjection> hint;
};

struct RankSearchResult {
  std::optional<int> rank;  // nullopt: budget exhausted, inconclusive
  std::uint64_t candidates_tested = 0;
};

RankSearchResult rank_exact(const MonoidClosure& m, const RankSearchOptions& opts = {});

}  // namespace dpw

#endif  // DPW_CLOSURE_HPP
