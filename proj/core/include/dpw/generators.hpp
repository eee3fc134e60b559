#ifndef DPW_GENERATORS_HPP
#define DPW_GENERATORS_HPP

#include <string>
#include <vector>

#include "dpw/partial_injection.hpp"

namespace dpw {

// Labels for the named generators.  Rim family (on {1..n}): g, h, e, e_i,
// c_j.  Hub family (on {0..n}): g0, h0, e0, b_j, iota, z.  The c_j / b_j
// exist only for 1 <= j <= floor(n/2) - 2, i.e. for n >= 6.
enum class GenTag { G, H, E, Ei, C, G0, H0, E0, B, Iota, Z };

struct GeneratorLabel {
  GenTag tag;
  int param = 0;  // i for e_i, j for c_j / b_j

  std::string str() const;
  static GeneratorLabel parse(const std::string& s);

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

bool is_rim_tag(GenTag t);

// floor(n/2) - 2, the largest valid j for c_j / b_j (may be <= 0)
inline int cj_max(int n) { return n / 2 - 2; }

// Builds the named transformation exactly as displayed in the definitions.
PartialInjection build_generator(int n, const GeneratorLabel& label);

struct LabeledGenerator {
  GeneratorLabel label;
  PartialInjection element;
};

// The four generating sets:
//   minus: {g, h, e, c_j}                 for DPW_n^-          (size floor(n/2)+1)
//   plus:  {g0, h0, e0, b_j}              for DPW_n^+          (size floor(n/2)+1)
//   union: plus + {iota}                  for DPW_n^- u DPW_n^+ (size floor(n/2)+2)
//   full:  plus + {iota, z}               for DPW_n            (size floor(n/2)+3, n >= 5)
// For n = 4 the full set degenerates to {g0, h0, iota, z} since e0 = g0^3 z^2 g0.
std::vector<LabeledGenerator> genset_minus(int n);
std::vector<LabeledGenerator> genset_plus(int n);
std::vector<LabeledGenerator> genset_union(int n);
std::vector<LabeledGenerator> genset_full(int n);

}  // namespace dpw

#endif  // DPW_GENERATORS_HPP
