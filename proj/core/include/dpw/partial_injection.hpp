#ifndef DPW_PARTIAL_INJECTION_HPP
#define DPW_PARTIAL_INJECTION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace dpw {

using Vertex = int;

// A contiguous vertex interval [lo, hi].  The two conventions used throughout
// are rim(n) = {1..n} and with_hub(n) = {0..n}; other intervals appear for the
// non-wheel graph families (e.g. the star on {0..n-1}).
class Ambient {
public:
  static Ambient rim(int n) { return Ambient(1, n); }
  static Ambient with_hub(int n) { return Ambient(0, n); }
  static Ambient interval(Vertex lo, Vertex hi) { return Ambient(lo, hi); }

  Vertex lo() const { return lo_; }
  Vertex hi() const { return hi_; }
  int size() const { return hi_ - lo_ + 1; }
  bool contains(Vertex v) const { return lo_ <= v && v <= hi_; }
  bool is_rim() const { return lo_ == 1; }
  bool has_hub() const { return lo_ == 0; }

  std::vector<Vertex> vertices() const;

  friend bool operator==(const Ambient&, const Ambient&) = default;
  friend bool operator<(const Ambient& a, const Ambient& b) {
    return a.lo_ != b.lo_ ? a.lo_ < b.lo_ : a.hi_ < b.hi_;
  }

private:
  Ambient(Vertex lo, Vertex hi);
  Vertex lo_;
  Vertex hi_;
};

// A partial injective map on an ambient vertex interval.  Canonical form is
// the domain-sorted pair list, so equality and hashing are structural.
// Values are immutable once constructed; all operations are pure.
class PartialInjection {
public:
  using Pair = std::pair<Vertex, Vertex>;

  PartialInjection(Ambient ambient, std::vector<Pair> pairs);

  static PartialInjection empty_map(Ambient a) { return {a, {}}; }
  static PartialInjection identity(Ambient a);
  static PartialInjection partial_identity(Ambient a, const std::vector<Vertex>& domain);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  int rank() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }

  std::vector<Vertex> domain() const;
  std::vector<Vertex> image() const;  // sorted
  std::optional<Vertex> apply(Vertex x) const;
  bool defined_at(Vertex x) const { return apply(x).has_value(); }
  bool hits(Vertex y) const;  // y in image

  // left-to-right composition: x(ab) = (xa)b
  PartialInjection compose(const PartialInjection& rhs) const;
  PartialInjection inverse() const;
  // domain restriction to X (X must lie inside the ambient)
  PartialInjection restrict_to(const std::vector<Vertex>& X) const;

  bool is_identity_on_domain() const;

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
  friend bool operator<(const PartialInjection& a, const PartialInjection& b);

private:
  Ambient ambient_;
  std::vector<Pair> pairs_;  // sorted by domain point
};

PartialInjection operator*(const PartialInjection& a, const PartialInjection& b);

std::ostream& operator<<(std::ostream& os, const PartialInjection& p);

}  // namespace dpw

template <>
struct std::hash<dpw::PartialInjection> {
  std::size_t operator()(const dpw::PartialInjection& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(p.ambient().lo());
    h = h * 0x100000001b3ull + static_cast<std::size_t>(p.ambient().hi());
    for (auto [d, i] : p.pairs()) {
      h = h * 0x100000001b3ull + static_cast<std::size_t>(d * 131 + i + 7);
    }
    return h;
  }
};

#endif  // DPW_PARTIAL_INJECTION_HPP
