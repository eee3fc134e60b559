#include "dpw/partial_injection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dpw {

Ambient::Ambient(Vertex lo, Vertex hi) : lo_(lo), hi_(hi) {
  if (lo > hi) {
    throw std::invalid_argument("Ambient: empty interval [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");
  }
}

std::vector<Vertex> Ambient::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v = lo_; v <= hi_; ++v) out.push_back(v);
  return out;
}

PartialInjection::PartialInjection(Ambient ambient, std::vector<Pair> pairs)
    : ambient_(ambient), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<Vertex> seen_im;
  seen_im.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    auto [d, m] = pairs_[i];
    if (!ambient_.contains(d) || !ambient_.contains(m)) {
      throw std::invalid_argument("PartialInjection: point outside ambient");
    }
    if (i > 0 && pairs_[i - 1].first == d) {
      throw std::invalid_argument("PartialInjection: duplicate domain point " + std::to_string(d));
    }
    seen_im.push_back(m);
  }
  std::sort(seen_im.begin(), seen_im.end());
  if (std::adjacent_find(seen_im.begin(), seen_im.end()) != seen_im.end()) {
    throw std::invalid_argument("PartialInjection: not injective");
  }
}

PartialInjection PartialInjection::identity(Ambient a) {
  std::vector<Pair> p;
  for (Vertex v = a.lo(); v <= a.hi(); ++v) p.emplace_back(v, v);
  return {a, std::move(p)};
}

PartialInjection PartialInjection::partial_identity(Ambient a, const std::vector<Vertex>& domain) {
  std::vector<Pair> p;
  p.reserve(domain.size());
  for (Vertex v : domain) {
    if (!a.contains(v)) throw std::invalid_argument("partial_identity: domain outside ambient");
    p.emplace_back(v, v);
  }
  return {a, std::move(p)};
}

std::vector<Vertex> PartialInjection::domain() const {
  std::vector<Vertex> out;
  out.reserve(pairs_.size());
  for (auto [d, m] : pairs_) out.push_back(d);
  return out;
}

std::vector<Vertex> PartialInjection::image() const {
  std::vector<Vertex> out;
  out.reserve(pairs_.size());
  for (auto [d, m] : pairs_) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vertex> PartialInjection::apply(Vertex x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0},
                             [](const Pair& a, const Pair& b) { return a.first < b.first; });
  if (it != pairs_.end() && it->first == x) return it->second;
  return std::nullopt;
}

bool PartialInjection::hits(Vertex y) const {
  for (auto [d, m] : pairs_) {
    if (m == y) return true;
  }
  return false;
}

PartialInjection PartialInjection::compose(const PartialInjection& rhs) const {
  if (!(ambient_ == rhs.ambient_)) {
    throw std::invalid_argument("compose: ambient mismatch");
  }
  std::vector<Pair> out;
  out.reserve(std::min(pairs_.size(), rhs.pairs_.size()));
  for (auto [d, m] : pairs_) {
    if (auto y = rhs.apply(m)) out.emplace_back(d, *y);
  }
  return {ambient_, std::move(out)};
}

PartialInjection PartialInjection::inverse() const {
  std::vector<Pair> out;
  out.reserve(pairs_.size());
  for (auto [d, m] : pairs_) out.emplace_back(m, d);
  return {ambient_, std::move(out)};
}

PartialInjection PartialInjection::restrict_to(const std::vector<Vertex>& X) const {
  std::vector<Pair> out;
  for (Vertex x : X) {
    if (!ambient_.contains(x)) {
      throw std::invalid_argument("restrict_to: X not inside ambient");
    }
  }
  for (auto [d, m] : pairs_) {
    if (std::find(X.begin(), X.end(), d) != X.end()) out.emplace_back(d, m);
  }
  return {ambient_, std::move(out)};
}

bool PartialInjection::is_identity_on_domain() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.first == p.second; });
}

bool operator<(const PartialInjection& a, const PartialInjection& b) {
  if (!(a.ambient_ == b.ambient_)) return a.ambient_ < b.ambient_;
  return a.pairs_ < b.pairs_;
}

PartialInjection operator*(const PartialInjection& a, const PartialInjection& b) {
  return a.compose(b);
}

std::ostream& operator<<(std::ostream& os, const PartialInjection& p) {
  os << "{";
  bool first = true;
  for (auto [d, m] : p.pairs()) {
    if (!first) os << ", ";
    os << d << "->" << m;
    first = false;
  }
  return os << "}";
}

}  // namespace dpw
