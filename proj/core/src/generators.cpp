#include "dpw/generators.hpp"

#include <stdexcept>

#include "dpw/graph.hpp"

namespace dpw {

namespace {

PartialInjection rim_rotation(int n) {
  std::vector<PartialInjection::Pair> p;
  for (int i = 1; i <= n; ++i) p.emplace_back(i, rim_norm(n, i + 1));
  return {Ambient::rim(n), std::move(p)};
}

PartialInjection rim_reflection(int n) {
  std::vector<PartialInjection::Pair> p;
  for (int i = 1; i <= n; ++i) p.emplace_back(i, n - i + 1);
  return {Ambient::rim(n), std::move(p)};
}

PartialInjection rim_e(int n) {
  std::vector<PartialInjection::Pair> p;
  for (int i = 1; i <= n - 1; ++i) p.emplace_back(i, i);
  return {Ambient::rim(n), std::move(p)};
}

PartialInjection rim_cj(int n, int j) {
  // identity on 1..j+1, reversal of j+3..n-1 onto itself
  std::vector<PartialInjection::Pair> p;
  for (int i = 1; i <= j + 1; ++i) p.emplace_back(i, i);
  for (int x = j + 3; x <= n - 1; ++x) p.emplace_back(x, n + j + 2 - x);
  return {Ambient::rim(n), std::move(p)};
}

PartialInjection adjoin_hub_fixed(const PartialInjection& rim) {
  auto p = rim.pairs();
  p.emplace_back(0, 0);
  return {Ambient::with_hub(rim.ambient().hi()), std::move(p)};
}

}  // namespace

bool is_rim_tag(GenTag t) {
  switch (t) {
    case GenTag::G:
    case GenTag::H:
    case GenTag::E:
    case GenTag::Ei:
    case GenTag::C: return true;
    default: return false;
  }
}

std::string GeneratorLabel::str() const {
  switch (tag) {
    case GenTag::G: return "g";
    case GenTag::H: return "h";
    case GenTag::E: return "e";
    case GenTag::Ei: return "e_" + std::to_string(param);
    case GenTag::C: return "c_" + std::to_string(param);
    case GenTag::G0: return "g0";
    case GenTag::H0: return "h0";
    case GenTag::E0: return "e0";
    case GenTag::B: return "b_" + std::to_string(param);
    case GenTag::Iota: return "iota";
    case GenTag::Z: return "z";
  }
  return "?";
}

GeneratorLabel GeneratorLabel::parse(const std::string& s) {
  auto param_of = [&](std::size_t off) { return std::stoi(s.substr(off)); };
  if (s == "g") return {GenTag::G};
  if (s == "h") return {GenTag::H};
  if (s == "e") return {GenTag::E};
  if (s == "g0") return {GenTag::G0};
  if (s == "h0") return {GenTag::H0};
  if (s == "e0") return {GenTag::E0};
  if (s == "iota") return {GenTag::Iota};
  if (s == "z") return {GenTag::Z};
  if (s.rfind("e_", 0) == 0) return {GenTag::Ei, param_of(2)};
  if (s.rfind("c_", 0) == 0) return {GenTag::C, param_of(2)};
  if (s.rfind("b_", 0) == 0) return {GenTag::B, param_of(2)};
  throw std::invalid_argument("GeneratorLabel: cannot parse '" + s + "'");
}

PartialInjection build_generator(int n, const GeneratorLabel& label) {
  if (n < 4) throw std::invalid_argument("build_generator: n must be >= 4");
  switch (label.tag) {
    case GenTag::G: return rim_rotation(n);
    case GenTag::H: return rim_reflection(n);
    case GenTag::E: return rim_e(n);
    case GenTag::Ei: {
      if (label.param < 1 || label.param > n) {
        throw std::invalid_argument("build_generator: e_i needs 1 <= i <= n");
      }
      std::vector<PartialInjection::Pair> p;
      for (int i = 1; i <= n; ++i) {
        if (i != label.param) p.emplace_back(i, i);
      }
      return {Ambient::rim(n), std::move(p)};
    }
    case GenTag::C:
      if (label.param < 1 || label.param > cj_max(n)) {
        throw std::invalid_argument("build_generator: c_j needs 1 <= j <= floor(n/2)-2");
      }
      return rim_cj(n, label.param);
    case GenTag::G0: return adjoin_hub_fixed(rim_rotation(n));
    case GenTag::H0: return adjoin_hub_fixed(rim_reflection(n));
    case GenTag::E0: return adjoin_hub_fixed(rim_e(n));
    case GenTag::B:
      if (label.param < 1 || label.param > cj_max(n)) {
        throw std::invalid_argument("build_generator: b_j needs 1 <= j <= floor(n/2)-2");
      }
      return adjoin_hub_fixed(rim_cj(n, label.param));
    case GenTag::Iota: {
      std::vector<PartialInjection::Pair> p;
      for (int i = 1; i <= n; ++i) p.emplace_back(i, i);
      return {Ambient::with_hub(n), std::move(p)};
    }
    case GenTag::Z: {
      std::vector<PartialInjection::Pair> p{{0, 1}, {1, 0}, {2, 2}, {n, n}};
      return {Ambient::with_hub(n), std::move(p)};
    }
  }
  throw std::invalid_argument("build_generator: unknown label");
}

namespace {

std::vector<LabeledGenerator> build_set(int n, const std::vector<GeneratorLabel>& labels) {
  std::vector<LabeledGenerator> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back({l, build_generator(n, l)});
  return out;
}

}  // namespace

std::vector<LabeledGenerator> genset_minus(int n) {
  std::vector<GeneratorLabel> ls{{GenTag::G}, {GenTag::H}, {GenTag::E}};
  for (int j = 1; j <= cj_max(n); ++j) ls.push_back({GenTag::C, j});
  return build_set(n, ls);
}

std::vector<LabeledGenerator> genset_plus(int n) {
  std::vector<GeneratorLabel> ls{{GenTag::G0}, {GenTag::H0}, {GenTag::E0}};
  for (int j = 1; j <= cj_max(n); ++j) ls.push_back({GenTag::B, j});
  return build_set(n, ls);
}

std::vector<LabeledGenerator> genset_union(int n) {
  auto out = genset_plus(n);
  out.push_back({{GenTag::Iota}, build_generator(n, {GenTag::Iota})});
  return out;
}

std::vector<LabeledGenerator> genset_full(int n) {
  if (n == 4) {
    return build_set(4, {{GenTag::G0}, {GenTag::H0}, {GenTag::Iota}, {GenTag::Z}});
  }
  auto out = genset_union(n);
  out.push_back({{GenTag::Z}, build_generator(n, {GenTag::Z})});
  return out;
}

}  // namespace dpw
