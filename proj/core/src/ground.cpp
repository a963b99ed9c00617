#include "exchci/ground.hpp"

#include <algorithm>
#include <stdexcept>

namespace exchci {

bool lex_less(VarSet a, VarSet b) {
  // Compare as sorted element lists. The first differing element decides;
  // a proper prefix is smaller.
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

Dyad::Dyad(int a, int b) {
  if (a < 1 || b < 1 || a == b)
    throw std::invalid_argument("dyad needs two distinct nodes >= 1");
  i = std::min(a, b);
  j = std::max(a, b);
}

std::string Dyad::to_string() const {
  return std::to_string(i) + "-" + std::to_string(j);
}

std::vector<Dyad> dyad_universe(int n) {
  if (n < 1) throw std::invalid_argument("node count must be >= 1");
  std::vector<Dyad> out;
  out.reserve(std::size_t(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

GroundSet GroundSet::vector_of(int n) {
  if (n < 1) throw std::invalid_argument("vector ground needs n >= 1");
  if (n > kMaxElements) throw std::length_error("vector ground capped at 32 variables");
  return GroundSet(GroundKind::Vector, n, {});
}

GroundSet GroundSet::network_on(int n) {
  if (n < 1) throw std::invalid_argument("network ground needs n >= 1");
  if (n > 8) throw std::length_error("network ground capped at 8 nodes (28 dyads)");
  return GroundSet(GroundKind::Network, n, dyad_universe(n));
}

VarSet GroundSet::all() const {
  int s = size();
  return VarSet::of_bits(s == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << s) - 1);
}

Dyad GroundSet::dyad_at(int e) const {
  if (kind_ != GroundKind::Network) throw std::invalid_argument("not a network ground");
  if (e < 0 || e >= int(dyads_.size())) throw std::invalid_argument("element out of range");
  return dyads_[e];
}

int GroundSet::index_of(const Dyad& d) const {
  if (kind_ != GroundKind::Network) throw std::invalid_argument("not a network ground");
  if (d.j > n_) throw std::invalid_argument("dyad node out of range");
  // dyads are stored lexicographically
  return (d.i - 1) * (2 * n_ - d.i) / 2 + (d.j - d.i - 1);
}

std::string GroundSet::element_name(int e) const {
  if (kind_ == GroundKind::Vector) return std::to_string(e + 1);
  return dyads_[e].to_string();
}

std::optional<int> GroundSet::parse_element(std::string_view token) const {
  auto parse_int = [](std::string_view t) -> std::optional<int> {
    if (t.empty() || t.size() > 9) return std::nullopt;
    int v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (kind_ == GroundKind::Vector) {
    auto v = parse_int(token);
    if (!v || *v < 1 || *v > n_) return std::nullopt;
    return *v - 1;
  }
  auto dash = token.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto a = parse_int(token.substr(0, dash));
  auto b = parse_int(token.substr(dash + 1));
  if (!a || !b || *a < 1 || *b < 1 || *a == *b || *a > n_ || *b > n_) return std::nullopt;
  return index_of(Dyad(*a, *b));
}

std::string GroundSet::set_name(VarSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ",";
    first = false;
    out += element_name(e);
  });
  out += "}";
  return out;
}

NodePermutation NodePermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
  std::vector<int> m(n);
  for (int k = 0; k < n; ++k) m[k] = k + 1;
  return NodePermutation(std::move(m));
}

NodePermutation NodePermutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("node out of range");
  std::swap(p.map_[a - 1], p.map_[b - 1]);
  return p;
}

NodePermutation NodePermutation::rotation(int n) {
  auto p = identity(n);
  for (int k = 0; k < n; ++k) p.map_[k] = k + 2 > n ? 1 : k + 2;
  return p;
}

NodePermutation NodePermutation::of_map(std::vector<int> image_of) {
  int n = int(image_of.size());
  if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
  std::vector<bool> seen(n, false);
  for (int v : image_of) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("not a bijection of 1..n");
    seen[v - 1] = true;
  }
  return NodePermutation(std::move(image_of));
}

NodePermutation NodePermutation::then(const NodePermutation& next) const {
  if (size() != next.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> m(map_.size());
  for (std::size_t k = 0; k < map_.size(); ++k) m[k] = next.map_[map_[k] - 1];
  return NodePermutation(std::move(m));
}

NodePermutation NodePermutation::inverse() const {
  std::vector<int> m(map_.size());
  for (std::size_t k = 0; k < map_.size(); ++k) m[map_[k] - 1] = int(k) + 1;
  return NodePermutation(std::move(m));
}

std::vector<int> element_permutation(const GroundSet& g, const NodePermutation& p) {
  if (p.size() != g.nodes())
    throw std::invalid_argument("permutation size does not match ground");
  std::vector<int> out(g.size());
  if (g.kind() == GroundKind::Vector) {
    for (int e = 0; e < g.size(); ++e) out[e] = p(e + 1) - 1;
  } else {
    for (int e = 0; e < g.size(); ++e) {
      Dyad d = g.dyad_at(e);
      out[e] = g.index_of(Dyad(p(d.i), p(d.j)));
    }
  }
  return out;
}

VarSet apply_elements(const std::vector<int>& element_perm, VarSet s) {
  VarSet out;
  s.for_each([&](int e) { out = out.with(element_perm[e]); });
  return out;
}

VarSet act(const GroundSet& g, const NodePermutation& p, VarSet s) {
  return apply_elements(element_permutation(g, p), s);
}

}  // namespace exchci
