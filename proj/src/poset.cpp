#include "totcof/poset.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <set>

#include "totcof/error.hpp"

namespace totcof {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("GAMMA_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxElements;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t max_poset_elements() { return cap_storage().load(); }
void set_max_poset_elements(std::size_t cap) { cap_storage().store(cap == 0 ? kDefaultMaxElements : cap); }

Poset Poset::from_index_relations(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t n = elements.size();
  if (n > max_poset_elements()) {
    fail(ErrorCode::limit, "poset has " + std::to_string(n) + " elements, cap is " +
                               std::to_string(max_poset_elements()) + " (GAMMA_MAX_ELEMENTS)");
  }
  Poset p;
  p.labels_ = std::move(elements);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second)
      fail(ErrorCode::input, "duplicate element label '" + p.labels_[i] + "'");
  }
  const std::size_t words = (n + 63) / 64;
  p.rows_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (const auto& [x, y] : relations) {
    if (x >= n || y >= n) fail(ErrorCode::input, "relation refers to an element index out of range");
    p.rows_[x][y >> 6] |= std::uint64_t{1} << (y & 63);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.less(i, k))
        for (std::size_t w = 0; w < words; ++w) p.rows_[i][w] |= p.rows_[k][w];
  for (std::size_t i = 0; i < n; ++i)
    if (p.less(i, i)) fail(ErrorCode::not_a_poset, "order relation has a cycle through '" + p.labels_[i] + "'");
  return p;
}

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second)
      fail(ErrorCode::input, "duplicate element label '" + elements[i] + "'");
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  rel.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(ErrorCode::input, "relation names unknown element '" + a + "'");
    if (ib == index.end()) fail(ErrorCode::input, "relation names unknown element '" + b + "'");
    rel.emplace_back(ia->second, ib->second);
  }
  return from_index_relations(std::move(elements), rel);
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::require(const std::string& label) const {
  auto i = index_of(label);
  if (!i) fail(ErrorCode::input, "element '" + label + "' is not in the poset");
  return *i;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y : upper_covers(x)) out.emplace_back(x, y);
  return out;
}

std::vector<std::size_t> Poset::upper_covers(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y) {
    if (!less(x, y)) continue;
    bool cover = true;
    for (std::size_t z = 0; z < size() && cover; ++z)
      if (less(x, z) && less(z, y)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

Poset Poset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (std::size_t i : subset) labels.push_back(labels_.at(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (less(subset[a], subset[b])) rel.emplace_back(a, b);
  return from_index_relations(std::move(labels), rel);
}

int Poset::longest_chain_length() const {
  const std::size_t n = size();
  if (n == 0) return -1;
  std::vector<int> height(n, -1);
  std::function<int(std::size_t)> up = [&](std::size_t x) -> int {
    if (height[x] >= 0) return height[x];
    int best = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (less(x, y)) best = std::max(best, 1 + up(y));
    return height[x] = best;
  };
  int best = 0;
  for (std::size_t x = 0; x < n; ++x) best = std::max(best, up(x));
  return best;
}

ElementMask mask_from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
  ElementMask m(n, false);
  for (std::size_t i : indices) {
    if (i >= n) fail(ErrorCode::input, "element index out of range");
    m[i] = true;
  }
  return m;
}

std::vector<std::size_t> indices_from_mask(const ElementMask& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

PosetPair::PosetPair(Poset a, ElementMask d, std::optional<int> m)
    : ambient(std::move(a)), ideal(std::move(d)), ball_dimension(m) {
  if (ideal.size() != ambient.size()) fail(ErrorCode::input, "ideal mask size does not match poset");
  if (auto bad = order_ideal_violation(ambient, ideal)) {
    fail(ErrorCode::validation, "ideal is not downward closed: '" + ambient.label(bad->first) + "' <= '" +
                                    ambient.label(bad->second) + "' but only the latter is in the ideal");
  }
}

std::vector<std::size_t> PosetPair::outside_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ideal.size(); ++i)
    if (!ideal[i]) out.push_back(i);
  return out;
}

ElementMask complement_star_mask(const Poset& c, std::size_t f) {
  if (f >= c.size()) fail(ErrorCode::input, "element index out of range");
  ElementMask m(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) m[g] = !c.leq(f, g);
  return m;
}

Poset complement_star(const Poset& c, const std::string& f) {
  return c.induced(indices_from_mask(complement_star_mask(c, c.require(f))));
}

std::optional<std::pair<std::size_t, std::size_t>> order_ideal_violation(const Poset& c, const ElementMask& d) {
  if (d.size() != c.size()) fail(ErrorCode::input, "subset mask size does not match poset");
  for (std::size_t y = 0; y < c.size(); ++y) {
    if (!d[y]) continue;
    for (std::size_t x = 0; x < c.size(); ++x)
      if (c.less(x, y) && !d[x]) return std::make_pair(x, y);
  }
  return std::nullopt;
}

bool is_order_ideal(const Poset& c, const ElementMask& d) { return !order_ideal_violation(c, d).has_value(); }

namespace {

void extend_chains(const Poset& p, const ElementMask* within, Chain& prefix, std::vector<ChainBasis>& out) {
  const int dim = static_cast<int>(prefix.size()) - 1;
  if (static_cast<int>(out.size()) <= dim) {
    out.resize(static_cast<std::size_t>(dim) + 1);
    out.back().dimension = dim;
  }
  out[static_cast<std::size_t>(dim)].chains.push_back(prefix);
  const std::size_t top = prefix.back();
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (within && !(*within)[y]) continue;
    if (!p.less(top, y)) continue;
    prefix.push_back(static_cast<std::uint32_t>(y));
    extend_chains(p, within, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ChainBasis> all_strict_chains(const Poset& p, const ElementMask* within) {
  std::vector<ChainBasis> out;
  Chain prefix;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (within && !(*within)[x]) continue;
    prefix.assign(1, static_cast<std::uint32_t>(x));
    extend_chains(p, within, prefix, out);
  }
  for (std::size_t d = 0; d < out.size(); ++d) {
    out[d].dimension = static_cast<int>(d);
    std::sort(out[d].chains.begin(), out[d].chains.end());
  }
  return out;
}

ChainBasis strict_chains(const Poset& p, int dimension, const ElementMask* within) {
  ChainBasis basis;
  basis.dimension = dimension;
  if (dimension < 0) return basis;
  auto all = all_strict_chains(p, within);
  if (static_cast<std::size_t>(dimension) < all.size()) basis.chains = std::move(all[dimension].chains);
  return basis;
}

std::string chain_label(const Poset& p, const Chain& chain) {
  std::string s = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += '<';
    s += p.label(chain[i]);
  }
  s += ')';
  return s;
}

// ---------------------------------------------------------------------------
// Generators

PosetPair simplex_pair(int n) {
  if (n < 0 || n > 25) fail(ErrorCode::input, "simplex dimension must be in 0..25");
  const int verts = n + 1;
  if ((std::size_t{1} << verts) - 1 > max_poset_elements()) {
    fail(ErrorCode::limit, "simplex:" + std::to_string(n) + " exceeds the poset size cap");
  }
  std::vector<std::vector<int>> faces;
  for (std::uint32_t bits = 1; bits < (1u << verts); ++bits) {
    std::vector<int> f;
    for (int v = 0; v < verts; ++v)
      if (bits & (1u << v)) f.push_back(v);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::string> labels;
  for (const auto& f : faces) {
    std::string s;
    for (int v : f) s += static_cast<char>('a' + v);
    labels.push_back(s);
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (i != j && std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
        rel.emplace_back(i, j);
  ElementMask ideal(faces.size(), true);
  ideal.back() = false;
  return PosetPair(Poset::from_index_relations(std::move(labels), rel), std::move(ideal), n);
}

PosetPair cube_pair(int n) {
  if (n < 0 || n > 12) fail(ErrorCode::input, "cube dimension must be in 0..12");
  if (n == 0) return simplex_pair(0);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  if (total > max_poset_elements()) fail(ErrorCode::limit, "cube:" + std::to_string(n) + " exceeds the poset size cap");
  // digit order 0 < 1 < * inside each dimension class
  std::vector<std::string> faces;
  for (std::size_t code = 0; code < total; ++code) {
    std::string s(static_cast<std::size_t>(n), '0');
    std::size_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      const std::size_t d = c % 3;
      c /= 3;
      s[static_cast<std::size_t>(i)] = d == 0 ? '0' : d == 1 ? '1' : '*';
    }
    faces.push_back(s);
  }
  auto stars = [](const std::string& s) { return std::count(s.begin(), s.end(), '*'); };
  std::stable_sort(faces.begin(), faces.end(),
                   [&](const std::string& a, const std::string& b) { return stars(a) < stars(b); });
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (i == j) continue;
      bool below = true;
      for (std::size_t k = 0; k < faces[i].size() && below; ++k)
        below = faces[i][k] == faces[j][k] || faces[j][k] == '*';
      if (below) rel.emplace_back(i, j);
    }
  ElementMask ideal(faces.size(), true);
  ideal.back() = false;
  return PosetPair(Poset::from_index_relations(faces, rel), std::move(ideal), n);
}

namespace {

int require_ball(const PosetPair& p, const char* what) {
  if (!p.ball_dimension) fail(ErrorCode::input, std::string(what) + " needs a ball pair operand");
  return *p.ball_dimension;
}

}  // namespace

PosetPair prism_pair(const PosetPair& a, const PosetPair& b) {
  const int m = require_ball(a, "prism") + require_ball(b, "prism");
  const Poset& pa = a.ambient;
  const Poset& pb = b.ambient;
  if (pa.size() * pb.size() > max_poset_elements()) fail(ErrorCode::limit, "prism exceeds the poset size cap");
  std::vector<std::string> labels;
  ElementMask ideal;
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j) {
      labels.push_back("(" + pa.label(i) + "," + pb.label(j) + ")");
      ideal.push_back(a.ideal[i] || b.ideal[j]);
    }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  const std::size_t nb = pb.size();
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y) {
      if (x == y) continue;
      if (pa.leq(x / nb, y / nb) && pb.leq(x % nb, y % nb)) rel.emplace_back(x, y);
    }
  return PosetPair(Poset::from_index_relations(std::move(labels), rel), std::move(ideal), m);
}

PosetPair cone_pair(const PosetPair& a) {
  const int m = require_ball(a, "cone") + 1;
  const Poset& pa = a.ambient;
  const std::size_t n = pa.size();
  std::string apex = "o";
  for (int k = 1; pa.index_of(apex); ++k) apex = "o" + std::to_string(k);
  std::vector<std::string> labels = pa.labels();
  labels.push_back(apex);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(pa.label(i) + "*" + apex);
  const std::size_t apex_index = n;
  auto join = [&](std::size_t i) { return n + 1 + i; };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    rel.emplace_back(apex_index, join(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (pa.less(i, j)) {
        rel.emplace_back(i, j);
        rel.emplace_back(join(i), join(j));
      }
      if (pa.leq(i, j)) rel.emplace_back(i, join(j));
    }
  }
  ElementMask ideal(labels.size(), true);
  for (std::size_t i = 0; i < n; ++i) ideal[join(i)] = a.ideal[i];
  return PosetPair(Poset::from_index_relations(std::move(labels), rel), std::move(ideal), m);
}

PosetPair barycentric_subdivision_pair(const PosetPair& a) {
  const int m = require_ball(a, "sd");
  const Poset& pa = a.ambient;
  std::vector<Chain> chains;
  for (auto& basis : all_strict_chains(pa))
    for (auto& c : basis.chains) chains.push_back(c);
  if (chains.size() > max_poset_elements()) fail(ErrorCode::limit, "subdivision exceeds the poset size cap");
  std::vector<std::string> labels;
  ElementMask ideal;
  for (const auto& c : chains) {
    std::string s = "<";
    bool inside = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += pa.label(c[i]);
      inside = inside && a.ideal[c[i]];
    }
    labels.push_back(s + ">");
    ideal.push_back(inside);
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains.size(); ++j)
      if (chains[i].size() < chains[j].size() &&
          std::includes(chains[j].begin(), chains[j].end(), chains[i].begin(), chains[i].end()))
        rel.emplace_back(i, j);
  return PosetPair(Poset::from_index_relations(std::move(labels), rel), std::move(ideal), m);
}

PosetPair boundary_pair(const PosetPair& a) {
  Poset d = a.ambient.induced(a.ideal_indices());
  ElementMask none(d.size(), false);
  return PosetPair(std::move(d), std::move(none), std::nullopt);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  PosetPair parse() {
    PosetPair p = term();
    if (consume("-boundary")) p = boundary_pair(p);
    if (pos_ != s_.size()) error("unexpected trailing input");
    return p;
  }

 private:
  PosetPair term() {
    if (consume("simplex:")) return simplex_pair(number());
    if (consume("cube:")) return cube_pair(number());
    if (consume("prism(")) {
      PosetPair a = term();
      expect(',');
      PosetPair b = term();
      expect(')');
      return prism_pair(a, b);
    }
    if (consume("cone(")) {
      PosetPair a = term();
      expect(')');
      return cone_pair(a);
    }
    if (consume("sd(")) {
      PosetPair a = term();
      expect(')');
      return barycentric_subdivision_pair(a);
    }
    error("unsupported generator kind");
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a dimension");
    if (pos_ - start > 3) error("dimension out of range");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  bool consume(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::input, "generator spec '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

PosetPair generate_pair(const std::string& spec) { return SpecParser(spec).parse(); }

}  // namespace totcof
