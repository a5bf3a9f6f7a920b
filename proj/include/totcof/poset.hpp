#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace totcof {

/// Default cap on poset size; overridden by GAMMA_MAX_ELEMENTS.
inline constexpr std::size_t kDefaultMaxElements = 512;
std::size_t max_poset_elements();
void set_max_poset_elements(std::size_t cap);

using Chain = std::vector<std::uint32_t>;

/// Finite poset on labelled elements.
///
/// Element order is insertion order and fixes every basis built downstream.
/// The strict order is stored transitively closed as one bitset row per
/// element.
class Poset {
 public:
  Poset() = default;

  /// `relations` may be covers or any generating set of strict relations;
  /// the closure is computed and cycles are rejected.
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& relations);
  static Poset from_index_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t require(const std::string& label) const;

  bool less(std::size_t x, std::size_t y) const {
    return (rows_[x][y >> 6] >> (y & 63)) & 1u;
  }
  bool leq(std::size_t x, std::size_t y) const { return x == y || less(x, y); }

  /// Pairs x < y with nothing strictly between, in lexicographic index order.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;
  std::vector<std::size_t> upper_covers(std::size_t x) const;

  /// Full sub-poset on the given (ascending) element indices.
  Poset induced(const std::vector<std::size_t>& subset) const;

  /// Largest p admitting a strict chain x_0 < ... < x_p; -1 for the empty poset.
  int longest_chain_length() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Membership mask over a poset's elements.
using ElementMask = std::vector<bool>;

ElementMask mask_from_indices(std::size_t n, const std::vector<std::size_t>& indices);
std::vector<std::size_t> indices_from_mask(const ElementMask& mask);

/// Ambient poset with a distinguished order ideal.
struct PosetPair {
  Poset ambient;
  ElementMask ideal;
  /// Dimension m of the ball for generated ball pairs.
  std::optional<int> ball_dimension;

  PosetPair() = default;
  /// Checks that the ideal is downward closed.
  PosetPair(Poset ambient, ElementMask ideal, std::optional<int> ball_dimension = std::nullopt);

  bool in_ideal(std::size_t x) const { return ideal[x]; }
  std::vector<std::size_t> ideal_indices() const { return indices_from_mask(ideal); }
  std::vector<std::size_t> outside_indices() const;
};

/// The sub-poset C^F = { G : not F <= G } as a mask on C.
ElementMask complement_star_mask(const Poset& c, std::size_t f);
Poset complement_star(const Poset& c, const std::string& f);

bool is_order_ideal(const Poset& c, const ElementMask& d);
/// First violating pair (x, y) with x <= y, y in D, x not in D.
std::optional<std::pair<std::size_t, std::size_t>> order_ideal_violation(const Poset& c, const ElementMask& d);

struct ChainBasis {
  int dimension = 0;
  std::vector<Chain> chains;
};

/// Strict chains x_0 < ... < x_p in lexicographic index order, optionally
/// restricted to a sub-poset.
ChainBasis strict_chains(const Poset& p, int dimension, const ElementMask* within = nullptr);
/// All strict chains grouped by dimension 0..longest.
std::vector<ChainBasis> all_strict_chains(const Poset& p, const ElementMask* within = nullptr);

std::string chain_label(const Poset& p, const Chain& chain);

// Generators for face posets of polytopal balls. Each returns the face poset
// with the boundary faces as ideal and records the ball dimension.
PosetPair simplex_pair(int n);
PosetPair cube_pair(int n);
PosetPair prism_pair(const PosetPair& a, const PosetPair& b);
PosetPair cone_pair(const PosetPair& a);
PosetPair barycentric_subdivision_pair(const PosetPair& a);
/// The ideal of a pair as a poset on its own, with empty ideal.
PosetPair boundary_pair(const PosetPair& a);

/// Parses generator specs:
///   simplex:N | cube:N | prism(G,G) | cone(G) | sd(G), optionally followed
///   by "-boundary".
PosetPair generate_pair(const std::string& spec);

}  // namespace totcof
