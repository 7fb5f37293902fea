#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finconv/spaces.hpp"

namespace finconv {

using Assignment = std::vector<std::size_t>;

/// Backtracking search over continuous maps X → Y.
///
/// `domains[x]` restricts the candidate images of x (pass an empty vector
/// for no restriction). Points are assigned in descending-degree order and
/// each assignment is checked against the already assigned neighbours.
/// `value_order`, when nonempty, is the order in which codomain points are
/// tried. Maps are visited in search order; return false from `visit` to
/// stop early.
void search_continuous_maps(const PseudoSpace& x, const PseudoSpace& y, const std::vector<PointSet>& domains,
                            const std::function<bool(const Assignment&)>& visit,
                            std::span<const std::size_t> value_order = {});

/// All continuous maps X → Y in lexicographic order of their tables.
std::vector<Assignment> continuous_maps(const PseudoSpace& x, const PseudoSpace& y);

/// Label of a map in an exponential: "[f(p0)|f(p1)|...]".
std::string map_label(const PseudoSpace& y, const Assignment& f);

/// The exponential object Y^X. Points are the continuous maps in canonical
/// order; g → f iff every edge a → x of X maps to an edge g(a) → f(x) of Y.
class MapSpace {
 public:
  MapSpace(PseudoSpace base, PseudoSpace target, std::vector<Assignment> maps);

  const PseudoSpace& base() const { return base_; }
  const PseudoSpace& target() const { return target_; }
  const std::vector<Assignment>& maps() const { return maps_; }
  const PseudoSpace& structure() const { return structure_; }
  std::optional<std::size_t> index_of(const Assignment& f) const;

  /// The edge rule, applicable to any pair of assignments.
  static bool edge(const PseudoSpace& base, const PseudoSpace& target, const Assignment& g, const Assignment& f);

 private:
  PseudoSpace base_;
  PseudoSpace target_;
  std::vector<Assignment> maps_;
  std::map<Assignment, std::size_t> index_;
  PseudoSpace structure_;
};

MapSpace exponential(const PseudoSpace& x, const PseudoSpace& y);
/// Subspace of the exponential on basepoint-preserving maps.
MapSpace pointed_map_space(const PointedSpace& x, const PointedSpace& y);

/// ev: Y^X × X → Y, (f, x) ↦ f(x).
SpaceMap evaluation_map(const MapSpace& e);

/// ĥ: Z → Y^X with ĥ(z)(x) = h(z, x). `h` must be a continuous map
/// Z × X → Y where X = e.base(), Y = e.target().
SpaceMap curry(const SpaceMap& h, const PseudoSpace& z, const MapSpace& e);
SpaceMap curry(const SpaceMap& h, const PseudoSpace& z, const PseudoSpace& x);
/// Inverse of curry: k: Z → Y^X becomes Z × X → Y.
SpaceMap uncurry(const SpaceMap& k, const MapSpace& e);

struct Basepoints {
  std::size_t dom = 0;
  std::size_t cod = 0;
};

/// Thrown when a homotopy search would exceed its exploration budget.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f ≃ g: f and g lie in one weak component of the (pointed) map space.
/// The component is explored lazily from f; throws SearchLimitExceeded if
/// more than `limit` maps would have to be visited.
bool are_homotopic(const SpaceMap& f, const SpaceMap& g, std::optional<Basepoints> pointed = std::nullopt,
                   std::size_t limit = 200000);

/// Per-clause outcome of the H-group check.
struct HGroupReport {
  bool right_unit = false;     // x ↦ x ∧ x₀ ≃ id
  bool left_unit = false;      // x ↦ x₀ ∧ x ≃ id
  bool right_inverse = false;  // x ↦ x ∧ σ(x) ≃ const
  bool left_inverse = false;   // x ↦ σ(x) ∧ x ≃ const
  bool associative = false;    // (x ∧ x') ∧ x'' ≃ x ∧ (x' ∧ x'')

  bool ok() const { return right_unit && left_unit && right_inverse && left_inverse && associative; }
};

/// `wedge`: X × X → X and `sigma`: X → X, both continuous and pointed.
HGroupReport is_h_group(const PointedSpace& x, const SpaceMap& wedge, const SpaceMap& sigma);

}  // namespace finconv
