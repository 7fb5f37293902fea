#pragma once

#include <string>
#include <vector>

#include "finconv/spaces.hpp"

namespace finconv {

/// A finite group (explicit tables) together with a convergence structure
/// on its underlying set. No continuity is implied by the type.
class ConvergenceGroup {
 public:
  /// Validates closure, associativity, the unit and the inverses; throws
  /// PreconditionError naming the first failed axiom.
  ConvergenceGroup(PseudoSpace space, std::size_t unit, std::vector<std::size_t> mult, std::vector<std::size_t> inv);
  /// Derives the unit and the inverse table from a multiplication table.
  static ConvergenceGroup from_table(PseudoSpace space, std::vector<std::size_t> mult);

  const PseudoSpace& space() const { return space_; }
  std::size_t order() const { return space_.size(); }
  std::size_t unit() const { return unit_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  const std::vector<std::size_t>& mult_table() const { return mult_; }
  const std::vector<std::size_t>& inv_table() const { return inv_; }

  /// Same group, different structure.
  ConvergenceGroup with_structure(const Relation& conv) const;

  SpaceMap multiplication_map() const;  // space × space → space
  SpaceMap inversion_map() const;

  friend bool operator==(const ConvergenceGroup&, const ConvergenceGroup&) = default;

 private:
  PseudoSpace space_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inv_;
};

/// Multiplication (on the product structure) and inversion are continuous.
bool is_pstop_group(const ConvergenceGroup& g);
/// Topological space, continuous inversion, continuous left and right translations.
bool is_quasitop_group(const ConvergenceGroup& g);
/// Topological space and is_pstop_group.
bool is_top_group(const ConvergenceGroup& g);

/// Checks the group axioms on raw tables without throwing.
bool satisfies_group_axioms(std::size_t order, std::size_t unit, const std::vector<std::size_t>& mult,
                            const std::vector<std::size_t>& inv);

/// Cyclic group ℤ/n with labels "0".."n-1" and the given structure.
ConvergenceGroup cyclic_group(std::size_t n, const Relation& conv);
/// One representative of every isomorphism class of groups of order ≤ 6
/// (ℤ1, ℤ2, ℤ3, ℤ4, ℤ2×ℤ2, ℤ5, ℤ6, S3), each with the discrete structure
/// and unit labelled "0".
std::vector<ConvergenceGroup> small_groups();
/// Human-readable names matching small_groups().
std::vector<std::string> small_group_names();

/// Least structure containing `seed` for which multiplication and
/// inversion are continuous: the subgroup of G × G generated by the
/// diagonal and the seed edges.
Relation compatible_closure(const ConvergenceGroup& g, const Relation& seed);

}  // namespace finconv
