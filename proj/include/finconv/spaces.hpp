#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "finconv/bitset.hpp"
#include "finconv/carrier.hpp"
#include "finconv/filters.hpp"

namespace finconv {

/// A pseudotopology on a finite carrier.
///
/// Every ultrafilter on a finite set is principal, so a pseudotopological
/// structure is exactly a reflexive relation: conv(a, x) means that the
/// principal ultrafilter at a converges to x. The diagonal is always present;
/// constructors add it. See docs/finite-model.md.
class PseudoSpace {
 public:
  PseudoSpace() = default;
  /// `conv` is closed under the diagonal before storing.
  PseudoSpace(Carrier points, Relation conv);

  static PseudoSpace discrete(const Carrier& points);
  static PseudoSpace indiscrete(const Carrier& points);
  /// Builds from labels and an edge list of label pairs (a, x) meaning a → x.
  static PseudoSpace from_edges(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& edges);

  const Carrier& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::string& label(std::size_t i) const { return points_.label(i); }
  const Relation& conv() const { return conv_; }
  bool converges(std::size_t a, std::size_t x) const { return conv_.test(a, x); }

  /// Finite topological spaces are exactly the transitive structures.
  bool is_topological() const { return conv_.is_transitive(); }

  /// Non-diagonal edges in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const PseudoSpace&, const PseudoSpace&) = default;

 private:
  Carrier points_;
  Relation conv_;
};

/// A total function between the carriers of two pseudospaces. Continuity is
/// a predicate; discontinuous maps are representable.
class SpaceMap {
 public:
  SpaceMap() = default;
  SpaceMap(PseudoSpace dom, PseudoSpace cod, std::vector<std::size_t> assignment);
  SpaceMap(PseudoSpace dom, PseudoSpace cod, const FiniteFunction& f);

  static SpaceMap identity(const PseudoSpace& x);
  static SpaceMap constant(const PseudoSpace& dom, const PseudoSpace& cod, std::size_t value);

  const PseudoSpace& dom() const { return dom_; }
  const PseudoSpace& cod() const { return cod_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  FiniteFunction function() const { return FiniteFunction(dom_.points(), cod_.points(), assignment_); }

  /// (this ∘ inner).
  SpaceMap after(const SpaceMap& inner) const;

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  PseudoSpace dom_;
  PseudoSpace cod_;
  std::vector<std::size_t> assignment_;
};

struct PointedSpace {
  PseudoSpace space;
  std::size_t basepoint = 0;

  PointedSpace(PseudoSpace s, std::size_t base);
};

/// F → x: every ultrafilter refining F converges to x, i.e. conv(a, x) for
/// all a in the core.
bool converges(const PseudoSpace& space, const FiniteFilter& filter, std::size_t x);

/// Continuity at x: for every a → x, f(a) → f(x).
bool is_continuous_at(const SpaceMap& f, std::size_t x);
bool is_continuous(const SpaceMap& f);
/// Continuity of a raw function between two structures.
bool is_continuous(const PseudoSpace& dom, const PseudoSpace& cod, const std::vector<std::size_t>& assignment);

/// Greatest structure on `carrier` making every listed map continuous.
PseudoSpace initial_structure(const Carrier& carrier,
                              const std::vector<std::pair<FiniteFunction, PseudoSpace>>& sinks);

/// Least structure on `carrier` making every listed map continuous.
PseudoSpace final_structure(const Carrier& carrier,
                            const std::vector<std::pair<PseudoSpace, FiniteFunction>>& sources);

/// Product along the projections; points are tuples in lexicographic order.
PseudoSpace product(const std::vector<PseudoSpace>& spaces);
PseudoSpace product(const PseudoSpace& a, const PseudoSpace& b);
/// The k-th projection out of product(spaces).
SpaceMap projection(const std::vector<PseudoSpace>& spaces, std::size_t k);
/// Disjoint union; points are labelled "i:label" for the i-th summand.
PseudoSpace coproduct(const std::vector<PseudoSpace>& spaces);
/// Restriction to `subset`, in carrier order. Returns the inclusion too.
PseudoSpace subspace(const PseudoSpace& space, const PointSet& subset);
SpaceMap inclusion(const PseudoSpace& space, const PointSet& subset);
/// Final structure along a surjection; throws PreconditionError otherwise.
PseudoSpace quotient(const PseudoSpace& space, const FiniteFunction& q);

/// The topological reflection R: reflexive-transitive closure of conv.
PseudoSpace reflect_top(const PseudoSpace& space);
/// The epitopological reflection. Every finite epispace is topological, so
/// this coincides with reflect_top on finite carriers.
PseudoSpace reflect_epi(const PseudoSpace& space);
/// The reflection from epispaces to spaces; the identity on finite
/// epispaces. Throws PreconditionError on non-topological input.
PseudoSpace reflect_epi_to_top(const PseudoSpace& space);

/// S is open in R X iff a → x with x ∈ S forces a ∈ S.
bool is_open_in_reflection(const PseudoSpace& space, const PointSet& s);
bool is_closed_in_reflection(const PseudoSpace& space, const PointSet& s);
/// All open sets of R X in increasing (size, members) order.
/// Throws PreconditionError above 24 points.
std::vector<PointSet> open_sets(const PseudoSpace& space);
/// Smallest open set of R X containing x: all a with a →* x.
PointSet minimal_open(const PseudoSpace& space, std::size_t x);

PseudoSpace lattice_meet(const std::vector<PseudoSpace>& structures);
PseudoSpace lattice_join(const std::vector<PseudoSpace>& structures);

/// Surjective, continuous, and the codomain carries the final structure.
bool is_quotient_map(const SpaceMap& f);

/// Isomorphism test by permutation search (intended for n ≤ 8).
bool are_isomorphic(const PseudoSpace& a, const PseudoSpace& b);

}  // namespace finconv
