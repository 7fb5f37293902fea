#pragma once

#include <optional>
#include <vector>

#include "finconv/spaces.hpp"

namespace finconv {

/// The path-component quotient of a finite pseudospace.
///
/// Path components of a finite pseudospace are the weak components of its
/// convergence relation (docs/finite-model.md). The quotient carries the
/// final structure along the projection; since an edge between two classes
/// would merge them, that structure is always discrete.
struct ComponentQuotient {
  PseudoSpace source;
  std::vector<std::vector<std::size_t>> classes;  // ordered by least member
  SpaceMap projection;                            // source → quotient
  PseudoSpace quotient;                           // points labelled "[least member]"
};

ComponentQuotient path_components(const PseudoSpace& space);

/// πC f: the map induced on component quotients by a continuous f.
/// Throws PreconditionError when f is not continuous.
SpaceMap induced_component_map(const SpaceMap& f, const ComponentQuotient& from, const ComponentQuotient& to);

/// Final topology along q from a topological X, computed through open sets:
/// V is open iff q⁻¹(V) is open in X, and c → y iff every open V ∋ y holds c.
PseudoSpace quotient_topology(const PseudoSpace& x, const FiniteFunction& q);

enum class BiquotientMethod {
  MinimalOpenSets,  // U_y ⊆ ∪ { f(U_x) | f(x) = y }
  CoverEnumeration  // every open cover of every fibre, literally (n ≤ 4 intended)
};

/// Biquotient test for a continuous surjection between topological spaces.
bool is_biquotient(const SpaceMap& f, BiquotientMethod method = BiquotientMethod::MinimalOpenSets);

struct KentVerdict {
  PseudoSpace final_pseudotopology;
  PseudoSpace final_topology;
  bool structures_coincide = false;
  bool biquotient = false;

  bool agrees() const { return structures_coincide == biquotient; }
};

/// Compares the final pseudotopology and the final topology along q, and
/// decides whether q onto the final topology is biquotient.
KentVerdict check_kent(const PseudoSpace& x, const FiniteFunction& q);

/// πC(X × Y) ≅ πC X × πC Y through ([x, y]) ↦ ([x], [y]).
bool check_pc_product(const PseudoSpace& x, const PseudoSpace& y);

/// R(πC X) equals the quotient topology on the components of a topological X.
bool check_pc_lift(const PseudoSpace& x);

struct InducedMultiplication {
  ComponentQuotient components;
  SpaceMap mu;  // πC X × πC X → πC X
  bool continuous = false;
};

/// μ([a], [b]) = [m(a, b)] for a continuous m: X × X → X.
InducedMultiplication induced_multiplication(const PseudoSpace& x, const SpaceMap& m);

}  // namespace finconv
