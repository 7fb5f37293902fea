#pragma once

#include <optional>

#include "finconv/carrier.hpp"

namespace finconv {

/// A proper filter on a finite carrier. On a finite set every filter is
/// the family of supersets of a unique nonempty set, its core, so the core
/// is the whole representation: S is a member iff S ⊇ core.
class FiniteFilter {
 public:
  /// Throws PreconditionError for an empty core or one outside the carrier.
  FiniteFilter(Carrier carrier, PointSet core);

  /// The principal ultrafilter at `point`.
  static FiniteFilter principal(const Carrier& carrier, std::size_t point);
  /// The trivial filter {carrier}.
  static FiniteFilter trivial(const Carrier& carrier);

  const Carrier& carrier() const { return carrier_; }
  const PointSet& core() const { return core_; }

  bool contains(const PointSet& s) const { return core_.is_subset_of(s); }
  bool is_ultrafilter() const { return core_.count() == 1; }
  /// Filter inclusion as families of sets: this ⊆ other iff core(other) ⊆ core(this).
  bool is_coarser_than(const FiniteFilter& other) const;

  friend bool operator==(const FiniteFilter&, const FiniteFilter&) = default;

 private:
  Carrier carrier_;
  PointSet core_;
};

inline FiniteFilter filter_from_core(const Carrier& carrier, const PointSet& core) {
  return FiniteFilter(carrier, core);
}

/// f∗F, the filter generated by the images of members of F.
FiniteFilter pushforward(const FiniteFunction& f, const FiniteFilter& filter);

/// f*F, generated by preimages of members; empty when some member has an
/// empty preimage (equivalently when the core does).
std::optional<FiniteFilter> pullback(const FiniteFunction& f, const FiniteFilter& filter);

/// F × G on the product carrier (see product_carrier), core = core(F) × core(G).
FiniteFilter filter_product(const FiniteFilter& f, const FiniteFilter& g);

}  // namespace finconv
