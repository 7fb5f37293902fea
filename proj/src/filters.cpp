#include "finconv/filters.hpp"

#include <cassert>

namespace finconv {

FiniteFilter::FiniteFilter(Carrier carrier, PointSet core) : carrier_(std::move(carrier)), core_(std::move(core)) {
  if (core_.universe() != carrier_.size()) throw PreconditionError("filter core is not a subset of its carrier");
  if (core_.empty()) throw PreconditionError("improper filter: empty core");
}

FiniteFilter FiniteFilter::principal(const Carrier& carrier, std::size_t point) {
  if (point >= carrier.size()) throw PreconditionError("principal ultrafilter at a point outside the carrier");
  return FiniteFilter(carrier, PointSet::singleton(carrier.size(), point));
}

FiniteFilter FiniteFilter::trivial(const Carrier& carrier) {
  return FiniteFilter(carrier, PointSet::full(carrier.size()));
}

bool FiniteFilter::is_coarser_than(const FiniteFilter& other) const {
  return carrier_ == other.carrier_ && other.core_.is_subset_of(core_);
}

FiniteFilter pushforward(const FiniteFunction& f, const FiniteFilter& filter) {
  if (!(f.domain() == filter.carrier())) throw PreconditionError("pushforward: filter carrier is not the domain");
  FiniteFilter out(f.codomain(), f.image_of(filter.core()));
  // f∗F = {S | f⁻¹(S) ∈ F}: the image of the core is the least such S.
  assert(filter.contains(f.preimage_of(out.core())));
  return out;
}

std::optional<FiniteFilter> pullback(const FiniteFunction& f, const FiniteFilter& filter) {
  if (!(f.codomain() == filter.carrier())) throw PreconditionError("pullback: filter carrier is not the codomain");
  PointSet pre = f.preimage_of(filter.core());
  if (pre.empty()) return std::nullopt;
  return FiniteFilter(f.domain(), std::move(pre));
}

FiniteFilter filter_product(const FiniteFilter& f, const FiniteFilter& g) {
  const std::size_t m = g.carrier().size();
  Carrier prod = product_carrier({f.carrier(), g.carrier()});
  PointSet core(prod.size());
  for (auto a : f.core().members()) {
    for (auto b : g.core().members()) core.set(a * m + b);
  }
  return FiniteFilter(std::move(prod), std::move(core));
}

}  // namespace finconv
