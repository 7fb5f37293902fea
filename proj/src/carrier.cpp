#include "finconv/carrier.hpp"

namespace finconv {

Carrier::Carrier() : Carrier(std::vector<std::string>{}) {}

Carrier::Carrier(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  for (std::size_t i = 0; i < data->labels.size(); ++i) {
    if (!data->index.emplace(data->labels[i], i).second) {
      throw PreconditionError("duplicate point label '" + data->labels[i] + "'");
    }
  }
  data_ = std::move(data);
}

Carrier Carrier::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Carrier(std::move(labels));
}

std::optional<std::size_t> Carrier::find(const std::string& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw PreconditionError("unknown point label '" + label + "'");
}

PointSet Carrier::subset(const std::vector<std::string>& labels) const {
  PointSet s(size());
  for (const auto& l : labels) s.set(index_of(l));
  return s;
}

std::vector<std::string> Carrier::labels_of(const PointSet& set) const {
  std::vector<std::string> out;
  for (auto i : set.members()) out.push_back(label(i));
  return out;
}

FiniteFunction::FiniteFunction(Carrier domain, Carrier codomain, std::vector<std::size_t> image)
    : dom_(std::move(domain)), cod_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != dom_.size()) {
    throw PreconditionError("function table size does not match its domain");
  }
  for (auto y : image_) {
    if (y >= cod_.size()) throw PreconditionError("function value outside its codomain");
  }
}

FiniteFunction FiniteFunction::identity(const Carrier& c) {
  std::vector<std::size_t> t(c.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return FiniteFunction(c, c, std::move(t));
}

FiniteFunction FiniteFunction::constant(const Carrier& domain, const Carrier& codomain, std::size_t value) {
  return FiniteFunction(domain, codomain, std::vector<std::size_t>(domain.size(), value));
}

PointSet FiniteFunction::image_of(const PointSet& s) const {
  PointSet out(cod_.size());
  for (auto x : s.members()) out.set(image_[x]);
  return out;
}

PointSet FiniteFunction::preimage_of(const PointSet& s) const {
  PointSet out(dom_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (s.test(image_[x])) out.set(x);
  }
  return out;
}

bool FiniteFunction::is_surjective() const {
  return image_of(PointSet::full(dom_.size())) == PointSet::full(cod_.size());
}

FiniteFunction FiniteFunction::after(const FiniteFunction& inner) const {
  if (!(inner.cod_ == dom_)) throw PreconditionError("composition of non-composable functions");
  std::vector<std::size_t> t(inner.image_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = image_[inner.image_[x]];
  return FiniteFunction(inner.dom_, cod_, std::move(t));
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

Carrier product_carrier(const std::vector<Carrier>& factors) {
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size();
  std::vector<std::string> labels;
  labels.reserve(total);
  std::vector<std::size_t> digits(factors.size(), 0);
  for (std::size_t p = 0; p < total; ++p) {
    std::vector<std::string> parts;
    parts.reserve(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) parts.push_back(factors[k].label(digits[k]));
    labels.push_back(tuple_label(parts));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digits[k] < factors[k].size()) break;
      digits[k] = 0;
    }
  }
  return Carrier(std::move(labels));
}

}  // namespace finconv
