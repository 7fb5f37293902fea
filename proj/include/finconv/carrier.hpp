#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "finconv/bitset.hpp"

namespace finconv {

/// Raised when an operation's precondition is violated by its inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite ordered label set. Copies share storage; label order is the
/// canonical order for every enumeration and serialization.
class Carrier {
 public:
  Carrier();
  explicit Carrier(std::vector<std::string> labels);

  /// Carrier with labels "0", "1", ..., "n-1".
  static Carrier numbered(std::size_t n);

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return size() == 0; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<std::size_t> find(const std::string& label) const;
  /// Index of a label; throws PreconditionError for unknown labels.
  std::size_t index_of(const std::string& label) const;

  PointSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const PointSet& set) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// A total function between two carriers, stored as an index table.
class FiniteFunction {
 public:
  FiniteFunction() = default;
  FiniteFunction(Carrier domain, Carrier codomain, std::vector<std::size_t> image);

  static FiniteFunction identity(const Carrier& c);
  static FiniteFunction constant(const Carrier& domain, const Carrier& codomain, std::size_t value);

  const Carrier& domain() const { return dom_; }
  const Carrier& codomain() const { return cod_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  const std::vector<std::size_t>& table() const { return image_; }

  PointSet image_of(const PointSet& s) const;
  PointSet preimage_of(const PointSet& s) const;
  bool is_surjective() const;

  /// (this ∘ inner): x ↦ this(inner(x)).
  FiniteFunction after(const FiniteFunction& inner) const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

 private:
  Carrier dom_;
  Carrier cod_;
  std::vector<std::size_t> image_;
};

/// Label of a tuple point in a product carrier: "(a,b,...)".
std::string tuple_label(const std::vector<std::string>& parts);

/// Cartesian product of carriers in lexicographic (row-major) index order.
Carrier product_carrier(const std::vector<Carrier>& factors);

}  // namespace finconv
