#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace finconv {

/// A dynamically sized set of point indices, stored as packed 64-bit words.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, std::size_t element);

  std::size_t universe() const { return universe_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet complement() const;

  /// Indices of members in increasing order.
  std::vector<std::size_t> members() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend bool operator<(const PointSet& a, const PointSet& b);

  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Square boolean matrix; `test(a, x)` is the entry in row a, column x.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), stride_(PointSet::word_count(n)), words_(n * stride_, 0) {}

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t size() const { return n_; }
  bool test(std::size_t a, std::size_t x) const {
    return (words_[a * stride_ + (x >> 6)] >> (x & 63)) & 1u;
  }
  void set(std::size_t a, std::size_t x) { words_[a * stride_ + (x >> 6)] |= std::uint64_t{1} << (x & 63); }
  void reset(std::size_t a, std::size_t x) {
    words_[a * stride_ + (x >> 6)] &= ~(std::uint64_t{1} << (x & 63));
  }

  /// Row a as a point set (successors of a).
  PointSet successors(std::size_t a) const;
  /// Column x as a point set (predecessors of x).
  PointSet predecessors(std::size_t x) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_subset_of(const Relation& other) const;
  std::size_t count() const;

  /// Reflexive-transitive closure (Warshall over packed rows).
  Relation closure() const;
  Relation transpose() const;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);

  /// Calls fn(a, x) for every set entry in row-major order.
  void for_each(const std::function<void(std::size_t, std::size_t)>& fn) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace finconv
