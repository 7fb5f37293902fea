#include "finconv/bitset.hpp"

#include <algorithm>
#include <bit>

namespace finconv {

namespace {

// Trailing bits beyond the universe are kept at zero so defaulted equality works.
void mask_tail(std::vector<std::uint64_t>& words, std::size_t universe) {
  if (universe % 64 != 0 && !words.empty()) {
    words.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  }
}

}  // namespace

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  mask_tail(s.words_, universe);
  return s;
}

PointSet PointSet::singleton(std::size_t universe, std::size_t element) {
  PointSet s(universe);
  s.set(element);
  return s;
}

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PointSet::is_subset_of(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet PointSet::complement() const {
  PointSet s = *this;
  for (auto& w : s.words_) w = ~w;
  mask_tail(s.words_, universe_);
  return s;
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    auto w = words_[wi];
    while (w) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool operator<(const PointSet& a, const PointSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  return a.members() < b.members();
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) r.set(a, x);
  }
  return r;
}

PointSet Relation::successors(std::size_t a) const {
  PointSet s(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    if (test(a, x)) s.set(x);
  }
  return s;
}

PointSet Relation::predecessors(std::size_t x) const {
  PointSet s(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    if (test(a, x)) s.set(a);
  }
  return s;
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!test(i, i)) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  // a->b and b->x must give a->x: row(b) must be contained in row(a) whenever a->b.
  for (std::size_t a = 0; a < n_; ++a) {
    const std::uint64_t* ra = &words_[a * stride_];
    for (std::size_t b = 0; b < n_; ++b) {
      if (!test(a, b)) continue;
      const std::uint64_t* rb = &words_[b * stride_];
      for (std::size_t w = 0; w < stride_; ++w) {
        if (rb[w] & ~ra[w]) return false;
      }
    }
  }
  return true;
}

bool Relation::is_subset_of(const Relation& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Relation Relation::closure() const {
  Relation r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.set(i, i);
  for (std::size_t k = 0; k < n_; ++k) {
    const std::uint64_t* rk = &r.words_[k * stride_];
    for (std::size_t a = 0; a < n_; ++a) {
      if (!r.test(a, k)) continue;
      std::uint64_t* ra = &r.words_[a * stride_];
      for (std::size_t w = 0; w < stride_; ++w) ra[w] |= rk[w];
    }
  }
  return r;
}

Relation Relation::transpose() const {
  Relation t(n_);
  for_each([&](std::size_t a, std::size_t x) { t.set(x, a); });
  return t;
}

Relation& Relation::operator|=(const Relation& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

void Relation::for_each(const std::function<void(std::size_t, std::size_t)>& fn) const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t wi = 0; wi < stride_; ++wi) {
      auto w = words_[a * stride_ + wi];
      while (w) {
        fn(a, wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
}

}  // namespace finconv
