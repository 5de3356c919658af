#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "glsuper/scalar.hpp"

namespace glsuper {

// A finitely supported module element: table -> coefficient, zeros removed.
template <class Key>
class SparseVector {
 public:
  using Map = std::map<Key, RadicalScalar>;

  SparseVector() = default;

  static SparseVector unit(const Key& k) {
    SparseVector v;
    v.entries_.emplace(k, RadicalScalar(Rational(1)));
    return v;
  }

  void add(const Key& k, const RadicalScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  void add_scaled(const SparseVector& v, const RadicalScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : v.entries_) add(k, x * c);
  }

  RadicalScalar coefficient(const Key& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? RadicalScalar() : it->second;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  typename Map::const_iterator begin() const { return entries_.begin(); }
  typename Map::const_iterator end() const { return entries_.end(); }

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

 private:
  Map entries_;
};

// Matrix of an operator on an ordered basis; column c holds the image of basis[c].
struct SparseMatrix {
  std::size_t dim = 0;
  std::vector<std::string> order;
  std::vector<std::tuple<std::size_t, std::size_t, RadicalScalar>> entries;  // (row, col, value)

  RadicalScalar at(std::size_t row, std::size_t col) const {
    for (const auto& [r, c, v] : entries) {
      if (r == row && c == col) return v;
    }
    return {};
  }
};

}  // namespace glsuper
