#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glsuper/errors.hpp"
#include "glsuper/generator.hpp"
#include "glsuper/sparse.hpp"

namespace glsuper {

// Common shape of every module in the library: a set of generators acted on
// directly by closed formulas, and a canonical bracketing that expresses every
// other generator as a supercommutator of two generators closer to the base.
template <class Key>
class Representation {
 public:
  using Vector = SparseVector<Key>;

  virtual ~Representation() = default;

  virtual bool in_range(const GeneratorId& gen) const = 0;
  virtual bool is_base(const GeneratorId& gen) const = 0;
  virtual Vector act_base(const GeneratorId& gen, const Key& t) const = 0;
  // gen = [first, second] (supercommutator).
  virtual std::pair<GeneratorId, GeneratorId> split(const GeneratorId& gen) const = 0;

  Vector act(const GeneratorId& gen, const Key& t) const {
    if (!in_range(gen)) throw Error(ErrorCode::IndexOutOfRange, gen.name());
    if (is_base(gen)) return act_base(gen, t);
    auto [a, b] = split(gen);
    Vector out = act(a, act(b, t));
    RadicalScalar sign(Rational(a.odd() && b.odd() ? 1 : -1));
    out.add_scaled(act(b, act(a, t)), sign);
    return out;
  }

  Vector act(const GeneratorId& gen, const Vector& v) const {
    Vector out;
    for (const auto& [t, c] : v) out.add_scaled(act(gen, t), c);
    return out;
  }
};

template <class Key, class IdFn>
SparseMatrix matrix_of(const Representation<Key>& rep, const GeneratorId& gen, const std::vector<Key>& basis,
                       IdFn&& id) {
  SparseMatrix m;
  m.dim = basis.size();
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(basis[i], i);
    m.order.push_back(id(basis[i]));
  }
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& [t, c] : rep.act(gen, basis[col])) {
      auto it = index.find(t);
      if (it == index.end()) throw Error(ErrorCode::InvalidTable, "image leaves the enumerated basis");
      m.entries.emplace_back(it->second, col, c);
    }
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const auto& x, const auto& y) {
    return std::make_pair(std::get<0>(x), std::get<1>(x)) < std::make_pair(std::get<0>(y), std::get<1>(y));
  });
  return m;
}

}  // namespace glsuper
