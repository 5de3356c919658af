#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glsuper/c_rep.hpp"
#include "glsuper/gz_rep.hpp"

namespace glsuper {

struct CheckReport {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string counterexample;  // empty when passing
  std::size_t cases = 0;       // number of individual identities evaluated
};

struct VerifyOptions {
  int index_bound = 3;
  std::uint64_t seed = 7;
  int depth = 6;
  std::size_t samples = 100;
  std::size_t guard = kDefaultEnumerationGuard;
  // Stop a check at its first counterexample instead of counting every failure.
  bool stop_at_first_failure = true;
  ActionOptions action;
};

// Memoizes the action of every generator on every table it meets, including
// the intermediate generators of the canonical bracketing.
template <class Key>
class CachedActor {
 public:
  using Vector = SparseVector<Key>;

  explicit CachedActor(const Representation<Key>& rep) : rep_(rep) {}

  const Vector& act(const GeneratorId& gen, const Key& t) {
    auto key = std::make_pair(gen, t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (!rep_.in_range(gen)) throw Error(ErrorCode::IndexOutOfRange, gen.name());
    Vector out;
    if (rep_.is_base(gen)) {
      out = rep_.act_base(gen, t);
    } else {
      auto [a, b] = rep_.split(gen);
      out = act(a, Vector(act(b, t)));
      RadicalScalar sign(Rational(a.odd() && b.odd() ? 1 : -1));
      out.add_scaled(act(b, Vector(act(a, t))), sign);
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  Vector act(const GeneratorId& gen, const Vector& v) {
    Vector out;
    for (const auto& [t, c] : v) out.add_scaled(act(gen, t), c);
    return out;
  }

  std::size_t size() const { return cache_.size(); }

  // Every (generator, table) pair evaluated so far, in key order.
  std::vector<std::pair<GeneratorId, Key>> visited() const {
    std::vector<std::pair<GeneratorId, Key>> out;
    out.reserve(cache_.size());
    for (const auto& entry : cache_) out.push_back(entry.first);
    return out;
  }

 private:
  const Representation<Key>& rep_;
  std::map<std::pair<GeneratorId, Key>, Vector> cache_;
};

template <class Key>
std::string render_vector(const SparseVector<Key>& v) {
  if (v.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [t, c] : v) {
    if (!first) out += ", ";
    first = false;
    out += "[" + table_id(t) + "]: " + c.to_string();
  }
  return out + "}";
}

// Supercommutator identity on every table and every ordered generator pair:
//   X(Y t) - (-1)^{|X||Y|} Y(X t) = delta_jk E_il t - (-1)^{|X||Y|} delta_il E_kj t.
template <class Key>
CheckReport check_relation_set(const std::string& check, const std::string& instance, CachedActor<Key>& actor,
                               const std::vector<GeneratorId>& gens, const std::vector<Key>& tables,
                               bool stop_at_first_failure) {
  CheckReport report{check, instance, true, "", 0};
  for (const auto& t : tables) {
    for (const auto& x : gens) {
      for (const auto& y : gens) {
        ++report.cases;
        RadicalScalar sign(Rational(x.odd() && y.odd() ? 1 : -1));
        try {
          SparseVector<Key> lhs = actor.act(x, SparseVector<Key>(actor.act(y, t)));
          lhs.add_scaled(actor.act(y, SparseVector<Key>(actor.act(x, t))), sign);
          SparseVector<Key> rhs;
          if (x.j == y.i) rhs.add_scaled(actor.act({x.convention, x.i, y.j}, t), RadicalScalar(Rational(1)));
          if (x.i == y.j) rhs.add_scaled(actor.act({x.convention, y.i, x.j}, t), sign);
          if (lhs == rhs) continue;
          report.pass = false;
          if (report.counterexample.empty()) {
            report.counterexample = "[" + x.name() + ", " + y.name() + "] on [" + table_id(t) +
                                    "]: composed = " + render_vector(lhs) + ", expected = " + render_vector(rhs);
          }
        } catch (const Error& e) {
          report.pass = false;
          if (report.counterexample.empty()) {
            report.counterexample = "[" + x.name() + ", " + y.name() + "] on [" + table_id(t) + "]: " + e.what();
          }
        }
        if (!report.pass && stop_at_first_failure) return report;
      }
    }
  }
  return report;
}

// Deterministic random walks from `start` along the given generators; every
// table visited (including `start`) is returned once, in order of discovery.
template <class Key>
std::vector<Key> sample_walks(CachedActor<Key>& actor, const Key& start, const std::vector<GeneratorId>& gens,
                              const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<Key> out{start};
  std::set<Key> seen{start};
  const std::size_t max_walks = 50 * opts.samples + 50;
  for (std::size_t walk = 0; walk < max_walks && out.size() < opts.samples; ++walk) {
    Key t = start;
    for (int step = 0; step < opts.depth && out.size() < opts.samples; ++step) {
      const auto& gen = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
      const auto& v = actor.act(gen, t);
      if (v.empty()) continue;
      auto it = v.begin();
      std::advance(it, static_cast<long>(std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)));
      t = it->first;
      if (seen.insert(t).second) out.push_back(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generator sets

// e(i, j) for 1 <= i, j <= n.
std::vector<GeneratorId> gl0_generators(int n);
// E(i, j) for lo <= i, j <= hi.
std::vector<GeneratorId> glz_generators(int lo, int hi);
// E(i, i) and E(k, k +- 1) for indices in [-bound, bound].
std::vector<GeneratorId> glz_chevalley_generators(int bound);
// The lowering generators used by the sampling walks.
std::vector<GeneratorId> gl0_lowering(int bound);
std::vector<GeneratorId> glz_lowering(int bound);

std::vector<GzTable> sample_gz_tables(CachedActor<GzTable>& actor, const GzModule& module, const VerifyOptions& opts);
std::vector<CTable> sample_c_tables(CachedActor<CTable>& actor, const CModule& module, const VerifyOptions& opts);

std::string describe(const GzSignature& sig);
std::string describe(const CSignature& sig);

// ---------------------------------------------------------------------------
// Checks

// Finite modules: the full basis and every generator with indices <= min(bound, N + 1)
// (GZ) or inside the window and [-bound, bound] (C). Infinite modules: sampled
// tables; every e(i, j), i, j <= bound (GZ) or the Chevalley set (C).
CheckReport check_relations(const GzModule& module, const VerifyOptions& opts);
CheckReport check_relations(const CModule& module, const VerifyOptions& opts);

// Raising generators annihilate the highest table, Cartan eigenvalues equal
// the signature; C finite also checks the flag conditions of its GZ image.
std::vector<CheckReport> check_highest_weight(const GzModule& module, const VerifyOptions& opts);
std::vector<CheckReport> check_highest_weight(const CModule& module, const VerifyOptions& opts);

// Every E(i, j) of the window acts on the C basis as e(g(i), g(j)) acts on the
// relabelled GZ basis. Two reports: the generators with closed formulas and
// the bracketed rest.
std::vector<CheckReport> check_equivariance(const GzSignature& sig, const VerifyOptions& opts);

// Closure of the highest table under e(i, i+1), e(i+1, i) is the whole basis.
CheckReport check_irreducibility_probe(const GzSignature& sig, const VerifyOptions& opts);

// Every single Chevalley generator applied to every sampled table moves the
// stability index at most one past max(old index, generator reach).
CheckReport check_locality(const GzModule& module, const VerifyOptions& opts);
CheckReport check_locality(const CModule& module, const VerifyOptions& opts);

// The odd reflection chain of length r = labels.size() applied to the GZ
// signature lands on the two-sided signature at positions g(i), and on the
// positive system ordered by the two-sided index.
CheckReport check_odd_reflections(const Row& labels);

}  // namespace glsuper
