#include "glsuper/verify.hpp"

#include <algorithm>
#include <deque>

#include "glsuper/errors.hpp"
#include "glsuper/isomap.hpp"

namespace glsuper {

namespace {

std::string join(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ",";
    out += to_string(row[i]);
  }
  return out;
}

CheckReport failed(CheckReport report, const std::string& counterexample) {
  report.pass = false;
  if (report.counterexample.empty()) report.counterexample = counterexample;
  return report;
}

// Highest row touched by a single Chevalley generator.
int gz_reach(const GeneratorId& gen) { return std::min(gen.i, gen.j); }
int c_reach_rows(const GeneratorId& gen) { return std::max(g(gen.i), g(gen.j)) - 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Generator sets

std::vector<GeneratorId> gl0_generators(int n) {
  std::vector<GeneratorId> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.push_back(GeneratorId::e(i, j));
  }
  return out;
}

std::vector<GeneratorId> glz_generators(int lo, int hi) {
  std::vector<GeneratorId> out;
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) out.push_back(GeneratorId::E(i, j));
  }
  return out;
}

std::vector<GeneratorId> glz_chevalley_generators(int bound) {
  std::vector<GeneratorId> out;
  for (int i = -bound; i <= bound; ++i) out.push_back(GeneratorId::E(i, i));
  for (int k = -bound; k < bound; ++k) {
    out.push_back(GeneratorId::E(k, k + 1));
    out.push_back(GeneratorId::E(k + 1, k));
  }
  return out;
}

std::vector<GeneratorId> gl0_lowering(int bound) {
  std::vector<GeneratorId> out;
  for (int i = 1; i < bound; ++i) out.push_back(GeneratorId::e(i + 1, i));
  return out;
}

std::vector<GeneratorId> glz_lowering(int bound) {
  std::vector<GeneratorId> out;
  for (int k = -bound; k < bound; ++k) out.push_back(GeneratorId::E(k + 1, k));
  return out;
}

std::vector<GzTable> sample_gz_tables(CachedActor<GzTable>& actor, const GzModule& module, const VerifyOptions& opts) {
  return sample_walks(actor, module.highest(), gl0_lowering(opts.index_bound), opts);
}

std::vector<CTable> sample_c_tables(CachedActor<CTable>& actor, const CModule& module, const VerifyOptions& opts) {
  return sample_walks(actor, module.highest(), glz_lowering(opts.index_bound), opts);
}

std::string describe(const GzSignature& sig) {
  return std::string(sig.is_infinite() ? "gz infinite [" : "gz [") + join(sig.labels()) +
         (sig.is_infinite() ? ",...]" : "]");
}

std::string describe(const CSignature& sig) {
  if (!sig.is_infinite()) return "c [" + join(sig.window(sig.top_row())) + "]";
  Row neg(sig.negative().rbegin(), sig.negative().rend());
  Row tail{sig.m0()};
  tail.insert(tail.end(), sig.positive().begin(), sig.positive().end());
  return "c infinite [...," + join(neg) + " | " + join(tail) + ",...]";
}

// ---------------------------------------------------------------------------
// Relations

CheckReport check_relations(const GzModule& module, const VerifyOptions& opts) {
  CachedActor<GzTable> actor(module);
  const auto& sig = module.signature();
  std::string instance = describe(sig) + " bound " + std::to_string(opts.index_bound);
  if (!module.is_infinite()) {
    auto gens = gl0_generators(std::min(opts.index_bound, sig.length()));
    return check_relation_set("relations", instance, actor, gens, module.basis(opts.guard), opts.stop_at_first_failure);
  }
  auto tables = sample_gz_tables(actor, module, opts);
  instance += " samples " + std::to_string(tables.size()) + " seed " + std::to_string(opts.seed);
  return check_relation_set("relations", instance, actor, gl0_generators(opts.index_bound), tables,
                            opts.stop_at_first_failure);
}

CheckReport check_relations(const CModule& module, const VerifyOptions& opts) {
  CachedActor<CTable> actor(module);
  const auto& sig = module.signature();
  std::string instance = describe(sig) + " bound " + std::to_string(opts.index_bound);
  if (!module.is_infinite()) {
    int lo = std::max(-opts.index_bound, c_lo(sig.top_row()));
    int hi = std::min(opts.index_bound, c_hi(sig.top_row()));
    return check_relation_set("relations", instance, actor, glz_generators(lo, hi), module.basis(opts.guard),
                              opts.stop_at_first_failure);
  }
  auto tables = sample_c_tables(actor, module, opts);
  instance += " samples " + std::to_string(tables.size()) + " seed " + std::to_string(opts.seed);
  return check_relation_set("relations", instance, actor, glz_chevalley_generators(opts.index_bound), tables,
                            opts.stop_at_first_failure);
}

// ---------------------------------------------------------------------------
// Highest weight

namespace {

template <class Key, class Module>
std::vector<CheckReport> highest_weight_reports(const Module& module, const std::string& instance,
                                                const std::vector<GeneratorId>& raising,
                                                const std::vector<std::pair<int, Rational>>& weights) {
  CheckReport annihilation{"hwv-raising", instance, true, "", 0};
  CheckReport eigen{"hwv-cartan", instance, true, "", 0};
  Key top = module.highest();
  for (const auto& gen : raising) {
    ++annihilation.cases;
    try {
      auto v = module.act(gen, top);
      if (!v.empty()) annihilation = failed(annihilation, gen.name() + " highest = " + render_vector(v));
    } catch (const Error& e) {
      annihilation = failed(annihilation, gen.name() + ": " + e.what());
    }
  }
  for (const auto& [i, expected] : weights) {
    ++eigen.cases;
    try {
      RadicalScalar value = module.cartan(i, top);
      if (value != RadicalScalar(expected)) {
        eigen = failed(eigen, "index " + std::to_string(i) + ": eigenvalue " + value.to_string() + ", signature " +
                                  to_string(expected));
      }
    } catch (const Error& e) {
      eigen = failed(eigen, "index " + std::to_string(i) + ": " + e.what());
    }
  }
  return {annihilation, eigen};
}

}  // namespace

std::vector<CheckReport> check_highest_weight(const GzModule& module, const VerifyOptions& opts) {
  const auto& sig = module.signature();
  int n = sig.is_infinite() ? opts.index_bound : sig.length();
  std::vector<GeneratorId> raising;
  std::vector<std::pair<int, Rational>> weights;
  for (int k = 1; k < n; ++k) raising.push_back(GeneratorId::e(k, k + 1));
  for (int i = 1; i <= n; ++i) weights.emplace_back(i, sig.label(i));
  return highest_weight_reports<GzTable>(module, describe(sig), raising, weights);
}

std::vector<CheckReport> check_highest_weight(const CModule& module, const VerifyOptions& opts) {
  const auto& sig = module.signature();
  int lo = sig.is_infinite() ? -opts.index_bound : c_lo(sig.top_row());
  int hi = sig.is_infinite() ? opts.index_bound : c_hi(sig.top_row());
  std::vector<GeneratorId> raising;
  std::vector<std::pair<int, Rational>> weights;
  for (int k = lo; k < hi; ++k) raising.push_back(GeneratorId::E(k, k + 1));
  for (int i = lo; i <= hi; ++i) weights.emplace_back(i, sig.label(i));
  auto reports = highest_weight_reports<CTable>(module, describe(sig), raising, weights);
  if (!sig.is_infinite()) {
    CheckReport flag{"hwv-flag", describe(sig), true, "", 1};
    try {
      GzSignature gz = to_gz_signature(sig);
      GzTable image = table_c_to_gz(sig, module.highest());
      if (!c_hwv_flag_conditions(gz, image)) flag = failed(flag, "GZ image [" + table_id(image) + "]");
    } catch (const Error& e) {
      flag = failed(flag, e.what());
    }
    reports.push_back(flag);
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Equivariance

std::vector<CheckReport> check_equivariance(const GzSignature& sig, const VerifyOptions& opts) {
  std::string instance = describe(sig);
  CheckReport formula{"equivariance-formula", instance, true, "", 0};
  CheckReport derived{"equivariance-derived", instance, true, "", 0};
  GzModule gz(sig, opts.action);
  CSignature csig = to_c_signature(sig);
  CModule c(csig, opts.action);
  CachedActor<GzTable> gz_actor(gz);
  CachedActor<CTable> c_actor(c);
  auto basis = gz.basis(opts.guard);
  std::vector<CTable> images;
  for (const auto& t : basis) images.push_back(table_gz_to_c(sig, t));
  int r = sig.length();
  for (const auto& gen : glz_generators(c_lo(r), c_hi(r))) {
    CheckReport& report = CModule::is_finite_formula_generator(gen) ? formula : derived;
    for (std::size_t col = 0; col < basis.size(); ++col) {
      ++report.cases;
      try {
        CVector expected;
        for (const auto& [t, coeff] : gz_actor.act(phi(gen), basis[col])) expected.add(table_gz_to_c(sig, t), coeff);
        const CVector& actual = c_actor.act(gen, images[col]);
        if (actual != expected) {
          report = failed(report, gen.name() + " vs " + phi(gen).name() + " on [" + table_id(images[col]) +
                                      "]: C = " + render_vector(actual) + ", GZ = " + render_vector(expected));
        }
      } catch (const Error& e) {
        report = failed(report, gen.name() + " on [" + table_id(images[col]) + "]: " + e.what());
      }
      if (!report.pass && opts.stop_at_first_failure) break;
    }
  }
  return {formula, derived};
}

// ---------------------------------------------------------------------------
// Irreducibility

CheckReport check_irreducibility_probe(const GzSignature& sig, const VerifyOptions& opts) {
  CheckReport report{"irreducibility", describe(sig), true, "", 0};
  GzModule module(sig, opts.action);
  auto basis = module.basis(opts.guard);
  std::set<GzTable> reached{module.highest()};
  std::deque<GzTable> queue{module.highest()};
  int n = sig.length();
  while (!queue.empty()) {
    GzTable t = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      for (const auto& gen : {GeneratorId::e(i, i + 1), GeneratorId::e(i + 1, i)}) {
        ++report.cases;
        for (const auto& [target, c] : module.act(gen, t)) {
          if (reached.insert(target).second) queue.push_back(target);
        }
      }
    }
  }
  if (reached.size() != basis.size()) {
    for (const auto& t : basis) {
      if (!reached.count(t)) {
        return failed(report, "reached " + std::to_string(reached.size()) + " of " + std::to_string(basis.size()) +
                                  " tables; missing [" + table_id(t) + "]");
      }
    }
    return failed(report, "reached tables outside the enumerated basis");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Locality

namespace {

template <class Key, class Module, class Reach>
CheckReport locality_report(const Module& module, CachedActor<Key>& actor, const std::vector<Key>& tables,
                            const std::vector<GeneratorId>& gens, Reach reach, const std::string& instance) {
  CheckReport report{"locality", instance, true, "", 0};
  const auto& sig = module.signature();
  for (const auto& t : tables) {
    int before = stability_index(sig, t);
    for (const auto& gen : gens) {
      int limit = std::max(before, reach(gen)) + 1;
      for (const auto& [target, c] : actor.act(gen, t)) {
        ++report.cases;
        int after = stability_index(sig, target);
        if (after > limit) {
          return failed(report, gen.name() + " on [" + table_id(t) + "] (index " + std::to_string(before) + ") gives [" +
                                    table_id(target) + "] (index " + std::to_string(after) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace

CheckReport check_locality(const GzModule& module, const VerifyOptions& opts) {
  if (!module.is_infinite()) throw Error(ErrorCode::LengthMismatch, "locality is a property of infinite tables");
  CachedActor<GzTable> actor(module);
  auto tables = sample_gz_tables(actor, module, opts);
  std::vector<GeneratorId> gens;
  for (int i = 1; i < opts.index_bound; ++i) {
    gens.push_back(GeneratorId::e(i, i + 1));
    gens.push_back(GeneratorId::e(i + 1, i));
  }
  return locality_report(module, actor, tables, gens, gz_reach,
                         describe(module.signature()) + " samples " + std::to_string(tables.size()));
}

CheckReport check_locality(const CModule& module, const VerifyOptions& opts) {
  if (!module.is_infinite()) throw Error(ErrorCode::LengthMismatch, "locality is a property of infinite tables");
  CachedActor<CTable> actor(module);
  auto tables = sample_c_tables(actor, module, opts);
  std::vector<GeneratorId> gens;
  for (const auto& gen : glz_chevalley_generators(opts.index_bound)) {
    if (!gen.is_cartan()) gens.push_back(gen);
  }
  auto reach = [](const GeneratorId& gen) { return (c_reach_rows(gen) + 1) / 2; };
  return locality_report(module, actor, tables, gens, reach,
                         describe(module.signature()) + " samples " + std::to_string(tables.size()));
}

// ---------------------------------------------------------------------------
// Odd reflections

CheckReport check_odd_reflections(const Row& labels) {
  int r = static_cast<int>(labels.size());
  CheckReport report{"odd-reflection", "[" + join(labels) + "]", true, "", 0};
  try {
    RootOrdering ordering(r);
    Row weight = labels;
    for (const auto& alpha : reflection_chain(r)) {
      ++report.cases;
      weight = odd_reflection(weight, alpha, ordering);
    }
    Row expected = signature_gz_to_c(labels);
    for (int i = c_lo(r); i <= c_hi(r); ++i) {
      const Rational& got = weight[static_cast<std::size_t>(g(i) - 1)];
      const Rational& want = expected[static_cast<std::size_t>(i - c_lo(r))];
      if (got != want) {
        return failed(report, "index " + std::to_string(i) + ": reflected " + to_string(got) + ", relabelled " +
                                  to_string(want));
      }
    }
    std::vector<int> z_order;
    for (int i = c_lo(r); i <= c_hi(r); ++i) z_order.push_back(g(i));
    if (ordering.order() != z_order) return failed(report, "final positive system is not the two-sided order");
  } catch (const Error& e) {
    return failed(report, e.what());
  }
  return report;
}

}  // namespace glsuper
