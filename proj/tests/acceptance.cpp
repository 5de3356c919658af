// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "glsuper/isomap.hpp"
#include "glsuper/verify.hpp"
#include "helpers.hpp"
#include "oracles/brute_force.hpp"

using namespace glsuper;
using testutil::row;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int criterion, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  char time[32];
  std::snprintf(time, sizeof time, "%.1fs", seconds_since(start));
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << out.detail << " (" << time
            << ")" << std::endl;
  if (!out.pass) ++failures;
}

// Records the first failing report of a batch.
struct Tally {
  std::size_t reports = 0;
  std::size_t cases = 0;
  std::string first_failure;

  void add(const CheckReport& r) {
    ++reports;
    cases += r.cases;
    if (!r.pass && first_failure.empty()) first_failure = r.check + " " + r.instance + ": " + r.counterexample;
  }
  void add(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs) add(r);
  }
  bool pass() const { return first_failure.empty(); }
};

// Finite GZ signatures [m_1, ..., m_{N+1}] for N = 1..4, half-integer and
// integer m_1, each of dimension at most 500.
std::vector<std::vector<Row>> finite_signatures() {
  return {
      {row({"1/2", "3"}), row({"-3/2", "1"}), row({"5/2", "0"}), row({"3", "1"}), row({"-7", "2"}), row({"1/3", "4"})},
      {row({"1/2", "2", "0"}), row({"1/2", "1", "1"}), row({"-5/2", "3", "1"}), row({"4", "2", "0"}),
       row({"-7", "1", "1"}), row({"2/3", "2", "-1"})},
      {row({"1/2", "2", "1", "0"}), row({"1/2", "1", "1", "0"}), row({"3/2", "2", "2", "0"}), row({"5", "2", "1", "0"}),
       row({"-7", "1", "0", "0"}), row({"1/5", "1", "1", "1"})},
      {row({"1/2", "1", "0", "0", "0"}), row({"1/2", "1", "1", "0", "0"}), row({"1/2", "2", "0", "0", "0"}),
       row({"1/2", "1", "0", "0", "-1"}), row({"-7", "2", "1", "0", "0"})},
  };
}

// Infinite two-sided signatures: (M_0, M_1, ... tail repeating) and
// (M_-1, M_-2, ... repeating).
std::vector<CSignature> infinite_c_signatures() {
  return {CSignature::infinite(row({"-1/2", "-2", "-4"}), row({"4", "5", "7"})),
          CSignature::infinite(row({"1/3", "2", "1", "0"}), row({"4", "6", "8"})),
          CSignature::infinite(row({"5/2", "3", "1"}), row({"4", "5"}))};
}

VerifyOptions infinite_options() {
  VerifyOptions opts;
  opts.index_bound = 4;
  opts.seed = 7;
  opts.depth = 6;
  opts.samples = 100;
  return opts;
}

// ---------------------------------------------------------------------------

Outcome criterion_closure() {
  Tally tally;
  std::ostringstream detail;
  std::size_t largest = 0;
  for (const auto& group : finite_signatures()) {
    int n = static_cast<int>(group.front().size()) - 1;
    std::size_t count = 0;
    bool half = false;
    bool integral = false;
    for (const auto& labels : group) {
      GzSignature sig = GzSignature::finite(labels);
      GzModule module(sig);
      std::size_t dim = module.basis().size();
      if (dim > 500) return {false, "dimension " + std::to_string(dim) + " above 500 for " + describe(sig)};
      largest = std::max(largest, dim);
      VerifyOptions opts;
      opts.index_bound = n + 1;
      tally.add(check_relations(module, opts));
      ++count;
      half = half || labels[0].get_den() == 2;
      integral = integral || labels[0].get_den() == 1;
    }
    if (count < 5 || !half || !integral) return {false, "N = " + std::to_string(n) + " lacks coverage"};
    detail << "N=" << n << ": " << count << " signatures; ";
  }
  detail << tally.cases << " identities, largest dimension " << largest;
  if (!tally.pass()) return {false, tally.first_failure};
  return {true, detail.str()};
}

Outcome criterion_highest_weight() {
  Tally tally;
  VerifyOptions opts;
  opts.index_bound = 4;
  for (const auto& group : finite_signatures()) {
    for (const auto& labels : group) {
      tally.add(check_highest_weight(GzModule(GzSignature::finite(labels)), opts));
      tally.add(check_highest_weight(CModule(to_c_signature(GzSignature::finite(labels))), opts));
    }
  }
  for (const auto& head : {row({"1/2", "2", "1"}), row({"-1/3", "2", "2", "1"}), row({"5/2", "4", "4", "1"})}) {
    tally.add(check_highest_weight(GzModule(GzSignature::infinite(head)), opts));
  }
  for (const auto& sig : infinite_c_signatures()) tally.add(check_highest_weight(CModule(sig), opts));
  if (!tally.pass()) return {false, tally.first_failure};
  return {true, std::to_string(tally.reports) + " reports, finite and infinite, both bases"};
}

Outcome criterion_equivariance() {
  Tally tally;
  std::size_t formula_cases = 0;
  const std::vector<std::vector<Row>> groups = {
      {row({"1/2", "2", "0"}), row({"-5/2", "3", "1"}), row({"4", "2", "0"}), row({"2/3", "2", "-1"})},
      {row({"1/2", "1", "0", "0", "0"}), row({"1/2", "1", "1", "0", "0"}), row({"-7", "2", "1", "0", "0"})},
  };
  VerifyOptions opts;
  for (const auto& group : groups) {
    for (const auto& labels : group) {
      auto reports = check_equivariance(GzSignature::finite(labels), opts);
      for (const auto& r : reports) {
        if (r.check == "equivariance-formula") formula_cases += r.cases;
      }
      tally.add(reports);
    }
  }
  if (!tally.pass()) return {false, tally.first_failure};
  if (formula_cases == 0) return {false, "no closed-formula generator was compared"};
  return {true, "n=1: 4 signatures, n=2: 3 signatures, " + std::to_string(tally.cases) + " matrix comparisons"};
}

Outcome criterion_infinite_relations() {
  Tally tally;
  std::ostringstream detail;
  auto opts = infinite_options();
  for (const auto& sig : infinite_c_signatures()) {
    CModule module(sig);
    CachedActor<CTable> actor(module);
    auto tables = sample_c_tables(actor, module, opts);
    std::size_t shallow = 0;
    for (const auto& t : tables) shallow += stability_index(sig, t) <= 4 ? 1 : 0;
    if (shallow < 100) {
      return {false, describe(sig) + ": only " + std::to_string(shallow) + " sampled tables of stability index <= 4"};
    }
    tally.add(check_relations(module, opts));
    detail << shallow << " ";
  }
  if (!tally.pass()) return {false, tally.first_failure};
  return {true, "3 signatures, sampled tables " + detail.str() + "- " + std::to_string(tally.cases) + " identities"};
}

Outcome criterion_odd_reflections() {
  const Row base_a = row({"1/2", "5", "4", "4", "2", "1", "-1"});
  const Row base_b = row({"-7/3", "3", "3", "2", "0", "0", "-2"});
  const Row base_c = row({"4", "6", "2", "1", "1", "-3", "-5"});
  Tally tally;
  for (int r = 1; r <= 7; ++r) {
    for (const auto& base : {base_a, base_b, base_c}) {
      tally.add(check_odd_reflections(Row(base.begin(), base.begin() + r)));
    }
  }
  if (!tally.pass()) return {false, tally.first_failure};
  return {true, "all (k, theta) with k <= 3, " + std::to_string(tally.reports) + " chains"};
}

Outcome criterion_enumeration_oracle() {
  std::size_t checked = 0;
  std::vector<Row> sigs = {row({"1/2"}), row({"-4/3"})};
  auto groups = finite_signatures();
  for (std::size_t g = 0; g < 3; ++g) sigs.insert(sigs.end(), groups[g].begin(), groups[g].end());
  for (const auto& labels : sigs) {
    GzSignature sig = GzSignature::finite(labels);
    auto tables = gz_enumerate(sig);
    auto patterns = oracle::gz_patterns(labels);
    std::set<std::vector<Row>> mine;
    std::set<std::vector<Row>> theirs;
    for (const auto& t : tables) mine.insert(t.rows);
    for (const auto& p : patterns) theirs.insert(p);
    if (tables.size() != patterns.size() || mine != theirs) {
      return {false, describe(sig) + ": " + std::to_string(tables.size()) + " tables vs " +
                         std::to_string(patterns.size()) + " oracle patterns"};
    }
    int n = static_cast<int>(labels.size()) - 1;
    long even = oracle::even_pattern_count(Row(labels.begin() + 1, labels.end()));
    if (static_cast<long>(tables.size()) != (1L << n) * even) {
      return {false, describe(sig) + ": dimension " + std::to_string(tables.size()) + " != 2^" + std::to_string(n) +
                         " * " + std::to_string(even)};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " signatures with N <= 3, contents and count identity"};
}

Outcome criterion_locality() {
  Tally tally;
  for (const auto& sig : infinite_c_signatures()) tally.add(check_locality(CModule(sig), infinite_options()));
  if (!tally.pass()) return {false, tally.first_failure};
  return {true, std::to_string(tally.cases) + " generator applications"};
}

// ---------------------------------------------------------------------------
// Fault sweep: every factor of every term of the two instrumented formulas
// is perturbed in turn. A fault that never touches an evaluated factor on the
// probe tables is out of range and ends the sweep of its block.

const char* block_name(FactorBlock b) {
  switch (b) {
    case FactorBlock::Prefactor: return "prefactor";
    case FactorBlock::OuterNumerator: return "num";
    case FactorBlock::OuterDenominator: return "den";
    case FactorBlock::RadicandNumerator: return "rad-num";
    case FactorBlock::RadicandDenominator: return "rad-den";
  }
  return "?";
}

struct FaultTarget {
  // Counts how often the fault fires on the probe tables.
  std::function<std::size_t(const ActionOptions&)> probe;
  // True iff the checks notice the fault.
  std::function<bool(const ActionOptions&)> detected;
};

// A perturbed factor may make a coefficient undefined (a zero denominator or
// a negative radicand); the relation checks report that as a failure too.
bool raises(const ActionOptions&, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error&) {
    return true;
  }
  return false;
}

FaultTarget gz_target() {
  FaultTarget target;
  std::vector<Row> sigs;
  for (const auto& group : finite_signatures()) sigs.insert(sigs.end(), group.begin(), group.end());
  // A finite relation check applies e(i, i+1) by formula to exactly the basis.
  auto bases = std::make_shared<std::vector<std::vector<GzTable>>>();
  for (const auto& labels : sigs) bases->push_back(gz_enumerate(GzSignature::finite(labels)));
  auto hits_on = [sigs, bases](const ActionOptions& action, std::size_t s) {
    *action.fault_hits = 0;
    GzModule module(GzSignature::finite(sigs[s]), action);
    int n = static_cast<int>(sigs[s].size()) - 1;
    for (const auto& t : (*bases)[s]) {
      for (int i = 1; i <= n; ++i) {
        if (raises(action, [&] { module.raise(i, t); })) return *action.fault_hits + 1;
      }
      if (*action.fault_hits > 0) break;
    }
    return *action.fault_hits;
  };
  target.probe = [sigs, hits_on](const ActionOptions& action) {
    std::size_t total = 0;
    for (std::size_t s = 0; s < sigs.size() && total == 0; ++s) total += hits_on(action, s);
    return total;
  };
  target.detected = [sigs, hits_on](const ActionOptions& action) {
    for (std::size_t s = 0; s < sigs.size(); ++s) {
      if (hits_on(action, s) == 0) continue;
      VerifyOptions opts;
      opts.index_bound = static_cast<int>(sigs[s].size());
      opts.action = action;
      if (!check_relations(GzModule(GzSignature::finite(sigs[s]), action), opts).pass) return true;
    }
    return false;
  };
  return target;
}

FaultTarget c_target() {
  FaultTarget target;
  auto sigs = infinite_c_signatures();
  // The raising pairs (E(k, k+1), table) that the fault-free relation check
  // evaluates by formula, including those met on intermediate tables.
  auto pairs = std::make_shared<std::vector<std::vector<std::pair<GeneratorId, CTable>>>>();
  for (const auto& sig : sigs) {
    CModule module(sig);
    CachedActor<CTable> actor(module);
    auto opts = infinite_options();
    auto tables = sample_c_tables(actor, module, opts);
    check_relation_set("relations", describe(sig), actor, glz_chevalley_generators(opts.index_bound), tables, true);
    pairs->emplace_back();
    for (const auto& [gen, t] : actor.visited()) {
      if (gen.i >= 1 && gen.j == gen.i + 1) pairs->back().emplace_back(gen, t);
    }
  }
  auto hits_on = [sigs, pairs](const ActionOptions& action, std::size_t s) {
    *action.fault_hits = 0;
    CModule module(sigs[s], action);
    for (const auto& [gen, t] : (*pairs)[s]) {
      if (raises(action, [&] { module.act_chevalley(gen, t); })) return *action.fault_hits + 1;
      if (*action.fault_hits > 0) break;
    }
    return *action.fault_hits;
  };
  target.probe = [sigs, hits_on](const ActionOptions& action) {
    std::size_t total = 0;
    for (std::size_t s = 0; s < sigs.size() && total == 0; ++s) total += hits_on(action, s);
    return total;
  };
  target.detected = [sigs, hits_on](const ActionOptions& action) {
    for (std::size_t s = 0; s < sigs.size(); ++s) {
      if (hits_on(action, s) == 0) continue;
      auto opts = infinite_options();
      opts.action = action;
      if (!check_relations(CModule(sigs[s], action), opts).pass) return true;
    }
    return false;
  };
  return target;
}

Outcome criterion_fault_detection() {
  struct Site {
    FormulaSite site;
    const char* name;
    int terms;
    FaultTarget target;
  };
  std::vector<Site> sites = {{FormulaSite::GzRaise, "gz-raise", 2, gz_target()},
                             {FormulaSite::CRaiseUpperPair, "c-raise-upper-pair", 4, c_target()}};
  const FactorBlock blocks[] = {FactorBlock::Prefactor, FactorBlock::OuterNumerator, FactorBlock::OuterDenominator,
                                FactorBlock::RadicandNumerator, FactorBlock::RadicandDenominator};
  std::size_t applied = 0;
  std::size_t caught = 0;
  std::string missed;
  for (const auto& site : sites) {
    for (int term = 0; term < site.terms; ++term) {
      for (auto block : blocks) {
        std::size_t last = block == FactorBlock::Prefactor ? 1 : 64;
        for (std::size_t index = 0; index < last; ++index) {
          ActionOptions action;
          action.fault = FactorFault{site.site, term, block, index, 1};
          action.fault_hits = std::make_shared<std::size_t>(0);
          if (site.target.probe(action) == 0) break;
          ++applied;
          if (site.target.detected(action)) {
            ++caught;
          } else if (missed.empty()) {
            missed = std::string(site.name) + "," + std::to_string(term) + "," + block_name(block) + "," +
                     std::to_string(index);
          }
        }
      }
    }
  }
  if (applied == 0) return {false, "no fault reached an evaluated factor"};
  std::string detail = std::to_string(caught) + " of " + std::to_string(applied) + " single-factor faults detected";
  if (!missed.empty()) return {false, detail + "; first undetected " + missed};
  return {true, detail};
}

}  // namespace

int main() {
  auto start = Clock::now();
  report(1, criterion_closure);
  report(2, criterion_highest_weight);
  report(3, criterion_equivariance);
  report(4, criterion_infinite_relations);
  report(5, criterion_odd_reflections);
  report(6, criterion_enumeration_oracle);
  report(7, criterion_locality);
  report(8, criterion_fault_detection);
  std::printf("%d of 8 criteria failed, %.1fs total\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
