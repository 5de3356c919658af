#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "glsuper/c_rep.hpp"
#include "glsuper/errors.hpp"
#include "glsuper/gz_rep.hpp"
#include "glsuper/isomap.hpp"
#include "glsuper/json_io.hpp"
#include "glsuper/verify.hpp"

using namespace glsuper;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLibraryBase = 10;  // + ErrorCode

struct Config {
  std::size_t guard = kDefaultEnumerationGuard;
  std::uint64_t factor_bound = kDefaultFactorBound;
  std::uint64_t seed = 7;
  int depth = 6;
  int index_bound = 3;
  std::size_t samples = 100;
};

// GLSUPER_CONFIG names a JSON file whose keys override the defaults above;
// command-line flags override the file.
Config load_config() {
  Config cfg;
  const char* path = std::getenv("GLSUPER_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, std::string("cannot open config ") + path);
  Json j;
  try {
    in >> j;
    if (j.contains("guard")) cfg.guard = j.at("guard").get<std::size_t>();
    if (j.contains("factor_bound")) cfg.factor_bound = j.at("factor_bound").get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("depth")) cfg.depth = j.at("depth").get<int>();
    if (j.contains("index_bound")) cfg.index_bound = j.at("index_bound").get<int>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config ") + path + ": " + e.what());
  }
  if (cfg.guard == 0 || cfg.factor_bound == 0 || cfg.depth <= 0 || cfg.index_bound <= 0 || cfg.samples == 0) {
    throw Error(ErrorCode::ParseError, std::string("config ") + path + ": bounds must be positive");
  }
  return cfg;
}

Row parse_row(const std::string& text) {
  Row out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::MalformedSignature, "empty signature '" + text + "'");
  return out;
}

enum class Kind { GzFinite, GzInfinite, CFinite, CInfinite };

struct ModuleSpec {
  bool gz = false;
  bool c = false;
  bool infinite_gz = false;
  bool infinite_c = false;
  std::string sig;
  std::string sig_tail;
  std::string sig_neg;
  int n = -1;

  void add_to(CLI::App* app) {
    app->add_flag("--gz", gz, "Gel'fand-Zetlin basis (default)");
    app->add_flag("--c", c, "two-sided C basis");
    app->add_flag("--infinite-gz", infinite_gz, "gl(1|infinity) in the GZ basis; --sig is the head, its last label repeats");
    app->add_flag("--infinite-c", infinite_c, "gl(infinity|1|infinity) in the C basis; see --sig-tail, --sig-neg");
    app->add_option("--sig", sig, "comma-separated rationals p/q");
    app->add_option("--sig-tail,--tail", sig_tail, "infinite C: M_0,M_1,... (last repeats)");
    app->add_option("--sig-neg", sig_neg, "infinite C: M_-1,M_-2,... (last repeats; default M_1 + 1)");
    app->add_option("--n", n, "C basis: rank n of gl(n|1|n), checked against the signature length");
  }

  Kind kind() const {
    int chosen = int(gz) + int(c) + int(infinite_gz) + int(infinite_c);
    if (chosen > 1) throw CLI::ValidationError("choose one of --gz, --c, --infinite-gz, --infinite-c");
    if (c) return Kind::CFinite;
    if (infinite_gz) return Kind::GzInfinite;
    if (infinite_c) return Kind::CInfinite;
    return Kind::GzFinite;
  }

  GzSignature gz_signature() const {
    if (sig.empty()) throw CLI::ValidationError("--sig is required");
    Row labels = parse_row(sig);
    return kind() == Kind::GzInfinite ? GzSignature::infinite(labels) : GzSignature::finite(labels);
  }

  CSignature c_signature() const {
    if (kind() == Kind::CInfinite) {
      std::string tail = sig_tail.empty() ? sig : sig_tail;
      if (tail.empty()) throw CLI::ValidationError("--sig-tail is required");
      Row head = parse_row(tail);
      Row neg;
      if (!sig_neg.empty()) {
        neg = parse_row(sig_neg);
      } else if (head.size() >= 2) {
        neg.push_back(head[1] + 1);
      }
      return CSignature::infinite(head, neg);
    }
    if (sig.empty()) throw CLI::ValidationError("--sig is required");
    Row window = parse_row(sig);
    if (n >= 0 && window.size() != static_cast<std::size_t>(2 * n) && window.size() != static_cast<std::size_t>(2 * n + 1)) {
      throw Error(ErrorCode::LengthMismatch, "signature of length " + std::to_string(window.size()) +
                                                 " does not belong to n = " + std::to_string(n));
    }
    return CSignature::finite(window);
  }
};

std::string approx_string(const RadicalScalar& x) {
  std::ostringstream os;
  os << std::setprecision(15) << x.approx();
  return os.str();
}

std::string scalar_text(const RadicalScalar& x, bool approx) { return approx ? approx_string(x) : x.to_string(); }

void print_matrix_text(const SparseMatrix& m, bool dense, bool approx) {
  std::cout << "dim " << m.dim << "\n";
  for (std::size_t i = 0; i < m.order.size(); ++i) std::cout << "  " << i << ": " << m.order[i] << "\n";
  if (dense) {
    std::vector<std::vector<std::string>> cells(m.dim, std::vector<std::string>(m.dim, "0"));
    for (const auto& [r, c, v] : m.entries) cells[r][c] = scalar_text(v, approx);
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "  " : "") << row[c];
      std::cout << "\n";
    }
    return;
  }
  for (const auto& [r, c, v] : m.entries) std::cout << "(" << r << "," << c << ") " << scalar_text(v, approx) << "\n";
}

FactorFault parse_fault(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() < 4 || parts.size() > 5) throw Error(ErrorCode::ParseError, "fault '" + text + "'");
  FactorFault f;
  if (parts[0] == "gz-raise") {
    f.site = FormulaSite::GzRaise;
  } else if (parts[0] == "gz-lower") {
    f.site = FormulaSite::GzLower;
  } else if (parts[0] == "c-raise-upper-pair") {
    f.site = FormulaSite::CRaiseUpperPair;
  } else if (parts[0] == "c-other") {
    f.site = FormulaSite::COther;
  } else {
    throw Error(ErrorCode::ParseError, "fault site '" + parts[0] + "'");
  }
  f.term = std::stoi(parts[1]);
  if (parts[2] == "prefactor") {
    f.block = FactorBlock::Prefactor;
  } else if (parts[2] == "num") {
    f.block = FactorBlock::OuterNumerator;
  } else if (parts[2] == "den") {
    f.block = FactorBlock::OuterDenominator;
  } else if (parts[2] == "rad-num") {
    f.block = FactorBlock::RadicandNumerator;
  } else if (parts[2] == "rad-den") {
    f.block = FactorBlock::RadicandDenominator;
  } else {
    throw Error(ErrorCode::ParseError, "fault block '" + parts[2] + "'");
  }
  f.index = static_cast<std::size_t>(std::stoul(parts[3]));
  if (parts.size() == 5) f.delta = parse_rational(parts[4]);
  return f;
}

Json read_json(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
      in >> j;
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return j;
}

// Prints the reports and returns the exit status.
int emit_reports(const std::vector<CheckReport>& reports, const std::string& format) {
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (format == "json") {
      std::cout << to_json(r).dump() << "\n";
      continue;
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << "  " << r.instance << "  (" << r.cases << " cases)\n";
    if (!r.pass) std::cout << "  counterexample: " << r.counterexample << "\n";
  }
  if (format != "json") std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Highest weight modules of gl(1|N) and gl(1|infinity) in the GZ and two-sided bases"};
  app.require_subcommand(1);

  Config cfg;
  try {
    cfg = load_config();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLibraryBase + static_cast<int>(e.code());
  }

  std::string format = "text";
  std::size_t guard = cfg.guard;
  std::uint64_t factor_bound = cfg.factor_bound;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--guard", guard, "enumeration guard")->check(CLI::PositiveNumber);
    sub->add_option("--factor-bound", factor_bound, "trial division bound")->check(CLI::PositiveNumber);
  };

  ModuleSpec spec;

  auto* enumerate = app.add_subcommand("enumerate", "list the basis tables of a finite module");
  spec.add_to(enumerate);
  add_common(enumerate);

  std::string gen_text;
  bool dense = false;
  bool approx = false;
  auto* matrix = app.add_subcommand("matrix", "sparse matrix of one generator on a finite module");
  spec.add_to(matrix);
  add_common(matrix);
  matrix->add_option("--gen", gen_text, "generator: e,i,j or E,i,j (also e(i,j))")->required();
  matrix->add_flag("--dense", dense, "print the full square matrix (text format)");
  matrix->add_flag("--approx", approx, "print 15-digit decimals instead of exact values (text format)");

  std::string input;
  std::string to;
  auto* convert = app.add_subcommand("convert", "relabel a table between the GZ and two-sided bases");
  convert->add_option("input", input, "table JSON file, - for stdin")->required();
  convert->add_option("--to", to, "target basis (default: the other one)")->check(CLI::IsMember({"gz", "c"}));

  std::string suite = "all";
  int bound = cfg.index_bound;
  std::uint64_t seed = cfg.seed;
  int depth = cfg.depth;
  std::size_t samples = cfg.samples;
  std::string fault_text;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("suite", suite, "relations | hwv | equivariance | irreducibility | locality | all")
      ->check(CLI::IsMember({"relations", "hwv", "equivariance", "irreducibility", "locality", "all"}));
  spec.add_to(verify);
  add_common(verify);
  verify->add_option("--bound", bound, "generator index bound")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--depth", depth, "sampling walk depth")->check(CLI::PositiveNumber);
  verify->add_option("--samples", samples, "sampled tables for infinite modules")->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault_text, "site,term,block,index[,delta]")->group("");

  auto* hwv = app.add_subcommand("hwv", "highest table, its weight and the highest weight checks");
  spec.add_to(hwv);
  add_common(hwv);
  hwv->add_option("--bound", bound, "generator index bound (infinite modules)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    ActionOptions action;
    action.factor_bound = factor_bound;
    if (!fault_text.empty()) action.fault = parse_fault(fault_text);
    VerifyOptions vopts;
    vopts.index_bound = bound;
    vopts.seed = seed;
    vopts.depth = depth;
    vopts.samples = samples;
    vopts.guard = guard;
    vopts.action = action;

    if (*enumerate) {
      Kind kind = spec.kind();
      if (kind == Kind::GzInfinite || kind == Kind::CInfinite) {
        throw CLI::ValidationError("infinite modules have no finite basis to enumerate");
      }
      Json tables = Json::array();
      std::vector<std::string> rendered;
      if (kind == Kind::GzFinite) {
        GzSignature sig = spec.gz_signature();
        for (const auto& t : gz_enumerate(sig, guard)) {
          tables.push_back(to_json(GzDocument{sig, t}));
          rendered.push_back(render(t));
        }
      } else {
        CSignature sig = spec.c_signature();
        for (const auto& t : c_enumerate(sig, guard)) {
          tables.push_back(to_json(CDocument{sig, t}));
          rendered.push_back(render(t));
        }
      }
      if (format == "json") {
        Json out;
        out["count"] = tables.size();
        out["tables"] = tables;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "count " << rendered.size() << "\n";
        for (std::size_t i = 0; i < rendered.size(); ++i) std::cout << "\n#" << i << "\n" << rendered[i];
      }
      return 0;
    }

    if (*matrix) {
      GeneratorId gen = GeneratorId::parse(gen_text);
      Kind kind = spec.kind();
      SparseMatrix m;
      if (kind == Kind::GzFinite) {
        m = gz_matrix(gen, spec.gz_signature(), guard, action);
      } else if (kind == Kind::CFinite) {
        m = c_matrix(gen, spec.c_signature(), guard, action);
      } else {
        throw CLI::ValidationError("matrices are only defined on finite modules");
      }
      if (format == "json") {
        std::cout << to_json(m).dump(2) << "\n";
      } else {
        print_matrix_text(m, dense, approx);
      }
      return 0;
    }

    if (*convert) {
      Json in = read_json(input);
      Json out;
      if (is_gz_document(in)) {
        if (to == "gz") throw Error(ErrorCode::ParseError, "input is already in the GZ basis");
        GzDocument doc = gz_document(in);
        out = to_json(CDocument{to_c_signature(doc.sig), table_gz_to_c(doc.sig, doc.table)});
      } else {
        if (to == "c") throw Error(ErrorCode::ParseError, "input is already in the C basis");
        CDocument doc = c_document(in);
        out = to_json(GzDocument{to_gz_signature(doc.sig), table_c_to_gz(doc.sig, doc.table)});
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*verify) {
      Kind kind = spec.kind();
      bool all = suite == "all";
      std::vector<CheckReport> reports;
      if (kind == Kind::GzFinite || kind == Kind::GzInfinite) {
        GzSignature sig = spec.gz_signature();
        GzModule module(sig, action);
        if (all || suite == "relations") reports.push_back(check_relations(module, vopts));
        if (all || suite == "hwv") append(reports, check_highest_weight(module, vopts));
        if (kind == Kind::GzFinite) {
          if (all || suite == "equivariance") append(reports, check_equivariance(sig, vopts));
          if (all || suite == "irreducibility") reports.push_back(check_irreducibility_probe(sig, vopts));
          if (suite == "locality") throw CLI::ValidationError("locality needs an infinite module");
        } else {
          if (all || suite == "locality") reports.push_back(check_locality(module, vopts));
          if (suite == "equivariance" || suite == "irreducibility") {
            throw CLI::ValidationError(suite + " needs a finite module");
          }
        }
      } else {
        CSignature sig = spec.c_signature();
        CModule module(sig, action);
        if (all || suite == "relations") reports.push_back(check_relations(module, vopts));
        if (all || suite == "hwv") append(reports, check_highest_weight(module, vopts));
        if (kind == Kind::CFinite) {
          GzSignature gz = to_gz_signature(sig);
          if (all || suite == "equivariance") append(reports, check_equivariance(gz, vopts));
          if (all || suite == "irreducibility") reports.push_back(check_irreducibility_probe(gz, vopts));
          if (suite == "locality") throw CLI::ValidationError("locality needs an infinite module");
        } else {
          if (all || suite == "locality") reports.push_back(check_locality(module, vopts));
          if (suite == "equivariance" || suite == "irreducibility") {
            throw CLI::ValidationError(suite + " needs a finite module");
          }
        }
      }
      return emit_reports(reports, format);
    }

    if (*hwv) {
      Kind kind = spec.kind();
      std::vector<CheckReport> reports;
      std::string table;
      if (kind == Kind::GzFinite || kind == Kind::GzInfinite) {
        GzModule module(spec.gz_signature(), action);
        table = render(module.highest());
        reports = check_highest_weight(module, vopts);
      } else {
        CModule module(spec.c_signature(), action);
        table = render(module.highest());
        reports = check_highest_weight(module, vopts);
      }
      if (format != "json") std::cout << "highest table" << (table.empty() ? " (signature only)\n" : "\n") << table;
      return emit_reports(reports, format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLibraryBase + static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLibraryBase + static_cast<int>(ErrorCode::ParseError);
  }
  return 0;
}
