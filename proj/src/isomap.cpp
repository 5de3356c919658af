#include "glsuper/isomap.hpp"

#include <cstdlib>

#include "glsuper/c_rep.hpp"
#include "glsuper/errors.hpp"

namespace glsuper {

namespace {

void require_valid(const std::vector<Violation>& violations, const std::string& what) {
  if (violations.empty()) return;
  throw Error(ErrorCode::InvalidTable, what + ": " + describe(violations.front()));
}

}  // namespace

int g(int z) { return 2 * std::abs(z) + (z >= 0 ? 1 : 0); }

int g_inv(int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "gl(1|N) index " + std::to_string(n));
  return n % 2 == 1 ? (n - 1) / 2 : -(n / 2);
}

GeneratorId phi(const GeneratorId& gen) {
  if (gen.convention != Convention::Glz) throw Error(ErrorCode::IndexOutOfRange, gen.name() + " is not an E generator");
  return GeneratorId::e(g(gen.i), g(gen.j));
}

GeneratorId phi_inv(const GeneratorId& gen) {
  if (gen.convention != Convention::Gl0) throw Error(ErrorCode::IndexOutOfRange, gen.name() + " is not an e generator");
  return GeneratorId::E(g_inv(gen.i), g_inv(gen.j));
}

CTable table_gz_to_c(const GzSignature& sig, const GzTable& t) {
  if (sig.is_infinite()) throw Error(ErrorCode::LengthMismatch, "conversion needs a finite signature");
  require_valid(gz_validate(sig, t), "GZ table");
  CTable out;
  for (const auto& row : t.rows) out.rows.push_back(signature_gz_to_c(row));
  require_valid(c_validate(to_c_signature(sig), out), "converted table");
  return out;
}

GzTable table_c_to_gz(const CSignature& sig, const CTable& t) {
  if (sig.is_infinite()) throw Error(ErrorCode::LengthMismatch, "conversion needs a finite signature");
  require_valid(c_validate(sig, t), "C table");
  GzTable out;
  for (const auto& row : t.rows) out.rows.push_back(signature_c_to_gz(row));
  require_valid(gz_validate(to_gz_signature(sig), out), "converted table");
  return out;
}

GzTable truncate_c_to_gz(const CSignature& sig, const CTable& t, int top) {
  if (top < static_cast<int>(t.rows.size())) {
    throw Error(ErrorCode::LengthMismatch, "table deviates above row " + std::to_string(top));
  }
  GzTable out;
  for (int r = 1; r <= top; ++r) {
    Row row;
    for (int i = c_lo(r); i <= c_hi(r); ++i) row.push_back(c_entry(sig, t, i, r));
    out.rows.push_back(signature_c_to_gz(row));
  }
  return out;
}

CTable untruncate_gz_to_c(const CSignature& sig, const GzTable& t) {
  CTable out;
  for (const auto& row : t.rows) out.rows.push_back(signature_gz_to_c(row));
  canonicalize(sig, out);
  return out;
}

}  // namespace glsuper
