#include "glsuper/json_io.hpp"

#include <limits>
#include <string>

#include "glsuper/errors.hpp"

namespace glsuper {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "integer " + j.dump());
    return z;
  }
  throw Error(ErrorCode::ParseError, "integer " + j.dump());
}

Json row_json(const Row& row) {
  Json out = Json::array();
  for (const auto& q : row) out.push_back(to_string(q));
  return out;
}

Row row_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, what + " must be an array");
  Row out;
  for (const auto& x : j) {
    if (x.is_string()) {
      out.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.push_back(Rational(x.get<long>()));
    } else {
      throw Error(ErrorCode::ParseError, what + " entry " + x.dump() + " is not a rational");
    }
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void require_basis(const Json& j, const char* basis) {
  if (field(j, "basis") != basis) throw Error(ErrorCode::ParseError, std::string("expected basis \"") + basis + "\"");
}

template <class Sig, class Table, class Window>
Json deviations_json(const Sig& sig, const Table& t, Window window) {
  Json out = Json::object();
  for (std::size_t r = 1; r <= t.rows.size(); ++r) {
    if (t.rows[r - 1] != window(sig, static_cast<int>(r))) out[std::to_string(r)] = row_json(t.rows[r - 1]);
  }
  return out;
}

template <class Sig, class Table, class Window>
Table table_from_deviations(const Sig& sig, const Json& j, Window window) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "\"deviations\" must be an object");
  int top = 0;
  for (const auto& [key, value] : j.items()) {
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(key, &used);
      if (used != key.size()) r = 0;
    } catch (const std::exception&) {
      r = 0;
    }
    if (r < 1) throw Error(ErrorCode::ParseError, "deviation row \"" + key + "\"");
    top = std::max(top, r);
  }
  Table t;
  for (int r = 1; r <= top; ++r) {
    std::string key = std::to_string(r);
    t.rows.push_back(j.contains(key) ? row_from_json(j.at(key), "row " + key) : window(sig, r));
  }
  return t;
}

template <class Violations>
void require_valid(const Violations& v) {
  if (!v.empty()) throw Error(ErrorCode::InvalidTable, describe(v.front()));
}

}  // namespace

Json to_json(const RadicalScalar& x) {
  Json out = Json::array();
  for (const auto& term : x.terms()) {
    out.push_back(Json::array({integer_json(term.coeff.get_num()), integer_json(term.coeff.get_den()),
                               static_cast<std::uint64_t>(term.radicand)}));
  }
  return out;
}

RadicalScalar scalar_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "scalar must be a list of [num, den, d] triples");
  RadicalScalar out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[2].is_number_unsigned()) {
      throw Error(ErrorCode::ParseError, "scalar term " + term.dump());
    }
    Integer den = integer_from_json(term[1]);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in " + term.dump());
    Rational q(integer_from_json(term[0]), den);
    q.canonicalize();
    out += RadicalScalar::normalize(q, Integer(static_cast<unsigned long>(term[2].get<std::uint64_t>())));
  }
  return out;
}

Json to_json(const GzDocument& doc) {
  Json out;
  out["basis"] = "gz";
  if (!doc.sig.is_infinite()) {
    out["signature"] = row_json(doc.sig.labels());
    Json rows = Json::array();
    for (const auto& row : doc.table.rows) rows.push_back(row_json(row));
    out["rows"] = rows;
    return out;
  }
  out["signature_head"] = row_json(doc.sig.labels());
  out["deviations"] = deviations_json(doc.sig, doc.table, [](const GzSignature& s, int r) { return s.prefix(r); });
  return out;
}

Json to_json(const CDocument& doc) {
  Json out;
  out["basis"] = "c";
  if (!doc.sig.is_infinite()) {
    out["signature"] = row_json(doc.sig.window(doc.sig.top_row()));
    Json rows = Json::array();
    for (const auto& row : doc.table.rows) rows.push_back(row_json(row));
    out["rows"] = rows;
    return out;
  }
  Row head{doc.sig.m0()};
  head.insert(head.end(), doc.sig.positive().begin(), doc.sig.positive().end());
  out["signature_head"] = row_json(head);
  out["signature_neg"] = row_json(doc.sig.negative());
  out["deviations"] = deviations_json(doc.sig, doc.table, [](const CSignature& s, int r) { return s.window(r); });
  return out;
}

bool is_gz_document(const Json& j) { return field(j, "basis") == "gz"; }

GzDocument gz_document(const Json& j) {
  require_basis(j, "gz");
  GzDocument doc;
  if (j.contains("signature")) {
    doc.sig = GzSignature::finite(row_from_json(j.at("signature"), "signature"));
    for (const auto& row : field(j, "rows")) doc.table.rows.push_back(row_from_json(row, "row"));
  } else {
    doc.sig = GzSignature::infinite(row_from_json(field(j, "signature_head"), "signature_head"));
    doc.table = table_from_deviations<GzSignature, GzTable>(doc.sig, field(j, "deviations"),
                                                           [](const GzSignature& s, int r) { return s.prefix(r); });
  }
  require_valid(gz_validate(doc.sig, doc.table));
  if (doc.sig.is_infinite()) canonicalize(doc.sig, doc.table);
  return doc;
}

CDocument c_document(const Json& j) {
  require_basis(j, "c");
  CDocument doc;
  if (j.contains("signature")) {
    doc.sig = CSignature::finite(row_from_json(j.at("signature"), "signature"));
    for (const auto& row : field(j, "rows")) doc.table.rows.push_back(row_from_json(row, "row"));
  } else {
    doc.sig = CSignature::infinite(row_from_json(field(j, "signature_head"), "signature_head"),
                                   row_from_json(field(j, "signature_neg"), "signature_neg"));
    doc.table = table_from_deviations<CSignature, CTable>(doc.sig, field(j, "deviations"),
                                                         [](const CSignature& s, int r) { return s.window(r); });
  }
  require_valid(c_validate(doc.sig, doc.table));
  if (doc.sig.is_infinite()) canonicalize(doc.sig, doc.table);
  return doc;
}

Json to_json(const SparseMatrix& m) {
  Json out;
  out["dim"] = m.dim;
  out["order"] = m.order;
  Json entries = Json::array();
  for (const auto& [row, col, value] : m.entries) entries.push_back(Json::array({row, col, to_json(value)}));
  out["entries"] = entries;
  return out;
}

Json to_json(const CheckReport& r) {
  Json out;
  out["check"] = r.check;
  out["instance"] = r.instance;
  out["pass"] = r.pass;
  out["cases"] = r.cases;
  if (!r.pass) out["counterexample"] = r.counterexample;
  return out;
}

}  // namespace glsuper
