#pragma once

#include <json.hpp>

#include "glsuper/sparse.hpp"
#include "glsuper/tables.hpp"
#include "glsuper/verify.hpp"

namespace glsuper {

using Json = nlohmann::ordered_json;

// A table together with the signature it belongs to.
struct GzDocument {
  GzSignature sig;
  GzTable table;
};

struct CDocument {
  CSignature sig;
  CTable table;
};

// [[num, den, d], ...]; num and den are JSON integers when they fit in 64 bits
// and decimal strings otherwise.
Json to_json(const RadicalScalar& x);
RadicalScalar scalar_from_json(const Json& j);

// Finite:   {"basis": "gz", "signature": [...], "rows": [[m_11], [m_12, m_22], ...]}
// Infinite: {"basis": "gz", "signature_head": [...], "deviations": {"3": [...], ...}}
// Two-sided tables use "basis": "c", rows listed from their lowest index, and an
// infinite signature split into "signature_head" = [M_0, M_1, ...] and
// "signature_neg" = [M_-1, M_-2, ...]. Rationals are strings "p/q".
Json to_json(const GzDocument& doc);
Json to_json(const CDocument& doc);
bool is_gz_document(const Json& j);
// Both validate the table against the signature (InvalidTable names the cell).
GzDocument gz_document(const Json& j);
CDocument c_document(const Json& j);

// {"dim": n, "order": [table ids], "entries": [[row, col, scalar], ...]}
Json to_json(const SparseMatrix& m);

Json to_json(const CheckReport& r);

}  // namespace glsuper
