#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "glsuper/scalar.hpp"
#include "glsuper/tables.hpp"

namespace testutil {

using namespace glsuper;

inline Rational q(const char* text) { return parse_rational(text); }

inline Row row(std::initializer_list<const char*> items) {
  Row out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

inline RadicalScalar x(const char* text) { return RadicalScalar::parse(text); }

// Inverse of table_id: rows listed top-down, "|" between rows.
inline std::vector<Row> rows_from_id(const std::string& id) {
  std::vector<Row> rows;
  if (id.empty()) return rows;
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, '|')) {
    Row r;
    std::stringstream cs(part);
    std::string cell;
    while (std::getline(cs, cell, ',')) r.push_back(parse_rational(cell));
    rows.insert(rows.begin(), r);
  }
  return rows;
}

inline GzTable gz_table(const std::string& id) { return GzTable{rows_from_id(id)}; }
inline CTable c_table(const std::string& id) { return CTable{rows_from_id(id)}; }

}  // namespace testutil
