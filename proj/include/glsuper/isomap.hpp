#pragma once

#include "glsuper/generator.hpp"
#include "glsuper/tables.hpp"

namespace glsuper {

// g(z) = 2|z| + theta(z), theta(z) = 1 iff z >= 0: a bijection Z -> N.
int g(int z);
int g_inv(int n);

// E(i, j) -> e(g(i), g(j)) and back; parity is preserved.
GeneratorId phi(const GeneratorId& gen);
GeneratorId phi_inv(const GeneratorId& gen);

// Row-by-row relabelling between the two bases of the same finite module.
// Both directions validate their input and their output.
CTable table_gz_to_c(const GzSignature& sig, const GzTable& t);
GzTable table_c_to_gz(const CSignature& sig, const CTable& t);

// Finite GZ view of rows 1..top of an infinite two-sided table.
GzTable truncate_c_to_gz(const CSignature& sig, const CTable& t, int top);
// Inverse of truncate_c_to_gz: rows of a GZ table relabelled back onto an
// infinite two-sided signature (canonical form).
CTable untruncate_gz_to_c(const CSignature& sig, const GzTable& t);

}  // namespace glsuper
