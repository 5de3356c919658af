#pragma once

// Action of E(i, j) on an infinite two-sided table computed without the
// two-sided formulas: truncate to a finite GZ table a few rows above
// everything the generator and the table touch, act with e(g(i), g(j)) there,
// and relabel the result back.

#include <algorithm>

#include "glsuper/c_rep.hpp"
#include "glsuper/gz_rep.hpp"
#include "glsuper/isomap.hpp"

namespace oracle {

inline glsuper::CVector c_action_via_gz(const glsuper::CSignature& sig, const glsuper::GeneratorId& gen,
                                         const glsuper::CTable& t) {
  using namespace glsuper;
  int top = std::max({static_cast<int>(t.rows.size()), g(gen.i), g(gen.j)}) + 2;
  GzSignature finite = GzSignature::finite(signature_c_to_gz(sig.window(top)));
  GzModule module(finite);
  CVector out;
  for (const auto& [target, c] : module.act(phi(gen), truncate_c_to_gz(sig, t, top))) {
    out.add(untruncate_gz_to_c(sig, target), c);
  }
  return out;
}

}  // namespace oracle
