#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "glsuper/coefficient.hpp"
#include "glsuper/representation.hpp"
#include "glsuper/tables.hpp"

namespace glsuper {

// ---------------------------------------------------------------------------
// Signature relabelling for one row of length r = 2k + theta.

// [m_1, ..., m_r] -> [M_{-k}, ..., M_{k-1+theta}]
Row signature_gz_to_c(const Row& m);
// [M_{-k}, ..., M_{k-1+theta}] -> [m_1, ..., m_r]
Row signature_c_to_gz(const Row& M);

CSignature to_c_signature(const GzSignature& sig);
GzSignature to_gz_signature(const CSignature& sig);

// True iff t is the highest weight table of the gl(k|1|k-1+theta) flag at
// the top level r = 2k + theta of its signature.
bool c_hwv_flag_conditions(const GzSignature& sig, const GzTable& t);

// ---------------------------------------------------------------------------
// The module in the two-sided basis.

using CVector = SparseVector<CTable>;

// Which generators are acted on by closed formulas:
//   Simple    - the preimages of e(p, p+1), e(p+1, p) (finite formulas);
//               everything else is bracketed in the gl(1|N) index order.
//   Chevalley - E(k, k+1), E(k+1, k) (infinite formulas);
//               everything else is bracketed in the Z index order.
enum class CRoute { Simple, Chevalley };

struct Shift {
  int i;
  int r;
  int delta;
};

class CModule : public Representation<CTable> {
 public:
  // Default route: Simple for finite signatures, Chevalley for infinite ones.
  explicit CModule(CSignature sig, ActionOptions opts = {}, std::optional<CRoute> route = std::nullopt);

  const CSignature& signature() const { return sig_; }
  const ActionOptions& options() const { return opts_; }
  CRoute route() const { return route_; }
  bool is_infinite() const { return sig_.is_infinite(); }

  bool in_range(const GeneratorId& gen) const override;
  bool is_base(const GeneratorId& gen) const override;
  CVector act_base(const GeneratorId& gen, const CTable& t) const override;
  std::pair<GeneratorId, GeneratorId> split(const GeneratorId& gen) const override;

  RadicalScalar cartan(int i, const CTable& t) const;
  // E(0,-1), E(-1,0), E(i-1,-i), E(-i,i), E(i,-i), E(-i,i-1).
  CVector act_finite(const GeneratorId& gen, const CTable& t) const;
  // E(0,1), E(1,0), E(0,-1), E(-1,0), E(k,k+1), E(k+1,k), E(-k+1,-k), E(-k,-k+1).
  CVector act_chevalley(const GeneratorId& gen, const CTable& t) const;

  std::optional<CTable> shifted(const CTable& t, std::initializer_list<Shift> shifts) const;

  CTable highest() const { return c_highest_table(sig_); }
  std::vector<CTable> basis(std::size_t guard = kDefaultEnumerationGuard) const { return c_enumerate(sig_, guard); }

  static bool is_finite_formula_generator(const GeneratorId& gen);

 private:
  Rational L(const CTable& t, int i, int r) const { return c_L(sig_, t, i, r); }
  Rational psi(const CTable& t, int r) const { return c_psi(sig_, t, r); }

  CVector raise_upper_pair(int k, const CTable& t) const;   // E(k,k+1), k >= 1
  CVector raise_lower_pair(int k, const CTable& t) const;   // E(-k+1,-k), k >= 2
  CVector lower_upper_pair(int k, const CTable& t) const;   // E(k+1,k), k >= 1
  CVector lower_lower_pair(int k, const CTable& t) const;   // E(-k,-k+1), k >= 2

  CSignature sig_;
  ActionOptions opts_;
  CRoute route_;
};

SparseMatrix c_matrix(const GeneratorId& gen, const CSignature& sig,
                      std::size_t guard = kDefaultEnumerationGuard, const ActionOptions& opts = {});

// ---------------------------------------------------------------------------
// Odd reflections on gl(1|N) weights. Weights are coefficient lists over
// eps^1, ..., eps^N+1 (index 0 holds eps^1); a positive system is an ordering
// of the indices whose adjacent pairs are the simple roots.

struct Root {
  int a;  // eps^a - eps^b
  int b;
  bool odd() const { return (a == 1) != (b == 1); }
};

class RootOrdering {
 public:
  explicit RootOrdering(int size);
  bool is_simple(const Root& alpha) const;
  void reflect(const Root& alpha);
  const std::vector<int>& order() const { return order_; }

 private:
  std::vector<int> order_;
};

// Highest weight with respect to the reflected positive system: lambda - alpha
// for odd alpha, the Weyl transposition of coefficients a, b for even alpha.
// `ordering` is updated; NotSimpleRoot if alpha is not simple in it.
Row odd_reflection(const Row& weight, const Root& alpha, RootOrdering& ordering);

// The reflections that carry the distinguished positive system of gl(1|r-1),
// r = 2k + theta, to the one adapted to the two-sided chain, in application order.
std::vector<Root> reflection_chain(int r);

}  // namespace glsuper
