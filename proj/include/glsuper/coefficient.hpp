#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "glsuper/scalar.hpp"

namespace glsuper {

// Places in the closed formulas whose factors can be perturbed by a test
// fixture, to prove that the relation checks notice a transcription slip.
enum class FormulaSite {
  GzRaise,           // e_{i,i+1} on GZ tables
  GzLower,           // e_{i+1,i} on GZ tables
  CRaiseUpperPair,   // E_{k,k+1}, k >= 1, on two-sided tables
  COther,            // every other closed formula on two-sided tables
};

enum class FactorBlock { Prefactor, OuterNumerator, OuterDenominator, RadicandNumerator, RadicandDenominator };

struct FactorFault {
  FormulaSite site = FormulaSite::GzRaise;
  int term = 0;  // which term family of the formula
  FactorBlock block = FactorBlock::OuterNumerator;
  std::size_t index = 0;
  Rational delta = 1;
};

struct ActionOptions {
  std::uint64_t factor_bound = kDefaultFactorBound;
  std::optional<FactorFault> fault;
  // Incremented every time the fault actually perturbs an evaluated factor.
  std::shared_ptr<std::size_t> fault_hits;
};

// A matrix element written as
//   prefactor * prod(num)/prod(den) * sqrt(sign * prod(rad_num)/prod(rad_den)).
// Zero factors are counted per block before anything is divided: a surplus in
// the numerator gives 0, equal counts cancel, a surplus in the denominator is
// an InvalidCoefficient. A negative radicand is an InvalidCoefficient too.
class Coefficient {
 public:
  Coefficient& prefactor(const Rational& q) {
    prefactor_ = q;
    return *this;
  }
  Coefficient& num(const Rational& q) {
    num_.push_back(q);
    return *this;
  }
  Coefficient& den(const Rational& q) {
    den_.push_back(q);
    return *this;
  }
  // Radicand sign is -1 for the "sqrt(-prod ...)" shape of the formulas.
  Coefficient& radicand_sign(int s) {
    has_root_ = true;
    rad_sign_ = s;
    return *this;
  }
  Coefficient& rad_num(const Rational& q) {
    has_root_ = true;
    rad_num_.push_back(q);
    return *this;
  }
  Coefficient& rad_den(const Rational& q) {
    has_root_ = true;
    rad_den_.push_back(q);
    return *this;
  }

  RadicalScalar evaluate(const ActionOptions& opts, FormulaSite site, int term) const;

 private:
  Rational prefactor_ = 1;
  std::vector<Rational> num_, den_, rad_num_, rad_den_;
  int rad_sign_ = 1;
  bool has_root_ = false;
};

}  // namespace glsuper
