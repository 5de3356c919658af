#include "glsuper/coefficient.hpp"

#include "glsuper/errors.hpp"

namespace glsuper {

namespace {

struct ZeroSplit {
  std::size_t zeros = 0;
  std::vector<Rational> nonzero;
};

ZeroSplit split_zeros(const std::vector<Rational>& factors) {
  ZeroSplit out;
  for (const auto& f : factors) {
    if (f == 0) {
      ++out.zeros;
    } else {
      out.nonzero.push_back(f);
    }
  }
  return out;
}

// Returns false when the block vanishes; throws on an unresolved 0/0.
bool cancel_block(const std::vector<Rational>& num, const std::vector<Rational>& den, ZeroSplit* n, ZeroSplit* d) {
  *n = split_zeros(num);
  *d = split_zeros(den);
  if (n->zeros > d->zeros) return false;
  if (n->zeros < d->zeros) throw Error(ErrorCode::InvalidCoefficient, "zero denominator after cancellation");
  return true;
}

}  // namespace

RadicalScalar Coefficient::evaluate(const ActionOptions& opts, FormulaSite site, int term) const {
  Rational pre = prefactor_;
  std::vector<Rational> num = num_, den = den_, rad_num = rad_num_, rad_den = rad_den_;
  if (opts.fault && opts.fault->site == site && opts.fault->term == term) {
    const FactorFault& f = *opts.fault;
    auto bump = [&](std::vector<Rational>& v) {
      if (f.index >= v.size()) return;
      v[f.index] += f.delta;
      if (opts.fault_hits) ++*opts.fault_hits;
    };
    switch (f.block) {
      case FactorBlock::Prefactor:
        if (f.index == 0) {
          pre += f.delta;
          if (opts.fault_hits) ++*opts.fault_hits;
        }
        break;
      case FactorBlock::OuterNumerator: bump(num); break;
      case FactorBlock::OuterDenominator: bump(den); break;
      case FactorBlock::RadicandNumerator: bump(rad_num); break;
      case FactorBlock::RadicandDenominator: bump(rad_den); break;
    }
  }
  if (pre == 0) return {};

  ZeroSplit n, d;
  if (!cancel_block(num, den, &n, &d)) return {};
  Rational outer = pre;
  for (const auto& f : n.nonzero) outer *= f;
  for (const auto& f : d.nonzero) outer /= f;
  if (!has_root_) return RadicalScalar(outer);

  ZeroSplit rn, rd;
  if (!cancel_block(rad_num, rad_den, &rn, &rd)) return {};
  int sign = rad_sign_;
  for (auto& f : rn.nonzero) {
    sign *= sgn(f);
    f = abs(f);
  }
  for (auto& f : rd.nonzero) {
    sign *= sgn(f);
    f = abs(f);
  }
  if (sign < 0) throw Error(ErrorCode::InvalidCoefficient, "negative radicand on a valid target");
  return RadicalScalar::sqrt_of_product(rn.nonzero, rd.nonzero, opts.factor_bound) * outer;
}

}  // namespace glsuper
