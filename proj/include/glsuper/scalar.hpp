#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glsuper {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::uint64_t kDefaultFactorBound = 1000000;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// True iff q is an integer (q - m in Z) and q >= 0.
bool is_nonneg_integer(const Rational& q);
bool is_integer(const Rational& q);

// Splits n = s^2 * d with d squarefree. Trial division stops at `bound`; if the
// cofactor cannot be certified squarefree by then, FactorizationBoundExceeded.
std::pair<Integer, Integer> split_square(const Integer& n, std::uint64_t bound = kDefaultFactorBound);

// An element of Q(sqrt(d) : d in N) kept as a formal sum q_1 + q_2 sqrt(2) + ...
// with squarefree radicands and no zero coefficients, so that equality of
// canonical forms is field equality.
class RadicalScalar {
 public:
  using Radicand = std::uint64_t;

  struct Term {
    Radicand radicand;
    Rational coeff;
  };

  RadicalScalar() = default;
  RadicalScalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  RadicalScalar(long q) : RadicalScalar(Rational(q)) {}  // NOLINT

  // q * sqrt(n), n >= 0.
  static RadicalScalar normalize(const Rational& q, const Integer& n,
                                 std::uint64_t bound = kDefaultFactorBound);
  // Positive square root of q >= 0; NegativeRadicand otherwise.
  static RadicalScalar sqrt_of(const Rational& q, std::uint64_t bound = kDefaultFactorBound);
  // Positive square root of prod(num) / prod(den). Factors are split one at a
  // time, which keeps trial division cheap for long products of small numbers.
  // All factors must be nonzero and the product positive.
  static RadicalScalar sqrt_of_product(const std::vector<Rational>& num,
                                       const std::vector<Rational>& den,
                                       std::uint64_t bound = kDefaultFactorBound);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  const std::vector<Term>& terms() const { return terms_; }

  RadicalScalar& operator+=(const RadicalScalar& other);
  RadicalScalar& operator-=(const RadicalScalar& other);
  RadicalScalar& operator*=(const Rational& q);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator*(RadicalScalar a, const Rational& q) { return a *= q; }
  friend RadicalScalar operator*(const Rational& q, RadicalScalar a) { return a *= q; }
  RadicalScalar operator-() const;

  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);
  friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

  // "q" or "q*sqrt(d)" terms joined by "+"; "0" for zero.
  std::string to_string() const;
  static RadicalScalar parse(std::string_view text);
  double approx() const;

 private:
  void add_term(Radicand d, const Rational& q);

  std::vector<Term> terms_;  // sorted by radicand
};

}  // namespace glsuper
