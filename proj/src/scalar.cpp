#include "glsuper/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "glsuper/errors.hpp"

namespace glsuper {

namespace {

using PrimePowers = std::vector<std::pair<std::uint64_t, int>>;

bool fits_u64(const Integer& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

PrimePowers factor_u64(std::uint64_t n, std::uint64_t bound) {
  thread_local std::unordered_map<std::uint64_t, PrimePowers> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  PrimePowers out;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (p > bound) {
      throw Error(ErrorCode::FactorizationBoundExceeded,
                  "cannot certify squarefree part of " + std::to_string(n));
    }
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  if (memo.size() < (1u << 16)) memo.emplace(n, out);
  return out;
}

// Trial division on arbitrary-size integers; only reached for values beyond 64 bits.
std::vector<std::pair<Integer, int>> factor_big(Integer rest, std::uint64_t bound) {
  std::vector<std::pair<Integer, int>> out;
  for (std::uint64_t p = 2; Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (p > bound) {
      throw Error(ErrorCode::FactorizationBoundExceeded,
                  "cannot certify squarefree part of " + rest.get_str());
    }
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(from_u64(p)), e);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

// Accumulates prime exponents of a product of rationals, then splits the
// result into (rational square root part) * sqrt(squarefree integer).
class SquareSplitter {
 public:
  explicit SquareSplitter(std::uint64_t bound) : bound_(bound) {}

  void add(const Integer& n, int sign) {
    Integer a = abs(n);
    if (a <= 1) return;
    if (fits_u64(a)) {
      for (auto [p, e] : factor_u64(to_u64(a), bound_)) small_[p] += sign * e;
    } else {
      for (auto& [p, e] : factor_big(a, bound_)) big_[p] += sign * e;
    }
  }

  void add(const Rational& q, int sign) {
    add(q.get_num(), sign);
    add(q.get_den(), -sign);
  }

  // Returns (outer, radicand) with sqrt(product) = outer * sqrt(radicand).
  std::pair<Rational, Integer> finish() const {
    Integer num = 1, den = 1, rad = 1;
    auto place = [&](const Integer& p, int e) {
      // e = 2a + b with b in {0, 1}
      int b = ((e % 2) + 2) % 2;
      int a = (e - b) / 2;
      Integer pa;
      mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(a)));
      if (a > 0) num *= pa;
      if (a < 0) den *= pa;
      if (b == 1) rad *= p;
    };
    for (auto& [p, e] : small_) place(from_u64(p), e);
    for (auto& [p, e] : big_) place(p, e);
    Rational outer(num, den);
    outer.canonicalize();
    return {outer, rad};
  }

 private:
  std::uint64_t bound_;
  std::map<std::uint64_t, int> small_;
  std::map<Integer, int> big_;
};

std::uint64_t checked_radicand(const Integer& d) {
  if (!fits_u64(d)) {
    throw Error(ErrorCode::FactorizationBoundExceeded, "radicand too large: " + d.get_str());
  }
  return to_u64(d);
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  auto valid_int = [](std::string_view part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonneg_integer(const Rational& q) { return q.get_den() == 1 && q >= 0; }

std::pair<Integer, Integer> split_square(const Integer& n, std::uint64_t bound) {
  if (n < 0) throw Error(ErrorCode::NegativeRadicand, n.get_str());
  if (n == 0) return {Integer(0), Integer(1)};
  SquareSplitter splitter(bound);
  splitter.add(n, 1);
  auto [outer, rad] = splitter.finish();
  return {outer.get_num(), rad};
}

RadicalScalar::RadicalScalar(const Rational& q) {
  if (q == 0) return;
  terms_.push_back({1, q});
  terms_.back().coeff.canonicalize();
}

RadicalScalar RadicalScalar::normalize(const Rational& q, const Integer& n, std::uint64_t bound) {
  if (n < 0) throw Error(ErrorCode::NegativeRadicand, n.get_str());
  if (q == 0 || n == 0) return {};
  auto [s, d] = split_square(n, bound);
  RadicalScalar out;
  out.terms_.push_back({checked_radicand(d), q * s});
  out.terms_.back().coeff.canonicalize();
  return out;
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& q, std::uint64_t bound) {
  if (q < 0) throw Error(ErrorCode::NegativeRadicand, q.get_str());
  if (q == 0) return {};
  return sqrt_of_product({q}, {}, bound);
}

RadicalScalar RadicalScalar::sqrt_of_product(const std::vector<Rational>& num,
                                             const std::vector<Rational>& den,
                                             std::uint64_t bound) {
  SquareSplitter splitter(bound);
  int negatives = 0;
  for (const auto& f : num) {
    if (f == 0) return {};
    negatives += sgn(f) < 0;
    splitter.add(f, 1);
  }
  for (const auto& f : den) {
    if (f == 0) throw Error(ErrorCode::InvalidCoefficient, "zero denominator under square root");
    negatives += sgn(f) < 0;
    splitter.add(f, -1);
  }
  if (negatives % 2 != 0) throw Error(ErrorCode::NegativeRadicand, "negative product under square root");
  auto [outer, rad] = splitter.finish();
  RadicalScalar out;
  out.terms_.push_back({checked_radicand(rad), outer});
  return out;
}

bool RadicalScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

Rational RadicalScalar::rational_part() const {
  if (!terms_.empty() && terms_.front().radicand == 1) return terms_.front().coeff;
  return 0;
}

void RadicalScalar::add_term(Radicand d, const Rational& q) {
  if (q == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const Term& t, Radicand key) { return t.radicand < key; });
  if (it != terms_.end() && it->radicand == d) {
    it->coeff += q;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{d, q});
  }
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& other) {
  for (const auto& t : other.terms_) add_term(t.radicand, t.coeff);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& other) {
  for (const auto& t : other.terms_) add_term(t.radicand, -t.coeff);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= q;
  return *this;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      // sqrt(d) sqrt(d') = g sqrt((d/g)(d'/g)), g = gcd(d, d'); both factors stay squarefree.
      std::uint64_t g = std::gcd(x.radicand, y.radicand);
      unsigned __int128 d = static_cast<unsigned __int128>(x.radicand / g) * (y.radicand / g);
      if (d > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorCode::FactorizationBoundExceeded, "radicand product overflows 64 bits");
      }
      out.add_term(static_cast<std::uint64_t>(d), x.coeff * y.coeff * Rational(from_u64(g)));
    }
  }
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].radicand != b.terms_[i].radicand || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += "+";
    out += t.coeff.get_str();
    if (t.radicand != 1) out += "*sqrt(" + std::to_string(t.radicand) + ")";
  }
  return out;
}

RadicalScalar RadicalScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  RadicalScalar out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    // A '+' separates terms unless it is the sign directly after another '+'.
    std::size_t next = s.find('+', pos + 1);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (!term.empty() && term.front() == '+') term.erase(term.begin());
    auto star = term.find("*sqrt(");
    if (star == std::string::npos) {
      out += RadicalScalar(parse_rational(term));
    } else {
      if (term.back() != ')') throw Error(ErrorCode::ParseError, "bad radical term '" + term + "'");
      std::string digits = term.substr(star + 6, term.size() - star - 7);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::ParseError, "bad radicand in '" + term + "'");
      }
      Integer d(digits);
      out += normalize(parse_rational(term.substr(0, star)), d);
    }
    if (next == std::string::npos) break;
    pos = next;
  }
  return out;
}

double RadicalScalar::approx() const {
  double out = 0.0;
  for (const auto& t : terms_) out += t.coeff.get_d() * std::sqrt(static_cast<double>(t.radicand));
  return out;
}

}  // namespace glsuper
