#include "glsuper/c_rep.hpp"

#include <algorithm>
#include <climits>

#include "glsuper/errors.hpp"
#include "glsuper/isomap.hpp"

namespace glsuper {

namespace {

// Nonzero integers of [a, b], optionally skipping one more value.
std::vector<int> nz(int a, int b, int skip = INT_MIN) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) {
    if (i != 0 && i != skip) out.push_back(i);
  }
  return out;
}

Rational sign_power(const Rational& psi) { return is_integer(psi) && mpz_even_p(psi.get_num_mpz_t()) ? 1 : -1; }

int P(int j, int l) { return j >= l ? 1 : -1; }
int Q(int j, int l) { return j > l ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------------------
// Signatures

Row signature_gz_to_c(const Row& m) {
  int r = static_cast<int>(m.size());
  if (r == 0) throw Error(ErrorCode::LengthMismatch, "empty row");
  int k = level_k(r);
  int theta = level_theta(r);
  auto at = [&](int s) -> const Rational& { return m[static_cast<std::size_t>(s - 1)]; };
  Row out;
  for (int i = -k; i <= -1; ++i) out.push_back(at(i + k + 2) + 1);
  out.push_back(at(1) - k);
  for (int i = 1; i <= k - 1 + theta; ++i) out.push_back(at(i + k + 1));
  return out;
}

Row signature_c_to_gz(const Row& M) {
  int r = static_cast<int>(M.size());
  if (r == 0) throw Error(ErrorCode::LengthMismatch, "empty row");
  int k = level_k(r);
  auto at = [&](int i) -> const Rational& { return M[static_cast<std::size_t>(i - c_lo(r))]; };
  Row out(static_cast<std::size_t>(r));
  out[0] = at(0) + k;
  for (int s = 2; s <= k + 1; ++s) out[static_cast<std::size_t>(s - 1)] = at(s - k - 2) - 1;
  for (int s = k + 2; s <= r; ++s) out[static_cast<std::size_t>(s - 1)] = at(s - k - 1);
  return out;
}

CSignature to_c_signature(const GzSignature& sig) {
  if (sig.is_infinite()) throw Error(ErrorCode::LengthMismatch, "infinite signatures are relabelled per row");
  return CSignature::finite(signature_gz_to_c(sig.labels()));
}

GzSignature to_gz_signature(const CSignature& sig) {
  if (sig.is_infinite()) throw Error(ErrorCode::LengthMismatch, "infinite signatures are relabelled per row");
  return GzSignature::finite(signature_c_to_gz(sig.window(sig.top_row())));
}

bool c_hwv_flag_conditions(const GzSignature& sig, const GzTable& t) {
  int r = sig.length();
  int k = level_k(r);
  int theta = level_theta(r);
  for (int i = 1; i <= k; ++i) {
    if (gz_theta(sig, t, 2 * i - 1) != 1) return false;
  }
  for (int i = 1; i <= k - 1 + theta; ++i) {
    if (gz_theta(sig, t, 2 * i) != 0) return false;
  }
  for (int i = 1; i <= k - 1 + theta; ++i) {
    for (int s = 2; s <= 2 * i; ++s) {
      if (gz_l(sig, t, s, 2 * i + 1) != gz_l(sig, t, s, 2 * i)) return false;
    }
  }
  for (int i = 2; i <= k; ++i) {
    for (int s = 2; s <= 2 * i - 1; ++s) {
      if (gz_l(sig, t, s + 1, 2 * i) - gz_l(sig, t, s, 2 * i - 1) - 1 != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Module plumbing

CModule::CModule(CSignature sig, ActionOptions opts, std::optional<CRoute> route)
    : sig_(std::move(sig)), opts_(std::move(opts)) {
  if (!c_is_essentially_typical(sig_)) throw Error(ErrorCode::NotEssentiallyTypical, "C signature");
  route_ = route.value_or(sig_.is_infinite() ? CRoute::Chevalley : CRoute::Simple);
}

bool CModule::in_range(const GeneratorId& gen) const {
  if (gen.convention != Convention::Glz) return false;
  return sig_.is_infinite() || (g(gen.i) <= sig_.top_row() && g(gen.j) <= sig_.top_row());
}

bool CModule::is_finite_formula_generator(const GeneratorId& gen) {
  return gen.convention == Convention::Glz && std::abs(g(gen.i) - g(gen.j)) == 1;
}

bool CModule::is_base(const GeneratorId& gen) const {
  if (gen.i == gen.j) return true;
  if (route_ == CRoute::Simple) return is_finite_formula_generator(gen);
  return std::abs(gen.i - gen.j) == 1;
}

std::pair<GeneratorId, GeneratorId> CModule::split(const GeneratorId& gen) const {
  if (route_ == CRoute::Chevalley) {
    int k = gen.i < gen.j ? gen.j - 1 : gen.j + 1;
    return {GeneratorId::E(gen.i, k), GeneratorId::E(k, gen.j)};
  }
  int p = g(gen.i);
  int q = g(gen.j);
  int k = g_inv(p < q ? q - 1 : q + 1);
  return {GeneratorId::E(gen.i, k), GeneratorId::E(k, gen.j)};
}

CVector CModule::act_base(const GeneratorId& gen, const CTable& t) const {
  if (gen.i == gen.j) {
    CVector out;
    out.add(t, cartan(gen.i, t));
    return out;
  }
  return route_ == CRoute::Simple ? act_finite(gen, t) : act_chevalley(gen, t);
}

RadicalScalar CModule::cartan(int i, const CTable& t) const {
  if (!in_range(GeneratorId::E(i, i))) throw Error(ErrorCode::IndexOutOfRange, GeneratorId::E(i, i).name());
  int a = std::abs(i);
  int theta = i >= 0 ? 1 : 0;
  int row = 2 * a + theta;
  Rational sum = 0;
  for (int j = -a; j <= a + theta - 1; ++j) sum += c_entry(sig_, t, j, row);
  for (int j = -a + 1 - theta; j <= a - 1; ++j) sum -= c_entry(sig_, t, j, row - 1);
  return RadicalScalar(sum);
}

std::optional<CTable> CModule::shifted(const CTable& t, std::initializer_list<Shift> shifts) const {
  CTable out = t;
  for (const auto& s : shifts) {
    if (!sig_.is_infinite() && s.r >= sig_.top_row()) return std::nullopt;
    while (static_cast<int>(out.rows.size()) < s.r) out.rows.push_back(sig_.window(static_cast<int>(out.rows.size()) + 1));
    out.rows[static_cast<std::size_t>(s.r - 1)][static_cast<std::size_t>(s.i - c_lo(s.r))] += s.delta;
  }
  for (const auto& s : shifts) {
    if (s.r >= 2 && !c_pair_ok(sig_, out, s.r - 1)) return std::nullopt;
    if (!c_pair_ok(sig_, out, s.r)) return std::nullopt;
  }
  canonicalize(sig_, out);
  return out;
}

// ---------------------------------------------------------------------------
// Finite formulas: the preimages of the simple generators of gl(1|N).

CVector CModule::act_finite(const GeneratorId& gen, const CTable& t) const {
  if (!in_range(gen)) throw Error(ErrorCode::IndexOutOfRange, gen.name());
  const int a = gen.i;
  const int b = gen.j;
  CVector out;
  auto emit = [&](std::initializer_list<Shift> shifts, const Coefficient& c) {
    auto target = shifted(t, shifts);
    if (!target) return;
    out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
  };

  if (a == 0 && b == -1) {
    emit({{0, 1, +1}}, Coefficient().prefactor(1 + psi(t, 1)));
  } else if (a == -1 && b == 0) {
    emit({{0, 1, -1}}, Coefficient().prefactor(-psi(t, 1)).num(L(t, 0, 2) - L(t, -1, 2)));
  } else if (a >= 1 && b == -a - 1) {
    // E(i-1, -i), rows 2i-2 .. 2i around r = 2i - 1
    const int i = a + 1;
    const int r = 2 * i - 1;
    emit({{0, r, +1}}, Coefficient().prefactor((1 + psi(t, 2 * i - 1)) * (1 - psi(t, 2 * i - 2))));
    for (int j : nz(-i + 1, i - 1)) {
      Rational x = L(t, j, r);
      Coefficient c;
      c.radicand_sign(-1);
      for (int k : nz(-i + 1, i - 2)) c.rad_num(L(t, k, 2 * i - 2) - x + 1);
      for (int k : nz(-i, i - 1)) c.rad_num(L(t, k, 2 * i) - x + 1);
      for (int k : nz(-i + 1, i - 1, j)) c.rad_den(L(t, k, r) - x).rad_den(L(t, k, r) - x + 1);
      c.num(L(t, 0, r) - x).num(L(t, 0, r) - x + 1);
      c.den(L(t, 0, 2 * i) - x + 1).den(L(t, 0, 2 * i - 2) - x + 1);
      emit({{j, r, +1}}, c);
    }
  } else if (a <= -1 && b == -a) {
    // E(-i, i), r = 2i
    const int i = b;
    const int r = 2 * i;
    emit({{0, r, +1}}, Coefficient().prefactor(-psi(t, 2 * i) * psi(t, 2 * i - 1)));
    for (int j : nz(-i, i - 1)) {
      Rational x = L(t, j, r);
      Coefficient c;
      c.radicand_sign(-1);
      for (int k : nz(-i + 1, i - 1)) c.rad_num(L(t, k, 2 * i - 1) - x);
      for (int k : nz(-i, i)) c.rad_num(L(t, k, 2 * i + 1) - x);
      for (int k : nz(-i, i - 1, j)) c.rad_den(L(t, k, r) - x).rad_den(L(t, k, r) - x + 1);
      c.num(L(t, 0, r) - x).num(L(t, 0, r) - x + 1);
      c.den(L(t, 0, 2 * i + 1) - x).den(L(t, 0, 2 * i - 1) - x);
      emit({{j, r, +1}}, c);
    }
  } else if (a >= 1 && b == -a) {
    // E(i, -i), r = 2i
    const int i = a;
    const int r = 2 * i;
    {
      Rational X = L(t, 0, 2 * i + 1);
      Coefficient c;
      c.prefactor((1 + psi(t, 2 * i - 1)) * (1 - psi(t, 2 * i)));
      for (int k : nz(-i + 1, i - 1)) c.num(X - L(t, k, 2 * i - 1));
      for (int k : nz(-i, i)) c.num(X - L(t, k, 2 * i + 1));
      for (int k : nz(-i, i - 1)) c.den(X - L(t, k, r) - 1).den(X - L(t, k, r));
      emit({{0, r, -1}}, c);
    }
    for (int j : nz(-i, i - 1)) {
      Rational x = L(t, j, r);
      Coefficient c;
      c.radicand_sign(-1);
      for (int k : nz(-i + 1, i - 1)) c.rad_num(L(t, k, 2 * i - 1) - x - 1);
      for (int k : nz(-i, i)) c.rad_num(L(t, k, 2 * i + 1) - x - 1);
      for (int k : nz(-i, i - 1, j)) c.rad_den(L(t, k, r) - x - 1).rad_den(L(t, k, r) - x);
      emit({{j, r, -1}}, c);
    }
  } else if (a <= -2 && b == -a - 1) {
    // E(-i, i-1), r = 2i - 1
    const int i = -a;
    const int r = 2 * i - 1;
    {
      Rational X = L(t, 0, 2 * i);
      Coefficient c;
      c.prefactor(-psi(t, 2 * i - 2) * psi(t, 2 * i - 1));
      for (int k : nz(-i + 1, i - 2)) c.num(X - L(t, k, 2 * i - 2));
      for (int k : nz(-i, i - 1)) c.num(X - L(t, k, 2 * i));
      for (int k : nz(-i + 1, i - 1)) c.den(X - L(t, k, r)).den(X - L(t, k, r) + 1);
      emit({{0, r, -1}}, c);
    }
    for (int j : nz(-i + 1, i - 1)) {
      Rational x = L(t, j, r);
      Coefficient c;
      c.radicand_sign(-1);
      for (int k : nz(-i + 1, i - 2)) c.rad_num(L(t, k, 2 * i - 2) - x);
      for (int k : nz(-i, i - 1)) c.rad_num(L(t, k, 2 * i) - x);
      for (int k : nz(-i + 1, i - 1, j)) c.rad_den(L(t, k, r) - x - 1).rad_den(L(t, k, r) - x);
      emit({{j, r, -1}}, c);
    }
  } else {
    throw Error(ErrorCode::IndexOutOfRange, gen.name() + " has no closed finite formula");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chevalley formulas for the two-sided chain.

CVector CModule::act_chevalley(const GeneratorId& gen, const CTable& t) const {
  if (!in_range(gen)) throw Error(ErrorCode::IndexOutOfRange, gen.name());
  const int a = gen.i;
  const int b = gen.j;
  if ((a == 0 && b == -1) || (a == -1 && b == 0)) return act_finite(gen, t);
  if (a == 0 && b == 1) {
    CVector out;
    if (auto target = shifted(t, {{0, 1, +1}, {0, 2, +1}})) {
      Coefficient c;
      c.prefactor(-psi(t, 2) * (1 + 2 * psi(t, 1)));
      out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
    }
    if (auto target = shifted(t, {{0, 1, +1}, {-1, 2, +1}})) {
      Rational x = L(t, -1, 2);
      Coefficient c;
      c.prefactor(1 + psi(t, 1));
      c.radicand_sign(-1).rad_num(L(t, -1, 3) - x).rad_num(L(t, 1, 3) - x);
      c.num(L(t, 0, 2) - x).num(L(t, 0, 2) - x + 1);
      c.den(L(t, 0, 3) - x).den(L(t, 0, 1) - x).den(L(t, 0, 1) - x + 1);
      out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
    }
    return out;
  }
  if (a == 1 && b == 0) {
    CVector out;
    Rational p1 = psi(t, 1);
    if (auto target = shifted(t, {{0, 1, -1}, {0, 2, -1}})) {
      Rational x = L(t, -1, 2);
      Coefficient c;
      c.prefactor(-sign_power(p1) * (1 - psi(t, 2)));
      c.num(L(t, 0, 2) - x - p1 - 1).num(L(t, 0, 3) - L(t, -1, 3)).num(L(t, 0, 3) - L(t, 1, 3));
      c.den(L(t, 0, 3) - x - 1).den(L(t, 0, 3) - x);
      out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
    }
    if (auto target = shifted(t, {{0, 1, -1}, {-1, 2, -1}})) {
      Rational x = L(t, -1, 2);
      Coefficient c;
      c.prefactor(-p1);
      c.radicand_sign(-1).rad_num(L(t, -1, 3) - x - 1).rad_num(L(t, 1, 3) - x - 1);
      out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
    }
    return out;
  }
  if (a >= 1 && b == a + 1) return raise_upper_pair(a, t);
  if (b <= -1 && a == b + 1) return raise_lower_pair(-b, t);
  if (a >= 2 && b == a - 1) return lower_upper_pair(b, t);
  if (a <= -2 && b == a + 1) return lower_lower_pair(-a, t);
  throw Error(ErrorCode::IndexOutOfRange, gen.name() + " is not a Chevalley generator");
}

// E(k, k+1): raises one entry in each of rows 2k+1 and 2k+2.
CVector CModule::raise_upper_pair(int k, const CTable& t) const {
  const int r1 = 2 * k + 1;
  const int r2 = 2 * k + 2;
  const int r3 = 2 * k + 3;
  const int r0 = 2 * k;
  CVector out;
  auto emit = [&](std::initializer_list<Shift> shifts, int term, const Coefficient& c) {
    auto target = shifted(t, shifts);
    if (!target) return;
    out.add(*target, c.evaluate(opts_, FormulaSite::CRaiseUpperPair, term));
  };
  emit({{0, r1, +1}, {0, r2, +1}}, 0,
       Coefficient().prefactor(-psi(t, r2) * (1 - psi(t, r0)) * (1 + 2 * psi(t, r1))));
  for (int j : nz(-k, k)) {
    Rational x = L(t, j, r1);
    Coefficient c;
    c.prefactor(psi(t, r2) * psi(t, r1));
    c.radicand_sign(-1);
    for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, r0) - x + 1);
    for (int i : nz(-k - 1, k)) c.rad_num(L(t, i, r2) - x + 1);
    for (int i : nz(-k, k, j)) c.rad_den(L(t, i, r1) - x).rad_den(L(t, i, r1) - x + 1);
    c.num(L(t, 0, r1) - x).num(L(t, 0, r1) - x + 1);
    c.den(L(t, 0, r2) - x + 2).den(L(t, 0, r2) - x + 1).den(L(t, 0, r0) - x + 1);
    emit({{j, r1, +1}, {0, r2, +1}}, 1, c);
  }
  for (int j : nz(-k - 1, k)) {
    Rational x = L(t, j, r2);
    Coefficient c;
    c.prefactor((1 + psi(t, r1)) * (1 - psi(t, r0)));
    c.radicand_sign(-1);
    for (int i : nz(-k, k)) c.rad_num(L(t, i, r1) - x);
    for (int i : nz(-k - 1, k + 1)) c.rad_num(L(t, i, r3) - x);
    for (int i : nz(-k - 1, k, j)) c.rad_den(L(t, i, r2) - x).rad_den(L(t, i, r2) - x + 1);
    c.num(L(t, 0, r2) - x).num(L(t, 0, r2) - x + 1);
    c.den(L(t, 0, r3) - x).den(L(t, 0, r1) - x).den(L(t, 0, r1) - x + 1);
    emit({{0, r1, +1}, {j, r2, +1}}, 2, c);
  }
  for (int l : nz(-k - 1, k)) {
    for (int j : nz(-k, k)) {
      Rational y = L(t, l, r2);
      Rational x = L(t, j, r1);
      // The two square roots of the double shift are taken together: their
      // radicands always share a sign, so only the product is a square of a real.
      Coefficient c;
      c.prefactor(Q(j, l));
      c.radicand_sign(-1);
      for (int i : nz(-k, k, j)) c.rad_num(L(t, i, r1) - y);
      for (int i : nz(-k - 1, k + 1)) c.rad_num(L(t, i, r3) - y);
      for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, r0) - x + 1);
      for (int i : nz(-k - 1, k, l)) c.rad_num(L(t, i, r2) - x + 1);
      for (int i : nz(-k - 1, k, l)) c.rad_den(L(t, i, r2) - y).rad_den(L(t, i, r2) - y + 1);
      for (int i : nz(-k, k, j)) c.rad_den(L(t, i, r1) - x).rad_den(L(t, i, r1) - x + 1);
      c.num(L(t, 0, r2) - y).num(L(t, 0, r2) - y + 1).num(L(t, 0, r1) - x).num(L(t, 0, r1) - x + 1);
      c.den(L(t, 0, r3) - y).den(L(t, 0, r1) - y).den(L(t, 0, r2) - x + 1).den(L(t, 0, r0) - x + 1);
      emit({{j, r1, +1}, {l, r2, +1}}, 3, c);
    }
  }
  return out;
}

// E(-k+1, -k): raises one entry in each of rows 2k-2 and 2k-1.
CVector CModule::raise_lower_pair(int k, const CTable& t) const {
  const int ra = 2 * k - 2;
  const int rb = 2 * k - 1;
  const int rc = 2 * k;
  const int rz = 2 * k - 3;
  CVector out;
  auto emit = [&](std::initializer_list<Shift> shifts, const Coefficient& c) {
    auto target = shifted(t, shifts);
    if (!target) return;
    out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
  };
  emit({{0, ra, +1}, {0, rb, +1}},
       Coefficient().prefactor(-(1 + psi(t, rb)) * psi(t, rz) * (1 - 2 * psi(t, ra))));
  for (int j : nz(-k + 1, k - 2)) {
    Rational x = L(t, j, ra);
    Coefficient c;
    c.prefactor(-(1 + psi(t, rb)) * (1 - psi(t, ra)));
    c.radicand_sign(-1);
    for (int i : nz(-k + 2, k - 2)) c.rad_num(L(t, i, rz) - x);
    for (int i : nz(-k + 1, k - 1)) c.rad_num(L(t, i, rb) - x);
    for (int i : nz(-k + 1, k - 2, j)) c.rad_den(L(t, i, ra) - x).rad_den(L(t, i, ra) - x + 1);
    c.num(L(t, 0, ra) - x).num(L(t, 0, ra) - x + 1);
    c.den(L(t, 0, rb) - x).den(L(t, 0, rb) - x + 1).den(L(t, 0, rz) - x);
    emit({{j, ra, +1}, {0, rb, +1}}, c);
  }
  for (int j : nz(-k + 1, k - 1)) {
    Rational x = L(t, j, rb);
    Coefficient c;
    c.prefactor(-psi(t, ra) * psi(t, rz));
    c.radicand_sign(-1);
    for (int i : nz(-k + 1, k - 2)) c.rad_num(L(t, i, ra) - x + 1);
    for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, rc) - x + 1);
    for (int i : nz(-k + 1, k - 1, j)) c.rad_den(L(t, i, rb) - x).rad_den(L(t, i, rb) - x + 1);
    c.num(L(t, 0, rb) - x).num(L(t, 0, rb) - x + 1);
    c.den(L(t, 0, rc) - x + 1).den(L(t, 0, ra) - x + 1).den(L(t, 0, ra) - x + 2);
    emit({{0, ra, +1}, {j, rb, +1}}, c);
  }
  for (int l : nz(-k + 1, k - 1)) {
    for (int j : nz(-k + 1, k - 2)) {
      Rational y = L(t, l, rb);
      Rational x = L(t, j, ra);
      Coefficient c;
      c.prefactor(P(j, l));
      c.radicand_sign(-1);
      for (int i : nz(-k + 1, k - 2, j)) c.rad_num(L(t, i, ra) - y + 1);
      for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, rc) - y + 1);
      for (int i : nz(-k + 2, k - 2)) c.rad_num(L(t, i, rz) - x);
      for (int i : nz(-k + 1, k - 1, l)) c.rad_num(L(t, i, rb) - x);
      for (int i : nz(-k + 1, k - 1, l)) c.rad_den(L(t, i, rb) - y).rad_den(L(t, i, rb) - y + 1);
      for (int i : nz(-k + 1, k - 2, j)) c.rad_den(L(t, i, ra) - x).rad_den(L(t, i, ra) - x + 1);
      c.num(L(t, 0, rb) - y).num(L(t, 0, rb) - y + 1).num(L(t, 0, ra) - x).num(L(t, 0, ra) - x + 1);
      c.den(L(t, 0, rc) - y + 1).den(L(t, 0, ra) - y + 1).den(L(t, 0, rb) - x).den(L(t, 0, rz) - x);
      emit({{l, rb, +1}, {j, ra, +1}}, c);
    }
  }
  return out;
}

// E(k+1, k): lowers one entry in each of rows 2k+1 and 2k+2.
CVector CModule::lower_upper_pair(int k, const CTable& t) const {
  const int r1 = 2 * k + 1;
  const int r2 = 2 * k + 2;
  const int r3 = 2 * k + 3;
  const int r0 = 2 * k;
  const Rational p1 = psi(t, r1);
  CVector out;
  auto emit = [&](std::initializer_list<Shift> shifts, const Coefficient& c) {
    auto target = shifted(t, shifts);
    if (!target) return;
    out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
  };
  {
    Rational X = L(t, 0, r2);
    Rational Y = L(t, 0, r3);
    Coefficient c;
    c.prefactor(-sign_power(p1) * psi(t, r0) * (1 - psi(t, r2)));
    for (int i : nz(-k, k - 1)) c.num(X - L(t, i, r0) - p1 - 1);
    for (int i : nz(-k - 1, k)) c.num(X - L(t, i, r2) - p1 - 1);
    for (int i : nz(-k, k)) c.den(X - L(t, i, r1) - p1 - 1).den(X - L(t, i, r1) - p1);
    for (int i : nz(-k, k)) c.num(Y - L(t, i, r1));
    for (int i : nz(-k - 1, k + 1)) c.num(Y - L(t, i, r3));
    for (int i : nz(-k - 1, k)) c.den(Y - L(t, i, r2) - 1).den(Y - L(t, i, r2));
    emit({{0, r2, -1}, {0, r1, -1}}, c);
  }
  for (int j : nz(-k, k)) {
    Rational x = L(t, j, r1);
    Rational Y = L(t, 0, r3);
    Coefficient c;
    c.prefactor(-(1 + psi(t, r1)) * (1 - psi(t, r2)));
    c.radicand_sign(-1);
    for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, r0) - x);
    for (int i : nz(-k - 1, k)) c.rad_num(L(t, i, r2) - x);
    for (int i : nz(-k, k, j)) c.rad_den(L(t, i, r1) - x - 1).rad_den(L(t, i, r1) - x);
    for (int i : nz(-k, k, j)) c.num(Y - L(t, i, r1));
    for (int i : nz(-k - 1, k + 1)) c.num(Y - L(t, i, r3));
    for (int i : nz(-k - 1, k)) c.den(Y - L(t, i, r2) - 1).den(Y - L(t, i, r2));
    emit({{0, r2, -1}, {j, r1, -1}}, c);
  }
  for (int j : nz(-k - 1, k)) {
    Rational x = L(t, j, r2);
    Rational X = L(t, 0, r2);
    Coefficient c;
    c.prefactor(-psi(t, r0) * psi(t, r1));
    c.radicand_sign(-1);
    for (int i : nz(-k, k)) c.rad_num(L(t, i, r1) - x - 1);
    for (int i : nz(-k - 1, k + 1)) c.rad_num(L(t, i, r3) - x - 1);
    for (int i : nz(-k - 1, k, j)) c.rad_den(L(t, i, r2) - x - 1).rad_den(L(t, i, r2) - x);
    for (int i : nz(-k - 1, k, j)) c.num(X - L(t, i, r2));
    for (int i : nz(-k, k - 1)) c.num(X - L(t, i, r0));
    for (int i : nz(-k, k)) c.den(X - L(t, i, r1)).den(X - L(t, i, r1) + 1);
    emit({{j, r2, -1}, {0, r1, -1}}, c);
  }
  for (int l : nz(-k - 1, k)) {
    for (int j : nz(-k, k)) {
      Rational y = L(t, l, r2);
      Rational x = L(t, j, r1);
      Coefficient c;
      c.prefactor(Q(j, l));
      c.radicand_sign(-1);
      for (int i : nz(-k, k, j)) c.rad_num(L(t, i, r1) - y - 1);
      for (int i : nz(-k - 1, k + 1)) c.rad_num(L(t, i, r3) - y - 1);
      for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, r0) - x);
      for (int i : nz(-k - 1, k, l)) c.rad_num(L(t, i, r2) - x);
      for (int i : nz(-k - 1, k, l)) c.rad_den(L(t, i, r2) - y - 1).rad_den(L(t, i, r2) - y);
      for (int i : nz(-k, k, j)) c.rad_den(L(t, i, r1) - x - 1).rad_den(L(t, i, r1) - x);
      emit({{j, r1, -1}, {l, r2, -1}}, c);
    }
  }
  return out;
}

// E(-k, -k+1): lowers one entry in each of rows 2k-2 and 2k-1.
CVector CModule::lower_lower_pair(int k, const CTable& t) const {
  const int ra = 2 * k - 2;
  const int rb = 2 * k - 1;
  const int rc = 2 * k;
  const int rz = 2 * k - 3;
  const Rational p2 = psi(t, ra);
  CVector out;
  auto emit = [&](std::initializer_list<Shift> shifts, const Coefficient& c) {
    auto target = shifted(t, shifts);
    if (!target) return;
    out.add(*target, c.evaluate(opts_, FormulaSite::COther, 0));
  };
  {
    Rational X = L(t, 0, rb);
    Rational Y = L(t, 0, rc);
    Coefficient c;
    c.prefactor(-sign_power(p2) * (1 + psi(t, rz)) * psi(t, rb));
    for (int i : nz(-k + 2, k - 2)) c.num(X - L(t, i, rz) - p2);
    for (int i : nz(-k + 1, k - 1)) c.num(X - L(t, i, rb) - p2);
    for (int i : nz(-k + 1, k - 2)) c.den(X - L(t, i, ra) - 1).den(X - L(t, i, ra) - 2 * p2);
    for (int i : nz(-k + 1, k - 2)) c.num(Y - L(t, i, ra));
    for (int i : nz(-k, k - 1)) c.num(Y - L(t, i, rc));
    for (int i : nz(-k + 1, k - 1)) c.den(Y - L(t, i, rb)).den(Y - L(t, i, rb) + 1);
    emit({{0, rb, -1}, {0, ra, -1}}, c);
  }
  for (int j : nz(-k + 1, k - 2)) {
    Rational x = L(t, j, ra);
    Rational Y = L(t, 0, rc);
    Coefficient c;
    c.prefactor(psi(t, ra) * psi(t, rb));
    c.radicand_sign(-1);
    for (int i : nz(-k + 2, k - 2)) c.rad_num(L(t, i, rz) - x - 1);
    for (int i : nz(-k + 1, k - 1)) c.rad_num(L(t, i, rb) - x - 1);
    for (int i : nz(-k + 1, k - 2, j)) c.rad_den(L(t, i, ra) - x - 1).rad_den(L(t, i, ra) - x);
    for (int i : nz(-k + 1, k - 2, j)) c.num(Y - L(t, i, ra));
    for (int i : nz(-k, k - 1)) c.num(Y - L(t, i, rc));
    for (int i : nz(-k + 1, k - 1)) c.den(Y - L(t, i, rb)).den(Y - L(t, i, rb) + 1);
    emit({{0, rb, -1}, {j, ra, -1}}, c);
  }
  for (int j : nz(-k + 1, k - 1)) {
    Rational x = L(t, j, rb);
    Rational X = L(t, 0, rb);
    Coefficient c;
    c.prefactor((1 + psi(t, rz)) * (1 - psi(t, ra)));
    c.radicand_sign(-1);
    for (int i : nz(-k + 1, k - 2)) c.rad_num(L(t, i, ra) - x);
    for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, rc) - x);
    for (int i : nz(-k + 1, k - 1, j)) c.rad_den(L(t, i, rb) - x - 1).rad_den(L(t, i, rb) - x);
    for (int i : nz(-k + 1, k - 1, j)) c.num(X - L(t, i, rb));
    for (int i : nz(-k + 2, k - 2)) c.num(X - L(t, i, rz));
    for (int i : nz(-k + 1, k - 2)) c.den(X - L(t, i, ra) - 1).den(X - L(t, i, ra));
    emit({{j, rb, -1}, {0, ra, -1}}, c);
  }
  for (int l : nz(-k + 1, k - 1)) {
    for (int j : nz(-k + 1, k - 2)) {
      Rational y = L(t, l, rb);
      Rational x = L(t, j, ra);
      Coefficient c;
      c.prefactor(P(j, l));
      c.radicand_sign(-1);
      for (int i : nz(-k + 1, k - 2, j)) c.rad_num(L(t, i, ra) - y);
      for (int i : nz(-k, k - 1)) c.rad_num(L(t, i, rc) - y);
      for (int i : nz(-k + 2, k - 2)) c.rad_num(L(t, i, rz) - x - 1);
      for (int i : nz(-k + 1, k - 1, l)) c.rad_num(L(t, i, rb) - x - 1);
      for (int i : nz(-k + 1, k - 1, l)) c.rad_den(L(t, i, rb) - y - 1).rad_den(L(t, i, rb) - y);
      for (int i : nz(-k + 1, k - 2, j)) c.rad_den(L(t, i, ra) - x - 1).rad_den(L(t, i, ra) - x);
      emit({{l, rb, -1}, {j, ra, -1}}, c);
    }
  }
  return out;
}

SparseMatrix c_matrix(const GeneratorId& gen, const CSignature& sig, std::size_t guard, const ActionOptions& opts) {
  CModule module(sig, opts);
  auto basis = module.basis(guard);
  return matrix_of(module, gen, basis, [](const CTable& t) { return table_id(t); });
}

// ---------------------------------------------------------------------------
// Odd reflections

RootOrdering::RootOrdering(int size) {
  for (int i = 1; i <= size; ++i) order_.push_back(i);
}

bool RootOrdering::is_simple(const Root& alpha) const {
  for (std::size_t p = 0; p + 1 < order_.size(); ++p) {
    if (order_[p] == alpha.a && order_[p + 1] == alpha.b) return true;
  }
  return false;
}

void RootOrdering::reflect(const Root& alpha) {
  if (!is_simple(alpha)) {
    throw Error(ErrorCode::NotSimpleRoot,
                "eps^" + std::to_string(alpha.a) + " - eps^" + std::to_string(alpha.b));
  }
  auto pa = std::find(order_.begin(), order_.end(), alpha.a);
  std::iter_swap(pa, pa + 1);
}

Row odd_reflection(const Row& weight, const Root& alpha, RootOrdering& ordering) {
  ordering.reflect(alpha);
  Row out = weight;
  auto& ca = out[static_cast<std::size_t>(alpha.a - 1)];
  auto& cb = out[static_cast<std::size_t>(alpha.b - 1)];
  if (alpha.odd()) {
    ca -= 1;
    cb += 1;
  } else {
    std::swap(ca, cb);
  }
  return out;
}

std::vector<Root> reflection_chain(int r) {
  int k = level_k(r);
  std::vector<Root> out;
  for (int i = k; i >= 1; --i) {
    for (int j = 2 * i - 1; j >= 1; --j) out.push_back({j, 2 * i});
  }
  return out;
}

}  // namespace glsuper
