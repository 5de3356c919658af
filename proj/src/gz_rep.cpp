#include "glsuper/gz_rep.hpp"

#include "glsuper/errors.hpp"

namespace glsuper {

GzModule::GzModule(GzSignature sig, ActionOptions opts) : sig_(std::move(sig)), opts_(std::move(opts)) {
  if (!gz_is_essentially_typical(sig_)) throw Error(ErrorCode::NotEssentiallyTypical, "GZ signature");
}

bool GzModule::in_range(const GeneratorId& gen) const {
  if (gen.convention != Convention::Gl0 || gen.i < 1 || gen.j < 1) return false;
  return sig_.is_infinite() || (gen.i <= sig_.length() && gen.j <= sig_.length());
}

bool GzModule::is_base(const GeneratorId& gen) const { return std::abs(gen.i - gen.j) <= 1; }

std::pair<GeneratorId, GeneratorId> GzModule::split(const GeneratorId& gen) const {
  int k = gen.i < gen.j ? gen.j - 1 : gen.j + 1;
  return {GeneratorId::e(gen.i, k), GeneratorId::e(k, gen.j)};
}

GzVector GzModule::act_base(const GeneratorId& gen, const GzTable& t) const {
  if (gen.i == gen.j) {
    GzVector out;
    out.add(t, cartan(gen.i, t));
    return out;
  }
  return gen.j == gen.i + 1 ? raise(gen.i, t) : lower(gen.j, t);
}

void GzModule::check_level(int i) const {
  if (i < 1 || (!sig_.is_infinite() && i > sig_.rank())) {
    throw Error(ErrorCode::IndexOutOfRange, "level " + std::to_string(i));
  }
}

RadicalScalar GzModule::cartan(int i, const GzTable& t) const {
  if (i < 1 || (!sig_.is_infinite() && i > sig_.length())) {
    throw Error(ErrorCode::IndexOutOfRange, "e_{" + std::to_string(i) + "," + std::to_string(i) + "}");
  }
  Rational sum = 0;
  for (int k = 1; k <= i; ++k) sum += gz_entry(sig_, t, k, i);
  for (int k = 1; k < i; ++k) sum -= gz_entry(sig_, t, k, i - 1);
  return RadicalScalar(sum);
}

std::optional<GzTable> GzModule::shifted(const GzTable& t, int i, int j, int delta) const {
  if (!sig_.is_infinite() && j >= sig_.length()) return std::nullopt;
  GzTable out = t;
  while (static_cast<int>(out.rows.size()) < j) out.rows.push_back(sig_.prefix(static_cast<int>(out.rows.size()) + 1));
  out.rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] += delta;
  if (j >= 2 && !gz_pair_ok(sig_, out, j - 1)) return std::nullopt;
  if (!gz_pair_ok(sig_, out, j)) return std::nullopt;
  canonicalize(sig_, out);
  return out;
}

GzVector GzModule::raise(int i, const GzTable& t) const {
  check_level(i);
  GzVector out;
  auto emit = [&](int row_entry, int term, const Coefficient& c) {
    auto target = shifted(t, row_entry, i, +1);
    if (!target) return;  // outside the module: the term is zero whatever its coefficient
    out.add(*target, c.evaluate(opts_, FormulaSite::GzRaise, term));
  };
  if (i == 1) {
    emit(1, 0, Coefficient().prefactor(theta(t, 1)));
    return out;
  }
  emit(1, 0, Coefficient().prefactor(theta(t, i) * (1 - theta(t, i - 1))));
  for (int j = 2; j <= i; ++j) {
    Rational lj = l(t, j, i);
    Coefficient c;
    c.radicand_sign(-1);
    for (int k = 2; k <= i - 1; ++k) c.rad_num(l(t, k, i - 1) - lj + 1);
    for (int k = 2; k <= i + 1; ++k) c.rad_num(l(t, k, i + 1) - lj);
    for (int k = 2; k <= i; ++k) {
      if (k == j) continue;
      c.rad_den(l(t, k, i) - lj).rad_den(l(t, k, i) - lj + 1);
    }
    c.num(l(t, 1, i) - lj).num(l(t, 1, i) - lj + 1);
    c.den(l(t, 1, i + 1) - lj).den(l(t, 1, i - 1) - lj + 1);
    emit(j, 1, c);
  }
  return out;
}

GzVector GzModule::lower(int i, const GzTable& t) const {
  check_level(i);
  GzVector out;
  auto emit = [&](int row_entry, int term, const Coefficient& c) {
    auto target = shifted(t, row_entry, i, -1);
    if (!target) return;
    out.add(*target, c.evaluate(opts_, FormulaSite::GzLower, term));
  };
  if (i == 1) {
    emit(1, 0, Coefficient().prefactor(1 - theta(t, 1)).num(l(t, 1, 2) - l(t, 2, 2)));
    return out;
  }
  {
    Rational top = l(t, 1, i + 1);
    Coefficient c;
    c.prefactor(theta(t, i - 1) * (1 - theta(t, i)));
    for (int k = 2; k <= i - 1; ++k) c.num(top - l(t, k, i - 1) - 1);
    for (int k = 2; k <= i + 1; ++k) c.num(top - l(t, k, i + 1));
    for (int k = 2; k <= i; ++k) c.den(top - l(t, k, i) - 1).den(top - l(t, k, i));
    emit(1, 0, c);
  }
  for (int j = 2; j <= i; ++j) {
    Rational lj = l(t, j, i);
    Coefficient c;
    c.radicand_sign(-1);
    for (int k = 2; k <= i - 1; ++k) c.rad_num(l(t, k, i - 1) - lj);
    for (int k = 2; k <= i + 1; ++k) c.rad_num(l(t, k, i + 1) - lj - 1);
    for (int k = 2; k <= i; ++k) {
      if (k == j) continue;
      c.rad_den(l(t, k, i) - lj - 1).rad_den(l(t, k, i) - lj);
    }
    emit(j, 1, c);
  }
  return out;
}

SparseMatrix gz_matrix(const GeneratorId& gen, const GzSignature& sig, std::size_t guard, const ActionOptions& opts) {
  GzModule module(sig, opts);
  auto basis = module.basis(guard);
  return matrix_of(module, gen, basis, [](const GzTable& t) { return table_id(t); });
}

}  // namespace glsuper
