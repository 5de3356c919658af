#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "glsuper/coefficient.hpp"
#include "glsuper/representation.hpp"
#include "glsuper/tables.hpp"

namespace glsuper {

using GzVector = SparseVector<GzTable>;

// The irreducible gl(1|N) or gl(1|infinity) module with an essentially typical
// signature, in the Gel'fand-Zetlin basis. Generators use the e(i, j) convention.
class GzModule : public Representation<GzTable> {
 public:
  explicit GzModule(GzSignature sig, ActionOptions opts = {});

  const GzSignature& signature() const { return sig_; }
  const ActionOptions& options() const { return opts_; }
  bool is_infinite() const { return sig_.is_infinite(); }

  bool in_range(const GeneratorId& gen) const override;
  bool is_base(const GeneratorId& gen) const override;
  GzVector act_base(const GeneratorId& gen, const GzTable& t) const override;
  std::pair<GeneratorId, GeneratorId> split(const GeneratorId& gen) const override;

  RadicalScalar cartan(int i, const GzTable& t) const;
  GzVector raise(int i, const GzTable& t) const;  // e_{i,i+1}
  GzVector lower(int i, const GzTable& t) const;  // e_{i+1,i}

  // t with m_{ij} moved by delta, or nothing if the result is not a table of
  // this module. Infinite results are canonical.
  std::optional<GzTable> shifted(const GzTable& t, int i, int j, int delta) const;

  GzTable highest() const { return gz_highest_table(sig_); }
  std::vector<GzTable> basis(std::size_t guard = kDefaultEnumerationGuard) const { return gz_enumerate(sig_, guard); }

 private:
  Rational l(const GzTable& t, int i, int j) const { return gz_l(sig_, t, i, j); }
  Rational theta(const GzTable& t, int i) const { return gz_theta(sig_, t, i); }
  void check_level(int i) const;

  GzSignature sig_;
  ActionOptions opts_;
};

SparseMatrix gz_matrix(const GeneratorId& gen, const GzSignature& sig,
                       std::size_t guard = kDefaultEnumerationGuard, const ActionOptions& opts = {});

}  // namespace glsuper
