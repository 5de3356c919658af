#pragma once

#include <string>
#include <string_view>

namespace glsuper {

// e(i, j), i, j >= 1, for gl(1|N) with the odd index 1; E(i, j), i, j in Z,
// for gl(infinity|1|infinity) with the odd index 0.
enum class Convention { Gl0, Glz };

struct GeneratorId {
  Convention convention = Convention::Gl0;
  int i = 1;
  int j = 1;

  static GeneratorId e(int i, int j) { return {Convention::Gl0, i, j}; }
  static GeneratorId E(int i, int j) { return {Convention::Glz, i, j}; }

  int distinguished() const { return convention == Convention::Gl0 ? 1 : 0; }
  bool odd() const { return (i == distinguished()) != (j == distinguished()); }
  bool is_cartan() const { return i == j; }

  std::string name() const;
  // "e,1,2", "E,0,-1", "e(1,2)" or "E(0,-1)".
  static GeneratorId parse(std::string_view text);

  friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
    return a.convention == b.convention && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
    if (a.convention != b.convention) return a.convention < b.convention;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace glsuper
