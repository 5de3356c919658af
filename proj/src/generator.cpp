#include "glsuper/generator.hpp"

#include <cctype>
#include <string>

#include "glsuper/errors.hpp"

namespace glsuper {

std::string GeneratorId::name() const {
  std::string head = convention == Convention::Gl0 ? "e" : "E";
  return head + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

GeneratorId GeneratorId::parse(std::string_view text) {
  auto fail = [&]() -> Error { return Error(ErrorCode::ParseError, "generator '" + std::string(text) + "'"); };
  if (text.empty() || (text[0] != 'e' && text[0] != 'E')) throw fail();
  Convention conv = text[0] == 'e' ? Convention::Gl0 : Convention::Glz;
  std::string rest(text.substr(1));
  if (!rest.empty() && rest.front() == '(') {
    if (rest.back() != ')') throw fail();
    rest = rest.substr(1, rest.size() - 2);
  } else if (!rest.empty() && rest.front() == ',') {
    rest = rest.substr(1);
  } else {
    throw fail();
  }
  auto comma = rest.find(',');
  if (comma == std::string::npos) throw fail();
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != s.size()) throw fail();
    return v;
  };
  GeneratorId gen{conv, to_int(rest.substr(0, comma)), to_int(rest.substr(comma + 1))};
  if (conv == Convention::Gl0 && (gen.i < 1 || gen.j < 1)) {
    throw Error(ErrorCode::IndexOutOfRange, gen.name() + ": gl(1|N) indices start at 1");
  }
  return gen;
}

}  // namespace glsuper
