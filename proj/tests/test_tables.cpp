#include <doctest.h>

#include <algorithm>

#include "glsuper/errors.hpp"
#include "glsuper/tables.hpp"
#include "helpers.hpp"
#include "oracles/brute_force.hpp"

using namespace glsuper;
using testutil::q;
using testutil::row;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("essential typicality of GZ signatures") {
  CHECK(gz_is_essentially_typical(GzSignature::finite(row({"1/2", "3"}))));
  CHECK_FALSE(gz_is_essentially_typical(GzSignature::finite(row({"0", "1", "0"}))));
  CHECK(gz_is_essentially_typical(GzSignature::infinite(row({"1/2", "0"}))));
  CHECK_FALSE(gz_is_essentially_typical(GzSignature::infinite(row({"3", "0"}))));
  // integer labels can be typical when l_1 lies outside the even interval
  CHECK(gz_is_essentially_typical(GzSignature::finite(row({"-5", "1", "0"}))));
  CHECK(code_of([] { GzSignature::finite(row({"1/2", "0", "1"})); }) == ErrorCode::MalformedSignature);
  CHECK(code_of([] { GzSignature::finite(row({"1/2", "1", "1/2"})); }) == ErrorCode::MalformedSignature);
}

TEST_CASE("essential typicality of two-sided signatures") {
  CHECK(c_is_essentially_typical(CSignature::finite(row({"4", "-1/2", "-2"}))));
  CHECK(c_is_essentially_typical(CSignature::infinite(row({"-1/2", "-2"}), row({"4"}))));
  CHECK_FALSE(c_is_essentially_typical(CSignature::infinite(row({"1", "0"}), row({"1"}))));
  CHECK(code_of([] { CSignature::infinite(row({"1/2", "2"}), row({"2"})); }) == ErrorCode::MalformedSignature);
  CHECK(code_of([] { CSignature::infinite(row({"1/2", "0", "1"}), row({"2"})); }) == ErrorCode::MalformedSignature);
}

TEST_CASE("GZ validation names the broken condition") {
  auto sig = GzSignature::finite(row({"1/2", "3"}));
  CHECK(gz_validate(sig, GzTable{{row({"-1/2"}), row({"1/2", "3"})}}).empty());
  auto v = gz_validate(sig, GzTable{{row({"3/2"}), row({"1/2", "3"})}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].condition == "theta-range");
  CHECK(v[0].row == 1);
  CHECK(gz_validate(sig, gz_highest_table(sig)).empty());
  auto wrong_top = gz_validate(sig, GzTable{{row({"1/2"}), row({"1/2", "2"})}});
  REQUIRE_FALSE(wrong_top.empty());
  CHECK(wrong_top[0].condition == "top-row");
}

TEST_CASE("C validation names the broken condition") {
  auto sig = CSignature::finite(row({"4", "-1/2"}));
  CHECK(c_validate(sig, CTable{{row({"-1/2"}), row({"4", "-1/2"})}}).empty());
  auto v = c_validate(sig, CTable{{row({"3/2"}), row({"4", "-1/2"})}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].condition == "psi-range");
  CHECK(c_validate(sig, c_highest_table(sig)).empty());
}

TEST_CASE("highest tables copy the signature") {
  auto gz = gz_highest_table(GzSignature::finite(row({"1/2", "2", "0"})));
  CHECK(gz.rows == std::vector<Row>{row({"1/2"}), row({"1/2", "2"}), row({"1/2", "2", "0"})});
  auto c = c_highest_table(CSignature::finite(row({"4", "-1/2", "-2"})));
  CHECK(c.rows == std::vector<Row>{row({"-1/2"}), row({"4", "-1/2"}), row({"4", "-1/2", "-2"})});
  CHECK(c_validate(CSignature::finite(row({"4", "-1/2", "-2"})), c).empty());
  auto inf = GzSignature::infinite(row({"1/2", "0"}));
  CHECK(gz_highest_table(inf).rows.empty());
  CHECK(stability_index(inf, gz_highest_table(inf)) == 0);
}

TEST_CASE("enumeration matches the brute-force oracle") {
  auto two = gz_enumerate(GzSignature::finite(row({"1/2", "3"})));
  REQUIRE(two.size() == 2);
  CHECK(two[0].rows[0] == row({"1/2"}));
  CHECK(two[1].rows[0] == row({"-1/2"}));
  CHECK(gz_enumerate(GzSignature::finite(row({"1/2", "2", "0"}))).size() == 12);
  CHECK(code_of([] { gz_enumerate(GzSignature::finite(row({"0", "1", "0"}))); }) == ErrorCode::NotEssentiallyTypical);
  CHECK(code_of([] { gz_enumerate(GzSignature::finite(row({"1/2", "2", "0"})), 5); }) == ErrorCode::GuardExceeded);

  for (const auto& labels : {row({"1/2", "2", "0"}), row({"-5", "1", "0"}), row({"1/3", "2", "1", "-1"})}) {
    auto sig = GzSignature::finite(labels);
    auto tables = gz_enumerate(sig);
    auto oracle_tables = oracle::gz_patterns(labels);
    REQUIRE(tables.size() == oracle_tables.size());
    for (std::size_t i = 0; i < tables.size(); ++i) CHECK(tables[i].rows == oracle_tables[i]);
    for (const auto& t : tables) CHECK(gz_validate(sig, t).empty());
    CHECK(tables.front() == gz_highest_table(sig));
  }
}

TEST_CASE("C enumeration is the relabelled GZ basis in size") {
  CHECK(c_enumerate(CSignature::finite(row({"4", "-1/2"}))).size() == 2);
  auto sig = CSignature::finite(row({"3", "-1/2", "0"}));
  auto tables = c_enumerate(sig);
  CHECK(tables.size() == 12);
  for (const auto& t : tables) CHECK(c_validate(sig, t).empty());
  CHECK(std::find(tables.begin(), tables.end(), c_highest_table(sig)) != tables.end());
}

TEST_CASE("stability index of infinite tables") {
  auto sig = GzSignature::infinite(row({"1/2", "3", "1", "0"}));
  GzTable t{{row({"1/2"}), row({"1/2", "3"}), row({"1/2", "3", "0"})}};
  CHECK(gz_validate(sig, t).empty());
  CHECK(stability_index(sig, t) == 3);
  GzTable padded = t;
  padded.rows.push_back(sig.prefix(4));
  CHECK(stability_index(sig, padded) == 3);
  canonicalize(sig, padded);
  CHECK(padded == t);

  auto csig = CSignature::infinite(row({"-1/2", "-2"}), row({"4"}));
  CTable c{{row({"1/2"})}};
  CHECK(c_validate(csig, c).empty());
  CHECK(stability_index(csig, c) == 1);
}

TEST_CASE("table ids and rendering") {
  GzTable t{{row({"-1/2"}), row({"1/2", "3"})}};
  CHECK(table_id(t) == "1/2,3|-1/2");
  CHECK(render(t) == " 1/2    3\n  -1/2\n");
}
