#include <doctest.h>

#include <random>

#include "glsuper/c_rep.hpp"
#include "glsuper/errors.hpp"
#include "glsuper/isomap.hpp"
#include "glsuper/verify.hpp"
#include "helpers.hpp"
#include "oracles/gz_route.hpp"

using namespace glsuper;
using testutil::c_table;
using testutil::q;
using testutil::row;
using testutil::x;

namespace {

CSignature frozen_sig() { return CSignature::infinite(row({"1/3", "1", "0"}), row({"3", "5"})); }

void check_vector(const CVector& v, std::initializer_list<std::pair<const char*, const char*>> expected) {
  CHECK(v.size() == expected.size());
  for (const auto& [id, value] : expected) {
    INFO("target " << id);
    CHECK(v.coefficient(c_table(id)) == x(value));
  }
}

}  // namespace

TEST_CASE("signature relabelling") {
  CHECK(signature_gz_to_c(row({"1/2", "3"})) == row({"4", "-1/2"}));
  CHECK(signature_gz_to_c(row({"1/2", "2", "0"})) == row({"3", "-1/2", "0"}));
  CHECK(signature_gz_to_c(row({"1/2"})) == row({"1/2"}));
  for (const auto& m : {row({"1/2", "3"}), row({"1/2", "2", "0"}), row({"1/3", "4", "2", "2", "-1", "-3"})}) {
    CHECK(signature_c_to_gz(signature_gz_to_c(m)) == m);
  }
}

TEST_CASE("flag conditions of the two-sided highest vector") {
  auto sig = GzSignature::finite(row({"1/2", "3"}));
  CHECK_FALSE(c_hwv_flag_conditions(sig, gz_highest_table(sig)));
  CHECK(c_hwv_flag_conditions(sig, GzTable{{row({"-1/2"}), row({"1/2", "3"})}}));
  auto big = GzSignature::finite(row({"1/2", "2", "1", "0"}));
  int hits = 0;
  for (const auto& t : gz_enumerate(big)) hits += c_hwv_flag_conditions(big, t) ? 1 : 0;
  CHECK(hits == 1);
}

TEST_CASE("Cartan eigenvalues in the two-sided basis") {
  CModule m(CSignature::finite(row({"4", "-1/2"})));
  CTable t{{row({"-1/2"}), row({"4", "-1/2"})}};
  CHECK(m.cartan(0, t) == RadicalScalar(q("-1/2")));
  CHECK(m.cartan(-1, t) == RadicalScalar(4));
  CModule big(CSignature::finite(row({"5", "3", "-1/2", "0", "-2"})));
  for (int i = -2; i <= 2; ++i) CHECK(big.cartan(i, big.highest()) == RadicalScalar(big.signature().label(i)));
}

TEST_CASE("finite formulas on gl(1|1)") {
  CModule m(CSignature::finite(row({"4", "-1/2"})));
  CTable low{{row({"-1/2"}), row({"4", "-1/2"})}};
  CTable high{{row({"1/2"}), row({"4", "-1/2"})}};
  auto up = m.act_finite(GeneratorId::E(0, -1), low);
  CHECK(up.size() == 1);
  CHECK(up.coefficient(high) == RadicalScalar(1));
  auto down = m.act_finite(GeneratorId::E(-1, 0), high);
  CHECK(down.size() == 1);
  CHECK(down.coefficient(low) == RadicalScalar(q("7/2")));
  CHECK(m.act_finite(GeneratorId::E(0, -1), high).empty());
  CHECK_THROWS_AS(m.act_finite(GeneratorId::E(0, 1), low), Error);
}

TEST_CASE("frozen infinite matrix elements") {
  // Computed by an independent symbolic model acting through the GZ basis of
  // a truncation large enough to contain every touched row.
  CModule m(frozen_sig());
  auto t = c_table("5,2,1/3,0|4,1/3,1|2,1/3|1/3");
  check_vector(m.act(GeneratorId::E(0, 1), t), {{"5,2,1/3,0|4,1/3,1|3,1/3|4/3", "3/7*sqrt(2)"}});
  check_vector(m.act(GeneratorId::E(1, 0), t), {{"5,2,1/3,0|4,1/3,1|2,-2/3|-2/3", "-52/21"}});
  check_vector(m.act(GeneratorId::E(1, 2), t), {{"5,2,1/3,1|4,4/3,1|2,1/3|1/3", "3/5*sqrt(30)"},
                                                {"5,2,1/3,1|5,1/3,1|2,1/3|1/3", "-39/80*sqrt(10)"},
                                                {"5,3,1/3,0|4,4/3,1|2,1/3|1/3", "1/7*sqrt(3)"},
                                                {"5,3,1/3,0|5,1/3,1|2,1/3|1/3", "-65/672*sqrt(30)"}});
  check_vector(m.act(GeneratorId::E(2, 1), t), {{"4,2,1/3,0|3,1/3,1|2,1/3|1/3", "8/15*sqrt(5)"},
                                                {"4,2,1/3,0|4,1/3,0|2,1/3|1/3", "1/30*sqrt(10)"},
                                                {"5,2,-2/3,0|3,1/3,1|2,1/3|1/3", "-10/7*sqrt(3)"},
                                                {"5,2,-2/3,0|4,1/3,0|2,1/3|1/3", "-65/112*sqrt(15)"}});
  check_vector(m.act(GeneratorId::E(-1, -2), t), {{"5,2,1/3,0|4,4/3,1|3,1/3|1/3", "-3/7*sqrt(2)"},
                                                  {"5,2,1/3,0|5,1/3,1|3,1/3|1/3", "65/112*sqrt(5)"}});
  check_vector(m.act(GeneratorId::E(-2, -1), t), {{"5,2,1/3,0|3,1/3,1|2,-2/3|1/3", "4/7*sqrt(3)"},
                                                  {"5,2,1/3,0|4,1/3,0|1,1/3|1/3", "-1/2*sqrt(5)"},
                                                  {"5,2,1/3,0|4,1/3,0|2,-2/3|1/3", "13/56*sqrt(15)"}});
  check_vector(m.act(GeneratorId::E(0, -1), t), {{"5,2,1/3,0|4,1/3,1|2,1/3|4/3", "1"}});
  CHECK(m.act(GeneratorId::E(-1, 0), t).empty());

  auto u = c_table("4,2,-2/3,1|4,-2/3,1|3,-2/3|1/3");
  check_vector(m.act(GeneratorId::E(1, 0), u), {{"4,2,-2/3,1|4,-2/3,1|2,-2/3|-2/3", "1*sqrt(2)"},
                                                {"4,2,-2/3,1|4,-2/3,1|3,-5/3|-2/3", "5/6"}});
  check_vector(m.act(GeneratorId::E(1, 2), u), {{"4,2,1/3,1|4,1/3,1|3,-2/3|1/3", "-1"},
                                                {"4,3,-2/3,1|4,-2/3,2|3,-2/3|1/3", "1/4"},
                                                {"4,3,-2/3,1|4,1/3,1|3,-2/3|1/3", "3/7*sqrt(2)"},
                                                {"5,2,-2/3,1|4,1/3,1|3,-2/3|1/3", "3/40*sqrt(5)"},
                                                {"5,2,-2/3,1|5,-2/3,1|3,-2/3|1/3", "4/13*sqrt(10)"}});
  check_vector(m.act(GeneratorId::E(2, 1), u), {{"3,2,-2/3,1|3,-2/3,1|3,-2/3|1/3", "1/2*sqrt(5)"},
                                                {"4,2,-2/3,0|3,-2/3,1|3,-2/3|1/3", "-1/10*sqrt(15)"},
                                                {"4,2,-2/3,0|4,-2/3,0|3,-2/3|1/3", "-1/5*sqrt(30)"}});
  check_vector(m.act(GeneratorId::E(-1, 0), u), {{"4,2,-2/3,1|4,-2/3,1|3,-2/3|-2/3", "7/3"}});
}

TEST_CASE("Chevalley formulas agree with the GZ route on sampled tables") {
  for (const auto& sig : {frozen_sig(), CSignature::infinite(row({"-1/2", "-2", "-4"}), row({"4", "5", "7"}))}) {
    CModule m(sig);
    CachedActor<CTable> actor(m);
    VerifyOptions opts;
    opts.index_bound = 3;
    opts.samples = 25;
    for (const auto& t : sample_c_tables(actor, m, opts)) {
      for (const auto& gen : glz_chevalley_generators(3)) {
        if (gen.is_cartan()) continue;
        INFO(gen.name() << " on " << table_id(t));
        CHECK(m.act_chevalley(gen, t) == oracle::c_action_via_gz(sig, gen, t));
      }
    }
  }
}

TEST_CASE("infinite formulas restrict to the finite ones on a shared window") {
  auto inf = CSignature::infinite(row({"-1/2", "-2"}), row({"4"}));
  CModule m(inf);
  CModule finite(CSignature::finite(inf.window(2)));
  for (const char* m01 : {"-1/2", "1/2"}) {
    CTable ti = m01 == std::string("-1/2") ? CTable{} : CTable{{row({m01})}};
    CTable tf{{row({m01}), inf.window(2)}};
    for (const auto& gen : {GeneratorId::E(0, -1), GeneratorId::E(-1, 0)}) {
      auto a = m.act_chevalley(gen, ti);
      auto b = finite.act_finite(gen, tf);
      REQUIRE(a.size() == b.size());
      for (const auto& [t, c] : b) {
        CTable lifted{{t.rows[0]}};
        canonicalize(inf, lifted);
        CHECK(a.coefficient(lifted) == c);
      }
    }
  }
}

TEST_CASE("raising generators kill the infinite highest table") {
  CModule m(frozen_sig());
  for (int k = -5; k < 5; ++k) CHECK(m.act(GeneratorId::E(k, k + 1), m.highest()).empty());
}

TEST_CASE("odd reflections") {
  RootOrdering ordering(3);
  Row zero = row({"0", "0", "0"});
  CHECK(odd_reflection(zero, {1, 2}, ordering) == row({"-1", "1", "0"}));
  CHECK(ordering.order() == std::vector<int>{2, 1, 3});
  CHECK(odd_reflection(row({"5", "7", "2"}), {1, 3}, ordering) == row({"4", "7", "3"}));
  RootOrdering even(3);
  CHECK(odd_reflection(row({"5", "7", "2"}), {2, 3}, even) == row({"5", "2", "7"}));
  RootOrdering fresh(3);
  CHECK_THROWS_AS(odd_reflection(zero, {1, 3}, fresh), Error);

  // The chain for [1/2, 3] lands on [4, -1/2] at positions g(-1) = 2, g(0) = 1.
  RootOrdering chain(2);
  Row w = row({"1/2", "3"});
  for (const auto& alpha : reflection_chain(2)) w = odd_reflection(w, alpha, chain);
  CHECK(w[1] == 4);
  CHECK(w[0] == q("-1/2"));
}
