#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "densecsp/generate.hpp"
#include "densecsp/io.hpp"
#include "densecsp/projection.hpp"
#include "densecsp/rng.hpp"
#include "test_support.hpp"

using namespace densecsp;
using namespace densecsp::test;

TEST_CASE("instance round trip across kinds") {
  Rng rng(9);
  const auto complete = planted_complete_instance(5, 3, rng.next());
  const auto freegame = planted_free_game(3, 4, rng.next());
  const Instance general = random_instance(6, 2, 7, rng.next());
  const ProjectionGame projection = generate_projection_game({8, 0.8, 3, 4, true});

  for (const Instance* inst :
       {&complete.inst, &freegame.inst, &general, &projection.inst}) {
    const Json j = instance_to_json(*inst);
    const Instance back = instance_from_json(j);
    CHECK(back == *inst);
    CHECK(dump_deterministic(instance_to_json(back)) == dump_deterministic(j));
  }
}

TEST_CASE("parsing is whitespace-insensitive") {
  const std::string text = R"( {
      "format_version" : 1,   "kind": "general",
    "q" :2,"n": 2,
        "edges": [ [0, 1] ],
    "allowed":[[[0,0],  [1,1]]] } )";
  const Instance inst = instance_from_json(Json::parse(text));
  CHECK(inst.q() == 2);
  CHECK(inst.edge_count() == 1);
  CHECK(inst.allows(0, 1, 1));
  CHECK(!inst.allows(0, 0, 1));
}

TEST_CASE("instance parsing rejects malformed input") {
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"kind":"general"})")),
                  ValidationError);
  CHECK_THROWS_AS(
      instance_from_json(Json::parse(
          R"({"format_version":9,"kind":"general","q":1,"n":2,"edges":[[0,1]],"allowed":[[]]})")),
      ValidationError);
  CHECK_THROWS_AS(
      instance_from_json(Json::parse(
          R"({"format_version":1,"kind":"zebra","q":1,"n":2,"edges":[[0,1]],"allowed":[[]]})")),
      ValidationError);
  // Projection files must keep 'allowed' consistent with 'pi'.
  CHECK_THROWS_AS(
      instance_from_json(Json::parse(
          R"({"format_version":1,"kind":"projection","q":2,"n":2,"edges":[[0,1]],)"
          R"("allowed":[[[0,0],[1,1]]],"pi":[[1,0]]})")),
      ValidationError);
}

TEST_CASE("assignment and graph round trips") {
  const Assignment phi({2, 0, 1, 1});
  CHECK(assignment_from_json(assignment_to_json(phi)) == phi);

  const SimpleGraph g = petersen_graph();
  const SimpleGraph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);
}

TEST_CASE("guarantee info round trips through JSON") {
  GuaranteeInfo g;
  g.form = GuaranteeInfo::Form::Exact;
  g.bound.mul(Rational(9)).mul(Rational(3), -1, 2).mul(Rational(1, 2), 3, 2);
  g.preconditions_verified = true;
  g.met = true;
  g.note = "bound";
  const GuaranteeInfo back = guarantee_from_json(guarantee_to_json(g));
  CHECK(back.form == GuaranteeInfo::Form::Exact);
  CHECK(back.preconditions_verified);
  REQUIRE(back.met.has_value());
  CHECK(*back.met);
  // Same exact value: equal comparisons against probes.
  for (const Rational probe : {Rational(1), Rational(2), Rational(1836, 1000),
                               Rational(1837, 1000)}) {
    CHECK(g.bound.compare(probe) == back.bound.compare(probe));
  }

  const GuaranteeInfo zero = [] {
    GuaranteeInfo z;
    z.form = GuaranteeInfo::Form::Exact;
    z.bound = PowerProduct::zero();
    return z;
  }();
  const GuaranteeInfo zback = guarantee_from_json(guarantee_to_json(zero));
  CHECK(zback.bound.is_zero());
  CHECK(zback.bound.compare(Rational(0)) == 0);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("zebra"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
}

TEST_CASE("power product comparisons are exact") {
  // 9 * 3^{-1/2} vs probes around 5.196152...
  PowerProduct p;
  p.mul(Rational(9)).mul(Rational(3), -1, 2);
  CHECK(p.compare(Rational(5)) > 0);
  CHECK(p.compare(Rational(6)) < 0);
  CHECK(p.compare(Rational(5196152, 1000000)) > 0);
  CHECK(p.compare(Rational(5196153, 1000000)) < 0);
  // (1/4)^{1/1} * 16: exactly 4.
  PowerProduct exact4;
  exact4.mul(Rational(1, 4)).mul(Rational(16));
  CHECK(exact4.compare(Rational(4)) == 0);
}

TEST_CASE("report serialization embeds the instance for verification") {
  const auto planted = planted_complete_instance(4, 2, 5);
  SolveReport report = make_report(planted.inst, planted.planted, 5, 1);
  const Json j = report_to_json(report, &planted.inst);
  CHECK(j.contains("instance"));
  const Instance back = instance_from_json(j["instance"]);
  const Assignment phi = assignment_from_json(j["assignment"]);
  CHECK(evaluate(back, phi) == j["satisfied"].get<long long>());
}
