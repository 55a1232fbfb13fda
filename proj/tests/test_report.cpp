#include <catch2/catch_amalgamated.hpp>

#include "regalg/report.hpp"

using namespace regalg;
using nlohmann::json;

namespace {

ScenarioReport sample() {
	ScenarioReport r;
	r.scenario = "sample";
	StepReport ok;
	ok.op = "analyze";
	ok.inputs = {{"field", "det"}, {"nmax", "6"}};
	ok.expected = "-2";
	ok.actual = "-2";
	ok.anchor = "grassmann-det";
	ok.pass = true;
	StepReport bad;
	bad.op = "check";
	bad.inputs = {{"poly", "x1{1}"}};
	bad.expected = "central, proper";
	bad.actual = "not central";
	bad.pass = false;
	r.steps = {ok, bad};
	r.finish();
	return r;
}

} // namespace

TEST_CASE("scenario reports") {
	ScenarioReport r = sample();
	CHECK(r.summary == "1/2 steps passed");
	CHECK_FALSE(r.all_passed());

	SECTION("JSON round-trip is exact") {
		CHECK(ScenarioReport::from_json(r.to_json()) == r);
		// and through a serialized string
		CHECK(ScenarioReport::from_json(json::parse(r.to_json().dump())) == r);
	}

	SECTION("text rendering") {
		std::string t = r.to_text();
		CHECK(t.find("scenario: sample") != std::string::npos);
		CHECK(t.find("[PASS] analyze (field=det, nmax=6)") != std::string::npos);
		CHECK(t.find("[FAIL] check") != std::string::npos);
		CHECK(t.find("expected: central, proper") != std::string::npos);
		CHECK(t.find("anchor:   grassmann-det") != std::string::npos);
		CHECK(t.find("summary: 1/2 steps passed") != std::string::npos);
	}

	SECTION("all_passed") {
		r.steps.pop_back();
		r.finish();
		CHECK(r.all_passed());
		CHECK(r.summary == "1/1 steps passed");
	}
}

TEST_CASE("algebra descriptions") {
	SECTION("every kind constructs") {
		GradedAlgebra el = algebra_from_json(
		    json::parse(R"({"kind":"elementary","n":2,"group":"Z2","tuple":["0","1"]})"));
		CHECK(el.dim() == 4);
		CHECK(el.group() == AbGroup{{2}});

		CHECK(algebra_from_json(json::parse(R"({"kind":"pauli","n":2})")).dim() == 4);
		CHECK(algebra_from_json(json::parse(R"({"kind":"grassmann","k":3})")).dim() == 8);
		CHECK(algebra_from_json(json::parse(R"({"kind":"m11","k":2})")).dim() == 8);

		GradedAlgebra kg = algebra_from_json(json::parse(R"({"kind":"group-algebra","group":"Z2"})"));
		CHECK(kg.dim() == 2);

		GradedAlgebra tw = algebra_from_json(
		    json::parse(R"({"kind":"twisted","group":"Z2xZ2","cocycle":"standard-z2z2"})"));
		CHECK(tw.dim() == 4);
		CHECK(tw.group() == AbGroup{{2, 2}});

		// explicit cocycle matrix: the same twist, spelled out
		GradedAlgebra tw2 = algebra_from_json(json::parse(R"({
			"kind":"twisted","group":"Z2",
			"cocycle":[["1","1"],["1","-1"]]})"));
		CHECK(tw2.dim() == 2);
		AlgElement x = basis_element(tw2, 1);
		CHECK(x * x == CycScalar(-1L) * unit_of(tw2));

		GradedAlgebra tc = algebra_from_json(json::parse(R"({
			"kind":"tensor","rule":"componentwise",
			"left":{"kind":"grassmann","k":1},
			"right":{"kind":"group-algebra","group":"Z2"}})"));
		CHECK(tc.dim() == 4);
		CHECK(tc.group() == AbGroup{{2, 2}});

		GradedAlgebra ts = algebra_from_json(json::parse(R"({
			"kind":"tensor","rule":"sub",
			"left":{"kind":"group-algebra","group":"Z2"},
			"right":{"kind":"grassmann","k":1}})"));
		CHECK(ts.dim() == 4);
		CHECK(ts.group() == AbGroup{{2}});
	}

	SECTION("malformed descriptions are rejected") {
		CHECK_THROWS_AS(algebra_from_json(json::parse(R"("grassmann")")), std::invalid_argument);
		CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"kind":"octonion"})")), std::invalid_argument);
		CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"kind":"grassmann"})")), std::invalid_argument);
		CHECK_THROWS_AS(algebra_from_json(json::parse(
		                    R"({"kind":"twisted","group":"Z4","cocycle":"standard-z2z2"})")),
		                std::invalid_argument);
		CHECK_THROWS_AS(algebra_from_json(json::parse(
		                    R"({"kind":"twisted","group":"Z2","cocycle":[["1","1"]]})")),
		                std::invalid_argument);
		CHECK_THROWS_AS(algebra_from_json(json::parse(
		                    R"({"kind":"tensor","rule":"plus","left":{"kind":"grassmann","k":1},"right":{"kind":"grassmann","k":1}})")),
		                std::invalid_argument);
	}
}

TEST_CASE("algebra files") {
	CHECK_THROWS_AS(algebra_from_file("/nonexistent/algebra.json"), std::invalid_argument);
}
