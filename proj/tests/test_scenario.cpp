#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "regalg/scenario.hpp"

using namespace regalg;

TEST_CASE("scenario registry") {
	const auto& defs = scenario_registry();
	CHECK(defs.size() == 14);

	std::set<std::string> ids;
	for (const ScenarioDef& d : defs) {
		CHECK_FALSE(d.id.empty());
		CHECK_FALSE(d.description.empty());
		CHECK(d.run != nullptr);
		ids.insert(d.id);
	}
	CHECK(ids.size() == defs.size());

	CHECK_THROWS_WITH(run_scenario("nosuch"),
	                  Catch::Matchers::ContainsSubstring("unknown scenario: nosuch"));
}

TEST_CASE("fast scenarios pass end to end") {
	ScenarioReport cp = run_scenario("crossed-product");
	CHECK(cp.all_passed());
	CHECK_FALSE(cp.steps.empty());
	CHECK(cp.summary.find("steps passed") != std::string::npos);

	ScenarioReport fn = run_scenario("formanek-numeric");
	CHECK(fn.all_passed());

	ScenarioReport m3 = run_scenario("m3-table");
	CHECK(m3.all_passed());
	bool found = false;
	for (const StepReport& s : m3.steps)
		if (s.actual == "Mid = e(t,t)") found = true;
	CHECK(found);
}

TEST_CASE("the twisted tensor scenario records its two failing steps") {
	ScenarioReport r = run_scenario("twisted-z2z2");
	CHECK_FALSE(r.all_passed());
	std::vector<std::string> failing;
	for (const StepReport& s : r.steps)
		if (!s.pass) failing.push_back(s.op);
	REQUIRE(failing.size() == 2);
	CHECK(failing[0] == "product-verdict-on-tensored");
	CHECK(failing[1] == "witness-on-tensored");
}

TEST_CASE("parallel evaluation is deterministic") {
	ScenarioReport seq = run_scenario("grassmann-regularity", ScenarioOptions{6, false});
	ScenarioReport par = run_scenario("grassmann-regularity", ScenarioOptions{6, true});
	CHECK(seq == par);
	CHECK(seq.all_passed());
}
