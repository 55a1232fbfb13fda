#pragma once

// Report types for scenario runs (the JSON schema the CLI emits) and the
// JSON algebra-description loader. Reports round-trip exactly through JSON:
// from_json(to_json(r)) == r.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "regalg/galg.hpp"
#include "regalg/parse.hpp"

namespace regalg {

struct StepReport {
	std::string op;
	std::map<std::string, std::string> inputs; // argument name -> literal
	std::string expected;
	std::string actual;
	std::string anchor; // stable claim slug
	bool pass = false;

	bool operator==(const StepReport& o) const {
		return op == o.op && inputs == o.inputs && expected == o.expected && actual == o.actual &&
		       anchor == o.anchor && pass == o.pass;
	}
};

struct ScenarioReport {
	std::string scenario;
	std::vector<StepReport> steps;
	std::string summary;

	bool operator==(const ScenarioReport& o) const {
		return scenario == o.scenario && steps == o.steps && summary == o.summary;
	}

	bool all_passed() const {
		for (const auto& s : steps)
			if (!s.pass) return false;
		return true;
	}

	void finish() {
		size_t ok = 0;
		for (const auto& s : steps) ok += s.pass ? 1 : 0;
		summary = std::to_string(ok) + "/" + std::to_string(steps.size()) + " steps passed";
	}

	nlohmann::json to_json() const {
		nlohmann::json j;
		j["scenario"] = scenario;
		j["steps"] = nlohmann::json::array();
		for (const auto& s : steps) {
			nlohmann::json js;
			js["op"] = s.op;
			js["inputs"] = s.inputs;
			js["expected"] = s.expected;
			js["actual"] = s.actual;
			js["anchor"] = s.anchor;
			js["pass"] = s.pass;
			j["steps"].push_back(js);
		}
		j["summary"] = summary;
		return j;
	}

	static ScenarioReport from_json(const nlohmann::json& j) {
		ScenarioReport r;
		r.scenario = j.at("scenario").get<std::string>();
		for (const auto& js : j.at("steps")) {
			StepReport s;
			s.op = js.at("op").get<std::string>();
			s.inputs = js.at("inputs").get<std::map<std::string, std::string>>();
			s.expected = js.at("expected").get<std::string>();
			s.actual = js.at("actual").get<std::string>();
			s.anchor = js.at("anchor").get<std::string>();
			s.pass = js.at("pass").get<bool>();
			r.steps.push_back(std::move(s));
		}
		r.summary = j.at("summary").get<std::string>();
		return r;
	}

	std::string to_text() const {
		std::ostringstream os;
		os << "scenario: " << scenario << "\n";
		for (const auto& s : steps) {
			os << "  [" << (s.pass ? "PASS" : "FAIL") << "] " << s.op;
			if (!s.inputs.empty()) {
				os << " (";
				bool first = true;
				for (const auto& [k, v] : s.inputs) {
					if (!first) os << ", ";
					os << k << "=" << v;
					first = false;
				}
				os << ")";
			}
			os << "\n         expected: " << s.expected << "\n         actual:   " << s.actual << "\n";
			if (!s.anchor.empty()) os << "         anchor:   " << s.anchor << "\n";
		}
		os << "summary: " << summary << "\n";
		return os.str();
	}
};

// ---------------------------------------------------------------------------
// Algebra descriptions:
//   {"kind":"elementary","n":3,"group":"Z3","tuple":["0","0","1"]}
//   {"kind":"pauli","n":2}
//   {"kind":"grassmann","k":6}
//   {"kind":"m11","k":4}
//   {"kind":"group-algebra","group":"Z2"}
//   {"kind":"twisted","group":"Z2xZ2","cocycle":"standard-z2z2"}  (or a row-major
//       matrix of scalar literals)
//   {"kind":"tensor","rule":"sub"|"componentwise","left":{...},"right":{...}}

inline GradedAlgebra algebra_from_json(const nlohmann::json& j) {
	if (!j.is_object() || !j.contains("kind"))
		throw std::invalid_argument("algebra description: expected an object with a \"kind\" field");
	std::string kind = j.at("kind").get<std::string>();
	auto require = [&](const char* field) -> const nlohmann::json& {
		if (!j.contains(field))
			throw std::invalid_argument("algebra description (" + kind + "): missing field \"" + field + "\"");
		return j.at(field);
	};
	if (kind == "elementary") {
		long n = require("n").get<long>();
		AbGroup g = parse_group(require("group").get<std::string>());
		std::vector<GroupElement> tuple;
		for (const auto& t : require("tuple")) tuple.push_back(parse_element(g, t.get<std::string>()));
		return elementary_grading((size_t)n, g, tuple);
	}
	if (kind == "pauli") return pauli_grading(require("n").get<long>());
	if (kind == "grassmann") return grassmann(require("k").get<long>());
	if (kind == "m11") return m11_grassmann(require("k").get<long>());
	if (kind == "group-algebra") {
		AbGroup g = parse_group(require("group").get<std::string>());
		size_t n = (size_t)g.order();
		Mat<CycScalar> alpha(n, n);
		for (size_t a = 0; a < n; ++a)
			for (size_t b = 0; b < n; ++b) alpha.at(a, b) = cyc_one();
		return twisted_group_algebra(g, alpha);
	}
	if (kind == "twisted") {
		AbGroup g = parse_group(require("group").get<std::string>());
		const nlohmann::json& c = require("cocycle");
		size_t n = (size_t)g.order();
		Mat<CycScalar> alpha(n, n);
		if (c.is_string()) {
			if (c.get<std::string>() != "standard-z2z2" || g != AbGroup{{2, 2}})
				throw std::invalid_argument("algebra description: the only named cocycle is standard-z2z2 on Z2xZ2");
			alpha = z2z2_standard_cocycle();
		} else {
			if (!c.is_array() || c.size() != n)
				throw std::invalid_argument("algebra description: cocycle must be a " + std::to_string(n) + "x" +
				                            std::to_string(n) + " matrix of scalar literals");
			for (size_t a = 0; a < n; ++a) {
				if (!c[a].is_array() || c[a].size() != n)
					throw std::invalid_argument("algebra description: cocycle row " + std::to_string(a) + " malformed");
				for (size_t b = 0; b < n; ++b) alpha.at(a, b) = parse_scalar(c[a][b].get<std::string>());
			}
		}
		return twisted_group_algebra(g, alpha);
	}
	if (kind == "tensor") {
		GradedAlgebra left = algebra_from_json(require("left"));
		GradedAlgebra right = algebra_from_json(require("right"));
		std::string rule = require("rule").get<std::string>();
		if (rule == "componentwise") return tensor_componentwise(left, right);
		if (rule == "sub") return tensor_graded(left, right, tensor_sub_degrees());
		throw std::invalid_argument("algebra description: tensor rule must be \"sub\" or \"componentwise\"");
	}
	throw std::invalid_argument("algebra description: unknown kind \"" + kind + "\"");
}

inline GradedAlgebra algebra_from_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
	nlohmann::json j;
	try {
		in >> j;
	} catch (const std::exception& e) {
		throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
	}
	return algebra_from_json(j);
}

} // namespace regalg
