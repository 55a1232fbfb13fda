// Command-line front end: run built-in or user-defined verification
// scenarios, check a polynomial against an algebra, or analyze a grading.
// Text reports go to stdout; --json switches stdout to the JSON schema and
// --out additionally writes the JSON report to a file.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "regalg/scenario.hpp"

namespace {

using namespace regalg;

CentralityVerdict decide(const GradedPoly& f, const GradedAlgebra& a) {
	return f.is_multilinear() ? test_multilinear(f, a) : test_generic(f, a);
}

std::string mode_verdict(const CentralityVerdict& v, const std::string& mode) {
	if (mode == "identity") return v.is_identity ? "identity" : "not an identity";
	return detail::verdict_str(v);
}

void print_witness(std::ostream& os, const CentralityWitness& w) {
	os << "witness assignment:\n";
	for (const auto& [var, val] : w.assignment) os << "  x" << var << " = " << val << "\n";
	os << "value: " << w.value << "\n";
	if (!w.non_commuting.empty()) os << "does not commute with: " << w.non_commuting << "\n";
}

nlohmann::json witness_json(const CentralityWitness& w) {
	nlohmann::json j;
	j["assignment"] = nlohmann::json::array();
	for (const auto& [var, val] : w.assignment)
		j["assignment"].push_back({{"var", var}, {"value", val}});
	j["value"] = w.value;
	j["non_commuting"] = w.non_commuting;
	return j;
}

// Everything analyze computes, shared by the subcommand and user scenarios.
struct Analysis {
	GradedAlgebra algebra;
	RegularityCertificate cert;
	std::optional<MinimalCoarsening> coarsening;

	explicit Analysis(const GradedAlgebra& a, long nmax)
	    : algebra(a), cert(analyze_regularity(a, nmax)) {
		if (cert.bichar.ok && cert.min && !cert.min->minimal)
			coarsening = minimal_coarsening(a, *cert.bichar.beta);
	}

	std::string field(const std::string& name) const {
		using namespace detail;
		if (name == "condition-i") return cond_str(cert.cond_i);
		if (name == "regular") return yn(cert.regular());
		if (name == "bicharacter")
			return cert.bichar.ok ? mat_str(cert.bichar.beta->values) : "none: " + cert.bichar.witness;
		if (name == "det") return cert.min ? cert.min->detMA.to_string() : "none";
		if (name == "minimal") return cert.min ? yn(cert.min->minimal) : "none";
		if (name == "g0") return cert.min ? subgroup_str(cert.min->G0) : "none";
		if (name == "quotient-group")
			return coarsening ? coarsening->coarsened.group().to_string() : "none";
		if (name == "theta") return coarsening ? mat_str(coarsening->theta.values) : "none";
		if (name == "group") return algebra.group().to_string();
		if (name == "dim") return std::to_string(algebra.dim());
		throw std::invalid_argument("analyze: unknown field \"" + name + "\"");
	}

	void print_text(std::ostream& os) const {
		using namespace detail;
		os << "algebra: " << algebra.name() << " (dim " << algebra.dim() << ") graded by "
		   << algebra.group().to_string() << "\n";
		os << "condition (i): " << cond_str(cert.cond_i) << "\n";
		if (cert.bichar.ok) {
			os << "bicharacter: " << mat_str(cert.bichar.beta->values) << "\n";
		} else {
			os << "bicharacter: none\n";
			os << "inconsistency witness: " << cert.bichar.witness << "\n";
		}
		os << "regular: " << yn(cert.regular()) << "\n";
		if (cert.min) {
			os << "det M^A: " << cert.min->detMA.to_string() << "\n";
			os << "minimal: " << yn(cert.min->minimal) << "\n";
			os << "G0: " << subgroup_str(cert.min->G0) << "\n";
		}
		if (coarsening) {
			os << "minimal coarsening:\n";
			os << "  quotient group: " << coarsening->coarsened.group().to_string() << "\n";
			os << "  theta: " << mat_str(coarsening->theta.values) << "\n";
			os << "  theta minimal: " << yn(minimality(coarsening->theta).minimal) << "\n";
		}
	}

	nlohmann::json to_json() const {
		nlohmann::json j;
		j["algebra"] = algebra.name();
		j["dim"] = algebra.dim();
		j["group"] = algebra.group().to_string();
		j["condition_i"] = detail::cond_str(cert.cond_i);
		j["regular"] = cert.regular();
		if (cert.bichar.ok)
			j["bicharacter"] = detail::mat_str(cert.bichar.beta->values);
		else
			j["inconsistency"] = cert.bichar.witness;
		if (cert.min) {
			j["det"] = cert.min->detMA.to_string();
			j["minimal"] = cert.min->minimal;
			j["g0"] = detail::subgroup_str(cert.min->G0);
		}
		if (coarsening) {
			j["coarsening"] = {{"quotient_group", coarsening->coarsened.group().to_string()},
			                   {"theta", detail::mat_str(coarsening->theta.values)}};
		}
		return j;
	}
};

// User scenario file: {"id":..., "algebra": {...}, "steps":[...]} where a step
// is {"op":"check","poly":...,"mode":...,"expected":...} or
// {"op":"analyze","field":...,"expected":...}; "anchor" is optional.
ScenarioReport run_user_scenario(const std::string& path, const ScenarioOptions& opt) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
	nlohmann::json j;
	try {
		j = nlohmann::json::parse(in);
	} catch (const nlohmann::json::parse_error& e) {
		throw std::invalid_argument(path + ": " + e.what());
	}
	GradedAlgebra a = algebra_from_json(j.at("algebra"));
	ScenarioReport rep;
	rep.scenario = j.contains("id") ? j.at("id").get<std::string>() : path;
	std::optional<Analysis> an;
	for (const auto& js : j.at("steps")) {
		std::string op = js.at("op").get<std::string>();
		std::string expected = js.at("expected").get<std::string>();
		std::string anchor = js.contains("anchor") ? js.at("anchor").get<std::string>() : "user-step";
		std::map<std::string, std::string> inputs;
		std::string actual;
		try {
			if (op == "check") {
				std::string text = js.at("poly").get<std::string>();
				std::string mode = js.contains("mode") ? js.at("mode").get<std::string>() : "central";
				inputs = {{"poly", text}, {"mode", mode}};
				actual = mode_verdict(decide(parse_graded_poly(a.group(), text), a), mode);
			} else if (op == "analyze") {
				std::string field = js.at("field").get<std::string>();
				inputs = {{"field", field}};
				if (!an) an.emplace(a, opt.nmax);
				actual = an->field(field);
			} else {
				actual = "unknown op: " + op;
			}
		} catch (const std::exception& e) {
			actual = std::string("error: ") + e.what();
		}
		rep.steps.push_back(detail::step(op, std::move(inputs), expected, actual, anchor));
	}
	rep.finish();
	return rep;
}

void emit(const nlohmann::json& j, bool json_stdout, const std::string& out_path,
          const std::string& text) {
	if (json_stdout)
		std::cout << j.dump(2) << "\n";
	else
		std::cout << text;
	if (!out_path.empty()) {
		std::ofstream out(out_path);
		if (!out) throw std::invalid_argument("cannot write: " + out_path);
		out << j.dump(2) << "\n";
	}
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact analysis of group-graded algebras"};
	app.require_subcommand(1);

	std::string out_path;
	bool json = false;
	long nmax = 6;
	bool parallel = false;

	auto* run = app.add_subcommand("run", "run a built-in scenario or a scenario file");
	std::string id;
	run->add_option("id", id, "scenario id from `list`, or a path to a JSON scenario file")
	    ->required();
	run->add_option("--out", out_path, "also write the JSON report to this file");
	run->add_flag("--json", json, "print the JSON report instead of text");
	run->add_option("--nmax", nmax, "length bound for the nonzero-products scan");
	run->add_flag("--parallel", parallel, "run independent scenario parts concurrently");

	auto* list = app.add_subcommand("list", "list the built-in scenarios");

	auto* check = app.add_subcommand("check", "test a polynomial against an algebra");
	std::string alg_path, poly_text, mode = "central";
	check->add_option("--algebra", alg_path, "JSON algebra description file")->required();
	check->add_option("--poly", poly_text, "graded polynomial, e.g. x1{1}*x2{1} or [x1{0},x2{1}]")
	    ->required();
	check->add_option("--mode", mode, "question to ask")
	    ->check(CLI::IsMember({"identity", "central", "proper"}));
	check->add_option("--out", out_path, "also write the JSON report to this file");
	check->add_flag("--json", json, "print the JSON report instead of text");

	auto* analyze = app.add_subcommand("analyze", "regularity, bicharacter, minimality, coarsening");
	analyze->add_option("--algebra", alg_path, "JSON algebra description file")->required();
	analyze->add_option("--nmax", nmax, "length bound for the nonzero-products scan");
	analyze->add_option("--out", out_path, "also write the JSON report to this file");
	analyze->add_flag("--json", json, "print the JSON report instead of text");

	CLI11_PARSE(app, argc, argv);

	try {
		if (run->parsed()) {
			ScenarioOptions opt{nmax, parallel};
			std::optional<ScenarioReport> rep;
			for (const ScenarioDef& d : scenario_registry())
				if (d.id == id) rep = d.run(opt);
			if (!rep && std::ifstream(id).good()) rep = run_user_scenario(id, opt);
			if (!rep) {
				std::cerr << "unknown scenario: " << id << "\n";
				return 2;
			}
			emit(rep->to_json(), json, out_path, rep->to_text());
			return rep->all_passed() ? 0 : 1;
		}
		if (list->parsed()) {
			for (const ScenarioDef& d : scenario_registry())
				std::cout << d.id << "\n    " << d.description << "\n";
			return 0;
		}
		if (check->parsed()) {
			GradedAlgebra a = algebra_from_file(alg_path);
			GradedPoly f = parse_graded_poly(a.group(), poly_text);
			CentralityVerdict v = decide(f, a);
			std::string verdict = mode_verdict(v, mode);
			nlohmann::json j{{"op", "check"},
			                 {"algebra", a.name()},
			                 {"poly", poly_text},
			                 {"mode", mode},
			                 {"verdict", verdict}};
			std::ostringstream text;
			text << "verdict: " << verdict << "\n";
			if (v.witness) {
				print_witness(text, *v.witness);
				j["witness"] = witness_json(*v.witness);
			}
			emit(j, json, out_path, text.str());
			return 0;
		}
		if (analyze->parsed()) {
			Analysis an(algebra_from_file(alg_path), nmax);
			std::ostringstream text;
			an.print_text(text);
			emit(an.to_json(), json, out_path, text.str());
			return 0;
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
