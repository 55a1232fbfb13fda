#pragma once

// Named verification scenarios. Each scenario builds a fixed small algebra,
// runs the relevant analyses, and records every checked step with expected
// and actual values; a step passes iff the two strings are equal. Scenarios
// are split into independent parts so they can optionally run concurrently.

#include <functional>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "regalg/primeness.hpp"
#include "regalg/report.hpp"

namespace regalg {

struct ScenarioOptions {
	long nmax = 6;      // product-length bound for the regularity scan
	bool parallel = false;
};

namespace detail {

using StepList = std::vector<StepReport>;
using PartFn = std::function<StepList()>;

inline StepReport step(std::string op, std::map<std::string, std::string> inputs, std::string expected,
                       std::string actual, std::string anchor) {
	StepReport s;
	s.op = std::move(op);
	s.inputs = std::move(inputs);
	s.expected = std::move(expected);
	s.actual = std::move(actual);
	s.anchor = std::move(anchor);
	s.pass = s.expected == s.actual;
	return s;
}

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline std::string verdict_str(const CentralityVerdict& v) {
	if (v.is_identity) return "identity";
	if (v.is_proper_central) return "central, proper";
	if (v.is_central) return "central";
	return "not central";
}

inline std::string cond_str(const ConditionIResult& c) {
	switch (c.verdict) {
	case RegVerdict::RegularCertified:
		return "regular-certified";
	case RegVerdict::RegularUpTo:
		return "regular-up-to(" + std::to_string(c.n_max) + ")";
	default: {
		std::string s = "not-regular at (";
		for (size_t i = 0; i < c.failing_tuple.size(); ++i)
			s += (i ? ", " : "") + c.failing_tuple[i].to_string();
		return s + ")";
	}
	}
}

inline std::string mat_str(const Mat<CycScalar>& m) {
	std::string s = "[";
	for (size_t i = 0; i < m.rows; ++i) {
		s += i ? ", [" : "[";
		for (size_t j = 0; j < m.cols; ++j) s += (j ? ", " : "") + m.at(i, j).to_string();
		s += "]";
	}
	return s + "]";
}

inline std::string subgroup_str(const Subgroup& s) {
	std::string out = "{";
	for (size_t i = 0; i < s.members.size(); ++i) out += (i ? ", " : "") + s.members[i].to_string();
	return out + "}";
}

inline std::string check_str(const FormanekCheck& c) { return c.pass ? "pass" : "fail: " + c.detail; }

inline Mat<CycScalar> all_ones_cocycle(const AbGroup& g) {
	size_t n = (size_t)g.order();
	Mat<CycScalar> m(n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) m.at(i, j) = cyc_one();
	return m;
}

inline GradedPoly mono_poly(const AbGroup& g, const std::vector<GroupElement>& degs) {
	GradedPoly p(g);
	std::vector<int> word;
	for (size_t i = 0; i < degs.size(); ++i) {
		p.declare((int)i + 1, degs[i]);
		word.push_back((int)i + 1);
	}
	p.add_term(word, cyc_one());
	return p;
}

inline GradedPoly alt_poly(const AbGroup& g, const std::vector<GroupElement>& degs) {
	GradedPoly p(g);
	int d = (int)degs.size();
	for (int i = 0; i < d; ++i) p.declare(i + 1, degs[(size_t)i]);
	std::vector<int> perm((size_t)d);
	for (int i = 0; i < d; ++i) perm[(size_t)i] = i + 1;
	do {
		int inv = 0;
		for (int i = 0; i < d; ++i)
			for (int j = i + 1; j < d; ++j)
				if (perm[(size_t)i] > perm[(size_t)j]) ++inv;
		p.add_term(perm, CycScalar(inv % 2 ? -1L : 1L));
	} while (std::next_permutation(perm.begin(), perm.end()));
	return p;
}

inline ScenarioReport run_parts(const std::string& id, std::vector<PartFn> parts, bool parallel) {
	ScenarioReport rep;
	rep.scenario = id;
	auto guarded = [](const PartFn& p) -> StepList {
		try {
			return p();
		} catch (const std::exception& e) {
			return {step("exception", {}, "none", e.what(), "unexpected-exception")};
		}
	};
	if (parallel && parts.size() > 1) {
		std::vector<std::future<StepList>> fut;
		fut.reserve(parts.size());
		for (auto& p : parts) fut.push_back(std::async(std::launch::async, guarded, p));
		for (auto& f : fut) {
			StepList l = f.get();
			rep.steps.insert(rep.steps.end(), l.begin(), l.end());
		}
	} else {
		for (auto& p : parts) {
			StepList l = guarded(p);
			rep.steps.insert(rep.steps.end(), l.begin(), l.end());
		}
	}
	rep.finish();
	return rep;
}

// The M3 algebra used by the table, degree-3, Formanek and conjugation
// scenarios: elementary grading by the tuple (0,0,1) over Z3.
inline GradedAlgebra m3_standard() {
	AbGroup z3{{3}};
	GroupElement g0 = zero_element(z3), g1(z3, {1});
	return elementary_grading(3, z3, {g0, g0, g1});
}

// --------------------------------------------------------------------------
// scenario bodies

inline ScenarioReport sc_grassmann_regularity(const ScenarioOptions& o) {
	auto part = [o]() -> StepList {
		GradedAlgebra e6 = grassmann(6);
		RegularityCertificate cert = analyze_regularity(e6, o.nmax);
		StepList out;
		out.push_back(step("condition-i", {{"algebra", "E6"}, {"nmax", std::to_string(o.nmax)}},
		                   "regular-up-to(" + std::to_string(o.nmax) + ")", cond_str(cert.cond_i),
		                   "nonzero-products"));
		out.push_back(step("bicharacter-extraction", {{"algebra", "E6"}}, "yes",
		                   cert.bichar.ok ? "yes" : "no: " + cert.bichar.witness, "supercommutation"));
		if (cert.bichar.ok) {
			auto bad = cert.bichar.beta->check_identities();
			out.push_back(step("bicharacter-identities", {}, "ok", bad ? *bad : "ok", "bicharacter-axioms"));
			out.push_back(step("bicharacter-matrix", {}, "[[1, 1], [1, -1]]", mat_str(cert.bichar.beta->values),
			                   "parity-sign-table"));
		}
		if (cert.min) {
			out.push_back(step("sign-matrix-det", {}, "-2", cert.min->detMA.to_string(), "sign-determinant"));
			out.push_back(step("minimal", {}, "yes", yn(cert.min->minimal), "grading-minimality"));
			out.push_back(step("degenerate-subgroup", {}, "{0}", subgroup_str(cert.min->G0), "radical-of-beta"));
		}
		return out;
	};
	return run_parts("grassmann-regularity", {part}, false);
}

inline ScenarioReport sc_pauli(long n, const ScenarioOptions& o) {
	std::string name = "M" + std::to_string(n);
	auto part = [n, name, o]() -> StepList {
		GradedAlgebra a = pauli_grading(n);
		RegularityCertificate cert = analyze_regularity(a, o.nmax);
		StepList out;
		out.push_back(step("condition-i", {{"algebra", name + " clock/shift"}}, "regular-certified",
		                   cond_str(cert.cond_i), "invertible-components"));
		out.push_back(step("regular", {}, "yes", yn(cert.regular()), "regular-grading"));
		out.push_back(
		    step("minimal", {}, "yes", yn(cert.min && cert.min->minimal), "fine-grading-minimality"));
		PrimenessWitness w = regular_counterexample(a, cert);
		out.push_back(step("product-verdict", {{"f", "x1"}, {"g", "x2"}}, "central, proper",
		                   verdict_str(w.vfg), "scalar-product-of-monomials"));
		out.push_back(step("left-factor-verdict", {{"f", "x1"}}, "not central", verdict_str(w.vf),
		                   "noncentral-factor"));
		out.push_back(
		    step("conclusion", {}, "refutes-primeness", to_string(w.conclusion), "factor-criterion"));
		return out;
	};
	return run_parts("pauli-" + (n == 2 ? std::string("m2") : "m" + std::to_string(n)), {part}, false);
}

inline ScenarioReport sc_pauli_m2(const ScenarioOptions& o) { return sc_pauli(2, o); }
inline ScenarioReport sc_pauli_m3(const ScenarioOptions& o) { return sc_pauli(3, o); }

inline ScenarioReport sc_coarsening(const ScenarioOptions& o) {
	auto part = [o]() -> StepList {
		GradedAlgebra kz2 = twisted_group_algebra(AbGroup{{2}}, all_ones_cocycle(AbGroup{{2}}));
		GradedAlgebra a = tensor_componentwise(grassmann(6), kz2);
		RegularityCertificate cert = analyze_regularity(a, o.nmax);
		StepList out;
		out.push_back(step("condition-i", {{"algebra", "E6 (x) KZ2"}},
		                   "regular-up-to(" + std::to_string(o.nmax) + ")", cond_str(cert.cond_i),
		                   "nonzero-products"));
		out.push_back(step("regular", {}, "yes", yn(cert.regular()), "regular-grading"));
		if (!cert.bichar.ok || !cert.min) return out;
		out.push_back(step("minimal", {}, "no", yn(cert.min->minimal), "degenerate-grading"));
		out.push_back(step("degenerate-subgroup", {}, "{(0,0), (0,1)}", subgroup_str(cert.min->G0),
		                   "radical-of-beta"));
		MinimalCoarsening mc = minimal_coarsening(a, *cert.bichar.beta);
		out.push_back(
		    step("quotient-group", {}, "Z2", mc.coarsened.group().to_string(), "grading-quotient"));
		out.push_back(step("coarsened-bicharacter", {}, "[[1, 1], [1, -1]]", mat_str(mc.theta.values),
		                   "parity-sign-table"));
		MinimalityResult tm = minimality(mc.theta);
		out.push_back(step("coarsened-minimal", {}, "yes", yn(tm.minimal), "coarsening-minimality"));
		out.push_back(step("coarsened-degenerate-subgroup", {}, "{0}", subgroup_str(tm.G0),
		                   "radical-of-theta"));
		bool dims_ok = mc.coarsened.dim() == a.dim();
		for (const GroupElement& h : all_elements(mc.coarsened.group())) {
			size_t want = 0;
			for (const GroupElement& g : preimage(mc.pi, h)) want += a.component(g).size();
			if (mc.coarsened.component(h).size() != want) dims_ok = false;
		}
		out.push_back(step("component-regrouping", {}, "yes", yn(dims_ok), "fiberwise-dimensions"));
		RegularityCertificate cert2 = analyze_regularity(mc.coarsened, o.nmax);
		out.push_back(step("coarsened-regular", {}, "yes", yn(cert2.regular()), "regular-grading"));
		return out;
	};
	return run_parts("coarsening-e6-kz2", {part}, false);
}

inline ScenarioReport sc_m3_table(const ScenarioOptions&) {
	auto part = []() -> StepList {
		Degree3Report rep = degree3_exhaustive(m3_standard(), false);
		static const char* expected[6] = {
		    "Mid = e(t,t)",
		    "M(123) = e(s,s)",
		    "M(132) = e(r,r)",
		    "M(12) = d(r,s)d(r,t)e(s,t)",
		    "M(13) = d(r,t)d(s,t)e(r,s)",
		    "M(23) = d(r,s)d(s,t)e(t,r)",
		};
		StepList out;
		for (size_t i = 0; i < rep.table_rows.size() && i < 6; ++i)
			out.push_back(step("monomial-product-row", {{"X1", "e(t,s)"}, {"X2", "e(s,r)"}, {"X3", "e(r,t)"}},
			                   expected[i], rep.table_rows[i], "matrix-unit-products"));
		out.push_back(step("numeric-grounding", {{"assignments", "all 6 bijections"}}, "yes",
		                   yn(rep.table_ok), "concrete-index-check"));
		out.push_back(
		    step("offdiagonal-squares", {}, "yes", yn(rep.zero_products_ok), "component-nilpotence"));
		out.push_back(step("alternating-degree-pattern", {{"lengths", "1..4"}}, "yes",
		                   yn(rep.monomial_pattern_ok), "central-monomial-degrees"));
		return out;
	};
	return run_parts("m3-table", {part}, false);
}

inline ScenarioReport sc_degree3(const ScenarioOptions&) {
	auto part = []() -> StepList {
		Degree3Report rep = degree3_exhaustive(m3_standard(), true);
		StepList out;
		out.push_back(step("triple-count", {{"group", "Z3"}}, "27", std::to_string(rep.triples.size()),
		                   "exhaustive-degrees"));
		for (const auto& t : rep.triples) {
			std::string degs;
			for (size_t i = 0; i < t.degrees.size(); ++i) degs += (i ? "," : "") + t.degrees[i].to_string();
			std::string actual = t.central_dim == t.identity_dim
			                         ? "equal dims"
			                         : "central=" + std::to_string(t.central_dim) +
			                               " identity=" + std::to_string(t.identity_dim);
			out.push_back(step("multilinear-central-space", {{"degrees", degs}}, "equal dims", actual,
			                   "no-proper-central-degree-3"));
		}
		out.push_back(step("all-triples-equal", {}, "yes", yn(rep.all_equal), "no-proper-central-degree-3"));
		return out;
	};
	return run_parts("degree3-m3", {part}, false);
}

inline ScenarioReport sc_formanek_p(const ScenarioOptions&) {
	auto part = []() -> StepList {
		FormanekP f = build_formanek_p(m3_standard());
		FormanekReport rep = verify_p_symbolically(f);
		StepList out;
		out.push_back(step("generic-shape", {{"P", "U(x0;x1,x2,x3) + U(x0;x3,x1,x2) - U(x0;x2,x3,x1)"}},
		                   "pass", check_str(rep.shape), "diagonal-value-shape"));
		out.push_back(step("diagonal-case", {{"Z", "diag(z1,z2,z3)"}}, "pass",
		                   check_str(rep.diagonal_identity), "discriminant-times-m"));
		out.push_back(step("m-closed-form", {}, "u1*v2*W21 + u2*v1*W12", rep.m.to_string(),
		                   "multilinear-x-factor"));
		out.push_back(step("m-at-matrix-units", {{"X", "(e13, e32, e21)"}}, "pass",
		                   check_str(rep.m_at_basis), "normalization-point"));
		out.push_back(step("full-generic-identity", {{"Z", "generic in R0"}}, "pass",
		                   check_str(rep.full_identity), "fourteen-indeterminates"));
		out.push_back(step("vanishing", {{"Z", "e12"}}, "pass", check_str(rep.vanish_e12),
		                   "nilpotent-slot"));
		out.push_back(step("vanishing", {{"Z", "e21"}}, "pass", check_str(rep.vanish_e21),
		                   "nilpotent-slot"));
		out.push_back(step("random-specializations", {{"rounds", "200"}}, "pass",
		                   check_str(rep.random_spot), "evaluation-consistency"));
		PrimenessWitness w = formanek_witness(f);
		out.push_back(step("p-verdict", {}, "not central", verdict_str(w.vf), "noncentral-factor"));
		out.push_back(step("pp-verdict", {{"product", "P * P'"}}, "central, proper", verdict_str(w.vfg),
		                   "proper-central-product"));
		out.push_back(
		    step("conclusion", {}, "refutes-primeness", to_string(w.conclusion), "factor-criterion"));
		return out;
	};
	return run_parts("formanek-p", {part}, false);
}

inline ScenarioReport sc_formanek_numeric(const ScenarioOptions&) {
	auto part = []() -> StepList {
		FormanekP f = build_formanek_p(m3_standard());
		FormanekInstance inst = formanek_numeric_instance(f);
		StepList out;
		out.push_back(step("evaluate", {{"Z", "diag(0,1,2)"}, {"X", "(e13, e32, e21)"}},
		                   "4*e11 + 4*e22 - 4*e33", inst.value.to_string(), "concrete-instance"));
		out.push_back(step("eigenvalue-discriminant", {{"roots", "0,1,2"}}, "4", inst.disc.to_string(),
		                   "squared-differences"));
		out.push_back(step("instance-matches-discriminant", {}, "yes", yn(inst.ok), "concrete-instance"));
		return out;
	};
	return run_parts("formanek-numeric", {part}, false);
}

inline ScenarioReport sc_conjugation(const ScenarioOptions&) {
	auto part = []() -> StepList {
		using detail::eidx3;
		GradedAlgebra r = m3_standard();
		AlgElement s(r);
		s.set(eidx3(1, 1), cyc_one());
		s.set(eidx3(1, 2), cyc_one());
		s.set(eidx3(2, 2), CycScalar(2L));
		s.set(eidx3(3, 3), CycScalar(3L));
		ConjugationResult cr = conjugator_in_r0(r, s);
		StepList out;
		out.push_back(step("conjugate-to-diagonal", {{"S", s.to_string()}}, "yes", yn(cr.ok),
		                   "component-preserving-conjugation"));
		out.push_back(step("diagonal-form", {{"S", s.to_string()}}, "2*e11 + e22 + 3*e33",
		                   cr.ok ? cr.D.to_string() : cr.note, "rational-spectrum"));
		ConjugationSuite suite = conjugation_random_suite(r, 20, 0x5eedULL);
		out.push_back(step("random-suite", {{"count", "20"}},
		                   "20/20", std::to_string(suite.passed) + "/" + std::to_string(suite.total),
		                   suite.first_failure.empty() ? "component-preserving-conjugation"
		                                               : "component-preserving-conjugation"));
		if (!suite.first_failure.empty())
			out.push_back(step("first-failure", {}, "", suite.first_failure, "diagnostic"));
		return out;
	};
	return run_parts("conjugation", {part}, false);
}

inline ScenarioReport sc_grassmann_e3(const ScenarioOptions&) {
	auto part = []() -> StepList {
		GradedAlgebra e3 = grassmann(3);
		AnnihilatorIdeal t = annihilator_ideal(e3);
		StepList out;
		out.push_back(step("odd-annihilator-invariants", {{"algebra", "E3"}}, "ok", "ok",
		                   "graded-ideal-square-zero"));
		out.push_back(step("odd-annihilator-dim", {}, "1", std::to_string(t.basis.size()),
		                   "top-monomial-span"));
		if (t.basis.size() == 1)
			out.push_back(step("odd-annihilator-basis", {}, "e1e2e3", t.basis[0].to_string(),
			                   "top-monomial-span"));
		QuotientAlgebra q = quotient_by(e3, t);
		out.push_back(
		    step("quotient-dim", {}, "7", std::to_string(q.quotient.dim()), "annihilator-quotient"));
		AbGroup triv{{}};
		GroupHom to_trivial(AbGroup{{2}}, triv, {zero_element(triv)});
		GradedAlgebra e3u = coarsen_by(e3, to_trivial);
		GradedPoly x = GradedPoly::variable(triv, 1, zero_element(triv));
		GradedPoly yz = gp_comm(GradedPoly::variable(triv, 2, zero_element(triv)),
		                        GradedPoly::variable(triv, 3, zero_element(triv)));
		PrimenessWitness w = primeness_witness(x, yz, e3u);
		out.push_back(step("product-verdict", {{"poly", "x*[y,z]"}}, "central, proper",
		                   verdict_str(w.vfg), "commutator-central"));
		out.push_back(
		    step("x-verdict", {{"poly", "x"}}, "not central", verdict_str(w.vf), "noncentral-factor"));
		out.push_back(step("bracket-verdict", {{"poly", "[y,z]"}}, "central, proper", verdict_str(w.vg),
		                   "commutator-central"));
		out.push_back(
		    step("conclusion", {}, "refutes-primeness", to_string(w.conclusion), "factor-criterion"));
		return out;
	};
	return run_parts("grassmann-e3", {part}, false);
}

inline ScenarioReport sc_bn_e4(const ScenarioOptions&) {
	auto part = []() -> StepList {
		GradedAlgebra e4 = grassmann(4);
		std::vector<AlgElement> gens{basis_element(e4, 1), basis_element(e4, 2), basis_element(e4, 4)};
		BnReport rep = bn_construction(e4, gens);
		StepList out;
		std::map<std::string, std::string> in{{"algebra", "E4"}, {"generators", "e1, e2, e3"}};
		out.push_back(step("longest-product", in, "3", std::to_string(rep.l), "generator-products"));
		out.push_back(step("word-bound-k", in, "1", std::to_string(rep.k), "half-length"));
		out.push_back(step("span-dim", in, "7", std::to_string(rep.bn.dim()), "generated-subalgebra"));
		out.push_back(
		    step("unital-dim", in, "8", std::to_string(rep.unital.dim()), "adjoined-unit"));
		out.push_back(step("monomial-identity", {{"poly", "x1*x2*x3*x4"}}, "yes", yn(rep.identity_ok),
		                   "length-overflow"));
		out.push_back(step("coefficient-identity", {{"poly", "f(a, b1, b2)"}}, "yes",
		                   yn(rep.coefficient_ok), "power-of-two-coefficient"));
		out.push_back(step("f-verdict", {{"poly", "x*[x1,x2]"}}, "central, proper",
		                   verdict_str(rep.f_verdict), "commutator-central"));
		out.push_back(step("x-verdict", {{"poly", "x"}}, "not central", verdict_str(rep.x_verdict),
		                   "noncentral-factor"));
		out.push_back(step("conclusion", {}, "refutes-primeness", to_string(rep.conclusion),
		                   "factor-criterion"));
		return out;
	};
	return run_parts("bn-e4", {part}, false);
}

inline ScenarioReport sc_twisted(const ScenarioOptions&) {
	auto part = []() -> StepList {
		AbGroup q{{2, 2}};
		std::vector<GroupElement> tuple{zero_element(q), zero_element(q)};
		TwistedReport rep = twisted_counterexample(q, z2z2_standard_cocycle(), 2, tuple);
		StepList out;
		std::map<std::string, std::string> in{{"Q", "Z2xZ2"}, {"r", "2"}};
		out.push_back(step("noncommuting-degree", in, "(0,1)", rep.q.to_string(), "cocycle-asymmetry"));
		out.push_back(step("normalizing-scalar", in, "1", rep.c.to_string(), "inverse-pairing"));
		out.push_back(step("displayed-evaluation", {{"value", "(Xq (x) I2) * c(X-q (x) I2)"}}, "yes",
		                   yn(rep.displayed_evaluation_ok), "unit-component-value"));
		out.push_back(step("xq-noncentral", {}, "yes", yn(rep.xq_noncentral), "noncentral-factor"));
		out.push_back(step("witness-on-twisted", {{"r", "1"}}, "refutes-primeness",
		                   to_string(rep.on_twisted.conclusion), "factor-criterion"));
		out.push_back(step("product-verdict-on-tensored", {{"poly", "x1 * c x2"}}, "central, proper",
		                   verdict_str(rep.on_tensored.vfg), "proper-central-product"));
		out.push_back(step("witness-on-tensored", {{"r", "2"}}, "refutes-primeness",
		                   to_string(rep.on_tensored.conclusion), "factor-criterion"));
		return out;
	};
	return run_parts("twisted-z2z2", {part}, false);
}

// oracle-suite parts: (a) generic vs multilinear testers on an exhaustive
// small corpus, (b) the infinite-Grassmann identity oracle against the
// finite truncation E_{2d}, (c) the three minimality criteria, (d) exact
// determinants against cofactor expansion.

inline StepList oracle_part_testers() {
	struct Entry {
		const char* name;
		GradedAlgebra alg;
	};
	std::vector<Entry> corpus;
	corpus.push_back({"E2", grassmann(2)});
	corpus.push_back({"E3", grassmann(3)});
	corpus.push_back({"KZ2", twisted_group_algebra(AbGroup{{2}}, all_ones_cocycle(AbGroup{{2}}))});
	corpus.push_back({"twisted-Z2xZ2", twisted_group_algebra(AbGroup{{2, 2}}, z2z2_standard_cocycle())});
	corpus.push_back({"M2 clock/shift", pauli_grading(2)});
	corpus.push_back({"M3 clock/shift", pauli_grading(3)});
	corpus.push_back({"M3 elementary", m3_standard()});
	StepList out;
	long fast_disagree = 0, fast_cases = 0;
	for (auto& e : corpus) {
		const AbGroup& g = e.alg.group();
		long mismatches = 0, cases = 0;
		auto compare = [&](const GradedPoly& f) {
			CentralityVerdict a = test_multilinear(f, e.alg);
			CentralityVerdict b = test_generic(f, e.alg);
			++cases;
			if (a.is_identity != b.is_identity || a.is_central != b.is_central ||
			    a.is_proper_central != b.is_proper_central)
				++mismatches;
			if (auto fast = is_identity_multilinear_fast(f, e.alg)) {
				++fast_cases;
				if (*fast != a.is_identity) ++fast_disagree;
			}
		};
		std::vector<GroupElement> elems = all_elements(g);
		for (const GroupElement& a : elems) compare(mono_poly(g, {a}));
		for (const GroupElement& a : elems)
			for (const GroupElement& b : elems) {
				compare(mono_poly(g, {a, b}));
				compare(alt_poly(g, {a, b}));
			}
		for (const GroupElement& a : elems)
			for (const GroupElement& b : elems)
				for (const GroupElement& c : elems) {
					compare(mono_poly(g, {a, b, c}));
					GradedPoly x1 = GradedPoly::variable(g, 1, a);
					GradedPoly x2 = GradedPoly::variable(g, 2, b);
					GradedPoly x3 = GradedPoly::variable(g, 3, c);
					compare(x1 * gp_comm(x2, x3));
				}
		out.push_back(step("generic-vs-multilinear",
		                   {{"algebra", e.name}, {"cases", std::to_string(cases)}}, "0 mismatches",
		                   std::to_string(mismatches) + " mismatches", "tester-agreement"));
	}
	out.push_back(step("fast-identity-path", {{"cases", std::to_string(fast_cases)}}, "0 disagreements",
	                   std::to_string(fast_disagree) + " disagreements", "tester-agreement"));
	return out;
}

inline StepList oracle_part_grassmann() {
	StepList out;
	AbGroup z2{{2}};
	auto degs_of = [&](int d, unsigned mask) {
		std::vector<GroupElement> degs;
		for (int i = 0; i < d; ++i) degs.push_back(GroupElement(z2, {(mask >> i) & 1u ? 1L : 0L}));
		return degs;
	};
	for (int d = 1; d <= 3; ++d) {
		GradedAlgebra trunc = grassmann(2 * d);
		long mismatches = 0, cases = 0;
		for (unsigned mask = 0; mask < (1u << d); ++mask) {
			std::vector<GroupElement> degs = degs_of(d, mask);
			for (int which = 0; which < 2; ++which) {
				GradedPoly f = which ? alt_poly(z2, degs) : mono_poly(z2, degs);
				bool oracle = grassmann_multilinear_oracle(f);
				bool finite = test_multilinear(f, trunc).is_identity;
				std::optional<bool> fast = is_identity_multilinear_fast(f, trunc);
				++cases;
				if (oracle != finite || (fast && *fast != finite)) ++mismatches;
			}
		}
		out.push_back(step("grassmann-oracle",
		                   {{"degree", std::to_string(d)}, {"truncation", "E" + std::to_string(2 * d)},
		                    {"cases", std::to_string(cases)}},
		                   "0 mismatches", std::to_string(mismatches) + " mismatches",
		                   "infinite-vs-truncated"));
	}
	{
		GradedAlgebra e8 = grassmann(8);
		GroupElement ev = zero_element(z2), od(z2, {1});
		auto comm4 = [&](const GroupElement& d1, const GroupElement& d2, const GroupElement& d3,
		                 const GroupElement& d4) {
			GradedPoly x1 = GradedPoly::variable(z2, 1, d1), x2 = GradedPoly::variable(z2, 2, d2);
			GradedPoly x3 = GradedPoly::variable(z2, 3, d3), x4 = GradedPoly::variable(z2, 4, d4);
			return std::vector<GradedPoly>{gp_comm(x1, x2) * x3 * x4, gp_comm(x1, x2) * gp_comm(x3, x4)};
		};
		std::vector<GradedPoly> polys{mono_poly(z2, {od, od, od, od})};
		std::vector<GradedPoly> built = comm4(ev, od, od, od);
		polys.push_back(built[0]);
		built = comm4(od, od, od, od);
		polys.push_back(built[1]);
		long mismatches = 0;
		for (const GradedPoly& f : polys) {
			bool oracle = grassmann_multilinear_oracle(f);
			std::optional<bool> fast = is_identity_multilinear_fast(f, e8);
			if (!fast || *fast != oracle) ++mismatches;
		}
		out.push_back(step("grassmann-oracle",
		                   {{"degree", "4"}, {"truncation", "E8"}, {"cases", "3"}}, "0 mismatches",
		                   std::to_string(mismatches) + " mismatches", "infinite-vs-truncated"));
	}
	return out;
}

inline StepList oracle_part_minimality() {
	struct Entry {
		std::string name;
		Bicharacter beta;
	};
	std::vector<Entry> suite;
	auto add = [&](const std::string& name, const GradedAlgebra& a) {
		BicharExtraction ex = extract_bicharacter(a);
		if (ex.ok) suite.push_back({name, *ex.beta});
	};
	add("E2", grassmann(2));
	add("E4", grassmann(4));
	add("E6", grassmann(6));
	add("E8", grassmann(8));
	GradedAlgebra kz2 = twisted_group_algebra(AbGroup{{2}}, all_ones_cocycle(AbGroup{{2}}));
	add("KZ2", kz2);
	add("twisted-Z2xZ2", twisted_group_algebra(AbGroup{{2, 2}}, z2z2_standard_cocycle()));
	add("M2 clock/shift", pauli_grading(2));
	add("M3 clock/shift", pauli_grading(3));
	GradedAlgebra tens = tensor_componentwise(grassmann(6), kz2);
	BicharExtraction tex = extract_bicharacter(tens);
	if (tex.ok) {
		suite.push_back({"E6 (x) KZ2", *tex.beta});
		suite.push_back({"coarsened E6 (x) KZ2", minimal_coarsening(tens, *tex.beta).theta});
	}
	StepList out;
	for (auto& e : suite) {
		MinimalityResult m = minimality(e.beta);
		const Mat<CycScalar>& v = e.beta.values;
		size_t n = v.rows;
		bool by_det = !m.detMA.is_zero();
		bool by_cols = true;
		for (size_t i = 0; i < n && by_cols; ++i)
			for (size_t j = i + 1; j < n && by_cols; ++j) {
				bool same = true;
				for (size_t k = 0; k < n; ++k)
					if (!(v.at(k, i) == v.at(k, j))) same = false;
				if (same) by_cols = false;
			}
		std::vector<GroupElement> g0;
		for (size_t i = 0; i < n; ++i) {
			bool all_one = true;
			for (size_t j = 0; j < n; ++j)
				if (!(v.at(i, j) == cyc_one())) all_one = false;
			if (all_one) g0.push_back(element_at(e.beta.group, i));
		}
		bool by_g0 = g0.size() == 1;
		bool agree = by_det == by_cols && by_cols == by_g0 && by_det == m.minimal &&
		             g0 == m.G0.members;
		out.push_back(step("minimality-criteria",
		                   {{"bicharacter", e.name}, {"order", std::to_string(n)}}, "agree",
		                   agree ? "agree"
		                         : std::string("det=") + yn(by_det) + " columns=" + yn(by_cols) +
		                               " kernel=" + yn(by_g0),
		                   "three-equivalent-tests"));
	}
	out.push_back(step("suite-size", {}, "10", std::to_string(suite.size()), "three-equivalent-tests"));
	return out;
}

inline StepList oracle_part_determinant() {
	uint64_t state = 0xd37a11ULL;
	long rounds = 50, good = 0;
	for (long r = 0; r < rounds; ++r) {
		size_t n = (size_t)(r % 4) + 1;
		Mat<CycScalar> m(n, n);
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j) {
				CycScalar c(small_rational(state, 5));
				if ((i + j + (size_t)r) % 3 == 0) {
					state = mix64(state);
					c = c * CycScalar::zeta_pow(12, (long)(state % 12));
				}
				m.at(i, j) = c;
			}
		Mat<CommPoly> lifted(n, n);
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j) lifted.at(i, j) = CommPoly(m.at(i, j));
		if (det_cofactor(lifted) == CommPoly(det_exact(m))) ++good;
	}
	return {step("determinant-agreement", {{"rounds", "50"}, {"sizes", "1..4"}}, "50/50",
	             std::to_string(good) + "/" + std::to_string(rounds), "bareiss-vs-cofactor")};
}

inline ScenarioReport sc_oracle_suite(const ScenarioOptions& o) {
	std::vector<PartFn> parts{oracle_part_testers, oracle_part_grassmann, oracle_part_minimality,
	                          oracle_part_determinant};
	return run_parts("oracle-suite", std::move(parts), o.parallel);
}

inline ScenarioReport sc_crossed_product(const ScenarioOptions&) {
	auto part = []() -> StepList {
		StepList out;
		{
			AbGroup z2{{2}};
			CrossedPredicate p =
			    crossed_product_predicate(z2, {zero_element(z2), GroupElement(z2, {1})});
			std::map<std::string, std::string> in{{"group", "Z2"}, {"tuple", "(0, 1)"}};
			out.push_back(step("is-crossed", in, "yes", yn(p.is_crossed), "enumerating-tuple"));
			out.push_back(step("nontrivial-character", in, "yes", yn(p.has_char), "character-existence"));
			out.push_back(step("expected-primeness", in, "no", yn(p.expected_primeness),
			                   "character-obstruction"));
		}
		{
			AbGroup triv{{}};
			CrossedPredicate p = crossed_product_predicate(triv, {zero_element(triv)});
			std::map<std::string, std::string> in{{"group", "trivial"}, {"tuple", "(0)"}};
			out.push_back(step("is-crossed", in, "yes", yn(p.is_crossed), "enumerating-tuple"));
			out.push_back(step("nontrivial-character", in, "no", yn(p.has_char), "character-existence"));
			out.push_back(step("expected-primeness", in, "yes", yn(p.expected_primeness),
			                   "character-obstruction"));
		}
		{
			AbGroup z2{{2}};
			CrossedPredicate p =
			    crossed_product_predicate(z2, {zero_element(z2), zero_element(z2)});
			out.push_back(step("is-crossed", {{"group", "Z2"}, {"tuple", "(0, 0)"}}, "no",
			                   yn(p.is_crossed), "enumerating-tuple"));
		}
		return out;
	};
	return run_parts("crossed-product", {part}, false);
}

} // namespace detail

struct ScenarioDef {
	std::string id;
	std::string description;
	ScenarioReport (*run)(const ScenarioOptions&);
};

inline const std::vector<ScenarioDef>& scenario_registry() {
	static const std::vector<ScenarioDef> defs{
	    {"grassmann-regularity", "E6: supercommutation bicharacter, det -2, minimal",
	     detail::sc_grassmann_regularity},
	    {"pauli-m2", "M2 clock/shift grading: regular, minimal, primeness refuted", detail::sc_pauli_m2},
	    {"pauli-m3", "M3 clock/shift grading: regular, minimal, primeness refuted", detail::sc_pauli_m3},
	    {"coarsening-e6-kz2", "E6 (x) KZ2: nonminimal, coarsens to the Z2 sign grading",
	     detail::sc_coarsening},
	    {"m3-table", "M3 elementary (0,0,1): the six symbolic monomial product rows",
	     detail::sc_m3_table},
	    {"degree3-m3", "M3 elementary (0,0,1): no proper central multilinear polynomial of degree 3",
	     detail::sc_degree3},
	    {"formanek-p", "degree-7 central polynomial for M3: symbolic verification and witness",
	     detail::sc_formanek_p},
	    {"formanek-numeric", "the concrete evaluation P(diag(0,1,2), e13, e32, e21) = diag(4,4,-4)",
	     detail::sc_formanek_numeric},
	    {"conjugation", "diagonalization inside the identity component preserves the grading",
	     detail::sc_conjugation},
	    {"grassmann-e3", "E3: odd annihilator ideal, 7-dim quotient, x[y,z] witness",
	     detail::sc_grassmann_e3},
	    {"bn-e4", "unital span of odd generators in E4: identities and the central polynomial f",
	     detail::sc_bn_e4},
	    {"twisted-z2z2", "twisted Z2xZ2 group algebra tensored with M2: witness pipeline",
	     detail::sc_twisted},
	    {"oracle-suite", "cross-checks: testers, Grassmann oracle, minimality criteria, determinants",
	     detail::sc_oracle_suite},
	    {"crossed-product", "crossed-product predicate on Z2 and the trivial group",
	     detail::sc_crossed_product},
	};
	return defs;
}

inline ScenarioReport run_scenario(const std::string& id, const ScenarioOptions& opt = {}) {
	for (const ScenarioDef& d : scenario_registry())
		if (d.id == id) return d.run(opt);
	throw std::invalid_argument("unknown scenario: " + id);
}

} // namespace regalg
