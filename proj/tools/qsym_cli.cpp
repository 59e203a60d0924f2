// qsym: command-line front end for the quasi-symmetric function library.

#include "qsym/expr.hpp"
#include "qsym/hopf.hpp"
#include "qsym/kp.hpp"
#include "qsym/oracle.hpp"
#include "qsym/sigma.hpp"
#include "qsym/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace qsym;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string join(const std::vector<std::string>& words)
{
	std::string out;
	for (const auto& w : words) {
		if (!out.empty())
			out += ' ';
		out += w;
	}
	return out;
}

Element parse_and_eval(const std::vector<std::string>& words)
{
	return eval(parse(join(words)));
}

json terms_json(const Element& e)
{
	json terms = json::array();
	for (const auto& [c, r] : e.terms())
		terms.push_back({{"composition", c.parts()}, {"coefficient", r.get_str()}});
	return {{"basis", std::string(basis_name(e.basis()))}, {"terms", terms}, {"text", to_string(e)}};
}

void print_element(const Element& e, bool as_json)
{
	if (as_json)
		std::cout << terms_json(e).dump() << '\n';
	else
		std::cout << e << '\n';
}

int print_report(const Report& report, bool as_json)
{
	if (as_json)
		print_json(std::cout, report);
	else
		print_text(std::cout, report);
	return report.ok() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact arithmetic for quasi-symmetric functions and the products .k."};
	app.require_subcommand(1);
	bool as_json = false;
	app.add_flag("--json", as_json, "Machine-readable output, one JSON object per line");

	std::vector<std::string> expr_words;
	auto add_expr = [&](CLI::App* cmd) {
		cmd->add_option("expr", expr_words, "Expression, e.g. 'M[2] .1. M[3]'")->required()->expected(1, -1);
	};

	auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression in the M basis");
	add_expr(eval_cmd);

	int vars = 0;
	auto* expand_cmd = app.add_subcommand("expand", "Expand in x1..xN by direct summation");
	expand_cmd->add_option("--vars", vars, "Number of variables N")->required()->check(CLI::PositiveNumber);
	add_expr(expand_cmd);

	std::string target;
	auto* convert_cmd = app.add_subcommand("convert", "Rewrite in another basis");
	convert_cmd->add_option("--to", target, "Target basis")->required()->check(CLI::IsMember({"M", "Mt", "F"}));
	add_expr(convert_cmd);

	auto* coproduct_cmd = app.add_subcommand("coproduct", "Deconcatenation coproduct");
	add_expr(coproduct_cmd);

	auto* antipode_cmd = app.add_subcommand("antipode", "Antipode, printed in the M basis");
	add_expr(antipode_cmd);

	int kp_m = 1, kp_n = 1;
	bool kp_pde = false;
	std::optional<int> kp_certify;
	auto* kp_cmd = app.add_subcommand("kp", "The (m,n) identity of the KP family");
	kp_cmd->add_option("--m", kp_m)->required()->check(CLI::PositiveNumber);
	kp_cmd->add_option("--n", kp_n)->required()->check(CLI::PositiveNumber);
	kp_cmd->add_flag("--pde", kp_pde, "Print the corresponding hierarchy equation");
	kp_cmd->add_option("--certify", kp_certify, "Also compare expansions in N variables")->check(CLI::PositiveNumber);

	int qss_n = 3;
	std::string qss_suite;
	auto* qss_cmd = app.add_subcommand("qss-verify", "Two-alphabet checks");
	qss_cmd->add_option("--N", qss_n, "Truncation")->required()->check(CLI::PositiveNumber);
	qss_cmd->add_option("--suite", qss_suite, "Default: all three")->check(CLI::IsMember({"kp", "cancel", "closure"}));

	std::string suite;
	std::optional<int> max_weight, max_k, truncation;
	auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
	verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
	verify_cmd->add_option("--max-weight,--max", max_weight, "Weight bound")->check(CLI::PositiveNumber);
	verify_cmd->add_option("--max-k", max_k, "Product index bound")->check(CLI::PositiveNumber);
	verify_cmd->add_option("--N", truncation, "Truncation for the two-alphabet suites")->check(CLI::PositiveNumber);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if (*eval_cmd) {
			print_element(parse_and_eval(expr_words), as_json);
		} else if (*expand_cmd) {
			const Polynomial p = expand(parse_and_eval(expr_words), vars);
			if (as_json)
				std::cout << json{{"vars", vars}, {"text", to_string(p)}}.dump() << '\n';
			else
				std::cout << p << '\n';
		} else if (*convert_cmd) {
			const Basis b = target == "M" ? Basis::M : target == "Mt" ? Basis::Mt : Basis::F;
			print_element(to_basis(parse_and_eval(expr_words), b), as_json);
		} else if (*coproduct_cmd) {
			const Tensor t = coproduct(parse_and_eval(expr_words));
			if (as_json) {
				for (const auto& [key, r] : t.terms())
					std::cout << json{{"left", key.first.parts()}, {"right", key.second.parts()}, {"coefficient", r.get_str()}}.dump()
					          << '\n';
			} else {
				std::cout << t;
			}
		} else if (*antipode_cmd) {
			print_element(antipode(parse_and_eval(expr_words)), as_json);
		} else if (*kp_cmd) {
			const IdentitySides s = kp_identity(kp_m, kp_n);
			bool ok = s.holds();
			std::optional<bool> certified;
			if (kp_certify) {
				certified = expand(s.lhs, *kp_certify) == expand(s.rhs, *kp_certify);
				ok = ok && *certified;
			}
			std::optional<std::string> pde;
			if (kp_pde) {
				const SymIdentity tree = kp_identity_tree(kp_m, kp_n);
				pde = render_equation(sigma(tree.lhs), sigma(tree.rhs));
			}
			if (as_json) {
				json j{{"suite", "kp"},
				       {"case", "m=" + std::to_string(kp_m) + " n=" + std::to_string(kp_n)},
				       {"status", ok ? "pass" : "fail"},
				       {"lhs", to_string(s.lhs)},
				       {"rhs", to_string(s.rhs)}};
				if (certified)
					j["certified_vars"] = *kp_certify;
				if (pde)
					j["pde"] = *pde;
				std::cout << j.dump() << '\n';
			} else {
				std::cout << "lhs: " << s.lhs << '\n' << "rhs: " << s.rhs << '\n';
				if (certified)
					std::cout << "expansion in " << *kp_certify << " variables: " << (*certified ? "equal" : "DIFFERENT") << '\n';
				if (pde)
					std::cout << *pde << '\n';
				std::cout << (ok ? "identity holds" : "identity FAILS") << '\n';
			}
			return ok ? exit_ok : exit_failed;
		} else if (*qss_cmd) {
			SuiteOptions opts;
			opts.truncation = qss_n;
			Report all;
			for (const char* name : {"kp", "cancel", "closure"}) {
				if (!qss_suite.empty() && qss_suite != name)
					continue;
				Report r = run_suite(std::string("qss-") + name, opts);
				all.results.insert(all.results.end(), r.results.begin(), r.results.end());
			}
			return print_report(all, as_json);
		} else if (*verify_cmd) {
			return print_report(run_suite(suite, SuiteOptions{max_weight, max_k, truncation}), as_json);
		}
	} catch (const ParseError& e) {
		std::cerr << "qsym: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::invalid_argument& e) {
		std::cerr << "qsym: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::domain_error& e) {
		std::cerr << "qsym: " << e.what() << '\n';
		return exit_usage;
	}
	return exit_ok;
}
