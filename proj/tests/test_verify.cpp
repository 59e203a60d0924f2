#include "doctest.h"
#include "qsym/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace qsym;

TEST_CASE("suite names")
{
	const auto& names = suite_names();
	REQUIRE_FALSE(names.empty());
	CHECK(names.back() == "all");
	for (const char* required : {"shuffle-oracle", "bullet-oracle", "weak-nonassoc", "lemma-iter", "delta-derivation",
	                             "distributivity", "antipode", "antipode-F", "kp", "kp-classical", "qss-kp", "qss-cancel",
	                             "qss-closure"})
		CHECK(std::find(names.begin(), names.end(), required) != names.end());
	CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("kp with bound 3 checks nine identities")
{
	SuiteOptions o;
	o.max_weight = 3;
	const Report r = run_suite("kp", o);
	REQUIRE_FALSE(r.results.empty());
	CHECK(r.results.front().passed == 9);
	CHECK(r.ok());
}

TEST_CASE("every suite passes at its default bounds")
{
	for (const auto& name : suite_names()) {
		if (name == "all")
			continue;
		CAPTURE(name);
		const Report r = run_suite(name);
		CHECK_FALSE(r.results.empty());
		for (const auto& res : r.results) {
			CAPTURE(res.identity);
			CHECK(res.ok());
			CHECK(res.passed > 0);
		}
	}
}

TEST_CASE("reports are deterministic")
{
	std::ostringstream a, b, ja, jb;
	const Report r1 = run_suite("all"), r2 = run_suite("all");
	print_text(a, r1);
	print_text(b, r2);
	print_json(ja, r1);
	print_json(jb, r2);
	CHECK(a.str() == b.str());
	CHECK(ja.str() == jb.str());
	CHECK(ja.str().find("\"status\":\"pass\"") != std::string::npos);
}
