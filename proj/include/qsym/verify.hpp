#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qsym {

/// Pass/fail tally for one identity family within a suite.
struct IdentityResult {
	std::string suite;
	std::string identity;
	long passed = 0;
	long failed = 0;
	std::string first_failure; ///< empty when every case passed

	bool ok() const noexcept { return failed == 0; }
};

struct Report {
	std::vector<IdentityResult> results;
	bool ok() const noexcept;
};

/// Bounds for a suite run; unset fields take the suite's own default.
struct SuiteOptions {
	std::optional<int> max_weight;
	std::optional<int> max_k;
	std::optional<int> truncation; ///< N for the two-alphabet suites
};

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs the named suite ("all" runs every suite in suite_names() order).
/// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& options = {});

/// `suite  identity  passed/total  PASS|FAIL` lines, plus the first failure if any.
void print_text(std::ostream& os, const Report& report);

/// One JSON object per line: {"suite", "case", "status", "passed", "failed"}.
void print_json(std::ostream& os, const Report& report);

} // namespace qsym
