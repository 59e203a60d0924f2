#include "doctest.h"
#include "qsym/sigma.hpp"

#include <stdexcept>

using namespace qsym;

namespace {
SymExpr p(int n) { return SymExpr::leaf(PartitionPolynomial::generator(n)); }
} // namespace

TEST_CASE("leaves and products")
{
	CHECK(render(sigma(p(3))) == "-phi_{t3}");
	CHECK(render(sigma(SymExpr::bullet(p(1), p(2)))) == "phi_{t1}*phi_{t2}");
	CHECK(render(sigma(SymExpr::leaf(PartitionPolynomial::generator(2) * PartitionPolynomial::generator(1)))) ==
	      "-phi_{t1,t2}");
	CHECK_THROWS_AS(sigma(SymExpr::leaf(PartitionPolynomial::constant(1))), std::domain_error);
}

TEST_CASE("multiplication by power sums differentiates")
{
	// p1 (p1 . p1) -> d/dt1 (phi_t1 phi_t1)
	const PdeExpr e = sigma(SymExpr::power_mul({1}, SymExpr::bullet(p(1), p(1))));
	CHECK(render(e) == "phi_{t1}*phi_{t1,t1} + phi_{t1,t1}*phi_{t1}");
}

TEST_CASE("the classical identity maps to the KP equation")
{
	const std::string kp = "4*phi_{t1,t3} - 3*phi_{t2,t2} - phi_{t1,t1,t1,t1} = "
	                       "-6*phi_{t1}*phi_{t2} + 6*phi_{t1}*phi_{t1,t1} + 6*phi_{t2}*phi_{t1} + 6*phi_{t1,t1}*phi_{t1}";
	const SymIdentity c = kp_classical_tree();
	CHECK(render_equation(sigma(c.lhs), sigma(c.rhs)) == kp);
	const SymIdentity t = kp_identity_tree(1, 2);
	CHECK(render_equation(sigma(t.lhs), sigma(t.rhs)) == kp);
	CHECK(evaluate(t.lhs) == evaluate(t.rhs));
}

TEST_CASE("trees evaluate to the identities they encode")
{
	for (int m = 1; m <= 3; ++m)
		for (int n = 1; n <= 3; ++n) {
			const SymIdentity t = kp_identity_tree(m, n);
			const IdentitySides s = kp_identity(m, n);
			CHECK(evaluate(t.lhs) == s.lhs);
			CHECK(evaluate(t.rhs) == s.rhs);
		}
}
