#include "doctest.h"
#include "qsym/oracle.hpp"
#include "qsym/products.hpp"

#include <stdexcept>

using namespace qsym;

namespace {
Element M(const Composition& c) { return monomial(Basis::M, c); }
Element F(const Composition& c) { return monomial(Basis::F, c); }
const Element one = Element::one();

Polynomial mono(std::vector<int> e, Rational r = 1)
{
	Polynomial p(static_cast<int>(e.size()));
	p.add_term(e, r);
	return p;
}
} // namespace

TEST_CASE("expansions")
{
	CHECK(expand(M({2}), 2) == mono({2, 0}) + mono({0, 2}));
	CHECK(expand(M({1, 1}), 3) == mono({1, 1, 0}) + mono({1, 0, 1}) + mono({0, 1, 1}));
	CHECK(expand(F({2}), 2) == mono({2, 0}) + mono({1, 1}) + mono({0, 2}));
	CHECK(expand(M({1, 1, 1, 1}), 3).is_zero());
	CHECK(expand(one, 2) == Polynomial::constant(2, 1));
	CHECK_THROWS_AS(Polynomial(0), std::invalid_argument);
}

TEST_CASE("direct summation of products")
{
	CHECK(expand_bullet(1, one, one, 3) == mono({1, 0, 0}) + mono({0, 1, 0}) + mono({0, 0, 1}));
	CHECK(expand_bullet(1, M({1}), M({1}), 3) ==
	      mono({1, 2, 0}) + mono({1, 1, 1}) + mono({1, 0, 2}) + mono({0, 1, 2}));
	CHECK(expand_bullet(1, M({2}), one, 2) == mono({2, 1}));
	CHECK(expand(bullet(1, M({1}), M({1})), 3) == expand_bullet(1, M({1}), M({1}), 3));
}

TEST_CASE("polynomial arithmetic")
{
	const Polynomial p = expand(M({2, 1}), 3);
	CHECK((p - p).is_zero());
	CHECK(p + p == Rational(2) * p);
	CHECK(expand(M({1}), 2) * expand(M({1}), 2) == mono({2, 0}) + mono({0, 2}) + mono({1, 1}, 2));
	CHECK_THROWS(p + expand(M({2, 1}), 4));
	CHECK(expand(M({2, 1}), 4).drop_last_variable() == p);
}

TEST_CASE("certified equality")
{
	CHECK(certify_equal(M({2, 1}), M({2, 1})));
	CHECK(certify_equal(mul(M({1}), M({1})), Rational(2) * M({1, 1}) + M({2})));
	CHECK_FALSE(certify_equal(M({1, 2}), M({2, 1})));
}

TEST_CASE("graded-lex printing")
{
	CHECK(to_string(expand(M({2, 1}), 3)) == "x1^2*x2 + x1^2*x3 + x2^2*x3");
	CHECK(to_string(expand(Element::constant(3) + M({1}), 2)) == "3 + x1 + x2");
	CHECK(to_string(Polynomial(2)) == "0");
	CHECK(to_string(Rational(-1, 2) * mono({1, 1})) == "-1/2*x1*x2");
}
