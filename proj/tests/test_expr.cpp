#include "doctest.h"
#include "qsym/expr.hpp"
#include "qsym/kp.hpp"
#include "qsym/products.hpp"

using namespace qsym;

namespace {
Element M(const Composition& c) { return monomial(Basis::M, c); }
Element ev(const std::string& s) { return eval(parse(s)); }

std::size_t error_column(const std::string& s)
{
	try {
		parse(s);
	} catch (const ParseError& e) {
		return e.column();
	}
	return 0;
}
} // namespace

TEST_CASE("trees")
{
	const Expr e = parse("M[2] .1. M[3]");
	CHECK(e.kind == Expr::Kind::Bullet);
	CHECK(e.index == 1);
	REQUIRE(e.children.size() == 2);
	CHECK(e.children[0].composition == Composition{2});
	CHECK(e.children[1].composition == Composition{3});

	const Expr n = parse("(1 .1. 1) .1. 1");
	CHECK(n.kind == Expr::Kind::Bullet);
	CHECK(n.children[0].kind == Expr::Kind::Group);
	CHECK(n.children[0].children[0].kind == Expr::Kind::Bullet);
	CHECK(to_string(n) == "((1 .1. 1) .1. 1)");
}

TEST_CASE("mixed chains need parentheses")
{
	CHECK_THROWS_AS(parse("p1 * p1 .1. p1"), ParseError);
	CHECK_THROWS_WITH_AS(parse("p1 .1. p1 * p1"), doctest::Contains("nonassociative"), ParseError);
	CHECK_NOTHROW(parse("p1 * (p1 .1. p1)"));
	CHECK_NOTHROW(parse("(p1 * p1) .1. p1"));
	CHECK_NOTHROW(parse("p1 .1. p1 ^2^ p1"));
}

TEST_CASE("errors carry a column")
{
	CHECK(error_column("M[2") == 4);
	CHECK(error_column("p1 * p1 .1. p1") == 9);
	CHECK(error_column("1 .0. 1") == 3);
	CHECK(error_column("M[0]") == 3);
	CHECK(error_column("p0") == 2);
	CHECK(error_column("1 + ") == 5);
	CHECK(error_column("(1") == 3);
	CHECK(error_column("1 2") == 3);
	CHECK(error_column("1/0") > 0);
}

TEST_CASE("evaluation")
{
	CHECK(to_string(ev("p1 * p1")) == "M[2] + 2*M[1,1]");
	CHECK(ev("p1 * p1") == Rational(2) * M({1, 1}) + M({2}));
	CHECK(to_string(ev("h2")) == "M[2] + M[1,1]");
	CHECK(to_string(ev("1 .2. 1")) == "M[2]");
	CHECK(ev("M[2] .1. M[3]") == M({2, 1, 3}) + M({2, 4}));
	CHECK(ev("1 ^2^ M[3]") == M({2, 3}));
	CHECK(ev("F[3,1]") == monomial(Basis::F, {3, 1}));
	CHECK(ev("Mt[1,1] - M[2]") == M({1, 1}));
	CHECK(ev("-1/2 + 3 * 1/3") == Element::constant(Rational(1, 2)));
	CHECK(ev(" h3 ") == complete_h(3));
	CHECK(ev("M[]").terms() == Element::one().terms());
	CHECK(ev("(1 .1. 1) .1. 1") == M({1, 1}));
	CHECK(ev("1 .1. (1 .1. 1)") == M({1, 1}) + M({2}));
	CHECK(ev("p1*p1-p2") == Rational(2) * M({1, 1}));
}

TEST_CASE("whitespace insensitive")
{
	CHECK(ev("M[2,1].1.M[3]") == ev("  M[ 2 , 1 ]  .1.  M[3] "));
}
