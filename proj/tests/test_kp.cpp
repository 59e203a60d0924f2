#include "doctest.h"
#include "qsym/kp.hpp"
#include "qsym/oracle.hpp"
#include "qsym/products.hpp"

#include <stdexcept>

using namespace qsym;

namespace {
Element M(const Composition& c) { return monomial(Basis::M, c); }
Element h(int n) { return complete_h(n); }
Element dot(const Element& a, const Element& b) { return bullet(1, a, b); }
} // namespace

TEST_CASE("partitions")
{
	CHECK(is_partition({3, 1, 1}));
	CHECK_FALSE(is_partition({1, 2}));
	CHECK(partition_union({3, 1}, {2, 2}) == Composition{3, 2, 2, 1});
	PartitionPolynomial p;
	CHECK_THROWS_AS(p.add_term({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("power sums")
{
	CHECK(power_sum(1) == M({1}));
	CHECK(power_sum(3) == M({3}));
	CHECK_THROWS_AS(power_sum(0), std::invalid_argument);
}

TEST_CASE("complete homogeneous")
{
	CHECK(h(0) == Element::one());
	CHECK(h(1) == M({1}));
	CHECK(h(2) == M({1, 1}) + M({2}));
	CHECK(h(2) == Rational(1, 2) * (mul(power_sum(1), power_sum(1)) + power_sum(2)));
	CHECK(h(2) == to_basis(monomial(Basis::Mt, {1, 1}), Basis::M));
	for (int n = 0; n <= 6; ++n) {
		Element sum(Basis::M);
		for (const auto& c : compositions_of(n))
			sum.add_term(c, 1);
		CHECK(h(n) == sum);
	}
}

TEST_CASE("elementary Schur polynomials")
{
	const PartitionPolynomial s0 = elementary_schur(0);
	CHECK(s0 == PartitionPolynomial::constant(1));
	const PartitionPolynomial s2 = elementary_schur(2);
	CHECK(s2.coefficient({2}) == 1);
	CHECK(s2.coefficient({1, 1}) == Rational(1, 2));
	CHECK(s2.terms().size() == 2);
	CHECK(to_string(s2, "t") == "t[2] + 1/2*t[1,1]");
	// 3 s3 = t1 s2 + 2 t2 s1 + 3 t3 s0
	const auto t = [](int k) { return PartitionPolynomial::generator(k); };
	CHECK(Rational(3) * elementary_schur(3) ==
	      t(1) * s2 + Rational(2) * t(2) * elementary_schur(1) + Rational(3) * t(3) * s0);
	for (int n = 0; n <= 6; ++n)
		CHECK(evaluate_power_sums(complete_h_power_sums(n)) == h(n));
}

TEST_CASE("KP identities")
{
	const IdentitySides s11 = kp_identity(1, 1);
	CHECK(s11.lhs.is_zero());
	CHECK(s11.rhs.is_zero());

	const IdentitySides s12 = kp_identity(1, 2);
	CHECK(s12.lhs == mul(h(1), h(3)) - mul(h(2), h(2)));
	CHECK(s12.rhs == dot(h(1), h(2)) - dot(h(1), mul(h(1), h(1))) - dot(h(2), h(1)));
	CHECK(s12.holds());

	const IdentitySides s23 = kp_identity(2, 3);
	CHECK(s23.holds());
	CHECK(expand(s23.lhs, 7) == expand(s23.rhs, 7));

	CHECK_THROWS_AS(kp_identity(0, 1), std::invalid_argument);
}

TEST_CASE("classical KP identity")
{
	const Element p1 = power_sum(1), p2 = power_sum(2), p3 = power_sum(3);
	const Element lhs = Rational(4) * mul(p1, p3) - Rational(3) * mul(p2, p2) - mul(mul(p1, p1), mul(p1, p1));
	const Element rhs = Rational(-6) * mul(p1, dot(p1, p1)) + Rational(6) * (dot(p1, p2) - dot(p2, p1));
	CHECK(lhs == rhs);
	const IdentitySides s = kp_classical_identity();
	CHECK(s.lhs == lhs);
	CHECK(s.holds());
	CHECK(expand(s.lhs, 4) == expand(s.rhs, 4));
	// other coefficients break it
	CHECK_FALSE(lhs == Rational(-6) * mul(p1, dot(p1, p1)) + Rational(5) * (dot(p1, p2) - dot(p2, p1)));
}
