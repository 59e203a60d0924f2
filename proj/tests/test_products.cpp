#include "doctest.h"
#include "qsym/oracle.hpp"
#include "qsym/products.hpp"

#include <stdexcept>

using namespace qsym;

namespace {
Element M(const Composition& c) { return monomial(Basis::M, c); }
Element Mt(const Composition& c) { return monomial(Basis::Mt, c); }
Element F(const Composition& c) { return monomial(Basis::F, c); }
const Element one = Element::one();
} // namespace

TEST_CASE("quasi-shuffle product")
{
	for (int m = 1; m <= 3; ++m)
		for (int n = 1; n <= 3; ++n)
			CHECK(mul(M({m}), M({n})) == M({m, n}) + M({m + n}) + M({n, m}));
	const Element e = mul(M({1}), M({2, 1}));
	CHECK(e == M({1, 2, 1}) + M({3, 1}) + Rational(2) * M({2, 1, 1}) + M({2, 2}));
	CHECK(expand(e, 6) == expand(M({1}), 6) * expand(M({2, 1}), 6));
	CHECK(mul(one, M({2, 3})) == M({2, 3}));
	CHECK(mul(M({1}), M({1})) == Rational(2) * M({1, 1}) + M({2}));
}

TEST_CASE("first products of monomials")
{
	CHECK(bullet(1, one, one) == M({1}));
	CHECK(bullet(1, M({2}), M({3})) == M({2, 1, 3}) + M({2, 4}));
	CHECK(bullet(3, M({2}), one) == M({2, 3}));
	for (int k = 1; k <= 4; ++k)
		CHECK(bullet(k, one, one) == M({k}));
	CHECK_THROWS_AS(bullet(0, one, one), std::invalid_argument);
}

TEST_CASE("mirror products")
{
	CHECK(hat_bullet(2, one, M({3})) == M({2, 3}));
	CHECK(hat_bullet(2, M({3}), one) == M({3, 2}) + M({5}));
	CHECK(hat_bullet(1, one, one) == M({1}));
	CHECK(expand(hat_bullet(2, one, M({3})), 5) == expand_hat_bullet(2, one, M({3}), 5));
	CHECK(expand(hat_bullet(2, M({3}), one), 5) == expand_hat_bullet(2, M({3}), one, 5));
}

TEST_CASE("weakly increasing basis closed form")
{
	const Element r = bullet(1, Mt({2}), Mt({3}));
	CHECK(r.basis() == Basis::Mt);
	CHECK(r.terms() == (Mt({2, 1, 3}) - Mt({3, 3})).terms());
	CHECK(bullet(2, one, Mt({1})) == Mt({2, 1}));
	CHECK(bullet_tilde(1, {2}, {3}) == Mt({2, 1, 3}) - Mt({3, 3}));
	CHECK_THROWS(bullet_tilde(2, {}, {1}));
	CHECK(r == bullet(1, to_basis(Mt({2}), Basis::M), to_basis(Mt({3}), Basis::M)));
}

TEST_CASE("fundamental basis first product")
{
	CHECK(bullet(1, F({2}), F({1, 1})).terms() == F({2, 2, 1}).terms());
	CHECK(bullet(1, F({}), F({1})) == F({2}));
	CHECK(bullet(1, one, M({1})) == M({1, 1}) + M({2}));
	CHECK(bullet(1, F({1}), F({1})) == F({1, 2}));
	CHECK(expand(bullet(1, M({1}), M({1})), 4) == expand(F({1, 2}), 4));
	CHECK(bullet_F({2, 1}, {}) == F({2, 1, 1}));
	CHECK(expand(F({2, 1, 1}), 5) == expand_bullet(1, F({2, 1}), one, 5));
}

TEST_CASE("elementary F elements")
{
	CHECK(elementary_F(0, 0) == M({1}));
	CHECK(elementary_F(0, 0) == F({1}));
	CHECK(elementary_F(1, 0) == bullet(1, one, bullet(1, one, one)));
	CHECK(elementary_F(1, 0) == F({2}));
	CHECK(elementary_F(0, 1) == M({1, 1}));
	CHECK(elementary_F(0, 1) == F({1, 1}));
	for (int m = 0; m <= 3; ++m)
		for (int n = 0; n <= 3; ++n)
			CHECK(elementary_F(m, n) == F(concat({m + 1}, ones(n))));
}

TEST_CASE("F factorization")
{
	auto f = factorize_F({3, 1});
	REQUIRE(f.size() == 1);
	CHECK(f[0] == F({3, 1}));
	f = factorize_F({2, 1, 3, 1, 1});
	REQUIRE(f.size() == 2);
	CHECK(f[0] == F({2, 1}));
	CHECK(f[1] == F({2, 1, 1}));
	const auto product = [](const Element& a, const Element& b) {
		return expand(bullet(1, to_basis(a, Basis::M), to_basis(b, Basis::M)), 9);
	};
	CHECK(product(f[0], f[1]) == expand(F({2, 1, 3, 1, 1}), 9));
	// keeping the later block's leading part as it stands overshoots by one
	CHECK(product(F({2, 1}), F({3, 1, 1})) == expand(F({2, 1, 4, 1, 1}), 9));
	f = factorize_F({1});
	REQUIRE(f.size() == 1);
	CHECK(f[0] == F({1}));
	CHECK_THROWS(factorize_F({}));
}

TEST_CASE("higher products from the first product")
{
	for (int k = 1; k <= 4; ++k)
		for (const auto& a : enumerate_compositions(3))
			for (const auto& b : enumerate_compositions(3))
				CHECK(bullet_by_first_product(k, M(a), M(b)) == bullet(k, M(a), M(b)));
}

TEST_CASE("products against the monomial-level oracle")
{
	for (int k = 1; k <= 2; ++k)
		for (const auto& a : enumerate_compositions(3))
			for (const auto& b : enumerate_compositions(3)) {
				CHECK(expand(bullet(k, M(a), M(b)), 7) == expand_bullet(k, M(a), M(b), 7));
				CHECK(expand(hat_bullet(k, M(a), M(b)), 7) == expand_hat_bullet(k, M(a), M(b), 7));
			}
}

TEST_CASE("the products are not associative")
{
	CHECK_FALSE(bullet(1, bullet(1, one, one), one) == bullet(1, one, bullet(1, one, one)));
	CHECK_FALSE(bullet(1, M({1}), M({1})) == bullet(1, M({1}), M({1})) + M({3}));
}
