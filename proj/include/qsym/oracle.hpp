#pragma once

#include "qsym/element.hpp"

#include <map>
#include <utility>
#include <ostream>
#include <string>
#include <vector>

namespace qsym {

/// Sparse polynomial in the ordered variables x1 < ... < xN with rational coefficients.
/// Monomials are dense exponent vectors of length N.
class Polynomial {
public:
	using Exponents = std::vector<int>;
	using Terms = std::map<Exponents, Rational>;

	/// Throws std::invalid_argument for N < 1.
	explicit Polynomial(int vars);

	static Polynomial constant(int vars, const Rational& r);

	int vars() const noexcept { return vars_; }
	const Terms& terms() const& noexcept { return terms_; }
	Terms terms() && noexcept { return std::move(terms_); }
	bool is_zero() const noexcept { return terms_.empty(); }
	Rational coefficient(const Exponents& e) const;

	void add_term(const Exponents& e, const Rational& r);

	Polynomial& operator+=(const Polynomial& other);
	Polynomial& operator-=(const Polynomial& other);
	Polynomial& operator*=(const Rational& r);

	/// Sets x_N = 0 and drops that variable.
	Polynomial drop_last_variable() const;

	bool operator==(const Polynomial& other) const;

private:
	void check_same(const Polynomial& other) const;

	int vars_;
	Terms terms_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& r, const Polynomial& p);

/// Aliases used by the verification suites.
inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline bool poly_equal(const Polynomial& p, const Polynomial& q) { return p == q; }

/// Truncation of `a` to N variables by direct summation over index chains:
/// strict chains for M, weak chains for Mt, and the mixed chain of F.
/// No change of basis is involved.
Polynomial expand(const Element& a, int vars);

/// Monomial-level products. For monomials u, v with lowest index m(.) and highest index M(.):
///   u .k. v = sum over M(u) <  i <= m(v) of u x_i^k v
///   u ^k^ v = sum over M(u) <= i <  m(v) of u x_i^k v
/// with the bound on the side of a constant monomial removed.
Polynomial poly_bullet(int k, const Polynomial& p, const Polynomial& q);
Polynomial poly_hat_bullet(int k, const Polynomial& p, const Polynomial& q);

/// Expansion of a .k. b (resp. a ^k^ b) straight from the defining index conditions.
Polynomial expand_bullet(int k, const Element& a, const Element& b, int vars);
Polynomial expand_hat_bullet(int k, const Element& a, const Element& b, int vars);

/// Decides a = b in QSym by comparing expansions in N = max(deg a, deg b, 1) variables.
/// {M_C : l(C) <= N} is linearly independent there, and every composition
/// involved has length <= weight <= N.
bool certify_equal(const Element& a, const Element& b);

/// Graded-lex text such as `x1^2*x2 + x2^2*x3`.
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace qsym
