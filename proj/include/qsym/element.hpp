#pragma once

#include "qsym/composition.hpp"
#include "qsym/rational.hpp"

#include <map>
#include <utility>
#include <ostream>
#include <string>
#include <string_view>

namespace qsym {

/// Monomial M, weakly-increasing monomial Mt (M-tilde), fundamental F.
enum class Basis { M, Mt, F };

std::string_view basis_name(Basis b);

/// A quasi-symmetric function: finitely supported rational combination of
/// basis elements indexed by compositions. Zero coefficients are never stored.
class Element {
public:
	using Terms = std::map<Composition, Rational>;

	Element() = default;
	explicit Element(Basis basis) : basis_(basis) {}
	Element(Basis basis, Terms terms);

	/// Scalar multiple of the unit.
	static Element constant(const Rational& r);
	static Element one() { return constant(1); }

	Basis basis() const noexcept { return basis_; }
	const Terms& terms() const& noexcept { return terms_; }
	Terms terms() && noexcept { return std::move(terms_); }
	bool is_zero() const noexcept { return terms_.empty(); }

	/// Coefficient of the basis element indexed by c (zero if absent).
	Rational coefficient(const Composition& c) const;

	/// Maximal weight of a supported composition; 0 for zero and constants.
	int degree() const;

	/// Adds r * (basis element c), pruning zeros.
	void add_term(const Composition& c, const Rational& r);

	Element& operator+=(const Element& other);
	Element& operator-=(const Element& other);
	Element& operator*=(const Rational& r);

private:
	Basis basis_ = Basis::M;
	Terms terms_;
};

/// Single basis element with coefficient 1.
Element monomial(Basis basis, const Composition& c);

/// Same-basis operands combine directly; mixed-basis operands are normalized to M.
Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Rational& r, const Element& a);

/// Re-expresses `a` in `target`.
Element to_basis(const Element& a, Basis target);

/// Coefficient of 1 in the M expansion.
Rational counit(const Element& a);

/// Equality as quasi-symmetric functions (basis-independent).
bool operator==(const Element& a, const Element& b);

/// Linear map M_C -> M_reverse(C), evaluated in the M basis.
Element reverse_map(const Element& a);

/// Deterministic text like `3/2*M[2] + M[1,1]`; the constant term prints as a bare rational.
std::string to_string(const Element& a);
std::ostream& operator<<(std::ostream& os, const Element& a);

} // namespace qsym
