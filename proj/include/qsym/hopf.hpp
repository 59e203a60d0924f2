#pragma once

#include "qsym/element.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace qsym {

/// Element of QSym (x) QSym with both legs in the M basis.
class Tensor {
public:
	using Key = std::pair<Composition, Composition>;
	using Terms = std::map<Key, Rational>;

	Tensor() = default;

	const Terms& terms() const& noexcept { return terms_; }
	Terms terms() && noexcept { return std::move(terms_); }
	bool is_zero() const noexcept { return terms_.empty(); }
	Rational coefficient(const Composition& left, const Composition& right) const;

	void add_term(const Composition& left, const Composition& right, const Rational& r);

	Tensor& operator+=(const Tensor& other);
	Tensor& operator-=(const Tensor& other);
	Tensor& operator*=(const Rational& r);

	bool operator==(const Tensor& other) const = default;

private:
	Terms terms_;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);

/// a (x) b, legs expanded in M.
Tensor pure_tensor(const Element& a, const Element& b);

/// Deconcatenation: Delta(M_C) = sum over AB = C of M_A (x) M_B.
Tensor coproduct(const Element& a);

/// (a (x) b) .k. c = a (x) (b .k. c)
Tensor tensor_bullet_right(const Tensor& t, int k, const Element& c);
/// c .k. (a (x) b) = (c .k. a) (x) b
Tensor tensor_bullet_left(const Element& c, int k, const Tensor& t);

/// Leg-wise ordinary product (a (x) b)(c (x) d) = ac (x) bd.
Tensor tensor_mul(const Tensor& s, const Tensor& t);

/// m_k(a (x) b) = a .k. b, extended linearly.
Element m_k(int k, const Tensor& t);

/// mu(a (x) b) = ab.
Element multiply_legs(const Tensor& t);

/// Applies f to the left leg, g to the right leg, and multiplies the results.
Element multiply_legs(const Tensor& t, const std::function<Element(const Element&)>& f,
                      const std::function<Element(const Element&)>& g);

/// (eps (x) id) and (id (x) eps).
Element counit_left(const Tensor& t);
Element counit_right(const Tensor& t);

/// S(M_C) = (-1)^l(C) Mt_reverse(C). Result in the M basis.
Element antipode(const Element& a);

/// S(F_C) = (-1)^|C| F_omega(C), in the F basis. Throws on the empty composition.
Element antipode_F(const Composition& c);

/// delta_n(a) = p_n a = m_n(Delta(a)). Throws for n < 1.
Element derivation_delta(int n, const Element& a);

/// One `M[A] (x) M[B]` line per term, with a leading coefficient when it is not 1.
std::string to_string(const Tensor& t);
std::ostream& operator<<(std::ostream& os, const Tensor& t);

} // namespace qsym
