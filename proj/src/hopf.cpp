#include "qsym/hopf.hpp"

#include "qsym/products.hpp"

#include <sstream>
#include <stdexcept>

namespace qsym {

Rational Tensor::coefficient(const Composition& left, const Composition& right) const
{
	auto it = terms_.find({left, right});
	return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add_term(const Composition& left, const Composition& right, const Rational& r)
{
	if (r == 0)
		return;
	auto [it, inserted] = terms_.try_emplace({left, right}, r);
	if (!inserted) {
		it->second += r;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Tensor& Tensor::operator+=(const Tensor& other)
{
	for (const auto& [key, r] : other.terms_)
		add_term(key.first, key.second, r);
	return *this;
}

Tensor& Tensor::operator-=(const Tensor& other)
{
	for (const auto& [key, r] : other.terms_)
		add_term(key.first, key.second, -r);
	return *this;
}

Tensor& Tensor::operator*=(const Rational& r)
{
	if (r == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [key, coef] : terms_)
		coef *= r;
	return *this;
}

Tensor operator+(const Tensor& a, const Tensor& b)
{
	Tensor r = a;
	r += b;
	return r;
}

Tensor operator-(const Tensor& a, const Tensor& b)
{
	Tensor r = a;
	r -= b;
	return r;
}

Tensor pure_tensor(const Element& a, const Element& b)
{
	const Element am = to_basis(a, Basis::M);
	const Element bm = to_basis(b, Basis::M);
	Tensor t;
	for (const auto& [ca, ra] : am.terms())
		for (const auto& [cb, rb] : bm.terms())
			t.add_term(ca, cb, ra * rb);
	return t;
}

Tensor coproduct(const Element& a)
{
	Tensor t;
	for (const auto& [c, r] : to_basis(a, Basis::M).terms())
		for (std::size_t cut = 0; cut <= c.length(); ++cut)
			t.add_term(c.slice(0, cut), c.slice(cut, c.length() - cut), r);
	return t;
}

Tensor tensor_bullet_right(const Tensor& t, int k, const Element& c)
{
	Tensor out;
	for (const auto& [key, r] : t.terms()) {
		const Element right = bullet(k, monomial(Basis::M, key.second), c);
		for (const auto& [cb, rb] : to_basis(right, Basis::M).terms())
			out.add_term(key.first, cb, r * rb);
	}
	return out;
}

Tensor tensor_bullet_left(const Element& c, int k, const Tensor& t)
{
	Tensor out;
	for (const auto& [key, r] : t.terms()) {
		const Element left = bullet(k, c, monomial(Basis::M, key.first));
		for (const auto& [ca, ra] : to_basis(left, Basis::M).terms())
			out.add_term(ca, key.second, r * ra);
	}
	return out;
}

Tensor tensor_mul(const Tensor& s, const Tensor& t)
{
	Tensor out;
	for (const auto& [ks, rs] : s.terms()) {
		for (const auto& [kt, rt] : t.terms()) {
			const Element left = mul(monomial(Basis::M, ks.first), monomial(Basis::M, kt.first));
			const Element right = mul(monomial(Basis::M, ks.second), monomial(Basis::M, kt.second));
			for (const auto& [ca, ra] : left.terms())
				for (const auto& [cb, rb] : right.terms())
					out.add_term(ca, cb, rs * rt * ra * rb);
		}
	}
	return out;
}

Element m_k(int k, const Tensor& t)
{
	Element out(Basis::M);
	for (const auto& [key, r] : t.terms())
		out += r * bullet(k, monomial(Basis::M, key.first), monomial(Basis::M, key.second));
	return out;
}

Element multiply_legs(const Tensor& t)
{
	Element out(Basis::M);
	for (const auto& [key, r] : t.terms())
		out += r * mul(monomial(Basis::M, key.first), monomial(Basis::M, key.second));
	return out;
}

Element multiply_legs(const Tensor& t, const std::function<Element(const Element&)>& f,
                      const std::function<Element(const Element&)>& g)
{
	Element out(Basis::M);
	for (const auto& [key, r] : t.terms())
		out += r * mul(f(monomial(Basis::M, key.first)), g(monomial(Basis::M, key.second)));
	return out;
}

Element counit_left(const Tensor& t)
{
	Element out(Basis::M);
	for (const auto& [key, r] : t.terms())
		if (key.first.empty())
			out.add_term(key.second, r);
	return out;
}

Element counit_right(const Tensor& t)
{
	Element out(Basis::M);
	for (const auto& [key, r] : t.terms())
		if (key.second.empty())
			out.add_term(key.first, r);
	return out;
}

Element antipode(const Element& a)
{
	Element tilde(Basis::Mt);
	for (const auto& [c, r] : to_basis(a, Basis::M).terms())
		tilde.add_term(reverse(c), c.length() % 2 == 0 ? r : Rational(-r));
	return to_basis(tilde, Basis::M);
}

Element antipode_F(const Composition& c)
{
	if (c.empty())
		throw std::invalid_argument("antipode_F: empty composition");
	Element out(Basis::F);
	out.add_term(omega(c), c.weight() % 2 == 0 ? 1 : -1);
	return out;
}

Element derivation_delta(int n, const Element& a)
{
	if (n < 1)
		throw std::invalid_argument("derivation_delta: index must be >= 1");
	return mul(monomial(Basis::M, Composition{n}), a);
}

std::string to_string(const Tensor& t)
{
	std::ostringstream os;
	os << t;
	return os.str();
}

std::ostream& operator<<(std::ostream& os, const Tensor& t)
{
	if (t.is_zero())
		return os << "0\n";
	for (const auto& [key, r] : t.terms()) {
		if (r != 1)
			os << r.get_str() << "*";
		os << "M" << key.first << " (x) M" << key.second << '\n';
	}
	return os;
}

} // namespace qsym
