#include "qsym/products.hpp"

#include <stdexcept>
#include <string>

namespace qsym {

namespace {

void check_order(int k, const char* who)
{
	if (k < 1)
		throw std::invalid_argument(std::string(who) + ": product index must be >= 1, got " + std::to_string(k));
}

// All quasi-shuffles of a[i..] and b[j..] appended to `prefix`, accumulated with multiplicity.
void quasi_shuffle(const Composition& a, std::size_t i, const Composition& b, std::size_t j,
                   std::vector<int>& prefix, const Rational& coef, Element& out)
{
	if (i == a.length() || j == b.length()) {
		std::vector<int> parts = prefix;
		parts.insert(parts.end(), a.begin() + i, a.end());
		parts.insert(parts.end(), b.begin() + j, b.end());
		out.add_term(Composition(std::move(parts)), coef);
		return;
	}
	prefix.push_back(a[i]);
	quasi_shuffle(a, i + 1, b, j, prefix, coef, out);
	prefix.back() = b[j];
	quasi_shuffle(a, i, b, j + 1, prefix, coef, out);
	prefix.back() = a[i] + b[j];
	quasi_shuffle(a, i + 1, b, j + 1, prefix, coef, out);
	prefix.pop_back();
}

Element bullet_m(int k, const Element& a, const Element& b)
{
	Element out(Basis::M);
	for (const auto& [ca, ra] : a.terms()) {
		for (const auto& [cb, rb] : b.terms()) {
			const Rational r = ra * rb;
			if (cb.empty()) {
				out.add_term(ca.appended(k), r);
				continue;
			}
			const Composition tail = cb.slice(1, cb.length() - 1);
			out.add_term(concat(ca.appended(k).appended(cb.front()), tail), r);
			out.add_term(concat(ca.appended(k + cb.front()), tail), r);
		}
	}
	return out;
}

Element bullet_mt(int k, const Element& a, const Element& b)
{
	Element out(Basis::Mt);
	for (const auto& [ca, ra] : a.terms()) {
		for (const auto& [cb, rb] : b.terms()) {
			if (ca.empty())
				out.add_term(cb.prepended(k), ra * rb);
			else
				out += (ra * rb) * bullet_tilde(k, ca, cb);
		}
	}
	return out;
}

Element bullet_f(const Element& a, const Element& b)
{
	Element out(Basis::F);
	for (const auto& [ca, ra] : a.terms())
		for (const auto& [cb, rb] : b.terms())
			out += (ra * rb) * bullet_F(ca, cb);
	return out;
}

} // namespace

Element mul(const Element& a, const Element& b)
{
	const Element am = to_basis(a, Basis::M);
	const Element bm = to_basis(b, Basis::M);
	Element out(Basis::M);
	std::vector<int> prefix;
	for (const auto& [ca, ra] : am.terms())
		for (const auto& [cb, rb] : bm.terms())
			quasi_shuffle(ca, 0, cb, 0, prefix, ra * rb, out);
	return out;
}

Element bullet(int k, const Element& a, const Element& b)
{
	check_order(k, "bullet");
	if (a.basis() == Basis::Mt && b.basis() == Basis::Mt)
		return bullet_mt(k, a, b);
	if (k == 1 && a.basis() == Basis::F && b.basis() == Basis::F)
		return bullet_f(a, b);
	return bullet_m(k, to_basis(a, Basis::M), to_basis(b, Basis::M));
}

Element hat_bullet(int k, const Element& a, const Element& b)
{
	check_order(k, "hat_bullet");
	const Element am = to_basis(a, Basis::M);
	const Element bm = to_basis(b, Basis::M);
	Element out(Basis::M);
	for (const auto& [ca, ra] : am.terms()) {
		for (const auto& [cb, rb] : bm.terms()) {
			const Rational r = ra * rb;
			if (ca.empty()) {
				out.add_term(cb.prepended(k), r);
				continue;
			}
			const Composition head = ca.slice(0, ca.length() - 1);
			out.add_term(concat(head.appended(ca.back()).appended(k), cb), r);
			out.add_term(concat(head.appended(ca.back() + k), cb), r);
		}
	}
	return out;
}

Element bullet_tilde(int k, const Composition& lhs, const Composition& rhs)
{
	check_order(k, "bullet_tilde");
	if (lhs.empty())
		throw std::invalid_argument("bullet_tilde: left composition must be nonempty");
	const Composition head = lhs.slice(0, lhs.length() - 1);
	Element out(Basis::Mt);
	out.add_term(concat(head.appended(lhs.back()).appended(k), rhs), 1);
	out.add_term(concat(head.appended(lhs.back() + k), rhs), -1);
	return out;
}

Element bullet_F(const Composition& lhs, const Composition& rhs)
{
	if (rhs.empty())
		return monomial(Basis::F, lhs.appended(1));
	return monomial(Basis::F, concat(lhs.appended(rhs.front() + 1), rhs.slice(1, rhs.length() - 1)));
}

Element elementary_F(int m, int n)
{
	if (m < 0 || n < 0)
		throw std::invalid_argument("elementary_F: negative block parameter");
	const Element one = Element::one();
	Element e = bullet(1, one, one);
	for (int i = 0; i < n; ++i)
		e = bullet(1, e, one);
	for (int i = 0; i < m; ++i)
		e = bullet(1, one, e);
	return e;
}

std::vector<Element> factorize_F(const Composition& c)
{
	std::vector<Element> factors;
	for (const auto& block : elementary_decompose(c))
		factors.push_back(monomial(Basis::F, concat(Composition{block.m + 1}, ones(block.n))));
	return factors;
}

Element bullet_by_first_product(int k, const Element& a, const Element& b)
{
	check_order(k, "bullet_by_first_product");
	if (k == 1)
		return bullet(1, a, b);
	const Element one = Element::one();
	return bullet(1, a, bullet_by_first_product(k - 1, one, b))
	     - bullet_by_first_product(k - 1, bullet(1, a, one), b);
}

} // namespace qsym
