#include "qsym/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsym {

std::string_view basis_name(Basis b)
{
	switch (b) {
	case Basis::M: return "M";
	case Basis::Mt: return "Mt";
	case Basis::F: return "F";
	}
	return "?";
}

Element::Element(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms))
{
	std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Element Element::constant(const Rational& r)
{
	Element e(Basis::M);
	e.add_term(Composition{}, r);
	return e;
}

Rational Element::coefficient(const Composition& c) const
{
	auto it = terms_.find(c);
	return it == terms_.end() ? Rational(0) : it->second;
}

int Element::degree() const
{
	int d = 0;
	for (const auto& [c, r] : terms_)
		d = std::max(d, c.weight());
	return d;
}

void Element::add_term(const Composition& c, const Rational& r)
{
	if (r == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(c, r);
	if (!inserted) {
		it->second += r;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Element& Element::operator+=(const Element& other)
{
	if (other.basis_ != basis_) {
		*this = to_basis(*this, Basis::M);
		return *this += to_basis(other, Basis::M);
	}
	for (const auto& [c, r] : other.terms_)
		add_term(c, r);
	return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element& Element::operator*=(const Rational& r)
{
	if (r == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [c, coef] : terms_)
		coef *= r;
	return *this;
}

Element monomial(Basis basis, const Composition& c)
{
	Element e(basis);
	e.add_term(c, 1);
	return e;
}

Element operator+(const Element& a, const Element& b)
{
	Element r = a;
	r += b;
	return r;
}

Element operator-(const Element& a, const Element& b)
{
	Element r = a;
	r -= b;
	return r;
}

Element operator-(const Element& a)
{
	Element r = a;
	r *= -1;
	return r;
}

Element operator*(const Rational& r, const Element& a)
{
	Element out = a;
	out *= r;
	return out;
}

namespace {

int sign_of_parity(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

Element to_m(const Element& a)
{
	Element out(Basis::M);
	switch (a.basis()) {
	case Basis::M:
		return a;
	case Basis::F:
		for (const auto& [c, r] : a.terms())
			for (const auto& d : refinements(c))
				out.add_term(d, r);
		break;
	case Basis::Mt:
		for (const auto& [c, r] : a.terms())
			for (const auto& d : coarsenings(c))
				out.add_term(d, r);
		break;
	}
	return out;
}

Element from_m(const Element& a, Basis target)
{
	Element out(target);
	switch (target) {
	case Basis::M:
		return a;
	case Basis::F:
		// M_C = sum over refinements D of C of (-1)^(l(D)-l(C)) F_D
		for (const auto& [c, r] : a.terms())
			for (const auto& d : refinements(c))
				out.add_term(d, sign_of_parity(d.length() - c.length()) * r);
		break;
	case Basis::Mt:
		// M_C = sum over coarsenings D of C of (-1)^(l(C)-l(D)) Mt_D
		for (const auto& [c, r] : a.terms())
			for (const auto& d : coarsenings(c))
				out.add_term(d, sign_of_parity(c.length() - d.length()) * r);
		break;
	}
	return out;
}

} // namespace

Element to_basis(const Element& a, Basis target)
{
	if (a.basis() == target)
		return a;
	return from_m(to_m(a), target);
}

Rational counit(const Element& a)
{
	// The constant coefficient is the same in every basis: all changes of basis preserve weight.
	return a.coefficient(Composition{});
}

bool operator==(const Element& a, const Element& b)
{
	if (a.basis() == b.basis())
		return a.terms() == b.terms();
	return to_basis(a, Basis::M).terms() == to_basis(b, Basis::M).terms();
}

Element reverse_map(const Element& a)
{
	Element out(Basis::M);
	for (const auto& [c, r] : to_basis(a, Basis::M).terms())
		out.add_term(reverse(c), r);
	return out;
}

std::string to_string(const Element& a)
{
	std::ostringstream os;
	os << a;
	return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& a)
{
	if (a.is_zero())
		return os << '0';
	bool first = true;
	for (const auto& [c, r] : a.terms()) {
		Rational mag = abs(r);
		if (first)
			os << (r < 0 ? "-" : "");
		else
			os << (r < 0 ? " - " : " + ");
		first = false;
		if (c.empty()) {
			os << mag.get_str();
			continue;
		}
		if (mag != 1)
			os << mag.get_str() << '*';
		os << basis_name(a.basis()) << c;
	}
	return os;
}

} // namespace qsym
