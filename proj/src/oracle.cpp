#include "qsym/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsym {

Polynomial::Polynomial(int vars) : vars_(vars)
{
	if (vars < 1)
		throw std::invalid_argument("Polynomial: number of variables must be >= 1");
}

Polynomial Polynomial::constant(int vars, const Rational& r)
{
	Polynomial p(vars);
	p.add_term(Exponents(vars, 0), r);
	return p;
}

Rational Polynomial::coefficient(const Exponents& e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& r)
{
	if (r == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, r);
	if (!inserted) {
		it->second += r;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void Polynomial::check_same(const Polynomial& other) const
{
	if (vars_ != other.vars_)
		throw std::invalid_argument("Polynomial: mismatched number of variables (" + std::to_string(vars_) + " vs " +
		                            std::to_string(other.vars_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
	check_same(other);
	for (const auto& [e, r] : other.terms_)
		add_term(e, r);
	return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
	check_same(other);
	for (const auto& [e, r] : other.terms_)
		add_term(e, -r);
	return *this;
}

Polynomial& Polynomial::operator*=(const Rational& r)
{
	if (r == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [e, coef] : terms_)
		coef *= r;
	return *this;
}

Polynomial Polynomial::drop_last_variable() const
{
	if (vars_ == 1)
		throw std::invalid_argument("Polynomial: cannot drop the only variable");
	Polynomial out(vars_ - 1);
	for (const auto& [e, r] : terms_)
		if (e.back() == 0)
			out.add_term(Exponents(e.begin(), e.end() - 1), r);
	return out;
}

bool Polynomial::operator==(const Polynomial& other) const
{
	check_same(other);
	return terms_ == other.terms_;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
	Polynomial r = p;
	r += q;
	return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q)
{
	Polynomial r = p;
	r -= q;
	return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
	if (p.vars() != q.vars())
		throw std::invalid_argument("Polynomial: mismatched number of variables");
	Polynomial out(p.vars());
	Polynomial::Exponents e(p.vars());
	for (const auto& [ep, rp] : p.terms()) {
		for (const auto& [eq, rq] : q.terms()) {
			for (int i = 0; i < p.vars(); ++i)
				e[i] = ep[i] + eq[i];
			out.add_term(e, rp * rq);
		}
	}
	return out;
}

Polynomial operator*(const Rational& r, const Polynomial& p)
{
	Polynomial out = p;
	out *= r;
	return out;
}

namespace {

// One link of an index chain: exponent placed on the chosen variable, and whether
// its index must strictly exceed the previous one.
struct Link {
	int exponent;
	bool strict;
};

void sum_chain(const std::vector<Link>& chain, std::size_t pos, int prev, Polynomial::Exponents& e,
               const Rational& coef, Polynomial& out)
{
	if (pos == chain.size()) {
		out.add_term(e, coef);
		return;
	}
	const int vars = static_cast<int>(e.size());
	const int lo = chain[pos].strict ? prev + 1 : prev;
	for (int i = std::max(lo, 0); i < vars; ++i) {
		e[i] += chain[pos].exponent;
		sum_chain(chain, pos + 1, i, e, coef, out);
		e[i] -= chain[pos].exponent;
	}
}

std::vector<Link> chain_for(Basis basis, const Composition& c)
{
	std::vector<Link> chain;
	switch (basis) {
	case Basis::M:
		for (int part : c)
			chain.push_back({part, true});
		break;
	case Basis::Mt:
		for (int part : c)
			chain.push_back({part, false});
		break;
	case Basis::F:
		// x1 <= ... <= x_n1 < x_(n1+1) <= ...
		for (int part : c)
			for (int j = 0; j < part; ++j)
				chain.push_back({1, j == 0});
		break;
	}
	// The first index is unconstrained below; prev = -1 with a strict link starts at 0.
	if (!chain.empty())
		chain.front().strict = true;
	return chain;
}

// 0-based lowest and highest index carrying a nonzero exponent; {-1,-1} for the constant.
std::pair<int, int> index_range(const Polynomial::Exponents& e)
{
	int lo = -1, hi = -1;
	for (int i = 0; i < static_cast<int>(e.size()); ++i) {
		if (e[i] != 0) {
			if (lo < 0)
				lo = i;
			hi = i;
		}
	}
	return {lo, hi};
}

// Sum over i in [first, last] of u x_i^k v.
void insert_between(int k, const Polynomial::Exponents& u, const Polynomial::Exponents& v, int first, int last,
                    const Rational& coef, Polynomial& out)
{
	Polynomial::Exponents e(u.size());
	for (std::size_t j = 0; j < u.size(); ++j)
		e[j] = u[j] + v[j];
	for (int i = first; i <= last; ++i) {
		e[i] += k;
		out.add_term(e, coef);
		e[i] -= k;
	}
}

Polynomial monomial_product(int k, bool hat, const Polynomial& p, const Polynomial& q)
{
	if (k < 1)
		throw std::invalid_argument("product index must be >= 1");
	if (p.vars() != q.vars())
		throw std::invalid_argument("Polynomial: mismatched number of variables");
	const int n = p.vars();
	Polynomial out(n);
	for (const auto& [u, ru] : p.terms()) {
		const auto [ulo, uhi] = index_range(u);
		for (const auto& [v, rv] : q.terms()) {
			const auto [vlo, vhi] = index_range(v);
			int first = 0, last = n - 1;
			if (uhi >= 0)
				first = hat ? uhi : uhi + 1;
			if (vlo >= 0)
				last = hat ? vlo - 1 : vlo;
			insert_between(k, u, v, first, last, ru * rv, out);
		}
	}
	return out;
}

} // namespace

Polynomial expand(const Element& a, int vars)
{
	Polynomial out(vars);
	Polynomial::Exponents e(vars, 0);
	for (const auto& [c, r] : a.terms())
		sum_chain(chain_for(a.basis(), c), 0, -1, e, r, out);
	return out;
}

Polynomial poly_bullet(int k, const Polynomial& p, const Polynomial& q) { return monomial_product(k, false, p, q); }

Polynomial poly_hat_bullet(int k, const Polynomial& p, const Polynomial& q) { return monomial_product(k, true, p, q); }

Polynomial expand_bullet(int k, const Element& a, const Element& b, int vars)
{
	return poly_bullet(k, expand(a, vars), expand(b, vars));
}

Polynomial expand_hat_bullet(int k, const Element& a, const Element& b, int vars)
{
	return poly_hat_bullet(k, expand(a, vars), expand(b, vars));
}

bool certify_equal(const Element& a, const Element& b)
{
	const int vars = std::max({a.degree(), b.degree(), 1});
	return expand(a, vars) == expand(b, vars);
}

std::string to_string(const Polynomial& p)
{
	std::ostringstream os;
	os << p;
	return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
	if (p.is_zero())
		return os << '0';
	std::vector<const Polynomial::Terms::value_type*> order;
	for (const auto& t : p.terms())
		order.push_back(&t);
	// Graded lex: total degree ascending, then exponent vectors lexicographically descending.
	std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
		const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
		const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
		if (da != db)
			return da < db;
		return a->first > b->first;
	});
	bool first = true;
	for (const auto* t : order) {
		const Rational& r = t->second;
		const Rational mag = abs(r);
		if (first)
			os << (r < 0 ? "-" : "");
		else
			os << (r < 0 ? " - " : " + ");
		first = false;
		std::ostringstream mono;
		for (std::size_t i = 0; i < t->first.size(); ++i) {
			const int x = t->first[i];
			if (x == 0)
				continue;
			if (mono.tellp() > 0)
				mono << '*';
			mono << 'x' << i + 1;
			if (x > 1)
				mono << '^' << x;
		}
		const std::string m = mono.str();
		if (m.empty())
			os << mag.get_str();
		else if (mag == 1)
			os << m;
		else
			os << mag.get_str() << '*' << m;
	}
	return os;
}

} // namespace qsym
