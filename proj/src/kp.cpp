#include "qsym/kp.hpp"

#include "qsym/products.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qsym {

bool is_partition(const Composition& c)
{
	return std::is_sorted(c.begin(), c.end(), std::greater<>{});
}

Composition partition_union(const Composition& a, const Composition& b)
{
	std::vector<int> parts;
	parts.reserve(a.length() + b.length());
	std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(parts), std::greater<>{});
	return Composition(std::move(parts));
}

PartitionPolynomial PartitionPolynomial::generator(int k)
{
	PartitionPolynomial p;
	p.add_term(Composition{k}, 1);
	return p;
}

PartitionPolynomial PartitionPolynomial::constant(const Rational& r)
{
	PartitionPolynomial p;
	p.add_term(Composition{}, r);
	return p;
}

Rational PartitionPolynomial::coefficient(const Composition& partition) const
{
	auto it = terms_.find(partition);
	return it == terms_.end() ? Rational(0) : it->second;
}

void PartitionPolynomial::add_term(const Composition& partition, const Rational& r)
{
	if (!is_partition(partition))
		throw std::invalid_argument("PartitionPolynomial: " + to_string(partition) + " is not a partition");
	if (r == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(partition, r);
	if (!inserted) {
		it->second += r;
		if (it->second == 0)
			terms_.erase(it);
	}
}

PartitionPolynomial& PartitionPolynomial::operator+=(const PartitionPolynomial& other)
{
	for (const auto& [l, r] : other.terms_)
		add_term(l, r);
	return *this;
}

PartitionPolynomial& PartitionPolynomial::operator-=(const PartitionPolynomial& other)
{
	for (const auto& [l, r] : other.terms_)
		add_term(l, -r);
	return *this;
}

PartitionPolynomial& PartitionPolynomial::operator*=(const Rational& r)
{
	if (r == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [l, coef] : terms_)
		coef *= r;
	return *this;
}

PartitionPolynomial operator+(const PartitionPolynomial& a, const PartitionPolynomial& b)
{
	PartitionPolynomial r = a;
	r += b;
	return r;
}

PartitionPolynomial operator-(const PartitionPolynomial& a, const PartitionPolynomial& b)
{
	PartitionPolynomial r = a;
	r -= b;
	return r;
}

PartitionPolynomial operator*(const PartitionPolynomial& a, const PartitionPolynomial& b)
{
	PartitionPolynomial out;
	for (const auto& [la, ra] : a.terms())
		for (const auto& [lb, rb] : b.terms())
			out.add_term(partition_union(la, lb), ra * rb);
	return out;
}

PartitionPolynomial operator*(const Rational& r, const PartitionPolynomial& a)
{
	PartitionPolynomial out = a;
	out *= r;
	return out;
}

Element evaluate_power_sums(const PartitionPolynomial& poly)
{
	Element out(Basis::M);
	for (const auto& [lambda, r] : poly.terms()) {
		Element prod = Element::one();
		for (int part : lambda)
			prod = mul(prod, power_sum(part));
		out += r * prod;
	}
	return out;
}

std::string to_string(const PartitionPolynomial& poly, const std::string& symbol)
{
	if (poly.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [lambda, r] : poly.terms()) {
		const Rational mag = abs(r);
		if (first)
			os << (r < 0 ? "-" : "");
		else
			os << (r < 0 ? " - " : " + ");
		first = false;
		if (lambda.empty()) {
			os << mag.get_str();
			continue;
		}
		if (mag != 1)
			os << mag.get_str() << '*';
		os << symbol << lambda;
	}
	return os.str();
}

Element power_sum(int n)
{
	if (n < 1)
		throw std::invalid_argument("power_sum: index must be >= 1");
	return monomial(Basis::M, Composition{n});
}

Element complete_h(int n)
{
	if (n < 0)
		throw std::invalid_argument("complete_h: negative index");
	std::vector<Element> h{Element::one()};
	for (int j = 1; j <= n; ++j) {
		Element sum(Basis::M);
		for (int k = 1; k <= j; ++k)
			sum += mul(power_sum(k), h[j - k]);
		h.push_back(Rational(1, j) * sum);
	}
	return h[n];
}

PartitionPolynomial elementary_schur(int n)
{
	if (n < 0)
		throw std::invalid_argument("elementary_schur: negative index");
	// E' = T' E for E = exp(T), T = sum zeta^k t_k:  j e_j = sum_{k=1..j} k t_k e_(j-k).
	std::vector<PartitionPolynomial> e{PartitionPolynomial::constant(1)};
	for (int j = 1; j <= n; ++j) {
		PartitionPolynomial sum;
		for (int k = 1; k <= j; ++k)
			sum += Rational(k) * (PartitionPolynomial::generator(k) * e[j - k]);
		sum *= Rational(1, j);
		e.push_back(std::move(sum));
	}
	return e[n];
}

PartitionPolynomial complete_h_power_sums(int n)
{
	PartitionPolynomial out;
	for (const auto& [lambda, r] : elementary_schur(n).terms()) {
		Rational c = r;
		for (int part : lambda)
			c /= part;
		out.add_term(lambda, c);
	}
	return out;
}

IdentitySides kp_identity(int m, int n)
{
	if (m < 1 || n < 1)
		throw std::invalid_argument("kp_identity: m and n must be >= 1");
	const int top = std::max(m, n) + 1;
	std::vector<Element> h;
	for (int j = 0; j <= top; ++j)
		h.push_back(complete_h(j));

	IdentitySides s;
	s.lhs = mul(h[m], h[n + 1]) - mul(h[m + 1], h[n]);
	s.rhs = Element(Basis::M);
	for (int k = 1; k <= m; ++k)
		s.rhs += bullet(1, h[k], mul(h[m - k], h[n]));
	for (int k = 1; k <= n; ++k)
		s.rhs -= bullet(1, h[k], mul(h[n - k], h[m]));
	return s;
}

IdentitySides kp_classical_identity()
{
	const Element p1 = power_sum(1), p2 = power_sum(2), p3 = power_sum(3);
	const Element p1sq = mul(p1, p1);

	IdentitySides s;
	s.lhs = Rational(4) * mul(p1, p3) - Rational(3) * mul(p2, p2) - mul(p1sq, p1sq);
	s.rhs = Rational(-6) * mul(p1, bullet(1, p1, p1)) + Rational(6) * (bullet(1, p1, p2) - bullet(1, p2, p1));
	return s;
}

} // namespace qsym
