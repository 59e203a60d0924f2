#include "qsym/sigma.hpp"

#include "qsym/products.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsym {

SymExpr SymExpr::leaf(PartitionPolynomial poly)
{
	SymExpr e(Kind::Leaf);
	e.poly_ = std::move(poly);
	return e;
}

SymExpr SymExpr::bullet(SymExpr a, SymExpr b)
{
	SymExpr e(Kind::Bullet);
	e.children_ = {std::move(a), std::move(b)};
	return e;
}

SymExpr SymExpr::power_mul(Composition partition, SymExpr a)
{
	if (!is_partition(partition))
		throw std::invalid_argument("SymExpr::power_mul: not a partition");
	SymExpr e(Kind::PowerMul);
	e.partition_ = std::move(partition);
	e.children_ = {std::move(a)};
	return e;
}

SymExpr SymExpr::sum(std::vector<SymExpr> terms)
{
	SymExpr e(Kind::Sum);
	e.children_ = std::move(terms);
	return e;
}

SymExpr SymExpr::scale(Rational r, SymExpr a)
{
	SymExpr e(Kind::Scale);
	e.factor_ = std::move(r);
	e.children_ = {std::move(a)};
	return e;
}

Element evaluate(const SymExpr& e)
{
	switch (e.kind()) {
	case SymExpr::Kind::Leaf:
		return evaluate_power_sums(e.poly());
	case SymExpr::Kind::Bullet:
		return bullet(1, evaluate(e.children()[0]), evaluate(e.children()[1]));
	case SymExpr::Kind::PowerMul: {
		PartitionPolynomial p;
		p.add_term(e.partition(), 1);
		return mul(evaluate_power_sums(p), evaluate(e.children()[0]));
	}
	case SymExpr::Kind::Sum: {
		Element out(Basis::M);
		for (const auto& c : e.children())
			out += evaluate(c);
		return out;
	}
	case SymExpr::Kind::Scale:
		return e.factor() * evaluate(e.children()[0]);
	}
	throw std::logic_error("evaluate: unknown node");
}

bool PdeMonomialLess::operator()(const PdeMonomial& a, const PdeMonomial& b) const
{
	if (a.size() != b.size())
		return a.size() < b.size();
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i].size() != b[i].size())
			return a[i].size() < b[i].size();
		if (a[i] != b[i])
			return a[i] < b[i];
	}
	return false;
}

namespace {

void accumulate(PdeExpr& out, const PdeMonomial& m, const Rational& r)
{
	if (r == 0)
		return;
	auto [it, inserted] = out.try_emplace(m, r);
	if (!inserted) {
		it->second += r;
		if (it->second == 0)
			out.erase(it);
	}
}

// Leibniz rule for d/dt_n on a noncommutative product.
PdeExpr differentiate(const PdeExpr& e, int n)
{
	PdeExpr out;
	for (const auto& [m, r] : e) {
		for (std::size_t i = 0; i < m.size(); ++i) {
			PdeMonomial d = m;
			auto& idx = d[i];
			idx.insert(std::upper_bound(idx.begin(), idx.end(), n), n);
			accumulate(out, d, r);
		}
	}
	return out;
}

std::string render_monomial(const PdeMonomial& m)
{
	std::ostringstream os;
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (i)
			os << '*';
		os << "phi_{";
		for (std::size_t j = 0; j < m[i].size(); ++j)
			os << (j ? ",t" : "t") << m[i][j];
		os << '}';
	}
	return os.str();
}

} // namespace

PdeExpr sigma(const SymExpr& e)
{
	switch (e.kind()) {
	case SymExpr::Kind::Leaf: {
		PdeExpr out;
		for (const auto& [lambda, r] : e.poly().terms()) {
			if (lambda.empty())
				throw std::domain_error("sigma: leaf " + to_string(e.poly()) + " has a nonzero constant term");
			std::vector<int> idx(lambda.begin(), lambda.end());
			std::sort(idx.begin(), idx.end());
			accumulate(out, PdeMonomial{idx}, -r);
		}
		return out;
	}
	case SymExpr::Kind::Bullet: {
		const PdeExpr a = sigma(e.children()[0]);
		const PdeExpr b = sigma(e.children()[1]);
		PdeExpr out;
		for (const auto& [ma, ra] : a) {
			for (const auto& [mb, rb] : b) {
				PdeMonomial m = ma;
				m.insert(m.end(), mb.begin(), mb.end());
				accumulate(out, m, ra * rb);
			}
		}
		return out;
	}
	case SymExpr::Kind::PowerMul: {
		PdeExpr out = sigma(e.children()[0]);
		for (int n : e.partition())
			out = differentiate(out, n);
		return out;
	}
	case SymExpr::Kind::Sum: {
		PdeExpr out;
		for (const auto& c : e.children())
			for (const auto& [m, r] : sigma(c))
				accumulate(out, m, r);
		return out;
	}
	case SymExpr::Kind::Scale: {
		PdeExpr out;
		for (const auto& [m, r] : sigma(e.children()[0]))
			accumulate(out, m, e.factor() * r);
		return out;
	}
	}
	throw std::logic_error("sigma: unknown node");
}

std::string render(const PdeExpr& e)
{
	if (e.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [m, r] : e) {
		const Rational mag = abs(r);
		if (first)
			os << (r < 0 ? "-" : "");
		else
			os << (r < 0 ? " - " : " + ");
		first = false;
		if (mag != 1)
			os << mag.get_str() << '*';
		os << render_monomial(m);
	}
	return os.str();
}

std::string render_equation(const PdeExpr& lhs, const PdeExpr& rhs)
{
	mpz_class den = 1, num = 0;
	for (const auto* side : {&lhs, &rhs}) {
		for (const auto& [m, r] : *side) {
			den = lcm(den, mpz_class(r.get_den()));
			num = gcd(num, mpz_class(r.get_num()));
		}
	}
	Rational scale = 1;
	if (num != 0)
		scale = Rational(den, num);
	scale.canonicalize();
	const PdeExpr& lead = lhs.empty() ? rhs : lhs;
	if (!lead.empty() && lead.begin()->second < 0)
		scale = -scale;

	auto scaled = [&](const PdeExpr& e) {
		PdeExpr out;
		for (const auto& [m, r] : e)
			out.emplace(m, r * scale);
		return out;
	};
	return render(scaled(lhs)) + " = " + render(scaled(rhs));
}

SymIdentity kp_identity_tree(int m, int n)
{
	if (m < 1 || n < 1)
		throw std::invalid_argument("kp_identity_tree: m and n must be >= 1");
	std::vector<PartitionPolynomial> h;
	for (int j = 0; j <= std::max(m, n) + 1; ++j)
		h.push_back(complete_h_power_sums(j));

	SymIdentity id{SymExpr::leaf(h[m] * h[n + 1] - h[m + 1] * h[n]), SymExpr::sum({})};
	std::vector<SymExpr> terms;
	for (int k = 1; k <= m; ++k)
		terms.push_back(SymExpr::bullet(SymExpr::leaf(h[k]), SymExpr::leaf(h[m - k] * h[n])));
	for (int k = 1; k <= n; ++k)
		terms.push_back(SymExpr::scale(-1, SymExpr::bullet(SymExpr::leaf(h[k]), SymExpr::leaf(h[n - k] * h[m]))));
	id.rhs = SymExpr::sum(std::move(terms));
	return id;
}

SymIdentity kp_classical_tree()
{
	const auto p = [](int k) { return PartitionPolynomial::generator(k); };
	const PartitionPolynomial lhs = Rational(4) * (p(1) * p(3)) - Rational(3) * (p(2) * p(2)) - p(1) * p(1) * p(1) * p(1);
	const auto leaf = [&](int k) { return SymExpr::leaf(p(k)); };
	SymExpr rhs = SymExpr::sum({
	    SymExpr::scale(-6, SymExpr::power_mul(Composition{1}, SymExpr::bullet(leaf(1), leaf(1)))),
	    SymExpr::scale(6, SymExpr::bullet(leaf(1), leaf(2))),
	    SymExpr::scale(-6, SymExpr::bullet(leaf(2), leaf(1))),
	});
	return {SymExpr::leaf(lhs), std::move(rhs)};
}

} // namespace qsym
