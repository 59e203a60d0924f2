#include "qsym/qss.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qsym {

QssPoly::QssPoly(int n) : n_(n)
{
	if (n < 1)
		throw std::invalid_argument("QssPoly: truncation must be >= 1");
}

QssPoly QssPoly::constant(int n, const Rational& r)
{
	QssPoly p(n);
	p.add_term(Exponents(2 * n, 0), r);
	return p;
}

QssPoly QssPoly::x(int n, int i, int power)
{
	if (i < 1 || i > n)
		throw std::out_of_range("QssPoly::x: index out of range");
	QssPoly p(n);
	Exponents e(2 * n, 0);
	e[i - 1] = power;
	p.add_term(e, 1);
	return p;
}

QssPoly QssPoly::y(int n, int i, int power)
{
	if (i < 1 || i > n)
		throw std::out_of_range("QssPoly::y: index out of range");
	QssPoly p(n);
	Exponents e(2 * n, 0);
	e[n + i - 1] = power;
	p.add_term(e, 1);
	return p;
}

void QssPoly::add_term(const Exponents& e, const Rational& r)
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

void QssPoly::check_same(const QssPoly& other) const
{
	if (n_ != other.n_)
		throw std::invalid_argument("QssPoly: mismatched truncation (" + std::to_string(n_) + " vs " +
		                            std::to_string(other.n_) + ")");
}

QssPoly& QssPoly::operator+=(const QssPoly& other)
{
	check_same(other);
	for (const auto& [e, r] : other.terms_)
		add_term(e, r);
	return *this;
}

QssPoly& QssPoly::operator-=(const QssPoly& other)
{
	check_same(other);
	for (const auto& [e, r] : other.terms_)
		add_term(e, -r);
	return *this;
}

QssPoly& QssPoly::operator*=(const Rational& r)
{
	if (r == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [e, coef] : terms_)
		coef *= r;
	return *this;
}

bool QssPoly::operator==(const QssPoly& other) const
{
	check_same(other);
	return terms_ == other.terms_;
}

Polynomial QssPoly::drop_y() const
{
	Polynomial out(n_);
	for (const auto& [e, r] : terms_)
		if (std::all_of(e.begin() + n_, e.end(), [](int v) { return v == 0; }))
			out.add_term(Polynomial::Exponents(e.begin(), e.begin() + n_), r);
	return out;
}

QssPoly operator+(const QssPoly& a, const QssPoly& b)
{
	QssPoly r = a;
	r += b;
	return r;
}

QssPoly operator-(const QssPoly& a, const QssPoly& b)
{
	QssPoly r = a;
	r -= b;
	return r;
}

QssPoly operator*(const QssPoly& a, const QssPoly& b)
{
	if (a.truncation() != b.truncation())
		throw std::invalid_argument("QssPoly: mismatched truncation");
	QssPoly out(a.truncation());
	QssPoly::Exponents e(2 * a.truncation());
	for (const auto& [ea, ra] : a.terms()) {
		for (const auto& [eb, rb] : b.terms()) {
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] = ea[i] + eb[i];
			out.add_term(e, ra * rb);
		}
	}
	return out;
}

QssPoly operator*(const Rational& r, const QssPoly& a)
{
	QssPoly out = a;
	out *= r;
	return out;
}

namespace {

// 0-based lowest/highest index used by either alphabet; {-1,-1} for the constant monomial.
std::pair<int, int> index_range(const QssPoly::Exponents& e, int n)
{
	int lo = -1, hi = -1;
	for (int i = 0; i < n; ++i) {
		if (e[i] != 0 || e[n + i] != 0) {
			if (lo < 0)
				lo = i;
			hi = i;
		}
	}
	return {lo, hi};
}

} // namespace

QssPoly qss_bullet(int k, const QssPoly& a, const QssPoly& b)
{
	if (k < 1)
		throw std::invalid_argument("qss_bullet: product index must be >= 1");
	if (a.truncation() != b.truncation())
		throw std::invalid_argument("qss_bullet: mismatched truncation");
	const int n = a.truncation();
	QssPoly out(n);
	QssPoly::Exponents e(2 * n);
	for (const auto& [u, ru] : a.terms()) {
		const auto [ulo, uhi] = index_range(u, n);
		for (const auto& [v, rv] : b.terms()) {
			const auto [vlo, vhi] = index_range(v, n);
			for (std::size_t j = 0; j < e.size(); ++j)
				e[j] = u[j] + v[j];
			const Rational r = ru * rv;
			// x range: M(u) < i <= m(v); y range: M(u) <= i < m(v); missing bounds are open.
			const int x_first = uhi < 0 ? 0 : uhi + 1;
			const int x_last = vlo < 0 ? n - 1 : vlo;
			const int y_first = uhi < 0 ? 0 : uhi;
			const int y_last = vlo < 0 ? n - 1 : vlo - 1;
			for (int i = x_first; i <= x_last; ++i) {
				e[i] += k;
				out.add_term(e, r);
				e[i] -= k;
			}
			for (int i = y_first; i <= y_last; ++i) {
				e[n + i] += k;
				out.add_term(e, -r);
				e[n + i] -= k;
			}
		}
	}
	return out;
}

QssPoly qss_p(int r, int n)
{
	if (r < 1)
		throw std::invalid_argument("qss_p: r must be >= 1");
	QssPoly out(n);
	for (int i = 1; i <= n; ++i) {
		out += QssPoly::x(n, i, r);
		out -= QssPoly::y(n, i, r);
	}
	return out;
}

QssPoly qss_M(const Composition& c, int n)
{
	QssPoly out = QssPoly::constant(n, 1);
	const QssPoly one = out;
	for (int part : c)
		out = qss_bullet(part, out, one);
	return out;
}

QssPoly qss_pbup_direct(int r, int s, int n)
{
	if (r < 1 || s < 1)
		throw std::invalid_argument("qss_pbup_direct: r and s must be >= 1");
	auto diff = [n](int i, int power) { return QssPoly::x(n, i, power) - QssPoly::y(n, i, power); };
	QssPoly out(n);
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (int k = 1; k <= n; ++k) {
				if (i < j && j <= k)
					out += diff(i, r) * QssPoly::x(n, j) * diff(k, s);
				if (i <= j && j < k)
					out -= diff(i, r) * QssPoly::y(n, j) * diff(k, s);
			}
	return out;
}

QssSides qss_kp_sides(int n)
{
	const QssPoly p1 = qss_p(1, n), p2 = qss_p(2, n), p3 = qss_p(3, n);
	const QssPoly p1sq = p1 * p1;
	QssSides s{Rational(4) * (p1 * p3) - Rational(3) * (p2 * p2) - p1sq * p1sq,
	           Rational(-6) * (p1 * qss_bullet(1, p1, p1)) + Rational(6) * (qss_bullet(1, p1, p2) - qss_bullet(1, p2, p1))};
	return s;
}

bool qss_kp_check(int n)
{
	const auto s = qss_kp_sides(n);
	return s.lhs == s.rhs;
}

bool t_substitution_check(const QssPoly& a, int i)
{
	const int n = a.truncation();
	if (i < 1 || i > n)
		throw std::out_of_range("t_substitution_check: index out of range");
	// Collect by (power of t, remaining monomial).
	std::map<std::pair<int, QssPoly::Exponents>, Rational> collected;
	for (const auto& [e, r] : a.terms()) {
		QssPoly::Exponents rest = e;
		const int t_power = rest[i - 1] + rest[n + i - 1];
		rest[i - 1] = 0;
		rest[n + i - 1] = 0;
		collected[{t_power, rest}] += r;
	}
	for (const auto& [key, r] : collected)
		if (key.first > 0 && r != 0)
			return false;
	return true;
}

std::vector<GeneratedElement> bullet_generated(int max_weight, int n)
{
	// by_weight[w]: all trees of weight w; weight(a .k. b) = weight(a) + weight(b) + k.
	std::vector<std::vector<GeneratedElement>> by_weight(max_weight + 1);
	by_weight[0].push_back({"1", 0, QssPoly::constant(n, 1)});
	for (int w = 1; w <= max_weight; ++w) {
		for (int k = w; k >= 1; --k) {
			for (int wa = 0; wa <= w - k; ++wa) {
				const int wb = w - k - wa;
				for (const auto& a : by_weight[wa])
					for (const auto& b : by_weight[wb])
						by_weight[w].push_back({"(" + a.expression + " ." + std::to_string(k) + ". " + b.expression + ")", w,
						                        qss_bullet(k, a.value, b.value)});
			}
		}
	}
	std::vector<GeneratedElement> out;
	for (int w = 1; w <= max_weight; ++w)
		for (auto& g : by_weight[w])
			out.push_back(std::move(g));
	return out;
}

SpanResult qss_span_membership(const QssPoly& target, int weight, int n)
{
	const auto basis = compositions_of(weight);
	std::map<QssPoly::Exponents, std::size_t> row_of;
	std::vector<QssPoly> columns;
	for (const auto& c : basis)
		columns.push_back(qss_M(c, n));
	auto row_index = [&](const QssPoly::Exponents& e) {
		return row_of.try_emplace(e, row_of.size()).first->second;
	};
	for (const auto& col : columns)
		for (const auto& [e, r] : col.terms())
			row_index(e);
	for (const auto& [e, r] : target.terms())
		row_index(e);

	const std::size_t rows = row_of.size(), cols = columns.size();
	std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, 0));
	for (std::size_t j = 0; j < cols; ++j)
		for (const auto& [e, r] : columns[j].terms())
			m[row_of[e]][j] = r;
	for (const auto& [e, r] : target.terms())
		m[row_of[e]][cols] = r;

	// Gauss-Jordan elimination on the augmented matrix.
	std::vector<std::size_t> pivot_col;
	std::size_t rank = 0;
	for (std::size_t j = 0; j < cols && rank < rows; ++j) {
		std::size_t p = rank;
		while (p < rows && m[p][j] == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(m[p], m[rank]);
		const Rational inv = 1 / m[rank][j];
		for (auto& v : m[rank])
			v *= inv;
		for (std::size_t i = 0; i < rows; ++i) {
			if (i == rank || m[i][j] == 0)
				continue;
			const Rational f = m[i][j];
			for (std::size_t c = j; c <= cols; ++c)
				m[i][c] -= f * m[rank][c];
		}
		pivot_col.push_back(j);
		++rank;
	}

	SpanResult result;
	for (std::size_t i = rank; i < rows; ++i)
		if (m[i][cols] != 0)
			return result;
	result.in_span = true;
	for (std::size_t i = 0; i < rank; ++i)
		if (m[i][cols] != 0)
			result.coefficients[basis[pivot_col[i]]] = m[i][cols];
	return result;
}

std::string to_string(const QssPoly& p)
{
	std::ostringstream os;
	os << p;
	return os.str();
}

std::ostream& operator<<(std::ostream& os, const QssPoly& p)
{
	if (p.is_zero())
		return os << '0';
	const int n = p.truncation();
	bool first = true;
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
		const auto& [e, r] = *it;
		const Rational mag = abs(r);
		if (first)
			os << (r < 0 ? "-" : "");
		else
			os << (r < 0 ? " - " : " + ");
		first = false;
		std::ostringstream mono;
		for (int i = 0; i < n; ++i) {
			for (int alphabet = 0; alphabet < 2; ++alphabet) {
				const int v = e[alphabet * n + i];
				if (v == 0)
					continue;
				if (mono.tellp() > 0)
					mono << '*';
				mono << (alphabet == 0 ? 'x' : 'y') << i + 1;
				if (v > 1)
					mono << '^' << v;
			}
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
