#pragma once

#include "qsym/composition.hpp"
#include "qsym/oracle.hpp"
#include "qsym/rational.hpp"

#include <map>
#include <utility>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qsym {

/// Polynomial in two interleaved alphabets x1..xN, y1..yN. The index range of
/// a monomial, m(a)..M(a), is taken over both alphabets together.
class QssPoly {
public:
	/// x exponents followed by y exponents, length 2N.
	using Exponents = std::vector<int>;
	using Terms = std::map<Exponents, Rational>;

	/// Throws std::invalid_argument for N < 1.
	explicit QssPoly(int n);
	static QssPoly constant(int n, const Rational& r);
	static QssPoly x(int n, int i, int power = 1);
	static QssPoly y(int n, int i, int power = 1);

	int truncation() const noexcept { return n_; }
	const Terms& terms() const& noexcept { return terms_; }
	Terms terms() && noexcept { return std::move(terms_); }
	bool is_zero() const noexcept { return terms_.empty(); }

	void add_term(const Exponents& e, const Rational& r);

	QssPoly& operator+=(const QssPoly& other);
	QssPoly& operator-=(const QssPoly& other);
	QssPoly& operator*=(const Rational& r);
	bool operator==(const QssPoly& other) const;

	/// y_i = 0 for all i, as a one-alphabet polynomial.
	Polynomial drop_y() const;

private:
	void check_same(const QssPoly& other) const;

	int n_;
	Terms terms_;
};

QssPoly operator+(const QssPoly& a, const QssPoly& b);
QssPoly operator-(const QssPoly& a, const QssPoly& b);
QssPoly operator*(const QssPoly& a, const QssPoly& b);
QssPoly operator*(const Rational& r, const QssPoly& a);

/// Two-alphabet product, on monomials a, b:
///   1 .k. 1 = sum_i (x_i^k - y_i^k)
///   1 .k. b = sum_{i <= m(b)} x_i^k b - sum_{i < m(b)} y_i^k b
///   a .k. 1 = sum_{M(a) < i} a x_i^k - sum_{M(a) <= i} a y_i^k
///   a .k. b = sum_{M(a) < i <= m(b)} a x_i^k b - sum_{M(a) <= i < m(b)} a y_i^k b
/// Throws for k < 1 or mismatched truncation.
QssPoly qss_bullet(int k, const QssPoly& a, const QssPoly& b);

/// p_r = sum_{i=1..N} (x_i^r - y_i^r).
QssPoly qss_p(int r, int n);

/// M_[] = 1, M_C(k) = M_C .k. 1.
QssPoly qss_M(const Composition& c, int n);

/// p_r . p_s summed directly over index triples:
///   sum_{i<j<=k} (x_i^r - y_i^r) x_j (x_k^s - y_k^s) - sum_{i<=j<k} (x_i^r - y_i^r) y_j (x_k^s - y_k^s)
QssPoly qss_pbup_direct(int r, int s, int n);

struct QssSides {
	QssPoly lhs;
	QssPoly rhs;
};

/// 4 p1 p3 - 3 p2^2 - p1^4 and -6 p1 (p1 . p1) + 6 (p1 . p2 - p2 . p1) at truncation N.
QssSides qss_kp_sides(int n);
bool qss_kp_check(int n);

/// Substitutes x_i = y_i = t (1-based i) and reports whether every positive power of t cancels.
bool t_substitution_check(const QssPoly& a, int i);

/// An element built from 1 by the products .k., with its bracketing as text.
struct GeneratedElement {
	std::string expression;
	int weight;
	QssPoly value;
};

/// Every product tree over 1 with total weight in 1..max_weight, at truncation N.
std::vector<GeneratedElement> bullet_generated(int max_weight, int n);

/// Outcome of asking whether `target` lies in the span of qss_M(E, N), |E| = weight.
struct SpanResult {
	bool in_span = false;
	/// One solution when in_span (free coordinates set to 0).
	std::map<Composition, Rational> coefficients;
};

SpanResult qss_span_membership(const QssPoly& target, int weight, int n);

std::string to_string(const QssPoly& p);
std::ostream& operator<<(std::ostream& os, const QssPoly& p);

} // namespace qsym
