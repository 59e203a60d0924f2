#pragma once

#include "qsym/element.hpp"

#include <map>
#include <utility>
#include <string>

namespace qsym {

/// Partitions are weakly decreasing compositions.
bool is_partition(const Composition& c);

/// Multiset union of two partitions.
Composition partition_union(const Composition& a, const Composition& b);

/// Polynomial in commuting generators g_1, g_2, ... with monomials g_lambda
/// indexed by partitions. Used both for the power sums p_k and for the
/// Schur-polynomial variables t_k.
class PartitionPolynomial {
public:
	using Terms = std::map<Composition, Rational>;

	PartitionPolynomial() = default;
	static PartitionPolynomial generator(int k);
	static PartitionPolynomial constant(const Rational& r);

	const Terms& terms() const& noexcept { return terms_; }
	Terms terms() && noexcept { return std::move(terms_); }
	bool is_zero() const noexcept { return terms_.empty(); }
	Rational coefficient(const Composition& partition) const;

	/// Throws std::invalid_argument if `partition` is not weakly decreasing.
	void add_term(const Composition& partition, const Rational& r);

	PartitionPolynomial& operator+=(const PartitionPolynomial& other);
	PartitionPolynomial& operator-=(const PartitionPolynomial& other);
	PartitionPolynomial& operator*=(const Rational& r);
	bool operator==(const PartitionPolynomial& other) const = default;

private:
	Terms terms_;
};

PartitionPolynomial operator+(const PartitionPolynomial& a, const PartitionPolynomial& b);
PartitionPolynomial operator-(const PartitionPolynomial& a, const PartitionPolynomial& b);
PartitionPolynomial operator*(const PartitionPolynomial& a, const PartitionPolynomial& b);
PartitionPolynomial operator*(const Rational& r, const PartitionPolynomial& a);

/// Evaluates g_k -> p_k = M_(k) in QSym.
Element evaluate_power_sums(const PartitionPolynomial& poly);

/// `3/2*p[2,1] - p[3]`; the constant term prints as a bare rational.
std::string to_string(const PartitionPolynomial& poly, const std::string& symbol = "p");

/// p_n = M_(n). Throws for n < 1.
Element power_sum(int n);

/// h_n by the Newton recursion n h_n = sum_{k=1..n} p_k h_(n-k), h_0 = 1. M basis.
Element complete_h(int n);

/// Coefficients of the elementary Schur polynomial s_n(t_1, t_2, ...), the
/// zeta^n coefficient of exp(sum_k zeta^k t_k).
PartitionPolynomial elementary_schur(int n);

/// h_n written in power sums: s_n with t_k = p_k / k.
PartitionPolynomial complete_h_power_sums(int n);

struct IdentitySides {
	Element lhs;
	Element rhs;
	bool holds() const { return lhs == rhs; }
};

/// h_m h_(n+1) - h_(m+1) h_n  =  sum_{k=1..m} h_k . (h_(m-k) h_n) - sum_{k=1..n} h_k . (h_(n-k) h_m)
/// with . the first product. Throws for m < 1 or n < 1.
IdentitySides kp_identity(int m, int n);

/// 4 p1 p3 - 3 p2^2 - p1^4  =  -6 p1 (p1 . p1) + 6 (p1 . p2 - p2 . p1)
IdentitySides kp_classical_identity();

} // namespace qsym
