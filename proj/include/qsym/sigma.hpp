#pragma once

#include "qsym/element.hpp"
#include "qsym/kp.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsym {

/// Symbolic expression built from symmetric leaves (polynomials in the power
/// sums), first products, multiplication by p_lambda, sums and scalars. The
/// correspondence with the noncommutative KP hierarchy acts on this tree, not
/// on evaluated elements: different trees with the same value may render
/// differently.
class SymExpr {
public:
	enum class Kind { Leaf, Bullet, PowerMul, Sum, Scale };

	static SymExpr leaf(PartitionPolynomial poly);
	static SymExpr bullet(SymExpr a, SymExpr b);
	/// p_lambda * a
	static SymExpr power_mul(Composition partition, SymExpr a);
	static SymExpr sum(std::vector<SymExpr> terms);
	static SymExpr scale(Rational r, SymExpr a);

	Kind kind() const noexcept { return kind_; }
	const PartitionPolynomial& poly() const noexcept { return poly_; }
	const Composition& partition() const noexcept { return partition_; }
	const Rational& factor() const noexcept { return factor_; }
	const std::vector<SymExpr>& children() const noexcept { return children_; }

private:
	explicit SymExpr(Kind kind) : kind_(kind) {}

	Kind kind_;
	PartitionPolynomial poly_;
	Composition partition_;
	Rational factor_ = 1;
	std::vector<SymExpr> children_;
};

/// Value of the tree in QSym (M basis).
Element evaluate(const SymExpr& e);

/// Noncommutative product of derivatives phi_{t_i1...t_ir}; each factor holds
/// its derivative indices in ascending order.
using PdeMonomial = std::vector<std::vector<int>>;

struct PdeMonomialLess {
	bool operator()(const PdeMonomial& a, const PdeMonomial& b) const;
};

/// Linear combination of PDE monomials.
using PdeExpr = std::map<PdeMonomial, Rational, PdeMonomialLess>;

/// sigma(p_lambda) = -phi_{t_lambda}, sigma(p_n a) = d/dt_n sigma(a), sigma(a . b) = sigma(a) sigma(b).
/// Throws std::domain_error on a leaf with a nonzero constant term.
PdeExpr sigma(const SymExpr& e);

/// `-phi_{t3}`, `phi_{t1}*phi_{t2}`, ...
std::string render(const PdeExpr& e);

/// `lhs = rhs` after scaling both sides so every coefficient is an integer,
/// their gcd is 1 and the leading left-hand term is positive.
std::string render_equation(const PdeExpr& lhs, const PdeExpr& rhs);

struct SymIdentity {
	SymExpr lhs;
	SymExpr rhs;
};

/// The (m, n) identity of the KP family as expression trees.
SymIdentity kp_identity_tree(int m, int n);

/// The classical KP identity as expression trees, with p1 (p1 . p1) kept as a derivative.
SymIdentity kp_classical_tree();

} // namespace qsym
