#pragma once

#include "qsym/element.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

/// Syntax tree of the expression language.
///
///   sum     := ['-'] chain (('+' | '-') chain)*
///   chain   := primary (op primary)*        op: '*'  '.k.'  '^k^'
///   primary := '(' sum ')' | atom
///   atom    := M[..] | Mt[..] | F[..] | p<n> | h<n> | <int> | <int>/<int>
///
/// Operators in a chain associate to the left. A chain may not mix '*' with
/// '.k.' or '^k^' unless parentheses make the grouping explicit.
struct Expr {
	enum class Kind { Basis, Literal, PowerSum, Complete, Mul, Bullet, HatBullet, Add, Sub, Neg, Group };

	Kind kind = Kind::Literal;
	Basis basis = Basis::M;
	Composition composition;
	Rational value = 0;
	int index = 0; ///< n for p<n>/h<n>, k for products
	std::vector<Expr> children;
};

/// Syntax error; column() is 1-based.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t column, const std::string& message);
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t column_;
};

Expr parse(std::string_view input);

/// Value in the M basis.
Element eval(const Expr& e);

/// Fully parenthesized rendering of the tree.
std::string to_string(const Expr& e);

} // namespace qsym
