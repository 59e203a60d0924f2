#include "qsym/expr.hpp"

#include "qsym/kp.hpp"
#include "qsym/products.hpp"

#include <cctype>
#include <sstream>

namespace qsym {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("parse error at column " + std::to_string(column) + ": " + message), column_(column)
{
}

namespace {

Expr make(Expr::Kind kind)
{
	Expr e;
	e.kind = kind;
	return e;
}

class Parser {
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Expr parse_all()
	{
		Expr e = parse_sum();
		skip_space();
		if (pos_ != text_.size())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		return e;
	}

private:
	[[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
	[[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(pos + 1, msg); }

	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool peek(char c)
	{
		skip_space();
		return pos_ < text_.size() && text_[pos_] == c;
	}

	void expect(char c)
	{
		if (!peek(c))
			fail(std::string("expected '") + c + "'");
		++pos_;
	}

	bool at_digit()
	{
		skip_space();
		return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
	}

	// Digits only; no sign, no surrounding whitespace inside.
	mpz_class parse_unsigned()
	{
		skip_space();
		const std::size_t start = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected an integer");
		return mpz_class(std::string(text_.substr(start, pos_ - start)));
	}

	int parse_small(const char* what)
	{
		const std::size_t start = pos_;
		const mpz_class v = parse_unsigned();
		if (v > 1000000)
			fail_at(start, std::string(what) + " is too large");
		return static_cast<int>(v.get_si());
	}

	Expr parse_sum()
	{
		Expr acc;
		if (peek('-')) {
			++pos_;
			acc = make(Expr::Kind::Neg);
			acc.children.push_back(parse_chain());
		} else {
			acc = parse_chain();
		}
		while (true) {
			Expr::Kind kind;
			if (peek('+'))
				kind = Expr::Kind::Add;
			else if (peek('-'))
				kind = Expr::Kind::Sub;
			else
				return acc;
			++pos_;
			Expr node = make(kind);
			node.children.push_back(std::move(acc));
			node.children.push_back(parse_chain());
			acc = std::move(node);
		}
	}

	Expr parse_chain()
	{
		Expr acc = parse_primary();
		bool seen_mul = false, seen_bullet = false;
		while (true) {
			skip_space();
			const std::size_t op_pos = pos_;
			Expr node;
			if (peek('*')) {
				++pos_;
				node.kind = Expr::Kind::Mul;
				seen_mul = true;
			} else if (peek('.') || peek('^')) {
				const char delim = text_[pos_++];
				node.kind = delim == '.' ? Expr::Kind::Bullet : Expr::Kind::HatBullet;
				if (!at_digit())
					fail(std::string("expected product index after '") + delim + "'");
				node.index = parse_small("product index");
				if (pos_ >= text_.size() || text_[pos_] != delim)
					fail(std::string("expected closing '") + delim + "'");
				++pos_;
				if (node.index < 1)
					fail_at(op_pos, "product index must be >= 1");
				seen_bullet = true;
			} else {
				return acc;
			}
			if (seen_mul && seen_bullet)
				fail_at(op_pos, "'*' mixed with a nonassociative product needs explicit parentheses");
			node.children.push_back(std::move(acc));
			node.children.push_back(parse_primary());
			acc = std::move(node);
		}
	}

	Composition parse_composition()
	{
		expect('[');
		std::vector<int> parts;
		if (peek(']')) {
			++pos_;
			return Composition{};
		}
		while (true) {
			const std::size_t at = pos_;
			const int v = parse_small("composition part");
			if (v < 1)
				fail_at(at, "composition parts must be positive");
			parts.push_back(v);
			if (peek(',')) {
				++pos_;
				continue;
			}
			expect(']');
			return Composition(std::move(parts));
		}
	}

	Expr parse_primary()
	{
		skip_space();
		if (pos_ >= text_.size())
			fail("unexpected end of input");
		const char c = text_[pos_];
		if (c == '(') {
			++pos_;
			Expr g = make(Expr::Kind::Group);
			g.children.push_back(parse_sum());
			expect(')');
			return g;
		}
		if (c == 'M' || c == 'F') {
			Expr e = make(Expr::Kind::Basis);
			++pos_;
			if (c == 'M' && pos_ < text_.size() && text_[pos_] == 't') {
				++pos_;
				e.basis = Basis::Mt;
			} else {
				e.basis = c == 'M' ? Basis::M : Basis::F;
			}
			e.composition = parse_composition();
			return e;
		}
		if (c == 'p' || c == 'h') {
			++pos_;
			Expr e = make(c == 'p' ? Expr::Kind::PowerSum : Expr::Kind::Complete);
			if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
				fail(std::string("expected an index after '") + c + "'");
			const std::size_t at = pos_;
			e.index = parse_small("index");
			if (c == 'p' && e.index < 1)
				fail_at(at, "power sum index must be >= 1");
			return e;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			Expr e = make(Expr::Kind::Literal);
			const mpz_class num = parse_unsigned();
			mpz_class den = 1;
			if (peek('/')) {
				++pos_;
				const std::size_t at = pos_;
				den = parse_unsigned();
				if (den == 0)
					fail_at(at, "zero denominator");
			}
			e.value = Rational(num, den);
			e.value.canonicalize();
			return e;
		}
		fail("unexpected '" + std::string(1, c) + "'");
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

} // namespace

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

Element eval(const Expr& e)
{
	auto child = [&](std::size_t i) { return eval(e.children[i]); };
	switch (e.kind) {
	case Expr::Kind::Basis:
		return to_basis(monomial(e.basis, e.composition), Basis::M);
	case Expr::Kind::Literal:
		return Element::constant(e.value);
	case Expr::Kind::PowerSum:
		return power_sum(e.index);
	case Expr::Kind::Complete:
		return complete_h(e.index);
	case Expr::Kind::Mul:
		return mul(child(0), child(1));
	case Expr::Kind::Bullet:
		return to_basis(bullet(e.index, child(0), child(1)), Basis::M);
	case Expr::Kind::HatBullet:
		return hat_bullet(e.index, child(0), child(1));
	case Expr::Kind::Add:
		return to_basis(child(0) + child(1), Basis::M);
	case Expr::Kind::Sub:
		return to_basis(child(0) - child(1), Basis::M);
	case Expr::Kind::Neg:
		return -child(0);
	case Expr::Kind::Group:
		return child(0);
	}
	throw std::logic_error("eval: unknown node");
}

std::string to_string(const Expr& e)
{
	auto bin = [&](const std::string& op) {
		return "(" + to_string(e.children[0]) + " " + op + " " + to_string(e.children[1]) + ")";
	};
	switch (e.kind) {
	case Expr::Kind::Basis:
		return std::string(basis_name(e.basis)) + to_string(e.composition);
	case Expr::Kind::Literal:
		return e.value.get_str();
	case Expr::Kind::PowerSum:
		return "p" + std::to_string(e.index);
	case Expr::Kind::Complete:
		return "h" + std::to_string(e.index);
	case Expr::Kind::Mul:
		return bin("*");
	case Expr::Kind::Bullet:
		return bin("." + std::to_string(e.index) + ".");
	case Expr::Kind::HatBullet:
		return bin("^" + std::to_string(e.index) + "^");
	case Expr::Kind::Add:
		return bin("+");
	case Expr::Kind::Sub:
		return bin("-");
	case Expr::Kind::Neg:
		return "(-" + to_string(e.children[0]) + ")";
	case Expr::Kind::Group:
		return to_string(e.children[0]);
	}
	return "?";
}

} // namespace qsym
