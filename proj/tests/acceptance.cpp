// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "qsym/hopf.hpp"
#include "qsym/kp.hpp"
#include "qsym/oracle.hpp"
#include "qsym/products.hpp"
#include "qsym/qss.hpp"
#include "qsym/sigma.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace qsym;

namespace {

Element M(const Composition& c) { return monomial(Basis::M, c); }
Element F(const Composition& c) { return monomial(Basis::F, c); }
const Element one = Element::one();

// Counts checks and remembers the first failure.
struct Checker {
	long checks = 0;
	std::string failure;

	void operator()(bool ok, const std::string& what)
	{
		++checks;
		if (!ok && failure.empty())
			failure = what;
	}
	bool ok() const { return failure.empty(); }
};

std::vector<std::pair<Composition, Composition>> pairs_total(int w)
{
	std::vector<std::pair<Composition, Composition>> out;
	const auto all = enumerate_compositions(w);
	for (const auto& a : all)
		for (const auto& b : all)
			if (a.weight() + b.weight() <= w)
				out.emplace_back(a, b);
	return out;
}

std::string ab(const Composition& a, const Composition& b) { return to_string(a) + " " + to_string(b); }

void oracle_products(Checker& c)
{
	for (int k = 1; k <= 3; ++k)
		for (const auto& [a, b] : pairs_total(4)) {
			c(expand(bullet(k, M(a), M(b)), 10) == expand_bullet(k, M(a), M(b), 10), "bullet " + ab(a, b));
			c(expand(hat_bullet(k, M(a), M(b)), 10) == expand_hat_bullet(k, M(a), M(b), 10), "hat " + ab(a, b));
		}
}

void oracle_shuffle(Checker& c)
{
	for (const auto& [a, b] : pairs_total(4))
		c(expand(mul(M(a), M(b)), 8) == expand(M(a), 8) * expand(M(b), 8), ab(a, b));
}

void weak_nonassoc(Checker& c)
{
	const auto all = enumerate_compositions(2);
	for (int k = 1; k <= 2; ++k)
		for (int m = 1; m <= 2; ++m)
			for (int n = 1; n <= 2; ++n)
				for (const auto& a : all)
					for (const auto& b : all)
						for (const auto& cc : all)
							for (const auto& d : all) {
								const Element bc = bullet(m, M(b), M(cc));
								c(bullet(n, bullet(k, M(a), bc), M(d)) == bullet(k, M(a), bullet(n, bc, M(d))),
								  ab(a, b) + " " + ab(cc, d));
							}
}

void lemma_iter(Checker& c)
{
	const auto all = enumerate_compositions(4);
	for (int k = 1; k <= 3; ++k)
		for (int l = 1; l <= 3; ++l)
			for (const auto& a : all)
				for (const auto& b : all)
					c(bullet(k, M(a), bullet(l, one, M(b))) - bullet(l, bullet(k, M(a), one), M(b)) == bullet(k + l, M(a), M(b)),
					  ab(a, b));
}

void generation(Checker& c)
{
	for (const auto& comp : enumerate_compositions(6)) {
		if (comp.empty())
			continue;
		Element e = one;
		for (int part : comp)
			e = bullet(part, e, one);
		c(e == M(comp), to_string(comp));
		// the same element from the first product alone
		Element r = one;
		for (int part : comp)
			r = bullet_by_first_product(part, r, one);
		c(r == M(comp), to_string(comp));
	}
}

void derivation_and_distributivity(Checker& c)
{
	for (int n = 1; n <= 3; ++n)
		for (const auto& [a, b] : pairs_total(4))
			c(coproduct(bullet(n, M(a), M(b))) ==
			      tensor_bullet_right(coproduct(M(a)), n, M(b)) + tensor_bullet_left(M(a), n, coproduct(M(b))),
			  "Delta " + ab(a, b));
	const auto all = enumerate_compositions(3);
	for (int m = 1; m <= 3; ++m)
		for (const auto& a : all)
			for (const auto& b : all)
				for (const auto& x : all) {
					if (a.weight() + b.weight() + x.weight() > 3)
						continue;
					c(mul(M(x), bullet(m, M(a), M(b))) == m_k(m, tensor_mul(coproduct(M(x)), pure_tensor(M(a), M(b)))),
					  "distr " + ab(a, b) + " " + to_string(x));
				}
}

void product_recursion(Checker& c)
{
	const auto all = enumerate_compositions(4);
	for (const auto& ck : all) {
		if (ck.empty())
			continue;
		const Tensor left = pure_tensor(M(ck.slice(0, ck.length() - 1)), one);
		for (const auto& a : all)
			c(mul(M(ck), M(a)) == m_k(ck.back(), tensor_mul(left, coproduct(M(a)))), ab(ck, a));
	}
}

void antipode_checks(Checker& c)
{
	const auto id = [](const Element& e) { return e; };
	const auto S = [](const Element& e) { return antipode(e); };
	for (const auto& x : enumerate_compositions(6)) {
		const Tensor d = coproduct(M(x));
		const Element unit = Element::constant(counit(M(x)));
		c(multiply_legs(d, id, S) == unit, "right axiom " + to_string(x));
		c(multiply_legs(d, S, id) == unit, "left axiom " + to_string(x));
		c(antipode(antipode(M(x))) == M(x), "S^2 " + to_string(x));
		if (!x.empty())
			c(antipode(F(x)) == antipode_F(x), "S(F) " + to_string(x));
	}
	const auto small = enumerate_compositions(4);
	for (int n = 1; n <= 3; ++n)
		for (const auto& a : small)
			for (const auto& b : small)
				c(antipode(bullet(n, M(a), M(b))) == -bullet(n, antipode(M(b)), antipode(M(a))), "anti " + ab(a, b));
}

void f_basis(Checker& c)
{
	for (const auto& x : enumerate_compositions(6)) {
		if (x.empty())
			continue;
		// F_A . F_(m)B = F_A(m+1)B for every split of x with a part >= 2
		for (std::size_t i = 0; i < x.length(); ++i) {
			if (x[i] < 2)
				continue;
			const Composition a = x.slice(0, i);
			const Composition mb = concat(Composition{x[i] - 1}, x.slice(i + 1, x.length() - i - 1));
			c(expand(bullet(1, to_basis(F(a), Basis::M), to_basis(F(mb), Basis::M)), 7) == expand(F(x), 7),
			  "rule " + to_string(x));
		}
		// elementary pieces and the full factorization
		const auto blocks = elementary_decompose(x);
		if (blocks.size() == 1)
			c(elementary_F(blocks[0].m, blocks[0].n) == F(x), "LR " + to_string(x));
		const auto factors = factorize_F(x);
		Element prod = to_basis(factors.front(), Basis::M);
		for (std::size_t i = 1; i < factors.size(); ++i)
			prod = bullet(1, prod, to_basis(factors[i], Basis::M));
		c(expand(prod, 7) == expand(F(x), 7), "factorization " + to_string(x));
	}
	// F_(3,1) by direct summation in four variables
	const Polynomial truth = expand(F({3, 1}), 4);
	c(expand(to_basis(F({3, 1}), Basis::M), 4) == truth, "F_(3,1) general");
	c(!(expand(M({3, 1}) + M({2, 1, 1}) + M({1, 1, 1, 1}), 4) == truth), "F_(3,1) without M_(1,2,1)");
}

void kp_checks(Checker& c)
{
	for (int m = 1; m <= 5; ++m)
		for (int n = 1; n <= 5; ++n) {
			const IdentitySides s = kp_identity(m, n);
			const std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(n);
			c((s.lhs - s.rhs).is_zero(), where);
			if (m <= 3 && n <= 3)
				c(expand(s.lhs - s.rhs, m + n + 2).is_zero(), "certificate " + where);
		}
	const Element p1 = power_sum(1), p2 = power_sum(2), p3 = power_sum(3);
	const Element lhs = Rational(4) * mul(p1, p3) - Rational(3) * mul(p2, p2) - mul(mul(p1, p1), mul(p1, p1));
	const Element rhs = Rational(-6) * mul(p1, bullet(1, p1, p1)) + Rational(6) * (bullet(1, p1, p2) - bullet(1, p2, p1));
	c((lhs - rhs).is_zero(), "classical");
	c(expand(lhs, 4) == expand(rhs, 4), "classical certificate");
	const SymIdentity t = kp_classical_tree();
	c(render_equation(sigma(t.lhs), sigma(t.rhs)) ==
	      "4*phi_{t1,t3} - 3*phi_{t2,t2} - phi_{t1,t1,t1,t1} = "
	      "-6*phi_{t1}*phi_{t2} + 6*phi_{t1}*phi_{t1,t1} + 6*phi_{t2}*phi_{t1} + 6*phi_{t1,t1}*phi_{t1}",
	  "KP equation text");
}

void newton(Checker& c)
{
	for (int n = 0; n <= 6; ++n) {
		Element sum(Basis::M);
		for (const auto& x : compositions_of(n))
			sum.add_term(x, 1);
		c(complete_h(n) == sum, "h_" + std::to_string(n));
		c(evaluate_power_sums(complete_h_power_sums(n)) == sum, "Schur " + std::to_string(n));
	}
}

void qss(Checker& c)
{
	for (int n = 1; n <= 4; ++n) {
		const QssSides s = qss_kp_sides(n);
		c(s.lhs == s.rhs, "KP N=" + std::to_string(n));
		for (const auto& x : enumerate_compositions(4))
			c(qss_M(x, n).drop_y() == expand(M(x), n), "y=0 " + to_string(x));
		for (int r = 1; r <= 3; ++r)
			for (int q = 1; q <= 3; ++q)
				c(qss_bullet(1, qss_p(r, n), qss_p(q, n)) == qss_pbup_direct(r, q, n), "pbup");
	}
	for (const auto& g : bullet_generated(4, 4))
		for (int i = 1; i <= 4; ++i)
			c(t_substitution_check(g.value, i), "t " + g.expression);
}

std::string run_cli(const std::string& args)
{
	std::string out;
	FILE* pipe = popen((std::string(QSYM_CLI_PATH) + " " + args).c_str(), "r");
	if (!pipe)
		return "popen failed";
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
		out.append(buf, n);
	const int status = pclose(pipe);
	return out + "\nstatus " + std::to_string(status);
}

void determinism(Checker& c)
{
	const std::string first = run_cli("verify all");
	const std::string second = run_cli("verify all");
	c(first.find("total: ") != std::string::npos, "report produced");
	c(first == second, "byte-identical text reports");
	c(run_cli("--json verify all") == run_cli("--json verify all"), "byte-identical json reports");
}

} // namespace

int main()
{
	struct Criterion {
		const char* name;
		double limit_seconds;
		std::function<void(Checker&)> run;
	};
	const std::vector<Criterion> criteria = {
	    {"products agree with direct summation (N=10, weight<=4, k<=3)", 30, oracle_products},
	    {"quasi-shuffle agrees with polynomial product (N=8, weight<=4)", 30, oracle_shuffle},
	    {"weak nonassociativity (weight<=2, k,m,n<=2)", 60, weak_nonassoc},
	    {"a .k. (1 .l. b) - (a .k. 1) .l. b = a .(k+l). b (weight<=4, k,l<=3)", 0, lemma_iter},
	    {"every M_C of weight<=6 is generated from 1", 0, generation},
	    {"coproduct derivation (weight<=4, n<=3) and distributivity (weight<=3, m<=3)", 0, derivation_and_distributivity},
	    {"M_C(k) a = m_k((M_C (x) 1) Delta(a)) (weight<=4)", 0, product_recursion},
	    {"antipode axioms, involution, anti-homomorphism and F_C formula", 0, antipode_checks},
	    {"F basis rule, elementary pieces and factorization (weight<=6)", 0, f_basis},
	    {"KP identities m,n<=5 with certificates, classical form", 120, kp_checks},
	    {"h_n as sum of M_C and via elementary Schur (n<=6)", 0, newton},
	    {"two-alphabet KP, y=0 specialization, t cancellation, p_r . p_s", 120, qss},
	    {"verify all is deterministic", 0, determinism},
	};
	bool all_ok = true;
	int index = 0;
	for (const auto& cr : criteria) {
		Checker c;
		const auto start = std::chrono::steady_clock::now();
		cr.run(c);
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		bool ok = c.ok() && c.checks > 0;
		std::string note = c.failure;
		if (cr.limit_seconds > 0 && secs > cr.limit_seconds) {
			ok = false;
			note = "time limit exceeded";
		}
		all_ok = all_ok && ok;
		char timing[32];
		std::snprintf(timing, sizeof timing, "%.2fs", secs);
		std::cout << (ok ? "PASS" : "FAIL") << " [" << ++index << "] " << cr.name << " (" << c.checks << " checks, " << timing
		          << ")";
		if (!ok)
			std::cout << ": " << note;
		std::cout << '\n';
	}
	return all_ok ? 0 : 1;
}
