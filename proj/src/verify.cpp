#include "qsym/verify.hpp"

#include "qsym/hopf.hpp"
#include "qsym/kp.hpp"
#include "qsym/oracle.hpp"
#include "qsym/products.hpp"
#include "qsym/qss.hpp"
#include "qsym/sigma.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <stdexcept>

namespace qsym {

bool Report::ok() const noexcept
{
	return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
}

namespace {

// Appends a result row on construction so rows keep declaration order.
class Tally {
public:
	Tally(Report& report, std::string suite, std::string identity) : report_(report), index_(report.results.size())
	{
		IdentityResult r;
		r.suite = std::move(suite);
		r.identity = std::move(identity);
		report_.results.push_back(std::move(r));
	}
	Tally(const Tally&) = delete;
	Tally& operator=(const Tally&) = delete;

	void check(bool ok, const std::function<std::string()>& describe)
	{
		IdentityResult& r = report_.results[index_];
		if (ok) {
			++r.passed;
			return;
		}
		if (r.failed++ == 0)
			r.first_failure = describe();
	}

private:
	Report& report_;
	std::size_t index_;
};

Element M(const Composition& c) { return monomial(Basis::M, c); }
Element Mt(const Composition& c) { return monomial(Basis::Mt, c); }
Element F(const Composition& c) { return monomial(Basis::F, c); }

std::string show(const Element& e) { return to_string(to_basis(e, Basis::M)); }

std::string bound(const char* what, int v) { return std::string(what) + "<=" + std::to_string(v); }

// Pairs of compositions with total weight <= w.
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

std::vector<Composition> nonempty(int w)
{
	auto all = enumerate_compositions(w);
	all.erase(all.begin());
	return all;
}

void shuffle_oracle(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(4);
	const int n = 8;
	const std::string suite = "shuffle-oracle";
	{
		Tally t(rep, suite, "expand(M_A M_B) = expand(M_A) expand(M_B), " + bound("|A|+|B|", w) + ", N=" + std::to_string(n));
		for (const auto& [a, b] : pairs_total(w))
			t.check(expand(mul(M(a), M(b)), n) == poly_mul(expand(M(a), n), expand(M(b), n)),
			        [&] { return "A=" + to_string(a) + " B=" + to_string(b); });
	}
	{
		Tally t(rep, suite, "commutativity and unit, " + bound("|A|+|B|", w));
		for (const auto& [a, b] : pairs_total(w)) {
			t.check(mul(M(a), M(b)) == mul(M(b), M(a)), [&] { return "A=" + to_string(a) + " B=" + to_string(b); });
			t.check(mul(Element::one(), M(a)) == M(a), [&] { return "unit on " + to_string(a); });
		}
	}
	{
		Tally t(rep, suite, "associativity, " + bound("|A|+|B|+|C|", w));
		const auto all = enumerate_compositions(w);
		for (const auto& a : all)
			for (const auto& b : all)
				for (const auto& c : all) {
					if (a.weight() + b.weight() + c.weight() > w)
						continue;
					t.check(mul(mul(M(a), M(b)), M(c)) == mul(M(a), mul(M(b), M(c))), [&] {
						return "A=" + to_string(a) + " B=" + to_string(b) + " C=" + to_string(c);
					});
				}
	}
}

void bullet_oracle(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(4);
	const int kmax = o.max_k.value_or(3);
	const int n = 10;
	const std::string suite = "bullet-oracle";
	const auto pairs = pairs_total(w);
	auto where = [](int k, const Composition& a, const Composition& b) {
		return "k=" + std::to_string(k) + " A=" + to_string(a) + " B=" + to_string(b);
	};
	{
		Tally t(rep, suite, "M_A .k. M_B against direct summation, " + bound("|A|+|B|", w) + " " + bound("k", kmax) + ", N=10");
		for (int k = 1; k <= kmax; ++k)
			for (const auto& [a, b] : pairs)
				t.check(expand(bullet(k, M(a), M(b)), n) == expand_bullet(k, M(a), M(b), n), [&] { return where(k, a, b); });
	}
	{
		Tally t(rep, suite, "M_A ^k^ M_B against direct summation, " + bound("|A|+|B|", w) + " " + bound("k", kmax) + ", N=10");
		for (int k = 1; k <= kmax; ++k)
			for (const auto& [a, b] : pairs)
				t.check(expand(hat_bullet(k, M(a), M(b)), n) == expand_hat_bullet(k, M(a), M(b), n),
				        [&] { return where(k, a, b); });
	}
	{
		Tally t(rep, suite, "mirror: a ^k^ b = rho(rho(b) .k. rho(a))");
		for (int k = 1; k <= kmax; ++k)
			for (const auto& [a, b] : pairs)
				t.check(hat_bullet(k, M(a), M(b)) == reverse_map(bullet(k, reverse_map(M(b)), reverse_map(M(a)))),
				        [&] { return where(k, a, b); });
	}
	{
		Tally t(rep, suite, "Mt closed form agrees with the M rule");
		for (int k = 1; k <= kmax; ++k)
			for (const auto& [a, b] : pairs)
				t.check(bullet(k, Mt(a), Mt(b)) == bullet(k, to_basis(Mt(a), Basis::M), to_basis(Mt(b), Basis::M)),
				        [&] { return where(k, a, b); });
	}
	{
		Tally t(rep, suite, "F closed form (k=1) agrees with the M rule");
		for (const auto& [a, b] : pairs)
			t.check(bullet(1, F(a), F(b)) == bullet(1, to_basis(F(a), Basis::M), to_basis(F(b), Basis::M)),
			        [&] { return where(1, a, b); });
	}
	{
		Tally t(rep, suite, "grading: deg(M_A .k. M_B) = |A|+|B|+k");
		for (int k = 1; k <= kmax; ++k)
			for (const auto& [a, b] : pairs) {
				const Element r = bullet(k, M(a), M(b));
				const bool homogeneous = std::all_of(r.terms().begin(), r.terms().end(), [&](const auto& kv) {
					return kv.first.weight() == a.weight() + b.weight() + k;
				});
				t.check(homogeneous && !r.is_zero(), [&] { return where(k, a, b); });
			}
	}
}

void weak_nonassoc(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(2);
	const int kmax = o.max_k.value_or(2);
	const std::string suite = "weak-nonassoc";
	const auto all = enumerate_compositions(w);
	{
		Tally t(rep, suite, "(a .k. (b .m. c)) .n. d = a .k. ((b .m. c) .n. d), " + bound("weight", w) + " " + bound("k,m,n", kmax));
		for (int k = 1; k <= kmax; ++k)
			for (int m = 1; m <= kmax; ++m)
				for (int n = 1; n <= kmax; ++n)
					for (const auto& a : all)
						for (const auto& b : all)
							for (const auto& c : all)
								for (const auto& d : all) {
									const Element bc = bullet(m, M(b), M(c));
									t.check(bullet(n, bullet(k, M(a), bc), M(d)) == bullet(k, M(a), bullet(n, bc, M(d))), [&] {
										return "k,m,n=" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) +
										       " a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c) + " d=" + to_string(d);
									});
								}
	}
	{
		Tally t(rep, suite, "associative when the middle factor has zero counit");
		for (int k = 1; k <= kmax; ++k)
			for (int l = 1; l <= kmax; ++l)
				for (const auto& a : all)
					for (const auto& b : all)
						for (const auto& c : all) {
							if (b.empty())
								continue;
							t.check(bullet(l, bullet(k, M(a), M(b)), M(c)) == bullet(k, M(a), bullet(l, M(b), M(c))), [&] {
								return "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
							});
						}
	}
	{
		// Negative control: the products are not associative in general.
		Tally t(rep, suite, "nonassociativity witness (1 .1. 1) .1. 1 != 1 .1. (1 .1. 1)");
		const Element one = Element::one();
		t.check(!(bullet(1, bullet(1, one, one), one) == bullet(1, one, bullet(1, one, one))), [] { return "associator vanished"; });
	}
}

void lemma_iter(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(4);
	const int kmax = o.max_k.value_or(3);
	const std::string suite = "lemma-iter";
	const Element one = Element::one();
	const auto all = enumerate_compositions(w);
	Tally t(rep, suite, "a .k. (1 .l. b) - (a .k. 1) .l. b = a .(k+l). b, " + bound("weight", w) + " " + bound("k,l", kmax));
	for (int k = 1; k <= kmax; ++k)
		for (int l = 1; l <= kmax; ++l)
			for (const auto& a : all)
				for (const auto& b : all) {
					const Element lhs = bullet(k, M(a), bullet(l, one, M(b))) - bullet(l, bullet(k, M(a), one), M(b));
					t.check(lhs == bullet(k + l, M(a), M(b)), [&] {
						return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " a=" + to_string(a) + " b=" + to_string(b);
					});
				}
}

void generation(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(6);
	const std::string suite = "generation";
	const Element one = Element::one();
	Tally t(rep, suite, "(((1 .n1. 1) .n2. 1) ...) .nk. 1 = M_(n1..nk) with .n. reduced to .1., " + bound("weight", w));
	for (const auto& c : nonempty(w)) {
		Element direct = one, reduced = one;
		for (int part : c) {
			direct = bullet(part, direct, one);
			reduced = bullet_by_first_product(part, reduced, one);
		}
		t.check(direct == M(c) && reduced == M(c), [&] { return "C=" + to_string(c) + " got " + show(reduced); });
	}
}

void coproduct_suite(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(6);
	const std::string suite = "coproduct";
	const auto all = enumerate_compositions(w);
	{
		Tally t(rep, suite, "coassociativity, " + bound("weight", w));
		for (const auto& c : all) {
			// Both sides as triples (A, B, C); deconcatenation makes these the cut points.
			std::map<std::tuple<Composition, Composition, Composition>, Rational> left, right;
			for (const auto& [key, r] : coproduct(M(c)).terms()) {
				for (const auto& [k2, r2] : coproduct(M(key.first)).terms())
					left[{k2.first, k2.second, key.second}] += r * r2;
				for (const auto& [k2, r2] : coproduct(M(key.second)).terms())
					right[{key.first, k2.first, k2.second}] += r * r2;
			}
			t.check(left == right, [&] { return "C=" + to_string(c); });
		}
	}
	{
		Tally t(rep, suite, "counit laws (eps x id) Delta = id = (id x eps) Delta");
		for (const auto& c : all) {
			const Tensor d = coproduct(M(c));
			t.check(counit_left(d) == M(c) && counit_right(d) == M(c), [&] { return "C=" + to_string(c); });
		}
	}
	{
		Tally t(rep, suite, "Delta(Mt_C) = sum over AB=C of Mt_A (x) Mt_B");
		for (const auto& c : all) {
			Tensor expected;
			for (std::size_t cut = 0; cut <= c.length(); ++cut)
				expected += pure_tensor(Mt(c.slice(0, cut)), Mt(c.slice(cut, c.length() - cut)));
			t.check(coproduct(Mt(c)) == expected, [&] { return "C=" + to_string(c); });
		}
	}
	{
		Tally t(rep, suite, "counit is multiplicative for the ordinary product");
		for (const auto& [a, b] : pairs_total(w)) {
			const Element x = M(a) + Element::constant(2), y = M(b) + Element::constant(3);
			t.check(counit(mul(x, y)) == counit(x) * counit(y), [&] { return "A=" + to_string(a) + " B=" + to_string(b); });
		}
	}
}

void delta_derivation(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(4);
	const int kmax = o.max_k.value_or(3);
	const std::string suite = "delta-derivation";
	const auto pairs = pairs_total(w);
	{
		Tally t(rep, suite, "Delta(a .n. b) = Delta(a) .n. b + a .n. Delta(b), " + bound("|a|+|b|", w) + " " + bound("n", kmax));
		for (int n = 1; n <= kmax; ++n)
			for (const auto& [a, b] : pairs) {
				const Tensor lhs = coproduct(bullet(n, M(a), M(b)));
				const Tensor rhs = tensor_bullet_right(coproduct(M(a)), n, M(b)) + tensor_bullet_left(M(a), n, coproduct(M(b)));
				t.check(lhs == rhs, [&] { return "n=" + std::to_string(n) + " a=" + to_string(a) + " b=" + to_string(b); });
			}
	}
	{
		Tally t(rep, suite, "delta_n(a) = p_n a = m_n(Delta(a))");
		for (int n = 1; n <= kmax; ++n)
			for (const auto& c : enumerate_compositions(w))
				t.check(derivation_delta(n, M(c)) == m_k(n, coproduct(M(c))),
				        [&] { return "n=" + std::to_string(n) + " C=" + to_string(c); });
	}
	{
		Tally t(rep, suite, "delta_n(a .k. b) = delta_n(a) .k. b + a .k. delta_n(b)");
		for (int n = 1; n <= kmax; ++n)
			for (int k = 1; k <= kmax; ++k)
				for (const auto& [a, b] : pairs) {
					const Element lhs = derivation_delta(n, bullet(k, M(a), M(b)));
					const Element rhs = bullet(k, derivation_delta(n, M(a)), M(b)) + bullet(k, M(a), derivation_delta(n, M(b)));
					t.check(lhs == rhs, [&] {
						return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " a=" + to_string(a) + " b=" + to_string(b);
					});
				}
	}
	{
		Tally t(rep, suite, "delta_m delta_n = delta_n delta_m");
		for (int m = 1; m <= kmax; ++m)
			for (int n = 1; n <= kmax; ++n)
				for (const auto& c : enumerate_compositions(w))
					t.check(derivation_delta(m, derivation_delta(n, M(c))) == derivation_delta(n, derivation_delta(m, M(c))),
					        [&] { return "C=" + to_string(c); });
	}
}

void bimodule(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(2);
	const int kmax = o.max_k.value_or(2);
	const std::string suite = "bimodule";
	const auto all = enumerate_compositions(w);
	const Element one = Element::one();
	std::vector<std::pair<std::string, Tensor>> tensors;
	for (const auto& [a, b] : pairs_total(w))
		tensors.emplace_back(to_string(a) + "(x)" + to_string(b), pure_tensor(M(a), M(b)));
	auto where = [](int k, int l, const Composition& a, const std::string& m) {
		return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " a=" + to_string(a) + " m=" + m;
	};
	Tally bi(rep, suite, "a .k. (m .l. b) = (a .k. m) .l. b");
	Tally left(rep, suite, "a .k. (b .l. m) = (a .k. b) .l. m for counit-zero b");
	Tally right(rep, suite, "(m .k. b) .l. a = m .k. (b .l. a) for counit-zero b");
	Tally unit_left(rep, suite, "a .k. (1 .l. m) = (a .k. 1) .l. m + a .(k+l). m");
	Tally unit_right(rep, suite, "(m .k. 1) .l. a = m .k. (1 .l. a) - m .(k+l). a");
	for (int k = 1; k <= kmax; ++k)
		for (int l = 1; l <= kmax; ++l)
			for (const auto& a : all)
				for (const auto& [name, m] : tensors) {
					auto w_ = [&] { return where(k, l, a, name); };
					for (const auto& b : all) {
						bi.check(tensor_bullet_left(M(a), k, tensor_bullet_right(m, l, M(b))) ==
						             tensor_bullet_right(tensor_bullet_left(M(a), k, m), l, M(b)),
						         w_);
						if (b.empty())
							continue;
						left.check(tensor_bullet_left(M(a), k, tensor_bullet_left(M(b), l, m)) ==
						               tensor_bullet_left(bullet(k, M(a), M(b)), l, m),
						           w_);
						right.check(tensor_bullet_right(tensor_bullet_right(m, k, M(b)), l, M(a)) ==
						                tensor_bullet_right(m, k, bullet(l, M(b), M(a))),
						            w_);
					}
					unit_left.check(tensor_bullet_left(M(a), k, tensor_bullet_left(one, l, m)) ==
					                    tensor_bullet_left(bullet(k, M(a), one), l, m) + tensor_bullet_left(M(a), k + l, m),
					                w_);
					unit_right.check(tensor_bullet_right(tensor_bullet_right(m, k, one), l, M(a)) ==
					                     tensor_bullet_right(m, k, bullet(l, one, M(a))) - tensor_bullet_right(m, k + l, M(a)),
					                 w_);
				}
}

void distributivity(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(3);
	const int kmax = o.max_k.value_or(3);
	const std::string suite = "distributivity";
	const auto all = enumerate_compositions(w);
	Tally t(rep, suite, "c (a .m. b) = m_m(Delta(c) (a (x) b)), " + bound("|a|+|b|+|c|", w) + " " + bound("m", kmax));
	for (int m = 1; m <= kmax; ++m)
		for (const auto& a : all)
			for (const auto& b : all)
				for (const auto& c : all) {
					if (a.weight() + b.weight() + c.weight() > w)
						continue;
					const Element lhs = mul(M(c), bullet(m, M(a), M(b)));
					const Element rhs = m_k(m, tensor_mul(coproduct(M(c)), pure_tensor(M(a), M(b))));
					t.check(lhs == rhs, [&] {
						return "m=" + std::to_string(m) + " a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
					});
				}
}

void mcma(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(4);
	const std::string suite = "mcma";
	Tally t(rep, suite, "M_C(k) a = m_k((M_C (x) 1) Delta(a)), " + bound("|C(k)|,|a|", w));
	const auto all = enumerate_compositions(w);
	for (const auto& ck : nonempty(w)) {
		const Composition c = ck.slice(0, ck.length() - 1);
		const int k = ck.back();
		const Tensor left = pure_tensor(M(c), Element::one());
		for (const auto& a : all)
			t.check(mul(M(ck), M(a)) == m_k(k, tensor_mul(left, coproduct(M(a)))),
			        [&] { return "C(k)=" + to_string(ck) + " a=" + to_string(a); });
	}
}

void antipode_suite(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(6);
	const int kmax = o.max_k.value_or(3);
	const std::string suite = "antipode";
	const auto all = enumerate_compositions(w);
	const auto id = [](const Element& e) { return e; };
	const auto S = [](const Element& e) { return antipode(e); };
	{
		Tally t(rep, suite, "mu (id x S) Delta = eps 1 = mu (S x id) Delta, " + bound("weight", w));
		for (const auto& c : all) {
			const Tensor d = coproduct(M(c));
			const Element unit = Element::constant(counit(M(c)));
			t.check(multiply_legs(d, id, S) == unit && multiply_legs(d, S, id) == unit, [&] { return "C=" + to_string(c); });
		}
	}
	{
		Tally t(rep, suite, "S^2 = id");
		for (const auto& c : all)
			t.check(antipode(antipode(M(c))) == M(c), [&] { return "C=" + to_string(c); });
	}
	{
		const int pw = std::min(w, 4);
		Tally t(rep, suite, "S(a .n. b) = -S(b) .n. S(a), " + bound("|a|,|b|", pw) + " " + bound("n", kmax));
		const auto small = enumerate_compositions(pw);
		for (int n = 1; n <= kmax; ++n)
			for (const auto& a : small)
				for (const auto& b : small)
					t.check(antipode(bullet(n, M(a), M(b))) == -bullet(n, antipode(M(b)), antipode(M(a))),
					        [&] { return "n=" + std::to_string(n) + " a=" + to_string(a) + " b=" + to_string(b); });
	}
}

void antipode_f(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(6);
	const std::string suite = "antipode-F";
	{
		Tally t(rep, suite, "S(F_C) = (-1)^|C| F_omega(C), " + bound("weight", w));
		for (const auto& c : nonempty(w))
			t.check(antipode(F(c)) == antipode_F(c), [&] { return "C=" + to_string(c) + " omega=" + to_string(omega(c)); });
	}
	{
		Tally t(rep, suite, "omega is a weight-preserving involution");
		for (const auto& c : nonempty(w))
			t.check(omega(omega(c)) == c && omega(c).weight() == c.weight(), [&] { return "C=" + to_string(c); });
	}
	{
		Tally t(rep, suite, "S(F_(m+1,1^n)) = (-1)^(m+1+n) F_(n+1,1^m)");
		for (int m = 0; m < w; ++m)
			for (int n = 0; m + n + 1 <= w; ++n) {
				const Element expected = Rational((m + 1 + n) % 2 == 0 ? 1 : -1) * F(concat(Composition{n + 1}, ones(m)));
				t.check(antipode(elementary_F(m, n)) == expected, [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
			}
	}
}

void f_basis(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(6);
	const std::string suite = "f-basis";
	const auto all = enumerate_compositions(w);
	{
		Tally t(rep, suite, "base change round trips and matches direct summation, " + bound("weight", w));
		const int n = std::max(w, 1);
		for (const auto& c : all) {
			for (Basis from : {Basis::M, Basis::Mt, Basis::F}) {
				const Element e = monomial(from, c);
				bool ok = expand(to_basis(e, Basis::M), n) == expand(e, n);
				for (Basis via : {Basis::M, Basis::Mt, Basis::F})
					ok = ok && to_basis(to_basis(e, via), from).terms() == e.terms();
				t.check(ok, [&] { return std::string(basis_name(from)) + to_string(c); });
			}
		}
	}
	{
		Tally t(rep, suite, "F_A . F_(m)B = F_A(m+1)B, " + bound("|A|+m+|B|+1", w));
		for (const auto& [a, mb] : pairs_total(w - 1)) {
			if (mb.empty())
				continue;
			const Composition expected = concat(a.appended(mb.front() + 1), mb.slice(1, mb.length() - 1));
			const Element viaM = bullet(1, to_basis(F(a), Basis::M), to_basis(F(mb), Basis::M));
			t.check(viaM == F(expected), [&] { return "A=" + to_string(a) + " (m)B=" + to_string(mb); });
		}
	}
	{
		Tally t(rep, suite, "F_(m+1,1^n) = L^m R^n (1 . 1)");
		for (int m = 0; m < w; ++m)
			for (int n = 0; m + n + 1 <= w; ++n)
				t.check(elementary_F(m, n) == F(concat(Composition{m + 1}, ones(n))),
				        [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
	}
	{
		Tally t(rep, suite, "F_C is the product of its elementary factors (left and right bracketing)");
		for (const auto& c : nonempty(w)) {
			auto factors = factorize_F(c);
			for (auto& f : factors)
				f = to_basis(f, Basis::M);
			Element left = factors.front();
			for (std::size_t i = 1; i < factors.size(); ++i)
				left = bullet(1, left, factors[i]);
			Element right = factors.back();
			for (std::size_t i = factors.size() - 1; i-- > 0;)
				right = bullet(1, factors[i], right);
			t.check(left == F(c) && right == F(c), [&] { return "C=" + to_string(c); });
		}
	}
	{
		Tally t(rep, suite, "F_(3,1) expansion includes M_(1,2,1) (direct summation, N=4)");
		const Element general = to_basis(F({3, 1}), Basis::M);
		const Element three_terms = M({3, 1}) + M({2, 1, 1}) + M({1, 1, 1, 1});
		const Polynomial truth = expand(F({3, 1}), 4);
		t.check(expand(general, 4) == truth && !(expand(three_terms, 4) == truth) && general.coefficient({1, 2, 1}) == 1,
		        [&] { return "F_(3,1) = " + show(general); });
	}
}

void newton(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(6);
	const std::string suite = "newton";
	{
		Tally t(rep, suite, "h_n = Mt_(1^n) = sum over |C|=n of M_C, " + bound("n", w));
		for (int n = 0; n <= w; ++n) {
			Element sum(Basis::M);
			for (const auto& c : compositions_of(n))
				sum.add_term(c, 1);
			t.check(complete_h(n) == sum && complete_h(n) == Mt(ones(n)), [&] { return "n=" + std::to_string(n); });
		}
	}
	{
		Tally t(rep, suite, "h_n = s_n(p1, p2/2, p3/3, ...)");
		for (int n = 0; n <= w; ++n)
			t.check(evaluate_power_sums(complete_h_power_sums(n)) == complete_h(n), [&] { return "n=" + std::to_string(n); });
	}
	{
		Tally t(rep, suite, "Delta(h_n) = sum_k h_k (x) h_(n-k)");
		for (int n = 0; n <= w; ++n) {
			Tensor expected;
			for (int k = 0; k <= n; ++k)
				expected += pure_tensor(complete_h(k), complete_h(n - k));
			t.check(coproduct(complete_h(n)) == expected, [&] { return "n=" + std::to_string(n); });
		}
	}
	{
		const int mw = std::min(w, 4);
		Tally t(rep, suite, "h_m h_(n+1) = sum_{k=0..m} h_k . (h_(m-k) h_n), " + bound("m,n", mw));
		for (int m = 1; m <= mw; ++m)
			for (int n = 1; n <= mw; ++n) {
				Element rhs(Basis::M);
				for (int k = 0; k <= m; ++k)
					rhs += bullet(1, complete_h(k), mul(complete_h(m - k), complete_h(n)));
				t.check(mul(complete_h(m), complete_h(n + 1)) == rhs,
				        [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
			}
	}
}

void kp_suite(Report& rep, const SuiteOptions& o)
{
	const int w = o.max_weight.value_or(5);
	const std::string suite = "kp";
	std::map<std::pair<int, int>, IdentitySides> ids;
	for (int m = 1; m <= w; ++m)
		for (int n = 1; n <= w; ++n)
			ids.emplace(std::pair{m, n}, kp_identity(m, n));
	{
		Tally t(rep, suite, "KP identity (m,n), " + bound("m,n", w));
		for (const auto& [mn, s] : ids)
			t.check(s.holds(), [&] { return "m=" + std::to_string(mn.first) + " n=" + std::to_string(mn.second); });
	}
	{
		Tally t(rep, suite, "both sides change sign under m <-> n");
		for (const auto& [mn, s] : ids) {
			const auto& swapped = ids.at({mn.second, mn.first});
			t.check(s.lhs == -swapped.lhs && s.rhs == -swapped.rhs,
			        [&] { return "m=" + std::to_string(mn.first) + " n=" + std::to_string(mn.second); });
		}
	}
	{
		const int cw = std::min(w, 3);
		Tally t(rep, suite, "direct-summation certificate at N=m+n+2, " + bound("m,n", cw));
		for (int m = 1; m <= cw; ++m)
			for (int n = 1; n <= cw; ++n) {
				const auto& s = ids.at({m, n});
				const int vars = m + n + 2;
				t.check(expand(s.lhs, vars) == expand(s.rhs, vars), [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
			}
	}
}

void kp_classical(Report& rep, const SuiteOptions&)
{
	const std::string suite = "kp-classical";
	const Element p1 = power_sum(1), p2 = power_sum(2);
	const auto s = kp_classical_identity();
	{
		Tally t(rep, suite, "4 p1 p3 - 3 p2^2 - p1^4 = -6 p1 (p1 . p1) + 6 (p1 . p2 - p2 . p1)");
		t.check(s.holds(), [&] { return "lhs - rhs = " + show(s.lhs - s.rhs); });
	}
	{
		Tally t(rep, suite, "p1^2 . p1 + p1 . p1^2 = p1 (p1 . p1)");
		const Element p1sq = mul(p1, p1);
		t.check(bullet(1, p1sq, p1) + bullet(1, p1, p1sq) == mul(p1, bullet(1, p1, p1)), [] { return "mismatch"; });
	}
	{
		Tally t(rep, suite, "direct-summation certificate at N=4");
		t.check(expand(s.lhs, 4) == expand(s.rhs, 4), [] { return "expansions differ"; });
	}
	{
		Tally t(rep, suite, "derivation form 4 d1 d3 1 - 3 d2^2 1 - d1^4 1 = -6 d1(d1 1 . d1 1) + 6 (d1 1 . d2 1 - d2 1 . d1 1)");
		const Element one = Element::one();
		auto d = [](int n, const Element& a) { return derivation_delta(n, a); };
		const Element lhs = Rational(4) * d(1, d(3, one)) - Rational(3) * d(2, d(2, one)) - d(1, d(1, d(1, d(1, one))));
		const Element rhs = Rational(-6) * d(1, bullet(1, d(1, one), d(1, one))) +
		                    Rational(6) * (bullet(1, d(1, one), d(2, one)) - bullet(1, d(2, one), d(1, one)));
		t.check(lhs == rhs && lhs == s.lhs, [] { return "mismatch"; });
	}
	{
		Tally t(rep, suite, "sigma image is the noncommutative KP equation");
		const auto tree = kp_classical_tree();
		const std::string expected = "4*phi_{t1,t3} - 3*phi_{t2,t2} - phi_{t1,t1,t1,t1} = "
		                             "-6*phi_{t1}*phi_{t2} + 6*phi_{t1}*phi_{t1,t1} + 6*phi_{t2}*phi_{t1} + 6*phi_{t1,t1}*phi_{t1}";
		const std::string got = render_equation(sigma(tree.lhs), sigma(tree.rhs));
		t.check(got == expected && evaluate(tree.lhs) == s.lhs && evaluate(tree.rhs) == s.lhs, [&] { return got; });
	}
}

void qss_kp(Report& rep, const SuiteOptions& o)
{
	const int nmax = o.truncation.value_or(4);
	const std::string suite = "qss-kp";
	{
		Tally t(rep, suite, "two-alphabet KP identity, " + bound("N", nmax));
		for (int n = 1; n <= nmax; ++n)
			t.check(qss_kp_check(n), [&] { return "N=" + std::to_string(n); });
	}
	{
		Tally t(rep, suite, "p_r . p_s against the direct triple sum, r,s<=3, " + bound("N", nmax));
		for (int n = 1; n <= nmax; ++n)
			for (int r = 1; r <= 3; ++r)
				for (int s = 1; s <= 3; ++s)
					t.check(qss_bullet(1, qss_p(r, n), qss_p(s, n)) == qss_pbup_direct(r, s, n), [&] {
						return "N=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
					});
	}
	{
		Tally t(rep, suite, "p_r = 1 .r. 1");
		const int n = std::max(nmax, 1);
		for (int r = 1; r <= 4; ++r)
			t.check(qss_p(r, n) == qss_bullet(r, QssPoly::constant(n, 1), QssPoly::constant(n, 1)),
			        [&] { return "r=" + std::to_string(r); });
	}
	{
		const int w = o.max_weight.value_or(4);
		Tally t(rep, suite, "y=0 specialization of M_C matches the one-alphabet expansion, " + bound("|C|", w) + " " + bound("N", nmax));
		for (int n = 1; n <= nmax; ++n)
			for (const auto& c : enumerate_compositions(w))
				t.check(qss_M(c, n).drop_y() == expand(M(c), n), [&] { return "N=" + std::to_string(n) + " C=" + to_string(c); });
	}
}

void qss_cancel(Report& rep, const SuiteOptions& o)
{
	const int n = o.truncation.value_or(4);
	const int w = o.max_weight.value_or(4);
	const std::string suite = "qss-cancel";
	{
		Tally t(rep, suite, "x_i = y_i = t cancels t in every element generated from 1, " + bound("weight", w) + " N=" + std::to_string(n));
		for (const auto& g : bullet_generated(w, n))
			for (int i = 1; i <= n; ++i)
				t.check(t_substitution_check(g.value, i), [&] { return g.expression + " i=" + std::to_string(i); });
	}
	{
		Tally t(rep, suite, "negative control: x1 depends on t");
		t.check(!t_substitution_check(QssPoly::x(n, 1), 1), [] { return "x1 passed"; });
	}
	const int sw = std::min(w, 3), sn = std::min(n, 3);
	const auto gen = bullet_generated(sw, sn);
	std::vector<GeneratedElement> with_one;
	with_one.push_back({"1", 0, QssPoly::constant(sn, 1)});
	with_one.insert(with_one.end(), gen.begin(), gen.end());
	{
		Tally t(rep, suite, "weak nonassociativity on generated elements, N=" + std::to_string(sn));
		for (int k = 1; k <= 2; ++k)
			for (const auto& a : with_one)
				for (const auto& b : with_one)
					for (const auto& c : with_one)
						for (const auto& d : with_one) {
							if (a.weight + b.weight + c.weight + d.weight > sw)
								continue;
							const QssPoly bc = qss_bullet(1, b.value, c.value);
							t.check(qss_bullet(k, qss_bullet(1, a.value, bc), d.value) == qss_bullet(1, a.value, qss_bullet(k, bc, d.value)),
							        [&] { return a.expression + ", " + b.expression + ", " + c.expression + ", " + d.expression; });
						}
	}
	{
		Tally t(rep, suite, "a .k. (1 .l. b) - (a .k. 1) .l. b = a .(k+l). b on generated elements, N=" + std::to_string(sn));
		const QssPoly one = QssPoly::constant(sn, 1);
		for (int k = 1; k <= 2; ++k)
			for (int l = 1; l <= 2; ++l)
				for (const auto& a : with_one)
					for (const auto& b : with_one) {
						if (a.weight + b.weight > sw)
							continue;
						const QssPoly lhs = qss_bullet(k, a.value, qss_bullet(l, one, b.value)) - qss_bullet(l, qss_bullet(k, a.value, one), b.value);
						t.check(lhs == qss_bullet(k + l, a.value, b.value), [&] {
							return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + a.expression + ", " + b.expression;
						});
					}
	}
}

void qss_closure(Report& rep, const SuiteOptions& o)
{
	const int n = o.truncation.value_or(5);
	const int w = o.max_weight.value_or(4);
	const std::string suite = "qss-closure";
	Tally span(rep, suite, "M_C M_D lies in the span of M_E, |E|=|C|+|D|, " + bound("|C|+|D|", w) + " N=" + std::to_string(n));
	Tally shuffle(rep, suite, "span coefficients equal the quasi-shuffle coefficients");
	for (const auto& [c, d] : pairs_total(w)) {
		if (c.empty() || d.empty())
			continue;
		const QssPoly product = qss_M(c, n) * qss_M(d, n);
		const SpanResult r = qss_span_membership(product, c.weight() + d.weight(), n);
		auto where = [&] { return "C=" + to_string(c) + " D=" + to_string(d); };
		span.check(r.in_span, where);
		if (!r.in_span)
			continue;
		const Element expected = mul(M(c), M(d));
		shuffle.check(r.coefficients == expected.terms(), where);
	}
}

using SuiteFn = void (*)(Report&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
	static const std::vector<std::pair<std::string, SuiteFn>> suites = {
	    {"shuffle-oracle", shuffle_oracle},
	    {"bullet-oracle", bullet_oracle},
	    {"weak-nonassoc", weak_nonassoc},
	    {"lemma-iter", lemma_iter},
	    {"generation", generation},
	    {"coproduct", coproduct_suite},
	    {"delta-derivation", delta_derivation},
	    {"bimodule", bimodule},
	    {"distributivity", distributivity},
	    {"mcma", mcma},
	    {"antipode", antipode_suite},
	    {"antipode-F", antipode_f},
	    {"f-basis", f_basis},
	    {"newton", newton},
	    {"kp", kp_suite},
	    {"kp-classical", kp_classical},
	    {"qss-kp", qss_kp},
	    {"qss-cancel", qss_cancel},
	    {"qss-closure", qss_closure},
	};
	return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> n;
		for (const auto& [name, fn] : registry())
			n.push_back(name);
		n.push_back("all");
		return n;
	}();
	return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options)
{
	Report report;
	bool found = false;
	for (const auto& [suite, fn] : registry()) {
		if (name == "all" || name == suite) {
			fn(report, options);
			found = true;
		}
	}
	if (!found)
		throw std::invalid_argument("unknown suite '" + name + "'");
	return report;
}

void print_text(std::ostream& os, const Report& report)
{
	long total_pass = 0, total_fail = 0;
	for (const auto& r : report.results) {
		os << std::left << std::setw(17) << r.suite << ' ' << (r.ok() ? "PASS" : "FAIL") << ' ' << std::right << std::setw(6)
		   << r.passed << '/' << std::left << std::setw(6) << r.passed + r.failed << ' ' << r.identity << '\n';
		if (!r.ok())
			os << "    first failure: " << r.first_failure << '\n';
		total_pass += r.passed;
		total_fail += r.failed;
	}
	os << "total: " << total_pass << " passed, " << total_fail << " failed\n";
}

void print_json(std::ostream& os, const Report& report)
{
	for (const auto& r : report.results) {
		nlohmann::ordered_json j;
		j["suite"] = r.suite;
		j["case"] = r.identity;
		j["status"] = r.ok() ? "pass" : "fail";
		j["passed"] = r.passed;
		j["failed"] = r.failed;
		if (!r.ok())
			j["first_failure"] = r.first_failure;
		os << j.dump() << '\n';
	}
}

} // namespace qsym
