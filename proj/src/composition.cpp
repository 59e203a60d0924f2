#include "qsym/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsym {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
	for (int p : parts_) {
		if (p < 1)
			throw std::invalid_argument("composition parts must be positive, got " + std::to_string(p));
		weight_ += p;
	}
}

Composition Composition::appended(int part) const
{
	auto p = parts_;
	p.push_back(part);
	return Composition(std::move(p));
}

Composition Composition::prepended(int part) const
{
	std::vector<int> p;
	p.reserve(parts_.size() + 1);
	p.push_back(part);
	p.insert(p.end(), parts_.begin(), parts_.end());
	return Composition(std::move(p));
}

Composition Composition::slice(std::size_t first, std::size_t count) const
{
	return Composition(std::vector<int>(parts_.begin() + first, parts_.begin() + first + count));
}

std::strong_ordering Composition::operator<=>(const Composition& other) const noexcept
{
	if (auto c = weight_ <=> other.weight_; c != 0)
		return c;
	if (auto c = parts_.size() <=> other.parts_.size(); c != 0)
		return c;
	return parts_ <=> other.parts_;
}

Composition concat(const Composition& a, const Composition& b)
{
	auto p = a.parts();
	p.insert(p.end(), b.begin(), b.end());
	return Composition(std::move(p));
}

Composition reverse(const Composition& c)
{
	return Composition(std::vector<int>(c.parts().rbegin(), c.parts().rend()));
}

Composition ones(int count) { return Composition(std::vector<int>(std::max(count, 0), 1)); }

std::vector<Composition> coarsenings(const Composition& c)
{
	if (c.empty())
		return {c};
	// Bit i of mask set: merge part i+1 into the running part.
	const std::size_t gaps = c.length() - 1;
	std::vector<Composition> out;
	out.reserve(std::size_t{1} << gaps);
	for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
		std::vector<int> parts{c[0]};
		for (std::size_t i = 0; i < gaps; ++i) {
			if (mask >> i & 1)
				parts.back() += c[i + 1];
			else
				parts.push_back(c[i + 1]);
		}
		out.emplace_back(std::move(parts));
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Composition> compositions_of(int n)
{
	if (n < 0)
		throw std::invalid_argument("compositions_of: negative weight");
	if (n == 0)
		return {Composition{}};
	std::vector<Composition> out;
	out.reserve(std::size_t{1} << (n - 1));
	for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
		// Bit i set: a cut after the (i+1)-th unit.
		std::vector<int> parts;
		int run = 1;
		for (int i = 0; i < n - 1; ++i) {
			if (mask >> i & 1) {
				parts.push_back(run);
				run = 1;
			} else {
				++run;
			}
		}
		parts.push_back(run);
		out.emplace_back(std::move(parts));
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Composition> refinements(const Composition& c)
{
	std::vector<std::vector<int>> acc{{}};
	for (int part : c) {
		const auto pieces = compositions_of(part);
		std::vector<std::vector<int>> next;
		next.reserve(acc.size() * pieces.size());
		for (const auto& prefix : acc) {
			for (const auto& piece : pieces) {
				auto p = prefix;
				p.insert(p.end(), piece.begin(), piece.end());
				next.push_back(std::move(p));
			}
		}
		acc = std::move(next);
	}
	std::vector<Composition> out;
	out.reserve(acc.size());
	for (auto& p : acc)
		out.emplace_back(std::move(p));
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Composition> enumerate_compositions(int max_weight)
{
	if (max_weight < 0)
		throw std::invalid_argument("enumerate_compositions: negative weight");
	std::vector<Composition> out;
	for (int w = 0; w <= max_weight; ++w) {
		auto cs = compositions_of(w);
		out.insert(out.end(), cs.begin(), cs.end());
	}
	return out;
}

std::vector<ElementaryBlock> elementary_decompose(const Composition& c)
{
	if (c.empty())
		throw std::invalid_argument("elementary_decompose: empty composition");
	std::vector<ElementaryBlock> blocks;
	blocks.push_back({c[0] - 1, 0});
	for (std::size_t i = 1; i < c.length(); ++i) {
		if (c[i] == 1)
			++blocks.back().n;
		else
			blocks.push_back({c[i] - 2, 0});
	}
	return blocks;
}

Composition elementary_compose(const std::vector<ElementaryBlock>& blocks)
{
	std::vector<int> parts;
	for (std::size_t i = 0; i < blocks.size(); ++i) {
		parts.push_back(blocks[i].m + (i == 0 ? 1 : 2));
		parts.insert(parts.end(), blocks[i].n, 1);
	}
	return Composition(std::move(parts));
}

Composition omega(const Composition& c)
{
	const auto blocks = elementary_decompose(c);
	std::vector<ElementaryBlock> swapped;
	swapped.reserve(blocks.size());
	for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
		swapped.push_back({it->n, it->m});
	return elementary_compose(swapped);
}

std::string to_string(const Composition& c)
{
	std::ostringstream os;
	os << c;
	return os.str();
}

std::ostream& operator<<(std::ostream& os, const Composition& c)
{
	os << '[';
	for (std::size_t i = 0; i < c.length(); ++i) {
		if (i)
			os << ',';
		os << c[i];
	}
	return os << ']';
}

} // namespace qsym
