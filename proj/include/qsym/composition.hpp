#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

/// A finite sequence of positive integers. The empty composition indexes the unit 1 = M[].
class Composition {
public:
	using value_type = int;

	Composition() = default;
	Composition(std::initializer_list<int> parts);
	explicit Composition(std::vector<int> parts);

	const std::vector<int>& parts() const& noexcept { return parts_; }
	std::vector<int> parts() && noexcept { return std::move(parts_); }
	std::size_t length() const noexcept { return parts_.size(); }
	int weight() const noexcept { return weight_; }
	bool empty() const noexcept { return parts_.empty(); }

	int operator[](std::size_t i) const { return parts_[i]; }
	int front() const { return parts_.front(); }
	int back() const { return parts_.back(); }
	auto begin() const noexcept { return parts_.begin(); }
	auto end() const noexcept { return parts_.end(); }

	/// Copy with `part` appended.
	Composition appended(int part) const;
	/// Copy with `part` prepended.
	Composition prepended(int part) const;
	/// Parts [first, first+count).
	Composition slice(std::size_t first, std::size_t count) const;

	/// Canonical order: weight, then length, then lexicographic on parts.
	std::strong_ordering operator<=>(const Composition& other) const noexcept;
	bool operator==(const Composition& other) const noexcept = default;

private:
	std::vector<int> parts_;
	int weight_ = 0;
};

/// Block (m, n) of the elementary decomposition; see elementary_decompose.
struct ElementaryBlock {
	int m = 0;
	int n = 0;
	bool operator==(const ElementaryBlock&) const = default;
};

Composition concat(const Composition& a, const Composition& b);
Composition reverse(const Composition& c);

/// (1^count).
Composition ones(int count);

/// All compositions obtained by merging runs of adjacent parts (including c itself).
std::vector<Composition> coarsenings(const Composition& c);

/// All compositions that c coarsens into (including c itself).
std::vector<Composition> refinements(const Composition& c);

/// All compositions of n, canonical order. compositions_of(0) = {[]}.
std::vector<Composition> compositions_of(int n);

/// All compositions of weight 0..max_weight in canonical order.
std::vector<Composition> enumerate_compositions(int max_weight);

/// Splits c = (m1+1, 1^n1, m2+2, 1^n2, ..., mr+2, 1^nr). Throws on the empty composition.
std::vector<ElementaryBlock> elementary_decompose(const Composition& c);

/// Inverse of elementary_decompose.
Composition elementary_compose(const std::vector<ElementaryBlock>& blocks);

/// Involution with S(F_C) = (-1)^|C| F_omega(C). Throws on the empty composition.
Composition omega(const Composition& c);

/// `[2,1,3]`, `[]` for the empty composition.
std::string to_string(const Composition& c);
std::ostream& operator<<(std::ostream& os, const Composition& c);

} // namespace qsym
