#include "exaro/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace exaro {

bool parity_ok(const Composition& kappa)
{
	return (kappa.size() + kappa.derived_size() + 1) % 2 == 0;
}

std::vector<Composition> compositions_of_order(int n)
{
	// kappa(j) copies of part weight (j+1), weights summing to 2n-1
	std::vector<Composition> out;
	std::vector<int> counts;
	std::function<void(int, int)> walk = [&](int budget, int part) {
		if (budget == 0) {
			Composition k;
			k.counts = counts;
			while (!k.counts.empty() && k.counts.back() == 0) k.counts.pop_back();
			out.push_back(std::move(k));
			return;
		}
		if (part > budget) return;
		for (int weight = part; weight <= budget; ++weight) {
			if (static_cast<int>(counts.size()) < weight) counts.resize(weight, 0);
			counts[weight - 1] += 1;
			walk(budget - weight, weight);
			counts[weight - 1] -= 1;
		}
		while (!counts.empty() && counts.back() == 0) counts.pop_back();
	};
	walk(2 * n - 1, 1);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<int> canonical_tau(const Composition& kappa)
{
	std::vector<int> tau;
	int v = 0;
	for (int j = static_cast<int>(kappa.counts.size()) - 1; j >= 0; --j)
		for (int c = 0; c < kappa.counts[j]; ++c) {
			++v;
			for (int k = 0; k < j; ++k) tau.push_back(v);
		}
	return tau;
}

std::vector<Tree> enumerate_by_composition(const Composition& kappa)
{
	if (!parity_ok(kappa)) return {};
	const int nv = kappa.size();
	std::vector<int> tau = canonical_tau(kappa);
	const int na = static_cast<int>(tau.size());

	Tree t;
	t.nv = nv;
	t.na = na;
	t.rooted = true;
	t.tau = tau;

	const int n = t.n_elems();
	std::map<std::string, Tree> found;
	std::vector<int> sigma(n, -1);
	std::function<void()> match = [&] {
		int x = 0;
		while (x < n && sigma[x] != -1) ++x;
		if (x == n) {
			t.sigma = sigma;
			auto enc = canonical_encoding(t);
			if (!found.contains(enc)) found.emplace(std::move(enc), canonicalize(t));
			return;
		}
		for (int y = x + 1; y < n; ++y) {
			if (sigma[y] != -1) continue;
			sigma[x] = y;
			sigma[y] = x;
			match();
			sigma[x] = -1;
			sigma[y] = -1;
		}
	};
	match();

	std::vector<std::pair<std::string, Tree>> sorted;
	for (auto& [enc, tree] : found) sorted.emplace_back(enc, std::move(tree));
	std::sort(sorted.begin(), sorted.end(),
	          [](const auto& a, const auto& b) { return a.first < b.first; });
	std::vector<Tree> out;
	for (auto& [enc, tree] : sorted) out.push_back(std::move(tree));
	return out;
}

std::vector<Tree> enumerate_by_order(int n)
{
	std::vector<Tree> out;
	for (const auto& kappa : compositions_of_order(n)) {
		auto part = enumerate_by_composition(kappa);
		out.insert(out.end(), std::make_move_iterator(part.begin()),
		           std::make_move_iterator(part.end()));
	}
	return out;
}

std::vector<Tree> enumerate_by_nodes(int m, int max_order)
{
	if (max_order < 1) throw std::invalid_argument("an order bound is required");
	std::vector<Tree> out;
	// |kappa| = m, |kappa| + |kappa'| + 1 = 2k for k <= max_order
	const int max_derived = 2 * max_order - 1 - m;
	std::vector<int> counts;
	std::function<void(int, int, int)> walk = [&](int j, int left, int derived) {
		if (left == 0) {
			Composition k;
			k.counts = counts;
			while (!k.counts.empty() && k.counts.back() == 0) k.counts.pop_back();
			if (parity_ok(k)) {
				auto part = enumerate_by_composition(k);
				out.insert(out.end(), std::make_move_iterator(part.begin()),
				           std::make_move_iterator(part.end()));
			}
			return;
		}
		if (j * left > max_derived - derived) return; // cheapest completion too heavy
		for (int c = 0; c <= left; ++c) {
			if (derived + j * c > max_derived) break;
			if (static_cast<int>(counts.size()) <= j) counts.resize(j + 1, 0);
			counts[j] = c;
			walk(j + 1, left - c, derived + j * c);
			counts[j] = 0;
		}
	};
	if (max_derived >= 0) walk(0, m, 0);
	return out;
}

} // namespace exaro
