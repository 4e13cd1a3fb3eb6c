#include "exaro/duality.hpp"

#include "exaro/enumerate.hpp"
#include "paper_tables.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace exaro;

namespace {

// connected catalog graphs of order <= 3 plus the aromas appearing in them
std::vector<Tree> connected_corpus()
{
	std::vector<Tree> out;
	std::map<std::string, bool> seen;
	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			if (classify(t).is_connected && !seen[canonical_encoding(t)]) {
				seen[canonical_encoding(t)] = true;
				out.push_back(canonicalize(t));
			}
			for (const Tree& a : connected_components(t).aromas) {
				if (order(a) > 3) continue;
				if (!seen[canonical_encoding(a)]) {
					seen[canonical_encoding(a)] = true;
					out.push_back(a);
				}
			}
		}
	return out;
}

} // namespace

TEST_CASE("dual field shapes")
{
	SUBCASE("single node")
	{
		DualField df = dual_field(tree_from_sigma(1, {}, "(a0,1)"));
		CHECK(df.field.dim == 1);
		REQUIRE(df.thetas.size() == 1);
		CHECK(df.thetas[0].kind == ThetaKind::NodePlain);
		CHECK(df.field.comp[0] == Poly::var(kThetaBase));
	}
	SUBCASE("stolon-liana tree with ghost-liana root")
	{
		// coordinates: root class, stolon, liana; only the stolon coordinate
		// is nonzero: thS1 thL2 thL3 x3^2 + thS2 thL1 x1
		Tree t = tree_from_sigma(2, {1, 1, 2}, "(a0,a3)(1,2)(a1,a2)");
		DualField df = dual_field(t);
		CHECK(df.field.dim == 3);
		CHECK(df.field.comp[0].is_zero());
		CHECK(df.field.comp[2].is_zero());
		REQUIRE(df.thetas.size() == 5); // 1 ghost-liana arrow + 2 stolon ends + 2 liana arrows
		// the stolon component has exactly two monomials of theta-degree 3 and 2
		int terms = 0;
		for (const auto& [m, c] : df.field.comp[1].terms()) {
			++terms;
			CHECK(c == 1);
		}
		CHECK(terms == 2);
	}
	SUBCASE("aroma with a stolon and a liana")
	{
		Tree a = aroma_from_sigma(2, {1, 2}, "(1,2)(a1,a2)");
		DualField df = dual_field(a);
		CHECK(df.field.dim == 2);
		CHECK(df.field.comp[1].is_zero());
		REQUIRE(df.thetas.size() == 4);
	}
}

TEST_CASE("pairing reproduces the worked values")
{
	Tree stolon_liana = tree_from_sigma(2, {1, 1, 2}, "(a0,a3)(1,2)(a1,a2)");
	CHECK(pairing(stolon_liana, stolon_liana) == 2);

	Tree single = tree_from_sigma(1, {}, "(a0,1)");
	CHECK(pairing(single, single) == 1);

	// aroma against the tall tree: zero with parameters, one without
	Tree aroma = aroma_from_sigma(2, {1, 2}, "(1,2)(a1,a2)");
	Tree tall = tree_from_sigma(2, {1}, "(a0,1)(a1,2)");
	CHECK(pairing(aroma, tall) == 0);
	CHECK(pairing_theta_free(aroma, tall) == 1);

	// two-loop aroma against the one-loop aroma
	Tree two_loop = aroma_from_sigma(2, {2, 1}, "(1,a1)(2,a2)");
	Tree one_loop = aroma_from_sigma(1, {1}, "(1,a1)");
	CHECK(pairing(two_loop, one_loop) == 0);
	CHECK(pairing_theta_free(two_loop, one_loop) == 1);
}

TEST_CASE("diagonal law on every connected graph through order three")
{
	auto corpus = connected_corpus();
	REQUIRE(corpus.size() > 10);
	for (const Tree& g : corpus) CHECK(pairing(g, g) == symmetry_coefficient(g));
}

TEST_CASE("off-diagonal pairings of connected graphs vanish")
{
	// a rooted row against an aroma column is outside the statement: the ghost
	// arrow contributes no coordinate factor, so nothing forces the value to 0
	auto corpus = connected_corpus();
	for (size_t i = 0; i < corpus.size(); ++i)
		for (size_t j = 0; j < corpus.size(); ++j) {
			if (i == j) continue;
			if (corpus[i].rooted && !corpus[j].rooted) continue;
			CHECK_MESSAGE(pairing(corpus[i], corpus[j]) == 0, "i=", i, " j=", j);
		}
}

TEST_CASE("vanishing law for general graphs")
{
	std::vector<Tree> all;
	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) all.push_back(t);
	for (size_t i = 0; i < all.size(); ++i)
		for (size_t j = 0; j < all.size(); ++j) {
			if (is_mu_gamma(all[i], all[j])) continue;
			CHECK(pairing(all[i], all[j]) == 0);
		}
}

TEST_CASE("attached aromas keep the pairing nonzero")
{
	Tree one_loop = aroma_from_sigma(1, {1}, "(1,a1)");
	Tree stolon_pair = aroma_from_sigma(2, {}, "(1,2)");
	for (int n = 1; n <= 2; ++n) {
		for (const Tree& g : enumerate_by_order(n)) {
			for (const Tree* mu : {&one_loop, &stolon_pair}) {
				Tree bigger = attach(g, *mu);
				CHECK(is_mu_gamma(g, bigger));
				CHECK(pairing(g, bigger) != 0);
				CHECK(pairing(bigger, g) == 0);
			}
		}
	}
}

TEST_CASE("independence certificates")
{
	SUBCASE("the two one-vertex order-2 trees give diag(2,1)")
	{
		Composition k;
		k.counts = {0, 0, 1};
		auto trees = enumerate_by_composition(k);
		REQUIRE(trees.size() == 2);
		auto cert = independence_certificate(trees);
		CHECK(cert.diagonal);
		CHECK(cert.nonsingular);
		std::multiset<Rat> diag{cert.matrix[0][0], cert.matrix[1][1]};
		CHECK(diag == std::multiset<Rat>{rat(1), rat(2)});
		for (size_t i = 0; i < 2; ++i) CHECK(cert.matrix[i][i] == cert.symmetry[i]);
	}
	SUBCASE("all six order-2 trees are independent")
	{
		auto trees = enumerate_by_order(2);
		auto cert = independence_certificate(trees);
		CHECK(cert.nonsingular);
		CHECK(cert.triangular);
		for (size_t i = 0; i < trees.size(); ++i) CHECK(cert.matrix[i][i] == cert.symmetry[i]);
	}
	SUBCASE("a single tree is trivially independent")
	{
		auto cert = independence_certificate({tree_from_sigma(1, {}, "(a0,1)")});
		CHECK(cert.nonsingular);
		CHECK(cert.diagonal);
	}
	SUBCASE("all 42 trees through order three are independent")
	{
		std::vector<Tree> trees;
		for (int n = 1; n <= 3; ++n)
			for (Tree& t : enumerate_by_order(n)) trees.push_back(std::move(t));
		auto cert = independence_certificate(trees);
		CHECK(cert.triangular);
		CHECK(cert.nonsingular);
		for (size_t i = 0; i < trees.size(); ++i) CHECK(cert.matrix[i][i] == cert.symmetry[i]);
	}
}
