#include "exaro/equivariance.hpp"

#include "exaro/duality.hpp"
#include "exaro/elementary.hpp"
#include "exaro/enumerate.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace exaro;

namespace {

Tree single_node() { return tree_from_sigma(1, {}, "(a0,1)"); }
Tree laplacian() { return tree_from_sigma(1, {1, 1}, "(a0,1)(a1,a2)"); }
Tree stolon_tree() { return tree_from_sigma(3, {}, "(a0,1)(2,3)"); }
Tree loop_aroma_tree() { return tree_from_sigma(2, {1}, "(a0,2)(a1,1)"); }

} // namespace

TEST_CASE("structured transforms")
{
	SUBCASE("signed permutations are the hyperoctahedral group")
	{
		std::set<std::string> seen;
		for (uint64_t s = 0; s < 200; ++s) {
			Rng rng(s);
			AffineMap g = make_transform(TransformKind::SignedPermutation, 2, 2, rng);
			CHECK(is_left_orthogonal(g.A));
			CHECK(is_right_orthogonal(g.A));
			std::string key;
			for (auto& row : g.A)
				for (auto& v : row) key += rat_str(v) + ";";
			seen.insert(key);
		}
		CHECK(seen.size() == 8);
	}
	SUBCASE("stiefel generator columns are orthonormal")
	{
		Rng rng(4);
		AffineMap g = make_transform(TransformKind::Stiefel, 1, 2, rng);
		CHECK(g.rows() == 2);
		CHECK(g.cols() == 1);
		CHECK(is_left_orthogonal(g.A));
	}
	SUBCASE("grassmann generator rows are orthonormal")
	{
		Rng rng(4);
		AffineMap g = make_transform(TransformKind::Grassmann, 2, 1, rng);
		CHECK(g.rows() == 1);
		CHECK(g.cols() == 2);
		CHECK(is_right_orthogonal(g.A));
	}
	SUBCASE("bad dimensions are rejected")
	{
		Rng rng(1);
		CHECK_THROWS_AS(make_transform(TransformKind::Stiefel, 3, 2, rng),
		                std::invalid_argument);
		CHECK_THROWS_AS(make_transform(TransformKind::Orthogonal, 2, 2, rng),
		                std::invalid_argument);
	}
}

TEST_CASE("orthogonal equivariance holds exactly for signed permutations")
{
	for (int n = 1; n <= 2; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			auto rep = check_orthogonal_equivariance(t, 9, 1e-8, 11, true);
			CHECK(rep.verdict_pass);
			CHECK(rep.exact_passed == rep.exact_trials);
		}
}

TEST_CASE("full signed-permutation group with rational offsets, orders <= 3")
{
	// every group element once per tree, one random field/point/offset each
	Rng rng(2718);
	std::vector<std::pair<std::vector<std::vector<Rat>>, int>> group; // (matrix, d)
	for (int d : {2, 3, 4}) {
		std::vector<int> perm(d);
		std::iota(perm.begin(), perm.end(), 0);
		do {
			for (int signs = 0; signs < (1 << d); ++signs) {
				std::vector<std::vector<Rat>> A(d, std::vector<Rat>(d, Rat(0)));
				for (int j = 0; j < d; ++j) A[perm[j]][j] = (signs >> j & 1) ? Rat(-1) : Rat(1);
				group.emplace_back(std::move(A), d);
			}
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
	REQUIRE(group.size() == 8 + 48 + 384);

	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			for (const auto& [A, d] : group) {
				AffineMap g;
				g.A = A;
				g.b.assign(d, Rat(0));
				for (auto& v : g.b) v = rng.small_rat();
				VectorField f = random_field(rng, d, 3, 2);
				auto x = random_point(rng, d);
				VectorField gf = affine_pushforward(g, f);
				auto lhs = elementary_differential(t, gf, g.apply(x));
				auto base = elementary_differential(t, f, x);
				std::vector<Rat> rhs(d, Rat(0));
				for (int i = 0; i < d; ++i)
					for (int j = 0; j < d; ++j) rhs[i] += g.A[i][j] * base[j];
				REQUIRE(lhs == rhs);
			}
		}
}

TEST_CASE("float orthogonal residuals stay below 1e-8 for all order <= 3 trees")
{
	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			auto rep = check_orthogonal_equivariance(t, 20, 1e-8, 5 + n, false);
			CHECK(rep.verdict_pass);
			CHECK(rep.float_trials == 20);
			CHECK(rep.max_residual <= 1e-8);
		}
}

TEST_CASE("general linear equivariance separates aromatic from the rest")
{
	CHECK(check_gl_equivariance(single_node(), 4, 3).verdict_pass);
	CHECK(check_gl_equivariance(loop_aroma_tree(), 4, 3).verdict_pass);

	auto rep = check_gl_equivariance(laplacian(), 4, 3);
	CHECK_FALSE(rep.verdict_pass);
	REQUIRE(rep.witness.has_value());
	CHECK(rep.witness->lhs != rep.witness->rhs);

	// the doubling map in d = 1 scales the two sides apart by exactly 4
	AffineMap twice = AffineMap::identity(1);
	twice.A[0][0] = 2;
	VectorField f = parse_field("f1 = x1^2");
	std::vector<Rat> x{rat(1)};
	auto lhs = elementary_differential(laplacian(), affine_pushforward(twice, f), x);
	std::vector<Rat> half{rat(1, 2)};
	auto rhs = elementary_differential(laplacian(), f, half);
	CHECK(rat(4) * lhs[0] == rat(2) * rhs[0]);
	CHECK(lhs[0] != rat(2) * rhs[0]);

	CHECK_FALSE(check_gl_equivariance(stolon_tree(), 4, 3).verdict_pass);
}

TEST_CASE("stiefel equivariance: stolons pass, lianas and loops fail")
{
	CHECK(check_strong_equivariance(stolon_tree(), TransformKind::Stiefel, 6, 17).verdict_pass);
	CHECK(check_strong_equivariance(single_node(), TransformKind::Stiefel, 6, 17).verdict_pass);

	auto rep = check_strong_equivariance(laplacian(), TransformKind::Stiefel, 6, 17);
	CHECK_FALSE(rep.verdict_pass);
	REQUIRE(rep.witness.has_value());
	CHECK(rep.witness->lhs != rep.witness->rhs);

	CHECK_FALSE(
	    check_strong_equivariance(loop_aroma_tree(), TransformKind::Stiefel, 6, 17).verdict_pass);
}

TEST_CASE("grassmann equivariance: exotic trees pass, stolons and loops fail")
{
	CHECK(check_strong_equivariance(laplacian(), TransformKind::Grassmann, 6, 19).verdict_pass);
	CHECK(check_strong_equivariance(single_node(), TransformKind::Grassmann, 6, 19).verdict_pass);

	auto rep = check_strong_equivariance(stolon_tree(), TransformKind::Grassmann, 6, 19);
	CHECK_FALSE(rep.verdict_pass);
	REQUIRE(rep.witness.has_value());

	CHECK_FALSE(check_strong_equivariance(loop_aroma_tree(), TransformKind::Grassmann, 6, 19)
	                .verdict_pass);
}

TEST_CASE("affine equivariance passes exactly on rooted trees without decorations")
{
	CHECK(check_strong_equivariance(single_node(), TransformKind::Affine, 9, 23).verdict_pass);
	Tree tall = tree_from_sigma(2, {1}, "(a0,1)(a1,2)");
	CHECK(check_strong_equivariance(tall, TransformKind::Affine, 9, 23).verdict_pass);
	CHECK_FALSE(check_strong_equivariance(laplacian(), TransformKind::Affine, 9, 23).verdict_pass);
	CHECK_FALSE(
	    check_strong_equivariance(stolon_tree(), TransformKind::Affine, 9, 23).verdict_pass);
}

TEST_CASE("decoupling tracks connectedness")
{
	Tree tall = tree_from_sigma(2, {1}, "(a0,1)(a1,2)");
	CHECK(check_decoupling(tall, false, 5, 29).verdict_pass);
	CHECK(check_decoupling(laplacian(), false, 5, 29).verdict_pass);

	auto rep = check_decoupling(loop_aroma_tree(), false, 5, 29);
	CHECK_FALSE(rep.verdict_pass);
	REQUIRE(rep.witness.has_value());
	CHECK(rep.witness->lhs != rep.witness->rhs);

	// f (+) 0 keeps every tree block-diagonal
	for (int n = 1; n <= 2; ++n)
		for (const Tree& t : enumerate_by_order(n))
			CHECK(check_decoupling(t, true, 5, 29).verdict_pass);
}

TEST_CASE("order-two classification matrix agrees with the predicates")
{
	auto m = classification_matrix(2, 7, true);
	CHECK(m.all_agree);
	CHECK(m.rows.size() == 7); // orders one and two together
	for (const auto& row : m.rows) {
		CHECK(row.disagreements.empty());
		for (const auto& [prop, rep] : row.reports) {
			if (!rep.verdict_pass) {
				REQUIRE(rep.witness.has_value());
				CHECK(rep.witness->lhs != rep.witness->rhs);
			}
		}
	}
}
