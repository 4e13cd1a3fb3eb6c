#include "exaro/poly.hpp"

#include <doctest.h>

using namespace exaro;

namespace {

std::vector<Rat> pt(std::initializer_list<long> xs)
{
	std::vector<Rat> v;
	for (long x : xs) v.push_back(rat(x));
	return v;
}

} // namespace

TEST_CASE("rational parsing")
{
	CHECK(parse_rat("3/6") == rat(1, 2));
	CHECK(parse_rat("-4") == rat(-4));
	CHECK(parse_rat(" 7/3 ") == rat(7, 3));
	CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
	CHECK(rat_str(rat(-3, 9)) == "-1/3");
}

TEST_CASE("poly parse and print round trip")
{
	Poly p = parse_poly("2*x2^2 - x1*x3 + 1/2");
	CHECK(p.eval(std::vector<Rat>{rat(1), rat(2), rat(3)}) == rat(8 - 3) + rat(1, 2));
	Poly q = parse_poly(poly_str(p));
	CHECK(p == q);
	CHECK(parse_poly("0").is_zero());
	CHECK_THROWS_AS(parse_poly("x0"), std::invalid_argument);
	CHECK_THROWS_AS(parse_poly("2**x1"), std::invalid_argument);
}

TEST_CASE("partial derivatives")
{
	// f1 = x2^2: d2 d2 -> 2
	VectorField f = parse_field("f1 = x2^2\nf2 = x1*x3^2\nf3 = 0");
	std::vector<int> a22{1, 1};
	CHECK(partial_derivative(f, 0, a22) == Poly::constant(Rat(2)));
	std::vector<int> a2{1};
	CHECK(partial_derivative(parse_field("f1 = x1\nf2 = 0"), 0, a2).is_zero());
	std::vector<int> a33{2, 2};
	CHECK(partial_derivative(f, 1, a33) == parse_poly("2*x1"));
	CHECK_THROWS_AS(partial_derivative(f, 5, a2), std::out_of_range);
}

TEST_CASE("affine pushforward examples")
{
	VectorField f = parse_field("f1 = x1^2");
	SUBCASE("identity leaves the field alone")
	{
		AffineMap g = AffineMap::identity(1);
		CHECK(affine_pushforward(g, f).comp[0] == f.comp[0]);
	}
	SUBCASE("scaling by 2 in d=1 halves the square")
	{
		AffineMap g = AffineMap::identity(1);
		g.A[0][0] = 2;
		CHECK(affine_pushforward(g, f).comp[0] == parse_poly("1/2*x1^2"));
	}
	SUBCASE("signed permutation")
	{
		AffineMap g;
		g.A = {{rat(0), rat(1)}, {rat(-1), rat(0)}};
		g.b = {rat(0), rat(0)};
		VectorField h = parse_field("f1 = x2\nf2 = 0");
		// A^-1 x = (-x2, x1); f(A^-1 x) = (x1, 0); A f = (0, -x1)
		VectorField gh = affine_pushforward(g, h);
		CHECK(gh.comp[0].is_zero());
		CHECK(gh.comp[1] == parse_poly("-1*x1"));
	}
	SUBCASE("singular matrix rejected")
	{
		AffineMap g;
		g.A = {{rat(0)}};
		g.b = {rat(0)};
		CHECK_THROWS_AS(affine_pushforward(g, f), SingularMatrix);
	}
}

TEST_CASE("pushforward is a group action and exact")
{
	Rng rng(42);
	for (int trial = 0; trial < 10; ++trial) {
		int d = 2 + trial % 3;
		VectorField f = random_field(rng, d);
		AffineMap g1, g2;
		while (true) {
			g1.A.assign(d, std::vector<Rat>(d));
			for (auto& row : g1.A)
				for (auto& v : row) v = rng.coeff(3);
			if (mat_rank(g1.A) == d) break;
		}
		while (true) {
			g2.A.assign(d, std::vector<Rat>(d));
			for (auto& row : g2.A)
				for (auto& v : row) v = rng.coeff(3);
			if (mat_rank(g2.A) == d) break;
		}
		g1.b.assign(d, Rat(0));
		g2.b.assign(d, Rat(0));
		for (auto& v : g1.b) v = rng.small_rat();
		for (auto& v : g2.b) v = rng.small_rat();

		// inverse undoes
		AffineMap g1inv;
		mat_invert(g1.A, g1inv.A);
		g1inv.b.assign(d, Rat(0));
		for (int i = 0; i < d; ++i)
			for (int j = 0; j < d; ++j) g1inv.b[i] -= g1inv.A[i][j] * g1.b[j];
		VectorField back = affine_pushforward(g1inv, affine_pushforward(g1, f));
		for (int i = 0; i < d; ++i) CHECK(back.comp[i] == f.comp[i]);

		// (g1 g2) . f = g1 . (g2 . f); composition (A1 A2, A1 b2 + b1)
		AffineMap g12;
		g12.A = mat_mul(g1.A, g2.A);
		g12.b = g1.b;
		for (int i = 0; i < d; ++i)
			for (int j = 0; j < d; ++j) g12.b[i] += g1.A[i][j] * g2.b[j];
		VectorField lhs = affine_pushforward(g12, f);
		VectorField rhs = affine_pushforward(g1, affine_pushforward(g2, f));
		for (int i = 0; i < d; ++i) CHECK(lhs.comp[i] == rhs.comp[i]);
	}
}

TEST_CASE("direct sum blocks")
{
	VectorField a = parse_field("f1 = x1");
	VectorField b = parse_field("f1 = x1^2");
	VectorField s = direct_sum(a, b);
	CHECK(s.dim == 2);
	CHECK(s.comp[0] == parse_poly("x1"));
	CHECK(s.comp[1] == parse_poly("x2^2"));
	VectorField z = direct_sum(VectorField::zero(2), VectorField::zero(1));
	for (const auto& c : z.comp) CHECK(c.is_zero());
}

TEST_CASE("gradient fields have symmetric Jacobians")
{
	SUBCASE("V = x1^2/2") { CHECK(gradient_field(parse_poly("1/2*x1^2"), 1).comp[0] == parse_poly("x1")); }
	SUBCASE("V = x1*x2")
	{
		VectorField f = gradient_field(parse_poly("x1*x2"), 2);
		CHECK(f.comp[0] == parse_poly("x2"));
		CHECK(f.comp[1] == parse_poly("x1"));
	}
	SUBCASE("V = x1^2*x2 and random check")
	{
		VectorField f = gradient_field(parse_poly("x1^2*x2"), 2);
		CHECK(f.comp[0] == parse_poly("2*x1*x2"));
		CHECK(f.comp[1] == parse_poly("x1^2"));
		CHECK(f.comp[0].derivative(1) == f.comp[1].derivative(0));

		Rng rng(7);
		for (int trial = 0; trial < 8; ++trial) {
			int d = 2 + trial % 3;
			VectorField g = gradient_field(random_poly(rng, d, 4), d);
			for (int i = 0; i < d; ++i)
				for (int j = i + 1; j < d; ++j)
					CHECK(g.comp[i].derivative(j) == g.comp[j].derivative(i));
		}
	}
}

TEST_CASE("jets are Schwarz symmetric")
{
	Rng rng(11);
	VectorField f = random_field(rng, 3, 3);
	auto x = pt({1, -2, 2});
	Jet j = jet_at(f, x, 3);
	// compare against derivatives taken in the opposite order
	for (int c = 0; c < 3; ++c)
		for (int u = 0; u < 3; ++u)
			for (int v = u; v < 3; ++v) {
				Poly p = f.comp[c].derivative(v).derivative(u);
				std::vector<int> alpha{u, v};
				CHECK(j.value(c, alpha) == p.eval(x));
			}
}

TEST_CASE("nonzero point search")
{
	std::vector<Poly> polys{parse_poly("x1*x2 - x1"), Poly{}};
	auto asg = find_nonzero_point(polys);
	REQUIRE(asg.has_value());
	Poly p = polys[0];
	for (auto& [var, val] : *asg) p = subst_var(p, var, val);
	CHECK_FALSE(p.is_zero());
	CHECK_FALSE(find_nonzero_point({Poly{}}).has_value());
}
