#include "exaro/gradrewrite.hpp"

#include "exaro/elementary.hpp"
#include "exaro/enumerate.hpp"
#include "paper_tables.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace exaro;

namespace {

std::set<std::string> class_encodings(const Tree& t)
{
	std::set<std::string> s;
	for (const Tree& m : equivalence_class(t)) s.insert(canonical_encoding(m));
	return s;
}

} // namespace

TEST_CASE("rewrites preserve the composition")
{
	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			Composition k = composition(t);
			for (const auto& step : rewrite_neighbors(t)) {
				CHECK(composition(step.result) == k);
				CHECK(order(step.result) == n);
			}
		}
}

TEST_CASE("single node has no rewrite sites")
{
	Tree single = tree_from_sigma(1, {}, "(a0,1)");
	CHECK(rewrite_neighbors(single).empty());
	auto cls = equivalence_class(single);
	REQUIRE(cls.size() == 1);
	CHECK(isomorphic(cls[0], single));
}

TEST_CASE("worked rewrite chains close into one class with one exotic member")
{
	for (const auto& chain : testdata::rewrite_chains()) {
		std::vector<Tree> members;
		for (const char* sigma : chain.sigmas)
			members.push_back(tree_from_sigma(chain.nv, chain.tau, sigma));

		auto cls = class_encodings(members[0]);
		for (const Tree& m : members) {
			CHECK(cls.contains(canonical_encoding(m)));
			CHECK(class_encodings(m) == cls);
		}

		// the first chain entry is the exotic endpoint
		for (const Tree& m : members) {
			Tree nf = exotic_normal_form(m);
			CHECK(canonical_encoding(nf) == canonical_encoding(members[0]));
		}
		CHECK(classify(members[0]).is_exotic_tree);
	}
}

TEST_CASE("an exotic tree is its own normal form")
{
	Tree butcher = tree_from_sigma(3, {1, 2}, "(a0,1)(a1,2)(a2,3)");
	CHECK(canonical_encoding(exotic_normal_form(butcher)) == canonical_encoding(butcher));
	CHECK_THROWS_AS(exotic_normal_form(tree_from_sigma(2, {1}, "(a0,2)(a1,1)")),
	                std::invalid_argument);
}

TEST_CASE("every connected class through order three has exactly one exotic tree")
{
	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			if (!classify(t).is_connected) continue;
			int exotic = 0;
			for (const Tree& m : equivalence_class(t))
				if (classify(m).is_exotic_tree) ++exotic;
			CHECK(exotic == 1);
			CHECK_NOTHROW(exotic_normal_form(t));
		}
}

TEST_CASE("equivalent pairs agree exactly on gradient fields")
{
	for (int n = 1; n <= 3; ++n)
		for (const Tree& t : enumerate_by_order(n)) {
			auto cls = equivalence_class(t);
			for (size_t i = 1; i < cls.size(); ++i) {
				auto rep = check_gradient_agreement(cls[0], cls[i], 2, 37 + n);
				CHECK_MESSAGE(rep.equal_on_gradients, sigma_str(cls[0]), " vs ",
				              sigma_str(cls[i]));
			}
		}
}

TEST_CASE("the first chain pair agrees on grad(x1^2 x2)")
{
	Tree cherry = tree_from_sigma(3, {1, 1}, "(a0,1)(a1,2)(a2,3)");
	Tree twisted = tree_from_sigma(3, {1, 1}, "(a0,a1)(a2,2)(1,3)");
	VectorField f = gradient_field(parse_poly("x1^2*x2"), 2);
	CHECK(elementary_differential_poly(cherry, f) == elementary_differential_poly(twisted, f));
	VectorField g = gradient_field(parse_poly("x1^2*x2"), 3);
	CHECK(elementary_differential_poly(cherry, g) == elementary_differential_poly(twisted, g));
}

TEST_CASE("the probe field separates a known equivalent pair")
{
	Tree butcher = tree_from_sigma(3, {1, 2}, "(a0,1)(a1,2)(a2,3)");
	Tree twisted = tree_from_sigma(3, {1, 2}, "(a0,1)(a1,a2)(2,3)");
	auto rep = check_gradient_agreement(butcher, twisted, 3, 41);
	CHECK(rep.equal_on_gradients);
	CHECK(rep.differ_on_probe);
	auto self = check_gradient_agreement(butcher, butcher, 1, 41);
	CHECK(self.equal_on_gradients);
	CHECK_FALSE(self.differ_on_probe);
}

TEST_CASE("classes group adjacent catalog lines on the connected entries")
{
	// among the connected catalog rows of each composition, equivalence
	// classes occupy contiguous runs
	std::map<std::string, std::vector<std::string>> by_kappa; // kappa -> class reps in row order
	for (const auto& row : testdata::catalog()) {
		Tree t = testdata::row_tree(row);
		if (!classify(t).is_connected) continue;
		Composition k = composition(t);
		Tree rep = *equivalence_class(t).begin();
		by_kappa[k.str()].push_back(canonical_encoding(rep));
	}
	for (const auto& [kappa, reps] : by_kappa) {
		std::set<std::string> finished;
		for (size_t i = 0; i < reps.size(); ++i) {
			if (i > 0 && reps[i] != reps[i - 1]) {
				CHECK_MESSAGE(!finished.contains(reps[i]), "class split apart under ", kappa);
				finished.insert(reps[i - 1]);
			}
		}
	}
}
