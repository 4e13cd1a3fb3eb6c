#pragma once

// Reference catalog of the 42 order <= 3 trees: target map, source map and the
// printed differential for each row, plus the worked rewrite chains. Used to
// cross-check enumeration, symbolic rendering and the rewrite closure.

#include "exaro/tree.hpp"

#include <string>
#include <vector>

namespace exaro::testdata {

struct CatalogRow {
	int ord;
	std::vector<int> kappa;
	std::vector<int> tau;
	const char* sigma;
	const char* diff;
};

inline const std::vector<CatalogRow>& catalog()
{
	static const std::vector<CatalogRow> rows = {
	    // order 1
	    {1, {1}, {}, "(a0,1)", "f^i ∂_i"},
	    // order 2
	    {2, {0, 0, 1}, {1, 1}, "(a0,1)(a1,a2)", "f^i_jj ∂_i"},
	    {2, {0, 0, 1}, {1, 1}, "(a0,a1)(a2,1)", "f^j_ij ∂_i"},
	    {2, {1, 1}, {1}, "(a0,1)(a1,2)", "f^i_j f^j ∂_i"},
	    {2, {1, 1}, {1}, "(a0,2)(a1,1)", "f^j_j f^i ∂_i"},
	    {2, {1, 1}, {1}, "(a0,a1)(1,2)", "f^j f^j_i ∂_i"},
	    {2, {3}, {}, "(a0,1)(2,3)", "f^i f^j f^j ∂_i"},
	    // order 3, kappa = (0,0,0,0,1)
	    {3, {0, 0, 0, 0, 1}, {1, 1, 1, 1}, "(a0,1)(a1,a2)(a3,a4)", "f^i_jjkk ∂_i"},
	    {3, {0, 0, 0, 0, 1}, {1, 1, 1, 1}, "(a0,a1)(a2,1)(a3,a4)", "f^j_ijkk ∂_i"},
	    // order 3, kappa = (0,1,1)
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,2)(a1,a2)(a3,1)", "f^i_j f^j_kk ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,2)(a1,1)(a2,a3)", "f^i_j f^k_jk ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,a3)(1,2)(a1,a2)", "f^j_i f^j_kk ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,a3)(a1,1)(a2,2)", "f^j_i f^k_jk ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,1)(a1,2)(a2,a3)", "f^i_jk f^j_k ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,a1)(a3,1)(a2,2)", "f^k_ij f^j_k ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,a1)(1,2)(a2,a3)", "f^j_ik f^j_k ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,1)(a1,a2)(a3,2)", "f^i_jj f^k_k ∂_i"},
	    {3, {0, 1, 1}, {1, 1, 2}, "(a0,a1)(a2,1)(a3,2)", "f^j_ij f^k_k ∂_i"},
	    // order 3, kappa = (1,0,0,1)
	    {3, {1, 0, 0, 1}, {1, 1, 1}, "(a0,1)(a1,2)(a2,a3)", "f^i_jkk f^j ∂_i"},
	    {3, {1, 0, 0, 1}, {1, 1, 1}, "(a0,a1)(a2,1)(a3,2)", "f^j_ijk f^k ∂_i"},
	    {3, {1, 0, 0, 1}, {1, 1, 1}, "(a0,a1)(a2,a3)(1,2)", "f^j_ikk f^j ∂_i"},
	    {3, {1, 0, 0, 1}, {1, 1, 1}, "(a0,2)(a1,1)(a2,a3)", "f^i f^j_jkk ∂_i"},
	    // order 3, kappa = (1,2)
	    {3, {1, 2}, {1, 2}, "(a0,1)(a1,2)(a2,3)", "f^i_j f^j_k f^k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,1)(a1,a2)(2,3)", "f^i_j f^k_j f^k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,a1)(1,2)(a2,3)", "f^j_i f^j_k f^k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,a1)(a2,1)(2,3)", "f^j_i f^k_j f^k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,1)(a1,3)(a2,2)", "f^i_j f^j f^k_k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,a2)(a1,1)(2,3)", "f^j_i f^j f^k_k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,3)(a1,2)(a2,1)", "f^i f^j_k f^k_j ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,3)(a1,a2)(1,2)", "f^i f^j_k f^j_k ∂_i"},
	    {3, {1, 2}, {1, 2}, "(a0,3)(a1,1)(a2,2)", "f^i f^j_j f^k_k ∂_i"},
	    // order 3, kappa = (2,0,1); the first differential is printed with a
	    // repeated index pair in some sources, the contracted form is f^i_jk f^j f^k
	    {3, {2, 0, 1}, {1, 1}, "(a0,1)(a1,2)(a2,3)", "f^i_jk f^j f^k ∂_i"},
	    {3, {2, 0, 1}, {1, 1}, "(a0,a1)(a2,2)(1,3)", "f^j_ik f^j f^k ∂_i"},
	    {3, {2, 0, 1}, {1, 1}, "(a0,1)(a1,a2)(2,3)", "f^i_jj f^k f^k ∂_i"},
	    {3, {2, 0, 1}, {1, 1}, "(a0,a1)(a2,1)(2,3)", "f^j_ij f^k f^k ∂_i"},
	    {3, {2, 0, 1}, {1, 1}, "(a0,2)(a1,1)(a2,3)", "f^i f^j_jk f^k ∂_i"},
	    {3, {2, 0, 1}, {1, 1}, "(a0,3)(a1,a2)(1,2)", "f^i f^j f^j_kk ∂_i"},
	    // order 3, kappa = (3,1)
	    {3, {3, 1}, {1}, "(a0,1)(a1,2)(3,4)", "f^i_j f^j f^k f^k ∂_i"},
	    {3, {3, 1}, {1}, "(a0,4)(1,2)(a1,3)", "f^i f^j f^j_k f^k ∂_i"},
	    {3, {3, 1}, {1}, "(a0,a1)(1,2)(3,4)", "f^j_i f^j f^k f^k ∂_i"},
	    {3, {3, 1}, {1}, "(a0,2)(a1,1)(3,4)", "f^i f^j f^j f^k_k ∂_i"},
	    // order 3, kappa = (5)
	    {3, {5}, {}, "(a0,1)(2,3)(4,5)", "f^i f^j f^j f^k f^k ∂_i"},
	};
	return rows;
}

inline Tree row_tree(const CatalogRow& r)
{
	int nv = 0;
	for (int c : r.kappa) nv += c;
	return tree_from_sigma(nv, r.tau, r.sigma);
}

// rewrite chains demonstrated on gradient fields; each chain lists equivalent
// trees, first entry the exotic representative
struct Chain {
	std::vector<int> tau;
	std::vector<const char*> sigmas;
	int nv;
};

inline const std::vector<Chain>& rewrite_chains()
{
	static const std::vector<Chain> chains = {
	    {{1, 1}, {"(a0,1)(a1,2)(a2,3)", "(a0,a1)(a2,2)(1,3)"}, 3},
	    {{1, 2}, {"(a0,1)(a1,2)(a2,3)", "(a0,1)(a1,a2)(2,3)", "(a0,a1)(a2,1)(2,3)"}, 3},
	    {{1, 1, 1}, {"(a0,1)(a1,2)(a2,a3)", "(a0,a1)(a2,1)(a3,2)", "(a0,a1)(a2,a3)(1,2)"}, 2},
	};
	return chains;
}

} // namespace exaro::testdata
