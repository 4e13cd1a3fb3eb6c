#pragma once

#include "exaro/elementary.hpp"
#include "exaro/poly.hpp"
#include "exaro/tree.hpp"

#include <string>
#include <vector>

namespace exaro {

enum class ThetaKind { NodePlain, NodeStolon, LianaArrow };

/// Name of one theta parameter: kind plus 1-based ordinal within its kind,
/// following the component-ordered numbering (rooted part first, aromas after).
struct ThetaIndex {
	ThetaKind kind;
	int ordinal;
	int element_id; // host element carrying the parameter

	friend bool operator==(const ThetaIndex&, const ThetaIndex&) = default;
};

/// The theta-parametrized vector field of a host graph: one coordinate per
/// sigma class (root class first), liana coordinates identically zero, each
/// component multilinear in theta. Parameters occupy variables kThetaBase+i.
struct DualField {
	VectorField field;              // dim = order(host)
	std::vector<ThetaIndex> thetas; // position i <-> variable kThetaBase + i
	std::vector<std::pair<int, int>> classes; // sigma classes, coordinate order

	int theta_var(int i) const { return kThetaBase + i; }
};

DualField dual_field(const Tree& host);

/// (F_{|g2|}(g1)(f_{g2}^theta))^1 differentiated once per theta parameter of
/// g1, at theta = 0, x = 0. Parameters are matched by (kind, ordinal); a
/// parameter of g1 with no counterpart in g2 makes the pairing 0.
Rat pairing(const Tree& g1, const Tree& g2);

/// Pairing with every theta fixed to 1 and no derivative taken, at x = 0;
/// demonstrates why the parameters are needed.
Rat pairing_theta_free(const Tree& g1, const Tree& g2);

/// True when g2 = mu g1 for some multi-aroma mu: equal rooted parts and g1's
/// aroma multiset contained in g2's.
bool is_mu_gamma(const Tree& g1, const Tree& g2);

struct IndependenceCertificate {
	std::vector<std::string> encodings;
	std::vector<std::vector<Rat>> matrix; // matrix[i][j] = pairing(t_i, t_j)
	std::vector<long> symmetry;           // sigma(t_i)
	bool diagonal = false;                // zero off-diagonal
	bool triangular = false;              // zero below diagonal in (order, encoding) sort
	bool nonsingular = false;
};

/// Trees must be pairwise distinct canonical representatives, pre-sorted by
/// (order, canonical encoding) for the triangular report.
IndependenceCertificate independence_certificate(const std::vector<Tree>& trees);

} // namespace exaro
