#pragma once

#include "exaro/poly.hpp"
#include "exaro/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exaro {

enum class TransformKind {
	Orthogonal,       // generic float orthogonal, advisory trials only
	SignedPermutation,
	GeneralLinear,
	Stiefel,   // A^T A = I, exact generator
	Grassmann, // A A^T = I, exact generator
	Affine,
};

/// Exact structured transform; Orthogonal is not constructible here (float-only).
AffineMap make_transform(TransformKind kind, int d1, int d2, Rng& rng);

DAffineMap make_orthogonal_d(int d, Rng& rng);

enum class Property { Orthogonal, GL, Stiefel, Grassmann, Affine, Decoupling };

std::string property_name(Property p);

/// A refuted check carries the exact witness: both sides disagree as rationals.
struct Witness {
	std::string transform;
	std::string field;
	std::string point;
	std::vector<Rat> lhs;
	std::vector<Rat> rhs;
};

struct EquivarianceReport {
	Property property = Property::Orthogonal;
	int exact_trials = 0;
	int exact_passed = 0;
	int float_trials = 0;
	double max_residual = 0.0;
	bool verdict_pass = true;
	std::optional<Witness> witness;
};

/// Signed permutations with rational offsets exactly; generic float
/// orthogonals to tolerance unless exact_only.
EquivarianceReport check_orthogonal_equivariance(const Tree& t, int trials, double tol,
                                                 uint64_t seed, bool exact_only = false);

EquivarianceReport check_gl_equivariance(const Tree& t, int trials, uint64_t seed);

/// kind must be Stiefel, Grassmann or Affine. Premise pairs are built from the
/// transform (zero extension / pullback plus image-vanishing or kernel
/// perturbations); refutations follow the dual-field projection recipes.
EquivarianceReport check_strong_equivariance(const Tree& t, TransformKind kind, int trials,
                                             uint64_t seed);

EquivarianceReport check_decoupling(const Tree& t, bool trivially, int trials, uint64_t seed);

/// Expected class membership per property.
bool property_predicate(Property p, const ClassificationFlags& flags);

struct TreeVerdicts {
	Tree tree;
	std::string encoding;
	ClassificationFlags flags;
	std::vector<std::pair<Property, EquivarianceReport>> reports;
	std::vector<Property> disagreements; // verdict != predicate
};

struct ClassificationMatrix {
	std::vector<TreeVerdicts> rows;
	bool all_agree = true;
};

/// Runs every property check on every tree of order <= n and compares the
/// verdicts with the class predicates. A disagreement is a hard failure for
/// callers that require it.
ClassificationMatrix classification_matrix(int n, uint64_t seed, bool exact_only = true,
                                           const std::vector<Property>& props = {});

std::string transform_str(const AffineMap& g);

} // namespace exaro
