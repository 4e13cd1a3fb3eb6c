#pragma once

#include "exaro/poly.hpp"
#include "exaro/tree.hpp"

#include <string>
#include <vector>

namespace exaro {

enum class RewriteKind {
	EdgeLianaInversion,
	EdgeStolonInversion,
	StolonLianaSimplification,
};

/// One applicable rewrite: the Schwarz swap between vertex `vertex` and an
/// arrow targeting it, classified by the sigma partners it touches.
struct RewriteRule {
	RewriteKind kind;
	int vertex; // site vertex v
	int arrow;  // site arrow with tau(arrow) = vertex
};

struct RewriteStep {
	RewriteRule rule;
	Tree result; // canonicalized
};

/// All trees reachable by one rule application at one site, canonicalized and
/// deduplicated. Every neighbor keeps the composition of the input.
std::vector<RewriteStep> rewrite_neighbors(const Tree& t);

/// Closure of rewrite_neighbors, sorted by canonical encoding. Finite because
/// the composition is preserved.
std::vector<Tree> equivalence_class(const Tree& t);

struct NoExoticRepresentative : std::runtime_error {
	NoExoticRepresentative(const std::string& m) : std::runtime_error(m) {}
};
struct NonUniqueRepresentative : std::runtime_error {
	NonUniqueRepresentative(const std::string& m) : std::runtime_error(m) {}
};

/// The unique exotic tree in the equivalence class of a connected tree.
Tree exotic_normal_form(const Tree& t);

struct GradientAgreementReport {
	bool equal_on_gradients = false;   // exact polynomial identity, all trials
	int gradient_trials = 0;
	bool differ_on_probe = false;      // non-gradient probe separated the pair
};

/// Exact equality of the elementary differentials on random gradient fields in
/// d = 2, 3, plus one non-gradient probe field where equality may fail.
GradientAgreementReport check_gradient_agreement(const Tree& t1, const Tree& t2, int trials,
                                                 uint64_t seed);

} // namespace exaro
