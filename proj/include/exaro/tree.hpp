#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exaro {

enum class ElemKind { Vertex, Arrow };

/// Tagged reference to a vertex (1..|V|) or an arrow (0..|A|, arrow 0 distinguished).
struct ElementId {
	ElemKind kind = ElemKind::Vertex;
	int index = 0;

	friend bool operator==(const ElementId&, const ElementId&) = default;
};

inline ElementId vertex(int v) { return {ElemKind::Vertex, v}; }
inline ElementId arrow(int a) { return {ElemKind::Arrow, a}; }

enum class ValidationCode {
	FixedPointInSigma,
	NonInvolutiveSigma,
	UncoveredElement,
	TauOutOfRange,
	TauDefinedOnArrowZero,
	BadCounts,
};

struct ValidationError : std::runtime_error {
	ValidationCode code;
	ValidationError(ValidationCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

/// Exotic aromatic tree (V, A0, sigma, tau): vertices 1..nv, arrows 0..na
/// (the multi-aroma variant drops arrow 0), tau the total target map on
/// arrows 1..na, and sigma a fixed-point-free involution on all elements,
/// stored over flat element ids. Immutable after validation.
struct Tree {
	int nv = 0;
	int na = 0;        // arrows excluding arrow 0
	bool rooted = true; // whether arrow 0 is present
	std::vector<int> tau;   // tau[a-1] = target vertex of arrow a, 1-based
	std::vector<int> sigma; // involution over element ids

	int n_elems() const { return nv + na + (rooted ? 1 : 0); }

	// vertex v in 1..nv <-> id v-1; arrow a <-> id nv+a (rooted) or nv+a-1
	int vid(int v) const { return v - 1; }
	int aid(int a) const { return rooted ? nv + a : nv + a - 1; }
	bool id_is_vertex(int id) const { return id < nv; }
	int vertex_of(int id) const { return id + 1; }
	int arrow_of(int id) const { return rooted ? id - nv : id - nv + 1; }
	ElementId elem_of(int id) const
	{
		return id_is_vertex(id) ? vertex(vertex_of(id)) : arrow(arrow_of(id));
	}
	int id_of(const ElementId& e) const
	{
		return e.kind == ElemKind::Vertex ? vid(e.index) : aid(e.index);
	}

	friend bool operator==(const Tree&, const Tree&) = default;
};

/// Unvalidated candidate encoding, mirroring the JSON schema.
struct RawTree {
	int vertices = 0;
	int arrows = 0; // |A0| for rooted input, |A| otherwise
	bool rooted = true;
	std::vector<int> tau;
	std::vector<std::pair<ElementId, ElementId>> sigma;
};

/// Checks all structural invariants; throws ValidationError on the first violation.
Tree validate(const RawTree& raw);

/// Composition kappa: counts[j] = number of vertices that are the target of
/// exactly j arrows. Trailing zeros trimmed.
struct Composition {
	std::vector<int> counts;

	int size() const;        // |kappa| = sum of counts
	int derived_size() const; // |kappa'| = sum j*counts[j]
	std::vector<int> derived() const;
	std::string str() const; // "(1,2)"

	friend bool operator==(const Composition&, const Composition&) = default;
	friend auto operator<=>(const Composition&, const Composition&) = default;
};

Composition composition(const Tree& t);

/// Order |gamma| = |V| + #lianas - #stolons; equals (|kappa|+|kappa'|+1)/2 for
/// rooted trees and (|kappa|+|kappa'|)/2 for multi-aromas.
int order(const Tree& t);

int count_lianas(const Tree& t);  // includes a ghost liana
int count_stolons(const Tree& t);

struct ClassificationFlags {
	bool is_aromatic = false;
	bool is_connected = false;
	bool is_exotic_tree = false;
	bool is_butcher_tree = false;
	bool has_liana = false;
	bool has_stolon = false;
	bool has_loop = false;
};

ClassificationFlags classify(const Tree& t);

/// Splits into the rooted component (nullopt for multi-aroma input) and the
/// aromas, each relabeled to a standalone graph, aromas sorted canonically.
struct Components {
	std::optional<Tree> rooted;
	std::vector<Tree> aromas;
};

Components connected_components(const Tree& t);

/// Deterministic, platform-independent encoding; equal iff the graphs are
/// isomorphic under bijections fixing arrow 0 and commuting with sigma and tau.
std::string canonical_encoding(const Tree& t);

/// Relabeled representative realizing the canonical encoding. Component order:
/// rooted part first, then aromas by canonical encoding.
Tree canonicalize(const Tree& t);

/// Number of structure-preserving bijections (arrow 0 fixed when present).
long symmetry_coefficient(const Tree& t);

bool isomorphic(const Tree& a, const Tree& b);

/// Combined graph: gamma's elements first, then the multi-aroma's, so gamma's
/// sigma-classes keep their positions in the dual-field numbering.
Tree attach(const Tree& gamma, const Tree& multi_aroma);

/// sigma-classes (unordered sigma pairs) as id pairs; for rooted trees the
/// class of arrow 0 comes first, the rest follow min-element order.
std::vector<std::pair<int, int>> sigma_classes(const Tree& t);

// --- construction helpers and formats ---

/// Builds from a sigma string such as "(a0,1)(a1,a2)(2,3)"; na = tau.size().
Tree tree_from_sigma(int nv, const std::vector<int>& tau, const std::string& sigma);
Tree aroma_from_sigma(int nv, const std::vector<int>& tau, const std::string& sigma);

std::string sigma_str(const Tree& t);
std::string tau_str(const Tree& t);

std::string to_json(const Tree& t);
Tree from_json(const std::string& text);

std::string to_dot(const Tree& t);

/// Relabels vertices/arrows by the given permutations (identity on arrow 0);
/// used by tests to exercise labeling invariance.
Tree relabel(const Tree& t, const std::vector<int>& vperm, const std::vector<int>& aperm);

} // namespace exaro
