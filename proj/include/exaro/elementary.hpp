#pragma once

#include "exaro/poly.hpp"
#include "exaro/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace exaro {

struct DimensionMismatch : std::runtime_error {
	DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};

/// Symbolic elementary differential: one multiplicative factor per vertex,
/// one Kronecker delta per sigma pair, indices named per element. Every
/// symbol occurs exactly twice across factors, deltas and the output slot.
struct IndexExpression {
	struct Factor {
		int vertex = 0;
		std::string out_symbol;
		std::vector<std::string> in_symbols;
	};
	std::vector<Factor> factors;
	std::vector<std::pair<std::string, std::string>> deltas;
	std::string output_symbol; // symbol of arrow 0; empty for multi-aromas
	std::vector<std::string> free_symbols; // one per sigma class, render letters
};

IndexExpression index_expression(const Tree& t);

/// Rendering in index notation, e.g. "f^i_j f^j_kk d_i" (multi-aromas render
/// without the trailing d_i). The root class letter is always `i`.
std::string symbolic_str(const Tree& t);

/// Exact value of F_d(gamma)(f) at x. Rooted trees give the d components;
/// multi-aromas give the single scalar value.
std::vector<Rat> elementary_differential(const Tree& t, const VectorField& f,
                                         std::span<const Rat> x);

/// Same contraction with polynomial jets: the result components are exact
/// polynomials in the field's variables (coordinates and any parameters).
std::vector<Poly> elementary_differential_poly(const Tree& t, const VectorField& f);

/// Double-precision path for float-orthogonal trials only.
std::vector<double> elementary_differential_d(const Tree& t, const DVectorField& f,
                                              std::span<const double> x);

/// Map from canonical trees to rational coefficients with finite support per
/// node-count grade.
class TruncatedSeries {
  public:
	explicit TruncatedSeries(int node_bound) : node_bound_(node_bound) {}

	void set(const Tree& t, const Rat& c);
	int node_bound() const { return node_bound_; }
	size_t size() const { return entries_.size(); }

	/// Sum of c_gamma h^w(gamma) F(gamma)(f)(x); w = order by default, node
	/// count when graded_by_order is false. Rooted entries only.
	std::vector<Rat> evaluate(const VectorField& f, std::span<const Rat> x,
	                          const Rat& h = Rat(1), bool graded_by_order = true) const;

  private:
	struct Entry {
		Tree tree;
		Rat coeff;
	};
	int node_bound_;
	std::map<std::string, Entry> entries_; // by canonical encoding
};

} // namespace exaro
