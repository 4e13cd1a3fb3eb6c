#pragma once

#include "exaro/rational.hpp"
#include "exaro/rng.hpp"

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace exaro {

/// Variable indices at and above this base are formal parameters (theta slots);
/// coordinate variables always sit below it, so affine substitutions on the
/// coordinates can never collide with parameters.
inline constexpr int kThetaBase = 64;

/// Sparse multivariate polynomial over a commutative coefficient ring C.
/// Monomials are exponent vectors with trailing zeros trimmed, so the same
/// polynomial compares equal regardless of the ambient variable count.
template <class C> class PolyT {
  public:
	using Mono = std::vector<uint32_t>;

	PolyT() = default;

	static PolyT constant(const C& c)
	{
		PolyT p;
		if (!(c == C{})) p.terms_[Mono{}] = c;
		return p;
	}

	static PolyT var(int i)
	{
		PolyT p;
		Mono m(i + 1, 0);
		m[i] = 1;
		p.terms_[std::move(m)] = C(1);
		return p;
	}

	const std::map<Mono, C>& terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }

	bool operator==(const PolyT& o) const { return terms_ == o.terms_; }

	PolyT& operator+=(const PolyT& o)
	{
		for (const auto& [m, c] : o.terms_) add_term(m, c);
		return *this;
	}

	PolyT& operator-=(const PolyT& o)
	{
		for (const auto& [m, c] : o.terms_) add_term(m, C(-1) * c);
		return *this;
	}

	friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
	friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }

	PolyT operator-() const
	{
		PolyT r;
		for (const auto& [m, c] : terms_) r.terms_[m] = C(-1) * c;
		return r;
	}

	friend PolyT operator*(const PolyT& a, const PolyT& b)
	{
		PolyT r;
		for (const auto& [ma, ca] : a.terms_)
			for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
		return r;
	}

	PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

	friend PolyT operator*(const C& s, const PolyT& p)
	{
		PolyT r;
		if (s == C{}) return r;
		for (const auto& [m, c] : p.terms_) {
			C v = s * c;
			if (!(v == C{})) r.terms_[m] = std::move(v);
		}
		return r;
	}

	PolyT derivative(int var) const
	{
		PolyT r;
		for (const auto& [m, c] : terms_) {
			if (static_cast<int>(m.size()) <= var || m[var] == 0) continue;
			Mono d = m;
			C nc = c * C(static_cast<int>(m[var]));
			d[var] -= 1;
			trim(d);
			r.add_term(d, nc);
		}
		return r;
	}

	/// Evaluates with the given values for variables [0, point.size()).
	/// Any variable with a nonzero exponent must be covered.
	C eval(std::span<const C> point) const
	{
		C acc{};
		for (const auto& [m, c] : terms_) {
			C t = c;
			for (size_t i = 0; i < m.size(); ++i) {
				if (m[i] == 0) continue;
				assert(i < point.size());
				for (uint32_t k = 0; k < m[i]; ++k) t = t * point[i];
			}
			acc = acc + t;
		}
		return acc;
	}

	/// Substitutes x_i -> sum_j A[i][j] * x_j + b[i] for i < A.size().
	/// Variables at or above A.size() are left untouched.
	PolyT subst_affine(const std::vector<std::vector<C>>& A, const std::vector<C>& b) const
	{
		const int n = static_cast<int>(A.size());
		std::vector<PolyT> images(n);
		for (int i = 0; i < n; ++i) {
			PolyT li = constant(b[i]);
			for (size_t j = 0; j < A[i].size(); ++j) {
				if (A[i][j] == C{}) continue;
				li += A[i][j] * var(static_cast<int>(j));
			}
			images[i] = std::move(li);
		}
		PolyT r;
		for (const auto& [m, c] : terms_) {
			PolyT t = constant(c);
			for (size_t i = 0; i < m.size(); ++i) {
				if (m[i] == 0) continue;
				const PolyT& im = static_cast<int>(i) < n ? images[i] : var(static_cast<int>(i));
				for (uint32_t k = 0; k < m[i]; ++k) t *= im;
			}
			r += t;
		}
		return r;
	}

	/// Renumbers variables: var i -> perm[i] (i < perm.size()); others unchanged.
	PolyT remap_vars(const std::vector<int>& perm) const
	{
		PolyT r;
		for (const auto& [m, c] : terms_) {
			Mono nm;
			for (size_t i = 0; i < m.size(); ++i) {
				if (m[i] == 0) continue;
				int tgt = i < perm.size() ? perm[i] : static_cast<int>(i);
				if (static_cast<size_t>(tgt) >= nm.size()) nm.resize(tgt + 1, 0);
				nm[tgt] += m[i];
			}
			r.add_term(nm, c);
		}
		return r;
	}

	/// Coefficient of the exact monomial (trailing zeros ignored).
	C coefficient(Mono m) const
	{
		trim(m);
		auto it = terms_.find(m);
		return it == terms_.end() ? C{} : it->second;
	}

	int total_degree() const
	{
		int d = 0;
		for (const auto& [m, c] : terms_) {
			int s = 0;
			for (auto e : m) s += static_cast<int>(e);
			if (s > d) d = s;
		}
		return d;
	}

	int max_var() const
	{
		int mv = -1;
		for (const auto& [m, c] : terms_)
			if (!m.empty()) mv = std::max(mv, static_cast<int>(m.size()) - 1);
		return mv;
	}

	std::string str(const std::function<std::string(int)>& var_name) const;

	void add_term(Mono m, const C& c)
	{
		if (c == C{}) return;
		trim(m);
		auto [it, inserted] = terms_.try_emplace(std::move(m), c);
		if (!inserted) {
			it->second = it->second + c;
			if (it->second == C{}) terms_.erase(it);
		}
	}

	static void trim(Mono& m)
	{
		while (!m.empty() && m.back() == 0) m.pop_back();
	}

	static Mono mono_mul(const Mono& a, const Mono& b)
	{
		Mono r(std::max(a.size(), b.size()), 0);
		for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
		for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
		return r;
	}

  private:
	std::map<Mono, C> terms_;
};

using Poly = PolyT<Rat>;
using DPoly = PolyT<double>;

/// d-dimensional polynomial vector field. Components may involve parameter
/// variables (indices >= kThetaBase) in addition to the coordinates x_0..x_{d-1}.
template <class C> struct VectorFieldT {
	int dim = 0;
	std::vector<PolyT<C>> comp;

	static VectorFieldT zero(int d) { return {d, std::vector<PolyT<C>>(d)}; }
};

using VectorField = VectorFieldT<Rat>;
using DVectorField = VectorFieldT<double>;

/// Affine map x -> A x + b between coordinate spaces.
template <class C> struct AffineMapT {
	std::vector<std::vector<C>> A; // rows() x cols()
	std::vector<C> b;              // size rows()

	int rows() const { return static_cast<int>(A.size()); }
	int cols() const { return A.empty() ? 0 : static_cast<int>(A[0].size()); }

	std::vector<C> apply(std::span<const C> x) const
	{
		std::vector<C> y(b);
		for (int i = 0; i < rows(); ++i)
			for (int j = 0; j < cols(); ++j) y[i] = y[i] + A[i][j] * x[j];
		return y;
	}

	static AffineMapT identity(int d)
	{
		AffineMapT g;
		g.A.assign(d, std::vector<C>(d, C{}));
		g.b.assign(d, C{});
		for (int i = 0; i < d; ++i) g.A[i][i] = C(1);
		return g;
	}
};

using AffineMap = AffineMapT<Rat>;
using DAffineMap = AffineMapT<double>;

// --- exact linear algebra over the rationals ---

std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b);
std::vector<std::vector<Rat>> mat_transpose(const std::vector<std::vector<Rat>>& a);
bool mat_invert(const std::vector<std::vector<Rat>>& a, std::vector<std::vector<Rat>>& inv);
int mat_rank(std::vector<std::vector<Rat>> m);
bool is_identity(const std::vector<std::vector<Rat>>& a);

/// True when A^T A = I (columns orthonormal) resp. A A^T = I (rows orthonormal).
bool is_left_orthogonal(const std::vector<std::vector<Rat>>& a);
bool is_right_orthogonal(const std::vector<std::vector<Rat>>& a);

struct SingularMatrix : std::runtime_error {
	SingularMatrix() : std::runtime_error("matrix is singular over the rationals") {}
};

// --- vector field operations ---

/// Partial derivative of component i by the (unsorted) variable list alpha.
template <class C>
PolyT<C> partial_derivative(const VectorFieldT<C>& f, int comp, std::span<const int> alpha)
{
	if (comp < 0 || comp >= f.dim) throw std::out_of_range("component index out of range");
	PolyT<C> p = f.comp[comp];
	for (int v : alpha) {
		if (v < 0 || v >= f.dim) throw std::out_of_range("derivative index out of range");
		p = p.derivative(v);
	}
	return p;
}

/// Pushforward (g.f)(x) = A f(A^-1 (x - b)) for an invertible square map.
VectorField affine_pushforward(const AffineMap& g, const VectorField& f);
DVectorField affine_pushforward_d(const DAffineMap& g, const DVectorField& f);

/// Block field h = f1 (+) f2, h(x, y) = (f1(x), f2(y)).
VectorField direct_sum(const VectorField& f1, const VectorField& f2);

/// f = grad V; the Jacobian of the result is symmetric by construction.
VectorField gradient_field(const Poly& V, int dim);

/// All partial derivatives of f at x up to order k, stored under sorted
/// multi-indices (Schwarz symmetry makes the sorted form canonical).
struct Jet {
	int dim = 0;
	int max_order = 0;
	std::vector<Rat> x;
	std::map<std::pair<int, std::vector<int>>, Rat> entries;

	const Rat& value(int comp, std::vector<int> alpha_sorted) const;
};

Jet jet_at(const VectorField& f, std::span<const Rat> x, int max_order);

/// Substitutes a single variable by a constant.
template <class C> PolyT<C> subst_var(const PolyT<C>& p, int var, const C& val)
{
	PolyT<C> r;
	for (const auto& [m, c] : p.terms()) {
		if (static_cast<int>(m.size()) <= var || m[var] == 0) {
			r.add_term(m, c);
			continue;
		}
		C nc = c;
		for (uint32_t k = 0; k < m[var]; ++k) nc = nc * val;
		typename PolyT<C>::Mono nm = m;
		nm[var] = 0;
		r.add_term(nm, nc);
	}
	return r;
}

/// Substitutes the parameter variables kThetaBase+i by vals[i]; parameters
/// beyond the list are set to the last value's default of 1.
Poly instantiate_params(const Poly& p, std::span<const Rat> vals);
VectorField instantiate_params(const VectorField& f, std::span<const Rat> vals);

/// A nonzero rational vector in the kernel of A, if one exists.
std::optional<std::vector<Rat>> nullspace_vector(const std::vector<std::vector<Rat>>& A);

/// Assignment of small rational values under which at least one of the given
/// polynomials is nonzero; empty optional when all are identically zero.
std::optional<std::vector<std::pair<int, Rat>>>
find_nonzero_point(const std::vector<Poly>& polys);

// --- parsing / printing ---

/// Parses standard polynomial syntax: `2*x2^2 - x1*x3 + 1/2`.
Poly parse_poly(const std::string& text);

/// Parses one component per line: `f1 = 2*x2^2 - x1*x3`. Dimension is the
/// number of lines; every referenced variable must fit in it.
VectorField parse_field(const std::string& text);

/// Comma-separated rational point: `1/2, -3, 0`.
std::vector<Rat> parse_point(const std::string& text);

std::string poly_str(const Poly& p);
std::string field_str(const VectorField& f);

// --- random generators (fixed seed, reproducible) ---

Poly random_poly(Rng& rng, int nvars, int maxdeg, int coeff_mag = 3);
VectorField random_field(Rng& rng, int dim, int maxdeg = 3, int coeff_mag = 3);
std::vector<Rat> random_point(Rng& rng, int dim);

template <class C> VectorFieldT<C> field_cast(const VectorField& f, const C&)
{
	VectorFieldT<C> r;
	r.dim = f.dim;
	for (const auto& p : f.comp) {
		PolyT<C> q;
		for (const auto& [m, c] : p.terms()) q.add_term(m, C(to_double(c)));
		r.comp.push_back(std::move(q));
	}
	return r;
}

DVectorField to_double_field(const VectorField& f);

} // namespace exaro
