#include "exaro/equivariance.hpp"

#include "exaro/duality.hpp"
#include "exaro/elementary.hpp"
#include "exaro/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace exaro {

std::string property_name(Property p)
{
	switch (p) {
	case Property::Orthogonal: return "orthogonal";
	case Property::GL: return "gl";
	case Property::Stiefel: return "stiefel";
	case Property::Grassmann: return "grassmann";
	case Property::Affine: return "affine";
	case Property::Decoupling: return "decoupling";
	}
	return "?";
}

bool property_predicate(Property p, const ClassificationFlags& f)
{
	switch (p) {
	case Property::Orthogonal: return true;
	case Property::GL: return f.is_aromatic;
	case Property::Stiefel: return !f.has_liana && !f.has_loop;
	case Property::Grassmann: return f.is_exotic_tree;
	case Property::Affine: return f.is_butcher_tree;
	case Property::Decoupling: return f.is_connected;
	}
	return false;
}

namespace {

using Mat = std::vector<std::vector<Rat>>;

std::vector<Rat> mat_apply(const Mat& A, std::span<const Rat> v)
{
	std::vector<Rat> r(A.size(), Rat(0));
	for (size_t i = 0; i < A.size(); ++i)
		for (size_t j = 0; j < A[i].size(); ++j) r[i] += A[i][j] * v[j];
	return r;
}

std::vector<Rat> rand_offset(Rng& rng, int d)
{
	std::vector<Rat> b(d);
	for (auto& v : b) v = rng.small_rat();
	return b;
}

Mat signed_perm_matrix(Rng& rng, int d)
{
	std::vector<int> perm(d);
	std::iota(perm.begin(), perm.end(), 0);
	for (int i = d - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
	Mat A(d, std::vector<Rat>(d, Rat(0)));
	for (int j = 0; j < d; ++j) A[perm[j]][j] = rng.chance(1, 2) ? Rat(1) : Rat(-1);
	return A;
}

// columns (resp. rows) are distinct signed standard basis vectors
struct Generator {
	AffineMap map;
	std::vector<int> used;   // basis directions taken
	std::vector<int> unused; // complement directions
};

Generator stiefel_generator(Rng& rng, int d1, int d2)
{
	if (d1 > d2) throw std::invalid_argument("stiefel generator needs d1 <= d2");
	std::vector<int> dirs(d2);
	std::iota(dirs.begin(), dirs.end(), 0);
	for (int i = d2 - 1; i > 0; --i) std::swap(dirs[i], dirs[rng.range(0, i)]);
	Generator g;
	g.map.A.assign(d2, std::vector<Rat>(d1, Rat(0)));
	g.map.b = rand_offset(rng, d2);
	for (int k = 0; k < d1; ++k) {
		g.used.push_back(dirs[k]);
		g.map.A[dirs[k]][k] = rng.chance(1, 2) ? Rat(1) : Rat(-1);
	}
	for (int k = d1; k < d2; ++k) g.unused.push_back(dirs[k]);
	std::sort(g.unused.begin(), g.unused.end());
	return g;
}

Generator grassmann_generator(Rng& rng, int d1, int d2)
{
	if (d2 > d1) throw std::invalid_argument("grassmann generator needs d1 >= d2");
	std::vector<int> dirs(d1);
	std::iota(dirs.begin(), dirs.end(), 0);
	for (int i = d1 - 1; i > 0; --i) std::swap(dirs[i], dirs[rng.range(0, i)]);
	Generator g;
	g.map.A.assign(d2, std::vector<Rat>(d1, Rat(0)));
	g.map.b = rand_offset(rng, d2);
	for (int k = 0; k < d2; ++k) {
		g.used.push_back(dirs[k]);
		g.map.A[k][dirs[k]] = rng.chance(1, 2) ? Rat(1) : Rat(-1);
	}
	for (int k = d2; k < d1; ++k) g.unused.push_back(dirs[k]);
	std::sort(g.unused.begin(), g.unused.end());
	return g;
}

Mat random_invertible(Rng& rng, int d)
{
	while (true) {
		Mat A(d, std::vector<Rat>(d));
		for (auto& row : A)
			for (auto& v : row) v = rng.coeff(3);
		if (mat_rank(A) == d) return A;
	}
}

Mat random_full_rank(Rng& rng, int rows, int cols)
{
	while (true) {
		Mat A(rows, std::vector<Rat>(cols));
		for (auto& row : A)
			for (auto& v : row) v = rng.coeff(3);
		if (mat_rank(A) == std::min(rows, cols)) return A;
	}
}

// substitution of coordinates under x -> A x + b, leaving parameters alone
VectorField pullback_field(const VectorField& f, const Mat& A, const std::vector<Rat>& b)
{
	VectorField r;
	r.dim = f.dim;
	for (const auto& p : f.comp) r.comp.push_back(p.subst_affine(A, b));
	return r;
}

std::vector<Rat> theta_primes(size_t n)
{
	static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
	std::vector<Rat> v;
	for (size_t i = 0; i < n; ++i) v.push_back(Rat(primes[i % std::size(primes)]));
	return v;
}

Witness make_witness(const AffineMap& g, const VectorField& field, std::span<const Rat> x,
                     std::vector<Rat> lhs, std::vector<Rat> rhs)
{
	Witness w;
	w.transform = transform_str(g);
	w.field = field_str(field);
	std::ostringstream os;
	for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << rat_str(x[i]);
	w.point = os.str();
	w.lhs = std::move(lhs);
	w.rhs = std::move(rhs);
	return w;
}

// classes whose coordinates get dropped in the refutation splittings
struct ClassSplit {
	std::vector<std::pair<int, int>> classes;
	std::vector<bool> is_liana, is_stolon, is_loop_node;
};

ClassSplit class_split(const Tree& t)
{
	ClassSplit s;
	DualField df = dual_field(t);
	s.classes = df.classes;
	// loop vertices of the functional graph v -> tau(sigma(v))
	std::vector<int> succ(t.nv + 1, 0);
	for (int v = 1; v <= t.nv; ++v) {
		int p = t.sigma[t.vid(v)];
		if (!t.id_is_vertex(p) && t.arrow_of(p) >= 1 &&
		    t.arrow_of(p) <= static_cast<int>(t.tau.size()))
			succ[v] = t.tau[t.arrow_of(p) - 1];
	}
	// after nv steps a surviving walk sits on a cycle; mark that whole cycle
	std::vector<bool> in_loop(t.nv + 1, false);
	for (int v = 1; v <= t.nv; ++v) {
		int u = v;
		for (int k = 0; k < t.nv; ++k) {
			if (!u) break;
			u = succ[u];
		}
		if (!u || in_loop[u]) continue;
		int w = u;
		do {
			in_loop[w] = true;
			w = succ[w];
		} while (w != u);
	}
	for (const auto& [p, q] : s.classes) {
		bool pv = t.id_is_vertex(p), qv = t.id_is_vertex(q);
		s.is_stolon.push_back(pv && qv);
		s.is_liana.push_back(!pv && !qv);
		bool loopi = false;
		if (pv != qv) {
			int v = t.vertex_of(pv ? p : q);
			loopi = in_loop[v];
		}
		s.is_loop_node.push_back(loopi);
	}
	return s;
}

struct RecipeResult {
	std::optional<Witness> witness;
};

// embeds the liana/loop-free coordinates; Stiefel-equivariance would force the
// two sides equal, and the dropped dual-field parameters break it
std::optional<Witness> stiefel_refutation(const Tree& t)
{
	ClassSplit s = class_split(t);
	DualField df = dual_field(t);
	const int d2 = static_cast<int>(s.classes.size());
	std::vector<int> yidx;
	for (int c = 0; c < d2; ++c)
		if (!s.is_liana[c] && !s.is_loop_node[c]) yidx.push_back(c);
	const int d1 = static_cast<int>(yidx.size());
	if (d1 == d2) return std::nullopt;

	AffineMap g;
	g.A.assign(d2, std::vector<Rat>(d1, Rat(0)));
	g.b.assign(d2, Rat(0));
	for (int k = 0; k < d1; ++k) g.A[yidx[k]][k] = 1;

	// f1(x') = A^T f2(A x'): keep the embedded coordinates, zero the rest
	Mat S(d2, std::vector<Rat>(d1, Rat(0)));
	for (int k = 0; k < d1; ++k) S[yidx[k]][k] = 1;
	std::vector<Rat> zero_b(d2, Rat(0));
	VectorField f2 = df.field;
	VectorField f1;
	f1.dim = d1;
	for (int k = 0; k < d1; ++k) f1.comp.push_back(f2.comp[yidx[k]].subst_affine(S, zero_b));

	auto big = elementary_differential_poly(t, f2);
	auto small = elementary_differential_poly(t, f1);
	std::vector<Poly> diff(d2);
	for (int i = 0; i < d2; ++i) {
		diff[i] = big[i].subst_affine(S, zero_b);
		auto pos = std::find(yidx.begin(), yidx.end(), i);
		if (pos != yidx.end()) diff[i] -= small[pos - yidx.begin()];
	}
	auto point = find_nonzero_point(diff);
	if (!point) return std::nullopt;

	// instantiate thetas and the evaluation point, re-check numerically
	std::vector<Rat> thetas(df.thetas.size(), Rat(1));
	std::vector<Rat> xp(d1, Rat(0));
	for (auto& [var, val] : *point) {
		if (var >= kThetaBase)
			thetas[var - kThetaBase] = val;
		else if (var < d1)
			xp[var] = val;
	}
	VectorField f1c = instantiate_params(f1, thetas);
	VectorField f2c = instantiate_params(f2, thetas);
	auto lhs = elementary_differential(t, f2c, g.apply(xp));
	auto rhs = mat_apply(g.A, elementary_differential(t, f1c, xp));
	if (lhs == rhs) return std::nullopt;
	return make_witness(g, f2c, xp, std::move(lhs), std::move(rhs));
}

// projects out the stolon/loop coordinates; Grassmann-equivariance would force
// the two sides equal
std::optional<Witness> grassmann_refutation(const Tree& t)
{
	ClassSplit s = class_split(t);
	DualField df = dual_field(t);
	const int d1 = static_cast<int>(s.classes.size());
	std::vector<int> yidx;
	for (int c = 0; c < d1; ++c)
		if (!s.is_stolon[c] && !s.is_loop_node[c]) yidx.push_back(c);
	const int d2 = static_cast<int>(yidx.size());
	if (d1 == d2) return std::nullopt;

	AffineMap g;
	g.A.assign(d2, std::vector<Rat>(d1, Rat(0)));
	g.b.assign(d2, Rat(0));
	for (int k = 0; k < d2; ++k) g.A[k][yidx[k]] = 1;

	// f2(y) = A f1 read on the retained coordinates; the dropped ones cannot
	// occur there, which the substitution below silently asserts by zeroing
	Mat S(d1, std::vector<Rat>(d2, Rat(0)));
	for (int k = 0; k < d2; ++k) S[yidx[k]][k] = 1;
	std::vector<Rat> zero_b1(d1, Rat(0));
	VectorField f1 = df.field;
	VectorField f2;
	f2.dim = d2;
	for (int k = 0; k < d2; ++k) f2.comp.push_back(f1.comp[yidx[k]].subst_affine(S, zero_b1));

	auto small = elementary_differential_poly(t, f2);
	auto big = elementary_differential_poly(t, f1);
	Mat back(d2, std::vector<Rat>(d1, Rat(0)));
	for (int k = 0; k < d2; ++k) back[k][yidx[k]] = 1;
	std::vector<Rat> zero_b2(d2, Rat(0));
	std::vector<Poly> diff(d2);
	for (int k = 0; k < d2; ++k) diff[k] = small[k].subst_affine(back, zero_b2) - big[yidx[k]];
	auto point = find_nonzero_point(diff);
	if (!point) return std::nullopt;

	std::vector<Rat> thetas(df.thetas.size(), Rat(1));
	std::vector<Rat> xp(d1, Rat(0));
	for (auto& [var, val] : *point) {
		if (var >= kThetaBase)
			thetas[var - kThetaBase] = val;
		else if (var < d1)
			xp[var] = val;
	}
	VectorField f1c = instantiate_params(f1, thetas);
	VectorField f2c = instantiate_params(f2, thetas);
	auto lhs = elementary_differential(t, f2c, g.apply(xp));
	auto rhs = mat_apply(g.A, elementary_differential(t, f1c, xp));
	if (lhs == rhs) return std::nullopt;
	return make_witness(g, f2c, xp, std::move(lhs), std::move(rhs));
}

void run_exact_trial(EquivarianceReport& rep, const Tree& t, const AffineMap& g,
                     const VectorField& f1, const VectorField& f2, std::span<const Rat> x)
{
	rep.exact_trials += 1;
	auto lhs = elementary_differential(t, f2, g.apply(x));
	auto rhs = mat_apply(g.A, elementary_differential(t, f1, x));
	if (lhs == rhs) {
		rep.exact_passed += 1;
	} else if (rep.verdict_pass) {
		rep.verdict_pass = false;
		rep.witness = make_witness(g, f2, x, std::move(lhs), std::move(rhs));
	}
}

} // namespace

AffineMap make_transform(TransformKind kind, int d1, int d2, Rng& rng)
{
	switch (kind) {
	case TransformKind::SignedPermutation: {
		if (d1 != d2) throw std::invalid_argument("signed permutation needs d1 == d2");
		AffineMap g;
		g.A = signed_perm_matrix(rng, d1);
		g.b = rand_offset(rng, d1);
		return g;
	}
	case TransformKind::GeneralLinear: {
		if (d1 != d2) throw std::invalid_argument("general linear needs d1 == d2");
		AffineMap g;
		g.A = random_invertible(rng, d1);
		g.b = rand_offset(rng, d1);
		return g;
	}
	case TransformKind::Stiefel: return stiefel_generator(rng, d1, d2).map;
	case TransformKind::Grassmann: return grassmann_generator(rng, d1, d2).map;
	case TransformKind::Affine: {
		AffineMap g;
		g.A.assign(d2, std::vector<Rat>(d1));
		for (auto& row : g.A)
			for (auto& v : row) v = rng.coeff(3);
		g.b = rand_offset(rng, d2);
		return g;
	}
	case TransformKind::Orthogonal:
		throw std::invalid_argument("generic orthogonal transforms are float-only");
	}
	throw std::invalid_argument("unknown transform kind");
}

DAffineMap make_orthogonal_d(int d, Rng& rng)
{
	// Gram-Schmidt on a seeded Gaussian matrix
	std::vector<std::vector<double>> cols(d, std::vector<double>(d));
	for (auto& col : cols)
		for (auto& v : col) v = rng.gauss();
	for (int j = 0; j < d; ++j) {
		for (int k = 0; k < j; ++k) {
			double dot = 0;
			for (int i = 0; i < d; ++i) dot += cols[j][i] * cols[k][i];
			for (int i = 0; i < d; ++i) cols[j][i] -= dot * cols[k][i];
		}
		double nrm = 0;
		for (int i = 0; i < d; ++i) nrm += cols[j][i] * cols[j][i];
		nrm = std::sqrt(nrm);
		for (int i = 0; i < d; ++i) cols[j][i] /= nrm;
	}
	DAffineMap g;
	g.A.assign(d, std::vector<double>(d));
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j) g.A[i][j] = cols[j][i];
	g.b.assign(d, 0.0);
	for (auto& v : g.b) v = static_cast<double>(rng.range(-2, 2)) / 2.0;
	return g;
}

EquivarianceReport check_orthogonal_equivariance(const Tree& t, int trials, double tol,
                                                 uint64_t seed, bool exact_only)
{
	Rng rng(seed);
	EquivarianceReport rep;
	rep.property = Property::Orthogonal;
	for (int k = 0; k < trials && rep.verdict_pass; ++k) {
		int d = 2 + k % 3;
		AffineMap g = make_transform(TransformKind::SignedPermutation, d, d, rng);
		VectorField f = random_field(rng, d);
		auto x = random_point(rng, d);
		VectorField gf = affine_pushforward(g, f);
		run_exact_trial(rep, t, g, f, gf, x);
	}
	if (!exact_only) {
		for (int k = 0; k < trials; ++k) {
			int d = 2 + k % 4;
			DAffineMap g = make_orthogonal_d(d, rng);
			Rng frng(seed ^ (0x5bd1e995ULL + k));
			DVectorField f = to_double_field(random_field(frng, d));
			std::vector<double> x(d);
			for (auto& v : x) v = static_cast<double>(frng.range(-4, 4)) / 4.0;
			DVectorField gf = affine_pushforward_d(g, f);
			auto lhs = elementary_differential_d(t, gf, g.apply(x));
			auto fv = elementary_differential_d(t, f, x);
			std::vector<double> rhs(d, 0.0);
			for (int i = 0; i < d; ++i)
				for (int j = 0; j < d; ++j) rhs[i] += g.A[i][j] * fv[j];
			double num = 0, den = 1;
			for (int i = 0; i < d; ++i) {
				num = std::max(num, std::abs(lhs[i] - rhs[i]));
				den = std::max(den, std::max(std::abs(lhs[i]), std::abs(rhs[i])));
			}
			rep.float_trials += 1;
			rep.max_residual = std::max(rep.max_residual, num / den);
		}
		if (rep.max_residual > tol) rep.verdict_pass = false;
	}
	return rep;
}

EquivarianceReport check_gl_equivariance(const Tree& t, int trials, uint64_t seed)
{
	Rng rng(seed);
	EquivarianceReport rep;
	rep.property = Property::GL;

	std::vector<std::pair<AffineMap, int>> pool; // (transform, dimension)
	for (int d : {1, 2, 3}) {
		AffineMap scale = AffineMap::identity(d);
		for (int i = 0; i < d; ++i) scale.A[i][i] = 2;
		pool.emplace_back(scale, d);
		AffineMap diag = AffineMap::identity(d);
		for (int i = 0; i < d; ++i) diag.A[i][i] = i + 2;
		pool.emplace_back(diag, d);
		if (d >= 2) {
			AffineMap shear = AffineMap::identity(d);
			shear.A[0][1] = 1;
			pool.emplace_back(shear, d);
		}
	}
	for (auto& [g, d] : pool) {
		if (!rep.verdict_pass) break;
		VectorField f = random_field(rng, d);
		auto x = random_point(rng, d);
		run_exact_trial(rep, t, g, f, affine_pushforward(g, f), x);
	}
	// dual-field-guided trials at d = order(t)
	DualField df = dual_field(t);
	VectorField fd = instantiate_params(df.field, theta_primes(df.thetas.size()));
	for (int k = 0; k < trials && rep.verdict_pass; ++k) {
		AffineMap g = make_transform(TransformKind::GeneralLinear, fd.dim, fd.dim, rng);
		auto x = random_point(rng, fd.dim);
		run_exact_trial(rep, t, g, fd, affine_pushforward(g, fd), x);
	}
	for (int k = 0; k < trials && rep.verdict_pass; ++k) {
		int d = 1 + k % 3;
		AffineMap g = make_transform(TransformKind::GeneralLinear, d, d, rng);
		VectorField f = random_field(rng, d);
		auto x = random_point(rng, d);
		run_exact_trial(rep, t, g, f, affine_pushforward(g, f), x);
	}
	return rep;
}

EquivarianceReport check_strong_equivariance(const Tree& t, TransformKind kind, int trials,
                                             uint64_t seed)
{
	Rng rng(seed);
	EquivarianceReport rep;
	static const std::pair<int, int> updims[] = {{2, 3}, {3, 4}, {2, 4}};

	if (kind == TransformKind::Stiefel) {
		rep.property = Property::Stiefel;
		for (int k = 0; k < trials && rep.verdict_pass; ++k) {
			auto [d1, d2] = updims[k % 3];
			Generator gen = stiefel_generator(rng, d1, d2);
			VectorField f1 = random_field(rng, d1);
			// f2 = A f1(A^T (y - b)) plus a perturbation vanishing on the image
			Mat At = mat_transpose(gen.map.A);
			std::vector<Rat> shift(d1, Rat(0));
			for (int i = 0; i < d1; ++i)
				for (int j = 0; j < d2; ++j) shift[i] -= At[i][j] * gen.map.b[j];
			VectorField inner = pullback_field(f1, At, shift);
			VectorField f2 = VectorField::zero(d2);
			for (int i = 0; i < d2; ++i)
				for (int j = 0; j < d1; ++j) f2.comp[i] += gen.map.A[i][j] * inner.comp[j];
			int dead = gen.unused[rng.range(0, gen.unused.size() - 1)];
			Poly ell = Poly::var(dead) - Poly::constant(gen.map.b[dead]);
			for (int i = 0; i < d2; ++i)
				f2.comp[i] += ell * random_poly(rng, d2, 2, 2);
			auto x = random_point(rng, d1);
			run_exact_trial(rep, t, gen.map, f1, f2, x);
		}
		if (rep.verdict_pass) {
			if (auto w = stiefel_refutation(t)) {
				rep.verdict_pass = false;
				rep.witness = std::move(w);
			}
		}
		return rep;
	}

	if (kind == TransformKind::Grassmann) {
		rep.property = Property::Grassmann;
		for (int k = 0; k < trials && rep.verdict_pass; ++k) {
			auto [d2, d1] = updims[k % 3];
			Generator gen = grassmann_generator(rng, d1, d2);
			bool pure_kernel = k % 3 == 2;
			VectorField f2 = pure_kernel ? VectorField::zero(d2) : random_field(rng, d2);
			// f1 = A^T f2(A x + b) plus a kernel field
			VectorField pulled = pullback_field(f2, gen.map.A, gen.map.b);
			Mat At = mat_transpose(gen.map.A);
			VectorField f1 = VectorField::zero(d1);
			for (int i = 0; i < d1; ++i)
				for (int j = 0; j < d2; ++j) f1.comp[i] += At[i][j] * pulled.comp[j];
			int dead = gen.unused[rng.range(0, gen.unused.size() - 1)];
			f1.comp[dead] += random_poly(rng, d1, 2, 2);
			auto x = random_point(rng, d1);
			run_exact_trial(rep, t, gen.map, f1, f2, x);
		}
		if (rep.verdict_pass) {
			if (auto w = grassmann_refutation(t)) {
				rep.verdict_pass = false;
				rep.witness = std::move(w);
			}
		}
		return rep;
	}

	if (kind != TransformKind::Affine)
		throw std::invalid_argument("strong equivariance kinds: stiefel, grassmann, affine");

	rep.property = Property::Affine;
	for (int k = 0; k < trials && rep.verdict_pass; ++k) {
		int mode = k % 3;
		if (mode == 0) { // square invertible
			int d = 2 + k % 2;
			AffineMap g = make_transform(TransformKind::GeneralLinear, d, d, rng);
			VectorField f1 = random_field(rng, d);
			auto x = random_point(rng, d);
			run_exact_trial(rep, t, g, f1, affine_pushforward(g, f1), x);
		} else if (mode == 1) { // injective, non-orthogonal columns
			auto [d1, d2] = updims[(k / 3) % 3];
			AffineMap g;
			g.A = random_full_rank(rng, d2, d1);
			g.b = rand_offset(rng, d2);
			Mat At = mat_transpose(g.A);
			Mat gram = mat_mul(At, g.A), gram_inv;
			mat_invert(gram, gram_inv);
			Mat pinv = mat_mul(gram_inv, At); // (A^T A)^-1 A^T
			std::vector<Rat> shift(d1, Rat(0));
			for (int i = 0; i < d1; ++i)
				for (int j = 0; j < d2; ++j) shift[i] -= pinv[i][j] * g.b[j];
			VectorField f1 = random_field(rng, d1);
			VectorField inner = pullback_field(f1, pinv, shift);
			VectorField f2 = VectorField::zero(d2);
			for (int i = 0; i < d2; ++i)
				for (int j = 0; j < d1; ++j) f2.comp[i] += g.A[i][j] * inner.comp[j];
			if (auto u = nullspace_vector(At)) { // u^T A = 0
				Poly ell;
				for (int i = 0; i < d2; ++i)
					ell += (*u)[i] * (Poly::var(i) - Poly::constant(g.b[i]));
				for (int i = 0; i < d2; ++i) f2.comp[i] += ell * random_poly(rng, d2, 1, 2);
			}
			auto x = random_point(rng, d1);
			run_exact_trial(rep, t, g, f1, f2, x);
		} else { // surjective with kernel perturbation
			auto [d2, d1] = updims[(k / 3) % 3];
			AffineMap g;
			g.A = random_full_rank(rng, d2, d1);
			g.b = rand_offset(rng, d2);
			Mat At = mat_transpose(g.A);
			Mat gram = mat_mul(g.A, At), gram_inv;
			mat_invert(gram, gram_inv);
			Mat rinv = mat_mul(At, gram_inv); // A^T (A A^T)^-1
			VectorField f2 = random_field(rng, d2);
			VectorField pulled = pullback_field(f2, g.A, g.b);
			VectorField f1 = VectorField::zero(d1);
			for (int i = 0; i < d1; ++i)
				for (int j = 0; j < d2; ++j) f1.comp[i] += rinv[i][j] * pulled.comp[j];
			if (auto u = nullspace_vector(g.A)) {
				Poly gpoly = random_poly(rng, d1, 2, 2);
				for (int i = 0; i < d1; ++i) f1.comp[i] += (*u)[i] * gpoly;
			}
			auto x = random_point(rng, d1);
			run_exact_trial(rep, t, g, f1, f2, x);
		}
	}
	if (rep.verdict_pass) {
		if (auto w = stiefel_refutation(t)) {
			rep.verdict_pass = false;
			rep.witness = std::move(w);
		}
	}
	if (rep.verdict_pass) {
		if (auto w = grassmann_refutation(t)) {
			rep.verdict_pass = false;
			rep.witness = std::move(w);
		}
	}
	return rep;
}

EquivarianceReport check_decoupling(const Tree& t, bool trivially, int trials, uint64_t seed)
{
	Rng rng(seed);
	EquivarianceReport rep;
	rep.property = Property::Decoupling;

	auto block_trial = [&](const VectorField& f1, const VectorField& f2,
	                       std::span<const Rat> x, std::span<const Rat> y) {
		rep.exact_trials += 1;
		VectorField sum = direct_sum(f1, f2);
		std::vector<Rat> xy(x.begin(), x.end());
		xy.insert(xy.end(), y.begin(), y.end());
		auto lhs = elementary_differential(t, sum, xy);
		auto top = elementary_differential(t, f1, x);
		auto bot = elementary_differential(t, f2, y);
		std::vector<Rat> rhs(top);
		rhs.insert(rhs.end(), bot.begin(), bot.end());
		if (lhs == rhs) {
			rep.exact_passed += 1;
		} else if (rep.verdict_pass) {
			rep.verdict_pass = false;
			AffineMap none = AffineMap::identity(f1.dim + f2.dim);
			rep.witness = make_witness(none, sum, xy, std::move(lhs), std::move(rhs));
			rep.witness->transform = "block split " + std::to_string(f1.dim) + "+" +
			                         std::to_string(f2.dim);
		}
	};

	if (trivially) {
		for (int k = 0; k < trials && rep.verdict_pass; ++k) {
			int d1 = 2 + k % 2, d2 = 1 + k % 3;
			VectorField f = random_field(rng, d1);
			block_trial(f, VectorField::zero(d2), random_point(rng, d1), random_point(rng, d2));
		}
		return rep;
	}

	for (int k = 0; k < trials && rep.verdict_pass; ++k) {
		int d1 = 2 + k % 2, d2 = 1 + k % 3;
		block_trial(random_field(rng, d1), random_field(rng, d2), random_point(rng, d1),
		            random_point(rng, d2));
	}
	// structured trial from the dual parts of a disconnected tree
	Components comps = connected_components(t);
	if (rep.verdict_pass && comps.rooted && !comps.aromas.empty()) {
		DualField dr = dual_field(*comps.rooted);
		DualField da = dual_field(comps.aromas.front());
		VectorField f1 = instantiate_params(dr.field, theta_primes(dr.thetas.size()));
		VectorField f2 = instantiate_params(da.field, theta_primes(da.thetas.size()));
		block_trial(f1, f2, random_point(rng, f1.dim), random_point(rng, f2.dim));
		if (rep.verdict_pass) {
			std::vector<Rat> z1(f1.dim, Rat(0)), z2(f2.dim, Rat(0));
			block_trial(f1, f2, z1, z2);
		}
	}
	return rep;
}

ClassificationMatrix classification_matrix(int n, uint64_t seed, bool exact_only,
                                           const std::vector<Property>& props)
{
	std::vector<Property> all = {Property::Orthogonal, Property::GL,      Property::Stiefel,
	                             Property::Grassmann,  Property::Affine, Property::Decoupling};
	const std::vector<Property>& use = props.empty() ? all : props;

	ClassificationMatrix m;
	for (int k = 1; k <= n; ++k) {
		for (const Tree& t : enumerate_by_order(k)) {
			TreeVerdicts row;
			row.tree = t;
			row.encoding = canonical_encoding(t);
			row.flags = classify(t);
			uint64_t tree_seed = seed * 1000003ULL;
			for (unsigned char c : row.encoding) tree_seed = (tree_seed ^ c) * 0x100000001b3ULL;
			for (Property p : use) {
				EquivarianceReport rep;
				switch (p) {
				case Property::Orthogonal:
					rep = check_orthogonal_equivariance(t, 6, 1e-8, tree_seed, exact_only);
					break;
				case Property::GL: rep = check_gl_equivariance(t, 4, tree_seed); break;
				case Property::Stiefel:
					rep = check_strong_equivariance(t, TransformKind::Stiefel, 6, tree_seed);
					break;
				case Property::Grassmann:
					rep = check_strong_equivariance(t, TransformKind::Grassmann, 6, tree_seed);
					break;
				case Property::Affine:
					rep = check_strong_equivariance(t, TransformKind::Affine, 6, tree_seed);
					break;
				case Property::Decoupling:
					rep = check_decoupling(t, false, 5, tree_seed);
					break;
				}
				bool expect = property_predicate(p, row.flags);
				if (rep.verdict_pass != expect) {
					row.disagreements.push_back(p);
					m.all_agree = false;
				}
				row.reports.emplace_back(p, std::move(rep));
			}
			m.rows.push_back(std::move(row));
		}
	}
	return m;
}

std::string transform_str(const AffineMap& g)
{
	std::ostringstream os;
	os << "A=[";
	for (int i = 0; i < g.rows(); ++i) {
		if (i) os << "; ";
		for (int j = 0; j < g.cols(); ++j) {
			if (j) os << ",";
			os << rat_str(g.A[i][j]);
		}
	}
	os << "], b=[";
	for (size_t i = 0; i < g.b.size(); ++i) {
		if (i) os << ",";
		os << rat_str(g.b[i]);
	}
	os << "]";
	return os.str();
}

} // namespace exaro
