#include "exaro/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exaro {

// --- printing ---

template <class C>
std::string PolyT<C>::str(const std::function<std::string(int)>& var_name) const
{
	if (terms_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		std::string cs;
		if constexpr (std::is_same_v<C, Rat>)
			cs = rat_str(c);
		else {
			std::ostringstream t;
			t << c;
			cs = t.str();
		}
		bool neg = !cs.empty() && cs[0] == '-';
		if (first) {
			first = false;
			if (neg) os << "-";
		} else {
			os << (neg ? " - " : " + ");
		}
		if (neg) cs = cs.substr(1);
		bool has_vars = false;
		for (auto e : m)
			if (e) has_vars = true;
		if (!has_vars || cs != "1") {
			os << cs;
			if (has_vars) os << "*";
		}
		bool firstv = true;
		for (size_t i = 0; i < m.size(); ++i) {
			if (m[i] == 0) continue;
			if (!firstv) os << "*";
			firstv = false;
			os << var_name(static_cast<int>(i));
			if (m[i] > 1) os << "^" << m[i];
		}
	}
	return os.str();
}

template std::string PolyT<Rat>::str(const std::function<std::string(int)>&) const;
template std::string PolyT<double>::str(const std::function<std::string(int)>&) const;

static std::string default_var_name(int i)
{
	if (i >= kThetaBase) return "t" + std::to_string(i - kThetaBase + 1);
	return "x" + std::to_string(i + 1);
}

std::string poly_str(const Poly& p) { return p.str(default_var_name); }

std::string field_str(const VectorField& f)
{
	std::ostringstream os;
	for (int i = 0; i < f.dim; ++i)
		os << "f" << (i + 1) << " = " << poly_str(f.comp[i]) << "\n";
	return os.str();
}

// --- exact linear algebra ---

std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b)
{
	size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
	std::vector<std::vector<Rat>> r(n, std::vector<Rat>(m, Rat(0)));
	for (size_t i = 0; i < n; ++i)
		for (size_t l = 0; l < k; ++l) {
			if (a[i][l] == 0) continue;
			for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
		}
	return r;
}

std::vector<std::vector<Rat>> mat_transpose(const std::vector<std::vector<Rat>>& a)
{
	size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
	std::vector<std::vector<Rat>> r(m, std::vector<Rat>(n));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
	return r;
}

bool mat_invert(const std::vector<std::vector<Rat>>& a, std::vector<std::vector<Rat>>& inv)
{
	const size_t n = a.size();
	std::vector<std::vector<Rat>> m(a);
	inv.assign(n, std::vector<Rat>(n, Rat(0)));
	for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
	for (size_t col = 0; col < n; ++col) {
		size_t piv = col;
		while (piv < n && m[piv][col] == 0) ++piv;
		if (piv == n) return false;
		std::swap(m[piv], m[col]);
		std::swap(inv[piv], inv[col]);
		Rat d = m[col][col];
		for (size_t j = 0; j < n; ++j) {
			m[col][j] /= d;
			inv[col][j] /= d;
		}
		for (size_t r = 0; r < n; ++r) {
			if (r == col || m[r][col] == 0) continue;
			Rat f = m[r][col];
			for (size_t j = 0; j < n; ++j) {
				m[r][j] -= f * m[col][j];
				inv[r][j] -= f * inv[col][j];
			}
		}
	}
	return true;
}

int mat_rank(std::vector<std::vector<Rat>> m)
{
	if (m.empty()) return 0;
	size_t rows = m.size(), cols = m[0].size();
	int rank = 0;
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c) {
		size_t piv = r;
		while (piv < rows && m[piv][c] == 0) ++piv;
		if (piv == rows) continue;
		std::swap(m[piv], m[r]);
		for (size_t i = 0; i < rows; ++i) {
			if (i == r || m[i][c] == 0) continue;
			Rat f = m[i][c] / m[r][c];
			for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
		}
		++r;
		++rank;
	}
	return rank;
}

bool is_identity(const std::vector<std::vector<Rat>>& a)
{
	for (size_t i = 0; i < a.size(); ++i) {
		if (a[i].size() != a.size()) return false;
		for (size_t j = 0; j < a[i].size(); ++j)
			if (a[i][j] != Rat(i == j ? 1 : 0)) return false;
	}
	return true;
}

bool is_left_orthogonal(const std::vector<std::vector<Rat>>& a)
{
	return is_identity(mat_mul(mat_transpose(a), a));
}

bool is_right_orthogonal(const std::vector<std::vector<Rat>>& a)
{
	return is_identity(mat_mul(a, mat_transpose(a)));
}

// --- field operations ---

VectorField affine_pushforward(const AffineMap& g, const VectorField& f)
{
	if (g.rows() != g.cols() || g.rows() != f.dim)
		throw std::invalid_argument("pushforward needs a square map matching the field dimension");
	std::vector<std::vector<Rat>> inv;
	if (!mat_invert(g.A, inv)) throw SingularMatrix();
	// x -> A^-1 x - A^-1 b
	std::vector<Rat> shift(f.dim, Rat(0));
	for (int i = 0; i < f.dim; ++i)
		for (int j = 0; j < f.dim; ++j) shift[i] -= inv[i][j] * g.b[j];
	std::vector<Poly> pulled(f.dim);
	for (int i = 0; i < f.dim; ++i) pulled[i] = f.comp[i].subst_affine(inv, shift);
	VectorField r = VectorField::zero(f.dim);
	for (int i = 0; i < f.dim; ++i)
		for (int j = 0; j < f.dim; ++j) r.comp[i] += g.A[i][j] * pulled[j];
	return r;
}

DVectorField affine_pushforward_d(const DAffineMap& g, const DVectorField& f)
{
	// used with orthogonal matrices only: inverse = transpose
	const int d = f.dim;
	std::vector<std::vector<double>> inv(d, std::vector<double>(d));
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j) inv[i][j] = g.A[j][i];
	std::vector<double> shift(d, 0.0);
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j) shift[i] -= inv[i][j] * g.b[j];
	std::vector<DPoly> pulled(d);
	for (int i = 0; i < d; ++i) pulled[i] = f.comp[i].subst_affine(inv, shift);
	DVectorField r = DVectorField::zero(d);
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j) r.comp[i] += DPoly::constant(g.A[i][j]) * pulled[j];
	return r;
}

VectorField direct_sum(const VectorField& f1, const VectorField& f2)
{
	VectorField r = VectorField::zero(f1.dim + f2.dim);
	std::vector<int> shift(f2.dim);
	for (int i = 0; i < f2.dim; ++i) shift[i] = i + f1.dim;
	for (int i = 0; i < f1.dim; ++i) r.comp[i] = f1.comp[i];
	for (int i = 0; i < f2.dim; ++i) r.comp[f1.dim + i] = f2.comp[i].remap_vars(shift);
	return r;
}

VectorField gradient_field(const Poly& V, int dim)
{
	VectorField r = VectorField::zero(dim);
	for (int i = 0; i < dim; ++i) r.comp[i] = V.derivative(i);
	return r;
}

const Rat& Jet::value(int comp, std::vector<int> alpha_sorted) const
{
	static const Rat zero(0);
	auto it = entries.find({comp, alpha_sorted});
	return it == entries.end() ? zero : it->second;
}

Jet jet_at(const VectorField& f, std::span<const Rat> x, int max_order)
{
	Jet j;
	j.dim = f.dim;
	j.max_order = max_order;
	j.x.assign(x.begin(), x.end());
	for (int c = 0; c < f.dim; ++c) {
		// breadth-first over sorted multi-indices, reusing parent derivatives
		std::map<std::vector<int>, Poly> level;
		level[{}] = f.comp[c];
		for (int k = 0; k <= max_order; ++k) {
			std::map<std::vector<int>, Poly> next;
			for (const auto& [alpha, p] : level) {
				j.entries[{c, alpha}] = p.eval(x);
				if (k == max_order) continue;
				int lo = alpha.empty() ? 0 : alpha.back();
				for (int v = lo; v < f.dim; ++v) {
					std::vector<int> beta = alpha;
					beta.push_back(v);
					next[std::move(beta)] = p.derivative(v);
				}
			}
			level = std::move(next);
		}
	}
	return j;
}

// --- parsing ---

namespace {

struct Cursor {
	const std::string& s;
	size_t i = 0;

	void skip_ws()
	{
		while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
	}
	bool eof()
	{
		skip_ws();
		return i >= s.size();
	}
	char peek()
	{
		skip_ws();
		return i < s.size() ? s[i] : '\0';
	}
	bool accept(char c)
	{
		if (peek() == c) {
			++i;
			return true;
		}
		return false;
	}
	[[noreturn]] void fail(const std::string& what)
	{
		throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
	}
	long integer()
	{
		skip_ws();
		size_t start = i;
		while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
		if (i == start) fail("expected integer");
		return std::stol(s.substr(start, i - start));
	}
};

// factor := rational | var ('^' int)?   var := 'x' int
Poly parse_factor(Cursor& c)
{
	c.skip_ws();
	if (c.peek() == 'x') {
		++c.i;
		long idx = c.integer();
		if (idx < 1) c.fail("variable index must be positive");
		Poly v = Poly::var(static_cast<int>(idx - 1));
		if (c.accept('^')) {
			long e = c.integer();
			Poly r = Poly::constant(Rat(1));
			for (long k = 0; k < e; ++k) r *= v;
			return r;
		}
		return v;
	}
	if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
		long num = c.integer();
		Rat r(num);
		if (c.accept('/')) {
			long den = c.integer();
			if (den == 0) c.fail("zero denominator");
			r = rat(num, den);
		}
		// exponent on a plain constant, e.g. 2^3, is not part of the format
		return Poly::constant(r);
	}
	c.fail("expected variable or number");
}

Poly parse_term(Cursor& c)
{
	Poly p = parse_factor(c);
	while (c.peek() == '*') {
		c.accept('*');
		p *= parse_factor(c);
	}
	return p;
}

} // namespace

Poly parse_poly(const std::string& text)
{
	Cursor c{text};
	Poly acc;
	bool neg = false;
	if (c.accept('-'))
		neg = true;
	else
		c.accept('+');
	while (true) {
		Poly t = parse_term(c);
		acc += neg ? -t : t;
		if (c.eof()) break;
		if (c.accept('-'))
			neg = true;
		else if (c.accept('+'))
			neg = false;
		else
			c.fail("expected '+' or '-'");
	}
	return acc;
}

VectorField parse_field(const std::string& text)
{
	std::vector<std::pair<int, Poly>> comps;
	std::istringstream in(text);
	std::string line;
	int maxidx = 0;
	while (std::getline(in, line)) {
		size_t h = line.find('#');
		if (h != std::string::npos) line = line.substr(0, h);
		bool blank = true;
		for (char ch : line)
			if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
		if (blank) continue;
		size_t eq = line.find('=');
		if (eq == std::string::npos) throw std::invalid_argument("field line missing '=': " + line);
		std::string lhs = line.substr(0, eq);
		Cursor c{lhs};
		if (c.peek() != 'f') throw std::invalid_argument("field line must start with fK: " + line);
		++c.i;
		long idx = c.integer();
		if (!c.eof()) throw std::invalid_argument("malformed component name: " + line);
		Poly p = parse_poly(line.substr(eq + 1));
		comps.emplace_back(static_cast<int>(idx), std::move(p));
		maxidx = std::max(maxidx, static_cast<int>(idx));
	}
	if (comps.empty()) throw std::invalid_argument("empty field description");
	VectorField f = VectorField::zero(maxidx);
	std::vector<bool> seen(maxidx, false);
	for (auto& [idx, p] : comps) {
		if (idx < 1) throw std::invalid_argument("component index must be positive");
		if (seen[idx - 1]) throw std::invalid_argument("duplicate component f" + std::to_string(idx));
		seen[idx - 1] = true;
		f.comp[idx - 1] = std::move(p);
	}
	for (const auto& p : f.comp)
		if (p.max_var() >= f.dim)
			throw std::invalid_argument("variable index exceeds field dimension");
	return f;
}

std::vector<Rat> parse_point(const std::string& text)
{
	std::vector<Rat> pt;
	std::string cur;
	auto flush = [&] {
		if (cur.find_first_not_of(" \t") == std::string::npos)
			throw std::invalid_argument("empty coordinate in point");
		pt.push_back(parse_rat(cur));
		cur.clear();
	};
	for (char c : text) {
		if (c == ',')
			flush();
		else
			cur += c;
	}
	flush();
	return pt;
}

// --- random generators ---

Poly random_poly(Rng& rng, int nvars, int maxdeg, int coeff_mag)
{
	Poly p;
	// every monomial of degree <= maxdeg, kept with probability ~1/2
	std::vector<uint32_t> exp(nvars, 0);
	std::function<void(int, int)> walk = [&](int var, int budget) {
		if (var == nvars) {
			if (rng.chance(1, 2)) {
				Rat c = rng.coeff(coeff_mag);
				if (!(c == 0)) p.add_term(exp, c);
			}
			return;
		}
		for (int e = 0; e <= budget; ++e) {
			exp[var] = e;
			walk(var + 1, budget - e);
		}
		exp[var] = 0;
	};
	walk(0, maxdeg);
	return p;
}

VectorField random_field(Rng& rng, int dim, int maxdeg, int coeff_mag)
{
	VectorField f = VectorField::zero(dim);
	for (int i = 0; i < dim; ++i) f.comp[i] = random_poly(rng, dim, maxdeg, coeff_mag);
	return f;
}

std::vector<Rat> random_point(Rng& rng, int dim)
{
	std::vector<Rat> x(dim);
	for (auto& v : x) v = rng.small_rat();
	return x;
}

DVectorField to_double_field(const VectorField& f) { return field_cast(f, double{}); }

Poly instantiate_params(const Poly& p, std::span<const Rat> vals)
{
	Poly r;
	for (const auto& [m, c] : p.terms()) {
		Rat nc = c;
		Poly::Mono nm(m.begin(), m.begin() + std::min<size_t>(m.size(), kThetaBase));
		for (size_t i = kThetaBase; i < m.size(); ++i) {
			if (m[i] == 0) continue;
			Rat v = i - kThetaBase < vals.size() ? vals[i - kThetaBase] : Rat(1);
			for (uint32_t k = 0; k < m[i]; ++k) nc *= v;
		}
		r.add_term(nm, nc);
	}
	return r;
}

VectorField instantiate_params(const VectorField& f, std::span<const Rat> vals)
{
	VectorField r = VectorField::zero(f.dim);
	for (int i = 0; i < f.dim; ++i) r.comp[i] = instantiate_params(f.comp[i], vals);
	return r;
}

std::optional<std::vector<Rat>> nullspace_vector(const std::vector<std::vector<Rat>>& A)
{
	if (A.empty() || A[0].empty()) return std::nullopt;
	size_t rows = A.size(), cols = A[0].size();
	auto m = A;
	std::vector<int> pivot_col;
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c) {
		size_t piv = r;
		while (piv < rows && m[piv][c] == 0) ++piv;
		if (piv == rows) continue;
		std::swap(m[piv], m[r]);
		Rat d = m[r][c];
		for (size_t j = 0; j < cols; ++j) m[r][j] /= d;
		for (size_t i = 0; i < rows; ++i) {
			if (i == r || m[i][c] == 0) continue;
			Rat f = m[i][c];
			for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
		}
		pivot_col.push_back(static_cast<int>(c));
		++r;
	}
	// first free column, if any
	std::vector<bool> is_pivot(cols, false);
	for (int c : pivot_col) is_pivot[c] = true;
	int free_col = -1;
	for (size_t c = 0; c < cols; ++c)
		if (!is_pivot[c]) {
			free_col = static_cast<int>(c);
			break;
		}
	if (free_col < 0) return std::nullopt;
	std::vector<Rat> v(cols, Rat(0));
	v[free_col] = 1;
	for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_col];
	return v;
}

std::optional<std::vector<std::pair<int, Rat>>>
find_nonzero_point(const std::vector<Poly>& polys)
{
	std::vector<Poly> cur;
	for (const auto& p : polys)
		if (!p.is_zero()) cur.push_back(p);
	if (cur.empty()) return std::nullopt;

	std::set<int> vars;
	for (const auto& p : cur)
		for (const auto& [m, c] : p.terms())
			for (size_t i = 0; i < m.size(); ++i)
				if (m[i]) vars.insert(static_cast<int>(i));

	static const long candidates[] = {1, 0, -1, 2, -2, 3, -3, 4, 5, 7, 11, 13};
	std::vector<std::pair<int, Rat>> assignment;
	for (int v : vars) {
		bool placed = false;
		for (long cand : candidates) {
			std::vector<Poly> next;
			for (const auto& p : cur) {
				Poly q = subst_var(p, v, Rat(cand));
				if (!q.is_zero()) next.push_back(std::move(q));
			}
			if (!next.empty()) {
				cur = std::move(next);
				assignment.emplace_back(v, Rat(cand));
				placed = true;
				break;
			}
		}
		if (!placed) return std::nullopt; // cannot happen: degree < #candidates
	}
	return assignment;
}

} // namespace exaro
