#include "exaro/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exaro {

namespace {

// sigma classes grouped by connected component: rooted component first (its
// root class leading), remaining components in order of their smallest
// element, so a graph built by attaching aromas keeps the host's classes as a
// prefix of the numbering.
std::vector<std::pair<int, int>> component_ordered_classes(const Tree& t)
{
	const int n = t.n_elems();
	std::vector<std::vector<int>> adj(n);
	for (int x = 0; x < n; ++x) adj[x].push_back(t.sigma[x]);
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a) {
		adj[t.aid(a)].push_back(t.vid(t.tau[a - 1]));
		adj[t.vid(t.tau[a - 1])].push_back(t.aid(a));
	}
	std::vector<int> comp(n, -1);
	int nc = 0;
	for (int x = 0; x < n; ++x) {
		if (comp[x] != -1) continue;
		std::vector<int> stack{x};
		comp[x] = nc;
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			for (int y : adj[u])
				if (comp[y] == -1) {
					comp[y] = nc;
					stack.push_back(y);
				}
		}
		++nc;
	}
	int root_comp = t.rooted ? comp[t.aid(0)] : -1;
	std::vector<std::pair<int, int>> cls;
	for (int x = 0; x < n; ++x)
		if (x < t.sigma[x]) cls.emplace_back(x, t.sigma[x]);
	std::stable_sort(cls.begin(), cls.end(), [&](const auto& a, const auto& b) {
		int ca = comp[a.first], cb = comp[b.first];
		bool ra = ca == root_comp, rb = cb == root_comp;
		if (ra != rb) return ra;
		if (ca != cb) return ca < cb;
		return a.first < b.first;
	});
	if (t.rooted) {
		int r0 = t.aid(0);
		auto it = std::find_if(cls.begin(), cls.end(), [&](const auto& p) {
			return p.first == r0 || p.second == r0;
		});
		std::rotate(cls.begin(), it, it + 1);
	}
	return cls;
}

} // namespace

DualField dual_field(const Tree& host)
{
	DualField df;
	auto classes = component_ordered_classes(host);
	df.classes = classes;
	const int d = static_cast<int>(classes.size());

	std::vector<int> class_of(host.n_elems(), -1);
	for (int c = 0; c < d; ++c) {
		class_of[classes[c].first] = c;
		class_of[classes[c].second] = c;
	}

	// theta parameters in coordinate order; the ghost arrow carries none
	std::map<int, int> theta_of_elem; // element id -> theta position
	int ord_plain = 0, ord_stolon = 0, ord_liana = 0;
	auto is_arrow0 = [&](int id) {
		return host.rooted && !host.id_is_vertex(id) && host.arrow_of(id) == 0;
	};
	for (const auto& [p, q] : classes) {
		bool pv = host.id_is_vertex(p), qv = host.id_is_vertex(q);
		if (pv && qv) {
			for (int id : {p, q}) {
				theta_of_elem[id] = static_cast<int>(df.thetas.size());
				df.thetas.push_back({ThetaKind::NodeStolon, ++ord_stolon, id});
			}
		} else if (!pv && !qv) {
			for (int id : {p, q}) {
				if (is_arrow0(id)) continue;
				theta_of_elem[id] = static_cast<int>(df.thetas.size());
				df.thetas.push_back({ThetaKind::LianaArrow, ++ord_liana, id});
			}
		} else {
			int v = pv ? p : q;
			theta_of_elem[v] = static_cast<int>(df.thetas.size());
			df.thetas.push_back({ThetaKind::NodePlain, ++ord_plain, v});
		}
	}

	auto theta_poly = [&](int id) { return Poly::var(kThetaBase + theta_of_elem.at(id)); };
	auto liana_weight = [&](int arrow_id) {
		// theta^L = 1 for arrows outside lianas
		auto it = theta_of_elem.find(arrow_id);
		bool in_liana = !host.id_is_vertex(host.sigma[arrow_id]);
		if (!in_liana || it == theta_of_elem.end()) return Poly::constant(Rat(1));
		return Poly::var(kThetaBase + it->second);
	};

	std::vector<std::vector<int>> incoming(host.nv + 1);
	for (int a = 1; a <= static_cast<int>(host.tau.size()); ++a) incoming[host.tau[a - 1]].push_back(host.aid(a));

	auto node_product = [&](int vertex_id) {
		Poly p = theta_poly(vertex_id);
		for (int aidv : incoming[host.vertex_of(vertex_id)])
			p = p * liana_weight(aidv) * Poly::var(class_of[aidv]);
		return p;
	};

	df.field = VectorField::zero(d);
	for (int c = 0; c < d; ++c) {
		auto [p, q] = classes[c];
		bool pv = host.id_is_vertex(p), qv = host.id_is_vertex(q);
		if (pv && qv)
			df.field.comp[c] = node_product(p) + node_product(q);
		else if (pv != qv)
			df.field.comp[c] = node_product(pv ? p : q);
		// liana coordinates stay zero
	}
	return df;
}

namespace {

Poly::Mono theta_monomial(const std::vector<int>& positions, size_t ntheta)
{
	Poly::Mono m(kThetaBase + ntheta, 0);
	for (int p : positions) m[kThetaBase + p] += 1;
	Poly::trim(m);
	return m;
}

} // namespace

Rat pairing(const Tree& g1, const Tree& g2)
{
	DualField host = dual_field(g2);
	DualField names = dual_field(g1);

	std::vector<int> matched;
	for (const auto& th : names.thetas) {
		auto it = std::find_if(host.thetas.begin(), host.thetas.end(), [&](const ThetaIndex& h) {
			return h.kind == th.kind && h.ordinal == th.ordinal;
		});
		if (it == host.thetas.end()) return Rat(0); // g1 asks for more parameters
		matched.push_back(static_cast<int>(it - host.thetas.begin()));
	}

	auto value = elementary_differential_poly(g1, host.field);
	if (value.empty()) return Rat(0);
	return value[0].coefficient(theta_monomial(matched, host.thetas.size()));
}

Rat pairing_theta_free(const Tree& g1, const Tree& g2)
{
	DualField host = dual_field(g2);
	VectorField f = VectorField::zero(host.field.dim);
	for (int c = 0; c < f.dim; ++c) {
		Poly p;
		for (const auto& [m, coeff] : host.field.comp[c].terms()) {
			Poly::Mono stripped(m.begin(), m.begin() + std::min<size_t>(m.size(), kThetaBase));
			p.add_term(stripped, coeff); // theta = 1 drops the parameter part
		}
		f.comp[c] = std::move(p);
	}
	std::vector<Rat> zero(f.dim, Rat(0));
	auto value = elementary_differential(g1, f, zero);
	return value.empty() ? Rat(0) : value[0];
}

bool is_mu_gamma(const Tree& g1, const Tree& g2)
{
	if (g1.rooted != g2.rooted) return false;
	Components c1 = connected_components(g1);
	Components c2 = connected_components(g2);
	if (c1.rooted.has_value() != c2.rooted.has_value()) return false;
	if (c1.rooted && !isomorphic(*c1.rooted, *c2.rooted)) return false;
	std::multiset<std::string> a2;
	for (const auto& a : c2.aromas) a2.insert(canonical_encoding(a));
	for (const auto& a : c1.aromas) {
		auto it = a2.find(canonical_encoding(a));
		if (it == a2.end()) return false;
		a2.erase(it);
	}
	return true;
}

IndependenceCertificate independence_certificate(const std::vector<Tree>& trees)
{
	IndependenceCertificate cert;
	const size_t n = trees.size();
	for (const auto& t : trees) {
		cert.encodings.push_back(canonical_encoding(t));
		cert.symmetry.push_back(symmetry_coefficient(t));
	}
	cert.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) cert.matrix[i][j] = pairing(trees[i], trees[j]);

	cert.diagonal = true;
	cert.triangular = true;
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			if (i != j && cert.matrix[i][j] != 0) cert.diagonal = false;
			if (i > j && cert.matrix[i][j] != 0) cert.triangular = false;
		}
	bool diag_nonzero = true;
	for (size_t i = 0; i < n; ++i)
		if (cert.matrix[i][i] == 0) diag_nonzero = false;
	cert.nonsingular =
	    (cert.triangular && diag_nonzero) || mat_rank(cert.matrix) == static_cast<int>(n);
	return cert;
}

} // namespace exaro
