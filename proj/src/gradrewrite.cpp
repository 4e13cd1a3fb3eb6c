#include "exaro/gradrewrite.hpp"

#include "exaro/elementary.hpp"

#include <deque>
#include <map>
#include <set>

namespace exaro {

namespace {

// Schwarz swap at site (v, a) with tau(a) = v: the superscript slot of v and
// the subscript slot of a exchange sigma partners. kappa is untouched because
// tau never changes.
Tree swap_site(const Tree& t, int vertex_id, int arrow_id)
{
	Tree r = t;
	int p = t.sigma[vertex_id], q = t.sigma[arrow_id];
	r.sigma[vertex_id] = q;
	r.sigma[q] = vertex_id;
	r.sigma[arrow_id] = p;
	r.sigma[p] = arrow_id;
	return r;
}

RewriteKind kind_of(const Tree& t, int vertex_id, int arrow_id)
{
	bool p_vertex = t.id_is_vertex(t.sigma[vertex_id]); // v sits in a stolon
	bool q_vertex = t.id_is_vertex(t.sigma[arrow_id]);  // a is a standard edge
	if (p_vertex && q_vertex) return RewriteKind::EdgeStolonInversion;
	if (!p_vertex && !q_vertex) return RewriteKind::EdgeLianaInversion;
	return RewriteKind::StolonLianaSimplification;
}

} // namespace

std::vector<RewriteStep> rewrite_neighbors(const Tree& t)
{
	std::vector<RewriteStep> out;
	std::set<std::string> seen{canonical_encoding(t)};
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a) {
		int v = t.tau[a - 1];
		int vid = t.vid(v), aid = t.aid(a);
		if (t.sigma[vid] == aid) continue; // swap would be the identity
		Tree nb = swap_site(t, vid, aid);
		std::string enc = canonical_encoding(nb);
		if (seen.contains(enc)) continue;
		seen.insert(enc);
		out.push_back(RewriteStep{RewriteRule{kind_of(t, vid, aid), v, a}, canonicalize(nb)});
	}
	return out;
}

std::vector<Tree> equivalence_class(const Tree& t)
{
	std::map<std::string, Tree> cls;
	std::deque<Tree> queue;
	Tree start = canonicalize(t);
	cls.emplace(canonical_encoding(start), start);
	queue.push_back(std::move(start));
	while (!queue.empty()) {
		Tree cur = std::move(queue.front());
		queue.pop_front();
		for (auto& step : rewrite_neighbors(cur)) {
			std::string enc = canonical_encoding(step.result);
			if (cls.contains(enc)) continue;
			cls.emplace(enc, step.result);
			queue.push_back(std::move(step.result));
		}
	}
	std::vector<Tree> out;
	for (auto& [enc, tree] : cls) out.push_back(std::move(tree));
	return out;
}

Tree exotic_normal_form(const Tree& t)
{
	if (!classify(t).is_connected)
		throw std::invalid_argument("exotic normal form is defined for connected trees");
	std::vector<Tree> reps;
	for (const Tree& member : equivalence_class(t))
		if (classify(member).is_exotic_tree) reps.push_back(member);
	if (reps.empty())
		throw NoExoticRepresentative("equivalence class of " + sigma_str(t) +
		                             " contains no exotic tree");
	if (reps.size() > 1)
		throw NonUniqueRepresentative("equivalence class of " + sigma_str(t) +
		                              " contains several exotic trees");
	return reps.front();
}

GradientAgreementReport check_gradient_agreement(const Tree& t1, const Tree& t2, int trials,
                                                 uint64_t seed)
{
	Rng rng(seed);
	GradientAgreementReport rep;
	rep.equal_on_gradients = true;
	for (int d : {2, 3}) {
		for (int k = 0; k < trials; ++k) {
			Poly V = random_poly(rng, d, 4, 3);
			VectorField f = gradient_field(V, d);
			rep.gradient_trials += 1;
			if (elementary_differential_poly(t1, f) != elementary_differential_poly(t2, f))
				rep.equal_on_gradients = false;
		}
	}
	// non-gradient probe: f = (x2, 0), Jacobian not symmetric
	VectorField probe = VectorField::zero(2);
	probe.comp[0] = Poly::var(1);
	rep.differ_on_probe =
	    elementary_differential_poly(t1, probe) != elementary_differential_poly(t2, probe);
	return rep;
}

} // namespace exaro
