#include "exaro/elementary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace exaro {

namespace {

const char* kLetters[] = {"i", "j", "k", "l", "m", "n", "p", "q", "r", "s", "u", "w"};

struct ClassInfo {
	std::vector<std::pair<int, int>> classes; // root class first when rooted
	std::vector<int> class_of;                // element id -> class index
	std::vector<std::vector<int>> vertex_in;  // vertex (1-based) -> incoming arrow ids
};

ClassInfo make_classes(const Tree& t)
{
	ClassInfo ci;
	ci.classes = sigma_classes(t);
	ci.class_of.assign(t.n_elems(), -1);
	for (size_t c = 0; c < ci.classes.size(); ++c) {
		ci.class_of[ci.classes[c].first] = static_cast<int>(c);
		ci.class_of[ci.classes[c].second] = static_cast<int>(c);
	}
	ci.vertex_in.assign(t.nv + 1, {});
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a) ci.vertex_in[t.tau[a - 1]].push_back(t.aid(a));
	return ci;
}

// shared contraction loop: sums over assignments of {1..d} to the sigma
// classes, the root class pinned to the output component for rooted trees
template <class Acc, class Term>
void contract(const Tree& t, const ClassInfo& ci, int d, Acc&& accumulate, Term&& term)
{
	const int nclasses = static_cast<int>(ci.classes.size());
	const int free_from = t.rooted ? 1 : 0;
	std::vector<int> asg(nclasses, 0);
	std::function<void(int)> walk = [&](int c) {
		if (c == nclasses) {
			if (t.rooted) {
				for (int out = 0; out < d; ++out) {
					asg[0] = out;
					accumulate(out, term(asg));
				}
			} else {
				accumulate(0, term(asg));
			}
			return;
		}
		for (int v = 0; v < d; ++v) {
			asg[c] = v;
			walk(c + 1);
		}
	};
	walk(free_from);
}

template <class C>
std::vector<C> eval_engine(const Tree& t, const VectorFieldT<C>& f, std::span<const C> x)
{
	if (f.dim != static_cast<int>(x.size()))
		throw DimensionMismatch("field dimension does not match evaluation point");
	ClassInfo ci = make_classes(t);
	std::map<std::pair<int, std::vector<int>>, C> jet;
	auto jet_value = [&](int comp, std::vector<int> vars) -> const C& {
		auto it = jet.find({comp, vars});
		if (it != jet.end()) return it->second;
		PolyT<C> p = f.comp[comp];
		for (int v : vars) p = p.derivative(v);
		return jet.emplace(std::pair(comp, std::move(vars)), p.eval(x)).first->second;
	};
	std::vector<C> result(t.rooted ? f.dim : 1, C{});
	contract(
	    t, ci, f.dim, [&](int out, C v) { result[out] = result[out] + v; },
	    [&](const std::vector<int>& asg) {
		    C prod(1);
		    for (int v = 1; v <= t.nv; ++v) {
			    std::vector<int> vars;
			    for (int id : ci.vertex_in[v]) vars.push_back(asg[ci.class_of[id]]);
			    std::sort(vars.begin(), vars.end());
			    prod = prod * jet_value(asg[ci.class_of[t.vid(v)]], std::move(vars));
			    if (prod == C{}) break;
		    }
		    return prod;
	    });
	return result;
}

} // namespace

std::vector<Rat> elementary_differential(const Tree& t, const VectorField& f,
                                         std::span<const Rat> x)
{
	return eval_engine<Rat>(t, f, x);
}

std::vector<double> elementary_differential_d(const Tree& t, const DVectorField& f,
                                              std::span<const double> x)
{
	return eval_engine<double>(t, f, x);
}

std::vector<Poly> elementary_differential_poly(const Tree& t, const VectorField& f)
{
	ClassInfo ci = make_classes(t);
	std::map<std::pair<int, std::vector<int>>, Poly> jet;
	auto jet_poly = [&](int comp, std::vector<int> vars) -> const Poly& {
		auto it = jet.find({comp, vars});
		if (it != jet.end()) return it->second;
		Poly p = f.comp[comp];
		for (int v : vars) p = p.derivative(v);
		return jet.emplace(std::pair(comp, std::move(vars)), std::move(p)).first->second;
	};
	std::vector<Poly> result(t.rooted ? f.dim : 1);
	contract(
	    t, ci, f.dim, [&](int out, Poly v) { result[out] += v; },
	    [&](const std::vector<int>& asg) {
		    Poly prod = Poly::constant(Rat(1));
		    for (int v = 1; v <= t.nv; ++v) {
			    std::vector<int> vars;
			    for (int id : ci.vertex_in[v]) vars.push_back(asg[ci.class_of[id]]);
			    std::sort(vars.begin(), vars.end());
			    prod = prod * jet_poly(asg[ci.class_of[t.vid(v)]], std::move(vars));
			    if (prod.is_zero()) break;
		    }
		    return prod;
	    });
	return result;
}

IndexExpression index_expression(const Tree& t)
{
	ClassInfo ci = make_classes(t);
	const size_t nclasses = ci.classes.size();
	if (nclasses > std::size(kLetters))
		throw std::runtime_error("too many index classes to render");

	// letters: root class first, the rest in first-use order over the factors
	std::vector<int> letter_of(nclasses, -1);
	int next = 0;
	if (t.rooted) letter_of[0] = next++;
	auto touch = [&](int cls) {
		if (letter_of[cls] == -1) letter_of[cls] = next++;
	};
	for (int v = 1; v <= t.nv; ++v) {
		touch(ci.class_of[t.vid(v)]);
		std::vector<int> inc;
		for (int id : ci.vertex_in[v]) inc.push_back(ci.class_of[id]);
		std::sort(inc.begin(), inc.end());
		for (int c : inc) touch(c);
	}
	for (size_t c = 0; c < nclasses; ++c) touch(static_cast<int>(c));

	// per-element symbols: class letter for the smaller element of the pair,
	// primed letter for its sigma partner
	auto symbol = [&](int id) {
		int cls = ci.class_of[id];
		std::string s = kLetters[letter_of[cls]];
		if (id == std::max(ci.classes[cls].first, ci.classes[cls].second)) s += "'";
		return s;
	};

	IndexExpression ex;
	for (size_t c = 0; c < nclasses; ++c)
		ex.free_symbols.push_back(kLetters[letter_of[c]]);
	for (const auto& [p, q] : ci.classes) ex.deltas.emplace_back(symbol(p), symbol(q));
	if (t.rooted) ex.output_symbol = symbol(t.aid(0));
	for (int v = 1; v <= t.nv; ++v) {
		IndexExpression::Factor fac;
		fac.vertex = v;
		fac.out_symbol = symbol(t.vid(v));
		for (int id : ci.vertex_in[v]) fac.in_symbols.push_back(symbol(id));
		std::sort(fac.in_symbols.begin(), fac.in_symbols.end());
		ex.factors.push_back(std::move(fac));
	}
	return ex;
}

std::string symbolic_str(const Tree& t)
{
	ClassInfo ci = make_classes(t);
	IndexExpression ex = index_expression(t);
	// contract the deltas: both elements of a class render as its letter
	auto letter = [&](int id) { return ex.free_symbols[ci.class_of[id]]; };
	std::ostringstream os;
	for (int v = 1; v <= t.nv; ++v) {
		if (v > 1) os << " ";
		os << "f^" << letter(t.vid(v));
		std::vector<std::string> subs;
		for (int id : ci.vertex_in[v]) subs.push_back(letter(id));
		std::sort(subs.begin(), subs.end());
		if (!subs.empty()) {
			os << "_";
			for (const auto& s : subs) os << s;
		}
	}
	if (t.rooted) {
		if (t.nv > 0) os << " ";
		os << "∂_" << letter(t.aid(0));
	}
	return os.str();
}

void TruncatedSeries::set(const Tree& t, const Rat& c)
{
	Composition k = composition(t);
	if (k.size() > node_bound_)
		throw std::invalid_argument("tree exceeds the series node bound");
	std::string enc = canonical_encoding(t);
	if (c == 0) {
		entries_.erase(enc);
		return;
	}
	entries_[enc] = Entry{canonicalize(t), c};
}

std::vector<Rat> TruncatedSeries::evaluate(const VectorField& f, std::span<const Rat> x,
                                           const Rat& h, bool graded_by_order) const
{
	std::vector<Rat> acc(f.dim, Rat(0));
	for (const auto& [enc, e] : entries_) {
		if (!e.tree.rooted) throw std::invalid_argument("series entries must be rooted trees");
		int w = graded_by_order ? order(e.tree) : composition(e.tree).size();
		Rat weight = e.coeff;
		for (int k = 0; k < w; ++k) weight *= h;
		auto val = elementary_differential(e.tree, f, x);
		for (int i = 0; i < f.dim; ++i) acc[i] += weight * val[i];
	}
	return acc;
}

} // namespace exaro
