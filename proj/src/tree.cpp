#include "exaro/tree.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace exaro {

namespace {

std::string elem_token(const ElementId& e)
{
	return e.kind == ElemKind::Vertex ? std::to_string(e.index) : "a" + std::to_string(e.index);
}

// the vertex-free ghost-liana pair, the one admissible graph with a
// target-less arrow; handled out of band where tau totality matters
bool is_ghost_pair(const Tree& t) { return t.rooted && t.nv == 0; }

// arrows targeting each vertex, 1-based vertex -> arrow list
std::vector<std::vector<int>> incoming_arrows(const Tree& t)
{
	std::vector<std::vector<int>> in(t.nv + 1);
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a) in[t.tau[a - 1]].push_back(a);
	return in;
}

std::vector<std::vector<int>> neighbor_ids(const Tree& t)
{
	std::vector<std::vector<int>> adj(t.n_elems());
	for (int x = 0; x < t.n_elems(); ++x) adj[x].push_back(t.sigma[x]);
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a) {
		int aidv = t.aid(a), vidv = t.vid(t.tau[a - 1]);
		adj[aidv].push_back(vidv);
		adj[vidv].push_back(aidv);
	}
	return adj;
}

} // namespace

Tree validate(const RawTree& raw)
{
	if (raw.vertices < 0 || raw.arrows < 0)
		throw ValidationError(ValidationCode::BadCounts, "negative element count");
	const int nv = raw.vertices;
	const int na = raw.rooted ? raw.arrows - 1 : raw.arrows;
	if (raw.rooted && raw.arrows < 1)
		throw ValidationError(ValidationCode::BadCounts, "a rooted graph needs arrow a0");

	// the vertex-free ghost-liana pair is the one admissible tau-free shape
	const bool degenerate = raw.rooted && nv == 0 && raw.arrows == 2 && raw.tau.empty();
	if (!degenerate) {
		if (static_cast<int>(raw.tau.size()) > na)
			throw ValidationError(ValidationCode::TauDefinedOnArrowZero,
			                      "tau lists more targets than arrows 1..A");
		if (static_cast<int>(raw.tau.size()) < na)
			throw ValidationError(ValidationCode::TauOutOfRange,
			                      "tau must give a target for every arrow 1..A");
		for (int v : raw.tau)
			if (v < 1 || v > nv)
				throw ValidationError(ValidationCode::TauOutOfRange,
				                      "tau target " + std::to_string(v) + " outside 1..|V|");
	}

	Tree t;
	t.nv = nv;
	t.na = na;
	t.rooted = raw.rooted;
	t.tau = raw.tau;
	t.sigma.assign(t.n_elems(), -1);

	auto id_of = [&](const ElementId& e) -> int {
		if (e.kind == ElemKind::Vertex) {
			if (e.index < 1 || e.index > nv)
				throw ValidationError(ValidationCode::BadCounts,
				                      "sigma references unknown vertex " + std::to_string(e.index));
			return t.vid(e.index);
		}
		int lo = raw.rooted ? 0 : 1;
		if (e.index < lo || e.index > na)
			throw ValidationError(ValidationCode::BadCounts,
			                      "sigma references unknown arrow a" + std::to_string(e.index));
		return t.aid(e.index);
	};

	for (const auto& [e1, e2] : raw.sigma) {
		int i = id_of(e1), j = id_of(e2);
		if (i == j)
			throw ValidationError(ValidationCode::FixedPointInSigma,
			                      "sigma fixes element " + elem_token(e1));
		if (t.sigma[i] != -1 || t.sigma[j] != -1)
			throw ValidationError(ValidationCode::NonInvolutiveSigma,
			                      "element covered by more than one sigma pair");
		t.sigma[i] = j;
		t.sigma[j] = i;
	}
	for (int x = 0; x < t.n_elems(); ++x)
		if (t.sigma[x] == -1)
			throw ValidationError(ValidationCode::UncoveredElement,
			                      "element " + elem_token(t.elem_of(x)) + " not covered by sigma");
	return t;
}

int Composition::size() const
{
	int s = 0;
	for (int c : counts) s += c;
	return s;
}

int Composition::derived_size() const
{
	int s = 0;
	for (size_t j = 0; j < counts.size(); ++j) s += static_cast<int>(j) * counts[j];
	return s;
}

std::vector<int> Composition::derived() const
{
	std::vector<int> d(counts.size());
	for (size_t j = 0; j < counts.size(); ++j) d[j] = static_cast<int>(j) * counts[j];
	while (!d.empty() && d.back() == 0) d.pop_back();
	return d;
}

std::string Composition::str() const
{
	std::string s = "(";
	for (size_t j = 0; j < counts.size(); ++j) {
		if (j) s += ",";
		s += std::to_string(counts[j]);
	}
	if (counts.empty()) s += "0";
	return s + ")";
}

Composition composition(const Tree& t)
{
	std::vector<int> indeg(t.nv + 1, 0);
	for (int v : t.tau) indeg[v]++;
	int maxdeg = 0;
	for (int v = 1; v <= t.nv; ++v) maxdeg = std::max(maxdeg, indeg[v]);
	Composition k;
	k.counts.assign(maxdeg + 1, 0);
	for (int v = 1; v <= t.nv; ++v) k.counts[indeg[v]]++;
	while (!k.counts.empty() && k.counts.back() == 0) k.counts.pop_back();
	return k;
}

int count_lianas(const Tree& t)
{
	int n = 0;
	for (int x = 0; x < t.n_elems(); ++x)
		if (x < t.sigma[x] && !t.id_is_vertex(x) && !t.id_is_vertex(t.sigma[x])) ++n;
	return n;
}

int count_stolons(const Tree& t)
{
	int n = 0;
	for (int x = 0; x < t.n_elems(); ++x)
		if (x < t.sigma[x] && t.id_is_vertex(x) && t.id_is_vertex(t.sigma[x])) ++n;
	return n;
}

int order(const Tree& t) { return t.nv + count_lianas(t) - count_stolons(t); }

ClassificationFlags classify(const Tree& t)
{
	ClassificationFlags f;
	f.has_liana = count_lianas(t) > 0;
	f.has_stolon = count_stolons(t) > 0;
	f.is_aromatic = !f.has_liana && !f.has_stolon;

	// connectivity over x~sigma(x), arrow~target
	{
		auto adj = neighbor_ids(t);
		std::vector<bool> seen(t.n_elems(), false);
		std::vector<int> stack;
		if (t.n_elems() > 0) {
			stack.push_back(0);
			seen[0] = true;
		}
		int count = t.n_elems() > 0 ? 1 : 0;
		while (!stack.empty()) {
			int x = stack.back();
			stack.pop_back();
			for (int y : adj[x])
				if (!seen[y]) {
					seen[y] = true;
					++count;
					stack.push_back(y);
				}
		}
		f.is_connected = count == t.n_elems();
	}

	// loops in the functional graph v -> tau(sigma(v)) over vertices matched to arrows
	{
		std::vector<int> succ(t.nv + 1, 0); // 0 = none
		for (int v = 1; v <= t.nv; ++v) {
			int p = t.sigma[t.vid(v)];
			if (!t.id_is_vertex(p)) {
				int a = t.arrow_of(p);
				if (a >= 1 && a <= static_cast<int>(t.tau.size())) succ[v] = t.tau[a - 1];
			}
		}
		std::vector<int> state(t.nv + 1, 0); // 0 new, 1 on path, 2 done
		for (int v = 1; v <= t.nv && !f.has_loop; ++v) {
			int u = v;
			std::vector<int> path;
			while (u != 0 && state[u] == 0) {
				state[u] = 1;
				path.push_back(u);
				u = succ[u];
			}
			if (u != 0 && state[u] == 1) f.has_loop = true;
			for (int w : path) state[w] = 2;
		}
	}

	bool root_is_vertex = t.rooted && t.id_is_vertex(t.sigma[t.aid(0)]);
	f.is_exotic_tree = t.rooted && root_is_vertex && !f.has_stolon && !f.has_loop;
	f.is_butcher_tree = f.is_exotic_tree && !f.has_liana;
	return f;
}

namespace {

// extracts the elements listed in `ids` as a standalone graph
Tree subgraph(const Tree& t, const std::vector<int>& ids, bool rooted)
{
	std::vector<int> vmap(t.nv + 1, 0), amap(t.na + 1, -1);
	Tree s;
	s.rooted = rooted;
	for (int id : ids) {
		if (t.id_is_vertex(id)) vmap[t.vertex_of(id)] = ++s.nv;
	}
	for (int id : ids) {
		if (t.id_is_vertex(id)) continue;
		int a = t.arrow_of(id);
		if (a == 0)
			amap[0] = 0;
		else
			amap[a] = ++s.na;
	}
	s.tau.assign(s.na, 0);
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a)
		if (amap[a] > 0) s.tau[amap[a] - 1] = vmap[t.tau[a - 1]];
	s.sigma.assign(s.n_elems(), -1);
	auto newid = [&](int id) {
		return t.id_is_vertex(id) ? s.vid(vmap[t.vertex_of(id)]) : s.aid(amap[t.arrow_of(id)]);
	};
	for (int id : ids) {
		int j = t.sigma[id];
		s.sigma[newid(id)] = newid(j);
	}
	return s;
}

std::vector<std::vector<int>> component_ids(const Tree& t)
{
	auto adj = neighbor_ids(t);
	std::vector<int> comp(t.n_elems(), -1);
	int nc = 0;
	for (int x = 0; x < t.n_elems(); ++x) {
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
	std::vector<std::vector<int>> groups(nc);
	for (int x = 0; x < t.n_elems(); ++x) groups[comp[x]].push_back(x);
	return groups;
}

std::string encode_labeled(const Tree& t)
{
	std::ostringstream os;
	os << (t.rooted ? "T" : "M") << t.nv << ":" << t.na << "|";
	for (int a = 1; a <= t.na; ++a) {
		if (a > 1) os << ",";
		os << t.tau[a - 1];
	}
	os << "|";
	std::vector<std::string> pairs;
	for (int x = 0; x < t.n_elems(); ++x) {
		int y = t.sigma[x];
		if (x > y) continue;
		std::string a = elem_token(t.elem_of(x)), b = elem_token(t.elem_of(y));
		ElementId ea = t.elem_of(x), eb = t.elem_of(y);
		// vertices sort before arrows, then by index
		auto key = [](const ElementId& e) {
			return std::pair(e.kind == ElemKind::Vertex ? 0 : 1, e.index);
		};
		if (key(eb) < key(ea)) std::swap(a, b);
		pairs.push_back("(" + a + "," + b + ")");
	}
	std::sort(pairs.begin(), pairs.end());
	for (const auto& p : pairs) os << p;
	return os.str();
}

// canonical labeling of one connected (or standalone) graph by ordered-partition
// refinement with individualization, minimizing the labeled encoding
class Canonizer {
  public:
	explicit Canonizer(const Tree& t) : t_(t), incoming_(incoming_arrows(t)) {}

	std::pair<std::string, Tree> run()
	{
		std::vector<int> col(t_.n_elems(), 0);
		for (int x = 0; x < t_.n_elems(); ++x) {
			if (t_.id_is_vertex(x))
				col[x] = 1 + static_cast<int>(incoming_[t_.vertex_of(x)].size());
			else
				col[x] = t_.arrow_of(x) == 0 && t_.rooted ? 0 : 1000;
		}
		normalize(col);
		dfs(col);
		return {best_, best_tree_};
	}

  private:
	const Tree& t_;
	std::vector<std::vector<int>> incoming_;
	std::string best_;
	Tree best_tree_;
	bool has_best_ = false;

	void normalize(std::vector<int>& col) const
	{
		std::map<int, int> rank;
		for (int c : col) rank.emplace(c, 0);
		int r = 0;
		for (auto& [c, v] : rank) v = r++;
		for (auto& c : col) c = rank[c];
	}

	void refine(std::vector<int>& col) const
	{
		const int n = t_.n_elems();
		while (true) {
			std::vector<std::vector<int>> sig(n);
			for (int x = 0; x < n; ++x) {
				std::vector<int>& s = sig[x];
				s.push_back(col[x]);
				s.push_back(col[t_.sigma[x]]);
				if (t_.id_is_vertex(x)) {
					s.push_back(-2);
					std::vector<int> inc;
					for (int a : incoming_[t_.vertex_of(x)]) inc.push_back(col[t_.aid(a)]);
					std::sort(inc.begin(), inc.end());
					s.insert(s.end(), inc.begin(), inc.end());
				} else {
					int a = t_.arrow_of(x);
					s.push_back(a == 0 ? -3 : col[t_.vid(t_.tau[a - 1])]);
				}
			}
			std::map<std::vector<int>, int> rank;
			for (const auto& s : sig) rank.emplace(s, 0);
			int r = 0;
			for (auto& [s, v] : rank) v = r++;
			int before = 1 + *std::max_element(col.begin(), col.end());
			for (int x = 0; x < n; ++x) col[x] = rank[sig[x]];
			int after = 1 + *std::max_element(col.begin(), col.end());
			if (after == before) break;
		}
	}

	void dfs(std::vector<int> col)
	{
		refine(col);
		const int n = t_.n_elems();
		// first color class with more than one element
		int target = -1;
		std::map<int, std::vector<int>> classes;
		for (int x = 0; x < n; ++x) classes[col[x]].push_back(x);
		for (const auto& [c, members] : classes)
			if (members.size() > 1) {
				target = c;
				break;
			}
		if (target == -1) {
			emit(col);
			return;
		}
		for (int pick : classes[target]) {
			std::vector<int> col2(n);
			for (int x = 0; x < n; ++x) col2[x] = 2 * col[x] + (x == pick ? 0 : 1);
			normalize(col2);
			dfs(std::move(col2));
		}
	}

	void emit(const std::vector<int>& col)
	{
		std::vector<int> vperm(t_.nv + 1, 0), aperm(t_.na + 1, 0);
		std::vector<std::pair<int, int>> vs, as; // (color, index)
		for (int v = 1; v <= t_.nv; ++v) vs.emplace_back(col[t_.vid(v)], v);
		for (int a = 1; a <= t_.na; ++a) as.emplace_back(col[t_.aid(a)], a);
		std::sort(vs.begin(), vs.end());
		std::sort(as.begin(), as.end());
		for (size_t i = 0; i < vs.size(); ++i) vperm[vs[i].second] = static_cast<int>(i) + 1;
		for (size_t i = 0; i < as.size(); ++i) aperm[as[i].second] = static_cast<int>(i) + 1;
		Tree r = relabel(t_, std::vector<int>(vperm.begin() + 1, vperm.end()),
		                 std::vector<int>(aperm.begin() + 1, aperm.end()));
		std::string enc = encode_labeled(r);
		if (!has_best_ || enc < best_) {
			best_ = std::move(enc);
			best_tree_ = std::move(r);
			has_best_ = true;
		}
	}
};

// canonical pieces in final component order: rooted part first, then aromas
// sorted by their canonical encodings
std::vector<std::pair<std::string, Tree>> canonical_pieces(const Tree& t)
{
	if (is_ghost_pair(t)) return {{encode_labeled(t), t}};
	auto groups = component_ids(t);
	std::vector<std::pair<std::string, Tree>> rooted, aromas;
	for (const auto& ids : groups) {
		bool has_root =
		    t.rooted && std::find(ids.begin(), ids.end(), t.aid(0)) != ids.end();
		Tree sub = subgraph(t, ids, has_root);
		auto piece = Canonizer(sub).run();
		(has_root ? rooted : aromas).push_back(std::move(piece));
	}
	std::sort(aromas.begin(), aromas.end(),
	          [](const auto& a, const auto& b) { return a.first < b.first; });
	std::vector<std::pair<std::string, Tree>> out = std::move(rooted);
	out.insert(out.end(), std::make_move_iterator(aromas.begin()),
	           std::make_move_iterator(aromas.end()));
	return out;
}

Tree assemble(const std::vector<const Tree*>& parts)
{
	Tree r;
	r.rooted = !parts.empty() && parts[0]->rooted;
	std::vector<std::pair<ElementId, ElementId>> pairs;
	int vbase = 0, abase = 0;
	for (const Tree* p : parts) {
		for (int a = 1; a <= static_cast<int>(p->tau.size()); ++a)
			r.tau.push_back(p->tau[a - 1] + vbase);
		for (int x = 0; x < p->n_elems(); ++x) {
			int y = p->sigma[x];
			if (x > y) continue;
			auto shift = [&](int id) {
				ElementId e = p->elem_of(id);
				if (e.kind == ElemKind::Vertex) return vertex(e.index + vbase);
				return arrow(e.index == 0 && p->rooted ? 0 : e.index + abase);
			};
			pairs.emplace_back(shift(x), shift(y));
		}
		vbase += p->nv;
		abase += p->na;
	}
	RawTree raw;
	raw.vertices = vbase;
	raw.arrows = r.rooted ? abase + 1 : abase;
	raw.rooted = r.rooted;
	raw.tau = r.tau;
	raw.sigma = pairs;
	return validate(raw);
}

} // namespace

Components connected_components(const Tree& t)
{
	Components out;
	if (is_ghost_pair(t)) {
		out.rooted = t;
		return out;
	}
	auto groups = component_ids(t);
	std::vector<std::pair<std::string, Tree>> aromas;
	for (const auto& ids : groups) {
		bool has_root = t.rooted && std::find(ids.begin(), ids.end(), t.aid(0)) != ids.end();
		Tree sub = subgraph(t, ids, has_root);
		if (has_root)
			out.rooted = std::move(sub);
		else
			aromas.push_back(Canonizer(sub).run());
	}
	std::sort(aromas.begin(), aromas.end(),
	          [](const auto& a, const auto& b) { return a.first < b.first; });
	for (auto& [enc, tree] : aromas) out.aromas.push_back(std::move(tree));
	return out;
}

std::string canonical_encoding(const Tree& t)
{
	auto pieces = canonical_pieces(t);
	std::string enc;
	for (size_t i = 0; i < pieces.size(); ++i) {
		if (i) enc += "||";
		enc += pieces[i].first;
	}
	return enc;
}

Tree canonicalize(const Tree& t)
{
	auto pieces = canonical_pieces(t);
	std::vector<const Tree*> parts;
	for (auto& [enc, tree] : pieces) parts.push_back(&tree);
	return assemble(parts);
}

bool isomorphic(const Tree& a, const Tree& b)
{
	return canonical_encoding(a) == canonical_encoding(b);
}

long symmetry_coefficient(const Tree& t)
{
	if (is_ghost_pair(t)) return 1; // arrow 0 fixed, its partner follows
	const int n = t.n_elems();
	auto incoming = incoming_arrows(t);
	std::vector<int> indeg(t.nv + 1, 0);
	for (int v = 1; v <= t.nv; ++v) indeg[v] = static_cast<int>(incoming[v].size());

	// element order: vertices, then arrows; arrow 0 pinned to itself
	std::vector<int> img(n, -1), used(n, 0);
	if (t.rooted) {
		img[t.aid(0)] = t.aid(0);
		used[t.aid(0)] = 1;
	}
	std::vector<int> slots;
	for (int v = 1; v <= t.nv; ++v) slots.push_back(t.vid(v));
	for (int a = 1; a <= t.na; ++a) slots.push_back(t.aid(a));

	long count = 0;
	std::function<void(size_t)> go = [&](size_t k) {
		if (k == slots.size()) {
			++count;
			return;
		}
		int x = slots[k];
		bool xv = t.id_is_vertex(x);
		for (int y = 0; y < n; ++y) {
			if (used[y] || t.id_is_vertex(y) != xv) continue;
			if (!xv && t.arrow_of(y) == 0) continue;
			if (xv && indeg[t.vertex_of(x)] != indeg[t.vertex_of(y)]) continue;
			if (!xv) { // tau consistency; targets are vertices, already mapped
				int a = t.arrow_of(x), b = t.arrow_of(y);
				if (img[t.vid(t.tau[a - 1])] != t.vid(t.tau[b - 1])) continue;
			}
			// sigma consistency
			int sx = t.sigma[x], sy = t.sigma[y];
			if (img[sx] != -1) {
				if (img[sx] != sy) continue;
			} else if (used[sy] && sy != y) {
				continue; // sigma(y) already taken by an element other than sigma(x)
			}
			img[x] = y;
			used[y] = 1;
			go(k + 1);
			img[x] = -1;
			used[y] = 0;
		}
	};
	go(0);
	return count;
}

Tree attach(const Tree& gamma, const Tree& multi_aroma)
{
	if (multi_aroma.rooted) throw std::invalid_argument("attach expects a multi-aroma");
	std::vector<const Tree*> parts{&gamma, &multi_aroma};
	return assemble(parts);
}

std::vector<std::pair<int, int>> sigma_classes(const Tree& t)
{
	std::vector<std::pair<int, int>> cls;
	for (int x = 0; x < t.n_elems(); ++x)
		if (x < t.sigma[x]) cls.emplace_back(x, t.sigma[x]);
	if (t.rooted) {
		int r0 = t.aid(0);
		auto it = std::find_if(cls.begin(), cls.end(), [&](const auto& p) {
			return p.first == r0 || p.second == r0;
		});
		std::rotate(cls.begin(), it, it + 1);
	}
	return cls;
}

Tree relabel(const Tree& t, const std::vector<int>& vperm, const std::vector<int>& aperm)
{
	RawTree raw;
	raw.vertices = t.nv;
	raw.arrows = t.rooted ? t.na + 1 : t.na;
	raw.rooted = t.rooted;
	raw.tau.assign(t.tau.size(), 0);
	for (int a = 1; a <= static_cast<int>(t.tau.size()); ++a)
		raw.tau[aperm[a - 1] - 1] = vperm[t.tau[a - 1] - 1];
	auto map_elem = [&](int id) {
		ElementId e = t.elem_of(id);
		if (e.kind == ElemKind::Vertex) return vertex(vperm[e.index - 1]);
		return arrow(e.index == 0 ? 0 : aperm[e.index - 1]);
	};
	for (int x = 0; x < t.n_elems(); ++x)
		if (x < t.sigma[x]) raw.sigma.emplace_back(map_elem(x), map_elem(t.sigma[x]));
	return validate(raw);
}

// --- text formats ---

namespace {

ElementId parse_elem_token(const std::string& tok)
{
	if (tok.empty()) throw std::invalid_argument("empty element token");
	if (tok[0] == 'a') return arrow(std::stoi(tok.substr(1)));
	return vertex(std::stoi(tok));
}

std::vector<std::pair<ElementId, ElementId>> parse_sigma_pairs(const std::string& s)
{
	std::vector<std::pair<ElementId, ElementId>> pairs;
	size_t i = 0;
	auto skip = [&] {
		while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
	};
	while (true) {
		skip();
		if (i >= s.size()) break;
		if (s[i] != '(') throw std::invalid_argument("expected '(' in sigma string");
		size_t close = s.find(')', i);
		if (close == std::string::npos) throw std::invalid_argument("unbalanced sigma string");
		std::string body = s.substr(i + 1, close - i - 1);
		size_t comma = body.find(',');
		if (comma == std::string::npos) throw std::invalid_argument("sigma pair needs a comma");
		auto strip = [](std::string v) {
			size_t b = v.find_first_not_of(" \t");
			size_t e = v.find_last_not_of(" \t");
			return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
		};
		pairs.emplace_back(parse_elem_token(strip(body.substr(0, comma))),
		                   parse_elem_token(strip(body.substr(comma + 1))));
		i = close + 1;
	}
	return pairs;
}

} // namespace

Tree tree_from_sigma(int nv, const std::vector<int>& tau, const std::string& sigma)
{
	RawTree raw;
	raw.vertices = nv;
	raw.arrows = static_cast<int>(tau.size()) + 1;
	raw.rooted = true;
	raw.tau = tau;
	raw.sigma = parse_sigma_pairs(sigma);
	return validate(raw);
}

Tree aroma_from_sigma(int nv, const std::vector<int>& tau, const std::string& sigma)
{
	RawTree raw;
	raw.vertices = nv;
	raw.arrows = static_cast<int>(tau.size());
	raw.rooted = false;
	raw.tau = tau;
	raw.sigma = parse_sigma_pairs(sigma);
	return validate(raw);
}

std::string sigma_str(const Tree& t)
{
	std::string s;
	for (const auto& [x, y] : sigma_classes(t)) {
		ElementId a = t.elem_of(x), b = t.elem_of(y);
		auto key = [](const ElementId& e) {
			return std::pair(e.kind == ElemKind::Arrow ? 0 : 1, e.index);
		};
		if (key(b) < key(a)) std::swap(a, b);
		s += "(" + elem_token(a) + "," + elem_token(b) + ")";
	}
	return s;
}

std::string tau_str(const Tree& t)
{
	std::string s = "(";
	for (int a = 1; a <= t.na; ++a) {
		if (a > 1) s += ",";
		s += std::to_string(t.tau[a - 1]);
	}
	return s + ")";
}

std::string to_json(const Tree& t)
{
	nlohmann::json j;
	j["vertices"] = t.nv;
	j["arrows"] = t.rooted ? t.na + 1 : t.na;
	if (!t.rooted) j["rooted"] = false;
	j["tau"] = t.tau;
	nlohmann::json pairs = nlohmann::json::array();
	for (const auto& [x, y] : sigma_classes(t)) {
		nlohmann::json pr = nlohmann::json::array();
		for (int id : {x, y}) {
			ElementId e = t.elem_of(id);
			if (e.kind == ElemKind::Vertex)
				pr.push_back(e.index);
			else
				pr.push_back("a" + std::to_string(e.index));
		}
		pairs.push_back(pr);
	}
	j["sigma"] = pairs;
	return j.dump();
}

Tree from_json(const std::string& text)
{
	nlohmann::json j = nlohmann::json::parse(text);
	RawTree raw;
	raw.vertices = j.at("vertices").get<int>();
	raw.arrows = j.at("arrows").get<int>();
	raw.rooted = !j.contains("rooted") || j.at("rooted").get<bool>();
	raw.tau = j.at("tau").get<std::vector<int>>();
	for (const auto& pr : j.at("sigma")) {
		if (!pr.is_array() || pr.size() != 2)
			throw std::invalid_argument("sigma entries must be pairs");
		ElementId e[2];
		for (int k = 0; k < 2; ++k) {
			if (pr[k].is_number_integer())
				e[k] = vertex(pr[k].get<int>());
			else if (pr[k].is_string())
				e[k] = parse_elem_token(pr[k].get<std::string>());
			else
				throw std::invalid_argument("sigma element must be a vertex number or arrow string");
		}
		raw.sigma.emplace_back(e[0], e[1]);
	}
	return validate(raw);
}

std::string to_dot(const Tree& t)
{
	std::ostringstream os;
	os << "digraph eatree {\n  node [shape=circle, label=\"\", width=0.18, fixedsize=true];\n";
	for (int v = 1; v <= t.nv; ++v) os << "  v" << v << ";\n";
	if (t.rooted) os << "  ghost [style=invis, width=0.02];\n";
	auto end_of = [&](int a) -> std::string {
		// drawing endpoint of arrow a: its target; arrow 0 has none
		if (a < 1 || a > static_cast<int>(t.tau.size())) return "ghost";
		return "v" + std::to_string(t.tau[a - 1]);
	};
	for (int x = 0; x < t.n_elems(); ++x) {
		int y = t.sigma[x];
		if (x > y) continue;
		bool xv = t.id_is_vertex(x), yv = t.id_is_vertex(y);
		if (xv && yv) { // stolon: double undirected edge
			os << "  v" << t.vertex_of(x) << " -> v" << t.vertex_of(y)
			   << " [dir=none, color=\"black:invis:black\"];\n";
		} else if (!xv && !yv) { // liana: dashed undirected edge
			int a = t.arrow_of(x), b = t.arrow_of(y);
			std::string ea = a == 0 ? "ghost" : end_of(a);
			std::string eb = b == 0 ? "ghost" : end_of(b);
			os << "  " << ea << " -> " << eb << " [dir=none, style=dashed];\n";
		} else { // standard arrow from its source vertex to its target
			int v = xv ? t.vertex_of(x) : t.vertex_of(y);
			int a = xv ? t.arrow_of(y) : t.arrow_of(x);
			if (a == 0)
				os << "  ghost -> v" << v << " [dir=back];\n";
			else
				os << "  v" << v << " -> " << end_of(a) << ";\n";
		}
	}
	os << "}\n";
	return os.str();
}

} // namespace exaro
