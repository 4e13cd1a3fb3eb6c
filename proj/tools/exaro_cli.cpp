#include "exaro/duality.hpp"
#include "exaro/elementary.hpp"
#include "exaro/enumerate.hpp"
#include "exaro/equivariance.hpp"
#include "exaro/gradrewrite.hpp"
#include "exaro/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace exaro;

namespace {

std::string slurp(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in.good()) throw std::runtime_error("cannot read " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

Tree load_tree(const std::string& file, const std::string& inline_json)
{
	if (!inline_json.empty()) return from_json(inline_json);
	if (file.empty()) throw std::runtime_error("no tree given (use --tree or --tree-json)");
	return from_json(slurp(file));
}

VectorField load_field(const std::string& spec)
{
	if (spec.find('=') != std::string::npos) return parse_field(spec);
	return parse_field(slurp(spec));
}

Composition parse_composition(const std::string& s)
{
	Composition k;
	std::string cur;
	auto flush = [&] {
		k.counts.push_back(std::stoi(cur));
		cur.clear();
	};
	for (char c : s) {
		if (c == ',')
			flush();
		else if (!std::isspace(static_cast<unsigned char>(c)))
			cur += c;
	}
	if (!cur.empty()) flush();
	while (!k.counts.empty() && k.counts.back() == 0) k.counts.pop_back();
	return k;
}

nlohmann::json report_json(const EquivarianceReport& rep)
{
	nlohmann::json j;
	j["property"] = property_name(rep.property);
	j["pass"] = rep.verdict_pass;
	j["exact_trials"] = rep.exact_trials;
	j["exact_passed"] = rep.exact_passed;
	if (rep.float_trials) {
		j["float_trials"] = rep.float_trials;
		j["max_residual"] = rep.max_residual;
	}
	if (rep.witness) {
		nlohmann::json w;
		w["transform"] = rep.witness->transform;
		w["field"] = rep.witness->field;
		w["point"] = rep.witness->point;
		auto vec = [](const std::vector<Rat>& v) {
			nlohmann::json a = nlohmann::json::array();
			for (const auto& r : v) a.push_back(rat_str(r));
			return a;
		};
		w["lhs"] = vec(rep.witness->lhs);
		w["rhs"] = vec(rep.witness->rhs);
		j["witness"] = std::move(w);
	}
	return j;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exotic aromatic tree calculus"};
	app.require_subcommand(1);

	uint64_t seed = 1;
	std::string format = "table";
	bool exact_only = false;
	app.add_option("--seed", seed, "seed for all randomized trials")->capture_default_str();
	app.add_option("--format", format, "json|dot|table|latex")->capture_default_str();
	app.add_flag("--exact-only", exact_only, "skip float trials");

	// enumerate
	auto* enumerate = app.add_subcommand("enumerate", "list trees by order/composition/nodes")->fallthrough();
	int en_order = 0, en_nodes = 0, en_maxorder = 0;
	std::string en_comp, en_filter;
	enumerate->add_option("--order", en_order, "enumerate all trees of this order");
	enumerate->add_option("--composition", en_comp, "comma list, e.g. 0,1,1");
	enumerate->add_option("--nodes", en_nodes, "enumerate by node count (needs --max-order)");
	enumerate->add_option("--max-order", en_maxorder, "order bound for --nodes");
	enumerate->add_option("--filter", en_filter, "aromatic|exotic|connected|butcher");

	// render
	auto* render = app.add_subcommand("render", "render a tree file")->fallthrough();
	std::string r_tree, r_tree_json;
	render->add_option("--tree", r_tree, "tree JSON file");
	render->add_option("--tree-json", r_tree_json, "inline tree JSON");

	// eval
	auto* eval = app.add_subcommand("eval", "evaluate the elementary differential")->fallthrough();
	std::string e_tree, e_tree_json, e_field, e_point;
	bool e_symbolic = false;
	eval->add_option("--tree", e_tree, "tree JSON file");
	eval->add_option("--tree-json", e_tree_json, "inline tree JSON");
	eval->add_option("--field", e_field, "field file or inline 'f1 = ...'");
	eval->add_option("--point", e_point, "evaluation point, e.g. '0,1/2'");
	eval->add_flag("--symbolic", e_symbolic, "also print the index expression");

	// pair
	auto* pair_cmd = app.add_subcommand("pair", "dual pairing of two trees")->fallthrough();
	std::vector<std::string> p_trees;
	bool p_matrix = false;
	int p_order = 0;
	pair_cmd->add_option("--tree", p_trees, "tree JSON file (repeat twice)");
	pair_cmd->add_flag("--matrix", p_matrix, "full pairing matrix");
	pair_cmd->add_option("--order", p_order, "order for --matrix");

	// verify
	auto* verify = app.add_subcommand("verify", "equivariance classification checks")->fallthrough();
	int v_order = 2;
	std::string v_prop = "all";
	verify->add_option("--order", v_order, "max order to verify")->capture_default_str();
	verify->add_option("--property", v_prop,
	                   "orthogonal|gl|stiefel|grassmann|affine|decoupling|all");

	// normalize
	auto* normalize = app.add_subcommand("normalize", "exotic normal form of a connected tree")->fallthrough();
	std::string n_tree, n_tree_json;
	normalize->add_option("--tree", n_tree, "tree JSON file");
	normalize->add_option("--tree-json", n_tree_json, "inline tree JSON");

	// classes
	auto* classes = app.add_subcommand("classes", "gradient equivalence classes by order")->fallthrough();
	int c_order = 2;
	classes->add_option("--order", c_order, "order to partition")->capture_default_str();

	CLI11_PARSE(app, argc, argv);

	try {
		if (*enumerate) {
			std::vector<Tree> trees;
			if (enumerate->count("--composition")) {
				trees = enumerate_by_composition(parse_composition(en_comp));
				if (!parity_ok(parse_composition(en_comp)))
					std::cerr << "note: odd |kappa|+|kappa'|+1, no trees exist\n";
			} else if (enumerate->count("--nodes")) {
				if (!enumerate->count("--max-order")) {
					std::cerr << "error: --nodes requires --max-order\n";
					return 1;
				}
				trees = enumerate_by_nodes(en_nodes, en_maxorder);
			} else if (enumerate->count("--order")) {
				trees = enumerate_by_order(en_order);
			} else {
				std::cerr << "error: one of --order/--composition/--nodes required\n";
				return 1;
			}
			if (!en_filter.empty()) {
				std::vector<Tree> kept;
				for (const Tree& t : trees) {
					ClassificationFlags f = classify(t);
					bool keep = (en_filter == "aromatic" && f.is_aromatic) ||
					            (en_filter == "exotic" && f.is_exotic_tree) ||
					            (en_filter == "connected" && f.is_connected) ||
					            (en_filter == "butcher" && f.is_butcher_tree);
					if (keep) kept.push_back(t);
				}
				trees = std::move(kept);
			}
			std::cout << render_trees(trees, parse_format(format));
			return 0;
		}

		if (*render) {
			Tree t = load_tree(r_tree, r_tree_json);
			OutputFormat fmt = format == "table" ? OutputFormat::Dot : parse_format(format);
			std::cout << render_trees({t}, fmt);
			return 0;
		}

		if (*eval) {
			Tree t = load_tree(e_tree, e_tree_json);
			if (e_symbolic) {
				if (format == "json") {
					IndexExpression ex = index_expression(t);
					nlohmann::json j;
					j["rendered"] = symbolic_str(t);
					j["factors"] = nlohmann::json::array();
					for (const auto& fac : ex.factors)
						j["factors"].push_back({{"vertex", fac.vertex},
						                        {"out", fac.out_symbol},
						                        {"in", fac.in_symbols}});
					j["deltas"] = nlohmann::json::array();
					for (const auto& [a, b] : ex.deltas)
						j["deltas"].push_back(std::vector<std::string>{a, b});
					j["output"] = ex.output_symbol;
					j["free"] = ex.free_symbols;
					std::cout << j.dump(2) << "\n";
				} else {
					std::cout << symbolic_str(t) << "\n";
				}
				if (e_field.empty()) return 0;
			}
			VectorField f = load_field(e_field);
			auto x = parse_point(e_point);
			auto v = elementary_differential(t, f, x);
			for (size_t i = 0; i < v.size(); ++i)
				std::cout << (i ? "," : "") << rat_str(v[i]);
			std::cout << "\n";
			return 0;
		}

		if (*pair_cmd) {
			if (p_matrix) {
				std::vector<Tree> trees;
				for (int n = 1; n <= p_order; ++n)
					for (Tree& t : enumerate_by_order(n)) trees.push_back(std::move(t));
				auto cert = independence_certificate(trees);
				nlohmann::json j;
				j["trees"] = nlohmann::json::array();
				for (const Tree& t : trees) j["trees"].push_back(sigma_str(t));
				j["matrix"] = nlohmann::json::array();
				for (const auto& row : cert.matrix) {
					nlohmann::json r = nlohmann::json::array();
					for (const auto& v : row) r.push_back(rat_str(v));
					j["matrix"].push_back(std::move(r));
				}
				j["diagonal"] = cert.diagonal;
				j["triangular"] = cert.triangular;
				j["nonsingular"] = cert.nonsingular;
				std::cout << j.dump(2) << "\n";
				return cert.nonsingular ? 0 : 1;
			}
			if (p_trees.size() != 2) {
				std::cerr << "error: pair needs exactly two --tree files\n";
				return 1;
			}
			Tree a = from_json(slurp(p_trees[0]));
			Tree b = from_json(slurp(p_trees[1]));
			std::cout << rat_str(pairing(a, b)) << "\n";
			return 0;
		}

		if (*verify) {
			std::vector<Property> props;
			if (v_prop != "all") {
				std::map<std::string, Property> names{
				    {"orthogonal", Property::Orthogonal}, {"gl", Property::GL},
				    {"stiefel", Property::Stiefel},       {"grassmann", Property::Grassmann},
				    {"affine", Property::Affine},         {"decoupling", Property::Decoupling}};
				if (!names.contains(v_prop)) {
					std::cerr << "error: unknown property " << v_prop << "\n";
					return 1;
				}
				props.push_back(names[v_prop]);
			}
			auto m = classification_matrix(v_order, seed, exact_only, props);
			nlohmann::json out = nlohmann::json::array();
			for (const auto& row : m.rows) {
				nlohmann::json j;
				j["sigma"] = sigma_str(row.tree);
				j["differential"] = symbolic_str(row.tree);
				j["reports"] = nlohmann::json::array();
				for (const auto& [prop, rep] : row.reports) {
					nlohmann::json r = report_json(rep);
					r["expected"] = property_predicate(prop, row.flags);
					j["reports"].push_back(std::move(r));
				}
				nlohmann::json dis = nlohmann::json::array();
				for (Property p : row.disagreements) dis.push_back(property_name(p));
				j["disagreements"] = std::move(dis);
				out.push_back(std::move(j));
			}
			std::cout << out.dump(2) << "\n";
			if (!m.all_agree) {
				std::cerr << "disagreement between checks and class predicates\n";
				return 2;
			}
			return 0;
		}

		if (*normalize) {
			Tree t = load_tree(n_tree, n_tree_json);
			Tree nf = exotic_normal_form(t);
			if (format == "json" || format == "table")
				std::cout << to_json(nf) << "\n";
			else
				std::cout << render_trees({nf}, parse_format(format));
			std::cout << symbolic_str(nf) << "\n";
			return 0;
		}

		if (*classes) {
			std::map<std::string, std::vector<Tree>> by_class;
			for (const Tree& t : enumerate_by_order(c_order)) {
				Tree rep = *equivalence_class(t).begin();
				by_class[canonical_encoding(rep)].push_back(t);
			}
			nlohmann::json out = nlohmann::json::array();
			for (const auto& [enc, members] : by_class) {
				nlohmann::json cls = nlohmann::json::array();
				for (const Tree& t : members) cls.push_back(symbolic_str(t));
				out.push_back(std::move(cls));
			}
			std::cout << out.dump(2) << "\n";
			return 0;
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
