#include "exaro/render.hpp"

#include "exaro/elementary.hpp"

#include <json.hpp>

#include <sstream>

namespace exaro {

OutputFormat parse_format(const std::string& name)
{
	if (name == "json") return OutputFormat::Json;
	if (name == "dot") return OutputFormat::Dot;
	if (name == "table") return OutputFormat::Table;
	if (name == "latex") return OutputFormat::Latex;
	throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string kappa_str(const std::vector<int>& counts)
{
	std::string s = "(";
	for (size_t i = 0; i < counts.size(); ++i) {
		if (i) s += ",";
		s += std::to_string(counts[i]);
	}
	if (counts.empty()) s += "0";
	return s + ")";
}

} // namespace

std::string render_trees(const std::vector<Tree>& trees, OutputFormat fmt)
{
	std::ostringstream os;
	switch (fmt) {
	case OutputFormat::Json: {
		nlohmann::json out = nlohmann::json::array();
		for (const Tree& t : trees) {
			nlohmann::json j = nlohmann::json::parse(to_json(t));
			j["order"] = order(t);
			j["kappa"] = composition(t).counts;
			j["sigma_cycles"] = sigma_str(t);
			j["differential"] = symbolic_str(t);
			j["symmetry"] = symmetry_coefficient(t);
			out.push_back(std::move(j));
		}
		os << out.dump(2) << "\n";
		break;
	}
	case OutputFormat::Dot:
		for (const Tree& t : trees) os << to_dot(t);
		break;
	case OutputFormat::Table: {
		std::vector<std::vector<std::string>> rows;
		rows.push_back({"|g|", "|k|", "kappa", "kappa'", "tau", "sigma", "F(g)(f)"});
		for (const Tree& t : trees) {
			Composition k = composition(t);
			rows.push_back({std::to_string(order(t)), std::to_string(k.size()),
			                kappa_str(k.counts), kappa_str(k.derived()), tau_str(t),
			                sigma_str(t), symbolic_str(t)});
		}
		std::vector<size_t> width(rows[0].size(), 0);
		for (const auto& r : rows)
			for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
		for (const auto& r : rows) {
			for (size_t c = 0; c < r.size(); ++c) {
				os << r[c];
				if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
			}
			os << "\n";
		}
		os << trees.size() << " trees\n";
		break;
	}
	case OutputFormat::Latex: {
		os << "\\begin{tabular}{|c|c|c|c|c|c|c|}\n\\hline\n";
		os << "$|\\gamma|$ & $|\\kappa|$ & $\\kappa$ & $\\kappa'$ & $\\tau$ & $\\sigma$ & "
		      "$F(\\gamma)(f)$ \\\\\n\\hline\n";
		for (const Tree& t : trees) {
			Composition k = composition(t);
			std::string diff = symbolic_str(t);
			// f^i_jk -> f^{i}_{jk}, trailing marker in math form
			std::string math;
			for (size_t i = 0; i < diff.size(); ++i) {
				if (diff[i] == '^' || diff[i] == '_') {
					math += diff[i];
					math += '{';
					while (i + 1 < diff.size() && std::isalpha(static_cast<unsigned char>(diff[i + 1])) &&
					       static_cast<unsigned char>(diff[i + 1]) < 128)
						math += diff[++i];
					math += '}';
				} else if (static_cast<unsigned char>(diff[i]) == 0xE2) {
					math += "\\partial";
					i += 2; // skip the utf-8 continuation bytes
				} else {
					math += diff[i];
				}
			}
			os << order(t) << " & " << k.size() << " & $" << kappa_str(k.counts) << "$ & $"
			   << kappa_str(k.derived()) << "$ & $" << tau_str(t) << "$ & $" << sigma_str(t)
			   << "$ & $" << math << "$ \\\\\n\\hline\n";
		}
		os << "\\end{tabular}\n";
		break;
	}
	}
	return os.str();
}

} // namespace exaro
