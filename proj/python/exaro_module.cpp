#include "exaro/duality.hpp"
#include "exaro/elementary.hpp"
#include "exaro/enumerate.hpp"
#include "exaro/equivariance.hpp"
#include "exaro/gradrewrite.hpp"
#include "exaro/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace exaro;

namespace {

py::dict flags_dict(const ClassificationFlags& f)
{
	py::dict d;
	d["is_aromatic"] = f.is_aromatic;
	d["is_connected"] = f.is_connected;
	d["is_exotic_tree"] = f.is_exotic_tree;
	d["is_butcher_tree"] = f.is_butcher_tree;
	d["has_liana"] = f.has_liana;
	d["has_stolon"] = f.has_stolon;
	d["has_loop"] = f.has_loop;
	return d;
}

std::vector<std::string> eval_at(const Tree& t, const std::string& field,
                                 const std::string& point)
{
	VectorField f = parse_field(field);
	auto x = parse_point(point);
	std::vector<std::string> out;
	for (const Rat& v : elementary_differential(t, f, x)) out.push_back(rat_str(v));
	return out;
}

} // namespace

PYBIND11_MODULE(_exaro, m)
{
	m.doc() = "exotic aromatic tree calculus";

	py::class_<Tree>(m, "Tree")
	    .def_static("from_json", &from_json, py::arg("text"))
	    .def_static(
	        "from_sigma",
	        [](int nv, const std::vector<int>& tau, const std::string& sigma, bool rooted) {
		        return rooted ? tree_from_sigma(nv, tau, sigma)
		                      : aroma_from_sigma(nv, tau, sigma);
	        },
	        py::arg("vertices"), py::arg("tau"), py::arg("sigma"), py::arg("rooted") = true)
	    .def_property_readonly("order", [](const Tree& t) { return order(t); })
	    .def_property_readonly("vertices", [](const Tree& t) { return t.nv; })
	    .def_property_readonly("rooted", [](const Tree& t) { return t.rooted; })
	    .def_property_readonly("kappa",
	                           [](const Tree& t) { return composition(t).counts; })
	    .def_property_readonly("symmetry",
	                           [](const Tree& t) { return symmetry_coefficient(t); })
	    .def("to_json", &to_json)
	    .def("to_dot", &to_dot)
	    .def("sigma", &sigma_str)
	    .def("classify", [](const Tree& t) { return flags_dict(classify(t)); })
	    .def("canonical", [](const Tree& t) { return canonical_encoding(t); })
	    .def("differential", [](const Tree& t) { return symbolic_str(t); })
	    .def("eval", &eval_at, py::arg("field"), py::arg("point"))
	    .def("normal_form", [](const Tree& t) { return exotic_normal_form(t); })
	    .def("equivalence_class", [](const Tree& t) { return equivalence_class(t); })
	    .def("__eq__", [](const Tree& a, const Tree& b) { return isomorphic(a, b); })
	    .def("__hash__",
	         [](const Tree& t) { return py::hash(py::str(canonical_encoding(t))); })
	    .def("__repr__", [](const Tree& t) { return "<Tree " + sigma_str(t) + ">"; });

	m.def("enumerate_by_order", &enumerate_by_order, py::arg("order"));
	m.def(
	    "enumerate_by_composition",
	    [](const std::vector<int>& counts) {
		    Composition k;
		    k.counts = counts;
		    return enumerate_by_composition(k);
	    },
	    py::arg("kappa"));
	m.def("enumerate_by_nodes", &enumerate_by_nodes, py::arg("nodes"), py::arg("max_order"));
	m.def(
	    "pairing",
	    [](const Tree& a, const Tree& b) { return rat_str(pairing(a, b)); },
	    py::arg("gamma"), py::arg("gamma_hat"));
	m.def(
	    "verify",
	    [](int order, uint64_t seed) {
		    auto mat = classification_matrix(order, seed, true);
		    py::list rows;
		    for (const auto& row : mat.rows) {
			    py::dict d;
			    d["sigma"] = sigma_str(row.tree);
			    d["differential"] = symbolic_str(row.tree);
			    py::dict verdicts;
			    for (const auto& [prop, rep] : row.reports)
				    verdicts[property_name(prop).c_str()] = rep.verdict_pass;
			    d["verdicts"] = verdicts;
			    d["agree"] = row.disagreements.empty();
			    rows.append(std::move(d));
		    }
		    py::dict out;
		    out["rows"] = rows;
		    out["all_agree"] = mat.all_agree;
		    return out;
	    },
	    py::arg("order"), py::arg("seed") = 1);
	m.def("render_table", [](const std::vector<Tree>& trees) {
		return render_trees(trees, OutputFormat::Table);
	});
}
