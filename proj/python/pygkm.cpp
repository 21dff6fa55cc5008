#include "gkm/cli.hpp"
#include "gkm/invbases.hpp"
#include "gkm/serialize.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gkm;

namespace {

std::shared_ptr<const RootSystem> root_system(const std::string& kind, int rank)
{
    return std::make_shared<const RootSystem>(RootSystem::build(parse_kind(kind), rank));
}

std::vector<std::tuple<std::string, bool, std::string>> report_list(const Report& r)
{
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : r.checks())
        out.emplace_back(c.name, c.pass, c.witness);
    return out;
}

std::vector<int> sigma2_default(const RootSystem& rs, std::optional<std::vector<int>> s2)
{
    if (s2)
        return *s2;
    std::vector<int> s;
    for (int i = 2; i <= rs.rank(); ++i)
        s.push_back(i);
    return s;
}

}  // namespace

PYBIND11_MODULE(pygkm, m)
{
    m.doc() = "GKM graphs, fiber bundles and equivariant Schubert classes over exact rationals";

    py::register_exception<Error>(m, "GkmError");

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& s, int varcount) { return Polynomial::parse(s, varcount); }),
             py::arg("text"), py::arg("varcount"))
        .def_property_readonly("varcount", &Polynomial::varcount)
        .def("degree", &Polynomial::degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("eval",
             [](const Polynomial& p, const std::vector<long>& pt) {
                 std::vector<Rational> q;
                 for (long x : pt)
                     q.emplace_back(x);
                 return to_string(p.eval(q));
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; });

    py::class_<GkmGraph, std::shared_ptr<GkmGraph>>(m, "Graph")
        .def_property_readonly("vertex_count", &GkmGraph::vertex_count)
        .def_property_readonly("edge_count", &GkmGraph::edge_count)
        .def_property_readonly("names", &GkmGraph::names)
        .def("label", [](const GkmGraph& g, int e) { return g.edge(e).label.str(); })
        .def("edges",
             [](const GkmGraph& g) {
                 std::vector<std::tuple<int, int, std::string>> out;
                 for (const auto& e : g.edges())
                     out.emplace_back(e.src, e.dst, e.label.str());
                 return out;
             })
        .def("verify", [](const GkmGraph& g) { return report_list(verify_gkm(g)); })
        .def("to_json", [](const GkmGraph& g) { return graph_to_json(g).dump(); })
        .def("to_dot", [](const GkmGraph& g) { return graph_to_dot(g); })
        .def("hash", [](const GkmGraph& g) { return graph_hash(g); })
        .def_static("from_json", [](const std::string& s) { return graph_from_json(Json::parse(s)); });

    m.def(
        "coset_graph",
        [](const std::string& kind, int rank, std::vector<int> sigma1, std::optional<std::vector<int>> sigma2) {
            auto rs = root_system(kind, rank);
            return build_coset_graph(rs, std::move(sigma1), sigma2 ? *sigma2 : all_simple(*rs)).graph;
        },
        py::arg("kind"), py::arg("rank"), py::arg("sigma1") = std::vector<int>{}, py::arg("sigma2") = py::none());

    m.def(
        "verify_bundle",
        [](const std::string& kind, int rank, std::vector<int> sigma1, std::optional<std::vector<int>> sigma2) {
            auto rs = root_system(kind, rank);
            return report_list(verify_bundle(build_bundle(rs, std::move(sigma1), sigma2_default(*rs, sigma2))));
        },
        py::arg("kind"), py::arg("rank"), py::arg("sigma1") = std::vector<int>{}, py::arg("sigma2") = py::none());

    m.def(
        "holonomy_order",
        [](const std::string& kind, int rank, std::vector<int> sigma1, std::optional<std::vector<int>> sigma2) {
            auto rs = root_system(kind, rank);
            return holonomy(build_bundle(rs, std::move(sigma1), sigma2_default(*rs, sigma2))).order();
        },
        py::arg("kind"), py::arg("rank"), py::arg("sigma1") = std::vector<int>{}, py::arg("sigma2") = py::none());

    m.def(
        "index_set", [](const std::string& kind, int n) { return index_set(parse_kind(kind), n); }, py::arg("kind"),
        py::arg("n"));

    m.def(
        "basis_table",
        [](const std::string& kind, int rank) {
            WeylGroup g(root_system(kind, rank));
            BasisFamily fam = basis_family(g, flag_graph(g));
            std::vector<std::string> names;
            for (const auto& I : fam.indices) {
                std::string s = "c[";
                for (std::size_t k = 0; k < I.size(); ++k)
                    s += (k ? "," : "") + std::to_string(I[k]);
                names.push_back(s + "]");
            }
            return class_table_tsv(g, names, fam.classes);
        },
        py::arg("kind"), py::arg("rank"));

    m.def(
        "schubert_values",
        [](const std::string& kind, int rank) {
            auto g = std::make_shared<const WeylGroup>(root_system(kind, rank));
            SchubertTable t(g);
            std::map<std::string, std::map<std::string, std::string>> out;
            for (int u = 0; u < g->size(); ++u)
                for (int w = 0; w < g->size(); ++w)
                    out[g->element(u).str()][g->element(w).str()] = t.value(u, w).str();
            return out;
        },
        py::arg("kind"), py::arg("rank"));

    m.def(
        "verify_basis",
        [](const std::string& kind, int rank, std::uint64_t seed) {
            auto g = std::make_shared<const WeylGroup>(root_system(kind, rank));
            SchubertTable t(g);
            BasisVerdict v = verify_basis(t, basis_family(*g, t.graph()), seed);
            return py::dict(py::arg("independent") = v.independent, py::arg("spanning") = v.spanning,
                            py::arg("witness") = v.witness);
        },
        py::arg("kind"), py::arg("rank"), py::arg("seed") = 1);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
