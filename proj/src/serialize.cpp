#include "gkm/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gkm {

namespace {

Json form_json(const LinearForm& l)
{
    Json a = Json::array();
    for (const auto& c : l.coeffs())
        a.push_back(to_string(c));
    return a;
}

LinearForm form_from_json(const Json& a, int m)
{
    if (!a.is_array() || static_cast<int>(a.size()) != m)
        throw Error("label must be an array of " + std::to_string(m) + " coefficients");
    LinearForm l(m);
    for (int i = 0; i < m; ++i)
        l[i] = a[static_cast<std::size_t>(i)].is_number_integer() ? Rational(a[static_cast<std::size_t>(i)].get<long>())
                                                                   : parse_rational(a[static_cast<std::size_t>(i)].get<std::string>());
    return l;
}

Json matrix_json(const RationalMatrix& a)
{
    Json rows = Json::array();
    for (int i = 0; i < a.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < a.cols(); ++j)
            r.push_back(to_string(a(i, j)));
        rows.push_back(r);
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j, int m)
{
    RationalMatrix a(m, m);
    if (!j.is_array() || static_cast<int>(j.size()) != m)
        throw Error("matrix must have " + std::to_string(m) + " rows");
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            a(i, k) = parse_rational(j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)).get<std::string>());
    return a;
}

}  // namespace

Json graph_to_json(const GkmGraph& g)
{
    Json j;
    j["varcount"] = g.varcount();
    j["vertices"] = g.names();
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json{{"src", e.src}, {"dst", e.dst}, {"alpha", form_json(e.label)}});
    j["edges"] = edges;
    Json conn = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.has_connection(e))
            continue;
        Json map = Json::array();
        const auto& out = g.out_edges(g.edge(e).src);
        for (std::size_t k = 0; k < out.size(); ++k)
            map.push_back(Json::array({out[k], g.connection(e)[k]}));
        conn.push_back(Json{{"edge", Json::array({g.edge(e).src, g.edge(e).dst})}, {"map", map}});
    }
    j["connection"] = conn;
    return j;
}

std::shared_ptr<GkmGraph> graph_from_json(const Json& j)
{
    try {
        int m = j.at("varcount").get<int>();
        auto g = std::make_shared<GkmGraph>(m);
        for (const auto& v : j.at("vertices"))
            g->add_vertex(v.get<std::string>());
        for (const auto& e : j.at("edges"))
            g->add_edge(e.at("src").get<int>(), e.at("dst").get<int>(), form_from_json(e.at("alpha"), m));
        if (j.contains("connection"))
            for (const auto& c : j.at("connection")) {
                int e = g->find_edge(c.at("edge").at(0).get<int>(), c.at("edge").at(1).get<int>());
                if (e < 0)
                    throw Error("connection given for a missing edge");
                std::vector<int> images(static_cast<std::size_t>(g->degree(g->edge(e).src)), -1);
                for (const auto& pr : c.at("map")) {
                    int from = pr.at(0).get<int>(), to = pr.at(1).get<int>();
                    if (from < 0 || from >= g->edge_count() || g->edge(from).src != g->edge(e).src)
                        throw Error("connection map entry does not start at the edge source");
                    images[static_cast<std::size_t>(g->position(from))] = to;
                }
                g->set_connection(e, std::move(images));
            }
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed graph JSON: ") + ex.what());
    }
}

std::string fnv1a_hex(const std::string& s)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string graph_hash(const GkmGraph& g)
{
    return fnv1a_hex(graph_to_json(g).dump());
}

Json class_to_json(const CohClass& c)
{
    Json j;
    j["graph_hash"] = graph_hash(c.graph());
    Json vals = Json::object();
    for (int p = 0; p < c.size(); ++p)
        vals[c.graph().name(p)] = c[p].str();
    j["values"] = vals;
    return j;
}

CohClass class_from_json(const Json& j, GraphPtr g)
{
    try {
        if (j.contains("graph_hash") && j.at("graph_hash").get<std::string>() != graph_hash(*g))
            throw Error("class was saved for a different graph");
        std::vector<Polynomial> vals(static_cast<std::size_t>(g->vertex_count()), Polynomial(g->varcount()));
        std::vector<char> seen(vals.size(), 0);
        for (const auto& [name, v] : j.at("values").items()) {
            int p = g->find_vertex(name);
            if (p < 0)
                throw Error("class value for unknown vertex " + name);
            vals[static_cast<std::size_t>(p)] = Polynomial::parse(v.get<std::string>(), g->varcount());
            seen[static_cast<std::size_t>(p)] = 1;
        }
        for (std::size_t p = 0; p < seen.size(); ++p)
            if (!seen[p])
                throw Error("class has no value at " + g->name(static_cast<int>(p)));
        return CohClass(std::move(g), std::move(vals));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed class JSON: ") + ex.what());
    }
}

std::string graph_to_dot(const GkmGraph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (int p = 0; p < g.vertex_count(); ++p)
        os << "  v" << p << " [label=\"" << g.name(p) << "\"];\n";
    for (const auto& e : g.edges())
        if (e.src < e.dst)
            os << "  v" << e.src << " -- v" << e.dst << " [label=\"" << e.label.canonical_orientation().str() << "\"];\n";
    os << "}\n";
    return os.str();
}

Json bundle_to_json(const BundleMap& b)
{
    Json j;
    if (b.rs) {
        j["type"] = std::string(1, kind_char(b.rs->kind()));
        j["rank"] = b.rs->rank();
        j["sigma1"] = b.sigma1;
        j["sigma2"] = b.sigma2;
    }
    Json total = graph_to_json(*b.total);
    for (std::size_t e = 0; e < total["edges"].size(); ++e)
        total["edges"][e]["class"] = b.vertical[e] ? "vertical" : "horizontal";
    j["total"] = total;
    j["base"] = graph_to_json(*b.base);
    Json proj = Json::object();
    for (int t = 0; t < b.total->vertex_count(); ++t)
        proj[b.total->name(t)] = b.base->name(b.projection[static_cast<std::size_t>(t)]);
    j["projection"] = proj;
    Json tr = Json::array();
    for (const auto& t : b.transitions)
        tr.push_back(Json{{"base_edge", t.base_edge}, {"phi", t.phi}, {"psi", matrix_json(t.psi)}});
    j["transitions"] = tr;
    return j;
}

BundleMap bundle_from_json(const Json& j)
{
    try {
        auto total = graph_from_json(j.at("total"));
        auto base = graph_from_json(j.at("base"));
        std::vector<int> proj(static_cast<std::size_t>(total->vertex_count()), -1);
        for (const auto& [name, v] : j.at("projection").items()) {
            int t = total->find_vertex(name), p = base->find_vertex(v.get<std::string>());
            if (t < 0 || p < 0)
                throw Error("projection refers to unknown vertex " + name);
            proj[static_cast<std::size_t>(t)] = p;
        }
        BundleMap b = make_bundle(total, base, std::move(proj));
        if (j.contains("transitions")) {
            const auto& tr = j.at("transitions");
            if (tr.size() != b.transitions.size())
                throw Error("transition count does not match the base edges");
            for (std::size_t k = 0; k < tr.size(); ++k) {
                b.transitions[k].phi = tr[k].at("phi").get<std::vector<int>>();
                b.transitions[k].psi = matrix_from_json(tr[k].at("psi"), total->varcount());
            }
        }
        if (j.contains("type")) {
            auto rs = std::make_shared<const RootSystem>(RootSystem::build(parse_kind(j.at("type").get<std::string>()), j.at("rank").get<int>()));
            BundleMap flag = build_bundle(rs, j.at("sigma1").get<std::vector<int>>(), j.at("sigma2").get<std::vector<int>>());
            if (!(*flag.total == *b.total) || !(*flag.base == *b.base) || flag.projection != b.projection)
                throw Error("bundle data does not match its declared flag parameters");
            flag.transitions = b.transitions;
            return flag;
        }
        return b;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed bundle JSON: ") + ex.what());
    }
}

std::string bundle_hash(const BundleMap& b)
{
    return fnv1a_hex(bundle_to_json(b).dump());
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << text;
    if (!out)
        throw Error("write failed: " + path);
}

}  // namespace gkm
