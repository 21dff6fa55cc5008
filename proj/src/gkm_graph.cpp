#include "gkm/gkm_graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <sstream>

namespace gkm {

/******** Report ********/

void Report::add(std::string name, bool pass, std::string witness)
{
    checks_.push_back({std::move(name), pass, std::move(witness)});
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.checks_)
        checks_.push_back({prefix + c.name, c.pass, c.witness});
}

bool Report::ok() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::first_failure() const
{
    for (const auto& c : checks_)
        if (!c.pass)
            return &c;
    return nullptr;
}

const Check* Report::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string Report::str() const
{
    std::string s;
    for (const auto& c : checks_) {
        s += "CHECK " + c.name + ": " + (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.witness.empty())
            s += " " + c.witness;
        s += '\n';
    }
    return s;
}

/******** GkmGraph ********/

int GkmGraph::add_vertex(std::string name)
{
    if (by_name_.count(name))
        throw Error("duplicate vertex name: " + name);
    int id = vertex_count();
    by_name_.emplace(name, id);
    names_.push_back(std::move(name));
    out_.emplace_back();
    return id;
}

int GkmGraph::add_edge(int src, int dst, LinearForm label)
{
    if (src < 0 || dst < 0 || src >= vertex_count() || dst >= vertex_count() || src == dst)
        throw Error("bad edge endpoints");
    if (label.varcount() != m_)
        throw Error("edge label varcount mismatch");
    if (label.is_zero())
        throw Error("zero edge label on " + name(src) + "->" + name(dst));
    if (by_ends_.count({src, dst}))
        throw Error("multi-edge " + name(src) + "->" + name(dst));
    int id = edge_count();
    edges_.push_back({src, dst, std::move(label)});
    pos_.push_back(static_cast<int>(out_[static_cast<std::size_t>(src)].size()));
    out_[static_cast<std::size_t>(src)].push_back(id);
    by_ends_.emplace(std::make_pair(src, dst), id);
    conn_.emplace_back();
    return id;
}

int GkmGraph::add_edge_pair(int p, int q, const LinearForm& label)
{
    int e = add_edge(p, q, label);
    add_edge(q, p, -label);
    return e;
}

void GkmGraph::set_connection(int e, std::vector<int> images)
{
    conn_.at(static_cast<std::size_t>(e)) = std::move(images);
}

void GkmGraph::set_connection_entry(int e, int pos, int target)
{
    conn_.at(static_cast<std::size_t>(e)).at(static_cast<std::size_t>(pos)) = target;
}

void GkmGraph::set_label(int e, LinearForm label)
{
    if (label.varcount() != m_)
        throw Error("edge label varcount mismatch");
    edges_.at(static_cast<std::size_t>(e)).label = std::move(label);
}

int GkmGraph::find_edge(int p, int q) const
{
    auto it = by_ends_.find({p, q});
    return it == by_ends_.end() ? -1 : it->second;
}

int GkmGraph::reverse(int e) const
{
    return find_edge(edge(e).dst, edge(e).src);
}

int GkmGraph::connect(int e, int e2) const
{
    const auto& c = connection(e);
    if (edge(e2).src != edge(e).src || c.empty())
        return -1;
    return c[static_cast<std::size_t>(position(e2))];
}

int GkmGraph::find_vertex(const std::string& n) const
{
    auto it = by_name_.find(n);
    return it == by_name_.end() ? -1 : it->second;
}

std::string GkmGraph::edge_str(int e) const
{
    return name(edge(e).src) + "->" + name(edge(e).dst);
}

GkmGraph GkmGraph::with_varcount(int m) const
{
    GkmGraph g(m);
    for (const auto& n : names_)
        g.add_vertex(n);
    for (const auto& e : edges_) {
        LinearForm l(m);
        for (int i = 0; i < e.label.varcount(); ++i) {
            if (i < m)
                l[i] = e.label[i];
            else if (e.label[i] != 0)
                throw Error("cannot drop a coordinate used by a label");
        }
        g.add_edge(e.src, e.dst, l);
    }
    g.conn_ = conn_;
    return g;
}

bool GkmGraph::is_connected(const std::vector<int>& vertices) const
{
    if (vertices.empty())
        return true;
    std::set<int> inside(vertices.begin(), vertices.end());
    std::set<int> seen{vertices.front()};
    std::deque<int> queue{vertices.front()};
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int e : out_edges(p)) {
            int q = edge(e).dst;
            if (inside.count(q) && seen.insert(q).second)
                queue.push_back(q);
        }
    }
    return seen.size() == inside.size();
}

bool GkmGraph::operator==(const GkmGraph& o) const
{
    if (m_ != o.m_ || names_ != o.names_ || edges_.size() != o.edges_.size() || conn_ != o.conn_)
        return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].src != o.edges_[i].src || edges_[i].dst != o.edges_[i].dst || edges_[i].label != o.edges_[i].label)
            return false;
    return true;
}

/******** verification ********/

Report verify_gkm(const GkmGraph& g, const GkmOptions& opt)
{
    Report rep;
    std::string w;

    // (1) reversal antisymmetry
    for (int e = 0; e < g.edge_count() && w.empty(); ++e) {
        int r = g.reverse(e);
        if (r < 0)
            w = "edge " + g.edge_str(e) + " has no reverse";
        else if (g.edge(r).label != -g.edge(e).label)
            w = "edge " + g.edge_str(e) + ": alpha(q,p) != -alpha(p,q)";
    }
    rep.add("antisymmetry", w.empty(), w);

    w.clear();
    for (int p = 1; p < g.vertex_count() && w.empty(); ++p)
        if (g.degree(p) != g.degree(0))
            w = "vertex " + g.name(p) + " has degree " + std::to_string(g.degree(p)) + " != " + std::to_string(g.degree(0));
    rep.add("regular", w.empty(), w);

    // connection is a bijection E_p -> E_q with e -> reverse(e), and inverse along the reverse edge
    w.clear();
    for (int e = 0; e < g.edge_count() && w.empty(); ++e) {
        const Edge& ed = g.edge(e);
        const auto& c = g.connection(e);
        if (static_cast<int>(c.size()) != g.degree(ed.src)) {
            w = "edge " + g.edge_str(e) + ": connection has wrong size";
            break;
        }
        std::set<int> seen;
        for (int t : c) {
            if (t < 0 || t >= g.edge_count() || g.edge(t).src != ed.dst || !seen.insert(t).second) {
                w = "edge " + g.edge_str(e) + ": connection is not a bijection onto E_q";
                break;
            }
        }
        if (!w.empty())
            break;
        if (g.connect(e, e) != g.reverse(e)) {
            w = "edge " + g.edge_str(e) + ": connection does not send e to its reverse";
            break;
        }
        int r = g.reverse(e);
        for (int e2 : g.out_edges(ed.src))
            if (r >= 0 && g.connect(r, g.connect(e, e2)) != e2) {
                w = "edge " + g.edge_str(e) + ": connection along reverse is not the inverse at " + g.edge_str(e2);
                break;
            }
    }
    rep.add("connection", w.empty(), w);
    bool conn_ok = w.empty();

    // (2) independence at each vertex
    w.clear();
    for (int p = 0; p < g.vertex_count() && w.empty(); ++p) {
        const auto& out = g.out_edges(p);
        if (opt.full_independence) {
            std::vector<std::vector<Rational>> rows;
            for (int e : out)
                rows.push_back(g.edge(e).label.coeffs());
            if (rational_rank(rows) != static_cast<int>(rows.size()))
                w = "vertex " + g.name(p) + ": labels are linearly dependent";
        } else {
            for (std::size_t a = 0; a < out.size() && w.empty(); ++a)
                for (std::size_t b = a + 1; b < out.size(); ++b)
                    if (g.edge(out[a]).label.proportional(g.edge(out[b]).label)) {
                        w = "vertex " + g.name(p) + ": labels of " + g.edge_str(out[a]) + " and " + g.edge_str(out[b]) + " are proportional";
                        break;
                    }
        }
    }
    rep.add(opt.full_independence ? "independence_full" : "independence_pairwise", w.empty(), w);

    // (3) congruence along the connection
    w.clear();
    if (!conn_ok) {
        w = "connection invalid";
    } else {
        for (int e = 0; e < g.edge_count() && w.empty(); ++e)
            for (int e2 : g.out_edges(g.edge(e).src)) {
                LinearForm diff = g.edge(g.connect(e, e2)).label - g.edge(e2).label;
                if (!diff.proportional(g.edge(e).label)) {
                    w = "along " + g.edge_str(e) + ": alpha(" + g.edge_str(g.connect(e, e2)) + ") - alpha(" + g.edge_str(e2) + ") = " + diff.str() + " not a multiple of " + g.edge(e).label.str();
                    break;
                }
            }
    }
    rep.add("congruence", w.empty(), w);
    return rep;
}

/******** classes ********/

static std::atomic<bool> g_verify_classes{true};

void set_class_verification(bool on) { g_verify_classes = on; }
bool class_verification() { return g_verify_classes; }

bool same_graph(const GkmGraph& a, const GkmGraph& b)
{
    return &a == &b || a == b;
}

CohClass::CohClass(GraphPtr g, std::vector<Polynomial> values) : g_(std::move(g)), v_(std::move(values))
{
    if (!g_)
        throw Error("class without graph");
    if (static_cast<int>(v_.size()) != g_->vertex_count())
        throw Error("class is not total on vertices");
    for (const auto& p : v_)
        if (p.varcount() != g_->varcount())
            throw Error("class value varcount mismatch");
}

CohClass CohClass::constant(GraphPtr g, const Rational& c)
{
    int n = g->vertex_count(), m = g->varcount();
    return CohClass(std::move(g), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(m, c)));
}

bool CohClass::operator==(const CohClass& o) const
{
    return g_ && o.g_ && same_graph(*g_, *o.g_) && v_ == o.v_;
}

ClassCheck is_coh_class(const CohClass& c)
{
    const GkmGraph& g = c.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.src > ed.dst)
            continue;
        Polynomial d = c[ed.dst] - c[ed.src];
        if (!divisible_by(d, ed.label))
            return {false, e, "edge " + g.edge_str(e) + ": " + d.str() + " not divisible by " + ed.label.str()};
    }
    return {};
}

static void check_same_graph(const CohClass& c, const CohClass& d)
{
    if (!c.graph_ptr() || !d.graph_ptr() || !same_graph(c.graph(), d.graph()))
        throw Error("classes live on different graphs");
}

static CohClass checked(CohClass r, const char* op)
{
    if (g_verify_classes && r.graph().vertex_count() <= 50) {
        auto chk = is_coh_class(r);
        if (!chk)
            throw Error(std::string(op) + " produced a non-class: " + chk.witness);
    }
    return r;
}

CohClass class_add(const CohClass& c, const CohClass& d)
{
    check_same_graph(c, d);
    std::vector<Polynomial> v(c.values());
    for (int p = 0; p < c.size(); ++p)
        v[static_cast<std::size_t>(p)] += d[p];
    return checked(CohClass(c.graph_ptr(), std::move(v)), "class_add");
}

CohClass class_sub(const CohClass& c, const CohClass& d)
{
    check_same_graph(c, d);
    std::vector<Polynomial> v(c.values());
    for (int p = 0; p < c.size(); ++p)
        v[static_cast<std::size_t>(p)] -= d[p];
    return checked(CohClass(c.graph_ptr(), std::move(v)), "class_sub");
}

CohClass class_mul(const CohClass& c, const CohClass& d)
{
    check_same_graph(c, d);
    std::vector<Polynomial> v;
    v.reserve(static_cast<std::size_t>(c.size()));
    for (int p = 0; p < c.size(); ++p)
        v.push_back(c[p] * d[p]);
    return checked(CohClass(c.graph_ptr(), std::move(v)), "class_mul");
}

CohClass class_scale(const CohClass& c, const Polynomial& f)
{
    std::vector<Polynomial> v;
    v.reserve(static_cast<std::size_t>(c.size()));
    for (int p = 0; p < c.size(); ++p)
        v.push_back(f * c[p]);
    return checked(CohClass(c.graph_ptr(), std::move(v)), "class_scale");
}

std::string ClassDegree::str() const
{
    switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Homogeneous: return std::to_string(degree);
    case Kind::Inhomogeneous: return "inhomogeneous";
    }
    return "";
}

ClassDegree degree_of(const CohClass& c)
{
    ClassDegree d;
    for (const auto& v : c.values()) {
        if (v.is_zero())
            continue;
        auto k = v.homogeneous_degree();
        if (!k || (d.kind == ClassDegree::Kind::Homogeneous && d.degree != 2 * *k))
            return {ClassDegree::Kind::Inhomogeneous, 0};
        d = {ClassDegree::Kind::Homogeneous, 2 * *k};
    }
    return d;
}

/******** subgraphs ********/

Verdict check_subgraph(const GkmGraph& g, const std::vector<int>& vertices)
{
    if (!g.is_connected(vertices))
        throw Error("check_subgraph: vertex set does not induce a connected subgraph");
    std::set<int> inside(vertices.begin(), vertices.end());
    auto in_e0 = [&](int e) { return inside.count(g.edge(e).src) && inside.count(g.edge(e).dst); };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_e0(e))
            continue;
        int p = g.edge(e).src, q = g.edge(e).dst;
        std::set<int> image, target;
        for (int e2 : g.out_edges(p))
            if (in_e0(e2))
                image.insert(g.connect(e, e2));
        for (int e2 : g.out_edges(q))
            if (in_e0(e2))
                target.insert(e2);
        if (image != target)
            return {false, "connection along " + g.edge_str(e) + " does not preserve induced edges"};
    }
    return {};
}

Subgraph induced_subgraph(const GkmGraph& g, const std::vector<int>& vertices)
{
    Subgraph s;
    s.graph = std::make_shared<GkmGraph>(g.varcount());
    s.to_parent = vertices;
    s.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        s.from_parent[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        s.graph->add_vertex(g.name(vertices[i]));
    }
    std::vector<int> edge_map(static_cast<std::size_t>(g.edge_count()), -1);
    for (int p : vertices)
        for (int e : g.out_edges(p)) {
            int q = g.edge(e).dst;
            if (s.from_parent[static_cast<std::size_t>(q)] < 0)
                continue;
            edge_map[static_cast<std::size_t>(e)] =
                s.graph->add_edge(s.from_parent[static_cast<std::size_t>(p)], s.from_parent[static_cast<std::size_t>(q)], g.edge(e).label);
        }
    for (int e = 0; e < g.edge_count(); ++e) {
        int se = edge_map[static_cast<std::size_t>(e)];
        if (se < 0 || !g.has_connection(e))
            continue;
        std::vector<int> images;
        for (int e2 : g.out_edges(g.edge(e).src)) {
            if (edge_map[static_cast<std::size_t>(e2)] < 0)
                continue;
            int t = g.connect(e, e2);
            images.push_back(t >= 0 ? edge_map[static_cast<std::size_t>(t)] : -1);
        }
        s.graph->set_connection(se, std::move(images));
    }
    return s;
}

/******** isomorphisms ********/

GkmIso compose(const GkmIso& second, const GkmIso& first)
{
    GkmIso r;
    r.phi.resize(first.phi.size());
    for (std::size_t p = 0; p < first.phi.size(); ++p)
        r.phi[p] = second.phi.at(static_cast<std::size_t>(first.phi[p]));
    r.psi = second.psi * first.psi;
    return r;
}

GkmIso inverse(const GkmIso& iso)
{
    GkmIso r;
    r.phi.assign(iso.phi.size(), -1);
    for (std::size_t p = 0; p < iso.phi.size(); ++p)
        r.phi.at(static_cast<std::size_t>(iso.phi[p])) = static_cast<int>(p);
    auto inv = iso.psi.inverse();
    if (!inv)
        throw Error("iso with singular linear map");
    r.psi = *inv;
    return r;
}

Verdict verify_iso(const GkmIso& iso, const GkmGraph& g1, const GkmGraph& g2)
{
    int n = g1.vertex_count();
    if (static_cast<int>(iso.phi.size()) != n || g2.vertex_count() != n)
        return {false, "vertex counts differ"};
    if (g1.edge_count() != g2.edge_count())
        return {false, "edge counts differ"};
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
        int q = iso.phi[static_cast<std::size_t>(p)];
        if (q < 0 || q >= n || hit[static_cast<std::size_t>(q)])
            return {false, "vertex map is not a bijection at " + g1.name(p)};
        hit[static_cast<std::size_t>(q)] = 1;
    }
    int m = g1.varcount();
    if (g2.varcount() != m || iso.psi.rows() != m || iso.psi.cols() != m)
        return {false, "linear map has wrong shape"};
    if (iso.psi.det() == 0)
        return {false, "linear map is singular"};
    for (int e = 0; e < g1.edge_count(); ++e) {
        const Edge& ed = g1.edge(e);
        int f = g2.find_edge(iso.phi[static_cast<std::size_t>(ed.src)], iso.phi[static_cast<std::size_t>(ed.dst)]);
        if (f < 0)
            return {false, "edge " + g1.edge_str(e) + " has no image edge"};
        LinearForm img = iso.psi.apply(ed.label);
        if (img != g2.edge(f).label)
            return {false, "edge " + g1.edge_str(e) + ": Psi(" + ed.label.str() + ") = " + img.str() + " but image label is " + g2.edge(f).label.str()};
    }
    return {};
}

CohClass pullback_class(const GkmIso& iso, GraphPtr g1, const CohClass& c2)
{
    auto v = verify_iso(iso, *g1, c2.graph());
    if (!v)
        throw Error("pullback along invalid iso: " + v.witness);
    auto inv = iso.psi.inverse();
    std::vector<Polynomial> vals;
    vals.reserve(static_cast<std::size_t>(g1->vertex_count()));
    for (int p = 0; p < g1->vertex_count(); ++p)
        vals.push_back(inv->apply(c2[iso.phi[static_cast<std::size_t>(p)]]));
    return CohClass(std::move(g1), std::move(vals));
}

}  // namespace gkm
