#include "gkm/parabolic.hpp"

#include "gkm/rng.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gkm {

namespace {

std::string coset_name(const WeylElement& w, bool bracket)
{
    return bracket ? "[" + w.str() + "]" : w.str();
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::all_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

void check_sigma(const RootSystem& rs, const std::vector<int>& s)
{
    for (int i : s)
        if (i < 1 || i > rs.rank())
            throw Error("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rs.rank()));
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<int> all_simple(const RootSystem& rs)
{
    std::vector<int> s;
    for (int i = 1; i <= rs.rank(); ++i)
        s.push_back(i);
    return s;
}

std::vector<int> complement_of(const RootSystem& rs, const std::vector<int>& sigma)
{
    std::vector<int> s;
    for (int i = 1; i <= rs.rank(); ++i)
        if (std::find(sigma.begin(), sigma.end(), i) == sigma.end())
            s.push_back(i);
    return s;
}

std::vector<WeylElement> minimal_representatives(const RootSystem& rs, const std::vector<int>& sigma,
                                                 unsigned long long cap)
{
    check_sigma(rs, sigma);
    std::vector<WeylElement> reps;
    std::set<WeylElement> seen;
    for (const auto& w : rs.all_elements(cap)) {
        WeylElement r = rs.min_coset_rep(w, sigma);
        if (seen.insert(r).second)
            reps.push_back(r);
    }
    std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) { return rs.canonical_less(a, b); });
    // uniqueness of the minimal element in each coset
    for (const auto& r : reps)
        for (int i : sigma)
            if (rs.right_descent(r, i))
                throw Error("representative " + r.str() + " is not minimal");
    return reps;
}

int CosetGraph::vertex_of(const WeylElement& w) const
{
    auto it = by_min_rep.find(rs->min_coset_rep(w, sigma1));
    if (it == by_min_rep.end())
        throw Error("element " + w.str() + " is not in the parabolic subgroup");
    return it->second;
}

CosetGraph build_coset_graph(std::shared_ptr<const RootSystem> rs, std::vector<int> sigma1, std::vector<int> sigma2,
                             const CosetOptions& opt)
{
    sigma1 = sorted_unique(std::move(sigma1));
    sigma2 = sorted_unique(std::move(sigma2));
    check_sigma(*rs, sigma1);
    check_sigma(*rs, sigma2);
    if (!subset_of(sigma1, sigma2))
        throw Error("sigma1 is not contained in sigma2");

    CosetGraph cg;
    cg.rs = rs;
    cg.sigma1 = sigma1;
    cg.sigma2 = sigma2;

    std::set<WeylElement> seen;
    for (const auto& w : rs->parabolic_elements(sigma2, opt.cap)) {
        WeylElement r = rs->min_coset_rep(w, sigma1);
        if (seen.insert(r).second)
            cg.min_reps.push_back(r);
    }
    std::sort(cg.min_reps.begin(), cg.min_reps.end(), [&](const auto& a, const auto& b) { return rs->canonical_less(a, b); });
    for (std::size_t i = 0; i < cg.min_reps.size(); ++i)
        cg.by_min_rep.emplace(cg.min_reps[i], static_cast<int>(i));

    cg.reps = cg.min_reps;
    if (opt.representative_seed) {
        auto w1 = rs->parabolic_elements(sigma1, opt.cap);
        Rng rng(*opt.representative_seed);
        for (auto& r : cg.reps)
            r = r * w1[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(w1.size()) - 1))];
    }

    auto in2 = rs->closure(sigma2).roots;
    auto in1 = rs->closure(sigma1).roots;
    for (int b : in2)
        if (std::find(in1.begin(), in1.end(), b) == in1.end())
            cg.roots.push_back(b);

    const auto& pos = rs->positive_roots();
    cg.graph = std::make_shared<GkmGraph>(rs->varcount());
    for (const auto& r : cg.min_reps)
        cg.graph->add_vertex(coset_name(r, !sigma1.empty()));

    int nv = static_cast<int>(cg.min_reps.size());
    for (int v = 0; v < nv; ++v) {
        const WeylElement& w = cg.reps[static_cast<std::size_t>(v)];
        std::vector<std::pair<int, int>> out;
        for (int b : cg.roots)
            out.emplace_back(cg.vertex_of(w * rs->reflection(pos[static_cast<std::size_t>(b)])), b);
        std::sort(out.begin(), out.end());
        for (auto [t, b] : out) {
            cg.graph->add_edge(v, t, w.act(pos[static_cast<std::size_t>(b)]));
            cg.edge_root.push_back(b);
        }
    }
    // connection along (w, ws_b) sends (w, ws_b') to (ws_b, ws_b s_b')
    for (int e = 0; e < cg.graph->edge_count(); ++e) {
        const Edge& ed = cg.graph->edge(e);
        const WeylElement& w = cg.reps[static_cast<std::size_t>(ed.src)];
        WeylElement wsb = w * rs->reflection(pos[static_cast<std::size_t>(cg.edge_root[static_cast<std::size_t>(e)])]);
        std::vector<int> images;
        for (int e2 : cg.graph->out_edges(ed.src)) {
            const LinearForm& b2 = pos[static_cast<std::size_t>(cg.edge_root[static_cast<std::size_t>(e2)])];
            int t = cg.vertex_of(wsb * rs->reflection(b2));
            images.push_back(cg.graph->find_edge(ed.dst, t));
        }
        cg.graph->set_connection(e, std::move(images));
    }
    return cg;
}

/******** bundles ********/

const Transition& BundleMap::transition(int p, int q) const
{
    int e = base->find_edge(p, q);
    if (e < 0)
        throw Error("not a base edge: " + base->name(p) + "->" + base->name(q));
    return transitions[static_cast<std::size_t>(e)];
}

int BundleMap::lift_edge(int be, int start) const
{
    int q = base->edge(be).dst;
    for (int e : total->out_edges(start))
        if (projection[static_cast<std::size_t>(total->edge(e).dst)] == q)
            return e;
    return -1;
}

Subgraph BundleMap::fiber(int p) const
{
    return induced_subgraph(*total, fibers[static_cast<std::size_t>(p)]);
}

void BundleMap::refresh()
{
    int nb = base->vertex_count();
    fibers.assign(static_cast<std::size_t>(nb), {});
    fiber_pos.assign(static_cast<std::size_t>(total->vertex_count()), -1);
    for (int t = 0; t < total->vertex_count(); ++t) {
        int p = projection.at(static_cast<std::size_t>(t));
        if (p < 0 || p >= nb)
            throw Error("projection of " + total->name(t) + " is not a base vertex");
        auto& f = fibers[static_cast<std::size_t>(p)];
        fiber_pos[static_cast<std::size_t>(t)] = static_cast<int>(f.size());
        f.push_back(t);
    }
    vertical.assign(static_cast<std::size_t>(total->edge_count()), 0);
    for (int e = 0; e < total->edge_count(); ++e)
        vertical[static_cast<std::size_t>(e)] =
            projection[static_cast<std::size_t>(total->edge(e).src)] == projection[static_cast<std::size_t>(total->edge(e).dst)];

    std::vector<Transition> old = std::move(transitions);
    transitions.assign(static_cast<std::size_t>(base->edge_count()), {});
    for (int be = 0; be < base->edge_count(); ++be) {
        Transition& tr = transitions[static_cast<std::size_t>(be)];
        tr.base_edge = be;
        const auto& src = fibers[static_cast<std::size_t>(base->edge(be).src)];
        for (int t : src) {
            int e = lift_edge(be, t);
            tr.phi.push_back(e < 0 ? -1 : fiber_pos[static_cast<std::size_t>(total->edge(e).dst)]);
        }
        if (static_cast<std::size_t>(be) < old.size() && old[static_cast<std::size_t>(be)].psi.rows() == total->varcount())
            tr.psi = old[static_cast<std::size_t>(be)].psi;
        else
            tr.psi = RationalMatrix::identity(total->varcount());
    }
}

BundleMap build_bundle(std::shared_ptr<const RootSystem> rs, std::vector<int> sigma1, std::vector<int> sigma2,
                       const CosetOptions& opt)
{
    BundleMap b;
    b.rs = rs;
    b.sigma1 = sorted_unique(std::move(sigma1));
    b.sigma2 = sorted_unique(std::move(sigma2));
    auto all = all_simple(*rs);
    b.total_coset = build_coset_graph(rs, b.sigma1, all, opt);
    b.base_coset = build_coset_graph(rs, b.sigma2, all, opt);
    b.fiber_coset = build_coset_graph(rs, b.sigma1, b.sigma2, opt);
    b.total = b.total_coset->graph;
    b.base = b.base_coset->graph;
    for (const auto& w : b.total_coset->min_reps)
        b.projection.push_back(b.base_coset->vertex_of(w));
    b.refresh();
    for (int be = 0; be < b.base->edge_count(); ++be)
        b.transitions[static_cast<std::size_t>(be)].psi = rs->reflection(b.base->edge(be).label).matrix();
    return b;
}

namespace {

// Linear map sending each from[i] to to[i] and fixing a coordinate complement
// of span(from); the from-vectors are taken greedily.
RationalMatrix solve_psi(int m, const std::vector<LinearForm>& from, const std::vector<LinearForm>& to)
{
    std::vector<LinearForm> src, dst;
    std::vector<std::vector<Rational>> rows;
    auto try_add = [&](const LinearForm& a, const LinearForm& b) {
        rows.push_back(a.coeffs());
        if (rational_rank(rows) == static_cast<int>(rows.size())) {
            src.push_back(a);
            dst.push_back(b);
        } else {
            rows.pop_back();
        }
    };
    for (std::size_t i = 0; i < from.size(); ++i)
        try_add(from[i], to[i]);
    for (int j = 0; j < m && static_cast<int>(src.size()) < m; ++j)
        try_add(LinearForm::basis(m, j), LinearForm::basis(m, j));
    auto s = RationalMatrix::from_columns(src);
    auto inv = s.inverse();
    if (!inv)
        throw Error("internal: complement basis is singular");
    return RationalMatrix::from_columns(dst) * *inv;
}

}  // namespace

BundleMap make_bundle(std::shared_ptr<GkmGraph> total, std::shared_ptr<GkmGraph> base, std::vector<int> projection)
{
    if (total->varcount() != base->varcount())
        throw Error("total and base have different coordinate counts");
    if (static_cast<int>(projection.size()) != total->vertex_count())
        throw Error("projection must be defined on every total vertex");
    BundleMap b;
    b.total = std::move(total);
    b.base = std::move(base);
    b.projection = std::move(projection);
    b.refresh();
    int m = b.total->varcount();
    for (int be = 0; be < b.base->edge_count(); ++be) {
        Transition& tr = b.transitions[static_cast<std::size_t>(be)];
        const auto& src = b.fibers[static_cast<std::size_t>(b.base->edge(be).src)];
        const auto& dst = b.fibers[static_cast<std::size_t>(b.base->edge(be).dst)];
        std::vector<LinearForm> from, to;
        for (std::size_t i = 0; i < src.size(); ++i)
            for (int e : b.total->out_edges(src[i])) {
                if (!b.vertical[static_cast<std::size_t>(e)])
                    continue;
                int j = b.fiber_pos[static_cast<std::size_t>(b.total->edge(e).dst)];
                int pi = tr.phi[i], pj = tr.phi[static_cast<std::size_t>(j)];
                if (pi < 0 || pj < 0 || static_cast<std::size_t>(pi) >= dst.size() || static_cast<std::size_t>(pj) >= dst.size())
                    continue;
                int f = b.total->find_edge(dst[static_cast<std::size_t>(pi)], dst[static_cast<std::size_t>(pj)]);
                if (f < 0)
                    continue;
                from.push_back(b.total->edge(e).label);
                to.push_back(b.total->edge(f).label);
            }
        tr.psi = solve_psi(m, from, to);
    }
    return b;
}

BundleMap product_bundle(const GkmGraph& base, const GkmGraph& fiber)
{
    if (base.varcount() != fiber.varcount())
        throw Error("base and fiber have different coordinate counts");
    int nb = base.vertex_count(), nf = fiber.vertex_count();
    auto total = std::make_shared<GkmGraph>(base.varcount());
    auto id = [nf](int b, int f) { return b * nf + f; };
    for (int b = 0; b < nb; ++b)
        for (int f = 0; f < nf; ++f)
            total->add_vertex("(" + base.name(b) + "," + fiber.name(f) + ")");
    // per vertex: base edges first, then fiber edges
    std::map<std::pair<int, int>, int> from_base, from_fiber;  // (total vertex, factor edge) -> total edge
    for (int b = 0; b < nb; ++b)
        for (int f = 0; f < nf; ++f) {
            for (int e : base.out_edges(b))
                from_base[{id(b, f), e}] = total->add_edge(id(b, f), id(base.edge(e).dst, f), base.edge(e).label);
            for (int e : fiber.out_edges(f))
                from_fiber[{id(b, f), e}] = total->add_edge(id(b, f), id(b, fiber.edge(e).dst), fiber.edge(e).label);
        }
    for (int b = 0; b < nb; ++b)
        for (int f = 0; f < nf; ++f) {
            int p = id(b, f);
            for (int e : base.out_edges(b)) {
                int b2 = base.edge(e).dst;
                std::vector<int> images;
                for (int e2 : base.out_edges(b))
                    images.push_back(from_base.at({id(b2, f), base.connect(e, e2)}));
                for (int e2 : fiber.out_edges(f))
                    images.push_back(from_fiber.at({id(b2, f), e2}));
                total->set_connection(from_base.at({p, e}), std::move(images));
            }
            for (int e : fiber.out_edges(f)) {
                int f2 = fiber.edge(e).dst;
                std::vector<int> images;
                for (int e2 : base.out_edges(b))
                    images.push_back(from_base.at({id(b, f2), e2}));
                for (int e2 : fiber.out_edges(f))
                    images.push_back(from_fiber.at({id(b, f2), fiber.connect(e, e2)}));
                total->set_connection(from_fiber.at({p, e}), std::move(images));
            }
        }
    std::vector<int> proj;
    for (int b = 0; b < nb; ++b)
        for (int f = 0; f < nf; ++f)
            proj.push_back(b);
    return make_bundle(total, std::make_shared<GkmGraph>(base), std::move(proj));
}

/******** verification ********/

Report verify_fibration(const BundleMap& b)
{
    Report rep;
    const GkmGraph& T = *b.total;
    const GkmGraph& B = *b.base;
    auto pi = [&](int t) { return b.projection[static_cast<std::size_t>(t)]; };

    std::string w;
    for (int e = 0; e < T.edge_count() && w.empty(); ++e) {
        int p = pi(T.edge(e).src), q = pi(T.edge(e).dst);
        if (p != q && B.find_edge(p, q) < 0)
            w = "edge " + T.edge_str(e) + " maps to non-edge " + B.name(p) + "->" + B.name(q);
    }
    rep.add("morphism", w.empty(), w);

    w.clear();
    std::vector<char> hit(static_cast<std::size_t>(B.vertex_count()), 0);
    for (int t = 0; t < T.vertex_count(); ++t)
        hit[static_cast<std::size_t>(pi(t))] = 1;
    for (int p = 0; p < B.vertex_count() && w.empty(); ++p)
        if (!hit[static_cast<std::size_t>(p)])
            w = "base vertex " + B.name(p) + " has empty fiber";
    rep.add("surjective", w.empty(), w);

    w.clear();
    for (int t = 0; t < T.vertex_count() && w.empty(); ++t) {
        int p = pi(t);
        std::map<int, int> count;
        for (int e : T.out_edges(t)) {
            int q = pi(T.edge(e).dst);
            if (q != p)
                ++count[q];
        }
        for (int e : B.out_edges(p)) {
            int q = B.edge(e).dst;
            auto it = count.find(q);
            if (it == count.end()) {
                w = "vertex " + T.name(t) + ": base edge " + B.edge_str(e) + " has no lift";
                break;
            }
            if (it->second != 1) {
                w = "vertex " + T.name(t) + ": base edge " + B.edge_str(e) + " has " + std::to_string(it->second) + " lifts";
                break;
            }
            count.erase(it);
        }
        if (w.empty() && !count.empty())
            w = "vertex " + T.name(t) + ": horizontal edge to " + B.name(count.begin()->first) + " is not over a base edge";
    }
    rep.add("dpi_bijective", w.empty(), w);
    return rep;
}

Report verify_fiber_bundle(const BundleMap& b)
{
    Report rep;
    const GkmGraph& T = *b.total;
    const GkmGraph& B = *b.base;
    auto pi = [&](int t) { return b.projection[static_cast<std::size_t>(t)]; };
    auto fib = [&](int p) -> const std::vector<int>& { return b.fibers[static_cast<std::size_t>(p)]; };
    auto vert = [&](int e) { return b.vertical[static_cast<std::size_t>(e)] != 0; };

    std::string w;
    for (int p = 0; p < B.vertex_count() && w.empty(); ++p) {
        try {
            auto v = check_subgraph(T, fib(p));
            if (!v)
                w = "fiber over " + B.name(p) + ": " + v.witness;
        } catch (const Error& ex) {
            w = "fiber over " + B.name(p) + ": " + ex.what();
        }
    }
    rep.add("fiber_subgraphs", w.empty(), w);

    // Phi_{p,q} is a graph isomorphism of fibers
    w.clear();
    for (int be = 0; be < B.edge_count() && w.empty(); ++be) {
        const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
        const auto& src = fib(B.edge(be).src);
        const auto& dst = fib(B.edge(be).dst);
        if (src.size() != dst.size() || tr.phi.size() != src.size()) {
            w = "base edge " + B.edge_str(be) + ": fibers have different sizes";
            break;
        }
        std::vector<char> hit(dst.size(), 0);
        for (int x : tr.phi) {
            if (x < 0 || static_cast<std::size_t>(x) >= dst.size() || hit[static_cast<std::size_t>(x)]) {
                w = "base edge " + B.edge_str(be) + ": Phi is not a bijection";
                break;
            }
            hit[static_cast<std::size_t>(x)] = 1;
        }
        if (!w.empty())
            break;
        int nsrc = 0, ndst = 0;
        for (std::size_t i = 0; i < src.size(); ++i)
            for (int e : T.out_edges(src[i])) {
                if (!vert(e))
                    continue;
                ++nsrc;
                int j = b.fiber_pos[static_cast<std::size_t>(T.edge(e).dst)];
                if (T.find_edge(dst[static_cast<std::size_t>(tr.phi[i])], dst[static_cast<std::size_t>(tr.phi[static_cast<std::size_t>(j)])]) < 0) {
                    w = "base edge " + B.edge_str(be) + ": Phi does not map fiber edge " + T.edge_str(e) + " to an edge";
                    break;
                }
            }
        for (int t : dst)
            for (int e : T.out_edges(t))
                ndst += vert(e);
        if (w.empty() && nsrc != ndst)
            w = "base edge " + B.edge_str(be) + ": fibers have different edge counts";
    }
    rep.add("transition_iso", w.empty(), w);

    w.clear();
    for (int be = 0; be < B.edge_count() && w.empty(); ++be)
        for (int t : fib(B.edge(be).src)) {
            int e = b.lift_edge(be, t);
            if (e < 0) {
                w = "base edge " + B.edge_str(be) + " has no lift at " + T.name(t);
                break;
            }
            if (T.edge(e).label != B.edge(be).label) {
                w = "lift " + T.edge_str(e) + " has label " + T.edge(e).label.str() + " != " + B.edge(be).label.str();
                break;
            }
        }
    rep.add("lifted_labels", w.empty(), w);

    w.clear();
    for (int e = 0; e < T.edge_count() && w.empty(); ++e)
        for (int e2 : T.out_edges(T.edge(e).src)) {
            int t = T.connect(e, e2);
            if (t < 0 || vert(t) != vert(e2)) {
                w = "connection along " + T.edge_str(e) + " changes the type of " + T.edge_str(e2);
                break;
            }
        }
    rep.add("connection_type", w.empty(), w);

    // horizontal connection covers the base connection
    w.clear();
    for (int e = 0; e < T.edge_count() && w.empty(); ++e) {
        if (vert(e))
            continue;
        int be = B.find_edge(pi(T.edge(e).src), pi(T.edge(e).dst));
        for (int e2 : T.out_edges(T.edge(e).src)) {
            if (vert(e2))
                continue;
            int t = T.connect(e, e2);
            int be2 = B.find_edge(pi(T.edge(e2).src), pi(T.edge(e2).dst));
            if (be < 0 || be2 < 0 || t < 0)
                continue;
            int want = B.connect(be, be2);
            int got = B.find_edge(pi(T.edge(t).src), pi(T.edge(t).dst));
            if (want != got) {
                w = "connection along " + T.edge_str(e) + " at " + T.edge_str(e2) + " does not cover the base connection";
                break;
            }
        }
    }
    rep.add("horizontal_connection", w.empty(), w);

    // connection along a lift sends the fiber edge (a,c) to (Phi a, Phi c)
    w.clear();
    for (int be = 0; be < B.edge_count() && w.empty(); ++be) {
        const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
        const auto& src = fib(B.edge(be).src);
        const auto& dst = fib(B.edge(be).dst);
        if (tr.phi.size() != src.size())
            continue;
        for (std::size_t i = 0; i < src.size() && w.empty(); ++i) {
            int lift = b.lift_edge(be, src[i]);
            if (lift < 0)
                continue;
            for (int e2 : T.out_edges(src[i])) {
                if (!vert(e2))
                    continue;
                int j = b.fiber_pos[static_cast<std::size_t>(T.edge(e2).dst)];
                int pi_ = tr.phi[i], pj = tr.phi[static_cast<std::size_t>(j)];
                if (pi_ < 0 || pj < 0)
                    continue;
                int want = T.find_edge(dst[static_cast<std::size_t>(pi_)], dst[static_cast<std::size_t>(pj)]);
                if (T.connect(lift, e2) != want) {
                    w = "connection along " + T.edge_str(lift) + " does not carry " + T.edge_str(e2) + " to its Phi-image";
                    break;
                }
            }
        }
    }
    rep.add("transition_connection", w.empty(), w);

    w.clear();
    for (int be = 0; be < B.edge_count() && w.empty(); ++be) {
        const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
        const auto& src = fib(B.edge(be).src);
        const auto& dst = fib(B.edge(be).dst);
        if (tr.phi.size() != src.size() || tr.psi.rows() != T.varcount() || tr.psi.det() == 0) {
            w = "base edge " + B.edge_str(be) + ": Psi is missing or singular";
            break;
        }
        for (std::size_t i = 0; i < src.size() && w.empty(); ++i)
            for (int e : T.out_edges(src[i])) {
                if (!vert(e))
                    continue;
                int j = b.fiber_pos[static_cast<std::size_t>(T.edge(e).dst)];
                int pi_ = tr.phi[i], pj = tr.phi[static_cast<std::size_t>(j)];
                if (pi_ < 0 || pj < 0)
                    continue;
                int f = T.find_edge(dst[static_cast<std::size_t>(pi_)], dst[static_cast<std::size_t>(pj)]);
                LinearForm img = tr.psi.apply(T.edge(e).label);
                if (f < 0 || img != T.edge(f).label) {
                    w = "base edge " + B.edge_str(be) + ": Psi(" + T.edge(e).label.str() + ") = " + img.str() + " is not the label of the image of " + T.edge_str(e);
                    break;
                }
            }
    }
    rep.add("psi_intertwines", w.empty(), w);

    // Psi(x) - x is a multiple of the base label on the fiber label span
    w.clear();
    for (int be = 0; be < B.edge_count() && w.empty(); ++be) {
        const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
        if (tr.psi.rows() != T.varcount())
            continue;
        for (int t : fib(B.edge(be).src)) {
            for (int e : T.out_edges(t)) {
                if (!vert(e))
                    continue;
                LinearForm d = tr.psi.apply(T.edge(e).label) - T.edge(e).label;
                if (!d.is_zero() && !d.proportional(B.edge(be).label)) {
                    w = "base edge " + B.edge_str(be) + ": Psi(x) - x = " + d.str() + " for x = " + T.edge(e).label.str();
                    break;
                }
            }
            if (!w.empty())
                break;
        }
    }
    rep.add("psi_shift", w.empty(), w);

    if (b.is_flag()) {
        w.clear();
        const CosetGraph& tc = *b.total_coset;
        for (int be = 0; be < B.edge_count() && w.empty(); ++be) {
            WeylElement s = b.rs->reflection(B.edge(be).label);
            const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
            const auto& src = fib(B.edge(be).src);
            const auto& dst = fib(B.edge(be).dst);
            for (std::size_t i = 0; i < src.size(); ++i) {
                int t = tc.vertex_of(s * tc.min_reps[static_cast<std::size_t>(src[i])]);
                if (tr.phi[i] < 0 || dst[static_cast<std::size_t>(tr.phi[i])] != t) {
                    w = "base edge " + B.edge_str(be) + ": Phi(" + T.name(src[i]) + ") differs from the reflection image " + T.name(t);
                    break;
                }
            }
        }
        rep.add("transition_formula", w.empty(), w);
    }
    return rep;
}

Report verify_bundle(const BundleMap& b)
{
    Report rep;
    rep.merge(verify_gkm(*b.total), "total.");
    rep.merge(verify_gkm(*b.base), "base.");
    Report f = verify_fibration(b);
    rep.merge(f, "fibration.");
    if (f.ok())
        rep.merge(verify_fiber_bundle(b), "bundle.");
    else
        rep.add("bundle.skipped", false, "fibration checks failed");
    return rep;
}

std::vector<int> lift_path(const BundleMap& b, const std::vector<int>& base_path, int start)
{
    if (base_path.empty())
        return {start};
    if (b.projection.at(static_cast<std::size_t>(start)) != base_path.front())
        throw Error("start vertex " + b.total->name(start) + " is not over " + b.base->name(base_path.front()));
    std::vector<int> out{start};
    for (std::size_t k = 1; k < base_path.size(); ++k) {
        int be = b.base->find_edge(base_path[k - 1], base_path[k]);
        if (be < 0)
            throw Error("base path step is not an edge");
        int e = b.lift_edge(be, out.back());
        if (e < 0)
            throw Error("base edge " + b.base->edge_str(be) + " does not lift at " + b.total->name(out.back()));
        out.push_back(b.total->edge(e).dst);
    }
    return out;
}

GkmIso fiber_iso(const BundleMap& b, int p, const WeylElement& w)
{
    if (!b.is_flag())
        throw Error("fiber isomorphisms need a flag bundle");
    const CosetGraph& fc = *b.fiber_coset;
    GkmIso iso;
    for (const auto& v : fc.min_reps) {
        int t = b.total_coset->vertex_of(w * v);
        if (b.projection[static_cast<std::size_t>(t)] != p)
            throw Error(w.str() + " does not represent base vertex " + b.base->name(p));
        iso.phi.push_back(b.fiber_pos[static_cast<std::size_t>(t)]);
    }
    iso.psi = w.matrix();
    return iso;
}

}  // namespace gkm
