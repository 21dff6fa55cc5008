#include "gkm/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gkm {

FiberAut compose(const FiberAut& second, const FiberAut& first)
{
    FiberAut r;
    r.phi.resize(first.phi.size());
    for (std::size_t i = 0; i < first.phi.size(); ++i)
        r.phi[i] = second.phi.at(static_cast<std::size_t>(first.phi[i]));
    r.psi = second.psi * first.psi;
    return r;
}

FiberAut inverse(const FiberAut& a)
{
    FiberAut r;
    r.phi.assign(a.phi.size(), -1);
    for (std::size_t i = 0; i < a.phi.size(); ++i)
        r.phi.at(static_cast<std::size_t>(a.phi[i])) = static_cast<int>(i);
    auto inv = a.psi.inverse();
    if (!inv)
        throw Error("fiber automorphism with singular linear part");
    r.psi = *inv;
    return r;
}

FiberAut identity_aut(int vertices, int varcount)
{
    FiberAut r;
    for (int i = 0; i < vertices; ++i)
        r.phi.push_back(i);
    r.psi = RationalMatrix::identity(varcount);
    return r;
}

bool HolonomyGroup::contains(const FiberAut& a) const
{
    return std::binary_search(elements.begin(), elements.end(), a);
}

namespace {

// Transport between the actual fibers over the ends of a path.
FiberAut raw_transport(const BundleMap& b, const std::vector<int>& path)
{
    if (path.empty())
        throw Error("empty path");
    int n0 = static_cast<int>(b.fibers.at(static_cast<std::size_t>(path.front())).size());
    FiberAut r = identity_aut(n0, b.total->varcount());
    for (std::size_t k = 1; k < path.size(); ++k) {
        const Transition& tr = b.transition(path[k - 1], path[k]);
        for (auto& x : r.phi)
            x = tr.phi.at(static_cast<std::size_t>(x));
        r.psi = tr.psi * r.psi;
    }
    return r;
}

FiberAut iso_aut(const GkmIso& iso) { return {iso.phi, iso.psi}; }

FiberAut base_iso(const BundleMap& b, int p)
{
    return iso_aut(fiber_iso(b, p, b.base_coset->min_reps[static_cast<std::size_t>(p)]));
}

}  // namespace

FiberAut transport(const BundleMap& b, const std::vector<int>& path)
{
    FiberAut raw = raw_transport(b, path);
    if (!b.is_flag())
        return raw;
    return compose(inverse(base_iso(b, path.back())), compose(raw, base_iso(b, path.front())));
}

std::vector<FiberAut> upsilon(const BundleMap& b)
{
    if (!b.is_flag())
        throw Error("the group Upsilon is defined for flag bundles only");
    const CosetGraph& fc = *b.fiber_coset;
    std::vector<FiberAut> out;
    for (const auto& w : b.rs->parabolic_elements(b.sigma2)) {
        FiberAut a;
        for (const auto& v : fc.min_reps)
            a.phi.push_back(fc.vertex_of(w * v));
        a.psi = w.matrix();
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FiberAut> group_closure(const std::vector<FiberAut>& gens, const FiberAut& identity, std::size_t cap)
{
    std::set<FiberAut> seen{identity};
    std::deque<FiberAut> queue{identity};
    while (!queue.empty()) {
        FiberAut a = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            FiberAut c = compose(g, a);
            if (seen.insert(c).second) {
                if (seen.size() > cap)
                    throw CapExceeded("holonomy group exceeds " + std::to_string(cap) + " elements");
                queue.push_back(std::move(c));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

PushLeft push_left(const RootSystem& rs, const WeylElement& w, const std::vector<int>& sigma2)
{
    PushLeft r{WeylElement::identity(w.size()), {}};
    for (int i : rs.reduced_word(w)) {
        if (std::find(sigma2.begin(), sigma2.end(), i) == sigma2.end()) {
            r.betas.push_back(rs.simple_root(i));
            continue;
        }
        WeylElement s = rs.simple_reflection(i);
        for (auto& beta : r.betas) {
            beta = s.act(beta);
            if (!rs.is_positive(beta))
                beta = -beta;
        }
        r.u = r.u * s;
    }
    return r;
}

namespace {

// Closed walks from p of length <= L, deduplicated by (vertex, raw transport).
std::vector<HolonomyLoop> walk_loops(const BundleMap& b, int p, int max_len)
{
    using State = std::pair<int, FiberAut>;
    std::map<State, std::vector<int>> seen;
    int n0 = static_cast<int>(b.fibers[static_cast<std::size_t>(p)].size());
    State s0{p, identity_aut(n0, b.total->varcount())};
    seen.emplace(s0, std::vector<int>{p});
    std::vector<State> frontier{s0};
    std::vector<HolonomyLoop> loops;
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<State> next;
        for (const auto& st : frontier) {
            const auto path = seen.at(st);
            for (int be : b.base->out_edges(st.first)) {
                int q = b.base->edge(be).dst;
                const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
                FiberAut a = st.second;
                for (auto& x : a.phi)
                    x = tr.phi.at(static_cast<std::size_t>(x));
                a.psi = tr.psi * a.psi;
                State ns{q, std::move(a)};
                if (seen.count(ns))
                    continue;
                auto np = path;
                np.push_back(q);
                if (q == p)
                    loops.push_back({np, "walk", ns.second});
                seen.emplace(ns, std::move(np));
                next.push_back(std::move(ns));
            }
        }
        frontier = std::move(next);
    }
    return loops;
}

}  // namespace

HolonomyGroup holonomy(const BundleMap& b, const HolonomyOptions& opt)
{
    HolonomyGroup h;
    const GkmGraph& B = *b.base;
    int m = b.total->varcount();
    if (b.is_flag())
        h.base_point = opt.base_point >= 0 ? opt.base_point : b.base_coset->vertex_of(WeylElement::identity(b.rs->varcount()));
    else
        h.base_point = opt.base_point >= 0 ? opt.base_point : 0;
    int p = h.base_point;
    if (p < 0 || p >= B.vertex_count())
        throw Error("base point out of range");

    FiberAut id;
    if (b.is_flag()) {
        h.fiber = b.fiber_coset->graph;
        id = identity_aut(b.fiber_coset->graph->vertex_count(), m);
        const RootSystem& rs = *b.rs;
        WeylElement g = b.base_coset->min_reps[static_cast<std::size_t>(p)];
        auto in2 = rs.closure(b.sigma2).roots;
        auto outside = [&](const LinearForm& beta) {
            int k = rs.positive_index(beta);
            return k >= 0 && std::find(in2.begin(), in2.end(), k) == in2.end();
        };
        auto elems = rs.all_elements();
        std::string bad;
        for (int i : b.sigma2) {
            const LinearForm& ai = rs.simple_root(i);
            const WeylElement* wp = nullptr;
            for (const auto& w : elems)
                if (outside(w.act(ai))) {
                    wp = &w;
                    break;
                }
            if (!wp) {
                h.report.add("constructive_root_" + std::to_string(i), false,
                             "no w with w*alpha_" + std::to_string(i) + " a positive root outside <sigma2>");
                continue;
            }
            PushLeft pl = push_left(rs, *wp, b.sigma2);
            LinearForm gamma = pl.u.inverse().act(wp->act(ai));
            WeylElement x = WeylElement::identity(g.size());
            std::vector<int> path{b.base_coset->vertex_of(g * x)};
            for (std::size_t k = pl.betas.size(); k-- > 0;) {
                x = x * rs.reflection(pl.betas[k]);
                path.push_back(b.base_coset->vertex_of(g * x));
            }
            x = x * rs.reflection(gamma);
            path.push_back(b.base_coset->vertex_of(g * x));
            for (const auto& beta : pl.betas) {
                x = x * rs.reflection(beta);
                path.push_back(b.base_coset->vertex_of(g * x));
            }
            if (path.back() != p)
                bad = "loop for alpha_" + std::to_string(i) + " does not close";
            else
                h.generators.push_back({path, "root " + std::to_string(i), transport(b, path)});
        }
        h.report.add("loops_closed", bad.empty(), bad);

        bool complete = true;
        for (int q = 0; q < B.vertex_count(); ++q)
            complete = complete && B.degree(q) == B.vertex_count() - 1;
        if (complete)
            for (int q = 0; q < B.vertex_count(); ++q)
                for (int r = q + 1; r < B.vertex_count(); ++r)
                    if (q != p && r != p) {
                        std::vector<int> path{p, q, r, p};
                        h.generators.push_back({path, "triangle", transport(b, path)});
                    }

        if (opt.exhaustive && B.vertex_count() <= opt.max_base_vertices) {
            FiberAut phi_p = base_iso(b, p);
            FiberAut phi_p_inv = inverse(phi_p);
            for (auto& loop : walk_loops(b, p, opt.max_cycle_length)) {
                loop.rho = compose(phi_p_inv, compose(loop.rho, phi_p));
                h.generators.push_back(std::move(loop));
            }
        }
    } else {
        Subgraph f = b.fiber(p);
        h.fiber = f.graph;
        id = identity_aut(f.graph->vertex_count(), m);
        h.generators = walk_loops(b, p, opt.max_cycle_length);
    }

    std::string w;
    for (const auto& loop : h.generators) {
        auto v = verify_iso(GkmIso{loop.rho.phi, loop.rho.psi}, *h.fiber, *h.fiber);
        if (!v) {
            w = loop.origin + " loop: " + v.witness;
            break;
        }
    }
    h.report.add("generators_are_automorphisms", w.empty(), w);

    std::vector<FiberAut> gens;
    for (const auto& l : h.generators)
        gens.push_back(l.rho);
    h.elements = group_closure(gens, id, opt.max_group);

    if (b.is_flag()) {
        auto ups = upsilon(b);
        w.clear();
        if (ups != h.elements) {
            w = "holonomy has " + std::to_string(h.elements.size()) + " elements, Upsilon(W2) has " + std::to_string(ups.size());
            for (const auto& a : ups)
                if (!h.contains(a)) {
                    w += "; missing element with Psi = " + a.psi.str();
                    break;
                }
        }
        h.report.add("equals_upsilon", w.empty(), w);
    }
    return h;
}

}  // namespace gkm
