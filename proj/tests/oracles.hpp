#pragma once

// Brute-force reference computations shared by the unit tests and the
// acceptance binary. Nothing here is used by the library.

#include "gkm/invbases.hpp"
#include "gkm/parabolic.hpp"
#include "gkm/schubert.hpp"

#include <map>
#include <optional>
#include <vector>

namespace oracle {

using namespace gkm;

inline void monomials_rec(int m, int d, int k, std::vector<unsigned>& e, std::vector<Monomial>& out)
{
    if (k == m - 1) {
        e[static_cast<std::size_t>(k)] = static_cast<unsigned>(d);
        out.emplace_back(e);
        return;
    }
    for (int a = d; a >= 0; --a) {
        e[static_cast<std::size_t>(k)] = static_cast<unsigned>(a);
        monomials_rec(m, d - a, k + 1, e, out);
    }
}

inline std::vector<Monomial> homogeneous_monomials(int m, int d)
{
    std::vector<Monomial> out;
    std::vector<unsigned> e(static_cast<std::size_t>(m), 0u);
    monomials_rec(m, d, 0, e, out);
    return out;
}

// Unique solution of A x = b, or nullopt if inconsistent or underdetermined.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                         int unknowns)
{
    int rows = static_cast<int>(a.size());
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < unknowns && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        Rational inv = 1 / a[r][c];
        for (int j = c; j < unknowns; ++j)
            a[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (int j = c; j < unknowns; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    if (r != unknowns)
        return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(unknowns));
    for (int i = 0; i < r; ++i)
        x[pivcol[i]] = b[i];
    return x;
}

// Solves for tau_u directly from degree, support and normalization plus the
// edge divisibility conditions. Returns nullopt if the solution is not unique.
inline std::optional<std::vector<Polynomial>> schubert_by_conditions(const WeylGroup& g, const GkmGraph& graph, int u)
{
    const RootSystem& rs = g.rs();
    int m = rs.varcount();
    int d = g.length(u);
    auto monos = homogeneous_monomials(m, d);
    int nm = static_cast<int>(monos.size());

    std::vector<int> slot(static_cast<std::size_t>(g.size()), -1);
    int unknowns = 0;
    for (int w = 0; w < g.size(); ++w)
        if (w != u && g.bruhat_leq(u, w))
            slot[w] = unknowns++ * nm;
    unknowns *= nm;
    Polynomial norm = schubert_normalization(rs, g.element(u));

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const Edge& ed = graph.edge(e);
        if (ed.src > ed.dst)
            continue;
        std::map<Monomial, std::vector<Rational>, GrlexGreater> eq;
        std::map<Monomial, Rational, GrlexGreater> constant;
        auto row = [&](const Monomial& mono) -> std::vector<Rational>& {
            auto it = eq.find(mono);
            if (it == eq.end())
                it = eq.emplace(mono, std::vector<Rational>(static_cast<std::size_t>(unknowns))).first;
            return it->second;
        };
        auto contribute = [&](int v, int sign) {
            if (v == u) {
                Polynomial r = divrem_linear(norm, ed.label).remainder;
                for (const auto& [mono, c] : r.terms()) {
                    row(mono);
                    constant[mono] += sign * c;
                }
                return;
            }
            if (slot[v] < 0)
                return;
            for (int j = 0; j < nm; ++j) {
                Polynomial r = divrem_linear(Polynomial::monomial(monos[j]), ed.label).remainder;
                for (const auto& [mono, c] : r.terms())
                    row(mono)[static_cast<std::size_t>(slot[v] + j)] += sign * c;
            }
        };
        contribute(ed.src, 1);
        contribute(ed.dst, -1);
        for (auto& [mono, r] : eq) {
            rows.push_back(r);
            rhs.push_back(-constant[mono]);
        }
    }
    std::optional<std::vector<Rational>> x;
    if (unknowns == 0) {
        for (const auto& b : rhs)
            if (b != 0)
                return std::nullopt;
        x = std::vector<Rational>{};
    } else {
        x = solve_unique(rows, rhs, unknowns);
    }
    if (!x)
        return std::nullopt;
    std::vector<Polynomial> values;
    for (int w = 0; w < g.size(); ++w) {
        if (w == u) {
            values.push_back(norm);
        } else if (slot[w] < 0) {
            values.emplace_back(m);
        } else {
            Polynomial p(m);
            for (int j = 0; j < nm; ++j)
                p.add_term(monos[j], (*x)[static_cast<std::size_t>(slot[w] + j)]);
            values.push_back(p);
        }
    }
    return values;
}

// Same bundle with the oriented edge e and its reverse removed from the total
// space. The connection of the copy is left empty.
inline BundleMap drop_edge_pair(const BundleMap& b, int e)
{
    const GkmGraph& t = *b.total;
    int r = t.reverse(e);
    auto g = std::make_shared<GkmGraph>(t.varcount());
    for (int v = 0; v < t.vertex_count(); ++v)
        g->add_vertex(t.name(v));
    for (int k = 0; k < t.edge_count(); ++k)
        if (k != e && k != r)
            g->add_edge(t.edge(k).src, t.edge(k).dst, t.edge(k).label);
    BundleMap out = b;
    out.total = g;
    out.refresh();
    return out;
}

// First horizontal edge of the total space.
inline int first_horizontal(const BundleMap& b)
{
    for (int e = 0; e < b.total->edge_count(); ++e)
        if (!b.vertical[static_cast<std::size_t>(e)])
            return e;
    return -1;
}

// Evaluates v.f for every group element by direct substitution.
inline std::vector<Polynomial> invariant_values(const WeylGroup& g, const Polynomial& f)
{
    std::vector<Polynomial> out;
    int m = f.varcount();
    for (const auto& w : g.elements()) {
        std::vector<LinearForm> images;
        for (int k = 0; k < m; ++k) {
            LinearForm l(m);
            l[w.perm(k)] = w.sign(k);
            images.push_back(l);
        }
        out.push_back(f.substitute_linear(images));
    }
    return out;
}

}  // namespace oracle
