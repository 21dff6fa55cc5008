#include "gkm/invbases.hpp"

#include "gkm/serialize.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace gkm {

namespace {

void box_indices(const std::vector<int>& bounds, std::vector<MultiIndex>& out)
{
    MultiIndex cur(bounds.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == bounds.size()) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i <= bounds[k]; ++i) {
            cur[k] = i;
            rec(k + 1);
        }
    };
    rec(0);
}

std::vector<Monomial> monomials_of_degree(int m, int d)
{
    std::vector<Monomial> out;
    Monomial cur(m);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == m - 1) {
            cur.e[static_cast<std::size_t>(k)] = static_cast<unsigned>(left);
            out.push_back(cur);
            return;
        }
        for (int i = left; i >= 0; --i) {
            cur.e[static_cast<std::size_t>(k)] = static_cast<unsigned>(i);
            rec(k + 1, left - i);
        }
    };
    if (m > 0)
        rec(0, d);
    return out;
}

bool contains_index(const std::vector<MultiIndex>& set, const MultiIndex& I)
{
    return std::binary_search(set.begin(), set.end(), I);
}

void require_s_quotient(const BundleMap& b)
{
    if (!b.is_flag())
        throw Error("base classes need a flag bundle");
    std::vector<int> s;
    for (int i = 2; i <= b.rs->rank(); ++i)
        s.push_back(i);
    if (b.sigma2 != s)
        throw Error("base classes are defined for the quotient by S = {2..n}");
}

}  // namespace

std::vector<MultiIndex> index_set(RootKind kind, int n)
{
    std::vector<MultiIndex> out;
    std::vector<int> bounds;
    switch (kind) {
    case RootKind::A:
        if (n < 1 || n > 8)
            throw Error("type A index sets need 1 <= n <= 8");
        for (int k = 1; k <= n; ++k)
            bounds.push_back(n + 1 - k);
        box_indices(bounds, out);
        break;
    case RootKind::B:
    case RootKind::C:
        if (n < 1 || n > 7)
            throw Error("type B/C index sets need 1 <= n <= 7");
        for (int k = 1; k <= n; ++k)
            bounds.push_back(2 * (n - k) + 1);
        box_indices(bounds, out);
        break;
    case RootKind::D: {
        if (n < 2 || n > 8)
            throw Error("type D index sets need 2 <= n <= 8");
        if (n == 2)
            return {{0, 0}, {0, 1}, {1, 0}, {2, 0}};
        auto prev = index_set(RootKind::D, n - 1);
        std::set<MultiIndex> s;
        for (const auto& J : prev) {
            for (int i = 0; i <= 2 * n - 2; ++i) {
                MultiIndex I{i};
                I.insert(I.end(), J.begin(), J.end());
                s.insert(I);
            }
            MultiIndex I{0};
            for (int j : J)
                I.push_back(j + 1);
            s.insert(I);
        }
        out.assign(s.begin(), s.end());
        break;
    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> index_set_d3_explicit()
{
    std::vector<MultiIndex> out;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c) {
                if (a * b * c != 0)
                    continue;
                MultiIndex I{a, b, c};
                if ((a <= 4 && b <= 2 && c <= 1) || I == MultiIndex{0, 1, 2} || I == MultiIndex{0, 3, 1})
                    out.push_back(I);
            }
    return out;
}

Polynomial monomial_x(int varcount, const MultiIndex& I)
{
    if (static_cast<int>(I.size()) > varcount)
        throw Error("multi-index longer than the coordinate count");
    Monomial mono(varcount);
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 0)
            throw Error("negative exponent in multi-index");
        mono.e[k] = static_cast<unsigned>(I[k]);
    }
    return Polynomial::monomial(mono);
}

CohClass class_cI(const WeylGroup& g, GraphPtr graph, const MultiIndex& I)
{
    if (static_cast<int>(I.size()) != g.rs().rank())
        throw Error("multi-index length " + std::to_string(I.size()) + " != rank " + std::to_string(g.rs().rank()));
    return invariant_class(g, std::move(graph), monomial_x(g.rs().varcount(), I));
}

BasisFamily basis_family(const WeylGroup& g, GraphPtr graph)
{
    BasisFamily f;
    f.indices = index_set(g.rs().kind(), g.rs().rank());
    for (const auto& I : f.indices)
        f.classes.push_back(class_cI(g, graph, I));
    return f;
}

CohClass base_tau(const BundleMap& b)
{
    require_s_quotient(b);
    int m = b.rs->varcount();
    Polynomial x1 = Polynomial::variable(m, 0);
    std::vector<Polynomial> vals;
    for (const auto& w : b.base_coset->min_reps)
        vals.push_back(w.act(x1));
    return CohClass(b.base, std::move(vals));
}

CohClass base_eta(const BundleMap& b)
{
    require_s_quotient(b);
    if (b.rs->kind() != RootKind::D)
        throw Error("eta is defined in type D only");
    int m = b.rs->varcount();
    Polynomial prod(m, 1);
    for (int j = 0; j < m; ++j)
        prod *= Polynomial::variable(m, j);
    CohClass tau = base_tau(b);
    std::vector<Polynomial> vals;
    for (int p = 0; p < tau.size(); ++p)
        vals.push_back(prod.divide_or_throw(tau[p]));
    return CohClass(b.base, std::move(vals));
}

CohClass lift_to_total(const BundleMap& b, const CohClass& base_class)
{
    std::vector<Polynomial> vals;
    for (int t = 0; t < b.total->vertex_count(); ++t)
        vals.push_back(base_class[b.projection[static_cast<std::size_t>(t)]]);
    return CohClass(b.total, std::move(vals));
}

CohClass extend_invariant(const BundleMap& b, const HolonomyGroup& hol, const CohClass& f)
{
    if (!same_graph(f.graph(), *hol.fiber))
        throw Error("fiber class is not defined on the holonomy fiber");
    for (const auto& a : hol.elements)
        for (int q = 0; q < f.size(); ++q)
            if (f[a.phi[static_cast<std::size_t>(q)]] != a.psi.apply(f[q]))
                throw Error("fiber class is not holonomy invariant: automorphism with Psi = " + a.psi.str() +
                            " moves the value at " + f.graph().name(q));

    int nb = b.base->vertex_count();
    int p0 = hol.base_point;
    std::vector<std::vector<Polynomial>> fp(static_cast<std::size_t>(nb));
    auto& f0 = fp[static_cast<std::size_t>(p0)];
    f0.assign(b.fibers[static_cast<std::size_t>(p0)].size(), Polynomial(b.total->varcount()));
    if (b.is_flag()) {
        GkmIso iso = fiber_iso(b, p0, b.base_coset->min_reps[static_cast<std::size_t>(p0)]);
        for (int i = 0; i < f.size(); ++i)
            f0[static_cast<std::size_t>(iso.phi[static_cast<std::size_t>(i)])] = iso.psi.apply(f[i]);
    } else {
        for (int i = 0; i < f.size(); ++i)
            f0[static_cast<std::size_t>(i)] = f[i];
    }
    std::vector<char> done(static_cast<std::size_t>(nb), 0);
    done[static_cast<std::size_t>(p0)] = 1;
    std::deque<int> queue{p0};
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int be : b.base->out_edges(p)) {
            int q = b.base->edge(be).dst;
            if (done[static_cast<std::size_t>(q)])
                continue;
            const Transition& tr = b.transitions[static_cast<std::size_t>(be)];
            auto& fq = fp[static_cast<std::size_t>(q)];
            fq.assign(b.fibers[static_cast<std::size_t>(q)].size(), Polynomial(b.total->varcount()));
            const auto& fpp = fp[static_cast<std::size_t>(p)];
            for (std::size_t i = 0; i < fpp.size(); ++i)
                fq[static_cast<std::size_t>(tr.phi[i])] = tr.psi.apply(fpp[i]);
            done[static_cast<std::size_t>(q)] = 1;
            queue.push_back(q);
        }
    }
    std::vector<Polynomial> vals;
    for (int t = 0; t < b.total->vertex_count(); ++t) {
        int p = b.projection[static_cast<std::size_t>(t)];
        if (!done[static_cast<std::size_t>(p)])
            throw Error("base graph is disconnected");
        vals.push_back(fp[static_cast<std::size_t>(p)][static_cast<std::size_t>(b.fiber_pos[static_cast<std::size_t>(t)])]);
    }
    return CohClass(b.total, std::move(vals));
}

CohClass extend_invariant(const BundleMap& b, const CohClass& f, int base_point)
{
    HolonomyOptions opt;
    opt.base_point = base_point;
    return extend_invariant(b, holonomy(b, opt), f);
}

std::vector<CohClass> iterated_classes(const BundleMap& b, const std::vector<MultiIndex>& indices)
{
    require_s_quotient(b);
    if (!b.sigma1.empty())
        throw Error("the iteration needs the full flag graph as total space");
    const RootSystem& rs = *b.rs;
    int n = rs.rank(), m = rs.varcount();
    RootKind kind = rs.kind();
    HolonomyGroup hol = holonomy(b);
    const CosetGraph& fc = *b.fiber_coset;

    std::vector<MultiIndex> fiber_set;
    if (n >= 2)
        fiber_set = kind == RootKind::D ? index_set(RootKind::D, n - 1) : index_set(kind, n - 1);
    else
        fiber_set = {MultiIndex{}};

    std::map<MultiIndex, CohClass> ext;
    auto extended = [&](const MultiIndex& J) -> const CohClass& {
        auto it = ext.find(J);
        if (it != ext.end())
            return it->second;
        MultiIndex I0{0};
        I0.insert(I0.end(), J.begin(), J.end());
        Polynomial xj = monomial_x(m, I0);
        std::vector<Polynomial> vals;
        for (const auto& v : fc.min_reps)
            vals.push_back(v.act(xj));
        CohClass f(fc.graph, std::move(vals));
        return ext.emplace(J, extend_invariant(b, hol, f)).first->second;
    };

    CohClass tau = lift_to_total(b, base_tau(b));
    std::optional<CohClass> eta;
    if (kind == RootKind::D)
        eta = lift_to_total(b, base_eta(b));
    int max_k = kind == RootKind::A ? n : 2 * n - (kind == RootKind::D ? 2 : 1);

    std::vector<CohClass> out;
    for (const auto& I : indices) {
        if (static_cast<int>(I.size()) != n)
            throw Error("multi-index has the wrong length");
        int k = I[0];
        MultiIndex J(I.begin() + 1, I.end());
        if (k <= max_k && contains_index(fiber_set, J)) {
            CohClass c = extended(J);
            for (int r = 0; r < k; ++r)
                c = class_mul(tau, c);
            out.push_back(c);
            continue;
        }
        if (kind == RootKind::D && k == 0) {
            MultiIndex Jm;
            for (int j : J)
                Jm.push_back(j - 1);
            if (contains_index(fiber_set, Jm)) {
                out.push_back(class_mul(*eta, extended(Jm)));
                continue;
            }
        }
        throw Error("index is not produced by the iteration");
    }
    return out;
}

Expression express_in_basis(const BundleMap& b, const std::vector<CohClass>& globals, const CohClass& target)
{
    Expression ex;
    int nb = b.base->vertex_count();
    int k = static_cast<int>(globals.size());
    int m = b.total->varcount();
    std::vector<std::vector<Polynomial>> beta(static_cast<std::size_t>(k), std::vector<Polynomial>(static_cast<std::size_t>(nb), Polynomial(m)));
    for (int p = 0; p < nb; ++p) {
        const auto& fib = b.fibers[static_cast<std::size_t>(p)];
        if (static_cast<int>(fib.size()) != k)
            throw Error("fiber over " + b.base->name(p) + " has " + std::to_string(fib.size()) + " vertices but " + std::to_string(k) + " classes were given");
        PolyMatrix a(fib.size(), std::vector<Polynomial>(static_cast<std::size_t>(k), Polynomial(m)));
        std::vector<Polynomial> rhs;
        for (std::size_t q = 0; q < fib.size(); ++q) {
            for (int j = 0; j < k; ++j)
                a[q][static_cast<std::size_t>(j)] = globals[static_cast<std::size_t>(j)][fib[q]];
            rhs.push_back(target[fib[q]]);
        }
        std::optional<std::vector<Polynomial>> sol;
        try {
            sol = cramer_solve(a, rhs);
        } catch (const Error&) {
            throw Error("restrictions to the fiber over " + b.base->name(p) + " are not independent");
        }
        if (!sol)
            throw Error("non-polynomial coefficient over " + b.base->name(p) + ": restrictions are not a fiber basis");
        for (int j = 0; j < k; ++j)
            beta[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = (*sol)[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < k; ++j)
        ex.beta.emplace_back(b.base, std::move(beta[static_cast<std::size_t>(j)]));

    std::string w;
    for (int j = 0; j < k && w.empty(); ++j) {
        auto cc = is_coh_class(ex.beta[static_cast<std::size_t>(j)]);
        if (!cc)
            w = "beta_" + std::to_string(j + 1) + ": " + cc.witness;
    }
    ex.report.add("beta_are_classes", w.empty(), w);
    w.clear();
    for (int t = 0; t < b.total->vertex_count() && w.empty(); ++t) {
        Polynomial s(m);
        int p = b.projection[static_cast<std::size_t>(t)];
        for (int j = 0; j < k; ++j)
            s += ex.beta[static_cast<std::size_t>(j)][p] * globals[static_cast<std::size_t>(j)][t];
        if (s != target[t])
            w = "reassembly differs at " + b.total->name(t);
    }
    ex.report.add("reassembly", w.empty(), w);
    return ex;
}

std::string BasisVerdict::json() const
{
    Json j;
    j["independent"] = independent;
    j["spanning"] = spanning;
    j["witness"] = witness;
    return j.dump();
}

std::optional<std::vector<Polynomial>> schubert_coordinates(const SchubertTable& t, const CohClass& c)
{
    int n = t.size();
    std::vector<Polynomial> res = c.values();
    std::vector<Polynomial> coeff(static_cast<std::size_t>(n), Polynomial(t.group().rs().varcount()));
    for (int w = 0; w < n; ++w) {
        const Polynomial& r = res[static_cast<std::size_t>(w)];
        if (r.is_zero())
            continue;
        auto q = r.exact_divide(t.tau(w)[w]);
        if (!q)
            return std::nullopt;
        for (int v = 0; v < n; ++v)
            if (!t.tau(w)[v].is_zero())
                res[static_cast<std::size_t>(v)] -= *q * t.tau(w)[v];
        coeff[static_cast<std::size_t>(w)] = *q;
    }
    return coeff;
}

std::vector<Rational> random_point(int varcount, Rng& rng)
{
    std::vector<long> pool;
    for (long v = 1; v <= 4L * varcount + 4; ++v)
        pool.push_back(v);
    std::vector<Rational> pt;
    for (int j = 0; j < varcount; ++j) {
        auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1));
        long v = pool[k];
        pool.erase(pool.begin() + static_cast<long>(k));
        pt.emplace_back(rng.coin() ? -v : v);
    }
    return pt;
}

BasisVerdict verify_basis(const SchubertTable& t, const BasisFamily& family, std::uint64_t seed)
{
    BasisVerdict v;
    int n = t.size();
    const auto& cls = family.classes;
    if (static_cast<int>(cls.size()) != n) {
        v.witness = "family has " + std::to_string(cls.size()) + " classes but |W| = " + std::to_string(n);
        return v;
    }
    auto label = [&](std::size_t i) {
        std::string s = "c[";
        if (i < family.indices.size())
            for (std::size_t k = 0; k < family.indices[i].size(); ++k)
                s += (k ? "," : "") + std::to_string(family.indices[i][k]);
        return s + "]";
    };
    for (std::size_t i = 0; i < cls.size(); ++i) {
        auto cc = is_coh_class(cls[i]);
        if (!cc) {
            v.witness = label(i) + " is not a class: " + cc.witness;
            return v;
        }
    }

    Rng rng(seed);
    int m = t.group().rs().varcount();
    for (int attempt = 0; attempt < 5 && !v.independent; ++attempt) {
        auto pt = random_point(m, rng);
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < n; ++i)
                a[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)] = cls[static_cast<std::size_t>(i)][w].eval(pt);
        v.independent = rational_det(std::move(a)) != 0;
    }
    if (!v.independent && n <= 8) {
        PolyMatrix a(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < n; ++i)
                a[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)] = cls[static_cast<std::size_t>(i)][w];
        v.independent = !bareiss_det(std::move(a)).is_zero();
    }
    if (!v.independent)
        v.witness = "evaluation matrix [c_I(w)] is singular";

    // c_I = sum_w C[I][w] tau_w; spanning iff C is invertible over the polynomials
    PolyMatrix C;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        auto co = schubert_coordinates(t, cls[i]);
        if (!co) {
            if (v.witness.empty())
                v.witness = label(i) + " has no polynomial Schubert expansion";
            return v;
        }
        C.push_back(std::move(*co));
    }
    auto inv = unit_pivot_inverse(C);
    PolyMatrix B;
    if (inv.ok) {
        B = std::move(inv.inverse);
    } else {
        PolyMatrix ct(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                ct[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int u = 0; u < n; ++u) {
            std::vector<Polynomial> e(static_cast<std::size_t>(n), Polynomial(m));
            e[static_cast<std::size_t>(u)] = Polynomial(m, 1);
            std::optional<std::vector<Polynomial>> sol;
            try {
                sol = cramer_solve(ct, e);
            } catch (const Error&) {
                sol.reset();
            }
            if (!sol) {
                if (v.witness.empty())
                    v.witness = "tau_" + t.group().rs().word_label(t.group().element(u)) + " is not a polynomial combination";
                return v;
            }
            B.push_back(std::move(*sol));
        }
    }
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            Polynomial s(m);
            for (int i = 0; i < n; ++i)
                if (!B[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)].is_zero())
                    s += B[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] * cls[static_cast<std::size_t>(i)][w];
            if (s != t.tau(u)[w]) {
                if (v.witness.empty())
                    v.witness = "reassembly of tau_" + t.group().rs().word_label(t.group().element(u)) + " fails at " + t.group().element(w).str();
                return v;
            }
        }
    v.spanning = true;
    return v;
}

std::vector<Polynomial> invariant_generators(const RootSystem& rs)
{
    int m = rs.varcount(), n = rs.rank();
    std::vector<Polynomial> vars;
    for (int j = 0; j < m; ++j) {
        Polynomial x = Polynomial::variable(m, j);
        vars.push_back(rs.kind() == RootKind::A ? x : x * x);
    }
    // elementary symmetric polynomials via prod (1 + t y_j)
    std::vector<Polynomial> e(static_cast<std::size_t>(m) + 1, Polynomial(m));
    e[0] = Polynomial(m, 1);
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * vars[static_cast<std::size_t>(j)];
    std::vector<Polynomial> gens(e.begin() + 1, e.end());
    if (rs.kind() == RootKind::D) {
        Polynomial prod(m, 1);
        for (int j = 0; j < m; ++j)
            prod *= Polynomial::variable(m, j);
        gens[static_cast<std::size_t>(n - 1)] = prod;
    }
    return gens;
}

Report check_bases_over_invariants(const RootSystem& rs, const std::vector<MultiIndex>& indices, int max_degree)
{
    Report rep;
    int m = rs.varcount();
    auto gens = invariant_generators(rs);
    std::vector<int> gdeg;
    for (const auto& g : gens)
        gdeg.push_back(*g.homogeneous_degree());

    // products of generators by weighted degree
    std::vector<std::vector<Polynomial>> inv(static_cast<std::size_t>(max_degree) + 1);
    std::function<void(std::size_t, int, const Polynomial&)> rec = [&](std::size_t j, int d, const Polynomial& acc) {
        if (j == gens.size()) {
            inv[static_cast<std::size_t>(d)].push_back(acc);
            return;
        }
        Polynomial p = acc;
        for (int dd = d; dd <= max_degree; dd += gdeg[j]) {
            rec(j + 1, dd, p);
            p *= gens[j];
        }
    };
    rec(0, 0, Polynomial(m, 1));

    for (int d = 0; d <= max_degree; ++d) {
        auto monos = monomials_of_degree(m, d);
        std::map<std::vector<unsigned>, std::size_t> col;
        for (std::size_t k = 0; k < monos.size(); ++k)
            col.emplace(monos[k].e, k);
        std::vector<std::vector<Rational>> rows;
        for (const auto& I : indices) {
            int deg = 0;
            for (int i : I)
                deg += i;
            if (deg > d)
                continue;
            Polynomial xi = monomial_x(m, I);
            for (const auto& g : inv[static_cast<std::size_t>(d - deg)]) {
                Polynomial p = g * xi;
                std::vector<Rational> row(monos.size());
                for (const auto& [mono, c] : p.terms())
                    row[col.at(mono.e)] = c;
                rows.push_back(std::move(row));
            }
        }
        std::size_t count = rows.size();
        int rank = rational_rank(std::move(rows));
        bool ok = count == monos.size() && rank == static_cast<int>(monos.size());
        rep.add("degree_" + std::to_string(d), ok,
                "dimension " + std::to_string(monos.size()) + ", products " + std::to_string(count) + ", rank " + std::to_string(rank));
    }
    return rep;
}

Polynomial random_polynomial(int varcount, int degree, Rng& rng, bool homogeneous)
{
    Polynomial p(varcount);
    for (int d = homogeneous ? degree : 0; d <= degree; ++d)
        for (const auto& mono : monomials_of_degree(varcount, d))
            p.add_term(mono, Rational(rng.uniform(-3, 3)));
    if (p.is_zero())
        p = Polynomial::variable(varcount, 0).pow(static_cast<unsigned>(degree));
    return p;
}

CohClass random_class(const SchubertTable& t, int max_degree, Rng& rng)
{
    int n = t.size(), m = t.group().rs().varcount();
    std::vector<Polynomial> vals(static_cast<std::size_t>(n), Polynomial(m));
    for (int u = 0; u < n; ++u) {
        int room = max_degree - t.group().length(u);
        if (room < 0)
            continue;
        Polynomial c = random_polynomial(m, room, rng, false);
        for (int v = 0; v < n; ++v)
            if (!t.tau(u)[v].is_zero())
                vals[static_cast<std::size_t>(v)] += c * t.tau(u)[v];
    }
    return CohClass(t.graph(), std::move(vals));
}

}  // namespace gkm
