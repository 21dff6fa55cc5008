#include "gkm/schubert.hpp"

#include "gkm/parabolic.hpp"

#include <json.hpp>

#include <sstream>

namespace gkm {

namespace {

void add_to(NilCoxElt& a, int w, const Polynomial& f)
{
    if (f.is_zero())
        return;
    auto it = a.c.find(w);
    if (it == a.c.end()) {
        a.c.emplace(w, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero())
        a.c.erase(it);
}

}  // namespace

NilCoxElt nilcox_one(const WeylGroup& g)
{
    return nilcox_basis(g, g.identity(), Polynomial(g.rs().varcount(), 1));
}

NilCoxElt nilcox_basis(const WeylGroup&, int w, const Polynomial& coeff)
{
    NilCoxElt a;
    add_to(a, w, coeff);
    return a;
}

NilCoxElt nilcox_add(const NilCoxElt& a, const NilCoxElt& b)
{
    NilCoxElt r = a;
    for (const auto& [w, f] : b.c)
        add_to(r, w, f);
    return r;
}

NilCoxElt nilcox_mul(const WeylGroup& g, const NilCoxElt& a, const NilCoxElt& b)
{
    NilCoxElt r;
    for (const auto& [w, f] : a.c)
        for (const auto& [v, h] : b.c) {
            int wv = g.mul(w, v);
            if (g.length(wv) == g.length(w) + g.length(v))
                add_to(r, wv, f * h);
        }
    return r;
}

NilCoxElt nilcox_h(const WeylGroup& g, int i, const LinearForm& x)
{
    NilCoxElt r = nilcox_one(g);
    add_to(r, g.simple(i), x.to_polynomial());
    return r;
}

NilCoxElt nilcox_act(const WeylGroup& g, int w, const NilCoxElt& a)
{
    NilCoxElt r;
    for (const auto& [v, f] : a.c)
        add_to(r, v, g.element(w).act(f));
    return r;
}

std::string nilcox_str(const WeylGroup& g, const NilCoxElt& a)
{
    if (a.c.empty())
        return "0";
    std::string s;
    for (const auto& [w, f] : a.c) {
        if (!s.empty())
            s += " + ";
        s += "(" + f.str() + ")*u[" + g.rs().word_label(g.element(w)) + "]";
    }
    return s;
}

NilCoxElt H_word(const WeylGroup& g, const std::vector<int>& word)
{
    const RootSystem& rs = g.rs();
    NilCoxElt r = nilcox_one(g);
    WeylElement prefix = WeylElement::identity(rs.varcount());
    for (int i : word) {
        r = nilcox_mul(g, r, nilcox_h(g, i, prefix.act(rs.simple_root(i))));
        prefix = prefix * rs.simple_reflection(i);
    }
    return r;
}

NilCoxElt H(const WeylGroup& g, int w)
{
    return H_word(g, g.word(w));
}

NilCoxElt H_inv(const WeylGroup& g, int w)
{
    const RootSystem& rs = g.rs();
    const auto& word = g.word(w);
    std::vector<LinearForm> args;
    WeylElement prefix = WeylElement::identity(rs.varcount());
    for (int i : word) {
        args.push_back(prefix.act(rs.simple_root(i)));
        prefix = prefix * rs.simple_reflection(i);
    }
    NilCoxElt r = nilcox_one(g);
    for (std::size_t k = word.size(); k-- > 0;)
        r = nilcox_mul(g, r, nilcox_h(g, word[k], -args[k]));
    return r;
}

GraphPtr flag_graph(const WeylGroup& g)
{
    auto cg = build_coset_graph(g.rs_ptr(), {}, all_simple(g.rs()));
    for (int i = 0; i < g.size(); ++i)
        if (cg.min_reps[static_cast<std::size_t>(i)] != g.element(i))
            throw Error("internal: flag graph order differs from group order");
    return cg.graph;
}

/******** table ********/

SchubertTable::SchubertTable(std::shared_ptr<const WeylGroup> g) : g_(std::move(g))
{
    const WeylGroup& G = *g_;
    const RootSystem& rs = G.rs();
    graph_ = flag_graph(G);
    int n = G.size();
    h_.resize(static_cast<std::size_t>(n));
    h_[0] = nilcox_one(G);
    // H_w = H_{w'} h_i(w' alpha_i) with w = w' s_i
    for (int w = 1; w < n; ++w) {
        const auto& word = G.word(w);
        int i = word.back();
        int wp = G.mul(w, G.simple(i));
        h_[static_cast<std::size_t>(w)] =
            nilcox_mul(G, h_[static_cast<std::size_t>(wp)], nilcox_h(G, i, G.element(wp).act(rs.simple_root(i))));
    }
    Polynomial zero(rs.varcount());
    std::vector<std::vector<Polynomial>> vals(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), zero));
    for (int w = 0; w < n; ++w)
        for (const auto& [u, f] : h_[static_cast<std::size_t>(w)].c)
            vals[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = f;
    for (int u = 0; u < n; ++u)
        tau_.emplace_back(graph_, std::move(vals[static_cast<std::size_t>(u)]));
}

Polynomial SchubertTable::value(int u, int w) const
{
    return tau_[static_cast<std::size_t>(u)][w];
}

Polynomial schubert_normalization(const RootSystem& rs, const WeylElement& u)
{
    Polynomial p(rs.varcount(), 1);
    WeylElement ui = u.inverse();
    for (const auto& beta : rs.positive_roots())
        if (!rs.is_positive(ui.act(beta)))
            p *= beta.to_polynomial();
    return p;
}

Report check_schubert_conditions(const SchubertTable& t)
{
    const WeylGroup& G = t.group();
    Report rep;
    std::string wd, ws, wn, wc;
    for (int u = 0; u < G.size(); ++u) {
        const CohClass& c = t.tau(u);
        std::string ul = G.rs().word_label(G.element(u));
        for (int v = 0; v < G.size(); ++v) {
            const Polynomial& f = c[v];
            std::string at = "tau_" + ul + "(" + G.rs().word_label(G.element(v)) + ")";
            if (!f.is_zero() && f.homogeneous_degree() != G.length(u) && wd.empty())
                wd = at + " = " + f.str() + " is not homogeneous of degree " + std::to_string(G.length(u));
            if (!f.is_zero() && !G.bruhat_leq(u, v) && ws.empty())
                ws = at + " = " + f.str() + " outside the Bruhat up-set";
        }
        Polynomial norm = schubert_normalization(G.rs(), G.element(u));
        if (c[u] != norm && wn.empty())
            wn = "tau_" + ul + "(" + ul + ") = " + c[u].str() + " != " + norm.str();
        if (wc.empty()) {
            auto cc = is_coh_class(c);
            if (!cc)
                wc = "tau_" + ul + ": " + cc.witness;
        }
    }
    rep.add("degree", wd.empty(), wd);
    rep.add("support", ws.empty(), ws);
    rep.add("normalization", wn.empty(), wn);
    rep.add("class", wc.empty(), wc);
    return rep;
}

Report key_identity_check(const WeylGroup& g, const std::vector<std::pair<int, int>>& pairs)
{
    Report rep;
    std::string w;
    std::vector<NilCoxElt> hs(static_cast<std::size_t>(g.size()));
    std::vector<char> have(static_cast<std::size_t>(g.size()), 0);
    auto get = [&](int x) -> const NilCoxElt& {
        if (!have[static_cast<std::size_t>(x)]) {
            hs[static_cast<std::size_t>(x)] = H(g, x);
            have[static_cast<std::size_t>(x)] = 1;
        }
        return hs[static_cast<std::size_t>(x)];
    };
    for (auto [a, b] : pairs) {
        NilCoxElt lhs = get(g.mul(a, b));
        NilCoxElt rhs = nilcox_mul(g, get(a), nilcox_act(g, a, get(b)));
        if (lhs != rhs) {
            w = "w = " + g.element(a).str() + ", v = " + g.element(b).str() + ": " + nilcox_str(g, lhs) + " != " + nilcox_str(g, rhs);
            break;
        }
    }
    rep.add("key_identity", w.empty(), w);
    return rep;
}

Report h_inverse_check(const WeylGroup& g)
{
    Report rep;
    std::string w;
    NilCoxElt one = nilcox_one(g);
    for (int x = 0; x < g.size(); ++x) {
        NilCoxElt p = nilcox_mul(g, H(g, x), H_inv(g, x));
        if (p != one) {
            w = "H_w H_w^-1 = " + nilcox_str(g, p) + " for w = " + g.element(x).str();
            break;
        }
    }
    rep.add("h_inverse", w.empty(), w);
    return rep;
}

Report h_word_independence_check(const WeylGroup& g)
{
    Report rep;
    std::string w;
    for (int x = 0; x < g.size(); ++x) {
        auto alt = g.rs().reduced_word_alt(g.element(x));
        if (alt == g.word(x))
            continue;
        if (H_word(g, alt) != H(g, x)) {
            w = "two reduced words of " + g.element(x).str() + " give different products";
            break;
        }
    }
    rep.add("h_word_independent", w.empty(), w);
    return rep;
}

/******** permuted and invariant classes ********/

CohClass permuted_class(const WeylGroup& g, const CohClass& f, int w)
{
    WeylElement wi = g.element(g.inv(w));
    std::vector<Polynomial> vals;
    for (int v = 0; v < g.size(); ++v)
        vals.push_back(wi.act(f[g.mul(w, v)]));
    return CohClass(f.graph_ptr(), std::move(vals));
}

CohClass symmetrize(const WeylGroup& g, const CohClass& f)
{
    int m = g.rs().varcount();
    std::vector<Polynomial> vals(static_cast<std::size_t>(g.size()), Polynomial(m));
    for (int w = 0; w < g.size(); ++w) {
        CohClass fw = permuted_class(g, f, w);
        for (int v = 0; v < g.size(); ++v)
            vals[static_cast<std::size_t>(v)] += fw[v];
    }
    Rational k(1, g.size());
    for (auto& p : vals)
        p *= k;
    return CohClass(f.graph_ptr(), std::move(vals));
}

CohClass invariant_class(const WeylGroup& g, GraphPtr graph, const Polynomial& f)
{
    std::vector<Polynomial> vals;
    for (int v = 0; v < g.size(); ++v)
        vals.push_back(g.element(v).act(f));
    return CohClass(std::move(graph), std::move(vals));
}

/******** transition matrices ********/

std::string TransitionMatrix::json(const WeylGroup& g) const
{
    nlohmann::ordered_json j;
    j["order"] = nlohmann::json::array();
    for (int x : order)
        j["order"].push_back(g.element(x).str());
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    for (std::size_t u = 0; u < entries.size(); ++u)
        for (std::size_t v = 0; v < entries[u].size(); ++v)
            if (!entries[u][v].is_zero())
                e[std::to_string(u) + "," + std::to_string(v)] = entries[u][v].str();
    j["entries"] = e;
    return j.dump(2);
}

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    int vc = n ? a[0][0].varcount() : 0;
    PolyMatrix r(n, std::vector<Polynomial>(m, Polynomial(vc)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero())
                    r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

bool is_identity_matrix(const PolyMatrix& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            const Polynomial& p = a[i][j];
            if (i == j ? !(p.is_constant() && p.constant_term() == 1) : !p.is_zero())
                return false;
        }
    return true;
}

std::pair<TransitionMatrix, TransitionMatrix> transition_matrices(const SchubertTable& t, int w)
{
    const WeylGroup& G = t.group();
    int n = G.size(), m = G.rs().varcount();
    TransitionMatrix a, b;
    for (int x = 0; x < n; ++x)
        a.order.push_back(x);
    b.order = a.order;
    a.entries.assign(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(m)));
    b.entries = a.entries;
    int wi = G.inv(w);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!G.weak_left_leq(v, u))
                continue;
            int vu = G.mul(v, G.inv(u));
            int uv = G.mul(u, G.inv(v));
            Polynomial av = t.value(vu, wi);
            if (G.length(vu) % 2)
                av = -av;
            a.entries[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = av;
            b.entries[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = t.value(uv, wi);
        }
    return {a, b};
}

TransitionMatrix symmetrized_matrix(const SchubertTable& t)
{
    const WeylGroup& G = t.group();
    TransitionMatrix s;
    for (int w = 0; w < G.size(); ++w) {
        auto ab = transition_matrices(t, w);
        if (w == 0) {
            s = ab.first;
            continue;
        }
        for (std::size_t u = 0; u < s.entries.size(); ++u)
            for (std::size_t v = 0; v < s.entries.size(); ++v)
                s.entries[u][v] += ab.first.entries[u][v];
    }
    Rational k(1, G.size());
    for (auto& row : s.entries)
        for (auto& p : row)
            p *= k;
    return s;
}

Verdict in_negative_root_cone(const RootSystem& rs, const Polynomial& p, int degree)
{
    if (p.is_zero())
        return {};
    if (p.homogeneous_degree() != degree)
        return {false, p.str() + " is not homogeneous of degree " + std::to_string(degree)};
    int m = rs.varcount(), n = rs.rank();
    // y = A x with y_i = -alpha_i, and y_{n+1} = x_{n+1} when m = n + 1
    std::vector<LinearForm> rows;
    for (int i = 1; i <= n; ++i)
        rows.push_back(-rs.simple_root(i));
    for (int j = m - 1; static_cast<int>(rows.size()) < m; --j)
        rows.push_back(LinearForm::basis(m, j));
    RationalMatrix a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a(i, j) = rows[static_cast<std::size_t>(i)][j];
    auto inv = a.inverse();
    if (!inv)
        throw Error("internal: simple roots do not extend to a basis");
    // x_j = sum_k inv(j,k) y_k
    std::vector<LinearForm> images;
    for (int j = 0; j < m; ++j) {
        LinearForm l(m);
        for (int k = 0; k < m; ++k)
            l[k] = (*inv)(j, k);
        images.push_back(l);
    }
    Polynomial q = p.substitute_linear(images);
    for (const auto& [mono, c] : q.terms()) {
        for (int k = n; k < m; ++k)
            if (mono.e[static_cast<std::size_t>(k)] != 0)
                return {false, p.str() + " involves a direction outside the root span"};
        if (c < 0 || c.get_den() != 1)
            return {false, p.str() + " has coefficient " + to_string(c) + " in the negative simple roots"};
    }
    return {};
}

Report check_symmetrized_matrix(const SchubertTable& t, const TransitionMatrix& a)
{
    const WeylGroup& G = t.group();
    Report rep;
    std::string wt, wd, wc;
    for (int u = 0; u < G.size(); ++u)
        for (int v = 0; v < G.size(); ++v) {
            const Polynomial& p = a.entries[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            std::string at = "a(" + G.element(u).str() + ";" + G.element(v).str() + ")";
            if (u == v) {
                if (!(p.is_constant() && p.constant_term() == 1) && wd.empty())
                    wd = at + " = " + p.str();
                continue;
            }
            if (!G.weak_left_leq(v, u)) {
                if (!p.is_zero() && wt.empty())
                    wt = at + " = " + p.str() + " off the weak order";
                continue;
            }
            if (wc.empty()) {
                auto vd = in_negative_root_cone(G.rs(), p * Rational(G.size()), G.length(u) - G.length(v));
                if (!vd)
                    wc = at + ": " + vd.witness;
            }
        }
    rep.add("lower_triangular", wt.empty(), wt);
    rep.add("unit_diagonal", wd.empty(), wd);
    rep.add("negative_root_positivity", wc.empty(), wc);
    return rep;
}

/******** divided differences ********/

Polynomial divided_difference(const RootSystem& rs, const Polynomial& f, int i)
{
    Polynomial d = f - rs.simple_reflection(i).act(f);
    auto qr = divrem_linear(d, rs.simple_root(i));
    if (!qr.remainder.is_zero())
        throw Error("internal: divided difference is not exact");
    return qr.quotient;
}

Polynomial divided_difference_word(const RootSystem& rs, const Polynomial& f, const std::vector<int>& word)
{
    Polynomial r = f;
    for (std::size_t k = word.size(); k-- > 0;)
        r = divided_difference(rs, r, word[k]);
    return r;
}

Polynomial divided_difference_w(const RootSystem& rs, const Polynomial& f, const WeylElement& w)
{
    return divided_difference_word(rs, f, rs.reduced_word(w));
}

std::vector<Polynomial> invariant_decomposition(const SchubertTable& t, const Polynomial& f)
{
    const WeylGroup& G = t.group();
    std::vector<Polynomial> out;
    for (int w = 0; w < G.size(); ++w) {
        Polynomial d = divided_difference_word(G.rs(), f, G.word(w));
        out.push_back(G.length(w) % 2 ? -d : d);
    }
    return out;
}

CohClass reassemble(const SchubertTable& t, const std::vector<Polynomial>& coeffs)
{
    int n = t.size();
    std::vector<Polynomial> vals(static_cast<std::size_t>(n), Polynomial(t.group().rs().varcount()));
    for (int w = 0; w < n; ++w) {
        const Polynomial& c = coeffs.at(static_cast<std::size_t>(w));
        if (c.is_zero())
            continue;
        for (int v = 0; v < n; ++v)
            if (!t.tau(w)[v].is_zero())
                vals[static_cast<std::size_t>(v)] += c * t.tau(w)[v];
    }
    return CohClass(t.graph(), std::move(vals));
}

std::string class_table_tsv(const WeylGroup& g, const std::vector<std::string>& names,
                            const std::vector<CohClass>& classes)
{
    std::ostringstream os;
    os << "word\toneline";
    for (const auto& n : names)
        os << '\t' << n;
    os << '\n';
    for (int v = 0; v < g.size(); ++v) {
        os << g.rs().word_label(g.element(v)) << '\t' << g.element(v).str();
        for (const auto& c : classes)
            os << '\t' << c[v].str();
        os << '\n';
    }
    return os.str();
}

}  // namespace gkm
