#pragma once

#include "gkm/gkm_graph.hpp"
#include "gkm/rootsys.hpp"

#include <map>

namespace gkm {

// Element of the nilCoxeter ring with polynomial coefficients, keyed by
// group index. Zero coefficients are never stored.
struct NilCoxElt {
    std::map<int, Polynomial> c;
    bool operator==(const NilCoxElt& o) const { return c == o.c; }
    bool operator!=(const NilCoxElt& o) const { return !(*this == o); }
};

NilCoxElt nilcox_one(const WeylGroup& g);
NilCoxElt nilcox_basis(const WeylGroup& g, int w, const Polynomial& coeff);
NilCoxElt nilcox_add(const NilCoxElt& a, const NilCoxElt& b);
NilCoxElt nilcox_mul(const WeylGroup& g, const NilCoxElt& a, const NilCoxElt& b);
// h_i(x) = 1 + x u_i
NilCoxElt nilcox_h(const WeylGroup& g, int i, const LinearForm& x);
// w acting on coefficients
NilCoxElt nilcox_act(const WeylGroup& g, int w, const NilCoxElt& a);
std::string nilcox_str(const WeylGroup& g, const NilCoxElt& a);

NilCoxElt H_word(const WeylGroup& g, const std::vector<int>& word);
NilCoxElt H(const WeylGroup& g, int w);
NilCoxElt H_inv(const WeylGroup& g, int w);

// The full flag graph Gamma(W); vertex i is group element i.
GraphPtr flag_graph(const WeylGroup& g);

class SchubertTable {
public:
    explicit SchubertTable(std::shared_ptr<const WeylGroup> g);

    const WeylGroup& group() const { return *g_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return g_; }
    const GraphPtr& graph() const { return graph_; }
    int size() const { return g_->size(); }

    const NilCoxElt& h(int w) const { return h_[static_cast<std::size_t>(w)]; }
    // tau_u(w): coefficient of u_u in H_w
    Polynomial value(int u, int w) const;
    const CohClass& tau(int u) const { return tau_[static_cast<std::size_t>(u)]; }

private:
    std::shared_ptr<const WeylGroup> g_;
    GraphPtr graph_;
    std::vector<NilCoxElt> h_;
    std::vector<CohClass> tau_;
};

// prod{beta in Delta+ : u^-1 beta < 0}
Polynomial schubert_normalization(const RootSystem& rs, const WeylElement& u);

Report check_schubert_conditions(const SchubertTable& t);
Report key_identity_check(const WeylGroup& g, const std::vector<std::pair<int, int>>& pairs);
Report h_inverse_check(const WeylGroup& g);
Report h_word_independence_check(const WeylGroup& g);

CohClass permuted_class(const WeylGroup& g, const CohClass& f, int w);
CohClass symmetrize(const WeylGroup& g, const CohClass& f);
CohClass invariant_class(const WeylGroup& g, GraphPtr graph, const Polynomial& f);

// Rows and columns follow the group's canonical order.
struct TransitionMatrix {
    std::vector<int> order;
    PolyMatrix entries;  // entries[u][v]
    std::string json(const WeylGroup& g) const;
};

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);
bool is_identity_matrix(const PolyMatrix& a);

// tau^w_u = sum_v a_{u,v} tau_v and tau_u = sum_v b_{u,v} tau^w_v.
std::pair<TransitionMatrix, TransitionMatrix> transition_matrices(const SchubertTable& t, int w);
TransitionMatrix symmetrized_matrix(const SchubertTable& t);
Report check_symmetrized_matrix(const SchubertTable& t, const TransitionMatrix& a);
// p has non-negative integer coefficients in -alpha_1..-alpha_n and is
// homogeneous of the given degree (or zero).
Verdict in_negative_root_cone(const RootSystem& rs, const Polynomial& p, int degree);

Polynomial divided_difference(const RootSystem& rs, const Polynomial& f, int i);
// Applies the letters right to left.
Polynomial divided_difference_word(const RootSystem& rs, const Polynomial& f, const std::vector<int>& word);
Polynomial divided_difference_w(const RootSystem& rs, const Polynomial& f, const WeylElement& w);

// Coefficients (-1)^l(w) d_w f, indexed by group element.
std::vector<Polynomial> invariant_decomposition(const SchubertTable& t, const Polynomial& f);
CohClass reassemble(const SchubertTable& t, const std::vector<Polynomial>& coeffs);

// Rows: group elements (word and one-line labels); columns: classes.
std::string class_table_tsv(const WeylGroup& g, const std::vector<std::string>& names,
                            const std::vector<CohClass>& classes);

}  // namespace gkm
